//! `hecke`: Hecke insertion, growth diagrams and their checks from the command line.

mod verify;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::growth::shrink_stack_traced;
use hecke_core::jdt::{jdt_map_traced, Frame};
use hecke_core::oracle::DEFAULT_CAP;
use hecke_core::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Hecke insertion and K-theoretic growth diagrams")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of cases an exhaustive command may enumerate.
    #[arg(long, global = true, env = "HECKE_CAP", default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
    cap: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hecke-insert a word and print the insertion and recording tableaux.
    Insert {
        word: Word,
        /// Also print the tableau after every letter.
        #[arg(long)]
        trace: bool,
    },
    /// Grow the diagram of a filling and print its boundary labels.
    Grow(FillingInput),
    /// Recover a filling from boundary labels given as JSON.
    Shrink {
        /// JSON file, or `-` for stdin. Either the object printed by `grow --json` or a bare label list.
        #[arg(default_value = "-")]
        file: String,
        /// Row widths, bottom row first; required for a bare label list.
        #[arg(long)]
        widths: Option<StackPolyomino>,
        /// Also print the backward rule used at every square.
        #[arg(long)]
        trace: bool,
    },
    /// Run an exhaustive or sampled check and report the first failure.
    Verify(verify::VerifyArgs),
    /// Arcs and statistics of a linked partition, e.g. "1 3 6; 2 5 8; 4; 5 9; 6 7".
    Linked { blocks: String },
    /// Draw a diagram or the frames of the jdt map.
    Render {
        #[arg(value_enum)]
        what: RenderKind,
        /// A word, a filling file, or a tableau such as `1,2,3,6/2,4,5/4`.
        input: String,
        /// Show every intermediate frame of the jdt map.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Word,
    Filling,
    Jdt,
}

#[derive(Args)]
struct FillingInput {
    /// Filling file (rows of `X` and `.`, top row first), or `-` for stdin.
    file: Option<String>,
    /// Use the rectangle filling of this word instead.
    #[arg(long, conflicts_with_all = ["file", "widths"])]
    word: Option<Word>,
    /// Row widths, bottom row first, together with `--ones`.
    #[arg(long, requires = "ones", conflicts_with = "file")]
    widths: Option<StackPolyomino>,
    /// Cells holding a 1, as `col:row` pairs separated by commas.
    #[arg(long, requires = "widths")]
    ones: Option<String>,
}

impl FillingInput {
    fn load(&self) -> Result<StackFilling> {
        if let Some(w) = &self.word {
            return Ok(StackFilling::from_word(w));
        }
        if let (Some(shape), Some(ones)) = (&self.widths, &self.ones) {
            return StackFilling::from_cells(shape.clone(), &parse_cells(ones)?);
        }
        read_input(self.file.as_deref().unwrap_or("-"))?.parse()
    }
}

fn parse_cap(s: &str) -> std::result::Result<u128, String> {
    match s.trim().parse::<u128>() {
        Ok(0) => Err("the cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_cells(s: &str) -> Result<Vec<FillCell>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (c, r) = t.split_once(':').ok_or_else(|| Error::Parse(format!("expected col:row, got {t:?}")))?;
            let num = |v: &str| v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number in {t:?}")));
            Ok(FillCell::new(num(c)?, num(r)?))
        })
        .collect()
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        s = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_image_error() => 3,
        Error::CapExceeded { .. } => 4,
        _ => 2,
    }
}

fn frames_text(frames: &[Frame]) -> String {
    frames
        .iter()
        .enumerate()
        .map(|(i, f)| format!("step {i}\n{f}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn insert(word: &Word, trace: bool, as_json: bool) -> String {
    let r = hecke_insert_word(word);
    if as_json {
        let steps: Vec<_> = r
            .steps
            .iter()
            .map(|s| json!({"row": s.cell.row, "col": s.cell.col, "grew": s.grew}))
            .collect();
        return json!({
            "word": word.letters(),
            "P": r.insertion.rows(),
            "Q": r.recording.rows(),
            "shape": r.insertion.shape(),
            "steps": steps,
        })
        .to_string();
    }
    let mut out = String::new();
    if trace {
        let mut t = IncreasingTableau::empty();
        for (i, &x) in word.letters().iter().enumerate() {
            let (z, step) = hecke_insert(&t, x).expect("straight tableau");
            let how = if step.grew { "adds" } else { "stops at" };
            out.push_str(&format!("{:>3}: insert {x}, {how} {}  {z}\n", i + 1, step.cell));
            t = z;
        }
    }
    out.push_str(&format!("P: {}\nQ: {}\n", r.insertion, r.recording));
    out
}

fn grow(f: &StackFilling, as_json: bool) -> Result<String> {
    let d = grow_stack(f)?;
    if as_json {
        return Ok(d.to_json().to_string());
    }
    let edges: Vec<String> = d.edge_labels().iter().map(|(c, r, l)| format!("({c},{r})={l}")).collect();
    Ok(format!(
        "shape: {}\nboundary: {}\nedge labels: {}\n\n{}",
        f.shape(),
        d.boundary(),
        if edges.is_empty() { "none".into() } else { edges.join(" ") },
        d.render()
    ))
}

fn shrink(text: &str, widths: Option<&StackPolyomino>, trace: bool, as_json: bool) -> Result<String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("boundary JSON: {e}")))?;
    let (shape, labels) = match &value {
        serde_json::Value::Object(m) => {
            let shape = match (m.get("widths"), widths) {
                (_, Some(s)) => s.clone(),
                (Some(w), None) => {
                    let w: Vec<usize> =
                        serde_json::from_value(w.clone()).map_err(|e| Error::Parse(format!("widths: {e}")))?;
                    StackPolyomino::new(w)?
                }
                (None, None) => return Err(Error::Parse("no widths given".into())),
            };
            let labels = m.get("boundary").ok_or_else(|| Error::Parse("no \"boundary\" field".into()))?;
            (shape, labels.clone())
        }
        _ => (
            widths.cloned().ok_or_else(|| Error::Parse("--widths is needed with a bare label list".into()))?,
            value.clone(),
        ),
    };
    let boundary = Boundary::from_json(&labels.to_string())?;
    let s = shrink_stack_traced(&shape, &boundary)?;
    if as_json {
        return Ok(json!({
            "widths": shape.widths(),
            "filling": s.filling.ones(),
            "rules": if trace { json!(s.rules) } else { json!(null) },
        })
        .to_string());
    }
    let mut out = s.filling.to_string();
    if trace {
        for (j, col) in s.rules.iter().enumerate() {
            let names: Vec<String> = col.iter().map(ToString::to_string).collect();
            out.push_str(&format!("column {}: {}\n", j + 1, names.join(" ")));
        }
    }
    Ok(out)
}

fn linked(blocks: &str, as_json: bool) -> Result<String> {
    let p: LinkedPartition = blocks.parse()?;
    let f = p.to_triangle();
    if as_json {
        return Ok(json!({
            "n": p.n(),
            "blocks": p.blocks(),
            "arcs": p.arcs(),
            "cross": p.cross(),
            "nest": p.nest(),
            "compl": p.compl(),
            "compr": p.compr(),
            "filling": f.ones(),
        })
        .to_string());
    }
    let arcs: Vec<String> = p.arcs().iter().map(|(i, j)| format!("({i},{j})")).collect();
    let set = |s: std::collections::BTreeSet<usize>| {
        format!("{{{}}}", s.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    };
    Ok(format!(
        "linked partition: {p}\narcs: {}\ncross: {}\nnest: {}\ncompl: {}\ncompr: {}\nfilling:\n{f}",
        arcs.join(" "),
        p.cross(),
        p.nest(),
        set(p.compl()),
        set(p.compr()),
    ))
}

fn render(what: RenderKind, input: &str, trace: bool, as_json: bool) -> Result<String> {
    match what {
        RenderKind::Word => grow(&StackFilling::from_word(&input.parse()?), as_json),
        RenderKind::Filling => grow(&read_input(input)?.parse()?, as_json),
        RenderKind::Jdt => {
            let t: IncreasingTableau = input.parse()?;
            let (out, frames) = jdt_map_traced(&t)?;
            if as_json {
                let shown: Vec<String> = frames.iter().map(ToString::to_string).collect();
                return Ok(json!({"input": t.to_string(), "output": out.to_string(), "frames": shown}).to_string());
            }
            let mut s = String::new();
            if trace {
                s.push_str(&frames_text(&frames));
                s.push('\n');
            }
            s.push_str(&format!("{t} -> {out}\n"));
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let j = cli.json;
    let text = match &cli.command {
        Command::Insert { word, trace } => insert(word, *trace, j),
        Command::Grow(input) => grow(&input.load()?, j)?,
        Command::Shrink { file, widths, trace } => shrink(&read_input(file)?, widths.as_ref(), *trace, j)?,
        Command::Verify(args) => {
            let report = verify::run(args, cli.cap)?;
            return Ok((if j { report.to_json() } else { report.to_text() }, report.passed()));
        }
        Command::Linked { blocks } => linked(blocks, j)?,
        Command::Render { what, input, trace } => render(*what, input, *trace, j)?,
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, ok)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
