//! Exhaustive and sampled checks, stopping at the first failing input.

use clap::{Args, ValueEnum};
use hecke_core::applications::{chain_histogram, corner_checks, histogram_is_symmetric};
use hecke_core::growth::rect::{extract_pq, grow_word, rect_boundary, shrink_rectangle};
use hecke_core::oracle::{brute_chains, brute_lds, brute_lis, count_fillings, enumerate_fillings, lds, lis};
use hecke_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// grow then shrink every filling of a rectangle
    RectRoundtrip,
    /// grow then shrink every filling of a stack polyomino
    StackRoundtrip,
    /// corner labels against longest subsequences, and chain lengths against subsets
    Chains,
    /// ne/se histogram and the conjugation involution
    Symmetry,
    /// crossings and nestings over all linked partitions of [n]
    Linked,
    /// insertion shape and growth diagram against every word
    Insertion,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Row widths, bottom row first.
    #[arg(long, default_value = "2,3,3,2")]
    widths: StackPolyomino,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 4)]
    cols: usize,
    /// Size of the ground set for `linked`.
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    alphabet: usize,
    #[arg(long, default_value_t = 6)]
    maxlen: usize,
    /// Check this many random fillings instead of all of them.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

pub struct Report {
    suite: &'static str,
    checked: u64,
    notes: Vec<String>,
    failure: Option<String>,
}

impl Report {
    fn new(suite: &'static str) -> Self {
        Report { suite, checked: 0, notes: vec![], failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {} checked, ", self.suite, self.checked);
        match &self.failure {
            None => s.push_str("0 failures\n"),
            Some(f) => s.push_str(&format!("FAILED on {f}\n")),
        }
        for n in &self.notes {
            s.push_str(&format!("  {n}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        json!({
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed(),
            "failure": self.failure,
            "notes": self.notes,
        })
        .to_string()
    }
}

fn check_cap(size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

fn fillings(shape: &StackPolyomino, args: &VerifyArgs, cap: u128) -> Result<Vec<StackFilling>> {
    match args.samples {
        Some(k) => {
            check_cap(k as u128, cap)?;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            Ok((0..k)
                .map(|_| {
                    let rows = shape
                        .spans()
                        .iter()
                        .map(|s| {
                            let d = rng.gen_range(0..=s.height());
                            (d > 0).then_some(s.bottom + d)
                        })
                        .collect();
                    StackFilling::from_columns(shape.clone(), rows).expect("inside the shape")
                })
                .collect())
        }
        None => Ok(enumerate_fillings(shape, cap)?.collect()),
    }
}

/// Replays `check` on each case until one returns a failure message.
fn each<T>(r: &mut Report, cases: impl IntoIterator<Item = T>, mut check: impl FnMut(&T) -> Option<String>) {
    for c in cases {
        r.checked += 1;
        if let Some(msg) = check(&c) {
            r.failure = Some(msg);
            return;
        }
    }
}

fn roundtrip(f: &StackFilling) -> Option<String> {
    let b = match grow_stack(f) {
        Ok(d) => d.boundary(),
        Err(e) => return Some(format!("{}: grow failed: {e}", f.ones_text())),
    };
    match shrink_stack(f.shape(), &b) {
        Ok(g) if g == *f => None,
        Ok(g) => Some(format!("{} came back as {}", f.ones_text(), g.ones_text())),
        Err(e) => Some(format!("{}: shrink failed: {e}", f.ones_text())),
    }
}

trait OnesText {
    fn ones_text(&self) -> String;
}

impl OnesText for StackFilling {
    /// `widths [ones]`, enough to rebuild the filling with `grow --widths --ones`.
    fn ones_text(&self) -> String {
        let ones: Vec<String> = self.ones().iter().map(|c| format!("{}:{}", c.col, c.row)).collect();
        format!("--widths {} --ones {}", self.shape(), ones.join(","))
    }
}

pub fn run(args: &VerifyArgs, cap: u128) -> Result<Report> {
    let shape = &args.widths;
    let r = match args.suite {
        Suite::RectRoundtrip => {
            let mut r = Report::new("rect-roundtrip");
            let rect = StackPolyomino::rectangle(args.rows, args.cols);
            let all = fillings(&rect, args, cap)?;
            each(&mut r, all, |f| {
                let b = match grow_stack(f) {
                    Ok(d) => rect_boundary(&d),
                    Err(e) => return Some(format!("{}: grow failed: {e}", f.ones_text())),
                };
                match shrink_rectangle(&b) {
                    Ok((g, _)) if g == *f => None,
                    Ok((g, _)) => Some(format!("{} came back as {}", f.ones_text(), g.ones_text())),
                    Err(e) => Some(format!("{}: shrink failed: {e}", f.ones_text())),
                }
            });
            r.notes.push(format!("{} x {} rectangle", args.rows, args.cols));
            r
        }
        Suite::StackRoundtrip => {
            let mut r = Report::new("stack-roundtrip");
            let all = fillings(shape, args, cap)?;
            each(&mut r, all, roundtrip);
            r.notes.push(format!("widths {shape}, {} fillings in all", count_fillings(shape)));
            r
        }
        Suite::Chains => {
            let mut r = Report::new("chains");
            let all = fillings(shape, args, cap)?;
            let mut corners = 0;
            each(&mut r, all, |f| {
                let checks = match corner_checks(f, lis, lds) {
                    Ok(c) => c,
                    Err(e) => return Some(format!("{}: {e}", f.ones_text())),
                };
                corners += checks.len();
                if let Some(c) = checks.iter().find(|c| !c.chains_match()) {
                    return Some(format!("{} at corner {:?}: label {}, word {}", f.ones_text(), c.corner, c.label, c.word));
                }
                let fast = (longest_ne_chain(f), longest_se_chain(f));
                (f.ones().len() <= 20 && fast != brute_chains(f))
                    .then(|| format!("{}: chain lengths {fast:?} differ from subsets", f.ones_text()))
            });
            r.notes.push(format!("{corners} corners compared"));
            r
        }
        Suite::Symmetry => {
            let mut r = Report::new("symmetry");
            let all = fillings(shape, args, cap)?;
            each(&mut r, all.iter(), |f| {
                let g = match symmetry_involution(f) {
                    Ok(g) => g,
                    Err(e) => return Some(format!("{}: {e}", f.ones_text())),
                };
                if symmetry_involution(&g).ok().as_ref() != Some(*f) {
                    return Some(format!("{}: not an involution", f.ones_text()));
                }
                let cols = |h: &StackFilling| h.column_rows().iter().map(Option::is_some).collect::<Vec<_>>();
                let rows = |h: &StackFilling| h.ones().iter().map(|c| c.row).collect::<std::collections::BTreeSet<_>>();
                if cols(&g) != cols(f) || rows(&g) != rows(f) {
                    return Some(format!("{}: occupied rows or columns change", f.ones_text()));
                }
                (longest_ne_chain(&g), longest_se_chain(&g))
                    .ne(&(longest_se_chain(f), longest_ne_chain(f)))
                    .then(|| format!("{}: chains not swapped", f.ones_text()))
            });
            if r.passed() {
                let h = chain_histogram(&all);
                let sym = histogram_is_symmetric(&h);
                r.notes.push(format!("histogram over (ones, ne, se): {} cells, symmetric: {sym}", h.len()));
                if !sym {
                    r.failure = Some("histogram is not symmetric".into());
                }
            }
            r
        }
        Suite::Linked => {
            let mut r = Report::new("linked");
            check_cap((1..=args.n as u128).product(), cap)?;
            let all = LinkedPartition::all(args.n);
            let mut counts = std::collections::BTreeMap::new();
            each(&mut r, all.iter(), |p| {
                let f = p.to_triangle();
                *counts.entry((p.cross(), p.nest(), p.compl(), p.compr())).or_insert(0u64) += 1;
                (p.cross() != longest_se_chain(&f) || p.nest() != longest_ne_chain(&f))
                    .then(|| format!("{p}: crossing or nesting differs from its filling"))
            });
            if r.passed() {
                for ((x, y, s, t), c) in &counts {
                    if counts.get(&(*y, *x, s.clone(), t.clone())) != Some(c) {
                        r.failure = Some(format!("cross {x}, nest {y}, compl {s:?}, compr {t:?}: count {c} not matched"));
                        break;
                    }
                }
                r.notes.push(format!("{} classes by (cross, nest, compl, compr)", counts.len()));
            }
            r
        }
        Suite::Insertion => {
            let mut r = Report::new("insertion");
            let total: u128 = (0..=args.maxlen as u32).map(|l| (args.alphabet as u128).pow(l)).sum();
            check_cap(total, cap)?;
            let words = (0..=args.maxlen).flat_map(|l| Word::all(args.alphabet, l));
            each(&mut r, words, |w| {
                let h = hecke_insert_word(w);
                let s = h.insertion.shape();
                if w.len() <= 24 && (s.part(1) != brute_lis(w) || s.len() != brute_lds(w)) {
                    return Some(format!("{w}: shape {s} vs subsequences"));
                }
                let (p, q) = match extract_pq(&rect_boundary(&grow_word(w))) {
                    Ok(pq) => pq,
                    Err(e) => return Some(format!("{w}: {e}")),
                };
                (p != h.insertion || q != h.recording).then(|| format!("{w}: growth diagram disagrees with insertion"))
            });
            r.notes.push(format!("words over [{}] of length <= {}", args.alphabet, args.maxlen));
            r
        }
    };
    Ok(r)
}
