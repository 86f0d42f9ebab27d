//! Browser bindings. Each export takes text from the page and returns a JSON string.
//!
//! The work happens in [`api`], which is plain Rust and tested natively; the exported
//! functions only forward to it.

use wasm_bindgen::prelude::*;

pub mod api {
    use hecke_core::jdt::jdt_map_traced;
    use hecke_core::*;
    use serde_json::json;

    type Out = std::result::Result<String, String>;

    fn err(e: Error) -> String {
        e.to_string()
    }

    /// Insertion and recording tableaux of a word, with the box where each letter stopped.
    pub fn insert(word: &str) -> Out {
        let w: Word = word.parse().map_err(err)?;
        let r = hecke_insert_word(&w);
        let steps: Vec<_> = r
            .steps
            .iter()
            .zip(w.letters())
            .map(|(s, x)| json!({"letter": x, "row": s.cell.row, "col": s.cell.col, "grew": s.grew}))
            .collect();
        Ok(json!({
            "P": r.insertion.rows(),
            "Q": r.recording.rows(),
            "steps": steps,
        })
        .to_string())
    }

    /// Growth diagram of a filling drawn as rows of `X` and `.`, top row first, together with the
    /// filling obtained by conjugating its boundary.
    pub fn grow(filling: &str) -> Out {
        let f: StackFilling = filling.parse().map_err(err)?;
        let d = grow_stack(&f).map_err(err)?;
        let g = symmetry_involution(&f).map_err(err)?;
        Ok(json!({
            "widths": f.shape().widths(),
            "boundary": d.boundary().to_string(),
            "picture": d.render(),
            "ne": longest_ne_chain(&f),
            "se": longest_se_chain(&f),
            "mirror": {
                "filling": g.to_string(),
                "boundary": d.boundary().conjugate().to_string(),
                "ne": longest_ne_chain(&g),
                "se": longest_se_chain(&g),
            },
        })
        .to_string())
    }

    /// Every frame of the jdt map on a straight tableau such as `1,2,3,6/2,4,5/4`.
    pub fn jdt(tableau: &str) -> Out {
        let t: IncreasingTableau = tableau.parse().map_err(err)?;
        let (out, frames) = jdt_map_traced(&t).map_err(err)?;
        let frames: Vec<String> = frames.iter().map(ToString::to_string).collect();
        Ok(json!({"output": out.to_string(), "frames": frames}).to_string())
    }
}

#[wasm_bindgen]
pub fn insert(word: &str) -> Result<String, String> {
    api::insert(word)
}

#[wasm_bindgen]
pub fn grow(filling: &str) -> Result<String, String> {
    api::grow(filling)
}

#[wasm_bindgen]
pub fn jdt(tableau: &str) -> Result<String, String> {
    api::jdt(tableau)
}
