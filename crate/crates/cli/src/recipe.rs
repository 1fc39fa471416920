//! Pipeline recipes: an optional `base <graph>` line (default `petersen`)
//! followed by one step per line,
//!
//! ```text
//! base petersen
//! type1 petersen
//! type2 flower5 spec 2 7 10
//! type1 petersen spec 0 7 10 swap_y
//! ```
//!
//! `spec e1 e2 e3` fixes the dot product edges, optionally followed by
//! `swap_y` and/or `swap_z`; without it the first valid spec is used.

use fulkerson_core::ffamily::{BaseGraph, DotStep, Preservation};
use fulkerson_core::DotProductSpec;

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub base: BaseGraph,
    pub steps: Vec<DotStep>,
}

fn graph(tok: &str, line: usize) -> Result<BaseGraph, ParseError> {
    tok.parse()
        .map_err(|e: fulkerson_core::Error| ParseError::new(line, e.to_string()))
}

fn spec(toks: &[&str], line: usize) -> Result<DotProductSpec, ParseError> {
    if toks.len() < 3 {
        return Err(ParseError::new(line, "`spec` needs three edge ids"));
    }
    let mut ids = [0; 3];
    for (slot, t) in ids.iter_mut().zip(toks) {
        *slot = t
            .parse()
            .map_err(|_| ParseError::new(line, format!("expected edge id, found {t:?}")))?;
    }
    let mut s = DotProductSpec::new(ids[0], ids[1], ids[2]);
    for &flag in &toks[3..] {
        match flag {
            "swap_y" => s.swap_y = true,
            "swap_z" => s.swap_z = true,
            other => return Err(ParseError::new(line, format!("unknown spec flag {other:?}"))),
        }
    }
    Ok(s)
}

pub fn parse_recipe(text: &str) -> Result<Recipe, ParseError> {
    let mut base = None;
    let mut steps = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "base" => {
                if !steps.is_empty() || base.is_some() {
                    return Err(ParseError::new(line, "`base` must come once, before the steps"));
                }
                if toks.len() != 2 {
                    return Err(ParseError::new(line, "expected `base <graph>`"));
                }
                base = Some(graph(toks[1], line)?);
            }
            "type1" | "type2" => {
                let op = if toks[0] == "type1" {
                    Preservation::Type1
                } else {
                    Preservation::Type2
                };
                let g = graph(toks.get(1).copied().unwrap_or(""), line)?;
                let spec = match toks.get(2) {
                    None => None,
                    Some(&"spec") => Some(spec(&toks[3..], line)?),
                    Some(other) => return Err(ParseError::new(line, format!("unexpected {other:?}"))),
                };
                steps.push(DotStep { graph: g, op, spec });
            }
            other => return Err(ParseError::new(line, format!("unknown recipe directive {other:?}"))),
        }
    }
    Ok(Recipe {
        base: base.unwrap_or(BaseGraph::Petersen),
        steps,
    })
}
