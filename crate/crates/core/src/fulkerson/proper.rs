use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matchcolor::{
    bichromatic_factor, enumerate_three_edge_colorings, kempe_exchange, three_edge_coloring, EdgeColoring,
    PerfectMatching,
};

use super::types::{is_proper, verify_covering, FulkersonCovering};

/// A 3-edge-colouring in which the `(alpha, beta)` and `(beta, gamma)`
/// 2-factors are not Hamiltonian cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub coloring: EdgeColoring,
    pub alpha: u8,
    pub beta: u8,
    pub gamma: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiHamiltonicity {
    BiHamiltonian,
    NotBiHamiltonian(Witness),
}

impl BiHamiltonicity {
    pub fn is_bi_hamiltonian(&self) -> bool {
        matches!(self, BiHamiltonicity::BiHamiltonian)
    }
}

fn hamiltonian(g: &CubicGraph, c: &EdgeColoring, x: u8, y: u8) -> Result<bool> {
    Ok(bichromatic_factor(g, c, x, y)?.len() == 1)
}

/// Whether every 3-edge-colouring has at least two colour pairs forming a
/// Hamiltonian cycle. Colourings are enumerated up to colour permutation.
/// The witness is the first colouring (in canonical order) that fails.
pub fn is_bi_hamiltonian(g: &CubicGraph) -> Result<BiHamiltonicity> {
    if three_edge_coloring(g).is_none() {
        return Err(Error::ClassTwo);
    }
    for c in enumerate_three_edge_colorings(g) {
        let mut bad = Vec::new();
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            if !hamiltonian(g, &c, x, y)? {
                bad.push((x, y));
            }
        }
        if bad.len() >= 2 {
            let (p, q) = (bad[0], bad[1]);
            let beta = if p.0 == q.0 || p.0 == q.1 { p.0 } else { p.1 };
            let alpha = if p.0 == beta { p.1 } else { p.0 };
            let gamma = if q.0 == beta { q.1 } else { q.0 };
            return Ok(BiHamiltonicity::NotBiHamiltonian(Witness {
                coloring: c,
                alpha,
                beta,
                gamma,
            }));
        }
    }
    Ok(BiHamiltonicity::BiHamiltonian)
}

/// The covering `{α, α', β', β'', γ, γ''}` obtained by a Kempe exchange on
/// the `(α, β)` cycle through the lowest vertex and another on the
/// `(β, γ)` cycle through the lowest vertex, both in the witness colouring.
pub fn proper_covering_from_witness(g: &CubicGraph, w: &Witness) -> Result<FulkersonCovering> {
    let c = EdgeColoring::new(g, w.coloring.as_slice().to_vec(), 3)?;
    let (a, b, gm) = (w.alpha, w.beta, w.gamma);
    if a == b || b == gm || a == gm || a.max(b).max(gm) > 2 {
        return Err(Error::InvalidParameter(format!("colours {a}, {b}, {gm}")));
    }
    let f_ab = bichromatic_factor(g, &c, a, b)?;
    if f_ab.len() == 1 {
        return Err(Error::HamiltonianFactor(a, b));
    }
    let f_bg = bichromatic_factor(g, &c, b, gm)?;
    if f_bg.len() == 1 {
        return Err(Error::HamiltonianFactor(b, gm));
    }
    let c1 = kempe_exchange(g, &c, a, b, &f_ab.cycles[0])?;
    let c2 = kempe_exchange(g, &c, b, gm, &f_bg.cycles[0])?;
    let pm = |col: &EdgeColoring, x: u8| PerfectMatching::new(g, col.class(x));
    let f = FulkersonCovering::new(vec![
        pm(&c, a)?,
        pm(&c1, a)?,
        pm(&c1, b)?,
        pm(&c2, b)?,
        pm(&c, gm)?,
        pm(&c2, gm)?,
    ])?;
    if !verify_covering(g, &f)?.is_valid() || !is_proper(&f) {
        return Err(Error::Invariant(
            "Kempe construction did not give a proper covering".into(),
        ));
    }
    Ok(f)
}
