//! Finite presentations of `S_n` and `VB_n`.

use serde::Serialize;

use crate::vb::relations::{sym_relators, vb_relators};
use crate::vb::word::VbLetter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sym,
    Vb,
    Other,
}

/// A letter `(generator, inverse)`.
pub type Letter = (usize, bool);

#[derive(Clone, Debug, Serialize)]
pub struct FinitePresentation {
    pub name: String,
    pub family: Family,
    pub degree: usize,
    pub generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl FinitePresentation {
    pub fn new(name: &str, generators: usize, relators: Vec<Vec<Letter>>) -> FinitePresentation {
        assert!(relators.iter().flatten().all(|&(g, _)| g < generators), "relator letter out of range");
        FinitePresentation {
            name: name.to_string(),
            family: Family::Other,
            degree: 0,
            generators,
            relators,
        }
    }

    /// Coxeter presentation on `s_1, …, s_{n-1}` (generator `i-1`).
    pub fn symmetric(n: usize) -> FinitePresentation {
        let relators = sym_relators(n)
            .into_iter()
            .map(|r| r.into_iter().map(|i| (i - 1, false)).collect())
            .collect();
        FinitePresentation {
            name: format!("sym{n}"),
            family: Family::Sym,
            degree: n,
            generators: n.saturating_sub(1),
            relators,
        }
    }

    /// Generators `σ_1, …, σ_{n-1}` (indices `0..n-1`) then `τ_1, …, τ_{n-1}`.
    pub fn virtual_braid(n: usize) -> FinitePresentation {
        let relators = vb_relators(n)
            .into_iter()
            .map(|(_, w)| {
                w.letters()
                    .iter()
                    .map(|l| match *l {
                        VbLetter::Sigma { index, inverse } => (index as usize - 1, inverse),
                        VbLetter::Tau { index } => (n - 1 + index as usize - 1, false),
                    })
                    .collect()
            })
            .collect();
        FinitePresentation {
            name: format!("vb{n}"),
            family: Family::Vb,
            degree: n,
            generators: 2 * n.saturating_sub(1),
            relators,
        }
    }
}
