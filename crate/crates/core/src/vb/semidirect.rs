//! `VB_n = KB_n ⋊ S_n`: elements are pairs `(a, u)` standing for `a · ι(u)`,
//! multiplied by `(a, u)(b, v) = (a · u(b), u v)`.

use std::fmt;

use serde::Serialize;

use crate::artin::Delta;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vb::word::{KbLetter, KbWord, VbLetter, VbWord};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SemidirectElement {
    pub kb: KbWord,
    pub perm: Permutation,
}

impl SemidirectElement {
    pub fn identity(n: usize) -> SemidirectElement {
        SemidirectElement {
            kb: KbWord::empty(n),
            perm: Permutation::identity(n),
        }
    }

    pub fn new(kb: KbWord, perm: Permutation) -> Result<SemidirectElement> {
        if kb.strands() != perm.degree() {
            return Err(Error::DegreeMismatch {
                left: kb.strands(),
                right: perm.degree(),
            });
        }
        Ok(SemidirectElement { kb, perm })
    }

    /// `(a, id)`.
    pub fn from_kb(kb: KbWord) -> SemidirectElement {
        let n = kb.strands();
        SemidirectElement {
            kb,
            perm: Permutation::identity(n),
        }
    }

    /// `ι(w) = (ε, w)`.
    pub fn from_perm(perm: Permutation) -> SemidirectElement {
        SemidirectElement {
            kb: KbWord::empty(perm.degree()),
            perm,
        }
    }

    pub fn strands(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity_syntactically(&self) -> bool {
        self.kb.is_empty() && self.perm.is_identity()
    }

    fn mul_unchecked(&self, other: &SemidirectElement) -> SemidirectElement {
        SemidirectElement {
            kb: self.kb.mul(&other.kb.act(&self.perm)),
            perm: self.perm.mul_unchecked(&other.perm),
        }
    }

    /// `g · c · g⁻¹`.
    pub fn conjugate_by(&self, g: &SemidirectElement) -> SemidirectElement {
        g.mul_unchecked(self).mul_unchecked(&sd_inverse(g))
    }

    /// Right multiplication by one generator letter.
    pub fn push_letter(&mut self, l: VbLetter) {
        match l {
            VbLetter::Tau { index } => {
                let s = Permutation::adjacent(self.strands(), index as usize).expect("valid letter");
                self.perm = self.perm.mul_unchecked(&s);
            }
            VbLetter::Sigma { index, inverse } => {
                let i = index as usize;
                let d = Delta {
                    i: self.perm.apply(i) as u8,
                    j: self.perm.apply(i + 1) as u8,
                };
                self.kb.push(KbLetter { gen: d, inverse });
            }
        }
    }
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.kb, self.perm)
    }
}

impl fmt::Debug for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The defining word of `δ_{i,j}`:
/// `τ_i ⋯ τ_{j-2} σ_{j-1} τ_{j-2} ⋯ τ_i` for `i < j` and
/// `τ_j ⋯ τ_{i-1} σ_{i-1} τ_{i-1} ⋯ τ_j` for `i > j`.
pub fn expand_delta(n: usize, i: usize, j: usize) -> Result<VbWord> {
    Delta::new(n, i, j)?;
    let (prefix_end, sigma) = if i < j { (j - 1, j - 1) } else { (i, i - 1) };
    let lo = i.min(j);
    let prefix: Vec<VbLetter> = (lo..prefix_end).map(VbLetter::tau).collect();
    let mut letters = prefix.clone();
    letters.push(VbLetter::sigma(sigma));
    letters.extend(prefix.into_iter().rev());
    VbWord::new(n, letters)
}

/// Letterwise action `δ_{i,j}^{±1} ↦ δ_{w(i),w(j)}^{±1}`.
pub fn perm_act_kb(w: &Permutation, a: &KbWord) -> Result<KbWord> {
    if w.degree() != a.strands() {
        return Err(Error::DegreeMismatch {
            left: w.degree(),
            right: a.strands(),
        });
    }
    Ok(a.act(w))
}

/// Left-to-right fold of a word into the semidirect form.
pub fn to_semidirect(w: &VbWord) -> SemidirectElement {
    let mut acc = SemidirectElement::identity(w.strands());
    for &l in w.letters() {
        acc.push_letter(l);
    }
    acc
}

/// A word for the element: the expansion of every `δ` letter followed by
/// a `τ` word for the permutation.
pub fn from_semidirect(x: &SemidirectElement) -> VbWord {
    let n = x.strands();
    let mut out = VbWord::empty(n);
    for l in x.kb.letters() {
        let e = expand_delta(n, l.gen.i as usize, l.gen.j as usize).expect("valid letter");
        out.extend(&if l.inverse { e.inverse() } else { e });
    }
    out.extend(&VbWord::from_permutation(&x.perm));
    out
}

pub fn sd_multiply(x: &SemidirectElement, y: &SemidirectElement) -> Result<SemidirectElement> {
    if x.strands() != y.strands() {
        return Err(Error::DegreeMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    Ok(x.mul_unchecked(y))
}

/// `(a, u)⁻¹ = (u⁻¹(a⁻¹), u⁻¹)`.
pub fn sd_inverse(x: &SemidirectElement) -> SemidirectElement {
    let inv = x.perm.inverse();
    SemidirectElement {
        kb: x.kb.inverse().act(&inv),
        perm: inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kb(text: &str, n: usize) -> KbWord {
        KbWord::parse(text, n).unwrap()
    }

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::adjacent(n, i).unwrap()
    }

    #[test]
    fn expand_delta_examples() {
        assert_eq!(expand_delta(4, 1, 2).unwrap().to_string(), "s1");
        assert_eq!(expand_delta(4, 1, 3).unwrap().to_string(), "t1 s2 t1");
        assert_eq!(expand_delta(4, 2, 1).unwrap().to_string(), "t1 s1 t1");
        assert_eq!(expand_delta(5, 4, 2).unwrap().to_string(), "t2 t3 s3 t3 t2");
        assert!(expand_delta(4, 2, 2).is_err());
        assert!(expand_delta(4, 5, 2).is_err());
    }

    #[test]
    fn expansion_folds_back_to_generator() {
        for n in 2..=6 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let x = to_semidirect(&expand_delta(n, i, j).unwrap());
                    assert!(x.perm.is_identity());
                    assert_eq!(x.kb, KbWord::generator(n, Delta::new(n, i, j).unwrap()));
                }
            }
        }
    }

    #[test]
    fn perm_act_examples() {
        assert_eq!(perm_act_kb(&s(3, 1), &kb("d1.2", 3)).unwrap(), kb("d2.1", 3));
        let a = kb("d1.2 d2.3'", 3);
        assert_eq!(perm_act_kb(&Permutation::identity(3), &a).unwrap(), a);
        let t13 = Permutation::transposition(4, 1, 3).unwrap();
        assert_eq!(perm_act_kb(&t13, &kb("d1.2 d3.4", 4)).unwrap(), kb("d3.2 d1.4", 4));
        assert!(perm_act_kb(&Permutation::identity(4), &a).is_err());
    }

    #[test]
    fn to_semidirect_examples() {
        let x = to_semidirect(&VbWord::parse("t1 s1", 4).unwrap());
        assert_eq!(x.kb, kb("d2.1", 4));
        assert_eq!(x.perm, s(4, 1));
        assert!(to_semidirect(&VbWord::parse("s1 s1'", 4).unwrap()).is_identity_syntactically());
        assert!(to_semidirect(&VbWord::parse("t1 t2 s1 t2 t1 s2'", 4).unwrap()).is_identity_syntactically());
    }

    #[test]
    fn multiply_examples() {
        let x = SemidirectElement::new(kb("d1.2", 3), s(3, 1)).unwrap();
        let xx = sd_multiply(&x, &x).unwrap();
        assert_eq!(xx.kb, kb("d1.2 d2.1", 3));
        assert!(xx.perm.is_identity());
        assert_eq!(sd_multiply(&x, &SemidirectElement::identity(3)).unwrap(), x);
        let inv = sd_inverse(&x);
        assert_eq!(inv.kb, kb("d2.1'", 3));
        assert_eq!(inv.perm, s(3, 1));
        assert!(sd_multiply(&x, &inv).unwrap().is_identity_syntactically());
        assert!(sd_multiply(&x, &SemidirectElement::identity(4)).is_err());
    }

    #[test]
    fn from_semidirect_round_trip_is_syntactic_on_fold() {
        let w = VbWord::parse("t1 s2 t3 s1' t2 s3", 4).unwrap();
        let x = to_semidirect(&w);
        assert_eq!(to_semidirect(&from_semidirect(&x)), x);
    }
}
