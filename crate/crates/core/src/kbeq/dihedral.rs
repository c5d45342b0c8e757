//! Garside normal form in a parabolic `⟨a, b⟩` with `m(a, b) = 3`, which is
//! a copy of the 3-strand braid group.

use std::fmt;

use serde::Serialize;

use crate::artin::{kb_label, Delta, Label};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vb::word::KbWord;

/// `Δ^power · f_1 ⋯ f_r` with each `f_i` a proper nontrivial simple element
/// written over `a` (the smaller generator) and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralForm {
    pub a: Delta,
    pub b: Delta,
    pub delta_power: i64,
    pub factors: Vec<String>,
}

impl fmt::Display for DihedralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        write!(f, " [a={}, b={}]", self.a, self.b)
    }
}

fn simple(p: &Permutation) -> String {
    p.reduced_word().iter().map(|&i| if i == 1 { 'a' } else { 'b' }).collect()
}

/// Left normal form of `u` in `⟨a, b⟩`.
pub fn dihedral_normal_form(u: &KbWord, a: Delta, b: Delta) -> Result<DihedralForm> {
    if kb_label(a, b) != Label::Three {
        return Err(Error::Precondition(format!("m({a}, {b}) is not 3")));
    }
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let mut power = 0i64;
    let mut positive: Vec<usize> = Vec::new();
    for l in u.letters() {
        let x = if l.gen == a {
            1
        } else if l.gen == b {
            2
        } else {
            return Err(Error::Precondition(format!("{} is not in {{{a}, {b}}}", l.gen)));
        };
        if l.inverse {
            // x⁻¹ = Δ⁻¹ · x x' with x' the other generator; pulling Δ⁻¹
            // to the front swaps a and b in everything before it.
            for y in positive.iter_mut() {
                *y = 3 - *y;
            }
            power -= 1;
            positive.push(x);
            positive.push(3 - x);
        } else {
            positive.push(x);
        }
    }
    let s = |i: usize| Permutation::adjacent(3, i).expect("degree 3");
    let mut factors: Vec<Permutation> = positive.iter().map(|&i| s(i)).collect();
    loop {
        let mut changed = false;
        for k in 0..factors.len().saturating_sub(1) {
            for g in 1..=2 {
                let right = &factors[k + 1];
                let gp = s(g);
                let shorter = gp.mul_unchecked(right);
                let longer = factors[k].mul_unchecked(&gp);
                if shorter.length() < right.length() && longer.length() > factors[k].length() {
                    factors[k] = longer;
                    factors[k + 1] = shorter;
                    changed = true;
                }
            }
        }
        factors.retain(|f| !f.is_identity());
        if !changed {
            break;
        }
    }
    let lead = factors.iter().take_while(|f| f.length() == 3).count();
    power += lead as i64;
    Ok(DihedralForm {
        a,
        b,
        delta_power: power,
        factors: factors[lead..].iter().map(simple).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str) -> KbWord {
        KbWord::parse(t, 3).unwrap()
    }

    fn nf(t: &str) -> DihedralForm {
        dihedral_normal_form(&w(t), Delta { i: 1, j: 2 }, Delta { i: 2, j: 3 }).unwrap()
    }

    #[test]
    fn braid_relation_holds() {
        assert_eq!(nf("d1.2 d2.3 d1.2"), nf("d2.3 d1.2 d2.3"));
        assert_eq!(nf("d1.2 d2.3 d1.2").delta_power, 1);
        assert!(nf("d1.2 d2.3 d1.2").factors.is_empty());
    }

    #[test]
    fn trivial_words() {
        let e = nf("e");
        assert_eq!(nf("d1.2 d1.2'"), e);
        assert_eq!(nf("d1.2' d2.3 d1.2 d2.3 d1.2' d2.3'"), e);
        assert_eq!(nf("d2.3' d1.2'").delta_power, -1);
    }

    #[test]
    fn distinct_words() {
        assert_ne!(nf("d1.2 d2.3"), nf("d2.3 d1.2"));
        assert_ne!(nf("d1.2"), nf("d2.3"));
        assert_ne!(nf("d1.2 d2.3 d1.2'"), nf("d2.3"));
        assert_eq!(nf("d1.2 d2.3 d1.2'"), nf("d2.3' d1.2 d2.3"));
    }

    #[test]
    fn rejects_non_three_pairs() {
        assert!(dihedral_normal_form(&w("d1.2"), Delta { i: 1, j: 2 }, Delta { i: 2, j: 1 }).is_err());
        assert!(dihedral_normal_form(&w("d1.3"), Delta { i: 1, j: 2 }, Delta { i: 2, j: 3 }).is_err());
    }
}
