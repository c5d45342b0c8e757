//! Abelian invariants of `VB_n` and `KB_n`, and the letterwise image of a
//! `KB_n` word under `π_P`.

use serde::Serialize;

use crate::artin::{Delta, GeneratorSubset};
use crate::perm::Permutation;
use crate::vb::word::{KbWord, VbLetter, VbWord};

/// Image in `Z × Z/2`: (σ exponent sum, τ count mod 2).
pub fn vb_abelianize(w: &VbWord) -> (i64, u8) {
    let mut degree = 0i64;
    let mut parity = 0u8;
    for l in w.letters() {
        match l {
            VbLetter::Sigma { inverse, .. } => degree += if *inverse { -1 } else { 1 },
            VbLetter::Tau { .. } => parity ^= 1,
        }
    }
    (degree, parity)
}

/// Generator classes of the abelianization of `KB_n`: the relation
/// `δ_{i,j} δ_{j,k} δ_{i,j} = δ_{j,k} δ_{i,j} δ_{j,k}` identifies the two
/// generators; commutation relations identify nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KbAbelianClasses {
    n: usize,
    /// Class members, ordered by smallest member.
    classes: Vec<Vec<Delta>>,
}

impl KbAbelianClasses {
    pub fn compute(n: usize) -> KbAbelianClasses {
        let gens: Vec<Delta> = GeneratorSubset::full(n).iter().collect();
        let index = |d: Delta| gens.binary_search(&d).expect("generator");
        let mut parent: Vec<usize> = (0..gens.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let a = index(Delta { i: i as u8, j: j as u8 });
                    let b = index(Delta { i: j as u8, j: k as u8 });
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut classes: Vec<Vec<Delta>> = Vec::new();
        for (k, &d) in gens.iter().enumerate() {
            let r = find(&mut parent, k);
            match roots.iter().position(|&x| x == r) {
                Some(p) => classes[p].push(d),
                None => {
                    roots.push(r);
                    classes.push(vec![d]);
                }
            }
        }
        KbAbelianClasses { n, classes }
    }

    pub fn classes(&self) -> &[Vec<Delta>] {
        &self.classes
    }

    pub fn class_of(&self, d: Delta) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&d))
            .expect("generator of KB_n")
    }

    /// Exponent sums per class.
    pub fn evaluate(&self, a: &KbWord) -> Vec<i64> {
        let mut out = vec![0; self.classes.len()];
        for l in a.letters() {
            out[self.class_of(l.gen)] += l.exponent();
        }
        out
    }

    pub fn strands(&self) -> usize {
        self.n
    }
}

/// Exponent sums per abelianization class of `KB_n`.
pub fn kb_abelianize(a: &KbWord) -> Vec<i64> {
    KbAbelianClasses::compute(a.strands()).evaluate(a)
}

/// `π_P` restricted to `KB_n`: `δ_{i,j} ↦ (i, j)`.
pub fn transposition_image(a: &KbWord) -> Permutation {
    let n = a.strands();
    a.letters().iter().fold(Permutation::identity(n), |acc, l| {
        let t = Permutation::transposition(n, l.gen.i as usize, l.gen.j as usize).expect("valid letter");
        acc.mul_unchecked(&t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vb_abelianize_examples() {
        assert_eq!(vb_abelianize(&VbWord::parse("s1", 3).unwrap()), (1, 0));
        assert_eq!(vb_abelianize(&VbWord::parse("t1", 3).unwrap()), (0, 1));
        assert_eq!(vb_abelianize(&VbWord::empty(3)), (0, 0));
        assert_eq!(vb_abelianize(&VbWord::parse("s1 t1 s2", 3).unwrap()), (2, 1));
    }

    #[test]
    fn kb_classes_small_n() {
        let c3 = KbAbelianClasses::compute(3);
        let d = |i, j| Delta { i, j };
        assert_ne!(c3.class_of(d(1, 2)), c3.class_of(d(2, 1)));
        assert_eq!(c3.class_of(d(1, 2)), c3.class_of(d(2, 3)));
        assert_eq!(c3.classes().len(), 2);
        assert_eq!(KbAbelianClasses::compute(2).classes().len(), 2);
        assert_eq!(KbAbelianClasses::compute(4).classes().len(), 1);
    }

    #[test]
    fn braid_relator_abelianizes_to_zero() {
        let r = KbWord::parse("d1.2 d2.3 d1.2 d2.3' d1.2' d2.3'", 3).unwrap();
        assert!(kb_abelianize(&r).iter().all(|&x| x == 0));
        assert!(transposition_image(&r).is_identity());
    }

    #[test]
    fn transposition_image_examples() {
        let a = KbWord::parse("d1.3", 3).unwrap();
        assert_eq!(transposition_image(&a).one_line(), vec![3, 2, 1]);
    }
}
