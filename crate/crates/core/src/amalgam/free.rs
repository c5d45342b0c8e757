//! Exact instantiations inside free groups: `F(b) * F(c)` and
//! `F(a, b) *_{⟨a⟩} F(a, c)`, both realized in the ambient free group on
//! `a, b, c, …`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::amalgam::engine::Amalgam;
use crate::error::{Error, Result};

/// A freely reduced word; letter `±k` is the `k`-th generator (`a` = 1)
/// or its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn new(letters: impl IntoIterator<Item = i32>) -> FreeWord {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: i32) {
        assert!(l != 0, "letter 0");
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn map_letters(&self, f: impl Fn(i32) -> FreeWord) -> FreeWord {
        let mut out = FreeWord::default();
        for &l in &self.0 {
            let img = f(l.abs());
            out = out.mul(&if l > 0 { img } else { img.inverse() });
        }
        out
    }

    /// Letters `a`…`z`, `'` for inverses, `e` for the empty word.
    pub fn parse(text: &str) -> Result<FreeWord> {
        let mut out = FreeWord::default();
        let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
        if text.trim() == "e" {
            return Ok(out);
        }
        while let Some(c) = chars.next() {
            if !c.is_ascii_lowercase() {
                return Err(Error::Parse(format!("bad letter {c:?} in {text:?}")));
            }
            let mut l = (c as u8 - b'a' + 1) as i32;
            if chars.peek() == Some(&'\'') {
                chars.next();
                l = -l;
            }
            out.push(l);
        }
        Ok(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &l in &self.0 {
            let c = (b'a' + (l.unsigned_abs() as u8) - 1) as char;
            write!(f, "{c}{}", if l < 0 { "'" } else { "" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Factors are free groups on subsets of the generators; `H` is the free
/// group on the shared generators. Transversal representatives are the
/// reduced words not ending in a letter of `H`, which are the shortlex
/// least members of their left cosets.
#[derive(Clone, Debug)]
pub struct FreeAmalgam {
    pub factors: Vec<Vec<i32>>,
    pub base: Vec<i32>,
}

impl FreeAmalgam {
    /// `F(b) * F(c)`.
    pub fn free_product() -> FreeAmalgam {
        FreeAmalgam {
            factors: vec![vec![2], vec![3]],
            base: vec![],
        }
    }

    /// `F(a, b) *_{⟨a⟩} F(a, c)`.
    pub fn cyclic_amalgam() -> FreeAmalgam {
        FreeAmalgam {
            factors: vec![vec![1, 2], vec![1, 3]],
            base: vec![1],
        }
    }

    /// The involution exchanging the factors: `b ↔ c`, and `a ↦ a⁻¹` on
    /// the base of the cyclic amalgam.
    pub fn swap(&self, w: &FreeWord) -> FreeWord {
        w.map_letters(|g| match g {
            1 => FreeWord::new([-1]),
            2 => FreeWord::new([3]),
            3 => FreeWord::new([2]),
            other => FreeWord::new([other]),
        })
    }

    pub fn in_base(&self, l: i32) -> bool {
        self.base.contains(&l.abs())
    }

    fn factor_of(&self, l: i32) -> Option<usize> {
        self.factors.iter().position(|f| f.contains(&l.abs()))
    }

    pub fn generators(&self) -> Vec<i32> {
        let mut g: Vec<i32> = self.factors.iter().flatten().copied().collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

impl Amalgam for FreeAmalgam {
    type Elem = FreeWord;

    fn factor_count(&self) -> usize {
        self.factors.len()
    }

    fn identity(&self) -> FreeWord {
        FreeWord::default()
    }

    fn mul(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b)
    }

    fn inverse(&self, a: &FreeWord) -> FreeWord {
        a.inverse()
    }

    fn decompose(&self, j: usize, g: &FreeWord) -> Result<(FreeWord, FreeWord)> {
        if let Some(&l) = g.letters().iter().find(|l| !self.factors[j].contains(&l.abs())) {
            return Err(Error::Precondition(format!("letter {l} of {g} is outside factor {j}")));
        }
        let cut = g.letters().iter().rposition(|&l| !self.in_base(l)).map_or(0, |p| p + 1);
        Ok((
            FreeWord(g.letters()[..cut].to_vec()),
            FreeWord(g.letters()[cut..].to_vec()),
        ))
    }

    fn is_identity(&self, g: &FreeWord) -> Result<bool> {
        Ok(g.is_empty())
    }

    fn factor_pieces(&self, g: &FreeWord) -> Result<Vec<(usize, FreeWord)>> {
        let mut out: Vec<(usize, FreeWord)> = Vec::new();
        for &l in g.letters() {
            let f = if self.in_base(l) {
                out.last().map_or(0, |(j, _)| *j)
            } else {
                self.factor_of(l)
                    .ok_or_else(|| Error::Precondition(format!("letter {l} lies in no factor")))?
            };
            match out.last_mut() {
                Some((j, w)) if *j == f => w.push(l),
                _ => out.push((f, FreeWord::new([l]))),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::engine::{amalgam_normal_form, swap_fixed_check, twisted_decompose, SwapCheck};

    fn w(t: &str) -> FreeWord {
        FreeWord::parse(t).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("ab'a").to_string(), "ab'a");
        assert!(w("aa'").is_empty());
        assert_eq!(w("e").to_string(), "e");
    }

    #[test]
    fn normal_form_examples() {
        let fp = FreeAmalgam::free_product();
        let nf = amalgam_normal_form(&fp, &[(0, w("b")), (1, w("c")), (0, w("b'"))]).unwrap();
        assert_eq!(nf.syllables, vec![(0, w("b")), (1, w("c")), (0, w("b'"))]);
        assert!(nf.base.is_empty());

        let am = FreeAmalgam::cyclic_amalgam();
        let nf = amalgam_normal_form(&am, &[(0, w("ba")), (1, w("ca'"))]).unwrap();
        assert_eq!(nf.syllables, vec![(0, w("b")), (1, w("ac"))]);
        assert_eq!(nf.base, w("a'"));

        let nf = amalgam_normal_form(&am, &[(0, w("aa"))]).unwrap();
        assert!(nf.is_empty());
        assert_eq!(nf.base, w("aa"));
    }

    #[test]
    fn swap_examples() {
        let fp = FreeAmalgam::free_product();
        let tau = |x: &FreeWord| fp.swap(x);
        assert_eq!(swap_fixed_check(&fp, tau, &w("e")).unwrap(), SwapCheck::InBase { base: w("e") });
        assert!(matches!(swap_fixed_check(&fp, tau, &w("b")).unwrap(), SwapCheck::NotFixed { .. }));
        assert!(matches!(swap_fixed_check(&fp, tau, &w("bc")).unwrap(), SwapCheck::NotFixed { .. }));
    }

    #[test]
    fn twisted_examples() {
        let fp = FreeAmalgam::free_product();
        let tau = |x: &FreeWord| fp.swap(x);
        assert_eq!(twisted_decompose(&fp, &tau, &w("e")).unwrap(), (w("e"), w("e")));
        assert_eq!(twisted_decompose(&fp, &tau, &w("bc'")).unwrap(), (w("b"), w("e")));
        assert_eq!(twisted_decompose(&fp, &tau, &w("bc'bc'")).unwrap(), (w("bc'"), w("e")));
        assert!(twisted_decompose(&fp, &tau, &w("b")).is_err());
    }

    #[test]
    fn twisted_with_base() {
        let am = FreeAmalgam::cyclic_amalgam();
        let tau = |x: &FreeWord| am.swap(x);
        // α = x β τ(x)⁻¹ with β = a: τ(a) = a⁻¹
        let x = w("ba'c");
        let alpha = x.mul(&w("a")).mul(&tau(&x).inverse());
        let (a1, b1) = twisted_decompose(&am, &tau, &alpha).unwrap();
        assert_eq!(a1.mul(&b1).mul(&tau(&a1).inverse()), alpha);
        assert!(b1.letters().iter().all(|l| l.abs() == 1));
    }
}
