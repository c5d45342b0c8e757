//! Words over `{σ_i^{±1}, τ_i}` and over `{δ_{i,j}^{±1}}`.
//!
//! Text format: whitespace-separated tokens `s3` (σ_3), `s3'` (σ_3⁻¹),
//! `t2` (τ_2; `t2'` is accepted and normalized), `d1.2` (δ_{1,2}),
//! `d1.2'` (δ_{1,2}⁻¹) and `e` (empty word).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::artin::{Delta, GeneratorSubset};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VbLetter {
    /// `σ_i^{±1}`; `inverse` selects the exponent −1.
    Sigma { index: u8, inverse: bool },
    /// `τ_i`, always with exponent +1.
    Tau { index: u8 },
}

impl VbLetter {
    pub fn sigma(i: usize) -> VbLetter {
        VbLetter::Sigma {
            index: i as u8,
            inverse: false,
        }
    }

    pub fn sigma_inv(i: usize) -> VbLetter {
        VbLetter::Sigma {
            index: i as u8,
            inverse: true,
        }
    }

    pub fn tau(i: usize) -> VbLetter {
        VbLetter::Tau { index: i as u8 }
    }

    pub fn index(self) -> usize {
        match self {
            VbLetter::Sigma { index, .. } | VbLetter::Tau { index } => index as usize,
        }
    }

    pub fn inverse(self) -> VbLetter {
        match self {
            VbLetter::Sigma { index, inverse } => VbLetter::Sigma {
                index,
                inverse: !inverse,
            },
            t @ VbLetter::Tau { .. } => t,
        }
    }
}

impl fmt::Display for VbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VbLetter::Sigma { index, inverse } => {
                write!(f, "s{index}{}", if inverse { "'" } else { "" })
            }
            VbLetter::Tau { index } => write!(f, "t{index}"),
        }
    }
}

/// A word in the generators of `VB_n`. Strand count is carried explicitly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VbWord {
    n: usize,
    letters: Vec<VbLetter>,
}

impl VbWord {
    pub fn empty(n: usize) -> VbWord {
        VbWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<VbLetter>) -> Result<VbWord> {
        for l in &letters {
            if l.index() == 0 || l.index() >= n {
                return Err(Error::IndexOutOfRange(format!("{l} in VB_{n}")));
            }
        }
        Ok(VbWord { n, letters })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[VbLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: VbLetter) {
        self.letters.push(l);
    }

    pub fn extend(&mut self, other: &VbWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &VbWord) -> VbWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn inverse(&self) -> VbWord {
        VbWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The word `τ_{i_1} ⋯ τ_{i_k}` for a reduced word of `w`.
    pub fn from_permutation(w: &Permutation) -> VbWord {
        VbWord {
            n: w.degree(),
            letters: w.reduced_word().into_iter().map(VbLetter::tau).collect(),
        }
    }

    /// Parses the text format; `d` tokens are expanded into `σ`/`τ` letters.
    pub fn parse(text: &str, n: usize) -> Result<VbWord> {
        let mut out = VbWord::empty(n);
        for tok in text.split_whitespace() {
            match parse_token(tok, n)? {
                Token::Empty => {}
                Token::Sigma(i, inv) => out.push(if inv { VbLetter::sigma_inv(i) } else { VbLetter::sigma(i) }),
                Token::Tau(i) => out.push(VbLetter::tau(i)),
                Token::Delta(d, inv) => {
                    let w = super::semidirect::expand_delta(n, d.i as usize, d.j as usize)?;
                    out.extend(&if inv { w.inverse() } else { w });
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for VbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let items: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

impl fmt::Debug for VbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VbWord(n={}, {})", self.n, self)
    }
}

impl Serialize for VbWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A letter `δ_{i,j}^{±1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KbLetter {
    pub gen: Delta,
    pub inverse: bool,
}

impl KbLetter {
    pub fn pos(gen: Delta) -> KbLetter {
        KbLetter { gen, inverse: false }
    }

    pub fn neg(gen: Delta) -> KbLetter {
        KbLetter { gen, inverse: true }
    }

    pub fn inv(self) -> KbLetter {
        KbLetter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn act(self, w: &Permutation) -> KbLetter {
        KbLetter {
            gen: self.gen.act(w),
            inverse: self.inverse,
        }
    }

    pub fn cancels(self, other: KbLetter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Display for KbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.gen, if self.inverse { "'" } else { "" })
    }
}

impl fmt::Debug for KbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A freely reduced word in the generators `δ_{i,j}` of `KB_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KbWord {
    n: usize,
    letters: Vec<KbLetter>,
}

impl KbWord {
    pub fn empty(n: usize) -> KbWord {
        KbWord {
            n,
            letters: Vec::new(),
        }
    }

    /// Validates indices and freely reduces.
    pub fn new(n: usize, letters: impl IntoIterator<Item = KbLetter>) -> Result<KbWord> {
        let mut out = KbWord::empty(n);
        for l in letters {
            Delta::new(n, l.gen.i as usize, l.gen.j as usize)?;
            out.push(l);
        }
        Ok(out)
    }

    /// Builds a word from `(i, j, exponent)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i64)]) -> Result<KbWord> {
        let mut out = KbWord::empty(n);
        for &(i, j, e) in triples {
            let d = Delta::new(n, i, j)?;
            out.push_power(d, e);
        }
        Ok(out)
    }

    pub fn generator(n: usize, d: Delta) -> KbWord {
        KbWord {
            n,
            letters: vec![KbLetter::pos(d)],
        }
    }

    /// `δ^k`.
    pub fn power(n: usize, d: Delta, k: i64) -> KbWord {
        let mut out = KbWord::empty(n);
        out.push_power(d, k);
        out
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[KbLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter, cancelling against the last one if possible.
    pub fn push(&mut self, l: KbLetter) {
        if self.letters.last().is_some_and(|last| last.cancels(l)) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn push_power(&mut self, d: Delta, k: i64) {
        let l = if k >= 0 { KbLetter::pos(d) } else { KbLetter::neg(d) };
        for _ in 0..k.unsigned_abs() {
            self.push(l);
        }
    }

    /// `self · other`, freely reduced.
    pub fn mul(&self, other: &KbWord) -> KbWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> KbWord {
        KbWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Letterwise index action `δ_{i,j} ↦ δ_{w(i),w(j)}`.
    pub fn act(&self, w: &Permutation) -> KbWord {
        // a bijection on letters preserves free reducedness
        KbWord {
            n: self.n,
            letters: self.letters.iter().map(|l| l.act(w)).collect(),
        }
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> GeneratorSubset {
        GeneratorSubset::new(self.n, self.letters.iter().map(|l| l.gen)).expect("letters are valid")
    }

    /// True when every letter is fixed by the index action of `w`.
    pub fn is_letterwise_fixed(&self, w: &Permutation) -> bool {
        self.letters.iter().all(|l| l.gen.act(w) == l.gen)
    }

    pub fn parse(text: &str, n: usize) -> Result<KbWord> {
        let mut out = KbWord::empty(n);
        for tok in text.split_whitespace() {
            match parse_token(tok, n)? {
                Token::Empty => {}
                Token::Delta(d, inv) => out.push(KbLetter { gen: d, inverse: inv }),
                _ => return Err(Error::Parse(format!("token {tok:?} is not a δ letter"))),
            }
        }
        Ok(out)
    }

    /// Splits into the prefix before `at` and the rest.
    pub fn split_at(&self, at: usize) -> (KbWord, KbWord) {
        (
            KbWord {
                n: self.n,
                letters: self.letters[..at].to_vec(),
            },
            KbWord {
                n: self.n,
                letters: self.letters[at..].to_vec(),
            },
        )
    }

    /// Subsequence of letters satisfying `keep` (reduced again).
    pub fn filter_letters(&self, keep: impl Fn(KbLetter) -> bool) -> KbWord {
        let mut out = KbWord::empty(self.n);
        for &l in &self.letters {
            if keep(l) {
                out.push(l);
            }
        }
        out
    }
}

impl fmt::Display for KbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let items: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

impl fmt::Debug for KbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KbWord(n={}, {})", self.n, self)
    }
}

impl Serialize for KbWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

enum Token {
    Empty,
    Sigma(usize, bool),
    Tau(usize),
    Delta(Delta, bool),
}

fn parse_token(tok: &str, n: usize) -> Result<Token> {
    if tok == "e" {
        return Ok(Token::Empty);
    }
    let (body, inverse) = match tok.strip_suffix('\'') {
        Some(b) => (b, true),
        None => (tok, false),
    };
    let bad = || Error::Parse(format!("bad token {tok:?}"));
    let index = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let mut chars = body.chars();
    match chars.next() {
        Some('s') => {
            let i = index(chars.as_str())?;
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange(format!("σ_{i} in VB_{n}")));
            }
            Ok(Token::Sigma(i, inverse))
        }
        Some('t') => {
            let i = index(chars.as_str())?;
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange(format!("τ_{i} in VB_{n}")));
            }
            Ok(Token::Tau(i))
        }
        Some('d') => {
            let (a, b) = chars.as_str().split_once('.').ok_or_else(bad)?;
            Ok(Token::Delta(Delta::new(n, index(a)?, index(b)?)?, inverse))
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kb_words_are_freely_reduced() {
        let w = KbWord::parse("d1.2 d2.1 d2.1' d1.2' d3.1", 3).unwrap();
        assert_eq!(w.to_string(), "d3.1");
        assert_eq!(KbWord::parse("e", 3).unwrap(), KbWord::empty(3));
        let u = KbWord::parse("d1.2 d2.3", 3).unwrap();
        assert!(u.mul(&u.inverse()).is_empty());
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(KbWord::parse("d1.1", 3).is_err());
        assert!(KbWord::parse("d1.4", 3).is_err());
        assert!(KbWord::parse("s1", 3).is_err());
        assert!(VbWord::parse("s3", 3).is_err());
        assert!(VbWord::parse("x1", 3).is_err());
        assert!(VbWord::parse("t0", 3).is_err());
    }

    #[test]
    fn tau_inverse_normalized() {
        let w = VbWord::parse("t2' s1'", 4).unwrap();
        assert_eq!(w.to_string(), "t2 s1'");
        assert_eq!(w.inverse().to_string(), "s1 t2");
    }

    #[test]
    fn act_permutes_indices() {
        let w = KbWord::parse("d1.2 d3.4", 4).unwrap();
        let p = Permutation::transposition(4, 1, 3).unwrap();
        assert_eq!(w.act(&p).to_string(), "d3.2 d1.4");
    }
}
