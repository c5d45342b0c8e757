//! The named homomorphisms between `VB_n` and `S_n`: `π_K`, `π_P`, `ι`,
//! `ζ_1`, `ζ_2`, `ν_6`, identities and their composites.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kbeq;
use crate::perm::{nu6_images, Permutation};
use crate::vb::relations::{sym_relators, vb_relators};
use crate::vb::semidirect::{from_semidirect, sd_inverse, to_semidirect, SemidirectElement};
use crate::vb::word::{VbLetter, VbWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "group", content = "degree", rename_all = "lowercase")]
pub enum Source {
    Vb(usize),
    Sym(usize),
}

pub type Target = Source;

impl Source {
    pub fn degree(self) -> usize {
        match self {
            Source::Vb(n) | Source::Sym(n) => n,
        }
    }

    /// Number of generators: `σ_1..σ_{n-1}, τ_1..τ_{n-1}` or `s_1..s_{n-1}`.
    pub fn generator_count(self) -> usize {
        match self {
            Source::Vb(n) => 2 * (n - 1),
            Source::Sym(n) => n - 1,
        }
    }

    pub fn identity(self) -> Value {
        match self {
            Source::Vb(n) => Value::Vb(SemidirectElement::identity(n)),
            Source::Sym(n) => Value::Perm(Permutation::identity(n)),
        }
    }

    /// Parses `vb5` or `sym5`.
    pub fn parse(text: &str) -> Result<Source> {
        let bad = || Error::Parse(format!("expected vbN or symN, got {text:?}"));
        let (ctor, rest): (fn(usize) -> Source, &str) = if let Some(r) = text.strip_prefix("vb") {
            (Source::Vb, r)
        } else if let Some(r) = text.strip_prefix("sym") {
            (Source::Sym, r)
        } else {
            return Err(bad());
        };
        let n: usize = rest.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(bad());
        }
        Ok(ctor(n))
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Vb(n) => write!(f, "vb{n}"),
            Source::Sym(n) => write!(f, "sym{n}"),
        }
    }
}

/// An element of `S_m` or of `VB_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Perm(Permutation),
    Vb(SemidirectElement),
}

impl Value {
    pub fn mul(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Perm(a), Value::Perm(b)) => Ok(Value::Perm(a.compose(b)?)),
            (Value::Vb(a), Value::Vb(b)) => Ok(Value::Vb(crate::vb::semidirect::sd_multiply(a, b)?)),
            _ => Err(Error::Precondition("mixed target groups".into())),
        }
    }

    pub fn inverse(&self) -> Value {
        match self {
            Value::Perm(a) => Value::Perm(a.inverse()),
            Value::Vb(a) => Value::Vb(sd_inverse(a)),
        }
    }

    /// Exact in `S_m`; in `VB_m` the `KB_m` parts are compared by `kbeq`.
    pub fn equals(&self, other: &Value) -> Result<bool> {
        match (self, other) {
            (Value::Perm(a), Value::Perm(b)) => Ok(a == b),
            (Value::Vb(a), Value::Vb(b)) => {
                if a.perm != b.perm {
                    return Ok(false);
                }
                kbeq::kb_equal_decided(&a.kb, &b.kb)
            }
            _ => Err(Error::Precondition("mixed target groups".into())),
        }
    }

    pub fn is_identity(&self) -> Result<bool> {
        match self {
            Value::Perm(a) => Ok(a.is_identity()),
            Value::Vb(a) => Ok(a.perm.is_identity() && kbeq::kb_is_trivial(&a.kb)?),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Perm(p) => write!(f, "{p}"),
            Value::Vb(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomName {
    PiK,
    PiP,
    Iota,
    Zeta1,
    Zeta2,
    Nu6,
    Identity,
    /// Images supplied by a caller.
    Given,
    /// `outer ∘ inner`.
    Composite(Box<HomName>, Box<HomName>),
}

impl fmt::Display for HomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomName::PiK => write!(f, "piK"),
            HomName::PiP => write!(f, "piP"),
            HomName::Iota => write!(f, "iota"),
            HomName::Zeta1 => write!(f, "zeta1"),
            HomName::Zeta2 => write!(f, "zeta2"),
            HomName::Nu6 => write!(f, "nu6"),
            HomName::Identity => write!(f, "identity"),
            HomName::Given => write!(f, "given"),
            HomName::Composite(a, b) => write!(f, "{a}.{b}"),
        }
    }
}

impl Serialize for HomName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A homomorphism given by the images of the source generators, in the
/// order of [`Source::generator_count`].
#[derive(Clone, Debug, Serialize)]
pub struct CatalogHom {
    pub name: HomName,
    pub source: Source,
    pub target: Target,
    pub images: Vec<Value>,
}

impl CatalogHom {
    /// Builds the homomorphism after checking every defining relator of the
    /// source maps to the identity.
    pub fn new(name: HomName, source: Source, target: Target, images: Vec<Value>) -> Result<CatalogHom> {
        if images.len() != source.generator_count() {
            return Err(Error::Precondition(format!(
                "{} images for {} generators",
                images.len(),
                source.generator_count()
            )));
        }
        let h = CatalogHom {
            name,
            source,
            target,
            images,
        };
        for (label, relator) in h.relator_images()? {
            match relator.is_identity() {
                Ok(true) => {}
                Ok(false) => return Err(Error::SelfCheck(format!("{}: relator {label} fails", h.name))),
                Err(e) => return Err(Error::Unknown(format!("{}: relator {label}: {e}", h.name))),
            }
        }
        Ok(h)
    }

    fn relator_images(&self) -> Result<Vec<(String, Value)>> {
        match self.source {
            Source::Vb(n) => vb_relators(n)
                .into_iter()
                .map(|(name, w)| Ok((name, self.eval(&w)?)))
                .collect(),
            Source::Sym(n) => sym_relators(n)
                .into_iter()
                .map(|r| {
                    let w = VbWord::new(n, r.iter().map(|&i| VbLetter::tau(i)).collect())?;
                    Ok((format!("{r:?}"), self.eval(&w)?))
                })
                .collect(),
        }
    }

    fn generator_image(&self, l: VbLetter) -> Value {
        let i = l.index() - 1;
        let (idx, inverse) = match (self.source, l) {
            (Source::Vb(_), VbLetter::Sigma { inverse, .. }) => (i, inverse),
            (Source::Vb(n), VbLetter::Tau { .. }) => (n - 1 + i, false),
            (Source::Sym(_), _) => (i, false),
        };
        if inverse {
            self.images[idx].inverse()
        } else {
            self.images[idx].clone()
        }
    }

    /// Evaluates a word. For a symmetric-group source the letters `s_i`,
    /// `s_i⁻¹` and `t_i` all denote the Coxeter generator `s_i`.
    pub fn eval(&self, w: &VbWord) -> Result<Value> {
        if w.strands() != self.source.degree() {
            return Err(Error::DegreeMismatch {
                left: self.source.degree(),
                right: w.strands(),
            });
        }
        let mut acc = self.target.identity();
        for &l in w.letters() {
            acc = acc.mul(&self.generator_image(l))?;
        }
        Ok(acc)
    }

    /// Evaluates on a target-side value of `self`'s source group.
    pub fn eval_value(&self, x: &Value) -> Result<Value> {
        let w = match x {
            Value::Perm(p) => VbWord::from_permutation(p),
            Value::Vb(e) => from_semidirect(e),
        };
        self.eval(&w)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &CatalogHom) -> Result<CatalogHom> {
        if inner.target != self.source {
            return Err(Error::Precondition(format!(
                "cannot compose {} after {}: {} vs {}",
                self.name, inner.name, inner.target, self.source
            )));
        }
        let images = inner.images.iter().map(|x| self.eval_value(x)).collect::<Result<Vec<_>>>()?;
        Ok(CatalogHom {
            name: HomName::Composite(Box::new(self.name.clone()), Box::new(inner.name.clone())),
            source: inner.source,
            target: self.target,
            images,
        })
    }

    /// Generator-wise comparison.
    pub fn agrees_with(&self, other: &CatalogHom) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        for (a, b) in self.images.iter().zip(&other.images) {
            if !a.equals(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn pi_k(n: usize) -> Result<CatalogHom> {
        let s = |i| Value::Perm(Permutation::adjacent(n, i).expect("index"));
        let id = Value::Perm(Permutation::identity(n));
        let images = (1..n).map(|_| id.clone()).chain((1..n).map(s)).collect();
        CatalogHom::new(HomName::PiK, Source::Vb(n), Source::Sym(n), images)
    }

    pub fn pi_p(n: usize) -> Result<CatalogHom> {
        let s = |i| Value::Perm(Permutation::adjacent(n, i).expect("index"));
        let images = (1..n).map(s).chain((1..n).map(s)).collect();
        CatalogHom::new(HomName::PiP, Source::Vb(n), Source::Sym(n), images)
    }

    pub fn iota(n: usize) -> Result<CatalogHom> {
        let images = (1..n)
            .map(|i| Value::Vb(SemidirectElement::from_perm(Permutation::adjacent(n, i).expect("index"))))
            .collect();
        CatalogHom::new(HomName::Iota, Source::Sym(n), Source::Vb(n), images)
    }

    fn vb_endo(name: HomName, n: usize, sigma: impl Fn(usize) -> Vec<VbLetter>) -> Result<CatalogHom> {
        let word = |l: Vec<VbLetter>| Value::Vb(to_semidirect(&VbWord::new(n, l).expect("index")));
        let images = (1..n)
            .map(|i| word(sigma(i)))
            .chain((1..n).map(|i| word(vec![VbLetter::tau(i)])))
            .collect();
        CatalogHom::new(name, Source::Vb(n), Source::Vb(n), images)
    }

    /// `σ_i ↦ τ_i σ_i τ_i`, `τ_i ↦ τ_i`.
    pub fn zeta1(n: usize) -> Result<CatalogHom> {
        CatalogHom::vb_endo(HomName::Zeta1, n, |i| {
            vec![VbLetter::tau(i), VbLetter::sigma(i), VbLetter::tau(i)]
        })
    }

    /// `σ_i ↦ σ_i⁻¹`, `τ_i ↦ τ_i`.
    pub fn zeta2(n: usize) -> Result<CatalogHom> {
        CatalogHom::vb_endo(HomName::Zeta2, n, |i| vec![VbLetter::sigma_inv(i)])
    }

    pub fn nu6() -> Result<CatalogHom> {
        let images = nu6_images().into_iter().map(Value::Perm).collect();
        CatalogHom::new(HomName::Nu6, Source::Sym(6), Source::Sym(6), images)
    }

    pub fn identity(source: Source) -> Result<CatalogHom> {
        let n = source.degree();
        let images = match source {
            Source::Vb(_) => {
                let mut v: Vec<Value> = (1..n)
                    .map(|i| Value::Vb(to_semidirect(&VbWord::new(n, vec![VbLetter::sigma(i)]).expect("index"))))
                    .collect();
                v.extend((1..n).map(|i| Value::Vb(SemidirectElement::from_perm(Permutation::adjacent(n, i).expect("index")))));
                v
            }
            Source::Sym(_) => (1..n).map(|i| Value::Perm(Permutation::adjacent(n, i).expect("index"))).collect(),
        };
        CatalogHom::new(HomName::Identity, source, source, images)
    }

    /// Resolves a name such as `piK`, `zeta1` or `nu6.piP` at degree `n`.
    pub fn by_name(name: &str, n: usize) -> Result<CatalogHom> {
        let parts: Vec<&str> = name.split('.').collect();
        let mut homs = Vec::with_capacity(parts.len());
        for (k, part) in parts.iter().enumerate().rev() {
            // the innermost map fixes the source; later ones follow targets
            let source = homs.last().map(|h: &CatalogHom| h.target);
            let h = match (*part, source) {
                ("piK", _) => CatalogHom::pi_k(n)?,
                ("piP", _) => CatalogHom::pi_p(n)?,
                ("iota", _) => CatalogHom::iota(n)?,
                ("zeta1", _) => CatalogHom::zeta1(n)?,
                ("zeta2", _) => CatalogHom::zeta2(n)?,
                ("nu6", _) => CatalogHom::nu6()?,
                ("identity", Some(s)) => CatalogHom::identity(s)?,
                ("identity", None) => CatalogHom::identity(Source::Vb(n))?,
                _ => return Err(Error::Parse(format!("unknown homomorphism {part:?} at position {k}"))),
            };
            homs.push(h);
        }
        let mut acc = homs.remove(0);
        for h in homs {
            acc = h.compose(&acc)?;
        }
        Ok(acc)
    }
}

pub fn eval_catalog_hom(h: &CatalogHom, w: &VbWord) -> Result<Value> {
    h.eval(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vb::abelian::vb_abelianize;

    fn vb(t: &str, n: usize) -> VbWord {
        VbWord::parse(t, n).unwrap()
    }

    #[test]
    fn eval_examples() {
        let pk = CatalogHom::pi_k(3).unwrap();
        assert_eq!(pk.eval(&vb("s1", 3)).unwrap(), Value::Perm(Permutation::identity(3)));
        assert_eq!(pk.eval(&vb("t1", 3)).unwrap(), Value::Perm(Permutation::adjacent(3, 1).unwrap()));
        let z2 = CatalogHom::zeta2(3).unwrap();
        match z2.eval(&vb("s1", 3)).unwrap() {
            Value::Vb(x) => {
                assert_eq!(x.kb.to_string(), "d1.2'");
                assert!(x.perm.is_identity());
            }
            v => panic!("{v}"),
        }
        let io = CatalogHom::iota(3).unwrap();
        let a = io.eval(&vb("s1 s2 s1", 3)).unwrap();
        assert_eq!(a, io.eval(&vb("s2 s1 s2", 3)).unwrap());
        assert_eq!(a, Value::Vb(SemidirectElement::from_perm(Permutation::transposition(3, 1, 3).unwrap())));
    }

    #[test]
    fn zeta_relations() {
        for n in 3..=5 {
            let z1 = CatalogHom::zeta1(n).unwrap();
            let z2 = CatalogHom::zeta2(n).unwrap();
            let id = CatalogHom::identity(Source::Vb(n)).unwrap();
            assert!(z1.compose(&z1).unwrap().agrees_with(&id).unwrap());
            assert!(z2.compose(&z2).unwrap().agrees_with(&id).unwrap());
            assert!(z1.compose(&z2).unwrap().agrees_with(&z2.compose(&z1).unwrap()).unwrap());
            assert!(!z1.agrees_with(&id).unwrap());
        }
    }

    #[test]
    fn iota_is_a_section() {
        for n in 2..=6 {
            let io = CatalogHom::iota(n).unwrap();
            let id = CatalogHom::identity(Source::Sym(n)).unwrap();
            assert!(CatalogHom::pi_k(n).unwrap().compose(&io).unwrap().agrees_with(&id).unwrap());
            assert!(CatalogHom::pi_p(n).unwrap().compose(&io).unwrap().agrees_with(&id).unwrap());
        }
    }

    #[test]
    fn abelianization_action() {
        let z2 = CatalogHom::zeta2(4).unwrap();
        let z1 = CatalogHom::zeta1(4).unwrap();
        let ab = |v: Value| match v {
            Value::Vb(x) => vb_abelianize(&from_semidirect(&x)),
            _ => unreachable!(),
        };
        assert_eq!(ab(z2.eval(&vb("s1", 4)).unwrap()), (-1, 0));
        assert_eq!(ab(z1.eval(&vb("s1", 4)).unwrap()), (1, 0));
    }

    #[test]
    fn by_name_composites() {
        let h = CatalogHom::by_name("nu6.piK", 6).unwrap();
        assert_eq!(h.source, Source::Vb(6));
        assert_eq!(h.name.to_string(), "nu6.piK");
        assert!(CatalogHom::by_name("piK.piK", 4).is_err());
        assert!(CatalogHom::by_name("bogus", 4).is_err());
    }

    #[test]
    fn bad_images_rejected() {
        let p = Value::Perm(Permutation::from_one_line(&[2, 3, 1]).unwrap());
        assert!(CatalogHom::new(HomName::PiK, Source::Sym(3), Source::Sym(3), vec![p.clone(), p]).is_err());
    }
}
