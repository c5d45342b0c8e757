//! Homomorphisms from `S_n` and `VB_n` into `S_m`, classified up to
//! conjugation and labelled against the known catalog.

pub mod presentation;
pub mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{canonical_tuple, involution_class_reps, Permutation};
use crate::vb::catalog::{CatalogHom, Value};

pub use presentation::{Family, FinitePresentation};
pub use search::{enumerate_homs, satisfies_relators, Enumeration, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Abelian,
    PiK,
    PiP,
    Nu6PiK,
    Nu6PiP,
    Identity,
    Nu6,
    Other,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Abelian => "abelian",
            Tag::PiK => "piK",
            Tag::PiP => "piP",
            Tag::Nu6PiK => "nu6.piK",
            Tag::Nu6PiP => "nu6.piP",
            Tag::Identity => "identity",
            Tag::Nu6 => "nu6",
            Tag::Other => "other",
        })
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomClass {
    pub tag: Tag,
    /// Canonical images: `s_1, …` for `S_n`, or `σ_1, …, τ_1, …` for `VB_n`.
    pub images: Vec<Permutation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub source: String,
    pub target_degree: usize,
    pub classes: Vec<HomClass>,
    pub raw_count: u64,
    pub certified: bool,
    /// Whether the classes match the catalog; `None` when no catalog
    /// applies.
    pub catalog_match: Option<bool>,
    pub nodes: u64,
}

fn all_commute(images: &[Permutation]) -> bool {
    images
        .iter()
        .enumerate()
        .all(|(a, x)| images[a + 1..].iter().all(|y| x.commutes_with(y)))
}

fn perms(h: &CatalogHom) -> Vec<Permutation> {
    h.images
        .iter()
        .map(|v| match v {
            Value::Perm(p) => p.clone(),
            Value::Vb(_) => unreachable!("catalog maps into S_m here"),
        })
        .collect()
}

/// Canonical tuples of the named non-Abelian maps that exist for
/// `(family, n, m)`.
fn named_classes(family: Family, n: usize, m: usize) -> Result<Vec<(Tag, Vec<Permutation>)>> {
    let mut out = Vec::new();
    if n != m {
        return Ok(out);
    }
    match family {
        Family::Sym => {
            out.push((Tag::Identity, perms(&CatalogHom::identity(crate::vb::Source::Sym(n))?)));
            if n == 6 {
                out.push((Tag::Nu6, perms(&CatalogHom::nu6()?)));
            }
        }
        Family::Vb => {
            let (pk, pp) = (CatalogHom::pi_k(n)?, CatalogHom::pi_p(n)?);
            if n == 6 {
                let nu = CatalogHom::nu6()?;
                out.push((Tag::Nu6PiK, perms(&nu.compose(&pk)?)));
                out.push((Tag::Nu6PiP, perms(&nu.compose(&pp)?)));
            }
            out.push((Tag::PiK, perms(&pk)));
            out.push((Tag::PiP, perms(&pp)));
        }
        Family::Other => {}
    }
    out.into_iter()
        .map(|(t, imgs)| Ok((t, canonical_tuple(&imgs, m)?)))
        .collect()
}

fn tag_of(images: &[Permutation], named: &[(Tag, Vec<Permutation>)]) -> Tag {
    if all_commute(images) {
        return Tag::Abelian;
    }
    named
        .iter()
        .find(|(_, t)| t.as_slice() == images)
        .map_or(Tag::Other, |(tag, _)| *tag)
}

/// Number of Abelian classes predicted independently of the search:
/// every `s_i` goes to one `t` with `t² = 1` for `S_n`; every `σ_i` to one
/// `g` and every `τ_i` to one `t` with `t² = 1`, `gt = tg` for `VB_n`.
pub fn expected_abelian_classes(family: Family, n: usize, m: usize) -> Result<usize> {
    match family {
        Family::Sym => Ok(1 + involution_class_reps(m).len()),
        Family::Vb => {
            let mut seen = std::collections::BTreeSet::new();
            let all = Permutation::all(m);
            let mut involutions = vec![Permutation::identity(m)];
            involutions.extend(involution_class_reps(m));
            for t in &involutions {
                for g in all.iter().filter(|g| g.commutes_with(t)) {
                    let mut tuple = vec![g.clone(); n - 1];
                    tuple.extend(std::iter::repeat_n(t.clone(), n - 1));
                    seen.insert(canonical_tuple(&tuple, m)?);
                }
            }
            Ok(seen.len())
        }
        Family::Other => Err(Error::Precondition("no catalog for this presentation".into())),
    }
}

/// Classifies homomorphisms `P → S_m` and compares with the catalog.
pub fn classify(p: &FinitePresentation, m: usize, opts: &SearchOptions) -> Result<ClassReport> {
    let e = enumerate_homs(p, m, opts)?;
    let named = named_classes(p.family, p.degree, m)?;
    let classes: Vec<HomClass> = e
        .classes
        .iter()
        .map(|t| HomClass {
            tag: tag_of(t, &named),
            images: t.clone(),
        })
        .collect();
    for c in &classes {
        if !satisfies_relators(p, &c.images, m) {
            return Err(Error::SelfCheck(format!("class {:?} violates a relator", c.images)));
        }
    }
    let in_range = p.degree >= 5 && p.degree <= 6 && m >= 2 && m <= p.degree;
    let catalog_match = if p.family == Family::Other || !in_range {
        None
    } else {
        let mut counts: BTreeMap<Tag, usize> = BTreeMap::new();
        for c in &classes {
            *counts.entry(c.tag).or_default() += 1;
        }
        let mut expected: BTreeMap<Tag, usize> = BTreeMap::new();
        expected.insert(Tag::Abelian, expected_abelian_classes(p.family, p.degree, m)?);
        for (t, _) in &named {
            expected.insert(*t, 1);
        }
        Some(counts == expected)
    };
    Ok(ClassReport {
        source: p.name.clone(),
        target_degree: m,
        classes,
        raw_count: e.raw_count,
        certified: catalog_match == Some(true),
        catalog_match,
        nodes: e.nodes,
    })
}

pub fn classify_sym_to_sym(n: usize, m: usize, opts: &SearchOptions) -> Result<ClassReport> {
    classify(&FinitePresentation::symmetric(n), m, opts)
}

pub fn classify_vb_to_sym(n: usize, m: usize, opts: &SearchOptions) -> Result<ClassReport> {
    classify(&FinitePresentation::virtual_braid(n), m, opts)
}
