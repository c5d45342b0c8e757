//! The Coxeter matrix of `KB_n` over the generators `δ_{i,j}`, generator
//! subsets (parabolic subgroups) and free splittings.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The generator `δ_{i,j}` of `KB_n` (1-based, `i ≠ j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Delta {
    pub i: u8,
    pub j: u8,
}

impl Delta {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Delta> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange(format!("δ_{{{i},{j}}} with n = {n}")));
        }
        Ok(Delta {
            i: i as u8,
            j: j as u8,
        })
    }

    pub fn indices(self) -> (usize, usize) {
        (self.i as usize, self.j as usize)
    }

    /// `w(δ_{i,j}) = δ_{w(i),w(j)}`.
    pub fn act(self, w: &Permutation) -> Delta {
        Delta {
            i: w.apply(self.i as usize) as u8,
            j: w.apply(self.j as usize) as u8,
        }
    }

    /// `δ_{j,i}`.
    pub fn reversed(self) -> Delta {
        Delta { i: self.j, j: self.i }
    }

    pub fn involves(self, x: usize) -> bool {
        self.i as usize == x || self.j as usize == x
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}.{}", self.i, self.j)
    }
}

impl fmt::Debug for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Delta {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An entry `m_{s,t}` of the Coxeter matrix of `KB_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Diagonal entry `m_{s,s} = 1`.
    One,
    /// `st = ts`.
    Two,
    /// `sts = tst`.
    Three,
    /// No relation.
    Infinity,
}

impl Label {
    pub fn value(self) -> Option<u32> {
        match self {
            Label::One => Some(1),
            Label::Two => Some(2),
            Label::Three => Some(3),
            Label::Infinity => None,
        }
    }
}

/// `m_{s,t}` for `s, t` generators of `KB_n`.
pub fn kb_label(s: Delta, t: Delta) -> Label {
    if s == t {
        return Label::One;
    }
    let disjoint = !s.involves(t.i as usize) && !s.involves(t.j as usize);
    if disjoint {
        Label::Two
    } else if (s.j == t.i && s.i != t.j) || (t.j == s.i && t.i != s.j) {
        Label::Three
    } else {
        Label::Infinity
    }
}

/// A Coxeter matrix over a list of `δ` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    generators: Vec<Delta>,
    entries: Vec<Vec<Label>>,
}

impl CoxeterMatrix {
    /// The Coxeter matrix over an arbitrary list of generators (sorted and
    /// deduplicated).
    pub fn over(generators: impl IntoIterator<Item = Delta>) -> CoxeterMatrix {
        let generators: Vec<Delta> = generators
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let entries = generators
            .iter()
            .map(|&s| generators.iter().map(|&t| kb_label(s, t)).collect())
            .collect();
        CoxeterMatrix { generators, entries }
    }

    pub fn generators(&self) -> &[Delta] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, s: Delta, t: Delta) -> Option<Label> {
        let a = self.generators.binary_search(&s).ok()?;
        let b = self.generators.binary_search(&t).ok()?;
        Some(self.entries[a][b])
    }

    /// The submatrix `M[X]`.
    pub fn restrict(&self, subset: &GeneratorSubset) -> CoxeterMatrix {
        let idx: Vec<usize> = self
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| subset.contains(**g))
            .map(|(k, _)| k)
            .collect();
        CoxeterMatrix {
            generators: idx.iter().map(|&k| self.generators[k]).collect(),
            entries: idx
                .iter()
                .map(|&a| idx.iter().map(|&b| self.entries[a][b]).collect())
                .collect(),
        }
    }

    /// Unordered pairs carrying the label 3.
    pub fn three_pairs(&self) -> Vec<(Delta, Delta)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.entries[a][b] == Label::Three {
                    out.push((self.generators[a], self.generators[b]));
                }
            }
        }
        out
    }

    pub fn is_symmetric_with_unit_diagonal(&self) -> bool {
        (0..self.len()).all(|a| {
            self.entries[a][a] == Label::One
                && (0..self.len()).all(|b| {
                    self.entries[a][b] == self.entries[b][a]
                        && (a == b || self.entries[a][b] != Label::One)
                })
        })
    }
}

/// The Coxeter matrix of `KB_n` over `S = {δ_{i,j} | 1 ≤ i ≠ j ≤ n}`.
pub fn kb_coxeter_matrix(n: usize) -> CoxeterMatrix {
    CoxeterMatrix::over(GeneratorSubset::full(n).iter())
}

/// A subset `X ⊆ S` of the generators of `KB_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSubset {
    n: usize,
    members: BTreeSet<Delta>,
}

impl GeneratorSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = Delta>) -> Result<GeneratorSubset> {
        let members: BTreeSet<Delta> = members.into_iter().collect();
        for d in &members {
            Delta::new(n, d.i as usize, d.j as usize)?;
        }
        Ok(GeneratorSubset { n, members })
    }

    /// Builds a subset from 1-based index pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<GeneratorSubset> {
        let members = pairs
            .iter()
            .map(|&(i, j)| Delta::new(n, i, j))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSubset::new(n, members)
    }

    pub fn empty(n: usize) -> GeneratorSubset {
        GeneratorSubset {
            n,
            members: BTreeSet::new(),
        }
    }

    /// All of `S`.
    pub fn full(n: usize) -> GeneratorSubset {
        let mut members = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    members.insert(Delta {
                        i: i as u8,
                        j: j as u8,
                    });
                }
            }
        }
        GeneratorSubset { n, members }
    }

    /// Generators whose indices all lie in `indices`.
    pub fn on_indices(n: usize, indices: &[usize]) -> GeneratorSubset {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        GeneratorSubset::full(n).filter(|d| set.contains(&(d.i as usize)) && set.contains(&(d.j as usize)))
    }

    pub fn base(&self) -> usize {
        self.n
    }

    pub fn contains(&self, d: Delta) -> bool {
        self.members.contains(&d)
    }

    pub fn iter(&self) -> impl Iterator<Item = Delta> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn first(&self) -> Option<Delta> {
        self.members.first().copied()
    }

    pub fn filter(&self, keep: impl Fn(Delta) -> bool) -> GeneratorSubset {
        GeneratorSubset {
            n: self.n,
            members: self.members.iter().copied().filter(|&d| keep(d)).collect(),
        }
    }

    pub fn insert(&mut self, d: Delta) {
        self.members.insert(d);
    }

    pub fn remove(&mut self, d: Delta) -> bool {
        self.members.remove(&d)
    }

    pub fn union(&self, other: &GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset {
            n: self.n,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset {
            n: self.n,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn difference(&self, other: &GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset {
            n: self.n,
            members: self.members.difference(&other.members).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &GeneratorSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Image under the index action of `w`.
    pub fn act(&self, w: &Permutation) -> GeneratorSubset {
        GeneratorSubset {
            n: self.n,
            members: self.members.iter().map(|d| d.act(w)).collect(),
        }
    }

    pub fn is_invariant_under(&self, w: &Permutation) -> bool {
        self.act(w) == *self
    }

    /// Invariance under `s_k = (k, k+1)`.
    pub fn is_invariant_under_adjacent(&self, k: usize) -> bool {
        match Permutation::adjacent(self.n, k) {
            Ok(s) => self.is_invariant_under(&s),
            Err(_) => false,
        }
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        CoxeterMatrix::over(self.iter())
    }

    /// True when no pair of members carries the label 3.
    pub fn is_right_angled(&self) -> bool {
        let v: Vec<Delta> = self.iter().collect();
        v.iter()
            .enumerate()
            .all(|(a, &s)| v[a + 1..].iter().all(|&t| kb_label(s, t) != Label::Three))
    }

    /// Connected components of the graph on the members with an edge
    /// wherever `m ≠ ∞`, ordered by their smallest member.
    pub fn finite_components(&self) -> Vec<GeneratorSubset> {
        let v: Vec<Delta> = self.iter().collect();
        let mut comp = vec![usize::MAX; v.len()];
        let mut out = Vec::new();
        for start in 0..v.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = BTreeSet::new();
            while let Some(a) = stack.pop() {
                members.insert(v[a]);
                for b in 0..v.len() {
                    if comp[b] == usize::MAX && kb_label(v[a], v[b]) != Label::Infinity {
                        comp[b] = id;
                        stack.push(b);
                    }
                }
            }
            out.push(GeneratorSubset { n: self.n, members });
        }
        out
    }
}

impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl fmt::Debug for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GeneratorSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A cover `X = X_1 ∪ X_2` with `X_1 ∩ X_2 = base` and every cross entry
/// between `X_1 ∖ base` and `X_2 ∖ base` equal to `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitySplit {
    pub first: GeneratorSubset,
    pub second: GeneratorSubset,
    pub base: GeneratorSubset,
}

/// Splits `X` along the components of its finite-label graph. `first` is
/// the component holding the smallest member; `base` is empty.
pub fn infinity_split(x: &GeneratorSubset) -> Option<InfinitySplit> {
    let comps = x.finite_components();
    if comps.len() < 2 {
        return None;
    }
    let first = comps[0].clone();
    let second = x.difference(&first);
    Some(InfinitySplit {
        first,
        second,
        base: GeneratorSubset::empty(x.base()),
    })
}

/// `X ∩ U_k`: the members of an `s_k`-invariant subset not involving the
/// indices `k, k+1`. Generates the fixed subgroup `KB_n[X]^{s_k}`.
pub fn fixed_generator_subset(x: &GeneratorSubset, k: usize) -> Result<GeneratorSubset> {
    if k == 0 || k >= x.base() {
        return Err(Error::IndexOutOfRange(format!("s_{k} with n = {}", x.base())));
    }
    if !x.is_invariant_under_adjacent(k) {
        return Err(Error::NotInvariant { k });
    }
    Ok(x.filter(|d| !d.involves(k) && !d.involves(k + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: u8, j: u8) -> Delta {
        Delta { i, j }
    }

    #[test]
    fn labels_follow_index_patterns() {
        let m3 = kb_coxeter_matrix(3);
        assert_eq!(m3.get(d(1, 2), d(2, 3)), Some(Label::Three));
        assert_eq!(m3.get(d(1, 2), d(2, 1)), Some(Label::Infinity));
        assert_eq!(m3.get(d(3, 1), d(1, 2)), Some(Label::Three));
        assert_eq!(m3.get(d(1, 2), d(1, 3)), Some(Label::Infinity));
        assert_eq!(m3.get(d(1, 2), d(3, 2)), Some(Label::Infinity));
        let m4 = kb_coxeter_matrix(4);
        assert_eq!(m4.get(d(1, 2), d(3, 4)), Some(Label::Two));
        assert_eq!(m4.len(), 12);
        assert!(m4.is_symmetric_with_unit_diagonal());
    }

    #[test]
    fn restriction_is_coherent() {
        let full = kb_coxeter_matrix(5);
        let x = GeneratorSubset::from_pairs(5, &[(1, 2), (2, 3), (4, 5), (5, 1), (3, 1)]).unwrap();
        assert_eq!(full.restrict(&x), x.coxeter_matrix());
    }

    #[test]
    fn infinity_split_examples() {
        let x = GeneratorSubset::from_pairs(3, &[(1, 2), (2, 1)]).unwrap();
        let split = infinity_split(&x).unwrap();
        assert_eq!(split.first, GeneratorSubset::from_pairs(3, &[(1, 2)]).unwrap());
        assert_eq!(split.second, GeneratorSubset::from_pairs(3, &[(2, 1)]).unwrap());
        assert!(split.base.is_empty());

        let w = GeneratorSubset::full(3);
        let split = infinity_split(&w).unwrap();
        assert_eq!(
            split.first,
            GeneratorSubset::from_pairs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap()
        );
        assert_eq!(
            split.second,
            GeneratorSubset::from_pairs(3, &[(2, 1), (3, 2), (1, 3)]).unwrap()
        );

        let single = GeneratorSubset::from_pairs(3, &[(1, 2)]).unwrap();
        assert!(infinity_split(&single).is_none());
    }

    #[test]
    fn fixed_subset_examples() {
        let s4 = GeneratorSubset::full(4);
        assert_eq!(
            fixed_generator_subset(&s4, 1).unwrap(),
            GeneratorSubset::from_pairs(4, &[(3, 4), (4, 3)]).unwrap()
        );
        let x = GeneratorSubset::from_pairs(4, &[(1, 2), (2, 1)]).unwrap();
        assert!(fixed_generator_subset(&x, 1).unwrap().is_empty());
        assert_eq!(
            fixed_generator_subset(&s4, 3).unwrap(),
            GeneratorSubset::from_pairs(4, &[(1, 2), (2, 1)]).unwrap()
        );
        let not_inv = GeneratorSubset::from_pairs(4, &[(1, 3)]).unwrap();
        assert_eq!(fixed_generator_subset(&not_inv, 1), Err(Error::NotInvariant { k: 1 }));
    }

    #[test]
    fn delta_bounds() {
        assert!(Delta::new(3, 1, 1).is_err());
        assert!(Delta::new(3, 1, 4).is_err());
        assert_eq!(Delta::new(3, 3, 1).unwrap().to_string(), "d3.1");
    }
}
