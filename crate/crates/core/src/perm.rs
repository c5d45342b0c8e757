//! Permutations of `{1, …, n}` and brute-force computations in `S_n`.
//!
//! Composition convention: `p.compose(q)` is the map `x ↦ p(q(x))`, so the
//! right factor acts first. A word `s_{i_1} s_{i_2} ⋯ s_{i_k}` evaluates to
//! `s_{i_1} ∘ s_{i_2} ∘ ⋯ ∘ s_{i_k}`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest degree accepted by [`centralizer`].
pub const CENTRALIZER_MAX_DEGREE: usize = 8;
/// Largest degree accepted by [`canonical_tuple`].
pub const CANONICAL_MAX_DEGREE: usize = 6;

/// An element of `S_n` stored in one-line form (0-based internally).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line form.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping cycles
    /// (1-based). The product is `c_1 ∘ c_2 ∘ ⋯`, rightmost acting first.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<u8> = (0..n as u8).collect();
            let mut seen = std::collections::BTreeSet::new();
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange(format!("{x} in cycle for degree {n}")));
                }
                if !seen.insert(x) {
                    return Err(Error::Parse(format!("repeated point {x} in cycle")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                images[x - 1] = (next - 1) as u8;
            }
            acc = acc.mul_unchecked(&Permutation { images });
        }
        Ok(acc)
    }

    /// The transposition `(i, j)` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange(format!("transposition ({i},{j}) in S_{n}")));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The Coxeter generator `s_i = (i, i+1)`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in S_{n}")));
        }
        Permutation::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// One-line form, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize] = k as u8;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.mul_unchecked(&self.mul_unchecked(&g.inverse()))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.mul_unchecked(other) == other.mul_unchecked(self)
    }

    /// Cycle lengths (including fixed points), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.cycles(true).iter().map(Vec::len).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Disjoint cycles (1-based), each starting at its smallest point.
    pub fn cycles(&self, with_fixed_points: bool) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if with_fixed_points || cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word `[i_1, …, i_k]` with `self = s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::new();
        loop {
            let n = p.degree();
            let Some(i) = (0..n.saturating_sub(1)).find(|&k| p.images[k] > p.images[k + 1]) else {
                break;
            };
            // p = p' ∘ s_{i+1} with p' = p ∘ s_{i+1}
            p.images.swap(i, i + 1);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// All elements of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }

    /// Parses one-line `[2,1,3]` or cycle form `(1,2)(3,4)`; `()` and `id`
    /// denote the identity.
    pub fn parse(text: &str, n: usize) -> Result<Permutation> {
        let t = text.trim();
        if t.is_empty() || t == "id" || t == "()" {
            return Ok(Permutation::identity(n));
        }
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("unterminated one-line form {t:?}")))?;
            let values = parse_usize_list(inner)?;
            let p = Permutation::from_one_line(&values)?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: n,
                });
            }
            return Ok(p);
        }
        if t.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = t;
            while !rest.is_empty() {
                let rest_trim = rest.trim_start();
                let body_end = rest_trim
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced cycle in {t:?}")))?;
                let body = rest_trim
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("expected '(' in {t:?}")))?;
                let inner = &body[..body_end - 1];
                if !inner.trim().is_empty() {
                    cycles.push(parse_usize_list(inner)?);
                }
                rest = rest_trim[body_end + 1..].trim_start();
            }
            return Permutation::from_cycles(n, &cycles);
        }
        Err(Error::Parse(format!("unrecognized permutation {t:?}")))
    }

    /// Cycle notation without fixed points, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles(false);
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", items.join(","))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
        })
        .collect()
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `p ∘ q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

fn check_degrees(items: &[Permutation], n: usize) -> Result<()> {
    for p in items {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: n,
            });
        }
    }
    Ok(())
}

/// All `g ∈ S_n` commuting with every element of `gens`, in lex order.
pub fn centralizer(gens: &[Permutation], n: usize) -> Result<Vec<Permutation>> {
    if n > CENTRALIZER_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: CENTRALIZER_MAX_DEGREE,
        });
    }
    check_degrees(gens, n)?;
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|g| gens.iter().all(|x| g.commutes_with(x)))
        .collect())
}

/// Lexicographically minimal simultaneous conjugate of `tuple` over `S_m`.
pub fn canonical_tuple(tuple: &[Permutation], m: usize) -> Result<Vec<Permutation>> {
    if m > CANONICAL_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            n: m,
            max: CANONICAL_MAX_DEGREE,
        });
    }
    check_degrees(tuple, m)?;
    Ok(canonical_tuple_with(tuple, &Permutation::all(m)))
}

/// Same as [`canonical_tuple`] with a precomputed list of conjugators.
pub(crate) fn canonical_tuple_with(tuple: &[Permutation], group: &[Permutation]) -> Vec<Permutation> {
    let mut best: Option<Vec<Permutation>> = None;
    for g in group {
        let inv = g.inverse();
        let mut candidate = Vec::with_capacity(tuple.len());
        let mut worse = false;
        for (k, x) in tuple.iter().enumerate() {
            let c = g.mul_unchecked(&x.mul_unchecked(&inv));
            if let Some(b) = &best {
                // prune as soon as the prefix is decided
                if candidate.as_slice() == &b[..k] && c > b[k] {
                    worse = true;
                    break;
                }
            }
            candidate.push(c);
        }
        if worse {
            continue;
        }
        if best.as_ref().is_none_or(|b| &candidate < b) {
            best = Some(candidate);
        }
    }
    best.unwrap_or_default()
}

/// Images `(u_1, …, u_5)` of the Coxeter generators under the exceptional
/// outer automorphism `ν_6` of `S_6`.
pub fn nu6_images() -> [Permutation; 5] {
    let c = |cycles: &[[usize; 2]; 3]| {
        let v: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(6, &v).expect("static cycles")
    };
    [
        c(&[[1, 2], [3, 4], [5, 6]]),
        c(&[[2, 3], [1, 5], [4, 6]]),
        c(&[[1, 3], [2, 4], [5, 6]]),
        c(&[[1, 2], [3, 5], [4, 6]]),
        c(&[[2, 3], [1, 4], [5, 6]]),
    ]
}

/// The permutation `w_0 = (1,6,2,5,3)` whose conjugation equals `ν_6²`.
pub fn nu6_square_conjugator() -> Permutation {
    Permutation::from_cycles(6, &[vec![1, 6, 2, 5, 3]]).expect("static cycle")
}

/// Evaluates the homomorphism `S_n → S_m` given by the images of the Coxeter
/// generators on an arbitrary permutation, via a reduced word.
pub fn eval_on_generators(images: &[Permutation], p: &Permutation, m: usize) -> Permutation {
    p.reduced_word()
        .into_iter()
        .fold(Permutation::identity(m), |acc, i| acc.mul_unchecked(&images[i - 1]))
}

/// One representative `(1,2)(3,4)⋯(2k-1,2k)` per conjugacy class of
/// involutions in `S_m`, for `k = 1, …, ⌊m/2⌋`.
pub fn involution_class_reps(m: usize) -> Vec<Permutation> {
    (1..=m / 2)
        .map(|k| {
            let cycles: Vec<Vec<usize>> = (0..k).map(|t| vec![2 * t + 1, 2 * t + 2]).collect();
            Permutation::from_cycles(m, &cycles).expect("disjoint transpositions")
        })
        .collect()
}

/// One representative per conjugacy class of `S_m` (one per cycle type),
/// each the lexicographically smallest element of its class.
pub fn conjugacy_class_reps(m: usize) -> Vec<Permutation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for p in Permutation::all(m) {
        if seen.insert(p.cycle_type()) {
            reps.push(p);
        }
    }
    reps
}

/// Checks the Coxeter presentation of `S_{k+1}` on `k` images.
pub fn satisfies_coxeter_relations(images: &[Permutation]) -> bool {
    let k = images.len();
    for i in 0..k {
        if !images[i].mul_unchecked(&images[i]).is_identity() {
            return false;
        }
        for j in i + 1..k {
            let (a, b) = (&images[i], &images[j]);
            if j - i >= 2 {
                if !a.commutes_with(b) {
                    return false;
                }
            } else {
                let lhs = a.mul_unchecked(b).mul_unchecked(a);
                let rhs = b.mul_unchecked(a).mul_unchecked(b);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, i: usize) -> Permutation {
        Permutation::adjacent(n, i).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        let p = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(compose(&id, &p).unwrap(), p);
        // s_1 ∘ s_2 ∘ s_1 computed by hand: 1 ↦ 3, 2 ↦ 2, 3 ↦ 1
        let r = compose(&s(3, 1), &compose(&s(3, 2), &s(3, 1)).unwrap()).unwrap();
        assert_eq!(r.one_line(), vec![3, 2, 1]);
        let w0 = nu6_square_conjugator();
        assert!(compose(&w0, &w0.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_convention_right_acts_first() {
        let p = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        let q = Permutation::from_one_line(&[1, 3, 2]).unwrap();
        let pq = p.compose(&q).unwrap();
        for x in 1..=3 {
            assert_eq!(pq.apply(x), p.apply(q.apply(x)));
        }
    }

    #[test]
    fn degree_mismatch_is_error() {
        let e = Permutation::identity(3).compose(&Permutation::identity(4));
        assert_eq!(e, Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn centralizer_examples() {
        let c = centralizer(&[s(5, 3), s(5, 4)], 5).unwrap();
        assert_eq!(c, vec![Permutation::identity(5), s(5, 1)]);
        assert_eq!(centralizer(&[], 3).unwrap().len(), 6);
        let t = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(centralizer(std::slice::from_ref(&t), 3).unwrap(), vec![Permutation::identity(3), t]);
        assert!(matches!(
            centralizer(&[], 9),
            Err(Error::DegreeTooLarge { n: 9, max: 8 })
        ));
    }

    #[test]
    fn canonical_tuple_examples() {
        let id = Permutation::identity(3);
        assert_eq!(canonical_tuple(&[id.clone(), id.clone()], 3).unwrap(), vec![id.clone(), id]);
        let a = Permutation::transposition(3, 2, 3).unwrap();
        let b = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(canonical_tuple(&[a], 3).unwrap(), canonical_tuple(&[b], 3).unwrap());
        assert!(canonical_tuple(&[], 7).is_err());
    }

    #[test]
    fn nu6_examples() {
        let u = nu6_images();
        assert_eq!(u[0].cycle_string(), "(1,2)(3,4)(5,6)");
        assert_eq!(u[1], Permutation::parse("(2,3)(1,5)(4,6)", 6).unwrap());
        assert!(satisfies_coxeter_relations(&u));
        // ν_6² is conjugation by w_0, checked on every generator
        let w0 = nu6_square_conjugator();
        for i in 1..=5 {
            let twice = eval_on_generators(&u, &u[i - 1], 6);
            assert_eq!(twice, s(6, i).conjugate_by(&w0), "generator s_{i}");
        }
    }

    #[test]
    fn involution_reps_examples() {
        assert_eq!(involution_class_reps(2), vec![s(2, 1)]);
        let r4: Vec<String> = involution_class_reps(4).iter().map(|p| p.cycle_string()).collect();
        assert_eq!(r4, vec!["(1,2)", "(1,2)(3,4)"]);
        let r5: Vec<String> = involution_class_reps(5).iter().map(|p| p.cycle_string()).collect();
        assert_eq!(r5, vec!["(1,2)", "(1,2)(3,4)"]);
    }

    #[test]
    fn involution_reps_match_enumeration() {
        // oracle: classify all order-2 elements of S_m by cycle type
        for m in 2..=6 {
            let mut types: Vec<Vec<usize>> = Permutation::all(m)
                .into_iter()
                .filter(|p| p.order() == 2)
                .map(|p| p.cycle_type())
                .collect();
            types.sort();
            types.dedup();
            let mut rep_types: Vec<Vec<usize>> =
                involution_class_reps(m).iter().map(|p| p.cycle_type()).collect();
            rep_types.sort();
            assert_eq!(types, rep_types, "m = {m}");
        }
    }

    #[test]
    fn parse_and_print() {
        let p = Permutation::parse("[2,1,3]", 3).unwrap();
        assert_eq!(p.to_string(), "[2,1,3]");
        assert_eq!(Permutation::parse("(1,2)", 3).unwrap(), p);
        assert_eq!(Permutation::parse("(1, 3)(2)", 3).unwrap().one_line(), vec![3, 2, 1]);
        assert!(Permutation::parse("[1,1,3]", 3).is_err());
        assert!(Permutation::parse("[1,2]", 3).is_err());
        assert!(Permutation::parse("(1,4)", 3).is_err());
        assert!(Permutation::parse("id", 4).unwrap().is_identity());
    }

    #[test]
    fn reduced_word_evaluates_back() {
        for p in Permutation::all(5) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            let back = w
                .iter()
                .fold(Permutation::identity(5), |acc, &i| acc.compose(&s(5, i)).unwrap());
            assert_eq!(back, p);
        }
    }

    #[test]
    fn all_is_lex_sorted_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
