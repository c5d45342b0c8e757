//! Twisted and hexagon decompositions in `KB_n`, and straightening of
//! sections `S_n → VB_n`.

use std::collections::{HashSet, VecDeque};

use crate::amalgam::engine::{twisted_decompose, Amalgam};
use crate::artin::{kb_label, Delta, GeneratorSubset, Label};
use crate::error::{Error, Result};
use crate::kbeq;
use crate::perm::Permutation;
use crate::vb::catalog::{CatalogHom, HomName, Source, Value};
use crate::vb::semidirect::{sd_inverse, sd_multiply, SemidirectElement};
use crate::vb::word::{KbLetter, KbWord};

/// `KB_n[X] = KB_n[X ∖ {x′}] *_{KB_n[X ∖ {x, x′}]} KB_n[X ∖ {x}]` for a
/// pair with `m(x, x′) = ∞`. Transversal representatives are taken
/// syntactically: a word is split after its last `x^{±1}` or `x′^{±1}`.
pub struct KbPairAmalgam {
    pub n: usize,
    pub x: Delta,
    pub x_prime: Delta,
}

impl KbPairAmalgam {
    fn is_split_letter(&self, l: &KbLetter) -> bool {
        l.gen == self.x || l.gen == self.x_prime
    }
}

impl Amalgam for KbPairAmalgam {
    type Elem = KbWord;

    fn factor_count(&self) -> usize {
        2
    }

    fn identity(&self) -> KbWord {
        KbWord::empty(self.n)
    }

    fn mul(&self, a: &KbWord, b: &KbWord) -> KbWord {
        a.mul(b)
    }

    fn inverse(&self, a: &KbWord) -> KbWord {
        a.inverse()
    }

    fn decompose(&self, j: usize, g: &KbWord) -> Result<(KbWord, KbWord)> {
        let banned = if j == 0 { self.x_prime } else { self.x };
        if g.letters().iter().any(|l| l.gen == banned) {
            return Err(Error::Precondition(format!("{g} is outside factor {j}")));
        }
        let cut = g
            .letters()
            .iter()
            .rposition(|l| self.is_split_letter(l))
            .map_or(0, |p| p + 1);
        Ok(g.split_at(cut))
    }

    fn is_identity(&self, g: &KbWord) -> Result<bool> {
        if g.is_empty() {
            return Ok(true);
        }
        kbeq::kb_is_trivial(g)
    }

    fn factor_pieces(&self, g: &KbWord) -> Result<Vec<(usize, KbWord)>> {
        let mut out: Vec<(usize, KbWord)> = Vec::new();
        for &l in g.letters() {
            let f = if l.gen == self.x {
                0
            } else if l.gen == self.x_prime {
                1
            } else {
                out.last().map_or(0, |(j, _)| *j)
            };
            match out.last_mut() {
                Some((j, w)) if *j == f => w.push(l),
                _ => out.push((f, KbWord::new(self.n, [l])?)),
            }
        }
        Ok(out)
    }
}

fn adjacent(n: usize, k: usize) -> Result<Permutation> {
    Permutation::adjacent(n, k)
}

/// A permutation `g` with `g(k) = 1` and `g(k+1) = 2`, so that
/// `g s_k g⁻¹ = s_1`.
fn relabel_to_front(n: usize, k: usize) -> Permutation {
    let order: Vec<usize> = [k, k + 1].into_iter().chain((1..=n).filter(|&x| x != k && x != k + 1)).collect();
    let mut images = vec![0; n];
    for (t, &x) in order.iter().enumerate() {
        images[x - 1] = t + 1;
    }
    Permutation::from_one_line(&images).expect("bijection")
}

fn check_equal(a: &KbWord, b: &KbWord, what: &str) -> Result<()> {
    match kbeq::kb_equal_decided(a, b) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::Precondition(what.to_string())),
        Err(e) => Err(e),
    }
}

/// Returns `α′` with `a = α′ · s_1(α′)⁻¹`, for `a ∈ KB_n[X]` with
/// `s_1(a) = a⁻¹` and `X` invariant under `s_1`.
///
/// Splits `X` successively along `(δ_{1,2}, δ_{2,1})`, `(δ_{1,k}, δ_{2,k})`
/// and `(δ_{k,1}, δ_{k,2})`, each time peeling off the part outside the
/// base; once no generator involves 1 or 2 the remainder is inverted by a
/// trivial action, hence trivial.
pub fn s1_twisted_decompose(a: &KbWord, x: &GeneratorSubset) -> Result<KbWord> {
    let n = a.strands();
    if x.base() != n {
        return Err(Error::DegreeMismatch { left: x.base(), right: n });
    }
    if n < 2 {
        return Err(Error::IndexOutOfRange("s_1 needs n ≥ 2".into()));
    }
    if !x.is_invariant_under_adjacent(1) {
        return Err(Error::NotInvariant { k: 1 });
    }
    if !a.support().is_subset(x) {
        return Err(Error::Precondition(format!("{a} is not in KB_n[X]")));
    }
    let s1 = adjacent(n, 1)?;
    check_equal(&a.act(&s1), &a.inverse(), "s_1(a) is not a⁻¹")?;

    let d = |i: usize, j: usize| Delta { i: i as u8, j: j as u8 };
    let mut pairs = vec![(d(1, 2), d(2, 1))];
    pairs.extend((3..=n).map(|k| (d(1, k), d(2, k))));
    pairs.extend((3..=n).map(|k| (d(k, 1), d(k, 2))));

    let tau = |w: &KbWord| w.act(&s1);
    let mut current = a.clone();
    let mut x_cur = x.clone();
    let mut acc = KbWord::empty(n);
    for (p, q) in pairs {
        if !x_cur.contains(p) && !x_cur.contains(q) {
            continue;
        }
        let engine = KbPairAmalgam { n, x: p, x_prime: q };
        let (alpha, beta) = twisted_decompose(&engine, &tau, &current)?;
        acc = acc.mul(&alpha);
        current = beta;
        x_cur.remove(p);
        x_cur.remove(q);
        if current.support().iter().any(|g| !x_cur.contains(g)) {
            return Err(Error::Unknown(format!("remainder {current} left the base")));
        }
    }
    // current is inverted by s_1, which now acts trivially on it; KB_n is
    // torsion free, so current = 1
    let back = acc.mul(&acc.act(&s1).inverse());
    match kbeq::kb_equal_decided(&back, a) {
        Ok(true) => Ok(acc),
        Ok(false) => Err(Error::SelfCheck(format!("s_1 decomposition of {a}"))),
        Err(e) => Err(e),
    }
}

/// `s1_twisted_decompose` for `s_k`, by relabeling `k, k+1` to `1, 2`.
pub fn sk_twisted_decompose(a: &KbWord, x: &GeneratorSubset, k: usize) -> Result<KbWord> {
    let n = a.strands();
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!("s_{k} with n = {n}")));
    }
    let g = relabel_to_front(n, k);
    let r = s1_twisted_decompose(&a.act(&g), &x.act(&g))?;
    Ok(r.act(&g.inverse()))
}

/// `α · s_2(α⁻¹) · s_2s_1(α) · s_2s_1s_2(α⁻¹) · s_1s_2(α) · s_1(α⁻¹)`.
pub fn hexagon_lhs(a: &KbWord) -> Result<KbWord> {
    let n = a.strands();
    let (s1, s2) = (adjacent(n, 1)?, adjacent(n, 2)?);
    let s21 = s2.mul_unchecked(&s1);
    let s212 = s21.mul_unchecked(&s2);
    let s12 = s1.mul_unchecked(&s2);
    let inv = a.inverse();
    Ok(a.mul(&inv.act(&s2))
        .mul(&a.act(&s21))
        .mul(&inv.act(&s212))
        .mul(&a.act(&s12))
        .mul(&inv.act(&s1)))
}

/// Writes `w` (up to commutations) as `p · q` with `p` letterwise fixed by
/// `first` and `q` letterwise fixed by `second`, taking `p` as long as
/// possible. Explores at most `limit` rewritings.
pub fn split_fixed_pair(
    w: &KbWord,
    first: &Permutation,
    second: &Permutation,
    limit: usize,
) -> Option<(KbWord, KbWord)> {
    let n = w.strands();
    let fixed = |l: &KbLetter, p: &Permutation| l.gen.act(p) == l.gen;
    let try_split = |letters: &[KbLetter]| {
        let cut = letters.iter().position(|l| !fixed(l, first)).unwrap_or(letters.len());
        if letters[cut..].iter().all(|l| fixed(l, second)) {
            let p = KbWord::new(n, letters[..cut].iter().copied()).expect("valid");
            let q = KbWord::new(n, letters[cut..].iter().copied()).expect("valid");
            Some((p, q))
        } else {
            None
        }
    };
    let start = w.letters().to_vec();
    let mut seen: HashSet<Vec<KbLetter>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if let Some(r) = try_split(&s) {
            return Some(r);
        }
        for p in 0..s.len().saturating_sub(1) {
            if s[p].gen != s[p + 1].gen && kb_label(s[p].gen, s[p + 1].gen) == Label::Two {
                let mut v = s.clone();
                v.swap(p, p + 1);
                if seen.len() < limit && seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    None
}

const SPLIT_LIMIT: usize = 4096;

/// Returns `(α′, α″)` with `a = α′ α″`, `s_1(α′) = α′` and `s_2(α″) = α″`,
/// for `a` satisfying the hexagon equation. Letters fixed by `s_1` are
/// pushed into `α′` greedily from the left.
pub fn hexagon_decompose(a: &KbWord, x: &GeneratorSubset) -> Result<(KbWord, KbWord)> {
    let n = a.strands();
    if n < 3 {
        return Err(Error::IndexOutOfRange("s_1, s_2 need n ≥ 3".into()));
    }
    if x.base() != n {
        return Err(Error::DegreeMismatch { left: x.base(), right: n });
    }
    if !x.is_invariant_under_adjacent(1) {
        return Err(Error::NotInvariant { k: 1 });
    }
    if !x.is_invariant_under_adjacent(2) {
        return Err(Error::NotInvariant { k: 2 });
    }
    if !a.support().is_subset(x) {
        return Err(Error::Precondition(format!("{a} is not in KB_n[X]")));
    }
    let lhs = hexagon_lhs(a)?;
    check_equal(&lhs, &KbWord::empty(n), "hexagon equation fails")?;
    let (s1, s2) = (adjacent(n, 1)?, adjacent(n, 2)?);
    let (p, q) = split_fixed_pair(a, &s1, &s2, SPLIT_LIMIT)
        .ok_or_else(|| Error::Unknown(format!("no fixed split of {a} found")))?;
    if !p.is_letterwise_fixed(&s1) || !q.is_letterwise_fixed(&s2) || p.mul(&q) != *a {
        return Err(Error::SelfCheck(format!("hexagon split of {a}")));
    }
    Ok((p, q))
}

/// For images `φ(s_i) = (a_i, s_i)` of a homomorphism `S_n → VB_n`,
/// returns `β` with `β⁻¹ φ(s_i) β = ι(s_i)` for every `i`.
///
/// Proceeds by induction on `k`: with `φ(s_1), …, φ(s_{k-1})` already
/// straight, `a_k` is written as `b · s_k(b)⁻¹`; then `b⁻¹ = d · e` with
/// `d` fixed by `s_k` and `e` fixed by `s_{k-1}`, and conjugation by `e`
/// straightens `φ(s_k)` without disturbing the earlier images.
pub fn straighten_symmetric_section(images: &[SemidirectElement], budget: u64) -> Result<KbWord> {
    let n = images.len() + 1;
    for (k, img) in images.iter().enumerate() {
        if img.strands() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: img.strands(),
            });
        }
        if img.perm != adjacent(n, k + 1)? {
            return Err(Error::Precondition(format!("image {} has permutation {}", k + 1, img.perm)));
        }
    }
    let values = images.iter().cloned().map(Value::Vb).collect();
    match CatalogHom::new(HomName::Given, Source::Sym(n), Source::Vb(n), values) {
        Ok(_) => {}
        Err(Error::SelfCheck(m)) => return Err(Error::Precondition(m)),
        Err(e) => return Err(e),
    }

    let full = GeneratorSubset::full(n);
    let mut current: Vec<SemidirectElement> = images.to_vec();
    // total conjugator C with current = C φ C⁻¹
    let mut total = SemidirectElement::identity(n);
    for k in 1..n {
        let a = current[k - 1].kb.clone();
        if a.is_empty() {
            continue;
        }
        let b = sk_twisted_decompose(&a, &full, k)?;
        let c = if k == 1 {
            b.inverse()
        } else {
            let (sk, sk1) = (adjacent(n, k)?, adjacent(n, k - 1)?);
            let (_, e) = split_fixed_pair(&b.inverse(), &sk, &sk1, SPLIT_LIMIT)
                .ok_or_else(|| Error::Unknown(format!("no fixed split of {} at step {k}", b.inverse())))?;
            e
        };
        let g = SemidirectElement::from_kb(c);
        for img in current.iter_mut() {
            *img = img.conjugate_by(&g);
        }
        total = sd_multiply(&g, &total)?;
    }
    let beta = sd_inverse(&total).kb;
    let g = SemidirectElement::from_kb(beta.inverse());
    for (k, img) in images.iter().enumerate() {
        let straight = img.conjugate_by(&g);
        let ok = straight.perm == adjacent(n, k + 1)?
            && kbeq::kb_equal(&straight.kb, &KbWord::empty(n), budget)?.is_equal();
        if !ok {
            return Err(Error::Unknown(format!("conjugate of image {} not certified", k + 1)));
        }
    }
    Ok(beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str, n: usize) -> KbWord {
        KbWord::parse(t, n).unwrap()
    }

    #[test]
    fn s1_examples() {
        let full = GeneratorSubset::full(3);
        assert!(s1_twisted_decompose(&w("e", 3), &full).unwrap().is_empty());
        let r = s1_twisted_decompose(&w("d1.2 d2.1'", 3), &full).unwrap();
        assert_eq!(r, w("d1.2", 3));
        let r = s1_twisted_decompose(&w("d1.2 d1.3 d2.3' d2.1'", 3), &full).unwrap();
        assert_eq!(r, w("d1.2 d1.3", 3));
        assert!(s1_twisted_decompose(&w("d1.2", 3), &full).is_err());
    }

    #[test]
    fn sk_relabels() {
        let full = GeneratorSubset::full(4);
        let a = w("d2.3 d3.2'", 4);
        let r = sk_twisted_decompose(&a, &full, 2).unwrap();
        let s2 = Permutation::adjacent(4, 2).unwrap();
        assert_eq!(r.mul(&r.act(&s2).inverse()), a);
    }

    #[test]
    fn hexagon_examples() {
        let full = GeneratorSubset::full(4);
        let (p, q) = hexagon_decompose(&w("e", 4), &full).unwrap();
        assert!(p.is_empty() && q.is_empty());
        assert_eq!(hexagon_decompose(&w("d3.4 d1.4", 4), &full).unwrap(), (w("d3.4", 4), w("d1.4", 4)));
        assert_eq!(hexagon_decompose(&w("d4.3", 4), &full).unwrap(), (w("d4.3", 4), w("e", 4)));
        assert!(hexagon_decompose(&w("d1.2", 4), &full).is_err());
    }

    #[test]
    fn straighten_examples() {
        let n = 4;
        let iota: Vec<SemidirectElement> = (1..n)
            .map(|i| SemidirectElement::from_perm(Permutation::adjacent(n, i).unwrap()))
            .collect();
        assert!(straighten_symmetric_section(&iota, 1000).unwrap().is_empty());
        let b0 = SemidirectElement::from_kb(w("d1.2 d2.1", n));
        let imgs: Vec<SemidirectElement> = iota.iter().map(|x| x.conjugate_by(&b0)).collect();
        let beta = straighten_symmetric_section(&imgs, 1000).unwrap();
        let g = SemidirectElement::from_kb(beta.inverse());
        for (i, x) in imgs.iter().enumerate() {
            let y = x.conjugate_by(&g);
            assert_eq!(y.perm, Permutation::adjacent(n, i + 1).unwrap());
            assert!(kbeq::kb_is_trivial(&y.kb).unwrap());
        }
    }

    #[test]
    fn straighten_rejects_non_homomorphism() {
        let n = 4;
        let mut imgs: Vec<SemidirectElement> = (1..n)
            .map(|i| SemidirectElement::from_perm(Permutation::adjacent(n, i).unwrap()))
            .collect();
        imgs[0].kb = w("d1.2 d2.1'", n);
        assert!(straighten_symmetric_section(&imgs, 1000).is_err());
    }
}
