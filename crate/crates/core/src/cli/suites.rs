//! Verification suites shared by `vbw verify` and the acceptance tests.

use rand::distributions::uniform::SampleRange;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::amalgam::{
    amalgam_normal_form, hexagon_decompose, normal_form_of, s1_twisted_decompose, twisted_decompose, Amalgam,
    FreeAmalgam, FreeWord,
};
use crate::artin::{kb_label, Delta, GeneratorSubset, Label};
use crate::error::{Error, Result};
use crate::kbeq::{self, dihedral_normal_form, EqVerdict};
use crate::perm::{canonical_tuple, nu6_images, nu6_square_conjugator, satisfies_coxeter_relations, Permutation};
use crate::vb::abelian::{kb_abelianize, vb_abelianize};
use crate::vb::catalog::{CatalogHom, Source, Value as HomValue};
use crate::vb::relations::vb_relators;
use crate::vb::semidirect::{from_semidirect, to_semidirect};
use crate::vb::word::{KbLetter, KbWord};

pub const SUITES: [&str; 9] = [
    "relations",
    "catalog",
    "nu6",
    "lemma3_8",
    "lemma3_9",
    "lemma3_11",
    "lemma6_0",
    "normalform",
    "kbeq_fuzz",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
    pub unknown_rate: f64,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    fn new(suite: &str, cases: Vec<Case>) -> SuiteReport {
        let count = |o| cases.iter().filter(|c| c.outcome == o).count();
        let (passed, failed, unknown) = (count(Outcome::Pass), count(Outcome::Fail), count(Outcome::Unknown));
        SuiteReport {
            suite: suite.to_string(),
            passed,
            failed,
            unknown,
            unknown_rate: if cases.is_empty() { 0.0 } else { unknown as f64 / cases.len() as f64 },
            cases,
        }
    }

    /// No failures; unknowns are tolerated up to `max_unknown_rate`.
    pub fn ok(&self, max_unknown_rate: f64) -> bool {
        self.failed == 0 && self.unknown_rate <= max_unknown_rate
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Randomized cases per check; the suites' nominal sizes by default.
    pub cases: Option<usize>,
    pub budget: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0x5eed,
            cases: None,
            budget: kbeq::DEFAULT_BUDGET,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let cases = match name {
        "relations" => relations(opts),
        "catalog" => catalog()?,
        "nu6" => nu6()?,
        "lemma3_8" => lemma3_8(opts),
        "lemma3_9" => lemma3_9(opts),
        "lemma3_11" => lemma3_11(opts),
        "lemma6_0" => lemma6_0(opts),
        "normalform" => normalform(opts),
        "kbeq_fuzz" => kbeq_fuzz(opts),
        _ => return Err(Error::Parse(format!("unknown suite {name:?}; expected one of {SUITES:?}"))),
    };
    Ok(SuiteReport::new(name, cases))
}

fn case(name: impl Into<String>, pass: bool, detail: Value) -> Case {
    Case {
        name: name.into(),
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        detail,
    }
}

fn from_result(name: impl Into<String>, r: Result<bool>, detail: Value) -> Case {
    let name = name.into();
    match r {
        Ok(p) => case(name, p, detail),
        Err(e @ (Error::Unknown(_) | Error::BudgetExceeded(_))) => Case {
            name,
            outcome: Outcome::Unknown,
            detail: json!({"reason": e.to_string(), "input": detail}),
        },
        Err(e) => case(name, false, json!({"error": e.to_string(), "input": detail})),
    }
}

fn rng(opts: &SuiteOptions, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn random_kb_word(
    rng: &mut impl Rng,
    n: usize,
    len: impl SampleRange<usize>,
    keep: impl Fn(Delta) -> bool) -> KbWord {
    let gens: Vec<Delta> = GeneratorSubset::full(n).iter().filter(|&d| keep(d)).collect();
    let len = rng.gen_range(len);
    let mut w = KbWord::empty(n);
    if gens.is_empty() {
        return w;
    }
    for _ in 0..len {
        let d = *gens.choose(rng).expect("nonempty");
        w.push(KbLetter { gen: d, inverse: rng.gen() });
    }
    w
}

fn relations(opts: &SuiteOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 3..=7 {
        for (name, r) in vb_relators(n) {
            let x = to_semidirect(&r);
            let v = kbeq::kb_equal(&x.kb, &KbWord::empty(n), opts.budget);
            let detail = json!({"kb": x.kb, "verdict": v.as_ref().ok()});
            let label = format!("n={n} {name}");
            out.push(match v {
                Ok(EqVerdict::Equal { .. }) if x.perm.is_identity() => case(label, true, detail),
                Ok(EqVerdict::Unknown { .. }) => Case {
                    name: label,
                    outcome: Outcome::Unknown,
                    detail,
                },
                _ => case(label, false, detail),
            });
        }
    }
    out
}

fn catalog() -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in 3..=6 {
        let z1 = CatalogHom::zeta1(n)?;
        let z2 = CatalogHom::zeta2(n)?;
        let id = CatalogHom::identity(Source::Vb(n))?;
        out.push(from_result(format!("n={n} zeta1^2 = id"), z1.compose(&z1)?.agrees_with(&id), Value::Null));
        out.push(from_result(format!("n={n} zeta2^2 = id"), z2.compose(&z2)?.agrees_with(&id), Value::Null));
        out.push(from_result(
            format!("n={n} zeta1 zeta2 = zeta2 zeta1"),
            z1.compose(&z2)?.agrees_with(&z2.compose(&z1)?),
            Value::Null,
        ));
        let iota = CatalogHom::iota(n)?;
        let sid = CatalogHom::identity(Source::Sym(n))?;
        out.push(from_result(format!("n={n} piK iota = id"), CatalogHom::pi_k(n)?.compose(&iota)?.agrees_with(&sid), Value::Null));
        out.push(from_result(format!("n={n} piP iota = id"), CatalogHom::pi_p(n)?.compose(&iota)?.agrees_with(&sid), Value::Null));
        let ab = |h: &CatalogHom| -> Vec<(i64, u8)> {
            h.images
                .iter()
                .map(|v| match v {
                    HomValue::Vb(x) => vb_abelianize(&from_semidirect(x)),
                    HomValue::Perm(_) => unreachable!("endomorphism of VB_n"),
                })
                .collect()
        };
        let (a1, a2, a0) = (ab(&z1), ab(&z2), ab(&id));
        out.push(case(
            format!("n={n} zeta2 acts nontrivially on the abelianization"),
            a2 != a0 && a2.iter().take(n - 1).all(|&(d, p)| d == -1 && p == 0),
            json!({"zeta2": a2, "identity": a0}),
        ));
        out.push(case(
            format!("n={n} zeta1 fixes the abelianization"),
            a1 == a0,
            json!({"zeta1": a1}),
        ));
    }
    Ok(out)
}

fn nu6() -> Result<Vec<Case>> {
    let imgs = nu6_images();
    let w0 = nu6_square_conjugator();
    let mut out = vec![case("nu6 images satisfy the S_6 relations", satisfies_coxeter_relations(&imgs), Value::Null)];
    let nu = CatalogHom::nu6()?;
    for (i, u) in imgs.iter().enumerate() {
        let twice = match nu.eval_value(&HomValue::Perm(u.clone()))? {
            HomValue::Perm(p) => p,
            HomValue::Vb(_) => unreachable!("S_6 target"),
        };
        let s = Permutation::adjacent(6, i + 1)?;
        let expected = s.conjugate_by(&w0);
        out.push(case(
            format!("nu6^2(s{}) = w0 s{} w0^-1", i + 1, i + 1),
            twice == expected,
            json!({"nu6^2": twice, "expected": expected}),
        ));
    }
    let identity: Vec<Permutation> = (1..6).map(|i| Permutation::adjacent(6, i)).collect::<Result<_>>()?;
    out.push(case(
        "nu6 is not conjugate to the identity",
        canonical_tuple(&imgs, 6)? != canonical_tuple(&identity, 6)?,
        Value::Null,
    ));
    Ok(out)
}

fn count(opts: &SuiteOptions, nominal: usize) -> usize {
    opts.cases.unwrap_or(nominal)
}

fn random_free(rng: &mut impl Rng, gens: &[i32], len: impl SampleRange<usize>) -> FreeWord {
    let len = rng.gen_range(len);
    FreeWord::new((0..len).map(|_| {
        let g = *gens.choose(rng).expect("generators");
        if rng.gen() {
            g
        } else {
            -g
        }
    }))
}

fn lemma3_8(opts: &SuiteOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for (label, g) in [("free", FreeAmalgam::free_product()), ("cyclic", FreeAmalgam::cyclic_amalgam())] {
        let mut r = rng(opts, 38 + label.len() as u64);
        let gens = g.generators();
        let tau = |x: &FreeWord| g.swap(x);
        for k in 0..count(opts, 200) {
            let a = random_free(&mut r, &gens, 0..10);
            let b = if g.base.is_empty() {
                FreeWord::default()
            } else {
                FreeWord::new(std::iter::repeat_n(1, r.gen_range(0..4)))
            };
            let alpha = a.mul(&b).mul(&tau(&a).inverse());
            let detail = json!({"alpha": alpha});
            let res = twisted_decompose(&g, &tau, &alpha).map(|(x, y)| {
                let back = x.mul(&y).mul(&tau(&x).inverse());
                back == alpha && tau(&y) == y.inverse() && y.letters().iter().all(|l| g.in_base(*l))
            });
            out.push(from_result(format!("{label} #{k}"), res, detail));
        }
    }
    out
}

fn lemma3_9(opts: &SuiteOptions) -> Vec<Case> {
    let mut r = rng(opts, 39);
    let mut out = Vec::new();
    for k in 0..count(opts, 200) {
        let n = r.gen_range(3..=6);
        let witness = random_kb_word(&mut r, n, 0..=8, |_| true);
        let s1 = Permutation::adjacent(n, 1).expect("n ≥ 2");
        let a = witness.mul(&witness.act(&s1).inverse());
        let detail = json!({"n": n, "a": a, "witness": witness});
        let res = s1_twisted_decompose(&a, &GeneratorSubset::full(n)).and_then(|x| {
            let back = x.mul(&x.act(&s1).inverse());
            Ok(kbeq::kb_equal(&back, &a, opts.budget)?.is_equal())
        });
        out.push(from_result(format!("#{k}"), res, detail));
    }
    out
}

fn lemma3_11(opts: &SuiteOptions) -> Vec<Case> {
    let mut r = rng(opts, 311);
    let mut out = Vec::new();
    for k in 0..count(opts, 200) {
        let n = r.gen_range(4..=6);
        let p = random_kb_word(&mut r, n, 0..=5, |d| !d.involves(1) && !d.involves(2));
        let q = random_kb_word(&mut r, n, 0..=5, |d| !d.involves(2) && !d.involves(3));
        let a = p.mul(&q);
        let detail = json!({"n": n, "a": a, "witness": [p, q]});
        let (s1, s2) = (Permutation::adjacent(n, 1).expect("n"), Permutation::adjacent(n, 2).expect("n"));
        let res = hexagon_decompose(&a, &GeneratorSubset::full(n)).and_then(|(x, y)| {
            let fixed = x.is_letterwise_fixed(&s1) && y.is_letterwise_fixed(&s2);
            Ok(fixed && kbeq::kb_equal(&x.mul(&y), &a, opts.budget)?.is_equal())
        });
        out.push(from_result(format!("#{k}"), res, detail));
    }
    out
}

fn lemma6_0(opts: &SuiteOptions) -> Vec<Case> {
    let n = 4;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let a = Delta::new(n, i, j).expect("valid");
                let b = Delta::new(n, j, k).expect("valid");
                debug_assert_eq!(kb_label(a, b), Label::Three);
                for l1 in -5i64..=5 {
                    for l2 in -5i64..=5 {
                        let mut w = KbWord::power(n, a, l1);
                        w.push_power(b, l2);
                        let form = dihedral_normal_form(&w, a, b);
                        let empty = dihedral_normal_form(&KbWord::empty(n), a, b);
                        let trivial = match (&form, &empty) {
                            (Ok(f), Ok(e)) => f == e,
                            _ => {
                                out.push(case(format!("{a}^{l1} {b}^{l2}"), false, json!({"error": "no form"})));
                                continue;
                            }
                        };
                        let agrees = kbeq::kb_equal(&w, &KbWord::empty(n), opts.budget)
                            .map(|v| v.is_equal() == trivial && (v.is_equal() || v.is_distinct()))
                            .unwrap_or(false);
                        out.push(case(
                            format!("{a}^{l1} {b}^{l2}"),
                            trivial == (l1 == 0 && l2 == 0) && agrees,
                            Value::Null,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Splits a free word into factor pieces at random cut points.
fn random_pieces(rng: &mut impl Rng, g: &FreeAmalgam, w: &FreeWord) -> Result<Vec<(usize, FreeWord)>> {
    let mut out = Vec::new();
    for (j, piece) in g.factor_pieces(w)? {
        let mut rest = piece.letters().to_vec();
        while !rest.is_empty() {
            let cut = rng.gen_range(1..=rest.len());
            let head: Vec<i32> = rest.drain(..cut).collect();
            out.push((j, FreeWord::new(head)));
        }
    }
    Ok(out)
}

fn normalform(opts: &SuiteOptions) -> Vec<Case> {
    let mut out = Vec::new();
    for (label, g) in [("free", FreeAmalgam::free_product()), ("cyclic", FreeAmalgam::cyclic_amalgam())] {
        let mut r = rng(opts, 6 + label.len() as u64);
        let gens = g.generators();
        for k in 0..count(opts, 1000) {
            let w = random_free(&mut r, &gens, 0..14);
            let res = (|| -> Result<bool> {
                let nf = normal_form_of(&g, &w)?;
                let again = amalgam_normal_form(&g, &random_pieces(&mut r, &g, &w)?)?;
                let mut pieces = nf.syllables.clone();
                if !nf.base.is_empty() {
                    pieces.push((0, nf.base.clone()));
                }
                let idem = amalgam_normal_form(&g, &pieces)?;
                let alternating = nf.syllables.windows(2).all(|p| p[0].0 != p[1].0);
                Ok(nf == again && nf == idem && nf.value(&g) == w && alternating)
            })();
            out.push(from_result(format!("{label} unique #{k}"), res, json!({"word": w})));
        }
        // ℓ = 0 exactly on H
        let base_gens: Vec<i32> = g.base.clone();
        let outside: Vec<i32> = gens.iter().copied().filter(|x| !g.base.contains(x)).collect();
        for k in 0..count(opts, 1000) {
            let h = if base_gens.is_empty() {
                FreeWord::default()
            } else {
                random_free(&mut r, &base_gens, 0..6)
            };
            let inside = r.gen_bool(0.5);
            let w = if inside {
                h
            } else {
                let x = random_free(&mut r, &outside, 1..4);
                h.mul(&if x.is_empty() { FreeWord::new([outside[0]]) } else { x })
            };
            let res = normal_form_of(&g, &w).map(|nf| nf.is_empty() == inside);
            out.push(from_result(format!("{label} base membership #{k}"), res, json!({"word": w, "in_base": inside})));
        }
    }
    out
}

fn kbeq_fuzz(opts: &SuiteOptions) -> Vec<Case> {
    let mut r = rng(opts, 9);
    let mut out = Vec::new();
    for k in 0..count(opts, 1000) {
        let n = r.gen_range(3..=5);
        let u = random_kb_word(&mut r, n, 0..8, |_| true);
        // a conjugated braid or commutation relator spliced into u
        let gens: Vec<Delta> = GeneratorSubset::full(n).iter().collect();
        let (a, b) = loop {
            let a = *gens.choose(&mut r).expect("gens");
            let b = *gens.choose(&mut r).expect("gens");
            if a != b && kb_label(a, b) != Label::Infinity {
                break (a, b);
            }
        };
        let t = |d: Delta, e: i64| (d.indices().0, d.indices().1, e);
        let rel = if kb_label(a, b) == Label::Two {
            KbWord::from_triples(n, &[t(a, 1), t(b, 1), t(a, -1), t(b, -1)])
        } else {
            KbWord::from_triples(n, &[t(a, 1), t(b, 1), t(a, 1), t(b, -1), t(a, -1), t(b, -1)])
        }
        .expect("valid");
        let c = random_kb_word(&mut r, n, 0..4, |_| true);
        let at = r.gen_range(0..=u.len());
        let (head, tail) = u.split_at(at);
        let v = head.mul(&c).mul(&rel).mul(&c.inverse()).mul(&tail);
        let verdict = kbeq::kb_equal(&u, &v, opts.budget);
        out.push(case(
            format!("relator #{k}"),
            matches!(&verdict, Ok(v) if !v.is_distinct()),
            json!({"u": u, "v": v, "outcome": verdict.as_ref().map(|v| v.outcome()).ok()}),
        ));
    }
    for k in 0..count(opts, 1000) {
        let n = r.gen_range(3..=5);
        let (u, v) = loop {
            let u = random_kb_word(&mut r, n, 0..8, |_| true);
            let v = random_kb_word(&mut r, n, 0..8, |_| true);
            if kb_abelianize(&u) != kb_abelianize(&v) {
                break (u, v);
            }
        };
        let verdict = kbeq::kb_equal(&u, &v, opts.budget);
        out.push(case(
            format!("separated #{k}"),
            matches!(&verdict, Ok(v) if !v.is_equal()),
            json!({"u": u, "v": v}),
        ));
    }
    out
}
