//! Deciding equality in `KB_n`.
//!
//! A cascade of exact methods on the support of `u v⁻¹`: free reduction and
//! two abelian invariants, the right-angled normal form, the Garside form
//! for a single label-3 pair, a free-product split along `∞` components,
//! and finally a budgeted rewriting search. `Distinct` is returned only
//! with a witness from an exact method.

pub mod dihedral;
pub mod raag;
pub mod rewrite;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::artin::{infinity_split, GeneratorSubset};
use crate::error::{Error, Result};
use crate::vb::abelian::{kb_abelianize, transposition_image};
use crate::vb::word::KbWord;

pub use dihedral::{dihedral_normal_form, DihedralForm};
pub use raag::raag_normal_form;
pub use rewrite::search_trivial;

pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub enum EqVerdict {
    Equal { certificate: Value, budget_spent: u64 },
    Distinct { witness: Value, budget_spent: u64 },
    Unknown { budget_spent: u64, exhausted: bool },
}

impl EqVerdict {
    pub fn outcome(&self) -> &'static str {
        match self {
            EqVerdict::Equal { .. } => "equal",
            EqVerdict::Distinct { .. } => "distinct",
            EqVerdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, EqVerdict::Equal { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, EqVerdict::Distinct { .. })
    }

    pub fn budget_spent(&self) -> u64 {
        match self {
            EqVerdict::Equal { budget_spent, .. }
            | EqVerdict::Distinct { budget_spent, .. }
            | EqVerdict::Unknown { budget_spent, .. } => *budget_spent,
        }
    }
}

impl Serialize for EqVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("outcome", self.outcome())?;
        match self {
            EqVerdict::Equal { certificate, .. } => {
                m.serialize_entry("certificate", certificate)?;
                m.serialize_entry("witness", &Value::Null)?;
            }
            EqVerdict::Distinct { witness, .. } => {
                m.serialize_entry("certificate", &Value::Null)?;
                m.serialize_entry("witness", witness)?;
            }
            EqVerdict::Unknown { .. } => {
                m.serialize_entry("certificate", &Value::Null)?;
                m.serialize_entry("witness", &Value::Null)?;
            }
        }
        m.serialize_entry("budget_spent", &self.budget_spent())?;
        m.end()
    }
}

enum Decision {
    Equal(Value),
    Distinct(Value),
    Unknown { exhausted: bool },
}

struct Budget {
    limit: u64,
    spent: u64,
}

/// Strips the longest common prefix and suffix: `u = c p d`, `v = c q d`.
fn strip_common(u: &KbWord, v: &KbWord) -> (KbWord, KbWord) {
    let (a, b) = (u.letters(), v.letters());
    let pre = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[pre..], &b[pre..]);
    let suf = a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count();
    let n = u.strands();
    (
        KbWord::new(n, a[..a.len() - suf].iter().copied()).expect("valid"),
        KbWord::new(n, b[..b.len() - suf].iter().copied()).expect("valid"),
    )
}

fn decide(u: &KbWord, v: &KbWord, budget: &mut Budget) -> Decision {
    let (p, q) = strip_common(u, v);
    if p == q {
        return Decision::Equal(json!({"method": "free_reduction"}));
    }
    let (tp, tq) = (transposition_image(&p), transposition_image(&q));
    if tp != tq {
        return Decision::Distinct(json!({
            "invariant": "transposition_image",
            "left": {"word": p, "value": tp},
            "right": {"word": q, "value": tq},
        }));
    }
    let (ap, aq) = (kb_abelianize(&p), kb_abelianize(&q));
    if ap != aq {
        return Decision::Distinct(json!({
            "invariant": "abelianization",
            "left": {"word": p, "value": ap},
            "right": {"word": q, "value": aq},
        }));
    }
    let x = p.support().union(&q.support());
    if x.is_right_angled() {
        let (np, nq) = (raag::raag_normal_form_unchecked(&p), raag::raag_normal_form_unchecked(&q));
        let body = json!({"method": "right_angled_normal_form", "support": x, "left": np, "right": nq});
        return if np == nq { Decision::Equal(body) } else { Decision::Distinct(body) };
    }
    let three = x.coxeter_matrix().three_pairs();
    if x.len() == 2 && three.len() == 1 {
        let (a, b) = three[0];
        let np = dihedral_normal_form(&p, a, b).expect("support is {a, b}");
        let nq = dihedral_normal_form(&q, a, b).expect("support is {a, b}");
        let body = json!({"method": "garside_normal_form", "left": np, "right": nq});
        return if np == nq { Decision::Equal(body) } else { Decision::Distinct(body) };
    }
    let w = p.mul(&q.inverse());
    if let Some(d) = free_product(&w, &x, budget) {
        return d;
    }
    let remaining = budget.limit.saturating_sub(budget.spent);
    let r = search_trivial(&w, remaining);
    budget.spent += r.expanded;
    match r.path {
        Some(path) => Decision::Equal(json!({
            "method": "rewriting",
            "path": path.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })),
        None => Decision::Unknown { exhausted: r.exhausted },
    }
}

/// Syllable reduction in `*_i KB_n[X_i]` over the finite-label components
/// of `X`. `None` when `X` is connected.
fn free_product(w: &KbWord, x: &GeneratorSubset, budget: &mut Budget) -> Option<Decision> {
    infinity_split(x)?;
    let comps = x.finite_components();
    let comp_of = |l: &crate::vb::word::KbLetter| comps.iter().position(|c| c.contains(l.gen)).expect("in support");
    let n = w.strands();
    let mut syllables: Vec<(usize, KbWord)> = Vec::new();
    for l in w.letters() {
        let c = comp_of(l);
        match syllables.last_mut() {
            Some((k, s)) if *k == c => s.push(*l),
            _ => syllables.push((c, KbWord::new(n, [*l]).expect("valid"))),
        }
    }
    let empty = KbWord::empty(n);
    let mut reasons: Vec<Option<Value>> = vec![None; syllables.len()];
    let mut exhausted = false;
    'outer: loop {
        for k in 0..syllables.len() {
            if reasons[k].is_some() {
                continue;
            }
            match decide(&syllables[k].1, &empty, budget) {
                Decision::Equal(_) => {
                    syllables.remove(k);
                    reasons.remove(k);
                    merge_adjacent(&mut syllables, &mut reasons);
                    continue 'outer;
                }
                Decision::Distinct(wit) => reasons[k] = Some(wit),
                Decision::Unknown { exhausted: e } => {
                    exhausted |= e;
                    reasons[k] = Some(Value::Null);
                }
            }
        }
        break;
    }
    if syllables.is_empty() {
        return Some(Decision::Equal(json!({"method": "free_product", "components": comps})));
    }
    if reasons.iter().all(|r| matches!(r, Some(v) if !v.is_null())) {
        let syl: Vec<Value> = syllables
            .iter()
            .zip(&reasons)
            .map(|((c, s), r)| json!({"component": comps[*c], "syllable": s, "nontrivial": r}))
            .collect();
        return Some(Decision::Distinct(json!({
            "method": "free_product_reduced_form",
            "word": w,
            "syllables": syl,
        })));
    }
    Some(Decision::Unknown { exhausted })
}

fn merge_adjacent(syllables: &mut Vec<(usize, KbWord)>, reasons: &mut Vec<Option<Value>>) {
    let mut k = 1;
    while k < syllables.len() {
        if syllables[k - 1].0 == syllables[k].0 {
            let (_, right) = syllables.remove(k);
            reasons.remove(k);
            syllables[k - 1].1 = syllables[k - 1].1.mul(&right);
            reasons[k - 1] = None;
            if syllables[k - 1].1.is_empty() {
                syllables.remove(k - 1);
                reasons.remove(k - 1);
                k = k.saturating_sub(1).max(1);
            }
        } else {
            k += 1;
        }
    }
}

/// Decides `u = v` in `KB_n` within `budget` rewriting steps.
pub fn kb_equal(u: &KbWord, v: &KbWord, budget: u64) -> Result<EqVerdict> {
    if u.strands() != v.strands() {
        return Err(Error::DegreeMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    let mut b = Budget { limit: budget, spent: 0 };
    Ok(match decide(u, v, &mut b) {
        Decision::Equal(certificate) => EqVerdict::Equal {
            certificate,
            budget_spent: b.spent,
        },
        Decision::Distinct(witness) => EqVerdict::Distinct {
            witness,
            budget_spent: b.spent,
        },
        Decision::Unknown { exhausted } => EqVerdict::Unknown {
            budget_spent: b.spent,
            exhausted,
        },
    })
}

/// `kb_equal` with the default budget, collapsed to a `Result`:
/// `Ok(true)`/`Ok(false)` for decided cases, `Err(Unknown)` otherwise.
pub fn kb_equal_decided(u: &KbWord, v: &KbWord) -> Result<bool> {
    match kb_equal(u, v, DEFAULT_BUDGET)? {
        EqVerdict::Equal { .. } => Ok(true),
        EqVerdict::Distinct { .. } => Ok(false),
        EqVerdict::Unknown { .. } => Err(Error::Unknown(format!("{u} = {v}"))),
    }
}

pub fn kb_is_trivial(u: &KbWord) -> Result<bool> {
    kb_equal_decided(u, &KbWord::empty(u.strands()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str, n: usize) -> KbWord {
        KbWord::parse(t, n).unwrap()
    }

    fn eq(a: &str, b: &str, n: usize) -> EqVerdict {
        kb_equal(&w(a, n), &w(b, n), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn examples() {
        assert!(eq("d1.2 d2.3 d1.2", "d2.3 d1.2 d2.3", 3).is_equal());
        assert!(eq("d1.2 d3.4", "d3.4 d1.2", 4).is_equal());
        assert!(eq("d1.2 d2.1", "d2.1 d1.2", 3).is_distinct());
        assert!(eq("d1.2", "d2.3", 3).is_distinct());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(eq("d1.2", "d1.2", 3)).unwrap();
        assert_eq!(v["outcome"], "equal");
        assert!(v["witness"].is_null());
        assert_eq!(v["budget_spent"], 0);
    }

    #[test]
    fn free_product_over_infinity_components() {
        // {δ12, δ21} and {δ34, δ43} commute pairwise: right-angled
        assert!(eq("d1.2 d3.4 d2.1", "d1.2 d2.1 d3.4", 4).is_equal());
        let r = eq("d1.2 d2.1 d1.2 d2.3 d1.2 d2.3' d1.2' d2.3' d2.1' d1.2'", "e", 3);
        assert!(r.is_equal(), "{r:?}");
        assert_eq!(serde_json::to_value(&r).unwrap()["certificate"]["method"], "free_product");
        assert!(eq("d1.2 d2.1 d1.2 d2.3 d2.1' d2.3' d1.2'", "e", 3).is_distinct());
        let u = "d1.2 d2.3 d1.2 d2.1";
        let v = "d2.3 d1.2 d2.3 d2.1";
        let r = eq(u, v, 3);
        assert!(r.is_equal(), "{r:?}");
        assert!(eq("d1.2 d2.3 d2.1", "d2.3 d1.2 d2.1", 3).is_distinct());
    }

    #[test]
    fn degree_mismatch() {
        assert!(kb_equal(&w("d1.2", 3), &w("d1.2", 4), 10).is_err());
    }
}
