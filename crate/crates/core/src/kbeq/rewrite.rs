//! Budgeted breadth-first search for a derivation `w → ε` using
//! commutations, braid moves, free and cyclic reduction.

use std::collections::{HashMap, VecDeque};

use crate::artin::{kb_label, Label};
use crate::vb::word::{KbLetter, KbWord};

type State = Vec<KbLetter>;

fn free_reduce(w: &[KbLetter]) -> State {
    let mut out: State = Vec::with_capacity(w.len());
    for &l in w {
        if out.last().is_some_and(|&p| p.cancels(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    while out.len() >= 2 && out[0].cancels(out[out.len() - 1]) {
        out.pop();
        out.remove(0);
    }
    out
}

/// Least rotation, so that each conjugacy-class orbit is visited once.
fn canonical(w: State) -> State {
    let w = free_reduce(&w);
    (0..w.len().max(1))
        .map(|r| {
            let mut v = w.clone();
            v.rotate_left(r.min(w.len()));
            v
        })
        .min()
        .unwrap_or_default()
}

fn neighbours(w: &State) -> Vec<State> {
    let len = w.len();
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    for p in 0..len {
        let x = w[p];
        let y = w[(p + 1) % len];
        if x.gen != y.gen && kb_label(x.gen, y.gen) == Label::Two {
            let mut v = w.clone();
            v.swap(p, (p + 1) % len);
            out.push(v);
        }
        if len < 3 {
            continue;
        }
        let z = w[(p + 2) % len];
        if x.gen != z.gen || x.gen == y.gen || kb_label(x.gen, y.gen) != Label::Three {
            continue;
        }
        // x^e y^f x^g with (e,g) equal: braid move; opposite: conjugation move
        let replacement = if x.inverse == z.inverse && x.inverse == y.inverse {
            Some([y, x, y])
        } else if x.inverse != z.inverse {
            // x^e y^f x^{-e} = y^{-e} x^f y^e
            let ye = KbLetter { gen: y.gen, inverse: x.inverse };
            let xf = KbLetter { gen: x.gen, inverse: y.inverse };
            Some([ye.inv(), xf, ye])
        } else {
            None
        };
        if let Some(r) = replacement {
            let mut v = w.clone();
            for (k, l) in r.into_iter().enumerate() {
                v[(p + k) % len] = l;
            }
            out.push(v);
        }
    }
    out
}

pub struct RewriteOutcome {
    /// Words along a derivation to `ε`, if one was found.
    pub path: Option<Vec<KbWord>>,
    pub expanded: u64,
    pub exhausted: bool,
}

/// Searches for a derivation of `ε` from `w`, expanding at most `budget`
/// states.
pub fn search_trivial(w: &KbWord, budget: u64) -> RewriteOutcome {
    let n = w.strands();
    let start = canonical(w.letters().to_vec());
    let to_word = |s: &State| KbWord::new(n, s.iter().copied()).expect("valid letters");
    let mut parent: HashMap<State, Option<State>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    let mut expanded = 0u64;
    while let Some(s) = queue.pop_front() {
        if s.is_empty() {
            let mut path = vec![to_word(&s)];
            let mut cur = s;
            while let Some(Some(p)) = parent.get(&cur) {
                path.push(to_word(p));
                cur = p.clone();
            }
            path.reverse();
            return RewriteOutcome {
                path: Some(path),
                expanded,
                exhausted: false,
            };
        }
        if expanded >= budget {
            return RewriteOutcome {
                path: None,
                expanded,
                exhausted: true,
            };
        }
        expanded += 1;
        for v in neighbours(&s) {
            let v = canonical(v);
            if !parent.contains_key(&v) {
                parent.insert(v.clone(), Some(s.clone()));
                queue.push_back(v);
            }
        }
    }
    RewriteOutcome {
        path: None,
        expanded,
        exhausted: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_braid_relator() {
        let w = KbWord::parse("d1.2 d2.3 d1.2 d2.3' d1.2' d2.3'", 3).unwrap();
        let r = search_trivial(&w, 1000);
        assert!(r.path.is_some());
    }

    #[test]
    fn finds_mixed_relators() {
        for t in [
            "d1.2 d2.3 d1.2' d2.3' d1.2' d2.3",
            "d1.2' d2.3 d1.2 d2.3 d1.2' d2.3'",
            "d1.2 d3.4 d1.2' d3.4'",
        ] {
            let w = KbWord::parse(t, 4).unwrap();
            assert!(search_trivial(&w, 1000).path.is_some(), "{t}");
        }
    }

    #[test]
    fn nontrivial_word_exhausts_or_closes() {
        let w = KbWord::parse("d1.2 d2.1", 3).unwrap();
        let r = search_trivial(&w, 100);
        assert!(r.path.is_none());
        assert!(!r.exhausted);
    }
}
