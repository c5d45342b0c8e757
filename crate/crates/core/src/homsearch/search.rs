//! Backtracking enumeration of homomorphisms into `S_m`, up to
//! conjugation.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homsearch::presentation::{Family, FinitePresentation, Letter};
use crate::perm::{canonical_tuple_with, centralizer, conjugacy_class_reps, Permutation};

/// Largest target degree the search accepts.
pub const MAX_TARGET_DEGREE: usize = 6;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    /// Cap on search nodes; exceeding it is an error.
    pub budget: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: 1, budget: None }
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Canonical tuples, one per conjugacy class, sorted.
    pub classes: Vec<Vec<Permutation>>,
    /// Number of homomorphisms before identifying conjugates.
    pub raw_count: u64,
    pub nodes: u64,
}

struct Counter<'a> {
    nodes: &'a AtomicU64,
    over: &'a AtomicBool,
    budget: Option<u64>,
}

impl Counter<'_> {
    fn tick(&self) -> bool {
        let v = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| v > b) {
            self.over.store(true, Ordering::Relaxed);
        }
        !self.over.load(Ordering::Relaxed)
    }
}

fn eval(relator: &[Letter], images: &[Permutation], m: usize) -> Permutation {
    relator.iter().fold(Permutation::identity(m), |acc, &(g, inv)| {
        if inv {
            acc.mul_unchecked(&images[g].inverse())
        } else {
            acc.mul_unchecked(&images[g])
        }
    })
}

pub fn satisfies_relators(p: &FinitePresentation, images: &[Permutation], m: usize) -> bool {
    p.relators.iter().all(|r| eval(r, images, m).is_identity())
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn finish(found: Vec<Vec<Permutation>>, all: &[Permutation], m: usize, nodes: u64) -> Result<Enumeration> {
    let mut classes: Vec<Vec<Permutation>> = found.iter().map(|t| canonical_tuple_with(t, all)).collect();
    classes.sort();
    classes.dedup();
    let order: u64 = all.len() as u64;
    let mut raw_count = 0;
    for t in &classes {
        raw_count += order / centralizer(t, m)?.len() as u64;
    }
    Ok(Enumeration {
        classes,
        raw_count,
        nodes,
    })
}

/// All homomorphisms `P → S_m` up to conjugation in `S_m`.
pub fn enumerate_homs(p: &FinitePresentation, m: usize, opts: &SearchOptions) -> Result<Enumeration> {
    if m == 0 || m > MAX_TARGET_DEGREE {
        return Err(Error::DegreeTooLarge {
            n: m,
            max: MAX_TARGET_DEGREE,
        });
    }
    match p.family {
        Family::Vb if p.degree >= 3 => enumerate_vb(p, m, opts),
        _ => enumerate_generic(p, m, opts),
    }
}

fn enumerate_generic(p: &FinitePresentation, m: usize, opts: &SearchOptions) -> Result<Enumeration> {
    let all = Permutation::all(m);
    if p.generators == 0 {
        return finish(vec![vec![]], &all, m, 0);
    }
    // relators checked as soon as their largest generator is assigned
    let mut by_last: Vec<Vec<&[Letter]>> = vec![Vec::new(); p.generators];
    for r in &p.relators {
        if let Some(last) = r.iter().map(|&(g, _)| g).max() {
            by_last[last].push(r);
        }
    }
    let nodes = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let counter = Counter {
        nodes: &nodes,
        over: &over,
        budget: opts.budget,
    };
    let reps = conjugacy_class_reps(m);
    let work = || -> Vec<Vec<Permutation>> {
        reps.par_iter()
            .flat_map_iter(|first| {
                let mut out = Vec::new();
                let mut images = vec![first.clone()];
                if by_last[0].iter().all(|r| eval(r, &images, m).is_identity()) && counter.tick() {
                    dfs(&mut images, &all, &by_last, m, &counter, &mut out);
                }
                out
            })
            .collect()
    };
    let found = run_pool(opts.jobs, work)?;
    if over.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded(nodes.load(Ordering::Relaxed)));
    }
    finish(found, &all, m, nodes.load(Ordering::Relaxed))
}

fn dfs(
    images: &mut Vec<Permutation>,
    all: &[Permutation],
    by_last: &[Vec<&[Letter]>],
    m: usize,
    counter: &Counter<'_>,
    out: &mut Vec<Vec<Permutation>>,
) {
    let k = images.len();
    if k == by_last.len() {
        out.push(images.clone());
        return;
    }
    for g in all {
        images.push(g.clone());
        if by_last[k].iter().all(|r| eval(r, images, m).is_identity()) {
            if !counter.tick() {
                images.pop();
                return;
            }
            dfs(images, all, by_last, m, counter, out);
        }
        images.pop();
    }
}

/// `τ` images first (classes of `S_n → S_m`), then `σ_1` in the
/// centralizer of `τ_3, …, τ_{n-1}`, then
/// `σ_i = τ_{i-1} τ_i σ_{i-1} τ_i τ_{i-1}`.
fn enumerate_vb(p: &FinitePresentation, m: usize, opts: &SearchOptions) -> Result<Enumeration> {
    let n = p.degree;
    let all = Permutation::all(m);
    let taus = enumerate_generic(&FinitePresentation::symmetric(n), m, opts)?;
    let nodes = AtomicU64::new(taus.nodes);
    let over = AtomicBool::new(false);
    let counter = Counter {
        nodes: &nodes,
        over: &over,
        budget: opts.budget,
    };
    let mut pairs: Vec<(Vec<Permutation>, Permutation)> = Vec::new();
    for t in &taus.classes {
        for s1 in centralizer(&t[2.min(t.len())..], m)? {
            pairs.push((t.clone(), s1));
        }
    }
    let work = || -> Vec<Vec<Permutation>> {
        pairs
            .par_iter()
            .filter_map(|(t, s1)| {
                if !counter.tick() {
                    return None;
                }
                let mut sigmas = vec![s1.clone()];
                for i in 1..n - 1 {
                    let (a, b) = (&t[i - 1], &t[i]);
                    let next = a.mul_unchecked(b).mul_unchecked(&sigmas[i - 1]).mul_unchecked(b).mul_unchecked(a);
                    sigmas.push(next);
                }
                sigmas.extend(t.iter().cloned());
                satisfies_relators(p, &sigmas, m).then_some(sigmas)
            })
            .collect()
    };
    let found = run_pool(opts.jobs, work)?;
    if over.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded(nodes.load(Ordering::Relaxed)));
    }
    finish(found, &all, m, nodes.load(Ordering::Relaxed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_into_s3() {
        let e = enumerate_homs(&FinitePresentation::symmetric(3), 3, &SearchOptions::default()).unwrap();
        assert_eq!(e.raw_count, 10);
        assert_eq!(e.classes.len(), 3);
    }

    #[test]
    fn trivial_target() {
        for n in 2..=5 {
            let e = enumerate_homs(&FinitePresentation::symmetric(n), 1, &SearchOptions::default()).unwrap();
            assert_eq!(e.raw_count, 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = SearchOptions { jobs: 1, budget: Some(3) };
        assert!(matches!(
            enumerate_homs(&FinitePresentation::symmetric(4), 4, &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn parallel_matches_serial() {
        let p = FinitePresentation::virtual_braid(4);
        let a = enumerate_homs(&p, 4, &SearchOptions::default()).unwrap();
        let b = enumerate_homs(&p, 4, &SearchOptions { jobs: 3, budget: None }).unwrap();
        assert_eq!(a.classes, b.classes);
        assert_eq!(a.raw_count, b.raw_count);
    }

    #[test]
    fn vb_strategy_matches_generic() {
        let p = FinitePresentation::virtual_braid(3);
        let mut q = p.clone();
        q.family = Family::Other;
        for m in 2..=3 {
            let a = enumerate_homs(&p, m, &SearchOptions::default()).unwrap();
            let b = enumerate_homs(&q, m, &SearchOptions::default()).unwrap();
            assert_eq!(a.classes, b.classes, "m = {m}");
        }
    }
}
