//! Normal forms in `G_1 *_H ⋯ *_H G_p` driven by factor oracles, and the
//! peeling decomposition for elements inverted by a factor-swapping
//! involution.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Oracles for an amalgamated product. Elements of the whole group share
/// one representation `Elem`.
pub trait Amalgam {
    type Elem: Clone + PartialEq + fmt::Display + fmt::Debug + Serialize;

    fn factor_count(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    /// `g = θ · β` with `θ` in the transversal `T_j` and `β ∈ H`; `θ` is the
    /// identity exactly when `g ∈ H`.
    fn decompose(&self, j: usize, g: &Self::Elem) -> Result<(Self::Elem, Self::Elem)>;
    fn is_identity(&self, g: &Self::Elem) -> Result<bool>;
    /// Writes an element as a product of factor elements.
    fn factor_pieces(&self, g: &Self::Elem) -> Result<Vec<(usize, Self::Elem)>>;

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        self.is_identity(&self.mul(a, &self.inverse(b)))
    }
}

/// `θ_1 ⋯ θ_ℓ · β`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalForm<E> {
    pub syllables: Vec<(usize, E)>,
    pub base: E,
}

impl<E: Clone> NormalForm<E> {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn value<A: Amalgam<Elem = E>>(&self, g: &A) -> E {
        let mut acc = g.identity();
        for (_, t) in &self.syllables {
            acc = g.mul(&acc, t);
        }
        g.mul(&acc, &self.base)
    }
}

/// Folds a sequence of factor elements into the normal form.
pub fn amalgam_normal_form<A: Amalgam>(g: &A, pieces: &[(usize, A::Elem)]) -> Result<NormalForm<A::Elem>> {
    let mut stack: Vec<(usize, A::Elem)> = Vec::new();
    let mut base = g.identity();
    for (j, x) in pieces {
        if *j >= g.factor_count() {
            return Err(Error::IndexOutOfRange(format!("factor {j}")));
        }
        let merged = match stack.last() {
            Some((top, t)) if top == j => {
                let t = t.clone();
                stack.pop();
                g.mul(&g.mul(&t, &base), x)
            }
            _ => g.mul(&base, x),
        };
        let (theta, beta) = g.decompose(*j, &merged)?;
        base = beta;
        if !g.is_identity(&theta)? {
            stack.push((*j, theta));
        }
    }
    Ok(NormalForm { syllables: stack, base })
}

pub fn normal_form_of<A: Amalgam>(g: &A, x: &A::Elem) -> Result<NormalForm<A::Elem>> {
    amalgam_normal_form(g, &g.factor_pieces(x)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SwapCheck<E> {
    InBase { base: E },
    NotFixed { first_difference: usize },
}

/// For an involution `τ` exchanging the two factors: `τ(α) = α` forces
/// `α ∈ H`.
pub fn swap_fixed_check<A: Amalgam>(
    g: &A,
    tau: impl Fn(&A::Elem) -> A::Elem,
    alpha: &A::Elem,
) -> Result<SwapCheck<A::Elem>> {
    let nf = normal_form_of(g, alpha)?;
    let nt = normal_form_of(g, &tau(alpha))?;
    if nf == nt {
        if !nf.is_empty() {
            return Err(Error::SelfCheck("a swap-fixed element with syllables".into()));
        }
        return Ok(SwapCheck::InBase { base: nf.base });
    }
    let first_difference = nf
        .syllables
        .iter()
        .zip(&nt.syllables)
        .take_while(|(a, b)| a == b)
        .count();
    Ok(SwapCheck::NotFixed { first_difference })
}

/// For `τ(α) = α⁻¹` returns `(α′, β′)` with `α = α′ β′ τ(α′)⁻¹`, `β′ ∈ H`
/// and `τ(β′) = β′⁻¹`.
pub fn twisted_decompose<A: Amalgam>(
    g: &A,
    tau: &impl Fn(&A::Elem) -> A::Elem,
    alpha: &A::Elem,
) -> Result<(A::Elem, A::Elem)> {
    if g.factor_count() != 2 {
        return Err(Error::Precondition("two factors required".into()));
    }
    if !g.equal(&tau(alpha), &g.inverse(alpha))? {
        return Err(Error::Precondition(format!("τ({alpha}) is not {alpha}⁻¹")));
    }
    let (a, b) = peel(g, tau, alpha)?;
    let back = g.mul(&g.mul(&a, &b), &g.inverse(&tau(&a)));
    if !g.equal(&back, alpha)? || !g.equal(&tau(&b), &g.inverse(&b))? {
        return Err(Error::SelfCheck(format!("twisted decomposition of {alpha}")));
    }
    Ok((a, b))
}

fn peel<A: Amalgam>(
    g: &A,
    tau: &impl Fn(&A::Elem) -> A::Elem,
    alpha: &A::Elem,
) -> Result<(A::Elem, A::Elem)> {
    let nf = normal_form_of(g, alpha)?;
    let l = nf.len();
    match l {
        0 => return Ok((g.identity(), nf.base)),
        1 => return Err(Error::Precondition(format!("{alpha} has one syllable"))),
        _ => {}
    }
    let theta1 = &nf.syllables[0].1;
    let c = g.mul(&g.mul(&nf.syllables[l - 1].1, &nf.base), &tau(theta1));
    let mut inner = g.identity();
    for (_, t) in &nf.syllables[1..l - 1] {
        inner = g.mul(&inner, t);
    }
    let inner = g.mul(&inner, &c);
    if normal_form_of(g, &inner)?.len() >= l {
        return Err(Error::Unknown(format!("peeling {alpha} did not shorten")));
    }
    let (a, b) = peel(g, tau, &inner)?;
    Ok((g.mul(theta1, &a), b))
}
