//! Defining relators of `VB_n` and of the Coxeter presentation of `S_n`.

use crate::vb::word::{VbLetter, VbWord};

/// One relator `r` per defining relation `l = r'`, written as `l r'⁻¹`.
pub fn vb_relators(n: usize) -> Vec<(String, VbWord)> {
    let s = VbLetter::sigma;
    let si = VbLetter::sigma_inv;
    let t = VbLetter::tau;
    let mut out = Vec::new();
    let mut add = |name: String, letters: Vec<VbLetter>| {
        out.push((name, VbWord::new(n, letters).expect("indices in range")));
    };
    for i in 1..n {
        add(format!("t{i}^2"), vec![t(i), t(i)]);
        if i + 1 < n {
            let j = i + 1;
            add(format!("braid s{i} s{j}"), vec![s(i), s(j), s(i), si(j), si(i), si(j)]);
            add(format!("braid t{i} t{j}"), vec![t(i), t(j), t(i), t(j), t(i), t(j)]);
            add(format!("mixed t{i} t{j} s{i}"), vec![t(i), t(j), s(i), t(j), t(i), si(j)]);
        }
        for j in i + 2..n {
            add(format!("commute s{i} s{j}"), vec![s(i), s(j), si(i), si(j)]);
            add(format!("commute t{i} t{j}"), vec![t(i), t(j), t(i), t(j)]);
            add(format!("commute s{i} t{j}"), vec![s(i), t(j), si(i), t(j)]);
            add(format!("commute t{i} s{j}"), vec![t(i), s(j), t(i), si(j)]);
        }
    }
    out
}

/// Coxeter relators of `S_n` as words in the generator indices `1..n`.
pub fn sym_relators(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(vec![i, i]);
        if i + 1 < n {
            out.push(vec![i, i + 1, i, i + 1, i, i + 1]);
        }
        for j in i + 2..n {
            out.push(vec![i, j, i, j]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vb::semidirect::to_semidirect;

    #[test]
    fn counts() {
        assert_eq!(sym_relators(3).len(), 3);
        assert_eq!(vb_relators(2).len(), 1);
        assert_eq!(vb_relators(3).len(), 5);
    }

    #[test]
    fn relators_have_trivial_permutation() {
        for n in 2..=6 {
            for (name, r) in vb_relators(n) {
                assert!(to_semidirect(&r).perm.is_identity(), "{name}");
            }
        }
    }
}
