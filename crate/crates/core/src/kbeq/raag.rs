//! Normal form for parabolics of `KB_n` whose labels are all 2 or `∞`.

use crate::artin::{kb_label, GeneratorSubset, Label};
use crate::error::{Error, Result};
use crate::vb::word::{KbLetter, KbWord};

fn commute(a: KbLetter, b: KbLetter) -> bool {
    a.gen == b.gen || kb_label(a.gen, b.gen) == Label::Two
}

/// Canonical form in a right-angled parabolic: cancel every pair
/// `x^ε ⋯ x^{-ε}` separated only by letters commuting with `x`, then emit
/// the lexicographically least linear extension of the remaining
/// commutation order. Equal elements give identical words.
pub fn raag_normal_form(u: &KbWord, x: &GeneratorSubset) -> Result<KbWord> {
    if !u.support().is_subset(x) {
        return Err(Error::Precondition(format!("support of {u} is not inside {x}")));
    }
    if !x.is_right_angled() {
        return Err(Error::Precondition(format!("{x} carries a label 3")));
    }
    Ok(raag_normal_form_unchecked(u))
}

pub(crate) fn raag_normal_form_unchecked(u: &KbWord) -> KbWord {
    let mut letters: Vec<KbLetter> = u.letters().to_vec();
    'cancel: loop {
        for a in 0..letters.len() {
            for b in a + 1..letters.len() {
                if letters[b].cancels(letters[a]) {
                    letters.remove(b);
                    letters.remove(a);
                    continue 'cancel;
                }
                if !commute(letters[a], letters[b]) {
                    break;
                }
            }
        }
        break;
    }
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..letters.len() {
            let movable = letters[..k]
                .iter()
                .all(|&p| p.gen != letters[k].gen && kb_label(p.gen, letters[k].gen) == Label::Two);
            if movable && best.is_none_or(|b| letters[k] < letters[b]) {
                best = Some(k);
            }
        }
        let k = best.expect("the first letter is always movable");
        out.push(letters.remove(k));
    }
    KbWord::new(u.strands(), out).expect("letters are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &str) -> KbWord {
        KbWord::parse(t, 4).unwrap()
    }

    #[test]
    fn examples() {
        let x = GeneratorSubset::full(4).filter(|d| d.i < 3 && d.j < 3 || d.i > 2 && d.j > 2);
        assert_eq!(raag_normal_form(&w("d3.4 d1.2"), &x).unwrap(), w("d1.2 d3.4"));
        assert_eq!(raag_normal_form(&w("d1.2 d2.1 d2.1'"), &x).unwrap(), w("d1.2"));
        assert_eq!(raag_normal_form(&w("e"), &x).unwrap(), w("e"));
    }

    #[test]
    fn cancels_across_commuting_letters() {
        let x = GeneratorSubset::full(4).filter(|d| d.i < 3 && d.j < 3 || d.i > 2 && d.j > 2);
        assert!(raag_normal_form(&w("d1.2 d3.4 d4.3 d1.2' d4.3' d3.4'"), &x).unwrap().is_empty());
        // δ_{1,2} and δ_{2,1} do not commute
        assert_eq!(raag_normal_form(&w("d1.2 d2.1 d1.2'"), &x).unwrap(), w("d1.2 d2.1 d1.2'"));
    }

    #[test]
    fn rejects_label_three() {
        let x = GeneratorSubset::from_pairs(4, &[(1, 2), (2, 3)]).unwrap();
        assert!(raag_normal_form(&w("d1.2"), &x).is_err());
        let y = GeneratorSubset::from_pairs(4, &[(1, 2)]).unwrap();
        assert!(raag_normal_form(&w("d3.4"), &y).is_err());
    }
}
