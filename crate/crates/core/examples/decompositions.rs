//! Twisted and hexagon decompositions in KB_n, and straightening a
//! section S_n → VB_n.

use vbw::amalgam::{hexagon_decompose, s1_twisted_decompose, straighten_symmetric_section};
use vbw::artin::GeneratorSubset;
use vbw::kbeq::DEFAULT_BUDGET;
use vbw::perm::Permutation;
use vbw::vb::{KbWord, SemidirectElement};

fn main() -> vbw::Result<()> {
    let n = 4;
    let s1 = Permutation::adjacent(n, 1)?;
    let x = GeneratorSubset::full(n);

    let w = KbWord::parse("d1.3 d3.4'", n)?;
    let a = w.mul(&w.act(&s1).inverse());
    let b = s1_twisted_decompose(&a, &x)?;
    println!("a = {a}\n  = b · s1(b)⁻¹ with b = {b}");

    let h = KbWord::parse("d3.4 d4.3 d1.4 d4.1'", n)?;
    let (p, q) = hexagon_decompose(&h, &x)?;
    println!("{h} = ({p})({q}), s1 fixes the first, s2 the second");

    // ι conjugated by δ_{1,2}δ_{2,1}
    let c = SemidirectElement::from_kb(KbWord::parse("d1.2 d2.1", n)?);
    let images: Vec<SemidirectElement> = (1..n)
        .map(|i| SemidirectElement::from_perm(Permutation::adjacent(n, i).unwrap()).conjugate_by(&c))
        .collect();
    let beta = straighten_symmetric_section(&images, DEFAULT_BUDGET)?;
    println!("straightening conjugator: {beta}");
    Ok(())
}
