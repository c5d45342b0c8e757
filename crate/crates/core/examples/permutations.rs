//! Permutation arithmetic and the exceptional automorphism of S_6.

use vbw::perm::{canonical_tuple, centralizer, involution_class_reps, nu6_images, nu6_square_conjugator, Permutation};

fn main() -> vbw::Result<()> {
    let p = Permutation::parse("(1,3)(2,4)", 5)?;
    let q = Permutation::adjacent(5, 1)?;
    let pq = p.compose(&q)?;
    println!("p = {p}, q = {q}, p∘q = {pq} one-line {:?}", pq.one_line());
    println!("reduced word of p∘q: {:?}, order {}", pq.reduced_word(), pq.order());

    let c = centralizer(std::slice::from_ref(&p), 5)?;
    println!("|C({p})| = {}", c.len());
    println!("involution classes in S_6: {:?}", involution_class_reps(6).iter().map(|t| t.to_string()).collect::<Vec<_>>());

    let nu = nu6_images();
    let w0 = nu6_square_conjugator();
    for (i, u) in nu.iter().enumerate() {
        println!("nu6(s{}) = {u}", i + 1);
    }
    println!("nu6^2 is conjugation by {w0}");
    println!("canonical form of the nu6 tuple: {:?}", canonical_tuple(&nu, 6)?.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    Ok(())
}
