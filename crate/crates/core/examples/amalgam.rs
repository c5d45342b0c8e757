//! Normal forms in amalgamated free products and the twisted peeling
//! decomposition.

use vbw::amalgam::{normal_form_of, swap_fixed_check, twisted_decompose, FreeAmalgam, FreeWord};

fn main() -> vbw::Result<()> {
    let g = FreeAmalgam::cyclic_amalgam();
    for text in ["ab'a", "bcb'c'", "aab", "a'ca"] {
        let w = FreeWord::parse(text)?;
        let nf = normal_form_of(&g, &w)?;
        let syl: Vec<String> = nf.syllables.iter().map(|(j, t)| format!("{t}∈G{}", j + 1)).collect();
        println!("{text:>8}: {} · {} (ℓ = {})", syl.join(" "), nf.base, nf.len());
    }

    let tau = |w: &FreeWord| g.swap(w);
    let x = FreeWord::parse("bac")?;
    let beta = FreeWord::parse("aa")?;
    let alpha = x.mul(&beta).mul(&tau(&x).inverse());
    let (a, b) = twisted_decompose(&g, &tau, &alpha)?;
    println!("α = {alpha} = ({a})({b})τ({a})⁻¹");

    let f = FreeAmalgam::free_product();
    let w = FreeWord::parse("bc")?;
    let check = swap_fixed_check(&f, &|w: &FreeWord| f.swap(w), &w)?;
    println!("swap check of {w} in F(b)*F(c): {}", serde_json::to_string(&check).expect("json"));
    Ok(())
}
