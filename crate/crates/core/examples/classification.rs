//! Homomorphisms S_n → S_m and VB_n → S_m up to conjugation.
//!
//! Usage: `cargo run --release --example classification -- vb5 sym5 [jobs]`

use vbw::homsearch::{classify, FinitePresentation, SearchOptions};
use vbw::vb::Source;

fn main() -> vbw::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let from = args.first().map_or("vb5", String::as_str);
    let to = args.get(1).map_or("sym5", String::as_str);
    let jobs = args.get(2).and_then(|j| j.parse().ok()).unwrap_or(1);

    let p = match Source::parse(from)? {
        Source::Sym(n) => FinitePresentation::symmetric(n),
        Source::Vb(n) => FinitePresentation::virtual_braid(n),
    };
    let m = Source::parse(to)?.degree();
    let r = classify(&p, m, &SearchOptions { jobs, budget: None })?;
    println!("{from} -> {to}: {} homomorphisms in {} classes, certified {}", r.raw_count, r.classes.len(), r.certified);
    for c in &r.classes {
        let imgs: Vec<String> = c.images.iter().map(|g| g.to_string()).collect();
        println!("  {:<8} {}", c.tag.to_string(), imgs.join(" "));
    }
    Ok(())
}
