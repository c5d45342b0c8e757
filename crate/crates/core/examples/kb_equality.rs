//! The tiered equality oracle for KB_n words.

use vbw::kbeq::{dihedral_normal_form, kb_equal, DEFAULT_BUDGET};
use vbw::vb::KbWord;

fn main() -> vbw::Result<()> {
    let pairs = [
        (3, "d1.2 d2.3 d1.2", "d2.3 d1.2 d2.3"),
        (4, "d1.2 d3.4", "d3.4 d1.2"),
        (4, "d1.2 d2.1", "d2.1 d1.2"),
        (3, "d1.2 d1.2'", "e"),
        (3, "d2.3 d3.1", "d1.2 d2.3"),
    ];
    for (n, u, v) in pairs {
        let verdict = kb_equal(&KbWord::parse(u, n)?, &KbWord::parse(v, n)?, DEFAULT_BUDGET)?;
        println!("[{u}] vs [{v}] in KB_{n}: {}", serde_json::to_string(&verdict).expect("json"));
    }

    let w = KbWord::parse("d1.2' d2.3 d1.2 d2.3'", 3)?;
    let (a, b) = (w.letters()[0].gen, w.letters()[1].gen);
    println!("Garside form of {w}: {}", dihedral_normal_form(&w, a, b)?);
    Ok(())
}
