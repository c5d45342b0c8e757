//! Folding VB_n words into KB_n ⋊ S_n and evaluating catalog maps.

use vbw::vb::{sd_multiply, to_semidirect, vb_abelianize, CatalogHom, VbWord};

fn main() -> vbw::Result<()> {
    let n = 4;
    for text in ["t1 s1", "s1 s2 s1'", "t1 s2 t1", "d1.3"] {
        let w = VbWord::parse(text, n)?;
        let x = to_semidirect(&w);
        println!("{text:>12} -> kb = {}, perm = {:?}, abelianized {:?}", x.kb, x.perm.one_line(), vb_abelianize(&w));
    }

    let a = to_semidirect(&VbWord::parse("s1 t2", n)?);
    let b = to_semidirect(&VbWord::parse("s3'", n)?);
    println!("(s1 t2)(s3') = {}", sd_multiply(&a, &b)?);

    let w = VbWord::parse("t1 s2 t1", n)?;
    for name in ["piK", "piP", "zeta1", "zeta2", "piP.zeta2"] {
        let h = CatalogHom::by_name(name, n)?;
        println!("{name}(t1 s2 t1) = {}", h.eval(&w)?);
    }
    Ok(())
}
