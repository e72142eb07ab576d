//! Minor containment and the regular / graphic / cographic predicates.

use binmat::minors::{has_minor, is_cographic, is_graphic, is_regular, screen_minors};
use binmat::zoo;

fn main() -> binmat::Result<()> {
    let names = ["fano", "r10", "r12", "complete:5", "complete_bipartite:3:3", "s8", "k33ij:3:0"];
    println!("{:>22} regular graphic cographic F7 F7* M(K5)", "");
    for spec in names {
        let m = zoo::parse_named(spec)?;
        let s = screen_minors(&m)?;
        println!(
            "{spec:>22} {:>7} {:>7} {:>9} {:>2} {:>3} {:>5}",
            is_regular(&m)?,
            is_graphic(&m)?,
            is_cographic(&m)?,
            s.fano as u8,
            s.fano_dual as u8,
            s.mk5 as u8
        );
    }
    let r12 = zoo::r12();
    let k33_dual = zoo::parse_named("complete_bipartite:3:3")?.dual();
    println!("R12 has an M*(K3,3) minor: {}", has_minor(&r12, &k33_dual)?);
    Ok(())
}
