//! The named matroids and complements in PG(3, 2).

use binmat::zoo::{self, NAMES};

fn main() -> binmat::Result<()> {
    for (name, params) in NAMES {
        let spec = match *params {
            "" => name.to_string(),
            "k" | "r" | "n" => format!("{name}:4"),
            "r:n" => format!("{name}:2:3"),
            "i:j" => format!("{name}:1:1"),
            _ => format!("{name}:3:3"),
        };
        let m = zoo::parse_named(&spec)?;
        println!("{spec:>24}: rank {:>2}, {:>2} elements", m.rank(), m.len());
    }
    let k5 = zoo::pg_complement(&zoo::uniform(4, 5)?, 3)?;
    println!("PG(3,2) minus U(4,5): rank {}, {} elements", k5.rank(), k5.len());
    Ok(())
}
