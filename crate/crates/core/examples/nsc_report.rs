//! Non-separating cocircuits and the sets Y, Ỹ of a named matroid.
//!
//! ```text
//! cargo run --example nsc_report -- s2n:4
//! ```

use binmat::nsc::report;
use binmat::zoo;

fn main() -> binmat::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "r10".into());
    let m = zoo::parse_named(&spec)?;
    let rep = report(&m)?;
    println!("{spec}: rank {}, {} elements, {} non-separating cocircuits", rep.r, rep.n, rep.nsc.len());
    for c in &rep.nsc {
        let names: Vec<&str> = c.iter().map(|l| l.as_str()).collect();
        println!("  {{{}}}", names.join(" "));
    }
    println!("element  meets  avoids  dep");
    for l in &rep.labels {
        println!("{:>7} {:>6} {:>7} {:>4}", l.as_str(), rep.meets[l], rep.avoids[l], rep.dep[l]);
    }
    let ytilde: Vec<&str> = rep.ytilde.iter().map(|l| l.as_str()).collect();
    println!("Ytilde = {{{}}}, corank {}", ytilde.join(" "), rep.ytilde_corank);
    Ok(())
}
