//! Runs one verification driver and prints its JSON report.
//!
//! ```text
//! cargo run --release --example verify_lemmas -- comput-b
//! ```

use binmat::drivers::{self, ComputOptions, ComputPart};

fn main() -> binmat::Result<()> {
    let which = std::env::args().nth(1).unwrap_or_else(|| "initial-cases".into());
    let rep = match which.as_str() {
        "initial-cases" => drivers::verify_initial_cases()?,
        "k33" => drivers::verify_k33_family()?,
        "extremal" => drivers::verify_extremal(4..=7, 3..=5)?,
        "classify-rank4" => drivers::classify_rank4()?,
        other => {
            let part: ComputPart = other.trim_start_matches("comput-").parse()?;
            drivers::verify_comput(part, &ComputOptions::default())?
        }
    };
    println!("{}", rep.to_json());
    std::process::exit(rep.exit_code());
}
