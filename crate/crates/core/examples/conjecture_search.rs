//! Builds the search layers up to a rank given on the command line and
//! prints the report.
//!
//! ```text
//! cargo run --release --example conjecture_search -- 7 /tmp/catalog
//! ```

use binmat::drivers::{conjecture_search, SearchOptions};

fn main() -> binmat::Result<()> {
    env_logger::init();
    let mut args = std::env::args().skip(1);
    let max_rank = args.next().map(|s| s.parse().expect("rank")).unwrap_or(6);
    let catalog_dir = args.next().map(Into::into);
    let opts = SearchOptions { max_rank, catalog_dir, resume: true, ..Default::default() };
    let rep = conjecture_search(&opts)?;
    println!("{}", rep.to_json());
    std::process::exit(rep.exit_code());
}
