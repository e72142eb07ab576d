//! The Γ operator and one filtered layer of coextensions of S8.

use binmat::extend::{enumerate_extensions, gamma, CatalogLayer, ExtendOptions, ExtensionVector, Filter};
use binmat::zoo;

fn main() -> binmat::Result<()> {
    let s8 = zoo::s2n(4)?;
    let v: ExtensionVector = "20000200".parse()?;
    let g = gamma(s8.rep(), &v)?;
    println!("Γ(S8, {v}):");
    for row in g.to_row_strings() {
        println!("  {row}");
    }
    let seeds = CatalogLayer::from_seeds(4, &[s8.dual()])?;
    let opts = ExtendOptions { dual_stats: true, ..Default::default() };
    let out = enumerate_extensions(&seeds, &[Filter::Cosimple], &opts)?;
    println!(
        "{} vectors, {} skipped by automorphisms, {} classes of 3-connected coextensions",
        out.stats.candidates,
        out.stats.orbit_pruned,
        out.layer.len()
    );
    for item in &out.layer.items {
        let stats = item.dual_stats.expect("requested");
        println!(
            "  {} elements, |Ytilde of dual| = {}, from vector {}",
            item.matrix.cols(),
            stats.ytilde_size,
            item.vector.as_ref().map(|v| v.to_string()).unwrap_or_default()
        );
    }
    Ok(())
}
