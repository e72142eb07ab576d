//! Canonical keys, automorphism groups and isomorphism tests.

use binmat::iso::{are_isomorphic, automorphism_group, canonical_form};
use binmat::zoo;

fn main() -> binmat::Result<()> {
    for spec in ["fano", "complete:4", "pg32", "s8"] {
        let m = zoo::parse_named(spec)?;
        let canon = canonical_form(&m)?;
        let group = automorphism_group(&m, 100_000)?;
        println!("{spec:>11}: key {} |Aut| = {}", canon.key.to_hex(), group.len());
    }
    let a = zoo::parse_named("spike:4")?;
    let b = zoo::pg_complement(&zoo::parse_named("complete:4")?, 3)?;
    println!("Z4 isomorphic to PG(3,2) minus M(K4): {}", are_isomorphic(&a, &b)?);
    Ok(())
}
