//! Rank, standard form and row-space codewords of a small GF(2) matrix.

use binmat::BitMatrix;

fn main() -> binmat::Result<()> {
    let a = BitMatrix::from_rows(&["1101", "0111", "1010"])?;
    println!("rank {}", a.rank());
    let (reduced, pivots) = a.rref();
    println!("rref pivots {pivots:?}");
    for row in reduced.to_row_strings() {
        println!("  {row}");
    }
    let b = BitMatrix::from_rows(&["1101", "0111"])?;
    let (std_form, perm) = b.standardize()?;
    println!("standard form with column order {perm:?}:");
    for row in std_form.to_row_strings() {
        println!("  {row}");
    }
    println!("row space:");
    for (coeff, word) in std_form.row_space_codewords() {
        let bits: Vec<usize> = word.iter().collect();
        println!("  {coeff:02b} -> {bits:?}");
    }
    Ok(())
}
