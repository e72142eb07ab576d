//! Minor containment and the excluded-minor predicates.
//!
//! `N` is a minor of `M` exactly when some rank-`(r(M) - r(N))` flat `F`
//! spanned by elements of `M` leaves a contraction `M / F` with a restriction
//! isomorphic to `N`. The search walks those flats once each. When `N` is
//! simple of rank at most 4, the contraction is read as a point set of
//! `PG(k-1, 2)` and looked up in a table of all supersets of linear images of
//! `N`; otherwise [`crate::iso`]'s embedding search runs on the projection.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::gf2::{Bits, EchelonBasis};
use crate::iso::canonical_key;
use crate::matroid::BinaryMatroid;
use crate::zoo;

/// Default cap on flats visited by one minor search.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorOptions {
    pub node_budget: u64,
    /// Skip contraction flats spanning this element. Only sound when the
    /// sought minor is known to be absent from the contraction by it.
    pub avoid_element: Option<usize>,
}

impl Default for MinorOptions {
    fn default() -> Self {
        MinorOptions { node_budget: DEFAULT_NODE_BUDGET, avoid_element: None }
    }
}

/// Coordinates in the quotient by a subspace: the non-pivot bits of the
/// fully reduced vector, packed.
struct Quotient {
    basis: EchelonBasis,
    free: Vec<u32>,
}

impl Quotient {
    fn new(basis: EchelonBasis, r: usize) -> Self {
        let pivots = basis.pivot_mask();
        let free = (0..r as u32).filter(|&i| pivots >> i & 1 == 0).collect();
        Quotient { basis, free }
    }

    fn project(&self, v: u64) -> u64 {
        let res = self.basis.reduce(v);
        let mut out = 0u64;
        for (k, &i) in self.free.iter().enumerate() {
            out |= (res >> i & 1) << k;
        }
        out
    }

    /// Bit `p - 1` set for every nonzero projected point `p`.
    fn point_mask(&self, cols: &[u64]) -> u64 {
        let mut mask = 0u64;
        for &c in cols {
            let p = self.project(c);
            if p != 0 {
                mask |= 1u64 << (p - 1);
            }
        }
        mask
    }
}

/// Calls `visit` once for every flat of rank `target` spanned by elements,
/// passing its echelon basis. Stops early when `visit` returns true.
fn for_each_flat<F>(cols: &[u64], target: usize, opts: &MinorOptions, mut visit: F) -> Result<bool>
where
    F: FnMut(&EchelonBasis) -> bool,
{
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut nodes = 0u64;
    fn closure(cols: &[u64], basis: &EchelonBasis) -> Bits {
        (0..cols.len()).filter(|&j| basis.contains(cols[j])).collect()
    }
    #[allow(clippy::too_many_arguments)]
    fn go<F: FnMut(&EchelonBasis) -> bool>(
        cols: &[u64],
        target: usize,
        avoid: Option<u64>,
        basis: &mut EchelonBasis,
        seen: &mut HashSet<Bits>,
        nodes: &mut u64,
        budget: u64,
        visit: &mut F,
    ) -> Result<bool> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        if basis.len() == target {
            return Ok(visit(basis));
        }
        let flat = closure(cols, basis);
        for j in 0..cols.len() {
            if flat.get(j) {
                continue;
            }
            let len = basis.len();
            basis.insert(cols[j]);
            let spans_avoided = avoid.is_some_and(|v| basis.contains(v));
            let next = closure(cols, basis);
            if !spans_avoided && seen.insert(next) && go(cols, target, avoid, basis, seen, nodes, budget, visit)? {
                return Ok(true);
            }
            basis.truncate(len);
        }
        Ok(false)
    }
    let mut basis = EchelonBasis::new();
    let avoid = opts.avoid_element.map(|e| cols[e]);
    if avoid == Some(0) {
        return Ok(false);
    }
    go(cols, target, avoid, &mut basis, &mut seen, &mut nodes, opts.node_budget, &mut visit)
}

/// Table over point sets of `PG(k-1, 2)`: entry `mask` is true when the set
/// contains a linear image of `N`.
struct PointTable {
    k: usize,
    hits: Vec<bool>,
}

impl PointTable {
    fn build(n: &BinaryMatroid) -> PointTable {
        let k = n.rank();
        let points = (1usize << k) - 1;
        let mut hits = vec![false; 1usize << points];
        let mut images = vec![0u64; k];
        fn bases(k: usize, images: &mut Vec<u64>, depth: usize, span: &mut EchelonBasis, f: &mut dyn FnMut(&[u64])) {
            if depth == k {
                f(images);
                return;
            }
            for v in 1u64..(1u64 << k) {
                let len = span.len();
                if span.insert(v) {
                    images[depth] = v;
                    bases(k, images, depth + 1, span, f);
                    span.truncate(len);
                }
            }
        }
        let cols = n.columns().to_vec();
        let mut span = EchelonBasis::new();
        bases(k, &mut images, 0, &mut span, &mut |img| {
            let mut mask = 0usize;
            for &c in &cols {
                let mut v = 0u64;
                let mut bits = c;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    v ^= img[i];
                    bits &= bits - 1;
                }
                mask |= 1usize << (v - 1);
            }
            hits[mask] = true;
        });
        for bit in 0..points {
            for mask in 0..hits.len() {
                if mask >> bit & 1 == 1 && hits[mask ^ (1 << bit)] {
                    hits[mask] = true;
                }
            }
        }
        PointTable { k, hits }
    }
}

fn table_cache() -> &'static Mutex<HashMap<Vec<u8>, Arc<PointTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u8>, Arc<PointTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn point_table(n: &BinaryMatroid) -> Result<Arc<PointTable>> {
    let key = canonical_key(n)?.0;
    if let Some(t) = table_cache().lock().expect("table cache").get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(PointTable::build(n));
    table_cache().lock().expect("table cache").insert(key, table.clone());
    Ok(table)
}

fn table_eligible(n: &BinaryMatroid) -> bool {
    n.rank() <= 4 && n.is_simple() && !n.is_empty()
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut b = 1f64;
    for i in 0..k.min(n) {
        b = b * (n - i) as f64 / (i + 1) as f64;
    }
    b
}

/// Estimated work for searching `n` in `m` directly.
fn side_cost(m: &BinaryMatroid, n: &BinaryMatroid) -> f64 {
    let flats = binomial(m.len(), m.rank() - n.rank());
    if table_eligible(n) {
        flats
    } else {
        flats * 50.0
    }
}

fn has_minor_direct(m: &BinaryMatroid, n: &BinaryMatroid, opts: &MinorOptions) -> Result<bool> {
    let k = n.rank();
    let r = m.rank();
    let cols = m.columns();
    if table_eligible(n) {
        let table = point_table(n)?;
        debug_assert_eq!(table.k, k);
        return for_each_flat(cols, r - k, opts, |basis| {
            let q = Quotient::new(basis.clone(), r);
            table.hits[q.point_mask(cols) as usize]
        });
    }
    let mut failure = None;
    let found = for_each_flat(cols, r - k, opts, |basis| {
        // elements of the flat become loops after contraction; an
        // independent set spanning it is contracted, the rest stay as loops
        let q = Quotient::new(basis.clone(), r);
        let mut vecs: Vec<u64> = cols.iter().map(|&c| q.project(c)).collect();
        let mut dropped = 0;
        vecs.retain(|&v| {
            if v == 0 && dropped < basis.len() {
                dropped += 1;
                false
            } else {
                true
            }
        });
        match embeds_in_vectors(n, &vecs) {
            Ok(hit) => hit,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

fn embeds_in_vectors(n: &BinaryMatroid, vecs: &[u64]) -> Result<bool> {
    let labels = crate::matroid::numeric_labels(vecs.len());
    let host = BinaryMatroid::from_vectors(vecs, labels)?;
    crate::iso::restriction_embeds(n, &host)
}

/// Whether `n` is isomorphic to a minor of `m`.
pub fn has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> Result<bool> {
    has_minor_with(m, n, &MinorOptions::default())
}

pub fn has_minor_with(m: &BinaryMatroid, n: &BinaryMatroid, opts: &MinorOptions) -> Result<bool> {
    if n.len() > m.len() || n.rank() > m.rank() || n.corank() > m.corank() {
        return Ok(false);
    }
    if n.is_empty() {
        return Ok(true);
    }
    if opts.avoid_element.is_some() {
        return has_minor_direct(m, n, opts);
    }
    let primal = side_cost(m, n);
    let (md, nd) = (m.try_dual(), n.try_dual());
    if let (Ok(md), Ok(nd)) = (md, nd) {
        if side_cost(&md, &nd) < primal {
            return has_minor_direct(&md, &nd, opts);
        }
    }
    has_minor_direct(m, n, opts)
}

/// Which of the three rank-4 minors a matroid contains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MinorScreen {
    pub fano: bool,
    pub fano_dual: bool,
    pub mk5: bool,
}

impl MinorScreen {
    pub fn is_regular(&self) -> bool {
        !self.fano && !self.fano_dual
    }
}

const SCREEN_FANO: u8 = 1;
const SCREEN_FANO_DUAL: u8 = 2;
const SCREEN_MK5: u8 = 4;

/// Flags for every point set of `PG(3, 2)`.
fn screen_table() -> &'static [u8] {
    static TABLE: OnceLock<Vec<u8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let bit = |p: u64| 1u32 << (p - 1);
        // lines through each point as pairs of the other two points
        let mut lines_through: Vec<Vec<(u64, u64)>> = vec![Vec::new(); 16];
        for x in 1u64..16 {
            for y in 1u64..16 {
                let z = x ^ y;
                if y != x && y < z {
                    lines_through[x as usize].push((y, z));
                }
            }
        }
        // hyperplanes as point masks, one per nonzero functional
        let hyperplanes: Vec<u32> =
            (1u64..16).map(|f| (1u64..16).filter(|p| (p & f).count_ones() % 2 == 0).map(bit).fold(0, |a, b| a | b)).collect();
        // frames: five points, any four independent
        let mut frames: Vec<u32> = Vec::new();
        for s in 0u32..(1 << 15) {
            if s.count_ones() != 5 {
                continue;
            }
            let pts: Vec<u64> = (0..15).filter(|i| s >> i & 1 == 1).map(|i| i as u64 + 1).collect();
            let general = (0..5).all(|skip| {
                let four: Vec<u64> = (0..5).filter(|&i| i != skip).map(|i| pts[i]).collect();
                crate::gf2::rank_of_vectors(four) == 4
            });
            if general {
                frames.push(s);
            }
        }
        debug_assert_eq!(frames.len(), 168);
        let all: u32 = (1 << 15) - 1;
        (0u32..(1 << 15))
            .map(|mask| {
                let mut flags = 0u8;
                let fano = (1u64..16).any(|x| {
                    mask & bit(x) != 0
                        && lines_through[x as usize].iter().all(|&(y, z)| mask & (bit(y) | bit(z)) != 0)
                });
                if fano {
                    flags |= SCREEN_FANO;
                }
                if hyperplanes.iter().any(|h| (mask & !h).count_ones() >= 7) {
                    flags |= SCREEN_FANO_DUAL;
                }
                if frames.iter().any(|f| all & !f & !mask == 0) {
                    flags |= SCREEN_MK5;
                }
                flags
            })
            .collect()
    })
}

/// Screens for `F7`, `F7*` and `M(K5)` minors together, by reading every
/// rank-4 contraction as a point set of `PG(3, 2)`. An `F7` minor shows up as
/// a point whose lines all meet the set again, `F7*` as at least seven points
/// off some hyperplane, and `M(K5)` as a set containing the complement of a
/// five-point frame.
pub fn screen_minors(m: &BinaryMatroid) -> Result<MinorScreen> {
    screen_minors_with(m, &MinorOptions::default())
}

pub fn screen_minors_with(m: &BinaryMatroid, opts: &MinorOptions) -> Result<MinorScreen> {
    screen_until(m, opts, SCREEN_FANO | SCREEN_FANO_DUAL | SCREEN_MK5, false)
}

/// Screen that stops at the first flag found, for callers rejecting on any.
/// Flags other than the first may then be missing from the result.
pub fn screen_first_hit(m: &BinaryMatroid, opts: &MinorOptions, want_mk5: bool) -> Result<MinorScreen> {
    let mask = SCREEN_FANO | SCREEN_FANO_DUAL | if want_mk5 { SCREEN_MK5 } else { 0 };
    screen_until(m, opts, mask, true)
}

fn screen_until(m: &BinaryMatroid, opts: &MinorOptions, mask: u8, any: bool) -> Result<MinorScreen> {
    let r = m.rank();
    let cols = m.columns();
    if r < 4 {
        let fano = r == 3 && m.len() >= 7 && has_minor_with(m, &zoo::fano(), opts)?;
        return Ok(MinorScreen { fano, ..Default::default() });
    }
    let table = screen_table();
    let mut flags = 0u8;
    for_each_flat(cols, r - 4, opts, |basis| {
        let q = Quotient::new(basis.clone(), r);
        flags |= table[q.point_mask(cols) as usize] & mask;
        if any {
            flags != 0
        } else {
            flags == mask
        }
    })?;
    Ok(MinorScreen {
        fano: flags & SCREEN_FANO != 0,
        fano_dual: flags & SCREEN_FANO_DUAL != 0,
        mk5: flags & SCREEN_MK5 != 0,
    })
}

/// No `F7` or `F7*` minor.
pub fn is_regular(m: &BinaryMatroid) -> Result<bool> {
    Ok(screen_minors(m)?.is_regular())
}

fn excluded_for_graphic() -> &'static [BinaryMatroid] {
    static LIST: OnceLock<Vec<BinaryMatroid>> = OnceLock::new();
    LIST.get_or_init(|| {
        let k5 = zoo::graph_matroid(&zoo::complete_graph(5)).expect("K5");
        let k33 = zoo::graph_matroid(&zoo::complete_bipartite_graph(3, 3)).expect("K33");
        vec![k5.dual(), k33.dual()]
    })
}

/// No `F7`, `F7*`, `M*(K5)` or `M*(K3,3)` minor.
pub fn is_graphic(m: &BinaryMatroid) -> Result<bool> {
    if !is_regular(m)? {
        return Ok(false);
    }
    for n in excluded_for_graphic() {
        if has_minor(m, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_cographic(m: &BinaryMatroid) -> Result<bool> {
    is_graphic(&m.try_dual()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::numeric_labels;
    use crate::zoo::{make_named, parse_named};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Exhaustive minor test over all disjoint (contract, delete) pairs.
    fn oracle_has_minor(m: &BinaryMatroid, n: &BinaryMatroid) -> bool {
        let size = m.len();
        let k = m.rank() - n.rank();
        for c in 0u64..(1 << size) {
            if c.count_ones() as usize != k || m.rank_of_indices(&Bits::from_low_word(c)) != k {
                continue;
            }
            let con = m.contract_indices(&Bits::from_low_word(c));
            for keep in 0u64..(1 << con.len()) {
                if keep.count_ones() as usize != n.len() {
                    continue;
                }
                let sub = con.restrict_indices(&Bits::from_low_word(keep));
                if sub.rank() == n.rank() && crate::iso::are_isomorphic(&sub, n).unwrap() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn minor_examples() {
        let pg = make_named("pg32", &[]).unwrap();
        let f7 = zoo::fano();
        assert!(has_minor(&pg, &f7).unwrap());
        assert!(!has_minor(&zoo::r10(), &f7).unwrap());
        let k5 = make_named("complete", &[5]).unwrap();
        let k33_11 = make_named("k33ij", &[1, 1]).unwrap();
        assert!(has_minor(&k33_11, &k5).unwrap());
        assert!(!has_minor(&make_named("k33ij", &[1, 0]).unwrap(), &k5).unwrap());
        assert!(has_minor(&f7, &f7).unwrap());
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&zoo::r10()).unwrap());
        assert!(is_regular(&zoo::r12()).unwrap());
        assert!(!is_regular(&zoo::fano()).unwrap());
        assert!(!is_regular(&zoo::fano().dual()).unwrap());
        assert!(is_regular(&make_named("complete", &[5]).unwrap()).unwrap());
        assert!(!is_regular(&zoo::ag32()).unwrap());
    }

    #[test]
    fn graphicness() {
        assert!(is_graphic(&make_named("wheel", &[4]).unwrap()).unwrap());
        let k5 = make_named("complete", &[5]).unwrap();
        assert!(is_graphic(&k5).unwrap());
        assert!(!is_graphic(&k5.dual()).unwrap());
        let t = make_named("k33ij", &[3, 0]).unwrap().dual();
        assert!(is_cographic(&t).unwrap());
        assert!(!is_graphic(&t).unwrap());
        for m in [zoo::r10(), zoo::r12()] {
            assert!(!is_graphic(&m).unwrap());
            assert!(!is_cographic(&m).unwrap());
        }
    }

    #[test]
    fn screen_agrees_with_has_minor_on_zoo() {
        let f7 = zoo::fano();
        let f7d = f7.dual();
        let k5 = make_named("complete", &[5]).unwrap();
        for spec in ["pg32", "ag32", "r10", "r12", "s8", "spike:5", "k33ij:1:1", "k33ij:3:0", "wheel:5", "complete:5", "fano_dual"] {
            let m = parse_named(spec).unwrap();
            let s = screen_minors(&m).unwrap();
            assert_eq!(s.fano, has_minor(&m, &f7).unwrap(), "{spec} F7");
            assert_eq!(s.fano_dual, has_minor(&m, &f7d).unwrap(), "{spec} F7*");
            assert_eq!(s.mk5, has_minor(&m, &k5).unwrap(), "{spec} M(K5)");
        }
    }

    #[test]
    fn agrees_with_exhaustive_oracle() {
        let mut rng = StdRng::seed_from_u64(3);
        let small = [
            zoo::uniform(2, 3).unwrap(),
            make_named("complete", &[4]).unwrap(),
            zoo::uniform(1, 2).unwrap(),
            BinaryMatroid::from_vectors(&[1, 2, 3, 3], numeric_labels(4)).unwrap(),
            zoo::uniform(3, 4).unwrap(),
        ];
        for _ in 0..25 {
            let n = rng.gen_range(4..9);
            let vecs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..16)).collect();
            let m = BinaryMatroid::from_vectors(&vecs, numeric_labels(n)).unwrap();
            for s in &small {
                if s.rank() <= m.rank() && s.len() <= m.len() && s.corank() <= m.corank() {
                    assert_eq!(has_minor(&m, s).unwrap(), oracle_has_minor(&m, s), "{m:?} {s:?}");
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = MinorOptions { node_budget: 3, ..Default::default() };
        let m = make_named("k33ij", &[3, 0]).unwrap();
        assert!(matches!(has_minor_with(&m, &zoo::fano(), &opts), Err(Error::BudgetExceeded(3))));
    }
}
