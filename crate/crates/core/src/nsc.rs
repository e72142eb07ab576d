//! Cocircuits, non-separating cocircuits and the derived quantities
//! `dep`, `Y(M)`, `Ỹ(M)` and `X(M)`.
//!
//! Two enumeration routes are available. The scan route walks the row space of
//! the standard representation in Gray-code order and keeps codewords whose
//! complement is a hyperplane. The dual route lists the circuits of `M*`
//! directly, which is far cheaper when `r(M)` is large and `r*(M)` small.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Bits, EchelonBasis};
use crate::matroid::{vectors_connected, BinaryMatroid, ElementSet, Label};

/// Default bound on the rank of the side that gets enumerated.
pub const DEFAULT_SCAN_LIMIT: usize = 24;

/// A cocircuit given by its row-space coefficient vector `u` and the support
/// of the codeword `u^T A`, as element indices of the standard representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cocircuit {
    pub coeff: u64,
    pub support: Bits,
}

/// Which enumeration to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// Pick whichever side is cheaper.
    #[default]
    Auto,
    /// Scan the `2^r` codewords of the row space.
    Scan,
    /// Enumerate circuits of the dual by depth-first search.
    DualCircuits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NscOptions {
    pub scan_limit: usize,
    pub route: Route,
}

impl Default for NscOptions {
    fn default() -> Self {
        NscOptions { scan_limit: DEFAULT_SCAN_LIMIT, route: Route::Auto }
    }
}

/// The raw inputs of a standard-form matroid: `cols[j]` for `j < r` is the
/// unit vector `e_j`.
struct Standard<'a> {
    cols: &'a [u64],
    r: usize,
}

impl Standard<'_> {
    fn n(&self) -> usize {
        self.cols.len()
    }

    /// Rows of the representation as element bitsets.
    fn rows(&self) -> Vec<Bits> {
        let mut rows = vec![Bits::empty(); self.r];
        for (j, &c) in self.cols.iter().enumerate() {
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                rows[i].insert(j);
                bits &= bits - 1;
            }
        }
        rows
    }

    /// Dual column vectors: basis element `i` maps to row `i` of `D`,
    /// non-basis element `r + k` to the unit vector `e_k`.
    fn dual_columns(&self) -> Vec<u64> {
        let r = self.r;
        let mut out = vec![0u64; self.n()];
        for (k, &c) in self.cols[r..].iter().enumerate() {
            out[r + k] = 1u64 << k;
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                out[i] |= 1u64 << k;
                bits &= bits - 1;
            }
        }
        out
    }
}

/// Rough operation counts for the two routes.
fn route_costs(r: usize, n: usize) -> (f64, f64) {
    let scan = 2f64.powi(r as i32) * n as f64;
    let k = n - r;
    let mut binom = 1f64;
    let mut total = 1f64;
    for i in 1..=k {
        binom = binom * (n - i + 1) as f64 / i as f64;
        total += binom;
    }
    (scan, total * 4.0)
}

fn choose_route(r: usize, n: usize, opts: &NscOptions) -> Result<Route> {
    let k = n - r;
    match opts.route {
        Route::Scan if r > opts.scan_limit => Err(Error::ScanLimitExceeded { rank: r, limit: opts.scan_limit }),
        Route::Scan => Ok(Route::Scan),
        Route::DualCircuits if k > 64 => Err(Error::ScanLimitExceeded { rank: k, limit: opts.scan_limit }),
        Route::DualCircuits => Ok(Route::DualCircuits),
        Route::Auto => {
            if r.min(k) > opts.scan_limit {
                return Err(Error::ScanLimitExceeded { rank: r.min(k), limit: opts.scan_limit });
            }
            let (scan, dfs) = route_costs(r, n);
            if (r <= opts.scan_limit && scan <= dfs) || k > 64 {
                Ok(Route::Scan)
            } else {
                Ok(Route::DualCircuits)
            }
        }
    }
}

fn scan_cocircuits(std: &Standard) -> Vec<Cocircuit> {
    let r = std.r;
    let n = std.n();
    let rows = std.rows();
    let mut out = Vec::new();
    let mut w = Bits::empty();
    let mut u = 0u64;
    let total: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    let mut g = 0u64;
    while g < total {
        g += 1;
        let i = g.trailing_zeros() as usize;
        u ^= 1u64 << i;
        w ^= rows[i];
        // complement lies in the hyperplane u^perp; it is a cocircuit iff it spans it
        let mut basis = EchelonBasis::new();
        for j in 0..n {
            if !w.get(j) {
                basis.insert(std.cols[j]);
                if basis.len() + 1 == r {
                    break;
                }
            }
        }
        if basis.len() + 1 == r {
            out.push(Cocircuit { coeff: u, support: w });
        }
    }
    out
}

/// Circuits of `M*` are the cocircuits of `M`. A circuit `S + x` with `x`
/// its largest element is found from the independent set `S` whose vectors
/// sum to the dual vector of `x`.
fn dual_circuit_cocircuits(std: &Standard) -> Vec<Cocircuit> {
    let n = std.n();
    let r = std.r;
    let dual = std.dual_columns();
    let mut by_vec: HashMap<u64, Vec<usize>> = HashMap::new();
    for (j, &v) in dual.iter().enumerate() {
        by_vec.entry(v).or_default().push(j);
    }
    let coeff_mask: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    let mut out = Vec::new();
    let mut emit = |set: Bits| {
        out.push(Cocircuit { coeff: set.low_word() & coeff_mask, support: set });
    };

    struct Ctx<'a> {
        dual: &'a [u64],
        by_vec: &'a HashMap<u64, Vec<usize>>,
        basis: EchelonBasis,
        set: Bits,
    }
    fn go(ctx: &mut Ctx, start: usize, sum: u64, emit: &mut dyn FnMut(Bits)) {
        let max_in_set = start;
        if let Some(xs) = ctx.by_vec.get(&sum) {
            for &x in xs {
                if x >= max_in_set {
                    let mut c = ctx.set;
                    c.insert(x);
                    emit(c);
                }
            }
        }
        for j in start..ctx.dual.len() {
            let len = ctx.basis.len();
            if ctx.basis.insert(ctx.dual[j]) {
                ctx.set.insert(j);
                go(ctx, j + 1, sum ^ ctx.dual[j], emit);
                ctx.set.remove(j);
                ctx.basis.truncate(len);
            }
        }
    }
    let mut ctx = Ctx { dual: &dual, by_vec: &by_vec, basis: EchelonBasis::new(), set: Bits::empty() };
    // the empty set pairs with dual loops; those are coloops of M
    if let Some(xs) = by_vec.get(&0) {
        for &x in xs {
            emit(Bits::from_indices([x]));
        }
    }
    for j in 0..n {
        if ctx.basis.insert(dual[j]) {
            ctx.set.insert(j);
            go(&mut ctx, j + 1, dual[j], &mut emit);
            ctx.set.remove(j);
            ctx.basis.truncate(0);
        }
    }
    out
}

fn raw_cocircuits(cols: &[u64], r: usize, opts: &NscOptions) -> Result<Vec<Cocircuit>> {
    let std = Standard { cols, r };
    Ok(match choose_route(r, cols.len(), opts)? {
        Route::Scan | Route::Auto => scan_cocircuits(&std),
        Route::DualCircuits => dual_circuit_cocircuits(&std),
    })
}

fn is_nonseparating(cols: &[u64], support: &Bits) -> bool {
    let rest: Vec<u64> = cols.iter().enumerate().filter(|(j, _)| !support.get(*j)).map(|(_, &c)| c).collect();
    vectors_connected(&rest)
}

/// Non-separating cocircuits of the standard-form matroid with columns
/// `cols` and rank `r`, unsorted. Used by the extension pipeline.
pub fn raw_nonseparating(cols: &[u64], r: usize, opts: &NscOptions) -> Result<Vec<Cocircuit>> {
    let mut all = raw_cocircuits(cols, r, opts)?;
    all.retain(|c| is_nonseparating(cols, &c.support));
    Ok(all)
}

/// `Ỹ` as an index set, from a list of non-separating cocircuits.
pub fn raw_ytilde(n: usize, nsc: &[Cocircuit]) -> Bits {
    let mut out = Bits::empty();
    for e in 0..n {
        let mut basis = EchelonBasis::new();
        let mut count = 0usize;
        for c in nsc.iter().filter(|c| !c.support.get(e)) {
            count += 1;
            basis.insert(c.coeff);
        }
        if count == basis.len() {
            out.insert(e);
        }
    }
    out
}

/// Corank of `Ỹ(M)` for a standard-form matroid given by raw columns.
pub fn raw_ytilde_corank(cols: &[u64], r: usize, opts: &NscOptions) -> Result<usize> {
    let nsc = raw_nonseparating(cols, r, opts)?;
    let yt = raw_ytilde(cols.len(), &nsc);
    Ok(corank_of_raw(cols, r, &yt))
}

fn corank_of_raw(cols: &[u64], r: usize, set: &Bits) -> usize {
    let mut basis = EchelonBasis::new();
    for (j, &c) in cols.iter().enumerate() {
        if !set.get(j) {
            basis.insert(c);
        }
    }
    set.count() + basis.len() - r
}

fn sort_key(m: &BinaryMatroid, c: &Cocircuit) -> (usize, Vec<Label>) {
    let mut labels: Vec<Label> = c.support.iter().map(|j| m.label(j).clone()).collect();
    labels.sort();
    (labels.len(), labels)
}

fn sorted(m: &BinaryMatroid, mut list: Vec<Cocircuit>) -> Vec<Cocircuit> {
    let mut keyed: Vec<_> = list.drain(..).map(|c| (sort_key(m, &c), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, c)| c).collect()
}

/// All cocircuits, sorted by size and then by their label lists.
pub fn cocircuits(m: &BinaryMatroid) -> Result<Vec<Cocircuit>> {
    cocircuits_with(m, &NscOptions::default())
}

pub fn cocircuits_with(m: &BinaryMatroid, opts: &NscOptions) -> Result<Vec<Cocircuit>> {
    Ok(sorted(m, raw_cocircuits(m.columns(), m.rank(), opts)?))
}

/// Cocircuits `C*` with `M \ C*` connected, in the order of [`cocircuits`].
pub fn nonseparating_cocircuits(m: &BinaryMatroid) -> Result<Vec<Cocircuit>> {
    nonseparating_cocircuits_with(m, &NscOptions::default())
}

pub fn nonseparating_cocircuits_with(m: &BinaryMatroid, opts: &NscOptions) -> Result<Vec<Cocircuit>> {
    Ok(sorted(m, raw_nonseparating(m.columns(), m.rank(), opts)?))
}

/// `|F| - dim span(F)` for the family `F` of non-separating cocircuits
/// disjoint from `a`.
pub fn dep(m: &BinaryMatroid, a: &ElementSet) -> Result<usize> {
    let idx = m.indices_of(a)?;
    let nsc = raw_nonseparating(m.columns(), m.rank(), &NscOptions::default())?;
    Ok(dep_of(&nsc, &idx))
}

fn dep_of(nsc: &[Cocircuit], avoid: &Bits) -> usize {
    let mut basis = EchelonBasis::new();
    let mut count = 0;
    for c in nsc.iter().filter(|c| c.support.is_disjoint(avoid)) {
        count += 1;
        basis.insert(c.coeff);
    }
    count - basis.len()
}

/// Summary of the non-separating cocircuit structure of a matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NscReport {
    pub r: usize,
    pub n: usize,
    pub labels: Vec<Label>,
    /// Supports of the non-separating cocircuits, each in label order.
    pub nsc: Vec<Vec<Label>>,
    /// Coefficient vectors matching `nsc`, as `r`-character bit strings.
    pub coeffs: Vec<String>,
    pub meets: BTreeMap<Label, usize>,
    pub avoids: BTreeMap<Label, usize>,
    pub dep: BTreeMap<Label, usize>,
    #[serde(rename = "Y")]
    pub y: ElementSet,
    #[serde(rename = "Ytilde")]
    pub ytilde: ElementSet,
    pub ytilde_corank: usize,
}

impl NscReport {
    /// Elements meeting more than two non-separating cocircuits.
    pub fn x_set(&self) -> ElementSet {
        self.meets.iter().filter(|(_, &c)| c > 2).map(|(l, _)| l.clone()).collect()
    }
}

pub fn report(m: &BinaryMatroid) -> Result<NscReport> {
    report_with(m, &NscOptions::default())
}

pub fn report_with(m: &BinaryMatroid, opts: &NscOptions) -> Result<NscReport> {
    let nsc = nonseparating_cocircuits_with(m, opts)?;
    let n = m.len();
    let mut meets = BTreeMap::new();
    let mut avoids = BTreeMap::new();
    let mut deps = BTreeMap::new();
    let mut y = ElementSet::new();
    for e in 0..n {
        let label = m.label(e).clone();
        let met = nsc.iter().filter(|c| c.support.get(e)).count();
        let d = dep_of(&nsc, &Bits::from_indices([e]));
        meets.insert(label.clone(), met);
        avoids.insert(label.clone(), nsc.len() - met);
        deps.insert(label.clone(), d);
        if d > 0 {
            y.insert(label);
        }
    }
    let ytilde: ElementSet = m.ground_set().difference(&y).cloned().collect();
    let ytilde_corank = m.corank_of(&ytilde)?;
    let r = m.rank();
    Ok(NscReport {
        r,
        n,
        labels: m.labels().to_vec(),
        nsc: nsc.iter().map(|c| sort_key(m, c).1).collect(),
        coeffs: nsc.iter().map(|c| (0..r).map(|i| if c.coeff >> i & 1 == 1 { '1' } else { '0' }).collect()).collect(),
        meets,
        avoids,
        dep: deps,
        y,
        ytilde,
        ytilde_corank,
    })
}

/// Dimension of the span of the coefficient vectors of `list`.
pub fn span_dimension<'a, I: IntoIterator<Item = &'a Cocircuit>>(list: I) -> usize {
    let mut basis = EchelonBasis::new();
    for c in list {
        basis.insert(c.coeff);
    }
    basis.len()
}
