//! Single-element coextensions through the `Γ(A, v)` operator and layered,
//! isomorph-free enumeration.
//!
//! For a standard matrix `A` with columns `c_1..c_n` and `v ∈ {0,1,2}^n`,
//! `Γ(A, v)` adds a first row and a first column `e`: column `c_i` becomes
//! `(v_i mod 2, c_i)`, and every `i` with `v_i = 2` contributes an extra
//! column `(1, c_i)`. Every binary `N` with an element `e` such that
//! `si(N / e) ≅ M[A]` arises this way.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use log::{debug, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Bits, MAX_ROWS};
use crate::iso::{automorphism_group, canonical_form, CanonicalKey};
use crate::matroid::{BinaryMatroid, Label};
use crate::minors::{has_minor, screen_first_hit, MinorOptions, MinorScreen};
use crate::nsc::{raw_nonseparating, raw_ytilde, NscOptions};

/// Largest corank a candidate may have before its NSC scan is refused.
pub const DEFAULT_MAX_CORANK: usize = 24;

/// A vector over `{0, 1, 2}`, one entry per column of the base matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ExtensionVector(Vec<u8>);

impl ExtensionVector {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x > 2) {
            return Err(Error::BadVectorEntry(bad));
        }
        Ok(ExtensionVector(entries))
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the first `r` entries avoid `1`, as required in `L(A)`.
    pub fn in_layer(&self, r: usize) -> bool {
        self.0.iter().take(r).all(|&x| x != 1)
    }

    /// Number of entries equal to 2.
    pub fn doubled(&self) -> usize {
        self.0.iter().filter(|&&x| x == 2).count()
    }
}

impl fmt::Display for ExtensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({self})")
    }
}

impl FromStr for ExtensionVector {
    type Err = Error;

    /// Digits, optionally separated by commas or spaces.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for ch in s.chars() {
            match ch {
                '0'..='9' => out.push(ch as u8 - b'0'),
                ',' | ' ' => {}
                _ => return Err(Error::Parse(format!("bad character {ch:?} in vector {s:?}"))),
            }
        }
        ExtensionVector::new(out)
    }
}

impl From<ExtensionVector> for String {
    fn from(v: ExtensionVector) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for ExtensionVector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Column vectors of `Γ(A, v)` from the columns of `A` (bit `i` = row `i`).
/// The new row becomes bit 0.
pub fn gamma_columns(cols: &[u64], v: &[u8]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 + cols.len() + v.len());
    out.push(1);
    for (&c, &x) in cols.iter().zip(v) {
        out.push((c << 1) | (x & 1) as u64);
    }
    for (&c, &x) in cols.iter().zip(v) {
        if x == 2 {
            out.push((c << 1) | 1);
        }
    }
    out
}

/// `Γ(A, v)` as a matrix.
pub fn gamma(a: &BitMatrix, v: &ExtensionVector) -> Result<BitMatrix> {
    if v.len() != a.cols() {
        return Err(Error::LengthMismatch { expected: a.cols(), got: v.len() });
    }
    if a.rows() + 1 > MAX_ROWS {
        return Err(Error::DimensionLimit { rows: a.rows() + 1, cols: a.cols() + 1 + v.doubled() });
    }
    BitMatrix::from_columns(a.rows() + 1, &gamma_columns(&a.columns(), v.entries()))
}

/// Labels of `Γ(A, v)`: `e`, then `1..=n`, then `i'` for each doubled column.
pub fn gamma_labels(n: usize, v: &[u8]) -> Vec<Label> {
    let mut labels = vec![Label::from("e")];
    labels.extend((1..=n).map(|i| Label::new(i.to_string())));
    labels.extend(v.iter().enumerate().filter(|(_, &x)| x == 2).map(|(i, _)| Label::new(format!("{}'", i + 1))));
    labels
}

/// `M[Γ(A, v)]` with the labels of [`gamma_labels`].
pub fn gamma_matroid(a: &BitMatrix, v: &ExtensionVector) -> Result<BinaryMatroid> {
    let g = gamma(a, v)?;
    BinaryMatroid::from_vectors(&g.columns(), gamma_labels(a.cols(), v.entries()))
}

/// Number of vectors in a layer: `2^r 3^(n-r)`, or `3^n` for full vectors.
pub fn layer_size(r: usize, n: usize, full: bool) -> u64 {
    let twos = if full { 0 } else { r };
    2u64.pow(twos as u32) * 3u64.pow((n - twos) as u32)
}

/// The `index`-th vector of the layer in lexicographic order.
pub fn vector_at(r: usize, n: usize, full: bool, mut index: u64) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for i in (0..n).rev() {
        if !full && i < r {
            v[i] = ((index % 2) * 2) as u8;
            index /= 2;
        } else {
            v[i] = (index % 3) as u8;
            index /= 3;
        }
    }
    v
}

/// Streams the vectors of `L(A)` (or all of `{0,1,2}^n`) in lexicographic order.
pub struct LayerVectors {
    r: usize,
    n: usize,
    full: bool,
    next: u64,
    total: u64,
}

impl LayerVectors {
    pub fn new(r: usize, n: usize, full: bool) -> Self {
        LayerVectors { r, n, full, next: 0, total: layer_size(r, n, full) }
    }
}

impl Iterator for LayerVectors {
    type Item = ExtensionVector;

    fn next(&mut self) -> Option<ExtensionVector> {
        if self.next >= self.total {
            return None;
        }
        let v = vector_at(self.r, self.n, self.full, self.next);
        self.next += 1;
        Some(ExtensionVector(v))
    }
}

/// Every `(v, Γ(A, v))` of `L(A)` for a standard-form `A`.
pub fn layer(a: &BitMatrix) -> impl Iterator<Item = (ExtensionVector, BitMatrix)> + '_ {
    LayerVectors::new(a.rows(), a.cols(), false).map(move |v| {
        let g = gamma(a, &v).expect("vector matches the matrix");
        (v, g)
    })
}

/// Cosimplicity read off a standard form `[I_r | D]`: the rows of `D` must
/// be nonzero, pairwise distinct and not of weight one.
pub fn standard_cosimple(cols: &[u64], r: usize) -> bool {
    let k = cols.len() - r;
    if k > 64 {
        return false;
    }
    let mut rows = vec![0u64; r];
    for (j, &c) in cols[r..].iter().enumerate() {
        let mut bits = c;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            rows[i] |= 1u64 << j;
            bits &= bits - 1;
        }
    }
    if rows.iter().any(|&x| x.count_ones() <= 1) {
        return false;
    }
    rows.sort_unstable();
    rows.windows(2).all(|w| w[0] != w[1])
}

/// Structural predicates applied to each candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    Cosimple,
    Simple,
    /// Full 3-connectivity check (normally implied by cosimplicity).
    ThreeConnected,
    Regular,
    /// No `M(K5)` minor.
    NoMK5,
    /// No minor isomorphic to the named matroid.
    NoMinor(String),
    /// `r*(Ỹ(M*)) >= t`, where `M` is the candidate.
    DualYtildeCorankAtLeast(usize),
}

impl Filter {
    fn stage(&self) -> u8 {
        match self {
            Filter::Cosimple => 0,
            Filter::Simple => 1,
            Filter::ThreeConnected => 2,
            Filter::Regular | Filter::NoMK5 => 3,
            Filter::NoMinor(_) => 4,
            Filter::DualYtildeCorankAtLeast(_) => 5,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Filter::Cosimple => "cosimple".into(),
            Filter::Simple => "simple".into(),
            Filter::ThreeConnected => "3connected".into(),
            Filter::Regular => "regular".into(),
            Filter::NoMK5 => "no-k5".into(),
            Filter::NoMinor(n) => format!("no-minor:{n}"),
            Filter::DualYtildeCorankAtLeast(t) => format!("dual-ytilde>={t}"),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cosimple" => Filter::Cosimple,
            "simple" => Filter::Simple,
            "3connected" => Filter::ThreeConnected,
            "regular" => Filter::Regular,
            "no-k5" => Filter::NoMK5,
            _ => {
                if let Some(name) = s.strip_prefix("no-minor:") {
                    crate::zoo::parse_named(name)?;
                    Filter::NoMinor(name.to_string())
                } else if let Some(t) = s.strip_prefix("dual-ytilde>=") {
                    Filter::DualYtildeCorankAtLeast(t.parse().map_err(|_| Error::Parse(format!("bad threshold in {s:?}")))?)
                } else {
                    return Err(Error::Parse(format!("unknown filter {s:?}")));
                }
            }
        })
    }
}

/// Statistics of `M*` for a catalog item `M`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualStats {
    pub nsc_count: usize,
    pub ytilde_size: usize,
    pub ytilde_corank: usize,
}

/// One matroid of a layer, in canonical standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogItem {
    pub key: CanonicalKey,
    pub matrix: BitMatrix,
    pub parent: Option<CanonicalKey>,
    pub vector: Option<ExtensionVector>,
    /// Rank of the parent, or of the item itself for seeds.
    pub provenance_rank: usize,
    pub dual_stats: Option<DualStats>,
}

impl CatalogItem {
    /// A seed item from any matroid.
    pub fn seed(m: &BinaryMatroid) -> Result<Self> {
        let canon = canonical_form(m)?;
        Ok(CatalogItem {
            key: canon.key,
            matrix: canon.matroid.rep().clone(),
            parent: None,
            vector: None,
            provenance_rank: m.rank(),
            dual_stats: None,
        })
    }

    pub fn matroid(&self) -> BinaryMatroid {
        BinaryMatroid::from_vectors(&self.matrix.columns(), crate::matroid::numeric_labels(self.matrix.cols()))
            .expect("catalog matrices are valid")
    }

    fn provenance(&self) -> (Option<&CanonicalKey>, Option<&ExtensionVector>) {
        (self.parent.as_ref(), self.vector.as_ref())
    }
}

/// The matroids of one rank level, sorted by key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogLayer {
    pub level: usize,
    pub items: Vec<CatalogItem>,
}

impl CatalogLayer {
    pub fn from_seeds(level: usize, seeds: &[BinaryMatroid]) -> Result<Self> {
        let mut items = Vec::new();
        for s in seeds {
            items.push(CatalogItem::seed(s)?);
        }
        Ok(CatalogLayer { level, items: merge_items(items) })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.items.iter().map(|i| i.key.clone()).collect()
    }
}

/// Sorts by key and keeps, per key, the item with the least provenance.
fn merge_items(mut items: Vec<CatalogItem>) -> Vec<CatalogItem> {
    items.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.provenance().cmp(&b.provenance())));
    items.dedup_by(|later, earlier| later.key == earlier.key);
    items
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendOptions {
    /// Skip vectors that an automorphism of the seed maps to a smaller one.
    pub orbit_prune: bool,
    /// Enumerate all of `{0,1,2}^n` instead of `L(A)`.
    pub full_vectors: bool,
    pub threads: usize,
    /// Cap on candidate vectors per call; the rest is reported incomplete.
    pub budget: Option<u64>,
    pub max_corank: usize,
    pub automorphism_cap: usize,
    /// Compute [`DualStats`] for every deduplicated survivor.
    pub dual_stats: bool,
    /// Seeds are known to be regular with no `M(K5)` minor, so the minor
    /// screen may skip contractions of the new element.
    pub seeds_screened: bool,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions {
            orbit_prune: true,
            full_vectors: false,
            threads: 1,
            budget: None,
            max_corank: DEFAULT_MAX_CORANK,
            automorphism_cap: 50_000,
            dual_stats: false,
            seeds_screened: false,
        }
    }
}

/// Counters collected while enumerating a layer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerStats {
    pub candidates: u64,
    pub orbit_pruned: u64,
    pub corank_rejected: u64,
    /// Rejections per filter name.
    pub rejected: BTreeMap<String, u64>,
    /// Distinct classes that passed the structural filters.
    pub classes: u64,
    pub scan_skipped: u64,
    pub kept: u64,
}

impl LayerStats {
    fn absorb(&mut self, other: &LayerStats) {
        self.candidates += other.candidates;
        self.orbit_pruned += other.orbit_pruned;
        self.corank_rejected += other.corank_rejected;
        self.scan_skipped += other.scan_skipped;
        for (k, v) in &other.rejected {
            *self.rejected.entry(k.clone()).or_default() += v;
        }
    }
}

/// Result of [`enumerate_extensions`].
#[derive(Clone, Debug)]
pub struct LayerOutcome {
    /// Items passing every filter.
    pub layer: CatalogLayer,
    /// Items passing every filter except the NSC thresholds.
    pub evaluated: Vec<CatalogItem>,
    pub stats: LayerStats,
    /// Set when the budget or a scan limit cut the run short.
    pub incomplete: bool,
}

/// Structural filters with the seed-level facts they may rely on.
struct Pipeline<'a> {
    filters: Vec<&'a Filter>,
    minors: Vec<(String, BinaryMatroid)>,
    needs_screen: bool,
    wants_mk5: bool,
}

impl<'a> Pipeline<'a> {
    fn new(filters: &'a [Filter]) -> Result<Self> {
        let mut sorted: Vec<&Filter> = filters.iter().collect();
        sorted.sort_by_key(|f| f.stage());
        let mut minors = Vec::new();
        for f in &sorted {
            if let Filter::NoMinor(name) = f {
                minors.push((name.clone(), crate::zoo::parse_named(name)?));
            }
        }
        let needs_screen = sorted.iter().any(|f| matches!(f, Filter::Regular | Filter::NoMK5));
        let wants_mk5 = sorted.iter().any(|f| matches!(f, Filter::NoMK5));
        Ok(Pipeline { filters: sorted, minors, needs_screen, wants_mk5 })
    }

    /// Runs the structural filters; returns the name of the first one failing.
    /// `new_element` is the index of `e` when the screen may skip it.
    fn structural(&self, m: &BinaryMatroid, new_element: Option<usize>) -> Result<Option<String>> {
        let mut screen: Option<MinorScreen> = None;
        for f in &self.filters {
            let pass = match f {
                Filter::Cosimple => standard_cosimple(m.columns(), m.rank()),
                Filter::Simple => m.is_simple(),
                Filter::ThreeConnected => m.is_3connected(),
                Filter::Regular | Filter::NoMK5 => {
                    if screen.is_none() && self.needs_screen {
                        let opts = MinorOptions { avoid_element: new_element, ..Default::default() };
                        screen = Some(screen_first_hit(m, &opts, self.wants_mk5)?);
                    }
                    let s = screen.expect("screen computed");
                    match f {
                        Filter::Regular => s.is_regular(),
                        _ => !s.mk5,
                    }
                }
                Filter::NoMinor(name) => {
                    let n = &self.minors.iter().find(|(k, _)| k == name).expect("parsed minor").1;
                    !has_minor(m, n)?
                }
                Filter::DualYtildeCorankAtLeast(_) => true,
            };
            if !pass {
                return Ok(Some(f.name()));
            }
        }
        Ok(None)
    }

    fn cosimple_first(&self) -> bool {
        self.filters.first() == Some(&&Filter::Cosimple)
    }

    fn threshold(&self) -> Option<usize> {
        self.filters.iter().find_map(|f| match f {
            Filter::DualYtildeCorankAtLeast(t) => Some(*t),
            _ => None,
        })
    }
}

/// NSC statistics of the dual of a standard-form matroid.
pub fn dual_stats(m: &BinaryMatroid) -> Result<DualStats> {
    let dual = m.try_dual()?;
    let nsc = raw_nonseparating(dual.columns(), dual.rank(), &NscOptions::default())?;
    let yt = raw_ytilde(dual.len(), &nsc);
    Ok(DualStats { nsc_count: nsc.len(), ytilde_size: yt.count(), ytilde_corank: dual.corank_of_indices(&yt) })
}

/// Whether some listed automorphism maps `v` to a lexicographically smaller
/// vector of the same layer.
fn dominated(v: &[u8], group: &[Vec<usize>], r: usize, full: bool) -> bool {
    'outer: for sigma in group {
        let mut decided = false;
        for i in 0..v.len() {
            let w = v[sigma[i]];
            if !full && i < r && w == 1 {
                continue 'outer;
            }
            if !decided {
                match w.cmp(&v[i]) {
                    std::cmp::Ordering::Less => decided = true,
                    std::cmp::Ordering::Greater => continue 'outer,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        if decided {
            return true;
        }
    }
    false
}

struct Chunk {
    items: Vec<CatalogItem>,
    stats: LayerStats,
}

fn process_range(
    seed: &CatalogItem,
    cols: &[u64],
    group: &[Vec<usize>],
    pipeline: &Pipeline,
    opts: &ExtendOptions,
    range: std::ops::Range<u64>,
) -> Result<Chunk> {
    let r = seed.matrix.rows();
    let n = seed.matrix.cols();
    let mut stats = LayerStats::default();
    let mut best: BTreeMap<CanonicalKey, CatalogItem> = BTreeMap::new();
    for index in range {
        stats.candidates += 1;
        let v = vector_at(r, n, opts.full_vectors, index);
        if opts.orbit_prune && dominated(&v, group, r, opts.full_vectors) {
            stats.orbit_pruned += 1;
            continue;
        }
        let gcols = gamma_columns(cols, &v);
        let rank = r + 1;
        if gcols.len() - rank > opts.max_corank {
            stats.corank_rejected += 1;
            debug!("corank {} over limit for vector {:?}", gcols.len() - rank, v);
            continue;
        }
        // L(A) vectors keep Γ in standard form, so cosimplicity is read directly
        if !opts.full_vectors && pipeline.cosimple_first() && !standard_cosimple(&gcols, rank) {
            *stats.rejected.entry(Filter::Cosimple.name()).or_default() += 1;
            continue;
        }
        let m = BinaryMatroid::from_vectors(&gcols, crate::matroid::numeric_labels(gcols.len()))?;
        let new_element = if opts.seeds_screened { m.index_of(&Label::from("1")) } else { None };
        if let Some(name) = pipeline.structural(&m, new_element)? {
            *stats.rejected.entry(name).or_default() += 1;
            continue;
        }
        let canon = canonical_form(&m)?;
        let vector = ExtensionVector(v);
        let item = CatalogItem {
            key: canon.key.clone(),
            matrix: canon.matroid.rep().clone(),
            parent: Some(seed.key.clone()),
            vector: Some(vector),
            provenance_rank: r,
            dual_stats: None,
        };
        match best.get(&canon.key) {
            Some(old) if old.provenance() <= item.provenance() => {}
            _ => {
                best.insert(canon.key, item);
            }
        }
    }
    Ok(Chunk { items: best.into_values().collect(), stats })
}

/// Runs `L(A)` over every seed, filters, canonizes and deduplicates.
/// Output is independent of the thread count.
pub fn enumerate_extensions(seeds: &CatalogLayer, filters: &[Filter], opts: &ExtendOptions) -> Result<LayerOutcome> {
    let pipeline = Pipeline::new(filters)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| Error::BadParams { name: "threads".into(), reason: e.to_string() })?;
    let mut stats = LayerStats::default();
    let mut all_items = Vec::new();
    let mut incomplete = false;
    let mut remaining = opts.budget;
    for seed in &seeds.items {
        let seed_m = seed.matroid();
        let cols = seed_m.columns().to_vec();
        let (r, n) = (seed.matrix.rows(), seed.matrix.cols());
        let group = if opts.orbit_prune {
            let mut g = automorphism_group(&seed_m, opts.automorphism_cap)?;
            g.retain(|s| s.iter().enumerate().any(|(i, &x)| i != x));
            g
        } else {
            Vec::new()
        };
        let mut total = layer_size(r, n, opts.full_vectors);
        if let Some(left) = remaining {
            if total > left {
                warn!("budget reached: processing {left} of {total} vectors for one seed");
                total = left;
                incomplete = true;
            }
            remaining = Some(left - total);
        }
        let chunk_size = (total / 256).max(64);
        let ranges: Vec<std::ops::Range<u64>> =
            (0..total).step_by(chunk_size as usize).map(|s| s..(s + chunk_size).min(total)).collect();
        let chunks: Vec<Result<Chunk>> = pool.install(|| {
            ranges.into_par_iter().map(|range| process_range(seed, &cols, &group, &pipeline, opts, range)).collect()
        });
        for chunk in chunks {
            let chunk = chunk?;
            stats.absorb(&chunk.stats);
            all_items.extend(chunk.items);
        }
    }
    let mut evaluated = merge_items(all_items);
    stats.classes = evaluated.len() as u64;
    let threshold = pipeline.threshold();
    if threshold.is_some() || opts.dual_stats {
        let results: Vec<Result<DualStats>> =
            pool.install(|| evaluated.par_iter().map(|item| dual_stats(&item.matroid())).collect());
        for (item, res) in evaluated.iter_mut().zip(results) {
            match res {
                Ok(s) => item.dual_stats = Some(s),
                Err(Error::ScanLimitExceeded { rank, limit }) => {
                    warn!("scan limit: dual rank {rank} over {limit} for {}", item.key.to_hex());
                    stats.scan_skipped += 1;
                    incomplete = true;
                }
                Err(e) => return Err(e),
            }
        }
    }
    let mut kept = Vec::new();
    for item in &evaluated {
        let pass = match threshold {
            None => true,
            Some(t) => item.dual_stats.map(|s| s.ytilde_corank >= t).unwrap_or(false),
        };
        if pass {
            kept.push(item.clone());
        } else if let Some(t) = threshold {
            *stats.rejected.entry(Filter::DualYtildeCorankAtLeast(t).name()).or_default() += 1;
        }
    }
    stats.kept = kept.len() as u64;
    Ok(LayerOutcome { layer: CatalogLayer { level: seeds.level + 1, items: kept }, evaluated, stats, incomplete })
}

/// Checks the parallel-class bound: every parallel class of `N / e` has at
/// most two elements, where `e` is the first column of `Γ(A, v)`.
pub fn contraction_classes_bounded(m: &BinaryMatroid, e: usize) -> bool {
    let c = m.contract_indices(&Bits::from_indices([e]));
    c.parallel_classes().iter().all(|cls| cls.len() <= 2)
}
