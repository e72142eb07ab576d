//! Isomorphism testing and canonical keys.
//!
//! A binary matroid is determined, up to isomorphism, by the coordinates of
//! its elements relative to an ordered basis. The canonical form is the
//! lexicographically least coordinate listing over all ordered bases, found
//! level by level: choosing `b_j` fixes the coordinates of every element that
//! first enters the span at that level, so prefixes can be compared and cut.
//! Elements are split into classes by cocircuit-membership profiles, and leaves
//! that tie with the best one yield automorphisms used to prune sibling
//! branches.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Bits};
use crate::matroid::BinaryMatroid;
use crate::nsc::{cocircuits_with, NscOptions, Route};

/// Cocircuits larger than this share one profile bucket.
pub const PROFILE_SIZE_CAP: usize = 6;

/// Largest element count accepted by [`canonical_key`].
pub const CANONICAL_MAX_ELEMENTS: usize = 64;

/// Above this rank of the canonized side, element profiles are skipped.
const PROFILE_RANK_LIMIT: usize = 18;

/// Per-element cocircuit profiles plus global counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub r: usize,
    pub n: usize,
    /// Number of cocircuits of each size `1..=cap`, then those larger.
    pub size_distribution: Vec<usize>,
    /// `profiles[e][s-1]` counts cocircuits of size `s` containing `e`; the
    /// last bucket collects sizes above the cap.
    pub profiles: Vec<Vec<usize>>,
}

impl Signature {
    /// Profiles sorted, for comparison between matroids.
    pub fn multiset(&self) -> Vec<Vec<usize>> {
        let mut v = self.profiles.clone();
        v.sort();
        v
    }

    /// Number of distinct element profiles.
    pub fn distinct_profiles(&self) -> usize {
        let mut v = self.multiset();
        v.dedup();
        v.len()
    }
}

/// Cocircuit-membership profiles of every element.
pub fn invariant_signature(m: &BinaryMatroid) -> Result<Signature> {
    let opts = NscOptions { route: Route::Auto, ..Default::default() };
    let cocircuits = cocircuits_with(m, &opts)?;
    let mut size_distribution = vec![0usize; PROFILE_SIZE_CAP + 1];
    let mut profiles = vec![vec![0usize; PROFILE_SIZE_CAP + 1]; m.len()];
    for c in &cocircuits {
        let bucket = c.support.count().min(PROFILE_SIZE_CAP + 1) - 1;
        size_distribution[bucket] += 1;
        for e in c.support.iter() {
            profiles[e][bucket] += 1;
        }
    }
    Ok(Signature { r: m.rank(), n: m.len(), size_distribution, profiles })
}

/// Bytes of the canonical representation; equal exactly for isomorphic matroids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s).map(CanonicalKey).map_err(|e| Error::Parse(format!("bad key hex: {e}")))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// The result of canonization.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub key: CanonicalKey,
    /// `m` with its columns in canonical order, in standard form.
    pub matroid: BinaryMatroid,
    /// Automorphisms found during the search, as permutations of the element
    /// indices of the input (`sigma[i]` is the image of `i`).
    pub automorphisms: Vec<Vec<usize>>,
}

/// Echelon basis that records how each stored vector combines the chosen
/// basis elements, so coordinates can be read off.
#[derive(Default)]
struct Coords {
    red: Vec<u64>,
    piv: Vec<u64>,
    combo: Vec<u64>,
}

impl Coords {
    fn reduce(&self, mut v: u64) -> (u64, u64) {
        let mut combo = 0u64;
        for k in 0..self.red.len() {
            if v & self.piv[k] != 0 {
                v ^= self.red[k];
                combo ^= self.combo[k];
            }
        }
        (v, combo)
    }

    fn push(&mut self, v: u64) {
        let pos = self.red.len();
        let (res, combo) = self.reduce(v);
        debug_assert!(res != 0);
        self.red.push(res);
        self.piv.push(res & res.wrapping_neg());
        self.combo.push(combo ^ (1u64 << pos));
    }

    fn pop(&mut self) {
        self.red.pop();
        self.piv.pop();
        self.combo.pop();
    }
}

struct Search<'a> {
    cols: &'a [u64],
    class: &'a [u64],
    r: usize,
    coords: Coords,
    in_span: Bits,
    prefix: Vec<usize>,
    tokens: Vec<u64>,
    /// Non-basis elements in block order, with their coordinates.
    placed: Vec<(usize, u64)>,
    best: Option<(Vec<u64>, Vec<usize>, Vec<u64>)>,
    epoch: u64,
    automorphisms: Vec<Vec<usize>>,
    max_automorphisms: usize,
}

impl Search<'_> {
    fn leaf_order(&self) -> Vec<usize> {
        let mut order = self.prefix.clone();
        order.extend(self.placed.iter().map(|&(e, _)| e));
        order
    }

    fn record_automorphism(&mut self, order: &[usize]) {
        let best = &self.best.as_ref().expect("best leaf").1;
        let mut sigma = vec![0usize; order.len()];
        for (p, &e) in best.iter().enumerate() {
            sigma[e] = order[p];
        }
        if sigma.iter().enumerate().all(|(i, &s)| i == s) {
            return;
        }
        if self.automorphisms.len() < self.max_automorphisms && !self.automorphisms.contains(&sigma) {
            self.automorphisms.push(sigma);
        }
    }

    /// Candidates equivalent under automorphisms that fix the prefix pointwise.
    fn same_orbit(&self, a: usize, b: usize) -> bool {
        let n = self.cols.len();
        let gens: Vec<&Vec<usize>> =
            self.automorphisms.iter().filter(|s| self.prefix.iter().all(|&p| s[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for s in gens {
            for i in 0..n {
                let (x, y) = (find(&mut parent, i), find(&mut parent, s[i]));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    /// Appends `block` to the token stream and compares it with the best
    /// stream. Returns `None` when the branch is worse.
    fn compare_block(&self, start: usize, prefix_better: bool) -> Option<bool> {
        if prefix_better {
            return Some(true);
        }
        let Some((best, _, _)) = &self.best else { return Some(true) };
        let cur = &self.tokens[start..];
        let end = (start + cur.len()).min(best.len());
        match cur.cmp(&best[start..end]) {
            Ordering::Less => Some(true),
            Ordering::Greater => None,
            Ordering::Equal => Some(false),
        }
    }

    /// Pushes the block produced by choosing `x` as the next basis element.
    fn push_level(&mut self, x: usize) -> usize {
        let j = self.prefix.len();
        self.coords.push(self.cols[x]);
        self.prefix.push(x);
        self.in_span.insert(x);
        let mut block: Vec<(u64, u64, usize)> = Vec::new();
        for e in 0..self.cols.len() {
            if self.in_span.get(e) {
                continue;
            }
            let (res, combo) = self.coords.reduce(self.cols[e]);
            if res == 0 {
                debug_assert!(combo >> j & 1 == 1);
                block.push((combo, self.class[e], e));
            }
        }
        block.sort_unstable();
        self.tokens.push(self.class[x]);
        self.tokens.push(block.len() as u64);
        for &(c, k, e) in &block {
            self.tokens.push(c);
            self.tokens.push(k);
            self.in_span.insert(e);
            self.placed.push((e, c));
        }
        block.len()
    }

    fn pop_level(&mut self, block_len: usize) {
        for _ in 0..block_len {
            let (e, _) = self.placed.pop().expect("placed element");
            self.in_span.remove(e);
            self.tokens.pop();
            self.tokens.pop();
        }
        self.tokens.pop();
        self.tokens.pop();
        let x = self.prefix.pop().expect("prefix element");
        self.in_span.remove(x);
        self.coords.pop();
    }

    fn go(&mut self, mut prefix_better: bool) {
        if self.prefix.len() == self.r {
            let order = self.leaf_order();
            if prefix_better || self.best.is_none() {
                let coords: Vec<u64> = self.placed.iter().map(|&(_, c)| c).collect();
                self.best = Some((self.tokens.clone(), order, coords));
                self.epoch += 1;
            } else {
                self.record_automorphism(&order);
            }
            return;
        }
        let n = self.cols.len();
        let min_class = (0..n).filter(|&e| !self.in_span.get(e)).map(|e| self.class[e]).min();
        let Some(min_class) = min_class else { return };
        let candidates: Vec<usize> = (0..n).filter(|&e| !self.in_span.get(e) && self.class[e] == min_class).collect();
        let mut explored: Vec<usize> = Vec::new();
        for x in candidates {
            if explored.iter().any(|&y| self.same_orbit(x, y)) {
                continue;
            }
            explored.push(x);
            let start = self.tokens.len();
            let len = self.push_level(x);
            if let Some(better) = self.compare_block(start, prefix_better) {
                let before = self.epoch;
                self.go(better);
                if self.epoch != before {
                    // the new best shares this whole prefix
                    prefix_better = false;
                }
            }
            self.pop_level(len);
        }
    }
}

/// Class id per element: the rank of its profile among the distinct profiles.
fn element_classes(m: &BinaryMatroid) -> Vec<u64> {
    if m.rank().min(m.corank()) > PROFILE_RANK_LIMIT {
        return vec![0; m.len()];
    }
    let sig = match invariant_signature(m) {
        Ok(sig) => sig,
        Err(_) => return vec![0; m.len()],
    };
    let mut distinct = sig.multiset();
    distinct.dedup();
    let index: HashMap<&Vec<usize>, u64> = distinct.iter().enumerate().map(|(i, p)| (p, i as u64)).collect();
    sig.profiles.iter().map(|p| index[p]).collect()
}

/// Canonizes a matroid of rank at most `n / 2`.
fn canonize_low_rank(m: &BinaryMatroid, max_automorphisms: usize) -> (Vec<usize>, Vec<u64>, Vec<Vec<usize>>) {
    let class = element_classes(m);
    let cols = m.columns();
    let mut search = Search {
        cols,
        class: &class,
        r: m.rank(),
        coords: Coords::default(),
        in_span: Bits::empty(),
        prefix: Vec::new(),
        tokens: Vec::new(),
        placed: Vec::new(),
        best: None,
        epoch: 0,
        automorphisms: Vec::new(),
        max_automorphisms,
    };
    // loops form the block before the first basis element
    let mut loops: Vec<(u64, usize)> = (0..cols.len()).filter(|&e| cols[e] == 0).map(|e| (class[e], e)).collect();
    loops.sort_unstable();
    search.tokens.push(loops.len() as u64);
    for &(k, e) in &loops {
        search.tokens.push(k);
        search.in_span.insert(e);
        search.placed.push((e, 0));
    }
    search.go(false);
    let (_, order, coords) = search.best.expect("at least one ordered basis");
    (order, coords, search.automorphisms)
}

fn encode(flag: u8, r: usize, n: usize, rows: &BitMatrix) -> CanonicalKey {
    let mut bytes = vec![flag, r as u8, n as u8];
    let width = n.div_ceil(8);
    for i in 0..rows.rows() {
        let row = rows.row(i);
        for b in 0..width {
            let mut byte = 0u8;
            for k in 0..8 {
                let j = b * 8 + k;
                if j < n && row.get(j) {
                    byte |= 0x80 >> k;
                }
            }
            bytes.push(byte);
        }
    }
    CanonicalKey(bytes)
}

/// Full canonization: key, reordered matroid and automorphisms found.
pub fn canonical_form(m: &BinaryMatroid) -> Result<Canonical> {
    canonical_form_with(m, 256)
}

pub fn canonical_form_with(m: &BinaryMatroid, max_automorphisms: usize) -> Result<Canonical> {
    let n = m.len();
    if n > CANONICAL_MAX_ELEMENTS {
        return Err(Error::SizeLimit(n));
    }
    let r = m.rank();
    if r <= n - r {
        let (order, coords, auts) = canonize_low_rank(m, max_automorphisms);
        let mut vecs: Vec<u64> = (0..r).map(|i| 1u64 << i).collect();
        vecs.extend(coords);
        let rows = BitMatrix::from_columns(r, &vecs)?;
        let key = encode(0, r, n, &rows);
        let labels = order.iter().map(|&e| m.label(e).clone()).collect();
        let matroid = BinaryMatroid::from_vectors(&vecs, labels)?;
        Ok(Canonical { key, matroid, automorphisms: auts })
    } else {
        let dual = m.dual();
        // dual index d corresponds to primal index (d + r) mod n
        let to_primal = |d: usize| (d + r) % n;
        let (order, coords, auts) = canonize_low_rank(&dual, max_automorphisms);
        let k = n - r;
        let mut vecs: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
        vecs.extend(coords);
        let rows = BitMatrix::from_columns(k, &vecs)?;
        let key = encode(1, r, n, &rows);
        let labels = order.iter().map(|&d| dual.label(d).clone()).collect();
        let canon_dual = BinaryMatroid::from_vectors(&vecs, labels)?;
        let matroid = canon_dual.dual();
        let automorphisms = auts
            .into_iter()
            .map(|s| {
                let mut p = vec![0usize; n];
                for (d, &img) in s.iter().enumerate() {
                    p[to_primal(d)] = to_primal(img);
                }
                p
            })
            .collect();
        Ok(Canonical { key, matroid, automorphisms })
    }
}

pub fn canonical_key(m: &BinaryMatroid) -> Result<CanonicalKey> {
    Ok(canonical_form(m)?.key)
}

pub fn are_isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> Result<bool> {
    if a.rank() != b.rank() || a.len() != b.len() {
        return Ok(false);
    }
    for m in [a, b] {
        if m.len() > CANONICAL_MAX_ELEMENTS {
            return Err(Error::SizeLimit(m.len()));
        }
    }
    if a.rank().min(a.corank()) <= PROFILE_RANK_LIMIT {
        let (sa, sb) = (invariant_signature(a)?, invariant_signature(b)?);
        if sa.size_distribution != sb.size_distribution || sa.multiset() != sb.multiset() {
            return Ok(false);
        }
    }
    Ok(canonical_key(a)? == canonical_key(b)?)
}

/// Closes a set of permutations under composition, stopping at `cap` elements.
/// The identity is always included.
pub fn close_group(generators: &[Vec<usize>], n: usize, cap: usize) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    let mut out = vec![identity.clone()];
    seen.insert(identity);
    let mut i = 0;
    while i < out.len() && out.len() < cap {
        let g = out[i].clone();
        for s in generators {
            let h: Vec<usize> = (0..n).map(|x| s[g[x]]).collect();
            if seen.insert(h.clone()) {
                out.push(h);
                if out.len() >= cap {
                    break;
                }
            }
        }
        i += 1;
    }
    out
}

/// Automorphisms of `m` as element permutations, the group generated by the
/// canonization search truncated at `cap` elements.
pub fn automorphism_group(m: &BinaryMatroid, cap: usize) -> Result<Vec<Vec<usize>>> {
    let canon = canonical_form(m)?;
    Ok(close_group(&canon.automorphisms, m.len(), cap))
}

/// Whether some restriction of `m` is isomorphic to `n`.
///
/// Every isomorphism onto a restriction is induced by a linear map sending
/// the standard basis of `n` to an independent tuple of `m`. The search picks
/// that tuple one vector at a time and checks, as soon as they are
/// determined, that the images of the remaining columns exist in `m` with
/// enough multiplicity.
pub fn restriction_embeds(n: &BinaryMatroid, m: &BinaryMatroid) -> Result<bool> {
    if n.rank() > m.rank() || n.len() > m.len() {
        return Ok(false);
    }
    let k = n.rank();
    let mut available: HashMap<u64, usize> = HashMap::new();
    for &c in m.columns() {
        *available.entry(c).or_default() += 1;
    }
    let mut distinct: Vec<u64> = available.keys().copied().filter(|&v| v != 0).collect();
    distinct.sort_unstable();
    // group non-basis columns of n by the level at which they are determined
    let mut by_level: Vec<Vec<u64>> = vec![Vec::new(); k + 1];
    for &c in &n.columns()[k..] {
        let level = if c == 0 { 0 } else { 64 - c.leading_zeros() as usize };
        by_level[level].push(c);
    }
    struct Ctx<'a> {
        k: usize,
        distinct: &'a [u64],
        available: &'a HashMap<u64, usize>,
        used: HashMap<u64, usize>,
        images: Vec<u64>,
        by_level: &'a [Vec<u64>],
        span: crate::gf2::EchelonBasis,
    }
    impl Ctx<'_> {
        fn image(&self, c: u64) -> u64 {
            let mut v = 0u64;
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                v ^= self.images[i];
                bits &= bits - 1;
            }
            v
        }

        /// Claims the images for one level; returns how many were claimed
        /// before failing or the full count on success.
        fn claim(&mut self, level: usize) -> (usize, bool) {
            let cols = &self.by_level[level];
            for (i, &c) in cols.iter().enumerate() {
                let v = self.image(c);
                let u = self.used.entry(v).or_default();
                *u += 1;
                if *u > self.available.get(&v).copied().unwrap_or(0) {
                    return (i + 1, false);
                }
            }
            (cols.len(), true)
        }

        fn release(&mut self, level: usize, count: usize) {
            for &c in self.by_level[level][..count].iter() {
                let v = self.image(c);
                *self.used.get_mut(&v).expect("claimed image") -= 1;
            }
        }

        fn go(&mut self) -> bool {
            let j = self.images.len();
            if j == self.k {
                return true;
            }
            for &v in self.distinct {
                if self.used.get(&v).copied().unwrap_or(0) >= self.available[&v] {
                    continue;
                }
                let len = self.span.len();
                if !self.span.insert(v) {
                    continue;
                }
                self.images.push(v);
                *self.used.entry(v).or_default() += 1;
                let (count, ok) = self.claim(j + 1);
                if ok && self.go() {
                    return true;
                }
                self.release(j + 1, count);
                *self.used.get_mut(&v).expect("claimed basis image") -= 1;
                self.images.pop();
                self.span.truncate(len);
            }
            false
        }
    }
    let mut ctx = Ctx {
        k,
        distinct: &distinct,
        available: &available,
        used: HashMap::new(),
        images: Vec::new(),
        by_level: &by_level,
        span: crate::gf2::EchelonBasis::new(),
    };
    let (count, ok) = ctx.claim(0);
    if !ok {
        ctx.release(0, count);
        return Ok(false);
    }
    Ok(ctx.go())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::numeric_labels;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn m(rows: &[&str]) -> BinaryMatroid {
        BinaryMatroid::with_numeric_labels(&BitMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn fano() -> BinaryMatroid {
        m(&["1001101", "0101011", "0010111"])
    }

    fn k4() -> BinaryMatroid {
        m(&["100110", "010101", "001011"])
    }

    fn pg32() -> BinaryMatroid {
        let v: Vec<u64> = (1..16).collect();
        BinaryMatroid::from_vectors(&v, numeric_labels(15)).unwrap()
    }

    fn shuffled(mat: &BinaryMatroid, rng: &mut StdRng) -> BinaryMatroid {
        let mut perm: Vec<usize> = (0..mat.len()).collect();
        perm.shuffle(rng);
        mat.permuted(&perm)
    }

    /// Brute force: some column bijection makes the two vector lists differ
    /// by an invertible linear map, i.e. they have the same row space.
    fn oracle_isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
        if a.rank() != b.rank() || a.len() != b.len() {
            return false;
        }
        let n = a.len();
        let r = a.rank();
        let target = a.rep().clone();
        let mut perm: Vec<usize> = (0..n).collect();
        fn heap(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
            if k <= 1 {
                return f(perm);
            }
            for i in 0..k {
                if heap(k - 1, perm, f) {
                    return true;
                }
                let j = if k.is_multiple_of(2) { i } else { 0 };
                perm.swap(j, k - 1);
            }
            false
        }
        let bcols = b.columns().to_vec();
        heap(n, &mut perm, &mut |p| {
            let permuted: Vec<u64> = p.iter().map(|&j| bcols[j]).collect();
            let mat = BitMatrix::from_columns(r, &permuted).unwrap();
            let (ra, _) = target.rref();
            let (rb, _) = mat.rref();
            ra == rb
        })
    }

    #[test]
    fn signature_examples() {
        assert_eq!(invariant_signature(&fano()).unwrap().distinct_profiles(), 1);
        assert_eq!(invariant_signature(&m(&["101", "011"])).unwrap().distinct_profiles(), 1);
        assert!(invariant_signature(&k4()).unwrap().distinct_profiles() == 1);
    }

    #[test]
    fn keys_are_permutation_invariant() {
        let mut rng = StdRng::seed_from_u64(7);
        for mat in [fano(), k4(), pg32(), fano().dual()] {
            let key = canonical_key(&mat).unwrap();
            for _ in 0..30 {
                assert_eq!(canonical_key(&shuffled(&mat, &mut rng)).unwrap(), key);
            }
        }
    }

    #[test]
    fn distinguishes_fano_from_graphic() {
        // K4 plus an element parallel to one edge
        let g = m(&["1001101", "0101011", "0010110"]);
        assert_ne!(canonical_key(&fano()).unwrap(), canonical_key(&g).unwrap());
        assert!(!are_isomorphic(&fano(), &fano().dual()).unwrap());
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphism_group(&fano(), 10_000).unwrap().len(), 168);
        assert_eq!(automorphism_group(&k4(), 10_000).unwrap().len(), 24);
        assert_eq!(automorphism_group(&pg32(), 100_000).unwrap().len(), 20160);
        assert_eq!(automorphism_group(&fano().dual(), 10_000).unwrap().len(), 168);
    }

    #[test]
    fn automorphisms_preserve_the_matroid() {
        for mat in [fano(), k4(), fano().dual()] {
            let canon = canonical_form(&mat).unwrap();
            for sigma in &canon.automorphisms {
                // the map e -> sigma(e) preserves ranks of all subsets
                for s in 0u64..(1 << mat.len()) {
                    let a = Bits::from_low_word(s);
                    let b: Bits = a.iter().map(|e| sigma[e]).collect();
                    assert_eq!(mat.rank_of_indices(&a), mat.rank_of_indices(&b));
                }
            }
        }
    }

    #[test]
    fn embedding_examples() {
        assert!(restriction_embeds(&k4(), &fano()).unwrap());
        let ag32 = BinaryMatroid::from_vectors(&[1, 3, 5, 7, 9, 11, 13, 15], numeric_labels(8)).unwrap();
        assert!(!restriction_embeds(&fano(), &ag32).unwrap());
        let u11 = BinaryMatroid::from_vectors(&[1], numeric_labels(1)).unwrap();
        assert!(restriction_embeds(&u11, &fano()).unwrap());
        // a parallel pair needs a parallel pair
        let pair = BinaryMatroid::from_vectors(&[1, 1], numeric_labels(2)).unwrap();
        assert!(!restriction_embeds(&pair, &fano()).unwrap());
        let with_pair = BinaryMatroid::from_vectors(&[1, 2, 1], numeric_labels(3)).unwrap();
        assert!(restriction_embeds(&pair, &with_pair).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_pg32_subsets() {
        let mut rng = StdRng::seed_from_u64(11);
        let mut pool = Vec::new();
        for _ in 0..60 {
            let size = rng.gen_range(3..=7);
            let mut pts: Vec<u64> = (1..16).collect();
            pts.shuffle(&mut rng);
            pts.truncate(size);
            let mat = BinaryMatroid::from_vectors(&pts, numeric_labels(size)).unwrap();
            pool.push(mat);
        }
        for i in 0..pool.len() {
            for j in i..pool.len() {
                let (a, b) = (&pool[i], &pool[j]);
                if a.len() != b.len() || a.rank() != b.rank() {
                    continue;
                }
                assert_eq!(are_isomorphic(a, b).unwrap(), oracle_isomorphic(a, b), "{a:?}{b:?}");
            }
        }
    }

    #[test]
    fn embedding_agrees_with_subset_search() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..40 {
            let small: Vec<u64> = (0..rng.gen_range(2..5)).map(|_| rng.gen_range(0..8)).collect();
            let big: Vec<u64> = (0..rng.gen_range(3..8)).map(|_| rng.gen_range(0..16)).collect();
            let ns = BinaryMatroid::from_vectors(&small, numeric_labels(small.len())).unwrap();
            let nb = BinaryMatroid::from_vectors(&big, numeric_labels(big.len())).unwrap();
            let mut oracle = false;
            for s in 0u64..(1 << nb.len()) {
                if s.count_ones() as usize == ns.len() {
                    let sub = nb.restrict_indices(&Bits::from_low_word(s));
                    if sub.rank() == ns.rank() && oracle_isomorphic(&sub, &ns) {
                        oracle = true;
                        break;
                    }
                }
            }
            assert_eq!(restriction_embeds(&ns, &nb).unwrap(), oracle);
        }
    }
}
