//! Constructors for the named matroids and graph families used throughout
//! the crate, and the complement of a simple matroid inside `PG(s, 2)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::matroid::{direct_sum, numeric_labels, BinaryMatroid, ElementSet, Label};

/// A simple graph with named vertices. Edges keep insertion order and are
/// labelled `u-v` by vertex name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        SimpleGraph { names: names.into_iter().map(Into::into).collect(), edges: Vec::new() }
    }

    /// Vertices named `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        SimpleGraph::new((1..=n).map(|i| i.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.names.len();
        if u >= n || v >= n {
            return Err(Error::BadGraph(format!("vertex index out of range in edge ({u}, {v})")));
        }
        if u == v {
            return Err(Error::BadGraph(format!("loop at vertex {}", self.names[u])));
        }
        if self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            return Err(Error::BadGraph(format!("repeated edge {}-{}", self.names[u], self.names[v])));
        }
        self.edges.push((u, v));
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<()> {
        let a = self.vertex(u).ok_or_else(|| Error::BadGraph(format!("unknown vertex {u}")))?;
        let b = self.vertex(v).ok_or_else(|| Error::BadGraph(format!("unknown vertex {v}")))?;
        self.add_edge(a, b)
    }

    pub fn edge_label(&self, k: usize) -> Label {
        let (u, v) = self.edges[k];
        Label::new(format!("{}-{}", self.names[u], self.names[v]))
    }

    pub fn edge_labels(&self) -> Vec<Label> {
        (0..self.edges.len()).map(|k| self.edge_label(k)).collect()
    }
}

/// Cycle matroid from the vertex-edge incidence matrix over GF(2).
pub fn graph_matroid(g: &SimpleGraph) -> Result<BinaryMatroid> {
    if g.vertex_count() > 64 {
        return Err(Error::BadGraph(format!("{} vertices exceed the supported 64", g.vertex_count())));
    }
    let vecs: Vec<u64> = g.edges().iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect();
    BinaryMatroid::from_vectors(&vecs, g.edge_labels())
}

/// Bond matroid: the dual of the cycle matroid.
pub fn bond_matroid(g: &SimpleGraph) -> Result<BinaryMatroid> {
    graph_matroid(g)?.try_dual()
}

pub fn complete_graph(k: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices(k);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v).expect("distinct vertices");
        }
    }
    g
}

/// `K_{a,b}` with sides `u1..ua` and `w1..wb`.
pub fn complete_bipartite_graph(a: usize, b: usize) -> SimpleGraph {
    let names = (1..=a).map(|i| format!("u{i}")).chain((1..=b).map(|i| format!("w{i}")));
    let mut g = SimpleGraph::new(names);
    for u in 0..a {
        for w in 0..b {
            g.add_edge(u, a + w).expect("distinct vertices");
        }
    }
    g
}

/// Wheel with hub `h` and rim `1..=k`.
pub fn wheel_graph(k: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(std::iter::once("h".to_string()).chain((1..=k).map(|i| i.to_string())));
    for i in 1..=k {
        g.add_edge(0, i).expect("distinct vertices");
    }
    for i in 1..=k {
        let j = if i == k { 1 } else { i + 1 };
        g.add_edge(i, j).expect("distinct vertices");
    }
    g
}

const SIDE_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `K_{3,3}` with `i` edges added inside `{u1,u2,u3}` and `j` inside
/// `{w1,w2,w3}`, taken in the order `12, 13, 23`.
pub fn k33ij_graph(i: usize, j: usize) -> Result<SimpleGraph> {
    if i > 3 || j > i {
        return Err(Error::BadParams { name: "k33ij".into(), reason: format!("need 0 <= j <= i <= 3, got ({i}, {j})") });
    }
    let mut g = complete_bipartite_graph(3, 3);
    for &(a, b) in &SIDE_PAIRS[..i] {
        g.add_edge(a, b)?;
    }
    for &(a, b) in &SIDE_PAIRS[..j] {
        g.add_edge(3 + a, 3 + b)?;
    }
    Ok(g)
}

/// `K_{3,n}` plus a triangle on the side of size three.
pub fn k3n_triple_graph(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::BadParams { name: "k3n_triple".into(), reason: "need n >= 1".into() });
    }
    let mut g = complete_bipartite_graph(3, n);
    for &(a, b) in &SIDE_PAIRS {
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// Labels of the edges added to `K_{3,n}` in [`k3n_triple_graph`].
pub fn triple_edge_labels() -> ElementSet {
    ["u1-u2", "u1-u3", "u2-u3"].into_iter().map(Label::from).collect()
}

fn standard(rows: &[&str], labels: Vec<Label>) -> BinaryMatroid {
    BinaryMatroid::from_matrix(&BitMatrix::from_rows(rows).expect("fixed matrix"), labels).expect("fixed matrix")
}

pub fn fano() -> BinaryMatroid {
    standard(&["1001101", "0101011", "0010111"], numeric_labels(7))
}

/// Affine geometry `AG(3,2)`: the points of `PG(3,2)` off a hyperplane.
pub fn ag32() -> BinaryMatroid {
    let vecs: Vec<u64> = (1u64..16).filter(|v| v & 1 == 1).collect();
    BinaryMatroid::from_vectors(&vecs, pg_labels(&vecs)).expect("fixed vectors")
}

fn pg_labels(vecs: &[u64]) -> Vec<Label> {
    vecs.iter().map(|v| Label::new(format!("p{v}"))).collect()
}

/// `PG(s, 2)` on all nonzero vectors of `GF(2)^(s+1)`, labelled `p<value>`.
pub fn projective_geometry(s: usize) -> Result<BinaryMatroid> {
    if !(1..=5).contains(&s) {
        return Err(Error::BadParams { name: "pg".into(), reason: format!("s = {s} outside 1..=5") });
    }
    let vecs: Vec<u64> = (1u64..(1u64 << (s + 1))).collect();
    BinaryMatroid::from_vectors(&vecs, pg_labels(&vecs))
}

/// Rank-`r` binary spike with tip: `[I_r | J - I_r | 1]`, labelled
/// `a1..ar, b1..br, c`.
pub fn spike(r: usize) -> Result<BinaryMatroid> {
    if !(3..=64).contains(&r) {
        return Err(Error::BadParams { name: "spike".into(), reason: format!("need 3 <= r <= 64, got {r}") });
    }
    let all: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    let mut vecs: Vec<u64> = (0..r).map(|i| 1u64 << i).collect();
    vecs.extend((0..r).map(|i| all ^ (1u64 << i)));
    vecs.push(all);
    let mut labels: Vec<Label> = (1..=r).map(|i| Label::new(format!("a{i}"))).collect();
    labels.extend((1..=r).map(|i| Label::new(format!("b{i}"))));
    labels.push(Label::from("c"));
    BinaryMatroid::from_vectors(&vecs, labels)
}

/// `S_{2n}`: the spike of rank `n` with `b_n` deleted.
pub fn s2n(n: usize) -> Result<BinaryMatroid> {
    if n < 3 {
        return Err(Error::BadParams { name: "s2n".into(), reason: format!("need n >= 3, got {n}") });
    }
    let z = spike(n)?;
    z.delete(&[Label::new(format!("b{n}"))].into_iter().collect())
}

pub fn r10() -> BinaryMatroid {
    standard(&["1000011001", "0100011100", "0010001110", "0001000111", "0000110011"], numeric_labels(10))
}

pub fn r12() -> BinaryMatroid {
    standard(
        &[
            "100000111000",
            "010000110100",
            "001000100010",
            "000100010001",
            "000010001011",
            "000001000111",
        ],
        numeric_labels(12),
    )
}

/// Binary uniform matroids: `U(0,n)`, `U(1,n)`, `U(n-1,n)` and `U(n,n)`.
pub fn uniform(r: usize, n: usize) -> Result<BinaryMatroid> {
    let bad = |reason: String| Error::BadParams { name: "u".into(), reason };
    if r > n {
        return Err(bad(format!("rank {r} exceeds size {n}")));
    }
    if n > 65 {
        return Err(bad(format!("size {n} too large")));
    }
    let vecs: Vec<u64> = if r == 0 {
        vec![0; n]
    } else if r == 1 {
        vec![1; n]
    } else if r == n {
        (0..n).map(|i| 1u64 << i).collect()
    } else if r + 1 == n {
        let mut v: Vec<u64> = (0..r).map(|i| 1u64 << i).collect();
        v.push(if r == 64 { u64::MAX } else { (1u64 << r) - 1 });
        v
    } else {
        return Err(bad(format!("U({r},{n}) is not binary")));
    };
    BinaryMatroid::from_vectors(&vecs, numeric_labels(n))
}

/// Restriction of `PG(s, 2)` to the points not used by `m`. The columns of
/// `m` are embedded by padding with zero coordinates.
pub fn pg_complement(m: &BinaryMatroid, s: usize) -> Result<BinaryMatroid> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    if m.rank() > s + 1 {
        return Err(Error::RankTooLarge { rank: m.rank(), s });
    }
    if s > 5 {
        return Err(Error::BadParams { name: "pg_complement".into(), reason: format!("s = {s} above 5") });
    }
    let used: BTreeSet<u64> = m.columns().iter().copied().collect();
    let vecs: Vec<u64> = (1u64..(1u64 << (s + 1))).filter(|v| !used.contains(v)).collect();
    BinaryMatroid::from_vectors(&vecs, pg_labels(&vecs))
}

fn prefixed(m: &BinaryMatroid, prefix: &str) -> BinaryMatroid {
    m.relabel(|l| Label::new(format!("{prefix}{l}"))).expect("prefix keeps labels distinct")
}

/// Direct sum with labels prefixed `x` and `y` to keep them apart.
pub fn labelled_sum(a: &BinaryMatroid, b: &BinaryMatroid) -> Result<BinaryMatroid> {
    direct_sum(&prefixed(a, "x"), &prefixed(b, "y"))
}

fn param(params: &[usize], i: usize, name: &str) -> Result<usize> {
    params.get(i).copied().ok_or_else(|| Error::BadParams { name: name.into(), reason: format!("missing parameter {}", i + 1) })
}

fn no_params(params: &[usize], name: &str) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::BadParams { name: name.into(), reason: "takes no parameters".into() })
    }
}

/// Every name accepted by [`make_named`], with its parameter list.
pub const NAMES: &[(&str, &str)] = &[
    ("fano", ""),
    ("fano_dual", ""),
    ("ag32", ""),
    ("s8", ""),
    ("wheel", "k"),
    ("spike", "r"),
    ("s2n", "n"),
    ("r10", ""),
    ("r12", ""),
    ("pg32", ""),
    ("pg32_dual", ""),
    ("u", "r:n"),
    ("k33ij", "i:j"),
    ("k3n_triple", "n"),
    ("complete", "k"),
    ("complete_bipartite", "a:b"),
];

/// Builds a named matroid. Graph families give cycle matroids.
pub fn make_named(name: &str, params: &[usize]) -> Result<BinaryMatroid> {
    match name {
        "fano" => no_params(params, name).map(|_| fano()),
        "fano_dual" => no_params(params, name).map(|_| fano().dual()),
        "ag32" => no_params(params, name).map(|_| ag32()),
        "s8" => no_params(params, name).and_then(|_| s2n(4)),
        "wheel" => {
            let k = param(params, 0, name)?;
            if k < 3 {
                return Err(Error::BadParams { name: name.into(), reason: format!("need k >= 3, got {k}") });
            }
            graph_matroid(&wheel_graph(k))
        }
        "spike" => spike(param(params, 0, name)?),
        "s2n" => s2n(param(params, 0, name)?),
        "r10" => no_params(params, name).map(|_| r10()),
        "r12" => no_params(params, name).map(|_| r12()),
        "pg32" => no_params(params, name).and_then(|_| projective_geometry(3)),
        "pg32_dual" => no_params(params, name).and_then(|_| projective_geometry(3)).map(|m| m.dual()),
        "u" => uniform(param(params, 0, name)?, param(params, 1, name)?),
        "k33ij" => graph_matroid(&k33ij_graph(param(params, 0, name)?, param(params, 1, name)?)?),
        "k3n_triple" => graph_matroid(&k3n_triple_graph(param(params, 0, name)?)?),
        "complete" => {
            let k = param(params, 0, name)?;
            if !(2..=64).contains(&k) {
                return Err(Error::BadParams { name: name.into(), reason: format!("need 2 <= k <= 64, got {k}") });
            }
            graph_matroid(&complete_graph(k))
        }
        "complete_bipartite" => {
            let (a, b) = (param(params, 0, name)?, param(params, 1, name)?);
            if a == 0 || b == 0 || a + b > 64 {
                return Err(Error::BadParams { name: name.into(), reason: format!("bad sides ({a}, {b})") });
            }
            graph_matroid(&complete_bipartite_graph(a, b))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Parses `name` or `name:p1:p2` and builds it.
pub fn parse_named(spec: &str) -> Result<BinaryMatroid> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params = parts
        .map(|p| p.parse::<usize>().map_err(|_| Error::BadParams { name: name.into(), reason: format!("bad parameter {p:?}") }))
        .collect::<Result<Vec<_>>>()?;
    make_named(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn sizes_and_ranks() {
        let cases: &[(&str, usize, usize)] = &[
            ("fano", 3, 7),
            ("fano_dual", 4, 7),
            ("ag32", 4, 8),
            ("s8", 4, 8),
            ("wheel:4", 4, 8),
            ("spike:4", 4, 9),
            ("spike:5", 5, 11),
            ("s2n:5", 5, 10),
            ("r10", 5, 10),
            ("r12", 6, 12),
            ("pg32", 4, 15),
            ("pg32_dual", 11, 15),
            ("u:2:3", 2, 3),
            ("u:1:4", 1, 4),
            ("k33ij:3:0", 5, 12),
            ("k33ij:1:1", 5, 11),
            ("k3n_triple:4", 6, 15),
            ("complete:5", 4, 10),
            ("complete_bipartite:3:3", 5, 9),
        ];
        for &(spec, r, n) in cases {
            let m = parse_named(spec).unwrap();
            assert_eq!((m.rank(), m.len()), (r, n), "{spec}");
        }
    }

    #[test]
    fn bad_names_and_params() {
        assert!(matches!(parse_named("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_named("spike:2"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_named("k33ij:1:2"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_named("u:2:4"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_named("fano:1"), Err(Error::BadParams { .. })));
        assert!(matches!(parse_named("wheel:x"), Err(Error::BadParams { .. })));
    }

    #[test]
    fn spike_labels_and_deletion() {
        let s8 = s2n(4).unwrap();
        assert!(s8.index_of(&"b4".into()).is_none());
        assert!(s8.index_of(&"a4".into()).is_some());
        assert!(s8.index_of(&"c".into()).is_some());
    }

    #[test]
    fn graph_examples() {
        let k4 = graph_matroid(&complete_graph(4)).unwrap();
        assert_eq!((k4.rank(), k4.len()), (3, 6));
        let bond = bond_matroid(&k33ij_graph(3, 0).unwrap()).unwrap();
        assert_eq!((bond.rank(), bond.len()), (7, 12));
        let tri = graph_matroid(&complete_graph(3)).unwrap();
        assert!(are_isomorphic(&tri, &uniform(2, 3).unwrap()).unwrap());
        let g = k3n_triple_graph(3).unwrap();
        let labels: ElementSet = g.edge_labels().into_iter().collect();
        assert!(triple_edge_labels().is_subset(&labels));
        let mut bad = SimpleGraph::with_vertices(2);
        assert!(bad.add_edge(0, 0).is_err());
        bad.add_edge(0, 1).unwrap();
        assert!(bad.add_edge(1, 0).is_err());
        assert!(bad.add_edge(0, 5).is_err());
    }

    #[test]
    fn complements_in_pg32() {
        let pg = |m: &BinaryMatroid| pg_complement(m, 3).unwrap();
        assert!(are_isomorphic(&pg(&fano()), &ag32()).unwrap());
        let k5 = make_named("complete", &[5]).unwrap();
        assert!(are_isomorphic(&pg(&uniform(4, 5).unwrap()), &k5).unwrap());
        let k4 = make_named("complete", &[4]).unwrap();
        assert!(are_isomorphic(&pg(&k4), &spike(4).unwrap()).unwrap());
        assert!(matches!(pg_complement(&uniform(1, 2).unwrap(), 3), Err(Error::NotSimple)));
        assert!(matches!(pg_complement(&r10(), 3), Err(Error::RankTooLarge { .. })));
        let empty = pg_complement(&projective_geometry(3).unwrap(), 3).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn k5_minus_edge_is_complement_of_parallel_connection() {
        let mut g = complete_graph(5);
        let labels = g.edge_labels();
        let keep: Vec<usize> = (0..labels.len()).filter(|&k| labels[k].as_str() != "1-2").collect();
        let edges: Vec<(usize, usize)> = keep.iter().map(|&k| g.edges()[k]).collect();
        g = SimpleGraph::with_vertices(5);
        for (u, v) in edges {
            g.add_edge(u, v).unwrap();
        }
        let k5e = graph_matroid(&g).unwrap();
        let u23 = uniform(2, 3).unwrap();
        let u34 = uniform(3, 4).unwrap().relabel(|l| Label::new(format!("y{l}"))).unwrap();
        let p = crate::matroid::parallel_connection(&u23, &"1".into(), &u34, &"y1".into()).unwrap();
        assert_eq!((p.rank(), p.len()), (4, 6));
        assert!(are_isomorphic(&pg_complement(&p, 3).unwrap(), &k5e).unwrap());
    }
}
