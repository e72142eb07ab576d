//! Property tests across modules.

use binmat::extend::{enumerate_extensions, gamma_matroid, CatalogLayer, ExtendOptions, ExtensionVector, Filter};
use binmat::iso::{are_isomorphic, canonical_key};
use binmat::matroid::{numeric_labels, BinaryMatroid, Label};
use binmat::nsc::{nonseparating_cocircuits, report};
use binmat::{zoo, BitMatrix, Bits};
use proptest::prelude::*;

fn vectors() -> impl Strategy<Value = Vec<u64>> {
    (2usize..6).prop_flat_map(|r| proptest::collection::vec(1u64..(1u64 << r), r..(r + 7)))
}

fn matroid(cols: &[u64]) -> BinaryMatroid {
    BinaryMatroid::from_vectors(cols, numeric_labels(cols.len())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_column_order(cols in vectors(), seed in any::<u64>()) {
        let m = matroid(&cols);
        let mut perm: Vec<usize> = (0..cols.len()).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled: Vec<u64> = perm.iter().map(|&j| cols[j]).collect();
        let other = matroid(&shuffled);
        prop_assert_eq!(canonical_key(&m).unwrap(), canonical_key(&other).unwrap());
    }

    #[test]
    fn duality_is_an_involution(cols in vectors()) {
        let m = matroid(&cols);
        prop_assert!(m.dual().dual().same_matroid(&m));
        prop_assert_eq!(m.dual().rank(), m.corank());
    }

    #[test]
    fn gamma_contracts_back_to_the_base(cols in vectors(), raw in proptest::collection::vec(0u8..3, 12)) {
        let m = matroid(&cols);
        let n = m.len();
        let v: Vec<u8> = (0..n).map(|i| if i < m.rank() { raw[i] & 2 } else { raw[i] }).collect();
        let v = ExtensionVector::new(v).unwrap();
        let g = gamma_matroid(m.rep(), &v).unwrap();
        prop_assert_eq!(g.rank(), m.rank() + 1);
        let e = g.index_of(&Label::from("e")).unwrap();
        let (si, _) = g.contract_indices(&Bits::from_indices([e])).simplify();
        let (base, _) = m.simplify();
        prop_assert!(are_isomorphic(&si, &base).unwrap());
    }

    #[test]
    fn y_is_complement_of_ytilde(cols in vectors()) {
        let m = matroid(&cols);
        if let Ok(rep) = report(&m) {
            let union: binmat::ElementSet = rep.y.union(&rep.ytilde).cloned().collect();
            prop_assert_eq!(union, m.ground_set());
            prop_assert!(rep.y.is_disjoint(&rep.ytilde));
        }
    }

    #[test]
    fn nonseparating_cocircuits_leave_connected_deletions(cols in vectors()) {
        let m = matroid(&cols);
        for c in nonseparating_cocircuits(&m).unwrap() {
            let rest = m.delete_indices(&c.support);
            prop_assert!(rest.is_connected());
        }
    }
}

#[test]
fn weaker_thresholds_enlarge_layers() {
    let seed = zoo::graph_matroid(&zoo::k33ij_graph(3, 0).unwrap()).unwrap();
    let seeds = CatalogLayer::from_seeds(5, &[seed]).unwrap();
    let opts = ExtendOptions { seeds_screened: true, ..Default::default() };
    let mut previous: Option<Vec<_>> = None;
    for t in (0..=3).rev() {
        let filters = [Filter::Cosimple, Filter::Regular, Filter::NoMK5, Filter::DualYtildeCorankAtLeast(t)];
        let keys = enumerate_extensions(&seeds, &filters, &opts).unwrap().layer.keys();
        if let Some(prev) = &previous {
            assert!(prev.iter().all(|k| keys.contains(k)), "threshold {t} lost keys");
        }
        previous = Some(keys);
    }
}

#[test]
fn screened_seed_shortcut_matches_full_screen() {
    let seed = zoo::graph_matroid(&zoo::k33ij_graph(3, 0).unwrap()).unwrap();
    let seeds = CatalogLayer::from_seeds(5, &[seed]).unwrap();
    let filters = [Filter::Cosimple, Filter::Regular, Filter::NoMK5];
    let fast = enumerate_extensions(&seeds, &filters, &ExtendOptions { seeds_screened: true, ..Default::default() }).unwrap();
    let slow = enumerate_extensions(&seeds, &filters, &ExtendOptions::default()).unwrap();
    assert_eq!(fast.layer.keys(), slow.layer.keys());
}

#[test]
fn identity_has_trivial_layer_structure() {
    let a = BitMatrix::identity(3).unwrap();
    let m = BinaryMatroid::with_numeric_labels(&a).unwrap();
    let seeds = CatalogLayer::from_seeds(3, &[m]).unwrap();
    let out = enumerate_extensions(&seeds, &[], &ExtendOptions::default()).unwrap();
    assert_eq!(out.stats.candidates, 8);
    assert!(out.layer.items.iter().all(|i| i.matrix.rows() == 4));
}
