//! Cross-checks of the engine against independent computations.

mod common;

use std::collections::HashSet;

use common::ring_oracle::{table_decomposables, RingOracle};
use zkring_core::generate::{cone, disjoint_points, polygon};
use zkring_core::hochster::{duality_check, hochster_table, poincare_series};
use zkring_core::linalg::field::PrimeField;
use zkring_core::product::product_table;
use zkring_core::{Coefficients, SimplicialComplex, VertexSubset};

fn ring_matches(k: &SimplicialComplex, p: u64) -> Result<(), String> {
    let oracle = RingOracle::new(k, p);
    let t = product_table(k, PrimeField::new(p)).map_err(|e| e.to_string())?;
    let hb = hochster_table(k, Coefficients::Prime(p)).map_err(|e| e.to_string())?.betti();
    let ob = oracle.betti();
    if hb != ob {
        return Err(format!("Betti {hb:?} vs oracle {ob:?}"));
    }
    let top = ob.len();
    let sizes: Vec<usize> = (0..top).map(|n| t.degree_range(n).len()).collect();
    for n in 1..top {
        if sizes[n] != ob[n] {
            return Err(format!("{} classes in degree {n}, oracle has {}", sizes[n], ob[n]));
        }
    }
    let products: Vec<(usize, Vec<u64>)> = t
        .products
        .iter()
        .map(|(i, j, c)| (t.classes[*i].degree + t.classes[*j].degree, c.clone()))
        .collect();
    let mine = table_decomposables(&sizes, &products, p);
    let theirs: Vec<usize> = oracle.decomposables().into_iter().take(top).collect();
    if mine != theirs {
        return Err(format!("decomposables {mine:?} vs oracle {theirs:?}"));
    }
    Ok(())
}

#[test]
fn product_ring_agrees_with_dga_model() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, k) in common::corpus_up_to(6) {
        for p in [2, 3] {
            if let Err(e) = ring_matches(&k, p) {
                failures.push(format!("{name} over F{p}: {e}"));
            }
            checked += 1;
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(checked > 300);
}

#[test]
fn dga_model_sees_known_products() {
    let oracle = RingOracle::new(&polygon(4).unwrap(), 3);
    assert_eq!(oracle.betti(), vec![1, 0, 0, 2, 0, 0, 1]);
    assert_eq!(oracle.decomposables()[6], 1);
    let oracle = RingOracle::new(&polygon(5).unwrap(), 3);
    assert_eq!(oracle.decomposables()[7], 1);
    assert_eq!(oracle.decomposables().iter().sum::<usize>(), 1);
}

#[test]
fn minimal_non_faces_by_brute_force() {
    for (name, k) in common::corpus_up_to(7) {
        let faces: HashSet<VertexSubset> = k.faces().into_iter().collect();
        let mut expected: Vec<VertexSubset> = VertexSubset::full(k.m())
            .subsets()
            .filter(|s| !faces.contains(s) && s.iter().all(|v| faces.contains(&s.without(v))))
            .collect();
        expected.sort_by(|a, b| a.lex_cmp(*b));
        assert_eq!(k.minimal_non_faces(), expected, "{name}");
    }
    let square = polygon(4).unwrap();
    let mnf: Vec<Vec<usize>> = square.minimal_non_faces().iter().map(|s| s.labels()).collect();
    assert_eq!(mnf, vec![vec![1, 3], vec![2, 4]]);
}

#[test]
fn full_subcomplex_by_face_enumeration() {
    for (name, k) in common::corpus_up_to(6) {
        let faces = k.faces();
        for subset in VertexSubset::full(k.m()).subsets() {
            let sub = k.full_subcomplex(subset).unwrap();
            let mut got: Vec<VertexSubset> = sub.complex.faces().into_iter().map(|f| sub.to_parent(f)).collect();
            let mut want: Vec<VertexSubset> = faces.iter().copied().filter(|f| f.is_subset(subset)).collect();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{name} on {subset}");
        }
    }
    let sub = polygon(4).unwrap().full_subcomplex(VertexSubset::from_labels(&[1, 3], 4).unwrap()).unwrap();
    assert_eq!(sub.complex, disjoint_points(2).unwrap());
}

#[test]
fn hochster_examples_against_cellular_model() {
    let pent = polygon(5).unwrap();
    let zk = zkring_core::cellular::zk_chain_complex(&pent).unwrap().betti(Coefficients::Rat).unwrap();
    assert_eq!(zk.ranks, vec![1, 0, 0, 5, 5, 0, 0, 1]);
    assert_eq!(hochster_table(&pent, Coefficients::Rat).unwrap().betti(), zk.ranks);

    let two = disjoint_points(2).unwrap();
    let zk = zkring_core::cellular::zk_chain_complex(&two).unwrap().betti(Coefficients::Rat).unwrap();
    let t = hochster_table(&two, Coefficients::Rat).unwrap();
    assert_eq!(poincare_series(&t).to_string(), "1 + t^3");
    assert_eq!(zk.ranks, t.betti());
}

#[test]
fn duality_of_the_cone_over_the_square() {
    let t = hochster_table(&cone(&polygon(4).unwrap()).unwrap(), Coefficients::Rat).unwrap();
    let d = duality_check(&t);
    assert_eq!(d.top_degree, 8);
    assert!(!d.dual);
    assert_eq!(t.betti().len() - 1, 6);
}
