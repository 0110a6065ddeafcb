mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zkring_core::cellular::{rk_chain_complex, zk_chain_complex};
use zkring_core::classify::{is_minimally_non_golod, tfae_check};
use zkring_core::generate::{cone, simplex};
use zkring_core::hochster::hochster_table;
use zkring_core::linalg::homology::{cocycle_basis, FaceIndex};
use zkring_core::linalg::field::{Field, PrimeField, Rationals};
use zkring_core::product::{is_cup_golod, GolodStatus};
use zkring_core::{reduced_homology, Coefficients, SimplicialComplex, VertexSubset};

fn complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m, any::<u64>()).prop_map(|(m, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_complex(&mut rng, m)
    })
}

fn p_power_count(h: &zkring_core::HomologyProfile, d: isize, p: u64) -> usize {
    h.torsion(d).iter().filter(|&&q| q % p == 0).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deletion_is_a_full_subcomplex(k in complex(7)) {
        for v in 1..=k.m() {
            let del = k.delete_vertex(v).unwrap();
            let full = k.full_subcomplex(VertexSubset::full(k.m()).without(v)).unwrap();
            prop_assert_eq!(del, full);
        }
    }

    #[test]
    fn core_splitting(k in complex(7)) {
        let c = k.core();
        prop_assert!(c.core.complex.core().simplex_vertices.is_empty());
        let joined: Vec<VertexSubset> = c.core.facets_in_parent().into_iter().map(|f| f.union(c.simplex_vertices)).collect();
        prop_assert_eq!(&SimplicialComplex::from_facet_sets(k.m(), joined).unwrap(), &k);
        let via_join = simplex(c.simplex_dim()).unwrap().join(&c.core.complex).unwrap();
        prop_assert_eq!(via_join.f_vector(), k.f_vector());
    }

    #[test]
    fn full_subcomplex_composes(k in complex(7), a in any::<u64>(), b in any::<u64>()) {
        let i = VertexSubset::from_mask(a & VertexSubset::full(k.m()).mask());
        let ki = k.full_subcomplex(i).unwrap();
        let j_local = VertexSubset::from_mask(b & VertexSubset::full(ki.complex.m()).mask());
        let twice = ki.complex.full_subcomplex(j_local).unwrap();
        let once = k.full_subcomplex(ki.to_parent(j_local)).unwrap();
        let twice_parent: Vec<VertexSubset> = twice.facets_in_parent().into_iter().map(|f| ki.to_parent(f)).collect();
        prop_assert_eq!(twice_parent, once.facets_in_parent());
    }

    #[test]
    fn json_round_trip(k in complex(7)) {
        prop_assert_eq!(SimplicialComplex::from_json_str(&k.to_json_string()).unwrap(), k);
    }

    #[test]
    fn euler_characteristic(k in complex(7)) {
        let f = k.f_vector();
        let chi: i64 = f.iter().enumerate().map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
        let h = reduced_homology(&k, Coefficients::Prime(3)).unwrap();
        let reduced: i64 = (h.min_degree..h.min_degree + h.ranks.len() as isize)
            .map(|d| if (d + 1) % 2 == 0 { h.rank(d) as i64 } else { -(h.rank(d) as i64) })
            .sum();
        // f_vector starts at the empty face, degree -1
        prop_assert_eq!(chi, reduced);
    }

    #[test]
    fn universal_coefficients(k in complex(7)) {
        let z = reduced_homology(&k, Coefficients::Int).unwrap();
        let q = reduced_homology(&k, Coefficients::Rat).unwrap();
        for d in -1..=k.dim() {
            prop_assert_eq!(z.rank(d), q.rank(d));
            for p in [2u64, 3, 5] {
                let fp = reduced_homology(&k, Coefficients::Prime(p)).unwrap();
                let expected = q.rank(d) + p_power_count(&z, d, p) + p_power_count(&z, d - 1, p);
                prop_assert_eq!(fp.rank(d), expected);
            }
        }
    }

    #[test]
    fn cocycle_bases_are_closed_and_sized(k in complex(7)) {
        let index = FaceIndex::of(&k);
        let h = reduced_homology(&k, Coefficients::Rat).unwrap();
        for d in -1..=k.dim() {
            let b = cocycle_basis(&k, d, &Rationals);
            prop_assert_eq!(b.len(), h.rank(d));
            for z in &b.basis {
                prop_assert!(index.coboundary(&Rationals, d, z).iter().all(|x| Rationals.is_zero(x)));
            }
            let f = PrimeField::new(2);
            let b2 = cocycle_basis(&k, d, &f);
            prop_assert_eq!(b2.len(), reduced_homology(&k, Coefficients::Prime(2)).unwrap().rank(d));
        }
    }

    #[test]
    fn hochster_invariants(k in complex(7)) {
        let t = hochster_table(&k, Coefficients::Rat).unwrap();
        let b = t.betti();
        prop_assert_eq!(b[0], 1);
        prop_assert_eq!(b.get(1).copied().unwrap_or(0), 0);
        prop_assert_eq!(b.get(2).copied().unwrap_or(0), 0);
        let c = hochster_table(&cone(&k).unwrap(), Coefficients::Rat).unwrap();
        prop_assert_eq!(c.betti(), b.clone());
        let z = hochster_table(&k, Coefficients::Int).unwrap();
        if z.torsion_primes().is_empty() {
            for p in [2u64, 3, 5] {
                prop_assert_eq!(hochster_table(&k, Coefficients::Prime(p)).unwrap().betti(), b.clone());
            }
        }
    }

    #[test]
    fn cellular_models(k in complex(6)) {
        let zk = zk_chain_complex(&k).unwrap();
        let rk = rk_chain_complex(&k).unwrap();
        prop_assert!(zk.chain.is_complex());
        prop_assert!(rk.chain.is_complex());
        for c in [Coefficients::Rat, Coefficients::Prime(2)] {
            let t = hochster_table(&k, c).unwrap();
            prop_assert_eq!(zk.betti(c).unwrap().ranks, t.betti());
            prop_assert_eq!(rk.betti(c).unwrap().ranks, t.real_betti());
        }
        let rc = rk_chain_complex(&cone(&k).unwrap()).unwrap();
        prop_assert_eq!(rc.betti(Coefficients::Rat).unwrap().ranks, rk.betti(Coefficients::Rat).unwrap().ranks);
    }

    #[test]
    fn tfae_conditions_agree(k in complex(6)) {
        for i in VertexSubset::full(k.m()).subsets().filter(|s| !s.is_empty()) {
            let r = tfae_check(&k, i).unwrap();
            prop_assert!(r.agree, "{:?}", r);
            if r.join_splitting {
                prop_assert!(r.betti_match);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_laws(k in complex(6)) {
        common::laws::check_product_laws(&k, Rationals).map_err(TestCaseError::fail)?;
        common::laws::check_product_laws(&k, PrimeField::new(2)).map_err(TestCaseError::fail)?;
        common::laws::check_product_laws(&k, PrimeField::new(5)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn mng_deletions_are_golod(k in complex(6)) {
        let v = is_minimally_non_golod(&k).unwrap();
        if v.mng {
            prop_assert_eq!(v.golod.status, GolodStatus::NonGolod);
            for i in 1..=k.m() {
                let del = k.delete_vertex(i).unwrap();
                let g = is_cup_golod(&del.complex, &Coefficients::default_fields());
                prop_assert_eq!(g.status, GolodStatus::CupGolod);
            }
        }
    }
}
