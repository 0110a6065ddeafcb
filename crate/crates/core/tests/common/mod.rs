#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zkring_core::generate::catalog;
use zkring_core::{SimplicialComplex, VertexSubset};

pub const RANDOM_SEED: u64 = 0x5eed_2026;
pub const RANDOM_COUNT: usize = 200;
pub const RANDOM_MAX_VERTICES: usize = 7;
pub const LIBRARY_MAX_VERTICES: usize = 8;

/// A random complex on `m` vertices: a few random facets, then a singleton
/// facet for every vertex left uncovered.
pub fn random_complex(rng: &mut impl Rng, m: usize) -> SimplicialComplex {
    let n_facets = rng.gen_range(1..=m + 2);
    let mut facets: Vec<VertexSubset> = (0..n_facets)
        .map(|_| {
            let size = rng.gen_range(1..=m.min(4));
            let mut s = VertexSubset::EMPTY;
            while s.len() < size {
                s = s.with(rng.gen_range(1..=m));
            }
            s
        })
        .collect();
    let covered = facets.iter().fold(VertexSubset::EMPTY, |a, f| a.union(*f));
    facets.extend(VertexSubset::full(m).difference(covered).iter().map(VertexSubset::singleton));
    SimplicialComplex::from_facet_sets(m, facets).expect("every vertex is covered")
}

pub fn random_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    (0..RANDOM_COUNT)
        .map(|i| {
            let m = rng.gen_range(1..=RANDOM_MAX_VERTICES);
            (format!("random#{i}"), random_complex(&mut rng, m))
        })
        .collect()
}

pub fn library_corpus() -> Vec<(String, SimplicialComplex)> {
    catalog(LIBRARY_MAX_VERTICES)
}

/// Library complexes with at most 8 vertices followed by the random corpus.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = library_corpus();
    out.extend(random_corpus());
    out
}

/// Complexes in the corpus with at most `m` vertices.
pub fn corpus_up_to(m: usize) -> Vec<(String, SimplicialComplex)> {
    corpus().into_iter().filter(|(_, k)| k.m() <= m).collect()
}

pub mod laws;
pub mod ring_oracle;
