//! Cohomology of `Z_K` assembled from the full subcomplexes of `K`:
//!
//! `H^k(Z_K) = ⊕_{I ⊆ [m]} H̃^{k-|I|-1}(K_I)`,
//!
//! with `I = ∅` contributing the unit through `H̃^{-1}(∅) = k`. The same table
//! gives the real moment-angle complex, `H^k(R_K) = ⊕_I H̃^{k-1}(K_I)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::linalg::homology::{reduced_homology_of, FaceIndex, HomologyProfile};
use crate::linalg::Coefficients;

/// Default cap on the vertex count for the `2^m` subset sweep.
pub const DEFAULT_MAX_VERTICES: usize = 24;

/// Reduced homology of every full subcomplex with nonzero homology.
#[derive(Clone, Debug)]
pub struct HochsterTable {
    coeffs: Coefficients,
    m: usize,
    dim: isize,
    entries: BTreeMap<VertexSubset, HomologyProfile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedEntry {
    pub subset_size: usize,
    /// Reduced cohomology degree `d` of `K_I`.
    pub degree: isize,
    pub rank: usize,
    /// `(-i, 2j)` with `j = |I|`, `i = |I| - d - 1`.
    pub tor: (isize, isize),
}

#[derive(Clone, Debug, Serialize)]
pub struct HochsterReport {
    pub coeffs: Coefficients,
    pub betti: Vec<usize>,
    pub bigraded: Vec<BigradedEntry>,
    pub torsion_primes: Vec<u64>,
}

impl HochsterTable {
    pub fn coeffs(&self) -> Coefficients {
        self.coeffs
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn complex_dim(&self) -> isize {
        self.dim
    }

    /// `None` means `K_I` has vanishing reduced homology.
    pub fn entry(&self, subset: VertexSubset) -> Option<&HomologyProfile> {
        self.entries.get(&subset)
    }

    pub fn entries(&self) -> impl Iterator<Item = (VertexSubset, &HomologyProfile)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    fn betti_by(&self, filter: impl Fn(VertexSubset) -> bool, shift: impl Fn(VertexSubset) -> isize) -> Vec<usize> {
        let mut b: Vec<usize> = Vec::new();
        for (subset, profile) in self.entries.iter().filter(|(s, _)| filter(**s)) {
            for (i, &r) in profile.ranks.iter().enumerate() {
                if r == 0 {
                    continue;
                }
                let k = (shift(*subset) + profile.min_degree + i as isize) as usize;
                if b.len() <= k {
                    b.resize(k + 1, 0);
                }
                b[k] += r;
            }
        }
        b
    }

    /// Total Betti numbers `b_0, b_1, ...` of `Z_K`, without trailing zeros.
    pub fn betti(&self) -> Vec<usize> {
        self.betti_by(|_| true, |s| s.len() as isize + 1)
    }

    /// Betti numbers of `Z_{K_I}`, read off the subsets `J ⊆ I`.
    pub fn betti_within(&self, subset: VertexSubset) -> Vec<usize> {
        self.betti_by(|s| s.is_subset(subset), |s| s.len() as isize + 1)
    }

    /// Betti numbers of the real moment-angle complex `R_K`.
    pub fn real_betti(&self) -> Vec<usize> {
        self.betti_by(|_| true, |_| 1)
    }

    pub fn bigraded(&self) -> Vec<BigradedEntry> {
        let mut acc: BTreeMap<(usize, isize), usize> = BTreeMap::new();
        for (subset, profile) in &self.entries {
            for (i, &r) in profile.ranks.iter().enumerate() {
                if r > 0 {
                    *acc.entry((subset.len(), profile.min_degree + i as isize)).or_default() += r;
                }
            }
        }
        acc.into_iter()
            .map(|((s, d), rank)| BigradedEntry {
                subset_size: s,
                degree: d,
                rank,
                tor: (-(s as isize - d - 1), 2 * s as isize),
            })
            .collect()
    }

    /// Primes dividing the torsion of some `H̃_*(K_I; Z)`; only populated for
    /// integer tables.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.entries.values().flat_map(|p| p.torsion_primes()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn report(&self) -> HochsterReport {
        HochsterReport {
            coeffs: self.coeffs,
            betti: self.betti(),
            bigraded: self.bigraded(),
            torsion_primes: self.torsion_primes(),
        }
    }
}

pub fn hochster_table(k: &SimplicialComplex, coeffs: Coefficients) -> Result<HochsterTable> {
    hochster_table_capped(k, coeffs, DEFAULT_MAX_VERTICES)
}

/// Sweeps all `2^m` subsets. Faces of `K` are skipped: their full
/// subcomplexes are simplices, acyclic except for `I = ∅`.
pub fn hochster_table_capped(
    k: &SimplicialComplex,
    coeffs: Coefficients,
    max_vertices: usize,
) -> Result<HochsterTable> {
    let m = k.m();
    if m > max_vertices.min(63) {
        return Err(Error::TooManyVertices { m, cap: max_vertices });
    }
    let faces = k.faces();
    let face_set: HashSet<VertexSubset> = faces.iter().copied().collect();
    let computed: Vec<(VertexSubset, HomologyProfile)> = (1u64..(1u64 << m))
        .into_par_iter()
        .map(VertexSubset::from_mask)
        .filter(|s| !face_set.contains(s))
        .map(|s| {
            let profile = reduced_homology_of(&FaceIndex::within(&faces, s), coeffs)?;
            Ok((s, profile))
        })
        .filter(|r| r.as_ref().map_or(true, |(_, p)| !p.is_zero()))
        .collect::<Result<_>>()?;
    let mut entries: BTreeMap<VertexSubset, HomologyProfile> = computed.into_iter().collect();
    entries.insert(
        VertexSubset::EMPTY,
        HomologyProfile::new(coeffs, -1, vec![1], vec![Vec::new()]),
    );
    Ok(HochsterTable { coeffs, m, dim: k.dim(), entries })
}

/// Betti polynomial `Σ b_k t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial(pub Vec<usize>);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn poincare_series(table: &HochsterTable) -> Polynomial {
    Polynomial(table.betti())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    /// `N = m + dim K + 1`, the dimension `Z_K` would have as a closed manifold.
    pub top_degree: usize,
    pub dual: bool,
    pub failing_degrees: Vec<usize>,
}

/// Checks `b_k = b_{N-k}` for all `k` with `N = m + dim K + 1`.
pub fn duality_check(table: &HochsterTable) -> DualityReport {
    let n = (table.m as isize + table.dim + 1).max(0) as usize;
    let b = table.betti();
    let at = |k: usize| b.get(k).copied().unwrap_or(0);
    let failing: Vec<usize> = (0..b.len().max(n + 1))
        .filter(|&k| at(k) != if k <= n { at(n - k) } else { 0 })
        .collect();
    DualityReport { top_degree: n, dual: failing.is_empty(), failing_degrees: failing }
}
