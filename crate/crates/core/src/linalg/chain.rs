use rayon::prelude::*;

use super::homology::HomologyProfile;
use super::matrix::IntMatrix;
use super::smith::{prime_power_factors, rank_mod_p, smith_normal_form};
use super::Coefficients;
use crate::error::{Error, Result};

/// A bounded chain complex of free abelian groups.
///
/// `boundaries[i]` is the differential out of degree `min_degree + i`, an
/// `n_{i-1} × n_i` matrix (`0 × n_0` at the bottom).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub min_degree: isize,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(min_degree: isize, boundaries: Vec<IntMatrix>) -> Self {
        for w in boundaries.windows(2) {
            assert_eq!(w[0].ncols(), w[1].nrows(), "chain groups do not line up");
        }
        ChainComplex { min_degree, boundaries }
    }

    pub fn rank_of_group(&self, degree: isize) -> usize {
        let i = degree - self.min_degree;
        if i < 0 || i as usize >= self.boundaries.len() {
            0
        } else {
            self.boundaries[i as usize].ncols()
        }
    }

    pub fn top_degree(&self) -> isize {
        self.min_degree + self.boundaries.len() as isize - 1
    }

    /// Whether every composite `∂ ∘ ∂` vanishes.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].product_is_zero(&w[1]))
    }

    pub fn homology(&self, coeffs: Coefficients) -> Result<HomologyProfile> {
        let facts: Vec<(usize, Vec<u64>)> = self
            .boundaries
            .par_iter()
            .map(|d| boundary_data(d, coeffs))
            .collect::<Result<_>>()?;
        let n = self.boundaries.len();
        let mut ranks = Vec::with_capacity(n);
        let mut torsion = Vec::with_capacity(n);
        for i in 0..n {
            let dim = self.boundaries[i].ncols();
            let out_rank = facts[i].0;
            let in_rank = facts.get(i + 1).map_or(0, |f| f.0);
            ranks.push(dim - out_rank - in_rank);
            torsion.push(facts.get(i + 1).map_or_else(Vec::new, |f| f.1.clone()));
        }
        Ok(HomologyProfile::new(coeffs, self.min_degree, ranks, torsion))
    }
}

/// Rank of a differential and, over the integers, its torsion prime powers.
fn boundary_data(d: &IntMatrix, coeffs: Coefficients) -> Result<(usize, Vec<u64>)> {
    match coeffs {
        Coefficients::Prime(p) => Ok((rank_mod_p(d, p), Vec::new())),
        Coefficients::Rat => Ok((smith_normal_form(d).len(), Vec::new())),
        Coefficients::Int => {
            let factors = smith_normal_form(d);
            let mut tors = Vec::new();
            for f in factors.iter().filter(|f| !num_traits::One::is_one(*f)) {
                tors.extend(prime_power_factors(f).ok_or(Error::Overflow)?);
            }
            tors.sort_unstable();
            Ok((factors.len(), tors))
        }
    }
}
