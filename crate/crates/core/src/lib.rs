//! Cohomology rings of moment-angle complexes `Z_K` computed from the full
//! subcomplexes of a simplicial complex `K`, together with the combinatorial
//! predicates built on them: cup-level Golodness, minimal non-Golodness, the
//! cone/core splitting, Gorenstein*, and recognition of connected sums of
//! sphere products. Independent cellular chain models of `Z_K` and of the
//! real moment-angle complex `R_K` serve as oracles.

pub mod cellular;
pub mod classify;
pub mod complex;
pub mod error;
pub mod hochster;
pub mod linalg;
pub mod product;

pub use complex::generate::{self, Family};
pub use complex::{ComplexJson, Core, Relabeled, SimplicialComplex, VertexSubset};
pub use error::{Error, Result};
pub use hochster::{hochster_table, HochsterTable};
pub use linalg::homology::{reduced_homology, HomologyProfile};
pub use linalg::Coefficients;
