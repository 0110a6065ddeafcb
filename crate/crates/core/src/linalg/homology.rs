//! Reduced simplicial (co)homology with explicit cocycle representatives.
//!
//! Orientation: faces are ordered by ascending label, and deleting the vertex
//! at position `i` carries the sign `(-1)^i`. Degree `-1` is the empty face,
//! so `∂_0` is the augmentation and the empty complex has `H̃_{-1} = k`.

use std::collections::HashMap;

use serde::Serialize;

use super::chain::ChainComplex;
use super::field::{nullspace, EchelonSpan, Field};
use super::matrix::IntMatrix;
use super::Coefficients;
use crate::complex::{sort_faces, SimplicialComplex, VertexSubset};
use crate::error::Result;

/// Faces of a complex grouped by dimension, with a reverse index.
#[derive(Clone, Debug)]
pub struct FaceIndex {
    by_dim: Vec<Vec<VertexSubset>>,
    lookup: HashMap<VertexSubset, usize>,
}

impl FaceIndex {
    /// `faces` must be downward closed and contain `∅`.
    pub fn from_faces(mut faces: Vec<VertexSubset>) -> Self {
        sort_faces(&mut faces);
        let top = faces.last().map_or(0, |f| f.len());
        let mut by_dim = vec![Vec::new(); top + 1];
        let mut lookup = HashMap::with_capacity(faces.len());
        for f in faces {
            let bucket = &mut by_dim[f.len()];
            lookup.insert(f, bucket.len());
            bucket.push(f);
        }
        FaceIndex { by_dim, lookup }
    }

    pub fn of(k: &SimplicialComplex) -> Self {
        Self::from_faces(k.faces())
    }

    /// Faces of the full subcomplex on `subset`, in the parent's labels.
    pub fn within(all_faces: &[VertexSubset], subset: VertexSubset) -> Self {
        Self::from_faces(all_faces.iter().copied().filter(|f| f.is_subset(subset)).collect())
    }

    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 2
    }

    pub fn faces(&self, d: isize) -> &[VertexSubset] {
        let i = d + 1;
        if i < 0 || i as usize >= self.by_dim.len() {
            &[]
        } else {
            &self.by_dim[i as usize]
        }
    }

    pub fn count(&self, d: isize) -> usize {
        self.faces(d).len()
    }

    pub fn index(&self, face: VertexSubset) -> Option<usize> {
        self.lookup.get(&face).copied()
    }

    /// `∂_d : C_d → C_{d-1}`, rows indexed by `(d-1)`-faces.
    pub fn boundary(&self, d: isize) -> IntMatrix {
        let cols = self.faces(d);
        let mut m = IntMatrix::zeros(self.count(d - 1), cols.len());
        for (c, face) in cols.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let r = self.index(face.without(v)).expect("complex is downward closed");
                m.add_to(r, c, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }

    /// Augmented chain complex in degrees `-1..=dim`.
    pub fn chain_complex(&self) -> ChainComplex {
        ChainComplex::new(-1, (-1..=self.dim()).map(|d| self.boundary(d)).collect())
    }

    /// Evaluates `δ` of a `d`-cochain (indexed like `faces(d)`) on every
    /// `(d+1)`-face.
    pub fn coboundary<F: Field>(&self, field: &F, d: isize, cochain: &[F::Elem]) -> Vec<F::Elem> {
        self.faces(d + 1)
            .iter()
            .map(|tau| {
                let mut acc = field.zero();
                for (pos, v) in tau.iter().enumerate() {
                    let i = self.index(tau.without(v)).expect("downward closed");
                    let x = &cochain[i];
                    if field.is_zero(x) {
                        continue;
                    }
                    acc = if pos % 2 == 0 { field.add(&acc, x) } else { field.sub(&acc, x) };
                }
                acc
            })
            .collect()
    }
}

/// `∂_d` of `K` in canonical face order; empty outside `-1..=dim K + 1`.
pub fn boundary_matrix(k: &SimplicialComplex, d: isize) -> IntMatrix {
    FaceIndex::of(k).boundary(d)
}

/// Ranks and torsion of (reduced) homology, one entry per degree starting at
/// `min_degree`.
///
/// `torsion` holds the prime-power summands of *homology*; by universal
/// coefficients the torsion of cohomology in degree `d` is that of homology
/// in degree `d - 1` (see [`HomologyProfile::cohomology_torsion`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub coeffs: Coefficients,
    pub min_degree: isize,
    pub ranks: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

impl HomologyProfile {
    pub fn new(coeffs: Coefficients, min_degree: isize, ranks: Vec<usize>, torsion: Vec<Vec<u64>>) -> Self {
        let mut p = HomologyProfile { coeffs, min_degree, ranks, torsion };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.ranks.last() == Some(&0) && self.torsion.last().is_some_and(Vec::is_empty) {
            self.ranks.pop();
            self.torsion.pop();
        }
    }

    pub fn rank(&self, d: isize) -> usize {
        let i = d - self.min_degree;
        if i < 0 {
            0
        } else {
            self.ranks.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn torsion(&self, d: isize) -> &[u64] {
        let i = d - self.min_degree;
        if i < 0 {
            &[]
        } else {
            self.torsion.get(i as usize).map_or(&[], Vec::as_slice)
        }
    }

    pub fn cohomology_torsion(&self, d: isize) -> &[u64] {
        self.torsion(d - 1)
    }

    /// Degrees `min_degree..` with nonzero rank or torsion are stored; this is
    /// the last such degree.
    pub fn top_degree(&self) -> Option<isize> {
        (!self.ranks.is_empty()).then(|| self.min_degree + self.ranks.len() as isize - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Betti numbers as a vector indexed from `min_degree`.
    pub fn betti(&self) -> &[usize] {
        &self.ranks
    }

    /// Reduced homology of `S^d`: rank one in degree `d`, nothing else.
    pub fn is_sphere_of_dim(&self, d: isize) -> bool {
        !self.has_torsion() && self.total_rank() == 1 && self.rank(d) == 1
    }

    /// Primes appearing in the torsion.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self
            .torsion
            .iter()
            .flatten()
            .map(|&q| smallest_prime_factor(q))
            .collect();
        primes.sort_unstable();
        primes.dedup();
        primes
    }
}

fn smallest_prime_factor(q: u64) -> u64 {
    (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q)
}

/// Reduced homology of `K`; the empty complex has rank one in degree `-1`.
pub fn reduced_homology(k: &SimplicialComplex, coeffs: Coefficients) -> Result<HomologyProfile> {
    FaceIndex::of(k).chain_complex().homology(coeffs)
}

pub(crate) fn reduced_homology_of(index: &FaceIndex, coeffs: Coefficients) -> Result<HomologyProfile> {
    index.chain_complex().homology(coeffs)
}

/// Cocycles spanning `H̃^d` over a field, plus the machinery to read off the
/// cohomology coordinates of any cocycle.
#[derive(Clone, Debug)]
pub struct CocycleBasis<F: Field> {
    pub degree: isize,
    /// The `d`-faces indexing each cochain.
    pub faces: Vec<VertexSubset>,
    pub basis: Vec<Vec<F::Elem>>,
    span: EchelonSpan<F>,
    image_rank: usize,
}

impl<F: Field> CocycleBasis<F> {
    pub(crate) fn compute(index: &FaceIndex, d: isize, field: &F) -> Self {
        let faces = index.faces(d).to_vec();
        let n = faces.len();
        let to_field = |m: &IntMatrix| -> Vec<Vec<F::Elem>> {
            m.to_dense()
                .into_iter()
                .map(|row| row.into_iter().map(|x| field.from_i64(x)).collect())
                .collect()
        };
        // δ^d = ∂_{d+1}^T: its rows are the columns of ∂_{d+1}.
        let delta_rows = to_field(&index.boundary(d + 1).transpose());
        let kernel = nullspace(field, &delta_rows, n);
        // im δ^{d-1} is spanned by the rows of ∂_d.
        let image_gens = to_field(&index.boundary(d));
        let mut span = EchelonSpan::new(field.clone(), n);
        for g in &image_gens {
            span.insert(g);
        }
        let image_rank = span.rank();
        // rank-deficient generators are not stored, so generator indices past
        // `image_rank` are exactly the cohomology basis
        let mut basis = Vec::new();
        for z in kernel {
            if span.insert(&z) {
                basis.push(z);
            }
        }
        CocycleBasis { degree: d, faces, basis, span, image_rank }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Cohomology coordinates of a cocycle; `None` if it is not a cocycle.
    pub fn coordinates(&self, cocycle: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let all = self.span.express(cocycle)?;
        Some(all[self.image_rank..].to_vec())
    }
}

/// Cocycle representatives of `H̃^d(K; F)` in canonical face order.
pub fn cocycle_basis<F: Field>(k: &SimplicialComplex, d: isize, field: &F) -> CocycleBasis<F> {
    CocycleBasis::compute(&FaceIndex::of(k), d, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generate::{boundary_simplex, disjoint_points, polygon, simplex};
    use crate::linalg::field::{PrimeField, Rationals};
    use crate::linalg::smith::integer_rank;

    #[test]
    fn edge_boundary_sign() {
        let edge = simplex(1).unwrap();
        let d1 = boundary_matrix(&edge, 1);
        // rows {1},{2}; column {1,2}
        assert_eq!(d1.to_dense(), vec![vec![-1], vec![1]]);
        let d0 = boundary_matrix(&edge, 0);
        assert_eq!(d0.to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = polygon(6).unwrap();
        let idx = FaceIndex::of(&k);
        for d in -1..=3 {
            let a = idx.boundary(d);
            let b = idx.boundary(d + 1);
            assert!(a.product_is_zero(&b), "d = {d}");
        }
    }

    #[test]
    fn square_d1_rank() {
        let d1 = boundary_matrix(&polygon(4).unwrap(), 1);
        assert_eq!((d1.nrows(), d1.ncols()), (4, 4));
        assert_eq!(integer_rank(&d1), 3);
    }

    #[test]
    fn out_of_range_degrees_are_empty() {
        let k = polygon(4).unwrap();
        assert_eq!(boundary_matrix(&k, 3).ncols(), 0);
        assert_eq!(boundary_matrix(&k, -1).nrows(), 0);
        assert_eq!(boundary_matrix(&k, -1).ncols(), 1);
    }

    #[test]
    fn homology_examples() {
        let two = reduced_homology(&disjoint_points(2).unwrap(), Coefficients::Int).unwrap();
        assert_eq!(two.ranks, vec![0, 1]);
        assert_eq!(two.rank(0), 1);
        for m in 3..8 {
            let h = reduced_homology(&polygon(m).unwrap(), Coefficients::Rat).unwrap();
            assert!(h.is_sphere_of_dim(1));
        }
        let empty = reduced_homology(&SimplicialComplex::void_simplex(), Coefficients::Int).unwrap();
        assert_eq!(empty.rank(-1), 1);
        assert!(empty.is_sphere_of_dim(-1));
        let tri = reduced_homology(&simplex(2).unwrap(), Coefficients::Prime(2)).unwrap();
        assert!(tri.is_zero());
        let s2 = reduced_homology(&boundary_simplex(3).unwrap(), Coefficients::Int).unwrap();
        assert!(s2.is_sphere_of_dim(2));
    }

    /// The 6-vertex projective plane: integral H_1 = Z/2, so F_2 sees extra
    /// classes in degrees 1 and 2 while Q sees nothing.
    #[test]
    fn projective_plane_torsion() {
        let rp2 = SimplicialComplex::from_facets(
            6,
            &[
                [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
                [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
            ],
        )
        .unwrap();
        let z = reduced_homology(&rp2, Coefficients::Int).unwrap();
        assert_eq!(z.total_rank(), 0);
        assert_eq!(z.torsion(1), &[2]);
        assert_eq!(z.cohomology_torsion(2), &[2]);
        assert_eq!(z.torsion_primes(), vec![2]);
        let q = reduced_homology(&rp2, Coefficients::Rat).unwrap();
        assert!(q.is_zero());
        let f2 = reduced_homology(&rp2, Coefficients::Prime(2)).unwrap();
        assert_eq!((f2.rank(1), f2.rank(2)), (1, 1));
        let f3 = reduced_homology(&rp2, Coefficients::Prime(3)).unwrap();
        assert!(f3.is_zero());
    }

    #[test]
    fn two_point_cocycle() {
        let f = Rationals;
        let b = cocycle_basis(&disjoint_points(2).unwrap(), 0, &f);
        assert_eq!(b.len(), 1);
        // the class of indicator(1) - indicator(2) is a nonzero multiple of it
        let diff = vec![f.one(), f.neg(&f.one())];
        let c = b.coordinates(&diff).unwrap();
        assert!(!f.is_zero(&c[0]));
    }

    #[test]
    fn square_one_cocycle() {
        // oracle: H^1 of a 4-cycle is spanned by the dual of any single edge,
        // and every edge indicator is cohomologous to ± that class
        let f = Rationals;
        let k = polygon(4).unwrap();
        let idx = FaceIndex::of(&k);
        let b = CocycleBasis::compute(&idx, 1, &f);
        assert_eq!(b.len(), 1);
        for e in 0..4 {
            let mut ind = vec![f.zero(); 4];
            ind[e] = f.one();
            let c = b.coordinates(&ind).unwrap();
            assert_eq!(c.len(), 1);
            let abs = if c[0] < f.zero() { f.neg(&c[0]) } else { c[0].clone() };
            assert_eq!(abs, f.one());
        }
        // basis element evaluates nontrivially and is closed
        let z = &b.basis[0];
        assert!(idx.coboundary(&f, 1, z).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn contractible_has_no_cocycles() {
        let f = PrimeField::new(3);
        let tri = simplex(2).unwrap();
        for d in 0..=2 {
            assert!(cocycle_basis(&tri, d, &f).is_empty());
        }
    }

    #[test]
    fn coordinates_reject_non_cocycles() {
        let f = PrimeField::new(2);
        let k = disjoint_points(2).unwrap();
        let b = cocycle_basis(&simplex(1).unwrap(), 0, &f);
        assert!(b.is_empty());
        let b = cocycle_basis(&k, 0, &f);
        assert_eq!(b.coordinates(&[1, 0]), Some(vec![1]));
        let edge_b = cocycle_basis(&simplex(1).unwrap(), 0, &f);
        assert_eq!(edge_b.coordinates(&[1, 0]), None);
    }
}
