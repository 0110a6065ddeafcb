//! Products in `H*(Z_K; k)` expressed in Hochster coordinates, and the
//! cup-product level Golod test.
//!
//! A class supported on `I` is a cocycle on `K_I`. For disjoint supports
//! `I, J` and cocycles `x` on `K_I` (degree `p`), `y` on `K_J` (degree `q`),
//! the product is the `(p+q+1)`-cochain on `K_{I∪J}`
//!
//! `(x·y)(σ ⊔ τ) = ± x(σ) y(τ)`,  `σ ⊆ I`, `τ ⊆ J`,
//!
//! with sign `ε_I(σ) ε_J(τ) ε_{I∪J}(σ∪τ) s(I∖σ, J∖τ)`, where
//! `ε_I(σ) = (-1)^{Σ_{j∈σ} #{i∈I : i<j}}` and `s(A, B) = (-1)^{#{(a,b)∈A×B : a>b}}`.
//! This is the multiplication of the Koszul complex of the Stanley–Reisner
//! ring transported to simplicial cochains. Overlapping supports multiply to
//! zero.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::hochster::{hochster_table_capped, DEFAULT_MAX_VERTICES};
use crate::linalg::field::{Field, PrimeField};
use crate::linalg::homology::{reduced_homology_of, CocycleBasis, FaceIndex};
use crate::linalg::Coefficients;
use crate::with_field;

/// Which cohomology the classes are graded for: `Z_K` uses `|I| + 1 + d`,
/// the real moment-angle complex `R_K` uses `d + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Complex,
    Real,
}

impl Grading {
    pub fn degree(self, support: VertexSubset, cochain_degree: isize) -> usize {
        match self {
            Grading::Complex => (support.len() as isize + 1 + cochain_degree) as usize,
            Grading::Real => (cochain_degree + 1) as usize,
        }
    }
}

/// A cohomology class of `Z_K` (or `R_K`) given by a cocycle on `K_I`.
#[derive(Clone, Debug)]
pub struct TorClass<F: Field> {
    pub support: VertexSubset,
    /// Reduced cohomology degree `d` of the representative on `K_I`.
    pub cochain_degree: isize,
    pub degree: usize,
    pub grading: Grading,
    /// The `d`-faces of `K_I` in parent labels, indexing `representative`.
    pub faces: Vec<VertexSubset>,
    pub representative: Vec<F::Elem>,
    pub coeffs: Coefficients,
}

impl<F: Field> TorClass<F> {
    /// Wraps a cocycle on `K_I` given over the `d`-faces of `K_I`.
    pub fn new(
        k: &SimplicialComplex,
        field: &F,
        support: VertexSubset,
        cochain_degree: isize,
        representative: Vec<F::Elem>,
    ) -> Result<Self> {
        let index = FaceIndex::within(&k.faces(), support);
        let faces = index.faces(cochain_degree).to_vec();
        if faces.len() != representative.len() {
            return Err(Error::BadParams(format!(
                "cochain has {} entries but K_I has {} faces of dimension {cochain_degree}",
                representative.len(),
                faces.len()
            )));
        }
        Ok(TorClass {
            support,
            cochain_degree,
            degree: Grading::Complex.degree(support, cochain_degree),
            grading: Grading::Complex,
            faces,
            representative,
            coeffs: field.coefficients(),
        })
    }

    pub fn summary(&self) -> ClassSummary {
        ClassSummary { support: self.support, degree: self.degree, cochain_degree: self.cochain_degree }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub support: VertexSubset,
    pub degree: usize,
    pub cochain_degree: isize,
}

fn parity_eps(support: VertexSubset, sigma: VertexSubset) -> usize {
    sigma.iter().map(|j| support.rank_of(j)).sum()
}

/// `#{(a, b) ∈ A × B : a > b}` for disjoint `A`, `B`.
fn parity_shuffle(a: VertexSubset, b: VertexSubset) -> usize {
    b.iter().map(|j| a.len() - a.rank_of(j)).sum()
}

/// The product cochain on the `(p+q+1)`-faces of `target`, the face index of
/// `K_{I∪J}`.
fn product_cochain<F: Field>(field: &F, x: &TorClass<F>, y: &TorClass<F>, target: &FaceIndex) -> Vec<F::Elem> {
    let union = x.support.union(y.support);
    let d = x.cochain_degree + y.cochain_degree + 1;
    let mut out = vec![field.zero(); target.count(d)];
    for (s, a) in x.faces.iter().zip(&x.representative) {
        if field.is_zero(a) {
            continue;
        }
        let ps = parity_eps(x.support, *s);
        let rest = x.support.difference(*s);
        for (t, b) in y.faces.iter().zip(&y.representative) {
            if field.is_zero(b) {
                continue;
            }
            let rho = s.union(*t);
            let Some(i) = target.index(rho) else { continue };
            let parity =
                ps + parity_eps(y.support, *t) + parity_eps(union, rho) + parity_shuffle(rest, y.support.difference(*t));
            let v = field.mul(a, b);
            out[i] = if parity.is_multiple_of(2) { field.add(&out[i], &v) } else { field.sub(&out[i], &v) };
        }
    }
    out
}

/// The product `x·y` as a cocycle on `K_{I∪J}`, or `None` when it is zero in
/// cohomology (in particular whenever the supports meet).
pub fn multiply<F: Field>(
    field: &F,
    x: &TorClass<F>,
    y: &TorClass<F>,
    k: &SimplicialComplex,
) -> Result<Option<TorClass<F>>> {
    if x.coeffs != y.coeffs || x.coeffs != field.coefficients() {
        return Err(Error::FieldMismatch(x.coeffs.to_string(), y.coeffs.to_string()));
    }
    if !x.support.is_disjoint(y.support) {
        return Ok(None);
    }
    let union = x.support.union(y.support);
    let d = x.cochain_degree + y.cochain_degree + 1;
    let target = FaceIndex::within(&k.faces(), union);
    let cochain = product_cochain(field, x, y, &target);
    let basis = CocycleBasis::compute(&target, d, field);
    let coords = basis.coordinates(&cochain).expect("products of cocycles are cocycles");
    if coords.iter().all(|c| field.is_zero(c)) {
        return Ok(None);
    }
    Ok(Some(TorClass {
        support: union,
        cochain_degree: d,
        degree: x.degree + y.degree,
        grading: x.grading,
        faces: target.faces(d).to_vec(),
        representative: cochain,
        coeffs: x.coeffs,
    }))
}

struct SupportData<F: Field> {
    index: FaceIndex,
    /// Cocycle basis per reduced degree, with the index of its first class.
    bases: BTreeMap<isize, (CocycleBasis<F>, usize)>,
}

/// All positive-degree classes of `H*(Z_K; F)` (or `H*(R_K; F_2)`) with the
/// pairwise products between them.
pub struct ProductTable<F: Field> {
    pub field: F,
    pub grading: Grading,
    /// Ordered by degree, then support (lexicographic), then basis position.
    pub classes: Vec<TorClass<F>>,
    /// Nonzero products `(i, j, coordinates)`, coordinates over the classes
    /// of degree `|x_i| + |x_j|` in table order.
    pub products: Vec<(usize, usize, Vec<F::Elem>)>,
    supports: HashMap<VertexSubset, SupportData<F>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub field: Coefficients,
    pub grading: Grading,
    pub classes: Vec<ClassSummary>,
    pub nonzero_products: Vec<(usize, usize, Vec<serde_json::Value>)>,
}

impl<F: Field> ProductTable<F> {
    /// Classes and supports only; products are filled in by [`Self::compute_products`].
    fn classes_of(k: &SimplicialComplex, field: F, grading: Grading) -> Self {
        let coeffs = field.coefficients();
        let faces = k.faces();
        let face_set: HashSet<VertexSubset> = faces.iter().copied().collect();
        let found: Vec<(VertexSubset, FaceIndex, Vec<(isize, CocycleBasis<F>)>)> = (1u64..(1u64 << k.m()))
            .into_par_iter()
            .map(VertexSubset::from_mask)
            .filter(|s| !face_set.contains(s))
            .filter_map(|s| {
                let index = FaceIndex::within(&faces, s);
                let profile = reduced_homology_of(&index, coeffs).expect("field homology does not overflow");
                let bases: Vec<_> = (0..=index.dim())
                    .filter(|&d| profile.rank(d) > 0)
                    .map(|d| (d, CocycleBasis::compute(&index, d, &field)))
                    .collect();
                (!bases.is_empty()).then_some((s, index, bases))
            })
            .collect();

        let mut keyed: Vec<(usize, VertexSubset, isize, usize)> = Vec::new();
        for (s, _, bases) in &found {
            for (d, b) in bases {
                for i in 0..b.len() {
                    keyed.push((grading.degree(*s, *d), *s, *d, i));
                }
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.lex_cmp(b.1)).then(a.2.cmp(&b.2)).then(a.3.cmp(&b.3)));

        let mut supports: HashMap<VertexSubset, SupportData<F>> = found
            .into_iter()
            .map(|(s, index, bases)| {
                (s, SupportData { index, bases: bases.into_iter().map(|(d, b)| (d, (b, usize::MAX))).collect() })
            })
            .collect();
        let mut classes = Vec::with_capacity(keyed.len());
        for (pos, (deg, s, d, i)) in keyed.into_iter().enumerate() {
            let data = supports.get_mut(&s).expect("support was just inserted");
            let entry = data.bases.get_mut(&d).expect("degree was just inserted");
            if i == 0 {
                entry.1 = pos;
            }
            classes.push(TorClass {
                support: s,
                cochain_degree: d,
                degree: deg,
                grading,
                faces: entry.0.faces.clone(),
                representative: entry.0.basis[i].clone(),
                coeffs,
            });
        }
        ProductTable { field, grading, classes, products: Vec::new(), supports }
    }

    /// Classes of the given degree, as a range of table indices.
    pub fn degree_range(&self, degree: usize) -> std::ops::Range<usize> {
        let lo = self.classes.partition_point(|c| c.degree < degree);
        let hi = self.classes.partition_point(|c| c.degree <= degree);
        lo..hi
    }

    /// Coordinates of `x_i · x_j` over the classes of the target degree, or
    /// `None` if the product vanishes.
    pub fn product_coordinates(&self, i: usize, j: usize) -> Option<Vec<F::Elem>> {
        let (x, y) = (&self.classes[i], &self.classes[j]);
        if !x.support.is_disjoint(y.support) {
            return None;
        }
        let union = x.support.union(y.support);
        let d = x.cochain_degree + y.cochain_degree + 1;
        let data = self.supports.get(&union)?;
        let (basis, first) = data.bases.get(&d)?;
        let cochain = product_cochain(&self.field, x, y, &data.index);
        let local = basis.coordinates(&cochain).expect("products of cocycles are cocycles");
        if local.iter().all(|c| self.field.is_zero(c)) {
            return None;
        }
        let range = self.degree_range(x.degree + y.degree);
        let mut coords = vec![self.field.zero(); range.len()];
        for (t, c) in local.into_iter().enumerate() {
            coords[first + t - range.start] = c;
        }
        Some(coords)
    }

    /// The raw product cochain of `x_i · x_j` on `K_{I∪J}` together with the
    /// face index of `K_{I∪J}`; `None` if the supports meet.
    pub fn product_cochain(&self, i: usize, j: usize, k: &SimplicialComplex) -> Option<(FaceIndex, Vec<F::Elem>)> {
        let (x, y) = (&self.classes[i], &self.classes[j]);
        if !x.support.is_disjoint(y.support) {
            return None;
        }
        let index = FaceIndex::within(&k.faces(), x.support.union(y.support));
        let cochain = product_cochain(&self.field, x, y, &index);
        Some((index, cochain))
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.classes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (&self.classes[i], &self.classes[j]);
                if x.support.is_disjoint(y.support) && self.supports.contains_key(&x.support.union(y.support)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn compute_products(&mut self) {
        let pairs = self.pairs();
        let products: Vec<_> = pairs
            .par_iter()
            .filter_map(|&(i, j)| self.product_coordinates(i, j).map(|c| (i, j, c)))
            .collect();
        self.products = products;
    }

    /// The first nonzero product in table order.
    fn first_nonzero(&self) -> Option<(usize, usize, Vec<F::Elem>)> {
        self.pairs()
            .into_par_iter()
            .filter_map(|(i, j)| self.product_coordinates(i, j).map(|c| (i, j, c)))
            .find_first(|_| true)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&[F::Elem]> {
        self.products
            .binary_search_by(|(a, b, _)| (*a, *b).cmp(&(i, j)))
            .ok()
            .map(|p| self.products[p].2.as_slice())
    }

    pub fn report(&self) -> ProductReport {
        ProductReport {
            field: self.field.coefficients(),
            grading: self.grading,
            classes: self.classes.iter().map(TorClass::summary).collect(),
            nonzero_products: self
                .products
                .iter()
                .map(|(i, j, c)| (*i, *j, c.iter().map(|v| self.field.render(v)).collect()))
                .collect(),
        }
    }
}

fn check_cap(k: &SimplicialComplex) -> Result<()> {
    if k.m() > DEFAULT_MAX_VERTICES {
        return Err(Error::TooManyVertices { m: k.m(), cap: DEFAULT_MAX_VERTICES });
    }
    Ok(())
}

/// Full pairwise product table of positive-degree classes of `H*(Z_K; F)`.
pub fn product_table<F: Field>(k: &SimplicialComplex, field: F) -> Result<ProductTable<F>> {
    check_cap(k)?;
    let mut t = ProductTable::classes_of(k, field, Grading::Complex);
    t.compute_products();
    Ok(t)
}

/// Product table of `H*(R_K; F_2)`.
pub fn real_product_table(k: &SimplicialComplex) -> Result<ProductTable<PrimeField>> {
    check_cap(k)?;
    let mut t = ProductTable::classes_of(k, PrimeField::new(2), Grading::Real);
    t.compute_products();
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GolodStatus {
    NonGolod,
    /// All products vanish over every tested field; Massey products are not
    /// examined.
    CupGolod,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodWitness {
    pub field: Coefficients,
    pub left: ClassSummary,
    pub right: ClassSummary,
    pub product_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodVerdict {
    pub status: GolodStatus,
    pub witness: Option<GolodWitness>,
    pub fields_tested: Vec<Coefficients>,
    /// Primes dividing torsion in some `H̃_*(K_I; Z)`.
    pub torsion_primes: Vec<u64>,
    pub note: String,
}

pub const CUP_LEVEL_CAVEAT: &str = "cup products only; higher Massey products are not examined";

pub fn is_cup_golod(k: &SimplicialComplex, fields: &[Coefficients]) -> GolodVerdict {
    is_cup_golod_capped(k, fields, DEFAULT_MAX_VERTICES)
}

/// Searches every field in `fields`, plus every torsion prime of the integral
/// Hochster table, for a nonzero product. Never fails: inputs beyond `cap`
/// or coefficient errors give `Unknown`.
pub fn is_cup_golod_capped(k: &SimplicialComplex, fields: &[Coefficients], cap: usize) -> GolodVerdict {
    let unknown = |note: String| GolodVerdict {
        status: GolodStatus::Unknown,
        witness: None,
        fields_tested: Vec::new(),
        torsion_primes: Vec::new(),
        note,
    };
    if k.m() > cap.min(DEFAULT_MAX_VERTICES) {
        return unknown(format!("{} vertices exceed the cap of {}", k.m(), cap.min(DEFAULT_MAX_VERTICES)));
    }
    let torsion_primes = match hochster_table_capped(k, Coefficients::Int, cap) {
        Ok(t) => t.torsion_primes(),
        Err(e) => return unknown(e.to_string()),
    };
    let mut tested: Vec<Coefficients> = Vec::new();
    for c in fields.iter().copied().chain(torsion_primes.iter().map(|&p| Coefficients::Prime(p))) {
        if c.is_field() && !tested.contains(&c) {
            tested.push(c);
        }
    }
    for &c in &tested {
        let kind = c.field().expect("only fields are tested");
        let hit = with_field!(kind, f => {
            let t = ProductTable::classes_of(k, f, Grading::Complex);
            t.first_nonzero().map(|(i, j, _)| (t.classes[i].summary(), t.classes[j].summary()))
        });
        if let Some((left, right)) = hit {
            return GolodVerdict {
                status: GolodStatus::NonGolod,
                witness: Some(GolodWitness { field: c, left, right, product_degree: left.degree + right.degree }),
                fields_tested: tested,
                torsion_primes,
                note: "nonzero product found".to_string(),
            };
        }
    }
    GolodVerdict {
        status: GolodStatus::CupGolod,
        witness: None,
        fields_tested: tested,
        torsion_primes,
        note: CUP_LEVEL_CAVEAT.to_string(),
    }
}
