//! Predicates built on the ring: minimal non-Golodness, the cone/core
//! splitting conditions, Gorenstein*, recognition of connected sums of
//! sphere products, and checks of the classification theorems for
//! minimally non-Golod complexes.

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cellular::rk_chain_complex_capped;
use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::hochster::{duality_check, hochster_table_capped, DualityReport, HochsterTable};
use crate::linalg::field::{EchelonSpan, Field, PrimeField, Rationals};
use crate::linalg::homology::{reduced_homology, HomologyProfile};
use crate::linalg::Coefficients;
use crate::product::{
    is_cup_golod_capped, product_table, real_product_table, GolodStatus, GolodVerdict, GolodWitness, ProductTable,
    CUP_LEVEL_CAVEAT,
};

/// Vertex cap and coefficient fields used by the predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub fields: Vec<Coefficients>,
    pub max_vertices: usize,
}

pub const DEFAULT_CLASSIFY_MAX_VERTICES: usize = 20;

impl Default for Config {
    fn default() -> Self {
        Config { fields: Coefficients::default_fields(), max_vertices: DEFAULT_CLASSIFY_MAX_VERTICES }
    }
}

impl Config {
    fn check(&self, k: &SimplicialComplex) -> Result<()> {
        if k.m() > self.max_vertices {
            return Err(Error::TooManyVertices { m: k.m(), cap: self.max_vertices });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Minimally non-Golod

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionVerdict {
    pub vertex: usize,
    pub status: GolodStatus,
    /// Supports are in the labels of `K`.
    pub witness: Option<GolodWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MngVerdict {
    pub mng: bool,
    pub golod: GolodVerdict,
    pub deletions: Vec<DeletionVerdict>,
    /// First vertex whose deletion is not cup-Golod.
    pub witness_vertex: Option<usize>,
    pub note: String,
}

pub fn is_minimally_non_golod(k: &SimplicialComplex) -> Result<MngVerdict> {
    is_minimally_non_golod_with(k, &Config::default())
}

pub fn is_minimally_non_golod_with(k: &SimplicialComplex, cfg: &Config) -> Result<MngVerdict> {
    cfg.check(k)?;
    let golod = is_cup_golod_capped(k, &cfg.fields, cfg.max_vertices);
    let deletions: Vec<DeletionVerdict> = (1..=k.m())
        .into_par_iter()
        .map(|v| {
            let del = k.delete_vertex(v).expect("vertex is in range");
            let verdict = is_cup_golod_capped(&del.complex, &cfg.fields, cfg.max_vertices);
            let witness = verdict.witness.map(|mut w| {
                w.left.support = del.to_parent(w.left.support);
                w.right.support = del.to_parent(w.right.support);
                w
            });
            DeletionVerdict { vertex: v, status: verdict.status, witness }
        })
        .collect();
    let witness_vertex = deletions.iter().find(|d| d.status != GolodStatus::CupGolod).map(|d| d.vertex);
    let mng = golod.status == GolodStatus::NonGolod && witness_vertex.is_none();
    Ok(MngVerdict { mng, golod, deletions, witness_vertex, note: CUP_LEVEL_CAVEAT.to_string() })
}

// ---------------------------------------------------------------------------
// Cone/core splitting conditions

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TfaeReport {
    pub subset: VertexSubset,
    /// `core(K) ⊆ K_I`.
    pub core_within: bool,
    /// `star_K(v) = K` for every `v ∉ I`.
    pub stars_full: bool,
    /// `link_K(v) = K − {v}` for every `v ∉ I`.
    pub links_are_deletions: bool,
    /// `K = Δ^{m-|I|-1} ∗ K_I`.
    pub join_splitting: bool,
    pub agree: bool,
    /// Total Betti numbers of `Z_{K_I}` and `Z_K` over `Q` coincide.
    pub betti_match: bool,
}

pub fn tfae_check(k: &SimplicialComplex, subset: VertexSubset) -> Result<TfaeReport> {
    let table = hochster_table_capped(k, Coefficients::Rat, k.m())?;
    tfae_check_with_table(k, subset, &table)
}

/// As [`tfae_check`], reusing a rational Hochster table of `K`.
pub fn tfae_check_with_table(k: &SimplicialComplex, subset: VertexSubset, table: &HochsterTable) -> Result<TfaeReport> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !subset.is_subset(k.vertex_set()) {
        let label = subset.difference(k.vertex_set()).iter().next().unwrap_or(0);
        return Err(Error::OutOfRange { label, m: k.m() });
    }
    let outside = k.vertex_set().difference(subset);

    let core = k.core();
    let core_within = core.core.support().is_subset(subset);
    let stars_full = outside.iter().all(|v| k.is_cone_vertex(v).expect("vertex is in range"));
    let links_are_deletions = outside.iter().all(|v| {
        let lk = k.link(VertexSubset::singleton(v));
        let del = k.delete_vertex(v).expect("vertex is in range");
        lk.is_ok_and(|lk| lk.same_faces(&del))
    });
    let sub = k.full_subcomplex(subset)?;
    let joined: Vec<VertexSubset> = sub.facets_in_parent().into_iter().map(|f| f.union(outside)).collect();
    let join_splitting = SimplicialComplex::from_facet_sets(k.m(), joined).is_ok_and(|j| &j == k);

    let agree = core_within == stars_full && stars_full == links_are_deletions && links_are_deletions == join_splitting;
    let betti_match = table.betti_within(subset) == table.betti();
    Ok(TfaeReport { subset, core_within, stars_full, links_are_deletions, join_splitting, agree, betti_match })
}

// ---------------------------------------------------------------------------
// Gorenstein*

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub is_core: bool,
    /// A face whose link is not an integral homology sphere of the right
    /// dimension, with that link's reduced integral homology.
    pub failing_face: Option<VertexSubset>,
    pub failing_homology: Option<HomologyProfile>,
}

/// `K = core(K)` and `link_K(σ)` has the reduced integral homology of
/// `S^{dim K − |σ|}` for every face `σ`, including `∅`.
pub fn is_gorenstein_star(k: &SimplicialComplex) -> Result<GorensteinVerdict> {
    let is_core = k.core().simplex_vertices.is_empty();
    let dim = k.dim();
    let faces = k.faces();
    let failures: Vec<Option<(VertexSubset, HomologyProfile)>> = faces
        .par_iter()
        .map(|&sigma| {
            let lk = k.link(sigma)?;
            let h = reduced_homology(&lk.complex, Coefficients::Int)?;
            Ok((!h.is_sphere_of_dim(dim - sigma.len() as isize)).then_some((sigma, h)))
        })
        .collect::<Result<_>>()?;
    let failure = failures.into_iter().flatten().next();
    let gorenstein = is_core && failure.is_none();
    let (failing_face, failing_homology) = failure.unzip();
    Ok(GorensteinVerdict { gorenstein, is_core, failing_face, failing_homology })
}

// ---------------------------------------------------------------------------
// Connected sums of sphere products

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConnectedSum {
    Sphere { dim: usize },
    ConnectedSum { pairs: Vec<(usize, usize)> },
    NoMatch { reason: String },
}

impl ConnectedSum {
    pub fn is_connected_sum(&self) -> bool {
        matches!(self, ConnectedSum::ConnectedSum { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub pattern: ConnectedSum,
    pub betti: Vec<usize>,
    pub top_degree: usize,
    /// Rank of the pairing of middle classes onto the top class.
    pub gram_rank: Option<usize>,
}

fn no_match(reason: impl Into<String>, betti: &[usize], gram_rank: Option<usize>) -> Recognition {
    Recognition {
        pattern: ConnectedSum::NoMatch { reason: reason.into() },
        betti: betti.to_vec(),
        top_degree: betti.len().saturating_sub(1),
        gram_rank,
    }
}

/// Ring-level recognition. `min_sphere` is the smallest admissible sphere
/// dimension of a factor; `hyperbolic` decides whether the pairing restricted
/// to the middle degree `N/2` is hyperbolic.
fn recognize<F: Field>(
    betti: &[usize],
    products: &ProductTable<F>,
    min_sphere: usize,
    hyperbolic: impl Fn(&[Vec<F::Elem>], usize) -> bool,
) -> Recognition {
    let n = betti.len().saturating_sub(1);
    if n == 0 {
        return no_match("no cohomology in positive degrees", betti, None);
    }
    if betti[0] != 1 || betti[n] != 1 {
        return no_match(format!("b_0 = {}, b_{n} = {}", betti[0], betti[n]), betti, None);
    }
    let middle: usize = betti[1..n].iter().sum();
    if middle == 0 {
        return Recognition { pattern: ConnectedSum::Sphere { dim: n }, betti: betti.to_vec(), top_degree: n, gram_rank: None };
    }
    if let Some(k) = (1..n).find(|&k| betti[k] != 0 && (k < min_sphere || k > n - min_sphere)) {
        return no_match(format!("b_{k} = {} lies outside degrees {min_sphere}..={}", betti[k], n - min_sphere), betti, None);
    }
    if !middle.is_multiple_of(2) {
        return no_match(format!("middle Betti numbers sum to {middle}, which is odd"), betti, None);
    }
    let top = products.degree_range(n);
    let mid_lo = products.degree_range(1).start;
    let mid_hi = products.degree_range(n - 1).end;
    if top.len() != 1 || mid_hi - mid_lo != middle {
        return no_match("product table does not match the Betti numbers", betti, None);
    }
    let f = &products.field;
    let size = mid_hi - mid_lo;
    let mut gram = vec![vec![f.zero(); size]; size];
    for (i, j, coords) in &products.products {
        let (di, dj) = (products.classes[*i].degree, products.classes[*j].degree);
        if di == 0 || dj == 0 || di >= n || dj >= n {
            continue;
        }
        if di + dj != n {
            return no_match(format!("nonzero product of degrees {di} and {dj} below the top class"), betti, None);
        }
        gram[i - mid_lo][j - mid_lo] = coords[0].clone();
    }
    let mut span = EchelonSpan::new(f.clone(), size);
    for row in &gram {
        span.insert(row);
    }
    let rank = span.rank();
    if rank != size {
        return no_match(format!("pairing onto the top class has rank {rank}, not {size}"), betti, Some(rank));
    }
    if n.is_multiple_of(2) {
        let mid = products.degree_range(n / 2);
        let block: Vec<Vec<F::Elem>> = gram[mid.start - mid_lo..mid.end - mid_lo]
            .iter()
            .map(|row| row[mid.start - mid_lo..mid.end - mid_lo].to_vec())
            .collect();
        if !hyperbolic(&block, n / 2) {
            return no_match(format!("pairing in degree {} is not hyperbolic", n / 2), betti, Some(rank));
        }
    }
    let mut pairs = Vec::new();
    for k in 1..=n / 2 {
        let count = if 2 * k == n { betti[k] / 2 } else { betti[k] };
        pairs.extend(std::iter::repeat_n((k, n - k), count));
    }
    Recognition { pattern: ConnectedSum::ConnectedSum { pairs }, betti: betti.to_vec(), top_degree: n, gram_rank: Some(rank) }
}

/// Signature of a symmetric rational matrix, by congruence diagonalization.
pub fn signature(matrix: &[Vec<BigRational>]) -> i64 {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue;
            }
        }
        let p = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &p;
            for c in 0..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in 0..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        sig += if p.is_positive() { 1 } else { -1 };
    }
    sig
}

fn rational_hyperbolic(block: &[Vec<BigRational>], half: usize) -> bool {
    // antisymmetric forms are hyperbolic once nondegenerate
    half % 2 == 1 || signature(block) == 0
}

/// Over `F_2` a nondegenerate form is hyperbolic iff it is alternating.
fn binary_hyperbolic(block: &[Vec<u64>], _half: usize) -> bool {
    block.iter().enumerate().all(|(i, row)| row[i] == 0)
}

/// Recognizes `H*(Z_K; Q)` as the cohomology ring of a sphere or of a
/// connected sum of products of two spheres, each of dimension at least 3.
pub fn recognize_connected_sum(table: &HochsterTable, products: &ProductTable<Rationals>) -> Result<Recognition> {
    if table.coeffs() != Coefficients::Rat {
        return Err(Error::FieldMismatch(table.coeffs().to_string(), "Q".to_string()));
    }
    Ok(recognize(&table.betti(), products, 3, rational_hyperbolic))
}

/// The same recognition for `H*(R_K; F_2)`, where factors may be circles.
pub fn recognize_real_connected_sum(betti: &[usize], products: &ProductTable<PrimeField>) -> Recognition {
    recognize(betti, products, 1, binary_hyperbolic)
}

// ---------------------------------------------------------------------------
// Shared analysis state

/// Lazily computed invariants of one complex, shared by the harnesses and the
/// full report.
pub struct Analysis {
    k: SimplicialComplex,
    cfg: Config,
    table: OnceLock<Result<HochsterTable>>,
    products: OnceLock<Result<ProductTable<Rationals>>>,
    recognition: OnceLock<Result<Recognition>>,
    gorenstein: OnceLock<Result<GorensteinVerdict>>,
    mng: OnceLock<Result<MngVerdict>>,
    core: OnceLock<Option<Box<Analysis>>>,
}

fn cached<T>(cell: &OnceLock<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl Analysis {
    pub fn new(k: &SimplicialComplex, cfg: &Config) -> Result<Self> {
        cfg.check(k)?;
        Ok(Analysis {
            k: k.clone(),
            cfg: cfg.clone(),
            table: OnceLock::new(),
            products: OnceLock::new(),
            recognition: OnceLock::new(),
            gorenstein: OnceLock::new(),
            mng: OnceLock::new(),
            core: OnceLock::new(),
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.k
    }

    pub fn hochster(&self) -> Result<&HochsterTable> {
        cached(&self.table, || hochster_table_capped(&self.k, Coefficients::Rat, self.cfg.max_vertices))
    }

    pub fn products(&self) -> Result<&ProductTable<Rationals>> {
        cached(&self.products, || product_table(&self.k, Rationals))
    }

    pub fn recognition(&self) -> Result<&Recognition> {
        cached(&self.recognition, || recognize_connected_sum(self.hochster()?, self.products()?))
    }

    pub fn gorenstein(&self) -> Result<&GorensteinVerdict> {
        cached(&self.gorenstein, || is_gorenstein_star(&self.k))
    }

    pub fn mng(&self) -> Result<&MngVerdict> {
        cached(&self.mng, || is_minimally_non_golod_with(&self.k, &self.cfg))
    }

    /// Analysis of `core(K)` in its own labels; `self` when `K` has no cone
    /// vertex.
    pub fn core(&self) -> &Analysis {
        let boxed = self.core.get_or_init(|| {
            let c = self.k.core();
            (!c.simplex_vertices.is_empty())
                .then(|| Box::new(Analysis::new(&c.core.complex, &self.cfg).expect("core is no larger than K")))
        });
        boxed.as_deref().unwrap_or(self)
    }
}

// ---------------------------------------------------------------------------
// Theorem harnesses

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    HypothesisNotMet,
    Confirmed,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub theorem: String,
    pub outcome: Outcome,
    /// What the hypothesis was decided with.
    pub level: String,
    pub detail: String,
    /// `d` in `K = Δ^d ∗ L`, when the conclusion concerns the core.
    pub simplex_dim: Option<isize>,
}

const RING_LEVEL: &str = "cohomology ring of Z_K over Q; Gorenstein* links over Z";
const CORE_LEVEL: &str = "cohomology ring of Z_K over Q";
const REAL_LEVEL: &str = "integral Betti numbers of R_K from the cellular model, Poincare symmetry, \
     and the cohomology ring of R_K over F_2; homotopy type not decided";

fn pattern_text(r: &Recognition) -> String {
    match &r.pattern {
        ConnectedSum::Sphere { dim } => format!("sphere of dimension {dim}"),
        ConnectedSum::ConnectedSum { pairs } => format!("connected sum of {} sphere products", pairs.len()),
        ConnectedSum::NoMatch { reason } => format!("no match: {reason}"),
    }
}

/// If `Z_K` is a closed manifold (`K` Gorenstein*) whose cohomology ring is
/// that of a connected sum of sphere products, `K` is minimally non-Golod.
pub fn verify_theorem_1_1(k: &SimplicialComplex) -> Result<HarnessReport> {
    verify_theorem_1_1_in(&Analysis::new(k, &Config::default())?)
}

pub fn verify_theorem_1_1_in(a: &Analysis) -> Result<HarnessReport> {
    let r = a.recognition()?;
    let g = a.gorenstein()?;
    let report = |outcome, detail: String| HarnessReport {
        theorem: "1.1".to_string(),
        outcome,
        level: RING_LEVEL.to_string(),
        detail,
        simplex_dim: None,
    };
    if !r.pattern.is_connected_sum() {
        return Ok(report(Outcome::HypothesisNotMet, pattern_text(r)));
    }
    if !g.gorenstein {
        let why = g.failing_face.map_or("K has a cone vertex".to_string(), |f| format!("link of {f} is not a homology sphere"));
        return Ok(report(Outcome::HypothesisNotMet, format!("not Gorenstein*: {why}")));
    }
    let m = a.mng()?;
    Ok(if m.mng {
        report(Outcome::Confirmed, "minimally non-Golod".to_string())
    } else {
        report(Outcome::Violation, format!("not minimally non-Golod (vertex {:?})", m.witness_vertex))
    })
}

/// If `H*(Z_K)` is the ring of a connected sum of sphere products then
/// `K = Δ^d ∗ L` with `L` Gorenstein* and minimally non-Golod.
pub fn verify_theorem_1_2(k: &SimplicialComplex) -> Result<HarnessReport> {
    verify_theorem_1_2_in(&Analysis::new(k, &Config::default())?)
}

pub fn verify_theorem_1_2_in(a: &Analysis) -> Result<HarnessReport> {
    let r = a.recognition()?;
    let d = a.complex().core().simplex_dim();
    let report = |outcome, detail: String| HarnessReport {
        theorem: "1.2".to_string(),
        outcome,
        level: CORE_LEVEL.to_string(),
        detail,
        simplex_dim: Some(d),
    };
    if !r.pattern.is_connected_sum() {
        return Ok(report(Outcome::HypothesisNotMet, pattern_text(r)));
    }
    let core = a.core();
    let g = core.gorenstein()?;
    let m = core.mng()?;
    Ok(match (g.gorenstein, m.mng) {
        (true, true) => report(Outcome::Confirmed, format!("core is Gorenstein* and minimally non-Golod, d = {d}")),
        (false, _) => report(Outcome::Violation, "core is not Gorenstein*".to_string()),
        (true, false) => report(Outcome::Violation, "core is not minimally non-Golod".to_string()),
    })
}

/// Homology-level stand-in for "`R_K` is a connected sum of sphere
/// products": integral Betti numbers of `R_K` torsion-free, Poincaré
/// symmetric, `b_0 = b_N = 1` with at least one pair of middle classes, and
/// the `F_2` cohomology ring of the same shape.
pub fn verify_theorem_4_2(k: &SimplicialComplex) -> Result<HarnessReport> {
    verify_theorem_4_2_in(&Analysis::new(k, &Config::default())?)
}

pub fn verify_theorem_4_2_in(a: &Analysis) -> Result<HarnessReport> {
    let k = a.complex();
    let d = k.core().simplex_dim();
    let report = |outcome, detail: String| HarnessReport {
        theorem: "4.2".to_string(),
        outcome,
        level: REAL_LEVEL.to_string(),
        detail,
        simplex_dim: Some(d),
    };
    let rk = rk_chain_complex_capped(k, a.cfg.max_vertices)?.betti(Coefficients::Int)?;
    let b = &rk.ranks;
    let n = b.len().saturating_sub(1);
    if rk.has_torsion() {
        return Ok(report(Outcome::HypothesisNotMet, "H_*(R_K; Z) has torsion".to_string()));
    }
    if n == 0 || b[0] != 1 || b[n] != 1 || b[1..n].iter().sum::<usize>() < 2 {
        return Ok(report(Outcome::HypothesisNotMet, format!("Betti numbers {b:?} are not those of a connected sum")));
    }
    if (0..=n).any(|i| b[i] != b[n - i]) {
        return Ok(report(Outcome::HypothesisNotMet, format!("Betti numbers {b:?} are not Poincare symmetric")));
    }
    let ring = real_product_table(k)?;
    let r = recognize_real_connected_sum(b, &ring);
    if !r.pattern.is_connected_sum() {
        return Ok(report(Outcome::HypothesisNotMet, format!("F_2 ring: {}", pattern_text(&r))));
    }
    let m = a.core().mng()?;
    Ok(if m.mng {
        report(Outcome::Confirmed, format!("core is minimally non-Golod, d = {d}"))
    } else {
        report(Outcome::Violation, "core is not minimally non-Golod".to_string())
    })
}

// ---------------------------------------------------------------------------
// Full report

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreReport {
    pub simplex_vertices: VertexSubset,
    pub simplex_dim: isize,
    /// Facets of the core in the labels of `K`.
    pub core_facets: Vec<VertexSubset>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub vertices: usize,
    pub betti: Vec<usize>,
    pub golod_status: GolodVerdict,
    pub mng: MngVerdict,
    pub core: CoreReport,
    pub gorenstein_star: GorensteinVerdict,
    pub connected_sum: Recognition,
    /// Poincaré duality of `H*(Z_{core K})`.
    pub core_duality: DualityReport,
    pub theorem_checks: Vec<HarnessReport>,
}

impl ClassificationReport {
    /// The report's internal consistency conditions.
    pub fn invariants_hold(&self) -> bool {
        let mng_ok = !self.mng.mng || self.golod_status.status == GolodStatus::NonGolod;
        let cs_ok = !self.connected_sum.pattern.is_connected_sum() || self.core_duality.dual;
        let no_violation = self.theorem_checks.iter().all(|h| h.outcome != Outcome::Violation);
        mng_ok && cs_ok && no_violation
    }
}

pub fn analyze(k: &SimplicialComplex) -> Result<ClassificationReport> {
    analyze_with(k, &Config::default())
}

pub fn analyze_with(k: &SimplicialComplex, cfg: &Config) -> Result<ClassificationReport> {
    let a = Analysis::new(k, cfg)?;
    let c = k.core();
    let core_table = a.core().hochster()?;
    Ok(ClassificationReport {
        vertices: k.m(),
        betti: a.hochster()?.betti(),
        golod_status: a.mng()?.golod.clone(),
        mng: a.mng()?.clone(),
        core: CoreReport {
            simplex_vertices: c.simplex_vertices,
            simplex_dim: c.simplex_dim(),
            core_facets: c.core.facets_in_parent(),
        },
        gorenstein_star: a.gorenstein()?.clone(),
        connected_sum: a.recognition()?.clone(),
        core_duality: duality_check(core_table),
        theorem_checks: vec![verify_theorem_1_1_in(&a)?, verify_theorem_1_2_in(&a)?, verify_theorem_4_2_in(&a)?],
    })
}
