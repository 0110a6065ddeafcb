//! Finite abstract simplicial complexes on vertex labels `1..=m`.
//!
//! Faces are bitmasks (bit `i - 1` is vertex `i`). A complex is stored by its
//! canonical facet list; the full face family is enumerated on demand.

pub mod generate;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a bitmask face can represent.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSubset(u64);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSubset(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_VERTICES);
        if m == MAX_VERTICES {
            VertexSubset(u64::MAX)
        } else {
            VertexSubset((1u64 << m) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&label));
        VertexSubset(1u64 << (label - 1))
    }

    /// Builds a subset from 1-based labels, checking each against `1..=m`.
    pub fn from_labels(labels: &[usize], m: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &label in labels {
            if label == 0 || label > m || label > MAX_VERTICES {
                return Err(Error::OutOfRange { label, m });
            }
            mask |= 1u64 << (label - 1);
        }
        Ok(VertexSubset(mask))
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(bit + 1)
        })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_VERTICES).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSubset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSubset) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSubset) -> Self {
        VertexSubset(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSubset) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    pub fn with(self, label: usize) -> Self {
        self.union(VertexSubset::singleton(label))
    }

    pub fn without(self, label: usize) -> Self {
        self.difference(VertexSubset::singleton(label))
    }

    /// Number of members strictly smaller than `label`.
    pub fn rank_of(self, label: usize) -> usize {
        let below = if label <= 1 { 0 } else { (1u64 << (label - 1)) - 1 };
        (self.0 & below).count_ones() as usize
    }

    /// Largest label, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Lexicographic comparison of the ascending label sequences.
    pub fn lex_cmp(self, other: VertexSubset) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        // The set holding the smallest differing label wins, unless the other
        // set has already run out of labels at that position.
        if self.0 & low != 0 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Every subset of `self`, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VertexSubset> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(VertexSubset(cur))
        })
    }

    /// Maps each label `l` to `labels[l - 1]`.
    pub fn relabel(self, labels: &[usize]) -> VertexSubset {
        let mut mask = 0u64;
        for l in self.iter() {
            mask |= 1u64 << (labels[l - 1] - 1);
        }
        VertexSubset(mask)
    }

    /// Renumbers the members of `self` by their rank inside `support`.
    pub fn compress(self, support: VertexSubset) -> VertexSubset {
        let mut mask = 0u64;
        for l in self.iter() {
            debug_assert!(support.contains(l));
            mask |= 1u64 << support.rank_of(l);
        }
        VertexSubset(mask)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn sort_lex(faces: &mut [VertexSubset]) {
    faces.sort_by(|a, b| a.lex_cmp(*b));
}

/// Sorts by dimension, then lexicographically.
pub(crate) fn sort_faces(faces: &mut [VertexSubset]) {
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)));
}

/// Keeps the inclusion-maximal sets, deduplicated and in lex order.
fn maximal_sets(mut sets: Vec<VertexSubset>) -> Vec<VertexSubset> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(*b)));
    sets.dedup();
    let mut kept: Vec<VertexSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    sort_lex(&mut kept);
    kept
}

/// A finite simplicial complex on `[m]` without ghost vertices.
///
/// The empty complex (`m = 0`) has the single face `∅`, stored as the facet
/// list `[∅]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<VertexSubset>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(m={}; ", self.m)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

impl SimplicialComplex {
    /// Builds a complex from facet label lists.
    pub fn from_facets<F: AsRef<[usize]>>(m: usize, facets: &[F]) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, cap: MAX_VERTICES });
        }
        let masks = facets
            .iter()
            .map(|f| VertexSubset::from_labels(f.as_ref(), m))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facet_sets(m, masks)
    }

    pub fn from_facet_sets(m: usize, facets: Vec<VertexSubset>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, cap: MAX_VERTICES });
        }
        let full = VertexSubset::full(m);
        let mut covered = VertexSubset::EMPTY;
        for f in &facets {
            if !f.is_subset(full) {
                let label = f.difference(full).iter().next().unwrap_or(m + 1);
                return Err(Error::OutOfRange { label, m });
            }
            covered = covered.union(*f);
        }
        if let Some(ghost) = full.difference(covered).iter().next() {
            return Err(Error::GhostVertex(ghost));
        }
        Ok(Self::canonical(m, facets))
    }

    /// Canonicalizes without validation; callers guarantee no ghosts.
    pub(crate) fn canonical(m: usize, facets: Vec<VertexSubset>) -> Self {
        let mut facets = maximal_sets(facets);
        if facets.is_empty() {
            facets.push(VertexSubset::EMPTY);
        }
        SimplicialComplex { m, facets }
    }

    /// The empty complex `Δ^{-1}`.
    pub fn void_simplex() -> Self {
        SimplicialComplex { m: 0, facets: vec![VertexSubset::EMPTY] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_set(&self) -> VertexSubset {
        VertexSubset::full(self.m)
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSubset] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.labels())
            .collect()
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains(&self, face: VertexSubset) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// All faces including `∅`, ordered by dimension then lexicographically.
    pub fn faces(&self) -> Vec<VertexSubset> {
        let mut seen: HashSet<VertexSubset> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut faces: Vec<_> = seen.into_iter().collect();
        sort_faces(&mut faces);
        faces
    }

    /// Number of faces of each dimension `-1, 0, 1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        counts
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.m {
            Err(Error::OutOfRange { label: v, m: self.m })
        } else {
            Ok(())
        }
    }

    fn check_subset(&self, set: VertexSubset) -> Result<()> {
        let extra = set.difference(self.vertex_set());
        match extra.iter().next() {
            Some(label) => Err(Error::OutOfRange { label, m: self.m }),
            None => Ok(()),
        }
    }

    /// `star_K(v) = {σ ∈ K | σ ∪ {v} ∈ K}`, on the vertices it spans.
    pub fn star(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        let facets: Vec<_> = self.facets.iter().copied().filter(|f| f.contains(v)).collect();
        Ok(Relabeled::from_parent_facets(facets))
    }

    /// True when `star_K(v) = K`, i.e. `v` lies in every facet.
    pub fn is_cone_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.facets.iter().all(|f| f.contains(v)))
    }

    /// `link_K(σ) = {τ ∈ K | τ ∩ σ = ∅, τ ∪ σ ∈ K}`, on the vertices it spans.
    pub fn link(&self, face: VertexSubset) -> Result<Relabeled> {
        self.check_subset(face)?;
        if !self.contains(face) {
            return Err(Error::NotAFace(face.labels()));
        }
        let facets: Vec<_> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        Ok(Relabeled::from_parent_facets(facets))
    }

    /// `K − {v}`: the full subcomplex on `[m] ∖ {v}`.
    pub fn delete_vertex(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        self.full_subcomplex(self.vertex_set().without(v))
    }

    /// `K_I = {σ ∈ K | σ ⊆ I}`, relabeled onto `1..=|I|`.
    pub fn full_subcomplex(&self, subset: VertexSubset) -> Result<Relabeled> {
        self.check_subset(subset)?;
        let facets: Vec<_> = self.facets.iter().map(|f| f.intersection(subset)).collect();
        Ok(Relabeled::with_support(facets, subset))
    }

    /// Simplicial join; the vertices of `other` are shifted past `self.m()`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, cap: MAX_VERTICES });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(VertexSubset(f.0 | (g.0 << self.m)));
            }
        }
        Ok(SimplicialComplex::canonical(m, facets))
    }

    /// Splits off the cone vertices: `K = Δ^{|S|-1} ∗ core(K)`.
    pub fn core(&self) -> Core {
        let cone = self
            .facets
            .iter()
            .fold(self.vertex_set(), |acc, f| acc.intersection(*f));
        let core = self
            .full_subcomplex(self.vertex_set().difference(cone))
            .expect("complement of the cone set is within [m]");
        Core { simplex_vertices: cone, core }
    }

    /// Inclusion-minimal non-faces, in lexicographic order.
    pub fn minimal_non_faces(&self) -> Vec<VertexSubset> {
        let faces: HashSet<VertexSubset> = self.faces().into_iter().collect();
        let mut found: HashSet<VertexSubset> = HashSet::new();
        for &face in &faces {
            for v in self.vertex_set().difference(face).iter() {
                let cand = face.with(v);
                if faces.contains(&cand) || found.contains(&cand) {
                    continue;
                }
                if cand.iter().all(|u| faces.contains(&cand.without(u))) {
                    found.insert(cand);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        sort_lex(&mut out);
        out
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { vertices: self.m, facets: self.facet_labels() }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        if json.vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices { m: json.vertices, cap: MAX_VERTICES });
        }
        Self::from_facets(json.vertices, &json.facets)
    }

    /// Parses the canonical `{"vertices": m, "facets": [[...], ...]}` form.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: ComplexJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("complex serializes")
    }
}

/// Canonical on-disk form of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

/// A complex renumbered onto `1..=n`, remembering the original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub complex: SimplicialComplex,
    /// `labels[k]` is the parent label of vertex `k + 1`.
    pub labels: Vec<usize>,
}

impl Relabeled {
    fn from_parent_facets(facets: Vec<VertexSubset>) -> Self {
        let support = facets.iter().fold(VertexSubset::EMPTY, |a, f| a.union(*f));
        Self::with_support(facets, support)
    }

    fn with_support(facets: Vec<VertexSubset>, support: VertexSubset) -> Self {
        let compressed = facets.into_iter().map(|f| f.compress(support)).collect();
        Relabeled {
            complex: SimplicialComplex::canonical(support.len(), compressed),
            labels: support.labels(),
        }
    }

    pub fn support(&self) -> VertexSubset {
        self.labels.iter().fold(VertexSubset::EMPTY, |a, &l| a.with(l))
    }

    pub fn to_parent(&self, face: VertexSubset) -> VertexSubset {
        face.relabel(&self.labels)
    }

    /// Facets in parent labels, lexicographically sorted.
    pub fn facets_in_parent(&self) -> Vec<VertexSubset> {
        let mut out: Vec<_> = self.complex.facets().iter().map(|f| self.to_parent(*f)).collect();
        sort_lex(&mut out);
        out
    }

    /// Same face family as `other`, comparing in parent labels.
    pub fn same_faces_as(&self, other: &SimplicialComplex) -> bool {
        self.facets_in_parent() == other.facets()
    }

    pub fn same_faces(&self, other: &Relabeled) -> bool {
        self.facets_in_parent() == other.facets_in_parent()
    }
}

/// Result of splitting `K = Δ^{|S|-1} ∗ core(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    /// Vertices whose star is all of `K`.
    pub simplex_vertices: VertexSubset,
    pub core: Relabeled,
}

impl Core {
    /// Dimension `d` of the split-off simplex (`-1` when there is none).
    pub fn simplex_dim(&self) -> isize {
        self.simplex_vertices.len() as isize - 1
    }
}
