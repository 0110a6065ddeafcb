//! Named families of simplicial complexes with fixed labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `simplex n` | one facet `{1..n+1}`; `n = -1` is the empty complex |
//! | `boundary-simplex n` | all `n`-subsets of `{1..n+1}` |
//! | `polygon m` | edges `{i, i+1}` and `{1, m}` |
//! | `path n` | edges `{i, i+1}` on `n` vertices |
//! | `points m` | `m` isolated vertices |
//! | `stacked-sphere d k` | `∂Δ^{d+1}`, then `k` stellar subdivisions of the lex-least facet; the `j`-th new vertex is `d + 2 + j` |
//! | `cone <family>` | apex is the last vertex |
//! | `join <family> <family>` | second factor shifted past the first |

use std::fmt;

use super::{SimplicialComplex, VertexSubset, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Simplex(isize),
    BoundarySimplex(usize),
    Polygon(usize),
    Path(usize),
    DisjointPoints(usize),
    StackedSphere { dim: usize, steps: usize },
    Cone(Box<Family>),
    Join(Box<Family>, Box<Family>),
}

impl Family {
    /// Parses a whitespace-token generator spec such as `cone polygon 4`.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<Family> {
        let tokens: Vec<&str> = tokens.iter().map(|t| t.as_ref()).collect();
        let (family, rest) = parse_prefix(&tokens)?;
        if !rest.is_empty() {
            return Err(Error::BadParams(format!("trailing tokens: {}", rest.join(" "))));
        }
        Ok(family)
    }

    pub fn parse_str(spec: &str) -> Result<Family> {
        let tokens: Vec<&str> = spec.split_whitespace().collect();
        Self::parse(&tokens)
    }

    pub fn build(&self) -> Result<SimplicialComplex> {
        match self {
            Family::Simplex(n) => simplex(*n),
            Family::BoundarySimplex(n) => boundary_simplex(*n),
            Family::Polygon(m) => polygon(*m),
            Family::Path(n) => path(*n),
            Family::DisjointPoints(m) => disjoint_points(*m),
            Family::StackedSphere { dim, steps } => stacked_sphere(*dim, *steps),
            Family::Cone(inner) => cone(&inner.build()?),
            Family::Join(a, b) => a.build()?.join(&b.build()?),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Simplex(n) => write!(f, "simplex {n}"),
            Family::BoundarySimplex(n) => write!(f, "boundary-simplex {n}"),
            Family::Polygon(m) => write!(f, "polygon {m}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::DisjointPoints(m) => write!(f, "points {m}"),
            Family::StackedSphere { dim, steps } => write!(f, "stacked-sphere {dim} {steps}"),
            Family::Cone(inner) => write!(f, "cone {inner}"),
            Family::Join(a, b) => write!(f, "join {a} {b}"),
        }
    }
}

fn parse_num<T: std::str::FromStr>(tokens: &[&str], what: &str) -> Result<T> {
    let tok = tokens
        .first()
        .ok_or_else(|| Error::BadParams(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::BadParams(format!("{what}: cannot parse {tok:?}")))
}

fn parse_prefix<'a, 'b>(tokens: &'a [&'b str]) -> Result<(Family, &'a [&'b str])> {
    let (head, rest) = tokens
        .split_first()
        .ok_or_else(|| Error::BadParams("empty generator spec".into()))?;
    let name = head.to_ascii_lowercase().replace('_', "-");
    Ok(match name.as_str() {
        "simplex" => (Family::Simplex(parse_num(rest, "simplex dimension")?), &rest[1..]),
        "boundary-simplex" => (
            Family::BoundarySimplex(parse_num(rest, "simplex dimension")?),
            &rest[1..],
        ),
        "polygon" => (Family::Polygon(parse_num(rest, "polygon size")?), &rest[1..]),
        "path" => (Family::Path(parse_num(rest, "path length")?), &rest[1..]),
        "points" | "disjoint-points" => (
            Family::DisjointPoints(parse_num(rest, "point count")?),
            &rest[1..],
        ),
        "stacked-sphere" => {
            let dim = parse_num(rest, "sphere dimension")?;
            let steps = parse_num(&rest[1..], "subdivision count")?;
            (Family::StackedSphere { dim, steps }, &rest[2..])
        }
        "cone" => {
            let (inner, rest) = parse_prefix(rest)?;
            (Family::Cone(Box::new(inner)), rest)
        }
        "join" => {
            let (a, rest) = parse_prefix(rest)?;
            let (b, rest) = parse_prefix(rest)?;
            (Family::Join(Box::new(a), Box::new(b)), rest)
        }
        other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
    })
}

pub fn generate(family: &Family) -> Result<SimplicialComplex> {
    family.build()
}

fn check_size(m: usize) -> Result<()> {
    if m > MAX_VERTICES {
        Err(Error::TooManyVertices { m, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// `Δ^n` on `n + 1` vertices.
pub fn simplex(n: isize) -> Result<SimplicialComplex> {
    if n < -1 {
        return Err(Error::BadParams(format!("simplex({n}) needs n >= -1")));
    }
    let m = (n + 1) as usize;
    check_size(m)?;
    Ok(SimplicialComplex::canonical(m, vec![VertexSubset::full(m)]))
}

/// `∂Δ^n` on `n + 1` vertices.
pub fn boundary_simplex(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::BadParams("boundary_simplex(n) needs n >= 1".into()));
    }
    let m = n + 1;
    check_size(m)?;
    let full = VertexSubset::full(m);
    Ok(SimplicialComplex::canonical(m, full.iter().map(|v| full.without(v)).collect()))
}

/// Boundary of an `m`-gon.
pub fn polygon(m: usize) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::BadParams(format!("polygon({m}) needs m >= 3")));
    }
    check_size(m)?;
    let mut edges: Vec<_> = (1..m)
        .map(|i| VertexSubset::singleton(i).with(i + 1))
        .collect();
    edges.push(VertexSubset::singleton(1).with(m));
    Ok(SimplicialComplex::canonical(m, edges))
}

/// Path graph on `n` vertices.
pub fn path(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::BadParams("path(n) needs n >= 1".into()));
    }
    check_size(n)?;
    if n == 1 {
        return Ok(SimplicialComplex::canonical(1, vec![VertexSubset::singleton(1)]));
    }
    let edges = (1..n).map(|i| VertexSubset::singleton(i).with(i + 1)).collect();
    Ok(SimplicialComplex::canonical(n, edges))
}

pub fn disjoint_points(m: usize) -> Result<SimplicialComplex> {
    if m < 1 {
        return Err(Error::BadParams("disjoint_points(m) needs m >= 1".into()));
    }
    check_size(m)?;
    Ok(SimplicialComplex::canonical(m, (1..=m).map(VertexSubset::singleton).collect()))
}

/// Cone with apex `m + 1`.
pub fn cone(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    k.join(&simplex(0)?)
}

/// Replaces `facet` by the cone over its boundary, with apex `m + 1`.
pub fn stellar_subdivide(k: &SimplicialComplex, facet: VertexSubset) -> Result<SimplicialComplex> {
    if !k.facets().contains(&facet) {
        return Err(Error::BadParams(format!("{facet} is not a facet")));
    }
    let apex = k.m() + 1;
    check_size(apex)?;
    let mut facets: Vec<_> = k.facets().iter().copied().filter(|f| *f != facet).collect();
    if facet.len() < 2 {
        return Err(Error::BadParams("cannot subdivide a vertex facet".into()));
    }
    facets.extend(facet.iter().map(|v| facet.without(v).with(apex)));
    Ok(SimplicialComplex::canonical(apex, facets))
}

/// Boundary of a stacked `(d+1)`-polytope with `d + 2 + steps` vertices.
pub fn stacked_sphere(dim: usize, steps: usize) -> Result<SimplicialComplex> {
    if dim < 1 {
        return Err(Error::BadParams("stacked_sphere(d, k) needs d >= 1".into()));
    }
    let mut k = boundary_simplex(dim + 1)?;
    for _ in 0..steps {
        let least = k.facets()[0];
        k = stellar_subdivide(&k, least)?;
    }
    Ok(k)
}

/// Named generator instances with at most `max_vertices` vertices.
pub fn catalog(max_vertices: usize) -> Vec<(String, SimplicialComplex)> {
    let mut specs: Vec<Family> = Vec::new();
    for n in 0..=7 {
        specs.push(Family::Simplex(n));
    }
    for n in 1..=7 {
        specs.push(Family::BoundarySimplex(n));
    }
    for m in 3..=8 {
        specs.push(Family::Polygon(m));
    }
    for n in 1..=8 {
        specs.push(Family::Path(n));
        specs.push(Family::DisjointPoints(n));
    }
    for (dim, max_steps) in [(1usize, 5usize), (2, 4), (3, 3), (4, 2)] {
        for steps in 0..=max_steps {
            specs.push(Family::StackedSphere { dim, steps });
        }
    }
    for m in 4..=7 {
        specs.push(Family::Cone(Box::new(Family::Polygon(m))));
    }
    for steps in 1..=2 {
        specs.push(Family::Cone(Box::new(Family::StackedSphere { dim: 2, steps })));
    }
    specs.push(Family::Join(Box::new(Family::Simplex(1)), Box::new(Family::Polygon(6))));
    specs.push(Family::Join(Box::new(Family::Simplex(1)), Box::new(Family::Polygon(4))));
    specs.push(Family::Join(Box::new(Family::Polygon(4)), Box::new(Family::DisjointPoints(2))));
    specs.push(Family::Join(
        Box::new(Family::DisjointPoints(2)),
        Box::new(Family::DisjointPoints(3)),
    ));
    specs.push(Family::Join(
        Box::new(Family::DisjointPoints(2)),
        Box::new(Family::Join(
            Box::new(Family::DisjointPoints(2)),
            Box::new(Family::DisjointPoints(2)),
        )),
    ));
    specs.push(Family::Cone(Box::new(Family::Path(4))));

    specs
        .into_iter()
        .filter_map(|f| {
            let k = f.build().ok()?;
            (k.m() <= max_vertices).then(|| (f.to_string(), k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(m, facets).unwrap()
    }

    #[test]
    fn basic_families() {
        assert_eq!(polygon(4).unwrap(), k(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]));
        assert_eq!(
            cone(&polygon(4).unwrap()).unwrap(),
            k(5, &[&[1, 2, 5], &[2, 3, 5], &[3, 4, 5], &[1, 4, 5]])
        );
        assert_eq!(stacked_sphere(2, 0).unwrap(), boundary_simplex(3).unwrap());
        assert_eq!(simplex(-1).unwrap(), SimplicialComplex::void_simplex());
        assert_eq!(boundary_simplex(1).unwrap(), disjoint_points(2).unwrap());
        assert_eq!(path(3).unwrap(), k(3, &[&[1, 2], &[2, 3]]));
    }

    #[test]
    fn bad_params() {
        assert!(matches!(polygon(2), Err(Error::BadParams(_))));
        assert!(matches!(simplex(-2), Err(Error::BadParams(_))));
        assert!(matches!(stacked_sphere(0, 1), Err(Error::BadParams(_))));
        assert!(matches!(Family::parse_str("polygon"), Err(Error::BadParams(_))));
        assert!(matches!(Family::parse_str("hexagon 6"), Err(Error::BadParams(_))));
        assert!(matches!(Family::parse_str("polygon 4 4"), Err(Error::BadParams(_))));
    }

    #[test]
    fn stacked_sphere_subdivides_least_facet() {
        let s = stacked_sphere(2, 1).unwrap();
        assert_eq!(
            s,
            k(5, &[&[1, 2, 5], &[1, 3, 5], &[2, 3, 5], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        let s = stacked_sphere(2, 2).unwrap();
        assert_eq!(s.m(), 6);
        assert_eq!(s.facets().len(), 8);
        // a stacked 1-sphere is a polygon
        assert_eq!(stacked_sphere(1, 2).unwrap().f_vector(), vec![1, 5, 5]);
    }

    #[test]
    fn parse_nested_specs() {
        let f = Family::parse_str("join simplex 1 cone polygon 4").unwrap();
        assert_eq!(f.to_string(), "join simplex 1 cone polygon 4");
        let built = f.build().unwrap();
        assert_eq!(built.m(), 7);
        assert_eq!(Family::parse_str("stacked_sphere 3 2").unwrap().build().unwrap().m(), 7);
    }

    #[test]
    fn catalog_respects_cap() {
        let cat = catalog(8);
        assert!(cat.len() > 40);
        assert!(cat.iter().all(|(_, k)| k.m() <= 8));
        assert!(cat.iter().any(|(name, _)| name == "polygon 8"));
    }
}
