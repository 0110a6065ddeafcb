use zkring_core::linalg::field::Field;
use zkring_core::product::{product_table, ProductTable};
use zkring_core::SimplicialComplex;

/// Counts of what a law sweep examined.
#[derive(Debug, Default, Clone, Copy)]
pub struct LawStats {
    pub pairs: usize,
    pub nonzero: usize,
    pub triples: usize,
}

fn scale<F: Field>(f: &F, c: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| f.mul(c, x)).collect()
}

fn add_into<F: Field>(f: &F, acc: &mut [F::Elem], v: &[F::Elem]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a = f.add(a, b);
    }
}

/// `(Σ_t c_t x_t) · x_other` (or `x_other · (Σ_t c_t x_t)`), with `c` the
/// coordinates over the classes of degree `deg`.
fn extend_linearly<F: Field>(
    t: &ProductTable<F>,
    c: Option<&[F::Elem]>,
    deg: usize,
    other: usize,
    on_left: bool,
) -> Vec<F::Elem> {
    let f = &t.field;
    let target = t.degree_range(deg + t.classes[other].degree);
    let mut acc = vec![f.zero(); target.len()];
    let Some(c) = c else { return acc };
    let src = t.degree_range(deg);
    for (p, cp) in c.iter().enumerate() {
        if f.is_zero(cp) {
            continue;
        }
        let q = src.start + p;
        let prod = if on_left { t.get(q, other) } else { t.get(other, q) };
        if let Some(v) = prod {
            add_into(f, &mut acc, &scale(f, cp, v));
        }
    }
    acc
}

/// Graded commutativity, associativity on pairwise-disjoint triples, cocycle
/// closure and degree additivity of every product in the table of `k`.
pub fn check_product_laws<F: Field>(k: &SimplicialComplex, field: F) -> Result<LawStats, String> {
    let t = product_table(k, field).map_err(|e| e.to_string())?;
    let f = &t.field;
    let n = t.classes.len();
    let mut stats = LawStats::default();

    for i in 0..n {
        for j in 0..n {
            let (x, y) = (&t.classes[i], &t.classes[j]);
            if !x.support.is_disjoint(y.support) {
                if t.get(i, j).is_some() {
                    return Err(format!("overlapping supports {i},{j} multiply to nonzero"));
                }
                continue;
            }
            stats.pairs += 1;
            let (index, cochain) = t.product_cochain(i, j, k).expect("disjoint supports");
            let d = x.cochain_degree + y.cochain_degree + 1;
            if index.coboundary(f, d, &cochain).iter().any(|v| !f.is_zero(v)) {
                return Err(format!("product {i}·{j} is not a cocycle"));
            }
            let sign_odd = x.degree * y.degree % 2 == 1;
            match (t.get(i, j), t.get(j, i)) {
                (None, None) => {}
                (Some(a), Some(b)) => {
                    stats.nonzero += 1;
                    let b: Vec<_> = b.iter().map(|v| if sign_odd { f.neg(v) } else { v.clone() }).collect();
                    if a != b.as_slice() {
                        return Err(format!("graded commutativity fails for {i},{j}"));
                    }
                    let expected = t.degree_range(x.degree + y.degree).len();
                    if a.len() != expected {
                        return Err(format!("product {i}·{j} has the wrong target degree"));
                    }
                }
                _ => return Err(format!("only one of {i}·{j} and {j}·{i} vanishes")),
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let (x, y, z) = (&t.classes[i], &t.classes[j], &t.classes[l]);
                let disjoint = x.support.is_disjoint(y.support)
                    && y.support.is_disjoint(z.support)
                    && x.support.is_disjoint(z.support);
                let (xy, yz) = (t.get(i, j), t.get(j, l));
                if !disjoint || (xy.is_none() && yz.is_none()) {
                    continue;
                }
                stats.triples += 1;
                let lhs = extend_linearly(&t, xy, x.degree + y.degree, l, true);
                let rhs = extend_linearly(&t, yz, y.degree + z.degree, i, false);
                if lhs != rhs {
                    return Err(format!("associativity fails for ({i},{j},{l})"));
                }
            }
        }
    }
    Ok(stats)
}
