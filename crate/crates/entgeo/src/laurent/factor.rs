//! Bounded irreducibility testing over `F_p` Laurent rings.
//!
//! A Laurent polynomial factors nontrivially iff it has a non-monomial
//! factor whose Newton polytope is a proper Minkowski summand of its own.
//! The search enumerates candidate factor supports — edge-subdivision
//! summands of the Newton polygon when `d = 2`, all normalized subsets of
//! the degree box otherwise — assigns coefficients exhaustively, and tests
//! exact divisibility. Within the effort bound the verdict is exact; past
//! it the answer is `Unknown`.

use super::{invmod, is_prime, mulmod, Exponent, LaurentPoly, PolyError};
use crate::polytope::geom::{convex_hull_2d, gcd_i64, lattice_points_in_hull};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// No nontrivial factorization exists.
    Irreducible,
    /// A nontrivial non-monomial factor (unique only up to units).
    Reducible(LaurentPoly),
    /// The effort bound was exhausted before the search completed.
    Unknown,
}

/// Decide irreducibility of `f` in the Laurent ring over `F_p`, where
/// `p = f.modulus()` must be prime. `effort_bound` caps the number of
/// candidate factors tried.
pub fn irreducible_mod_p(f: &LaurentPoly, effort_bound: u64) -> Result<Irreducibility, PolyError> {
    let p = f.modulus();
    if !is_prime(p) {
        return Err(PolyError::CompositeModulus(p));
    }
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if f.is_monomial() {
        return Err(PolyError::MonomialInput);
    }
    let f = f.normalized();
    let mut budget = effort_bound;
    if f.dim() == 2 {
        for (support, forced) in summand_supports_2d(&f) {
            match try_supports(&f, &support, &forced, p, &mut budget) {
                SearchStep::Exhausted => continue,
                SearchStep::OutOfBudget => return Ok(Irreducibility::Unknown),
                SearchStep::Found(g) => return Ok(Irreducibility::Reducible(g)),
            }
        }
        return Ok(Irreducibility::Irreducible);
    }
    // generic dimension: normalized subsets of the degree box
    let cells = match box_cells(&f) {
        Some(cells) => cells,
        None => return Ok(Irreducibility::Unknown),
    };
    let n = cells.len();
    for mask in 1u64..(1u64 << n) {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        let subset: Vec<Exponent> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cells[i].clone())
            .collect();
        let normalized =
            (0..f.dim()).all(|j| subset.iter().map(|e| e[j]).min() == Some(0));
        if !normalized {
            continue;
        }
        // forcing every chosen point nonzero makes each candidate support
        // appear exactly once across masks
        match try_supports(&f, &subset, &subset, p, &mut budget) {
            SearchStep::Exhausted => continue,
            SearchStep::OutOfBudget => return Ok(Irreducibility::Unknown),
            SearchStep::Found(g) => return Ok(Irreducibility::Reducible(g)),
        }
    }
    Ok(Irreducibility::Irreducible)
}

enum SearchStep {
    Exhausted,
    OutOfBudget,
    Found(LaurentPoly),
}

fn try_supports(
    f: &LaurentPoly,
    support: &[Exponent],
    forced: &[Exponent],
    p: u64,
    budget: &mut u64,
) -> SearchStep {
    for g in CoefficientAssignments::new(support, forced, f.dim(), p) {
        if *budget == 0 {
            return SearchStep::OutOfBudget;
        }
        *budget -= 1;
        if let Some(h) = divide_exact(f, &g) {
            if !h.is_monomial() {
                debug_assert_eq!(g.mul(&h).unwrap(), *f);
                return SearchStep::Found(g);
            }
        }
    }
    SearchStep::Exhausted
}

/// Exact division `f / g` in the polynomial ring, for normalized inputs
/// with prime modulus. A single divisor is a Groebner basis of the ideal
/// it generates, so the first leading term not divisible by `lt(g)`
/// already proves indivisibility.
pub(crate) fn divide_exact(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    let p = f.modulus();
    let (g_exp, g_c) = leading_grlex(g)?;
    let g_inv = invmod(g_c, p);
    let mut r = f.clone();
    let mut q = LaurentPoly::zero(f.dim(), p).expect("valid modulus");
    while !r.is_zero() {
        let (r_exp, r_c) = leading_grlex(&r).expect("nonzero");
        if !exp_divides(&g_exp, &r_exp) {
            return None;
        }
        let t_exp: Exponent = r_exp.iter().zip(g_exp.iter()).map(|(a, b)| a - b).collect();
        let t_c = mulmod(r_c, g_inv, p);
        let t = LaurentPoly::monomial(t_c, t_exp, f.dim(), p).expect("in range");
        q = q.add(&t).expect("compatible");
        r = r.sub(&t.mul(g).expect("compatible")).expect("compatible");
    }
    Some(q)
}

fn leading_grlex(f: &LaurentPoly) -> Option<(Exponent, u64)> {
    f.terms()
        .map(|(e, c)| (e.clone(), c))
        .max_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        })
}

fn exp_divides(g: &[i64], r: &[i64]) -> bool {
    g.iter().zip(r.iter()).all(|(a, b)| a <= b)
}

/// Candidate support = point set plus the subset of points forced to be
/// nonzero (the polytope vertices).
type CandidateSupport = (Vec<Exponent>, Vec<Exponent>);

/// Candidate factor supports for `d = 2`: for each proper Minkowski
/// summand `S` of the Newton polygon, all subsets of the lattice points
/// of `S` that contain its vertices.
fn summand_supports_2d(f: &LaurentPoly) -> Vec<CandidateSupport> {
    let pts: Vec<[i64; 2]> = f
        .support()
        .iter()
        .map(|e| [e[0], e[1]])
        .collect();
    let hull = convex_hull_2d(&pts);
    let mut out = Vec::new();
    match hull.len() {
        0 | 1 => {}
        2 => {
            // segment: summands are the shorter subsegments
            let d = [hull[1][0] - hull[0][0], hull[1][1] - hull[0][1]];
            let total = gcd_i64(d[0], d[1]);
            let step = [d[0] / total, d[1] / total];
            for len in 1..total {
                let vertices = vec![vec![0, 0], vec![len * step[0], len * step[1]]];
                let points: Vec<Exponent> = (0..=len)
                    .map(|j| vec![j * step[0], j * step[1]])
                    .collect();
                out.push((points, vertices));
            }
        }
        _ => {
            // polygon: integral summands correspond to edge subdivisions
            // (s_1, ..., s_k), 0 <= s_i <= L_i, sum s_i * dir_i = 0
            let k = hull.len();
            let mut dirs = Vec::with_capacity(k);
            let mut lens = Vec::with_capacity(k);
            for i in 0..k {
                let a = hull[i];
                let b = hull[(i + 1) % k];
                let d = [b[0] - a[0], b[1] - a[1]];
                let g = gcd_i64(d[0], d[1]);
                dirs.push([d[0] / g, d[1] / g]);
                lens.push(g);
            }
            let mut choice = vec![0i64; k];
            enumerate_subdivisions(&dirs, &lens, 0, [0, 0], &mut choice, &mut |s| {
                if s.iter().all(|x| *x == 0) || s == lens.as_slice() {
                    return; // the point and the whole polygon are trivial
                }
                out.push(summand_from_subdivision(&dirs, s));
            });
        }
    }
    out
}

fn enumerate_subdivisions(
    dirs: &[[i64; 2]],
    lens: &[i64],
    i: usize,
    acc: [i64; 2],
    choice: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if i == dirs.len() {
        if acc == [0, 0] {
            emit(choice);
        }
        return;
    }
    for s in 0..=lens[i] {
        choice[i] = s;
        let next = [acc[0] + s * dirs[i][0], acc[1] + s * dirs[i][1]];
        enumerate_subdivisions(dirs, lens, i + 1, next, choice, emit);
    }
    choice[i] = 0;
}

fn summand_from_subdivision(dirs: &[[i64; 2]], s: &[i64]) -> CandidateSupport {
    // walk the chosen edge vectors in order; the walk closes up by
    // construction
    let mut walk = vec![[0i64, 0]];
    let mut cur = [0i64, 0];
    for (d, len) in dirs.iter().zip(s.iter()) {
        if *len == 0 {
            continue;
        }
        cur = [cur[0] + d[0] * len, cur[1] + d[1] * len];
        walk.push(cur);
    }
    let min_x = walk.iter().map(|p| p[0]).min().unwrap();
    let min_y = walk.iter().map(|p| p[1]).min().unwrap();
    let walk: Vec<[i64; 2]> = walk
        .iter()
        .map(|p| [p[0] - min_x, p[1] - min_y])
        .collect();
    let hull = convex_hull_2d(&walk);
    let vertices: Vec<Exponent> = hull.iter().map(|p| vec![p[0], p[1]]).collect();
    let points: Vec<Exponent> = lattice_points_in_hull(&hull)
        .iter()
        .map(|p| vec![p[0], p[1]])
        .collect();
    (points, vertices)
}

/// Lattice points of the degree box of a normalized `f` (the universe of
/// candidate factor supports for `d != 2`), or `None` when the box is too
/// large to enumerate subsets of.
fn box_cells(f: &LaurentPoly) -> Option<Vec<Exponent>> {
    let dim = f.dim();
    let mut degs = vec![0i64; dim];
    for (exp, _) in f.terms() {
        for (d, e) in degs.iter_mut().zip(exp.iter()) {
            *d = (*d).max(*e);
        }
    }
    let mut size: u64 = 1;
    for d in &degs {
        size = size.saturating_mul(*d as u64 + 1);
        if size > 24 {
            return None;
        }
    }
    let mut cells: Vec<Exponent> = vec![vec![]];
    for d in &degs {
        let mut next = Vec::new();
        for c in &cells {
            for v in 0..=*d {
                let mut c = c.clone();
                c.push(v);
                next.push(c);
            }
        }
        cells = next;
    }
    Some(cells)
}

/// Iterator over coefficient assignments for a fixed support: forced
/// points (polytope vertices) and the grlex-leading point are always
/// nonzero, the leading coefficient is pinned to 1 (scalar multiples are
/// associates), remaining points range over all residues.
struct CoefficientAssignments {
    points: Vec<Exponent>,
    lead: usize,
    forced: Vec<bool>,
    dim: usize,
    p: u64,
    state: Vec<u64>,
    done: bool,
}

impl CoefficientAssignments {
    fn new(points: &[Exponent], forced: &[Exponent], dim: usize, p: u64) -> Self {
        let lead = points
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| {
                let da: i64 = a.iter().sum();
                let db: i64 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            })
            .map(|(i, _)| i)
            .unwrap_or(0);
        let forced: Vec<bool> = points.iter().map(|e| forced.contains(e)).collect();
        let state: Vec<u64> = points
            .iter()
            .enumerate()
            .map(|(i, _)| if forced[i] || i == lead { 1 } else { 0 })
            .collect();
        CoefficientAssignments {
            points: points.to_vec(),
            lead,
            forced,
            dim,
            p,
            state,
            done: points.is_empty(),
        }
    }
}

impl Iterator for CoefficientAssignments {
    type Item = LaurentPoly;

    fn next(&mut self) -> Option<LaurentPoly> {
        loop {
            if self.done {
                return None;
            }
            let candidate = LaurentPoly::from_terms(
                self.points
                    .iter()
                    .cloned()
                    .zip(self.state.iter().copied())
                    .filter(|(_, c)| *c != 0),
                self.dim,
                self.p,
            )
            .expect("valid terms");
            // advance the mixed-radix counter, skipping the pinned lead
            let mut i = 0;
            loop {
                if i == self.points.len() {
                    self.done = true;
                    break;
                }
                if i == self.lead {
                    i += 1;
                    continue;
                }
                let lo = if self.forced[i] { 1 } else { 0 };
                if self.state[i] + 1 < self.p {
                    self.state[i] += 1;
                    break;
                }
                self.state[i] = lo;
                i += 1;
            }
            // a candidate must be a genuine non-monomial
            if candidate.num_terms() >= 2 {
                return Some(candidate);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;

    fn p(text: &str, dim: usize, q: u64) -> LaurentPoly {
        parse_poly(text, dim, q).expect("parse")
    }

    #[test]
    fn divide_exact_simple() {
        let f = p("1 + u1^2", 1, 2); // (1 + u1)^2 mod 2
        let g = p("1 + u1", 1, 2);
        let h = divide_exact(&f, &g).unwrap();
        assert_eq!(h, g);
        assert!(divide_exact(&g, &f).is_none());
    }

    #[test]
    fn three_dot_is_irreducible() {
        let f = p("1 + u1 + u2", 2, 2);
        assert_eq!(
            irreducible_mod_p(&f, 1_000_000).unwrap(),
            Irreducibility::Irreducible
        );
    }

    #[test]
    fn mirror_product_is_reducible_with_exact_factor() {
        let a = p("1 + u1 + u2", 2, 2);
        let b = p("1 + u1 + u2^-1", 2, 2);
        let f = a.mul(&b).unwrap();
        match irreducible_mod_p(&f, 1_000_000).unwrap() {
            Irreducibility::Reducible(g) => {
                // the factor divides exactly
                let h = divide_exact(&f.normalized(), &g.normalized()).unwrap();
                assert_eq!(g.normalized().mul(&h).unwrap(), f.normalized());
                assert!(!g.is_monomial());
                assert!(!h.is_monomial());
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn four_dot_is_irreducible() {
        let f = p("1 + u1 + u2 + u3", 3, 2);
        assert_eq!(
            irreducible_mod_p(&f, 1_000_000).unwrap(),
            Irreducibility::Irreducible
        );
    }

    #[test]
    fn univariate_quadratic() {
        let f = p("1 + u1 + u1^2", 1, 2);
        assert_eq!(
            irreducible_mod_p(&f, 1_000_000).unwrap(),
            Irreducibility::Irreducible
        );
        let sq = p("1 + u1^2", 1, 2);
        assert!(matches!(
            irreducible_mod_p(&sq, 1_000_000).unwrap(),
            Irreducibility::Reducible(_)
        ));
    }

    #[test]
    fn effort_bound_gives_unknown() {
        let a = p("1 + u1 + u2", 2, 2);
        let b = p("1 + u1 + u2^-1", 2, 2);
        let f = a.mul(&b).unwrap();
        assert_eq!(irreducible_mod_p(&f, 0).unwrap(), Irreducibility::Unknown);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let f = p("1 + u1", 2, 4);
        assert_eq!(
            irreducible_mod_p(&f, 10),
            Err(PolyError::CompositeModulus(4))
        );
        let z = LaurentPoly::zero(2, 2).unwrap();
        assert_eq!(irreducible_mod_p(&z, 10), Err(PolyError::ZeroPolynomial));
        let m = p("u1u2", 2, 2);
        assert_eq!(irreducible_mod_p(&m, 10), Err(PolyError::MonomialInput));
    }

    #[test]
    fn linear_in_one_variable_families() {
        // 1 + u1 + u2^m is linear in u1 with unit content, hence irreducible
        for m in 1..=4 {
            let f = p(&format!("1 + u1 + u2^{m}"), 2, 2);
            assert_eq!(
                irreducible_mod_p(&f, 1_000_000).unwrap(),
                Irreducibility::Irreducible,
                "m = {m}"
            );
        }
    }

    #[test]
    fn p3_triangle_irreducible() {
        let f = p("1 + u1 + u2", 2, 3);
        assert_eq!(
            irreducible_mod_p(&f, 1_000_000).unwrap(),
            Irreducibility::Irreducible
        );
    }

    #[test]
    fn reducible_p3_product() {
        let a = p("1 + u1 + u2", 2, 3);
        let b = p("2 + u1 + u2", 2, 3);
        let f = a.mul(&b).unwrap();
        match irreducible_mod_p(&f, 10_000_000).unwrap() {
            Irreducibility::Reducible(g) => {
                assert!(divide_exact(&f.normalized(), &g.normalized()).is_some());
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
    }
}
