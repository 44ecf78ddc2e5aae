//! Presentations of algebraic `Z^d` shift systems and finite regions.
//!
//! A presentation is the data `(d, q, s, J)` realizing a system as the
//! annihilator of a module of relations `J` inside `((Z/qZ)^s)^{Z^d}`:
//! configurations `x` with `sum_c sum_n g[c]_n * x_c(n + m) = 0` for every
//! relation generator `g` and every shift `m`. Principal systems are the
//! single-relation prime-modulus case; products concatenate blocks;
//! higher-block recodings re-present the same action on a fatter alphabet
//! and exist so that presentation invariance is a testable statement.

use crate::laurent::{is_prime, LaurentPoly};
use std::collections::BTreeSet;
use std::fmt;

mod file;

pub use file::{parse_system_file, render_system_file};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("relation polynomial is zero")]
    ZeroRelation,
    #[error("relation has modulus {relation} but the presentation has modulus {presentation}")]
    RelationModulus { relation: u64, presentation: u64 },
    #[error("dimension mismatch across factors: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("higher-block radius must be at least 1")]
    BadBlockRadius,
    #[error("region is empty")]
    EmptyRegion,
    #[error("region builders for perpendicular data require dimension 2, got {0}")]
    NotPlanar(usize),
    #[error("the zero vector is not a direction")]
    ZeroVector,
    #[error("system file, line {line}: {message}")]
    File { line: usize, message: String },
}

/// How a presentation was built. Entropy geometry of a recoded system is
/// computed on its base, which is what makes invariance checks meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Principal { prime: u64 },
    Product(Vec<Presentation>),
    Recoded { base: Box<Presentation>, radius: u32 },
}

/// The data `(d, q, s, relations)` of a system presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    dim: usize,
    modulus: u64,
    rank: usize,
    relations: Vec<Vec<LaurentPoly>>,
    provenance: Provenance,
}

impl Presentation {
    /// Principal presentation of `R_d/(p, f)`: one component, one relation.
    pub fn principal(p: u64, f: LaurentPoly) -> Result<Self, SystemError> {
        if !is_prime(p) {
            return Err(SystemError::CompositeModulus(p));
        }
        if f.is_zero() {
            return Err(SystemError::ZeroRelation);
        }
        if f.modulus() != p {
            return Err(SystemError::RelationModulus {
                relation: f.modulus(),
                presentation: p,
            });
        }
        Ok(Presentation {
            dim: f.dim(),
            modulus: p,
            rank: 1,
            relations: vec![vec![f]],
            provenance: Provenance::Principal { prime: p },
        })
    }

    /// Cartesian product with block-diagonal relations. The modulus is the
    /// lcm of the factor moduli; a factor with a smaller modulus embeds by
    /// scaling its relations and pinning its components with a constant
    /// relation.
    pub fn product(factors: Vec<Presentation>) -> Result<Self, SystemError> {
        let mut it = factors.iter();
        let first = it.next().ok_or(SystemError::EmptyProduct)?;
        for f in it {
            if f.dim != first.dim {
                return Err(SystemError::DimensionMismatch(first.dim, f.dim));
            }
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let dim = first.dim;
        let modulus = factors.iter().fold(1u64, |acc, f| lcm(acc, f.modulus));
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut relations = Vec::new();
        let mut offset = 0usize;
        for factor in &factors {
            let scale = modulus / factor.modulus;
            for gen in &factor.relations {
                let mut lifted = zero_vector(rank, dim, modulus);
                for (c, poly) in gen.iter().enumerate() {
                    lifted[offset + c] = rescale(poly, modulus, scale);
                }
                relations.push(lifted);
            }
            if factor.modulus < modulus {
                for c in 0..factor.rank {
                    let mut pin = zero_vector(rank, dim, modulus);
                    pin[offset + c] =
                        LaurentPoly::constant(factor.modulus, dim, modulus).expect("modulus >= 2");
                    relations.push(pin);
                }
            }
            offset += factor.rank;
        }
        Ok(Presentation {
            dim,
            modulus,
            rank,
            relations,
            provenance: Provenance::Product(factors),
        })
    }

    /// Re-present the action on the alphabet of `B(r)`-blocks: one new
    /// component per (old component, block offset), with overlap-consistency
    /// generators plus the base relations lifted through the center offset.
    /// The recoded action is algebraically isomorphic to the original.
    pub fn higher_block(&self, radius: u32) -> Result<Self, SystemError> {
        if radius == 0 {
            return Err(SystemError::BadBlockRadius);
        }
        let block = ball_points(self.dim, radius);
        let b = block.len();
        let rank = self.rank * b;
        let dim = self.dim;
        let q = self.modulus;
        let comp = |c: usize, bi: usize| bi * self.rank + c;
        let mut relations = Vec::new();
        // overlap consistency: components (c, b) at n and (c, b') at
        // n + (b - b') name the same base coordinate
        for c in 0..self.rank {
            for bi in 0..b {
                for bj in (bi + 1)..b {
                    let shift: Vec<i64> = block[bi]
                        .iter()
                        .zip(block[bj].iter())
                        .map(|(x, y)| x - y)
                        .collect();
                    let mut gen = zero_vector(rank, dim, q);
                    gen[comp(c, bi)] =
                        LaurentPoly::constant(1, dim, q).expect("modulus >= 2");
                    gen[comp(c, bj)] = LaurentPoly::monomial(q - 1, shift, dim, q)
                        .expect("valid exponent");
                    relations.push(gen);
                }
            }
        }
        // base relations through the center component
        let center = block
            .iter()
            .position(|p| p.iter().all(|x| *x == 0))
            .expect("ball contains the origin");
        for gen in &self.relations {
            let mut lifted = zero_vector(rank, dim, q);
            for (c, poly) in gen.iter().enumerate() {
                lifted[comp(c, center)] = poly.clone();
            }
            relations.push(lifted);
        }
        // base relations re-expressed through every per-point block
        // offset: a support point read as component (c, b) of the cell
        // `point - b` yields the same constraint. Center-only lifts lose
        // window-local constraints whenever the cells carrying the
        // consistency path are missing, so all mixed embeddings are added
        // (capped combinatorially).
        for gen in &self.relations {
            let support: Vec<(usize, Vec<i64>, u64)> = gen
                .iter()
                .enumerate()
                .flat_map(|(c, poly)| {
                    poly.terms()
                        .map(move |(e, v)| (c, e.clone(), v))
                        .collect::<Vec<_>>()
                })
                .collect();
            if support.is_empty() {
                continue;
            }
            let combos = (b as u64).checked_pow(support.len() as u32);
            if combos.is_none() || combos.unwrap() > 1024 {
                continue; // the center lift above remains as the fallback
            }
            let mut assignment = vec![0usize; support.len()];
            loop {
                let mut mixed = zero_vector(rank, dim, q);
                for ((c, point, v), bi) in support.iter().zip(assignment.iter()) {
                    let offset: Vec<i64> = point
                        .iter()
                        .zip(block[*bi].iter())
                        .map(|(a, b)| a - b)
                        .collect();
                    let term = LaurentPoly::monomial(*v, offset, dim, q).expect("valid");
                    mixed[comp(*c, *bi)] =
                        mixed[comp(*c, *bi)].add(&term).expect("compatible");
                }
                relations.push(mixed);
                let mut i = 0;
                loop {
                    if i == assignment.len() {
                        break;
                    }
                    assignment[i] += 1;
                    if assignment[i] < b {
                        break;
                    }
                    assignment[i] = 0;
                    i += 1;
                }
                if assignment.iter().all(|x| *x == 0) {
                    break;
                }
            }
        }
        relations.sort();
        relations.dedup();
        Ok(Presentation {
            dim,
            modulus: q,
            rank,
            relations,
            provenance: Provenance::Recoded {
                base: Box::new(self.clone()),
                radius,
            },
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Alphabet rank `s`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[Vec<LaurentPoly>] {
        &self.relations
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `(p, f)` of the underlying principal system, unwrapping recodings.
    pub fn principal_data(&self) -> Option<(u64, &LaurentPoly)> {
        match &self.provenance {
            Provenance::Principal { prime } => Some((*prime, &self.relations[0][0])),
            Provenance::Recoded { base, .. } => base.principal_data(),
            Provenance::Product(_) => None,
        }
    }

    /// Factors of a product, unwrapping recodings; a principal system is
    /// its own single factor.
    pub fn principal_factors(&self) -> Option<Vec<&Presentation>> {
        match &self.provenance {
            Provenance::Principal { .. } => Some(vec![self]),
            Provenance::Recoded { base, .. } => base.principal_factors(),
            Provenance::Product(factors) => {
                let mut out = Vec::new();
                for f in factors {
                    out.extend(f.principal_factors()?);
                }
                Some(out)
            }
        }
    }
}

fn zero_vector(rank: usize, dim: usize, q: u64) -> Vec<LaurentPoly> {
    (0..rank)
        .map(|_| LaurentPoly::zero(dim, q).expect("modulus >= 2"))
        .collect()
}

fn rescale(poly: &LaurentPoly, modulus: u64, scale: u64) -> LaurentPoly {
    LaurentPoly::from_terms(
        poly.terms().map(|(e, c)| (e.clone(), c * scale)),
        poly.dim(),
        modulus,
    )
    .expect("consistent dims")
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lattice points of the Euclidean ball of the given radius, sorted.
fn ball_points(dim: usize, radius: u32) -> Vec<Vec<i64>> {
    let r = radius as i64;
    let mut out = Vec::new();
    let mut cur = vec![-r; dim];
    loop {
        let norm2: i64 = cur.iter().map(|x| x * x).sum();
        if norm2 <= r * r {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == dim {
                out.sort();
                return out;
            }
            cur[i] += 1;
            if cur[i] <= r {
                break;
            }
            cur[i] = -r;
            i += 1;
        }
    }
}

/// A finite set of cells in `Z^d` with a descriptive label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<Vec<i64>>,
    dim: usize,
    label: String,
}

impl Region {
    pub fn from_cells<I>(cells: I, dim: usize, label: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        Region {
            cells: cells.into_iter().collect(),
            dim,
            label: label.into(),
        }
    }

    pub fn cells(&self) -> &BTreeSet<Vec<i64>> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn contains(&self, cell: &[i64]) -> bool {
        self.cells.contains(cell)
    }

    pub fn union(&self, other: &Region) -> Region {
        debug_assert_eq!(self.dim, other.dim);
        Region {
            cells: self.cells.union(&other.cells).cloned().collect(),
            dim: self.dim,
            label: format!("{} + {}", self.label, other.label),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} cells)", self.label, self.cells.len())
    }
}

/// The box `{0..s_1-1} x ... x {0..s_d-1}`.
pub fn region_box(sides: &[u64]) -> Result<Region, SystemError> {
    if sides.iter().any(|s| *s == 0) {
        return Err(SystemError::EmptyRegion);
    }
    let mut cells: Vec<Vec<i64>> = vec![vec![]];
    for s in sides {
        let mut next = Vec::new();
        for c in &cells {
            for v in 0..*s as i64 {
                let mut c = c.clone();
                c.push(v);
                next.push(c);
            }
        }
        cells = next;
    }
    Ok(Region::from_cells(
        cells,
        sides.len(),
        format!("box {sides:?}"),
    ))
}

/// Primitive counterclockwise perpendicular of a primitive plane vector:
/// the canonical generator of `v^perp`.
pub fn perp(v: [i64; 2]) -> [i64; 2] {
    [-v[1], v[0]]
}

fn primitive2(v: &[i64]) -> Result<[i64; 2], SystemError> {
    if v.len() != 2 {
        return Err(SystemError::NotPlanar(v.len()));
    }
    let p = crate::polytope::geom::primitive(v).ok_or(SystemError::ZeroVector)?;
    Ok([p[0], p[1]])
}

/// The segment of the line `v^perp`: `{j * w : |j| <= len}` for the
/// primitive generator `w`. Non-primitive `v` is normalized first.
pub fn region_line(v: &[i64], len: u64) -> Result<Region, SystemError> {
    let v = primitive2(v)?;
    let w = perp(v);
    let cells = (-(len as i64)..=len as i64).map(|j| vec![j * w[0], j * w[1]]);
    Ok(Region::from_cells(
        cells,
        2,
        format!("line v=({},{}) len={len}", v[0], v[1]),
    ))
}

/// The strip `{n : -depth <= v.n <= -1}` truncated transversally to the
/// extent of a `len`-sized line segment (in units of the primitive
/// perpendicular `w`). Non-primitive `v` is normalized first.
pub fn region_strip(v: &[i64], depth: u64, len: u64) -> Result<Region, SystemError> {
    let v = primitive2(v)?;
    let cells = strip_cells(v, depth as i64, len as i64);
    Ok(Region::from_cells(
        cells,
        2,
        format!("strip v=({},{}) depth={depth} len={len}", v[0], v[1]),
    ))
}

/// Cells at levels `-depth <= v.n <= -1` with transverse dot range
/// `|n.w| <= len * (w.w)`, matching the extent of a `len`-sized line.
pub(crate) fn strip_cells(v: [i64; 2], depth: i64, len: i64) -> Vec<Vec<i64>> {
    let w = perp(v);
    let ww = (w[0] * w[0] + w[1] * w[1]) as i64;
    // a base point with v.n0 = 1 exists since v is primitive
    let n0 = bezout_point(v);
    let mut cells = Vec::new();
    for level in -depth..=-1 {
        let base = [n0[0] * level, n0[1] * level];
        let base_dot_w = base[0] * w[0] + base[1] * w[1];
        // n = base + t*w has n.w = base.w + t*(w.w); solve |n.w| <= len*ww
        let lo = div_ceil(-len * ww - base_dot_w, ww);
        let hi = div_floor(len * ww - base_dot_w, ww);
        for t in lo..=hi {
            cells.push(vec![base[0] + t * w[0], base[1] + t * w[1]]);
        }
    }
    cells
}

/// Some integer point with `v.n = 1`, for primitive `v`.
fn bezout_point(v: [i64; 2]) -> [i64; 2] {
    let (g, x, y) = extended_gcd(v[0], v[1]);
    debug_assert_eq!(g.abs(), 1);
    if g == 1 {
        [x, y]
    } else {
        [-x, -y]
    }
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// Truncation of the lexicographic conditioning region together with the
/// target columns: cells `n` with the scaled prefix `(n_1..n_{d-1})`
/// lexicographically positive (the `S_ell` part, heights up to `height`)
/// plus the columns over `U_ell` (the target part).
pub fn region_lex(dim: usize, ell: u64, width: u64, height: u64) -> Result<Region, SystemError> {
    if dim < 2 || ell == 0 {
        return Err(SystemError::EmptyRegion);
    }
    let cond = lex_cond_cells(dim, ell as i64, width as i64, height as i64);
    let target = lex_target_cells(dim, ell as i64, height as i64);
    let cells: Vec<Vec<i64>> = cond.into_iter().chain(target).collect();
    Ok(Region::from_cells(
        cells,
        dim,
        format!("lex ell={ell} width={width} height={height}"),
    ))
}

/// The `S_ell + R e_d` part truncated to `|n_i| <= width`, `|n_d| <= height`.
pub(crate) fn lex_cond_cells(dim: usize, ell: i64, width: i64, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut prefix = vec![-width; dim - 1];
    loop {
        let quotient: Vec<i64> = prefix.iter().map(|x| x.div_euclid(ell)).collect();
        if lex_positive(&quotient) {
            for h in -height..=height {
                let mut cell = prefix.clone();
                cell.push(h);
                out.push(cell);
            }
        }
        let mut i = dim - 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            prefix[i] += 1;
            if prefix[i] <= width {
                break;
            }
            prefix[i] = -width;
        }
    }
}

/// The `U_ell + R e_d` part: columns over `[0, ell-1]^{d-1}`.
pub(crate) fn lex_target_cells(dim: usize, ell: i64, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut prefix = vec![0i64; dim - 1];
    loop {
        for h in -height..=height {
            let mut cell = prefix.clone();
            cell.push(h);
            out.push(cell);
        }
        let mut i = dim - 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            prefix[i] += 1;
            if prefix[i] < ell {
                break;
            }
            prefix[i] = 0;
        }
    }
}

fn lex_positive(prefix: &[i64]) -> bool {
    for x in prefix {
        if *x > 0 {
            return true;
        }
        if *x < 0 {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;

    fn three_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2", 2, 2).unwrap()).unwrap()
    }

    fn mirror_dot() -> Presentation {
        Presentation::principal(2, parse_poly("1 + u1 + u2^-1", 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn principal_shape() {
        let x1 = three_dot();
        assert_eq!(x1.dim(), 2);
        assert_eq!(x1.modulus(), 2);
        assert_eq!(x1.rank(), 1);
        assert_eq!(x1.relations().len(), 1);
        assert!(x1.principal_data().is_some());
    }

    #[test]
    fn principal_rejects_bad_inputs() {
        let f = parse_poly("1 + u1", 2, 4).unwrap();
        assert_eq!(
            Presentation::principal(4, f),
            Err(SystemError::CompositeModulus(4))
        );
        let z = LaurentPoly::zero(2, 2).unwrap();
        assert_eq!(
            Presentation::principal(2, z),
            Err(SystemError::ZeroRelation)
        );
        let p3 = parse_poly("1 + u1", 2, 3).unwrap();
        assert!(matches!(
            Presentation::principal(2, p3),
            Err(SystemError::RelationModulus { .. })
        ));
    }

    #[test]
    fn product_block_diagonal() {
        let x = Presentation::product(vec![three_dot(), mirror_dot()]).unwrap();
        assert_eq!(x.rank(), 2);
        assert_eq!(x.modulus(), 2);
        assert_eq!(x.relations().len(), 2);
        assert!(x.relations()[0][1].is_zero());
        assert!(x.relations()[1][0].is_zero());
        assert!(x.principal_data().is_none());
        assert_eq!(x.principal_factors().unwrap().len(), 2);
    }

    #[test]
    fn product_of_one_is_identity() {
        let x1 = three_dot();
        assert_eq!(Presentation::product(vec![x1.clone()]).unwrap(), x1);
    }

    #[test]
    fn product_dimension_mismatch() {
        let a = three_dot();
        let b =
            Presentation::principal(2, parse_poly("1 + u1 + u2 + u3", 3, 2).unwrap()).unwrap();
        assert_eq!(
            Presentation::product(vec![a, b]),
            Err(SystemError::DimensionMismatch(2, 3))
        );
    }

    #[test]
    fn mixed_modulus_product_uses_lcm() {
        let a = three_dot();
        let b = Presentation::principal(3, parse_poly("1 + u1 + u2", 2, 3).unwrap()).unwrap();
        let x = Presentation::product(vec![a, b]).unwrap();
        assert_eq!(x.modulus(), 6);
        // two lifted relations plus one modulus pin per component
        assert_eq!(x.relations().len(), 4);
    }

    #[test]
    fn higher_block_rank() {
        let x1 = three_dot();
        let hb = x1.higher_block(1).unwrap();
        assert_eq!(hb.rank(), 5);
        assert_eq!(hb.modulus(), 2);
        // C(5,2) consistency generators plus 5^3 mixed embeddings of the
        // single relation (the center lift is one of them)
        assert_eq!(hb.relations().len(), 135);
        assert_eq!(hb.principal_data(), x1.principal_data());
        assert_eq!(x1.higher_block(0), Err(SystemError::BadBlockRadius));
    }

    #[test]
    fn ball_points_cross() {
        let b = ball_points(2, 1);
        assert_eq!(
            b,
            vec![
                vec![-1, 0],
                vec![0, -1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0]
            ]
        );
    }

    #[test]
    fn region_box_cells() {
        let r = region_box(&[2, 2]).unwrap();
        let cells: Vec<_> = r.cells().iter().cloned().collect();
        assert_eq!(
            cells,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(region_box(&[0, 2]), Err(SystemError::EmptyRegion));
    }

    #[test]
    fn region_line_diagonal() {
        let r = region_line(&[1, 1], 2).unwrap();
        let cells: BTreeSet<Vec<i64>> = r.cells().clone();
        let expected: BTreeSet<Vec<i64>> = [
            vec![-2, 2],
            vec![-1, 1],
            vec![0, 0],
            vec![1, -1],
            vec![2, -2],
        ]
        .into_iter()
        .collect();
        assert_eq!(cells, expected);
    }

    #[test]
    fn region_strip_shallow_diagonal() {
        let r = region_strip(&[1, 1], 1, 1).unwrap();
        let expected: BTreeSet<Vec<i64>> =
            [vec![0, -1], vec![-1, 0]].into_iter().collect();
        assert_eq!(r.cells(), &expected);
    }

    #[test]
    fn region_builders_normalize_direction() {
        let a = region_line(&[2, 2], 3).unwrap();
        let b = region_line(&[1, 1], 3).unwrap();
        assert_eq!(a.cells(), b.cells());
        let a = region_strip(&[3, 3], 2, 2).unwrap();
        let b = region_strip(&[1, 1], 2, 2).unwrap();
        assert_eq!(a.cells(), b.cells());
    }

    #[test]
    fn strip_levels_are_negative() {
        let r = region_strip(&[0, 1], 3, 2).unwrap();
        for cell in r.cells() {
            assert!(cell[1] <= -1 && cell[1] >= -3);
            assert!(cell[0].abs() <= 2);
        }
        assert_eq!(r.len(), 15);
    }

    #[test]
    fn lex_region_shape() {
        let r = region_lex(3, 1, 2, 1).unwrap();
        // S part: prefixes with (n1, n2) lex-positive within |.| <= 2,
        // three heights each; target: the axis column
        for cell in r.cells() {
            let pref = [cell[0], cell[1]];
            assert!(lex_positive(&pref) || pref == [0, 0]);
        }
        assert!(r.contains(&[0, 0, 0]));
        assert!(r.contains(&[0, 0, 1]));
        assert!(r.contains(&[1, -2, 0]));
        assert!(!r.contains(&[-1, 0, 0]));
        assert!(!r.contains(&[0, -1, 0]));
    }

    #[test]
    fn lex_positive_cases() {
        assert!(lex_positive(&[1, -5]));
        assert!(lex_positive(&[0, 3]));
        assert!(!lex_positive(&[0, 0]));
        assert!(!lex_positive(&[-1, 9]));
    }
}
