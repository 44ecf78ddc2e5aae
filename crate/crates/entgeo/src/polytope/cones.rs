//! Non-expansive direction geometry: finite direction sets in the plane
//! and complexes of rational cones of dimension at most two in space,
//! with exact membership and difference-witness search.

use super::geom::{cross3, dot3, primitive};
use super::hull3::NewtonPolytope3;
use super::PolytopeError;
use std::collections::BTreeSet;
use std::fmt;

/// A rational polyhedral cone of dimension one or two, given by primitive
/// integer generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cone {
    Ray([i64; 3]),
    /// Spanned by two linearly independent primitive generators.
    Sector([i64; 3], [i64; 3]),
}

impl Cone {
    fn contains(&self, v: [i64; 3]) -> bool {
        match self {
            Cone::Ray(g) => cross3(v, *g) == [0, 0, 0] && dot3(v, *g) > 0,
            Cone::Sector(g1, g2) => sector_contains(*g1, *g2, v),
        }
    }

    fn generators(&self) -> Vec<[i64; 3]> {
        match self {
            Cone::Ray(g) => vec![*g],
            Cone::Sector(g1, g2) => vec![*g1, *g2],
        }
    }
}

/// Is `v` a nonnegative rational combination of independent `g1`, `g2`?
fn sector_contains(g1: [i64; 3], g2: [i64; 3], v: [i64; 3]) -> bool {
    if v == [0, 0, 0] {
        return false;
    }
    let n = cross3(g1, g2);
    debug_assert_ne!(n, [0, 0, 0], "sector generators must be independent");
    if dot3(n, v) != 0 {
        return false; // not even in the spanning plane
    }
    // solve v = a*g1 + b*g2 on a nonsingular coordinate pair
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = (g1[i] as i128) * (g2[j] as i128) - (g1[j] as i128) * (g2[i] as i128);
        if det == 0 {
            continue;
        }
        let a_num = (v[i] as i128) * (g2[j] as i128) - (v[j] as i128) * (g2[i] as i128);
        let b_num = (g1[i] as i128) * (v[j] as i128) - (g1[j] as i128) * (v[i] as i128);
        // a = a_num/det >= 0 and b = b_num/det >= 0
        let a_ok = a_num == 0 || (a_num > 0) == (det > 0);
        let b_ok = b_num == 0 || (b_num > 0) == (det > 0);
        return a_ok && b_ok;
    }
    unreachable!("independent generators have a nonsingular 2x2 minor")
}

/// The set `N(alpha)` of non-expansive directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionGeometry {
    /// Finitely many pairwise non-parallel primitive directions in `Z^2`.
    FiniteDirections(BTreeSet<[i64; 2]>),
    /// A finite complex of cones of dimension at most 2 in `R^3`, closed
    /// under taking generator rays.
    ConeComplex(Vec<Cone>),
}

impl DirectionGeometry {
    pub fn finite(directions: Vec<[i64; 2]>) -> Self {
        DirectionGeometry::FiniteDirections(directions.into_iter().collect())
    }

    /// The 1-skeleton of the spherical dual: one ray per face normal and
    /// one 2D sector per edge, spanned by the normals of its two faces.
    pub fn cone_complex_of(np: &NewtonPolytope3) -> Self {
        let mut cones: BTreeSet<Cone> = BTreeSet::new();
        for face in np.faces() {
            cones.insert(Cone::Ray(face.normal));
        }
        for edge in np.edges() {
            let n1 = np.faces()[edge.faces[0]].normal;
            let n2 = np.faces()[edge.faces[1]].normal;
            let (a, b) = if n1 <= n2 { (n1, n2) } else { (n2, n1) };
            cones.insert(Cone::Sector(a, b));
        }
        DirectionGeometry::ConeComplex(cones.into_iter().collect())
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            DirectionGeometry::FiniteDirections(_) => 2,
            DirectionGeometry::ConeComplex(_) => 3,
        }
    }

    pub fn directions(&self) -> Option<&BTreeSet<[i64; 2]>> {
        match self {
            DirectionGeometry::FiniteDirections(d) => Some(d),
            _ => None,
        }
    }

    pub fn cones(&self) -> Option<&[Cone]> {
        match self {
            DirectionGeometry::ConeComplex(c) => Some(c),
            _ => None,
        }
    }

    /// All generator rays, primitive, deduplicated.
    pub fn generator_rays(&self) -> Vec<Vec<i64>> {
        match self {
            DirectionGeometry::FiniteDirections(d) => {
                d.iter().map(|v| v.to_vec()).collect()
            }
            DirectionGeometry::ConeComplex(cones) => {
                let set: BTreeSet<[i64; 3]> = cones
                    .iter()
                    .flat_map(|c| c.generators())
                    .collect();
                set.into_iter().map(|v| v.to_vec()).collect()
            }
        }
    }

    /// Exact membership of the direction of `v`, invariant under positive
    /// rational scaling.
    pub fn contains(&self, v: &[i64]) -> Result<bool, PolytopeError> {
        let expected = self.ambient_dim();
        if v.len() != expected {
            return Err(PolytopeError::BadVector {
                expected,
                got: v.len(),
            });
        }
        let v = primitive(v).ok_or(PolytopeError::ZeroVector)?;
        match self {
            DirectionGeometry::FiniteDirections(dirs) => Ok(dirs.contains(&[v[0], v[1]])),
            DirectionGeometry::ConeComplex(cones) => {
                let v = [v[0], v[1], v[2]];
                Ok(cones.iter().any(|c| c.contains(v)))
            }
        }
    }
}

impl fmt::Display for DirectionGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectionGeometry::FiniteDirections(dirs) => {
                write!(f, "directions {{")?;
                for (i, d) in dirs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({}, {})", d[0], d[1])?;
                }
                write!(f, "}}")
            }
            DirectionGeometry::ConeComplex(cones) => {
                write!(f, "cone complex {{")?;
                for (i, c) in cones.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    match c {
                        Cone::Ray(g) => write!(f, "ray({}, {}, {})", g[0], g[1], g[2])?,
                        Cone::Sector(a, b) => write!(
                            f,
                            "sector(({}, {}, {}), ({}, {}, {}))",
                            a[0], a[1], a[2], b[0], b[1], b[2]
                        )?,
                    }
                }
                write!(f, "}}")
            }
        }
    }
}

/// A primitive integer direction in `a` but not in `b`, or `None` if the
/// candidate search exhausts.
///
/// Candidates are the generators of `a` together with the extreme rays of
/// all pairwise intersections of `a`-cones with `b`-cones, scanned in
/// descending lexicographic order. For unions of cones of dimension at
/// most two every nonempty closed gap exposes such a ray; a difference
/// consisting only of relatively open sectors whose boundary rays lie in
/// `b` would be missed, which callers must treat as "no witness found",
/// never as emptiness of the difference.
pub fn geometry_difference_witness(
    a: &DirectionGeometry,
    b: &DirectionGeometry,
) -> Result<Option<Vec<i64>>, PolytopeError> {
    if std::mem::discriminant(a) != std::mem::discriminant(b) {
        return Err(PolytopeError::KindMismatch);
    }
    let mut candidates: BTreeSet<Vec<i64>> = a.generator_rays().into_iter().collect();
    if let (DirectionGeometry::ConeComplex(ca), DirectionGeometry::ConeComplex(cb)) = (a, b) {
        for sigma in ca {
            for tau in cb {
                for ray in intersection_rays(sigma, tau) {
                    candidates.insert(ray.to_vec());
                }
            }
        }
    }
    for cand in candidates.iter().rev() {
        if a.contains(cand)? && !b.contains(cand)? {
            return Ok(Some(cand.clone()));
        }
    }
    Ok(None)
}

/// Extreme-ray candidates of the intersection of two cones.
fn intersection_rays(sigma: &Cone, tau: &Cone) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    match (sigma, tau) {
        (Cone::Ray(g), _) => {
            if tau.contains(*g) {
                out.push(*g);
            }
        }
        (_, Cone::Ray(h)) => {
            if sigma.contains(*h) {
                out.push(*h);
            }
        }
        (Cone::Sector(g1, g2), Cone::Sector(h1, h2)) => {
            let n_sigma = cross3(*g1, *g2);
            let n_tau = cross3(*h1, *h2);
            let line = cross3(n_sigma, n_tau);
            if line == [0, 0, 0] {
                // same plane: the intersection's extreme rays are among
                // the four boundary rays
                for g in [*g1, *g2, *h1, *h2] {
                    if sigma.contains(g) && tau.contains(g) {
                        out.push(g);
                    }
                }
            } else {
                // transverse planes: the intersection lies on their
                // common line
                let dir = primitive(&line).expect("nonzero");
                let dir = [dir[0], dir[1], dir[2]];
                let neg = [-dir[0], -dir[1], -dir[2]];
                if sigma.contains(dir) && tau.contains(dir) {
                    out.push(dir);
                }
                if sigma.contains(neg) && tau.contains(neg) {
                    out.push(neg);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra(points: &[[i64; 3]]) -> DirectionGeometry {
        let np = NewtonPolytope3::from_points(points).unwrap();
        DirectionGeometry::cone_complex_of(&np)
    }

    fn four_dot() -> DirectionGeometry {
        tetra(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    fn four_dot_mirror() -> DirectionGeometry {
        tetra(&[[0, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    #[test]
    fn tetrahedron_complex_shape() {
        if let DirectionGeometry::ConeComplex(cones) = four_dot() {
            let rays = cones.iter().filter(|c| matches!(c, Cone::Ray(_))).count();
            let sectors = cones
                .iter()
                .filter(|c| matches!(c, Cone::Sector(..)))
                .count();
            assert_eq!(rays, 4);
            assert_eq!(sectors, 6);
        } else {
            panic!("expected cone complex");
        }
    }

    #[test]
    fn e1_membership_distinguishes_mirror_pair() {
        let a1 = four_dot();
        let a2 = four_dot_mirror();
        assert!(!a1.contains(&[1, 0, 0]).unwrap());
        assert!(a2.contains(&[1, 0, 0]).unwrap());
    }

    #[test]
    fn finite_membership_scale_invariance() {
        let g = DirectionGeometry::finite(vec![[0, -1], [-1, 0], [1, 1]]);
        assert!(g.contains(&[2, 2]).unwrap());
        assert!(g.contains(&[7, 7]).unwrap());
        assert!(!g.contains(&[-1, -1]).unwrap());
        assert!(!g.contains(&[0, 1]).unwrap());
        assert_eq!(g.contains(&[0, 0]), Err(PolytopeError::ZeroVector));
    }

    #[test]
    fn sector_membership_interior_and_boundary() {
        let c = Cone::Sector([1, 0, 0], [0, 1, 0]);
        assert!(c.contains([1, 1, 0]));
        assert!(c.contains([3, 1, 0]));
        assert!(c.contains([1, 0, 0]));
        assert!(!c.contains([-1, 1, 0]));
        assert!(!c.contains([1, 1, 1]));
        assert!(!c.contains([-1, 0, 0]));
    }

    #[test]
    fn witness_for_mirror_pair_is_e1() {
        let a1 = four_dot();
        let a2 = four_dot_mirror();
        let w = geometry_difference_witness(&a2, &a1).unwrap();
        assert_eq!(w, Some(vec![1, 0, 0]));
    }

    #[test]
    fn witness_for_plane_pair() {
        let a = DirectionGeometry::finite(vec![[0, -1], [-1, 0], [1, 1]]);
        let b = DirectionGeometry::finite(vec![[0, 1], [-1, 0], [1, -1]]);
        let w = geometry_difference_witness(&a, &b).unwrap();
        assert_eq!(w, Some(vec![1, 1]));
    }

    #[test]
    fn equal_geometries_have_no_witness() {
        let a = four_dot();
        assert_eq!(geometry_difference_witness(&a, &a.clone()).unwrap(), None);
    }

    #[test]
    fn kind_mismatch_rejected() {
        let a = four_dot();
        let b = DirectionGeometry::finite(vec![[1, 0]]);
        assert_eq!(
            geometry_difference_witness(&a, &b),
            Err(PolytopeError::KindMismatch)
        );
    }
}
