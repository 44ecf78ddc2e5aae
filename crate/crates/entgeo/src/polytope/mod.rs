//! Newton polytopes and the geometry of non-expansive directions.
//!
//! For a nonzero Laurent polynomial the Newton polytope is the convex hull
//! of its support. For a principal system mod a prime this polytope
//! determines where half-space entropy can live: in the plane, exactly the
//! outward edge normals carry entropy; in dimension three the non-expansive
//! set is the 1-skeleton of the spherical dual, a finite complex of
//! rational cones spanned by face normals.

pub(crate) mod geom;

mod cones;
mod hull3;
mod svg;

pub use cones::{geometry_difference_witness, Cone, DirectionGeometry};
pub use svg::polygon_svg;

use crate::entropy::EntropyValue;
use crate::laurent::LaurentPoly;
use crate::shiftsys::Presentation;
use geom::{convex_hull_2d, gcd_i64, primitive};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("unsupported dimension {0} (expected 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("degenerate Newton polytope (affine dimension {affine_dim} in ambient dimension {ambient})")]
    Degenerate { ambient: usize, affine_dim: usize },
    #[error("operation requires a principal presentation")]
    NotPrincipal,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("monomial relation defines trivial dynamics")]
    MonomialRelation,
    #[error("direction geometries have different kinds")]
    KindMismatch,
    #[error("the zero vector is not a direction")]
    ZeroVector,
    #[error("direction has {got} coordinates, geometry lives in dimension {expected}")]
    BadVector { expected: usize, got: usize },
}

/// An edge of a Newton polygon with its primitive outward normal and its
/// lattice length (one less than the number of lattice points on it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge2 {
    pub from: [i64; 2],
    pub to: [i64; 2],
    pub normal: [i64; 2],
    pub lattice_length: u64,
}

/// Newton polygon of a bivariate Laurent polynomial.
///
/// `vertices` is the counterclockwise minimal vertex cycle; a point has one
/// vertex and no edges, a segment two vertices and both oriented edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<[i64; 2]>,
    edges: Vec<Edge2>,
}

impl NewtonPolygon {
    pub fn from_points(points: &[[i64; 2]]) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::ZeroPolynomial);
        }
        let hull = convex_hull_2d(points);
        let edges = match hull.len() {
            1 => Vec::new(),
            _ => {
                let k = hull.len();
                (0..k)
                    .map(|i| {
                        let a = hull[i];
                        let b = hull[(i + 1) % k];
                        edge_between(a, b)
                    })
                    .collect()
            }
        };
        Ok(NewtonPolygon {
            vertices: hull,
            edges,
        })
    }

    pub fn vertices(&self) -> &[[i64; 2]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge2] {
        &self.edges
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn affine_dim(&self) -> usize {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Primitive outward edge normals.
    pub fn normals(&self) -> Vec<[i64; 2]> {
        self.edges.iter().map(|e| e.normal).collect()
    }
}

fn edge_between(a: [i64; 2], b: [i64; 2]) -> Edge2 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let g = gcd_i64(d[0], d[1]);
    // outward normal of a CCW edge is the clockwise rotation of its direction
    let normal = [d[1] / g, -d[0] / g];
    Edge2 {
        from: a,
        to: b,
        normal,
        lattice_length: g as u64,
    }
}

pub use hull3::{Edge3, Face3, NewtonPolytope3};

/// Newton polytope of a Laurent polynomial in 2 or 3 variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NewtonPolytope {
    Dim2(NewtonPolygon),
    Dim3(NewtonPolytope3),
}

/// Convex hull of the support with primitive outward normals and lattice
/// lengths attached to the faces.
pub fn newton_polytope(f: &LaurentPoly) -> Result<NewtonPolytope, PolytopeError> {
    if f.is_zero() {
        return Err(PolytopeError::ZeroPolynomial);
    }
    match f.dim() {
        2 => {
            let pts: Vec<[i64; 2]> = f.support().iter().map(|e| [e[0], e[1]]).collect();
            Ok(NewtonPolytope::Dim2(NewtonPolygon::from_points(&pts)?))
        }
        3 => {
            let pts: Vec<[i64; 3]> = f.support().iter().map(|e| [e[0], e[1], e[2]]).collect();
            Ok(NewtonPolytope::Dim3(NewtonPolytope3::from_points(&pts)?))
        }
        d => Err(PolytopeError::UnsupportedDimension(d)),
    }
}

/// The non-expansive direction set `N(alpha)` of a principal system:
/// the outward edge normals of the Newton polygon when `d = 2`, the
/// 1-skeleton of the spherical dual of the Newton polytope when `d = 3`.
///
/// Higher-block recodings inherit the geometry of their base system.
/// Degenerate polytopes are rejected: they fall outside the rank/co-rank
/// hypotheses this geometry describes.
pub fn nonexpansive_set(pres: &Presentation) -> Result<DirectionGeometry, PolytopeError> {
    let (p, f) = pres
        .principal_data()
        .ok_or(PolytopeError::NotPrincipal)?;
    if !crate::laurent::is_prime(p) {
        return Err(PolytopeError::CompositeModulus(p));
    }
    if f.is_monomial() {
        return Err(PolytopeError::MonomialRelation);
    }
    match f.dim() {
        2 => {
            let np = match newton_polytope(f)? {
                NewtonPolytope::Dim2(np) => np,
                _ => unreachable!(),
            };
            if np.affine_dim() < 2 {
                return Err(PolytopeError::Degenerate {
                    ambient: 2,
                    affine_dim: np.affine_dim(),
                });
            }
            Ok(DirectionGeometry::finite(np.normals()))
        }
        3 => {
            let np = match newton_polytope(f)? {
                NewtonPolytope::Dim3(np) => np,
                _ => unreachable!(),
            };
            if np.affine_dim() < 3 {
                return Err(PolytopeError::Degenerate {
                    ambient: 3,
                    affine_dim: np.affine_dim(),
                });
            }
            Ok(DirectionGeometry::cone_complex_of(&np))
        }
        d => Err(PolytopeError::UnsupportedDimension(d)),
    }
}

/// Half-space entropy weights of a nondegenerate Newton polygon mod a
/// prime: each outward edge normal carries `lattice_length * log p`,
/// directions absent from the map carry zero.
pub fn edge_entropy_weights(
    np: &NewtonPolygon,
    p: u64,
) -> Result<BTreeMap<[i64; 2], EntropyValue>, PolytopeError> {
    if np.affine_dim() < 2 {
        return Err(PolytopeError::Degenerate {
            ambient: 2,
            affine_dim: np.affine_dim(),
        });
    }
    if !crate::laurent::is_prime(p) {
        return Err(PolytopeError::CompositeModulus(p));
    }
    Ok(np
        .edges
        .iter()
        .map(|e| (e.normal, EntropyValue::new(e.lattice_length as i64, 1, p)))
        .collect())
}

/// Normalize a direction vector to primitive form, rejecting zero.
pub fn primitive_direction(v: &[i64]) -> Result<Vec<i64>, PolytopeError> {
    primitive(v).ok_or(PolytopeError::ZeroVector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;

    fn poly(text: &str, dim: usize, q: u64) -> LaurentPoly {
        parse_poly(text, dim, q).unwrap()
    }

    fn polygon(text: &str) -> NewtonPolygon {
        match newton_polytope(&poly(text, 2, 2)).unwrap() {
            NewtonPolytope::Dim2(np) => np,
            _ => unreachable!(),
        }
    }

    #[test]
    fn three_dot_triangle() {
        let np = polygon("1 + u1 + u2");
        assert_eq!(np.vertices(), &[[0, 0], [1, 0], [0, 1]]);
        let mut normals = np.normals();
        normals.sort();
        assert_eq!(normals, vec![[-1, 0], [0, -1], [1, 1]]);
        assert!(np.edges().iter().all(|e| e.lattice_length == 1));
    }

    #[test]
    fn product_pentagon_matches_figure() {
        let f = poly("1 + u1 + u2", 2, 2)
            .mul(&poly("1 + u1 + u2^-1", 2, 2))
            .unwrap();
        let np = match newton_polytope(&f).unwrap() {
            NewtonPolytope::Dim2(np) => np,
            _ => unreachable!(),
        };
        let mut vertices = np.vertices().to_vec();
        vertices.sort();
        let mut expected = vec![[0, -1], [1, -1], [2, 0], [1, 1], [0, 1]];
        expected.sort();
        assert_eq!(vertices, expected);
        // the left edge from (0,1) to (0,-1) has lattice length 2
        let left = np
            .edges()
            .iter()
            .find(|e| e.normal == [-1, 0])
            .expect("left edge");
        assert_eq!(left.lattice_length, 2);
    }

    #[test]
    fn monomial_degenerates_to_point() {
        let np = polygon("u1^3u2");
        assert_eq!(np.vertices(), &[[3, 1]]);
        assert!(np.edges().is_empty());
        assert_eq!(np.affine_dim(), 0);
    }

    #[test]
    fn segment_has_two_oriented_edges() {
        let np = polygon("1 + u1^2");
        assert_eq!(np.affine_dim(), 1);
        assert_eq!(np.edges().len(), 2);
        let mut normals = np.normals();
        normals.sort();
        assert_eq!(normals, vec![[0, -1], [0, 1]]);
        assert!(np.edges().iter().all(|e| e.lattice_length == 2));
    }

    #[test]
    fn weights_for_three_dot() {
        let np = polygon("1 + u1 + u2");
        let w = edge_entropy_weights(&np, 2).unwrap();
        assert_eq!(w.len(), 3);
        for (_, v) in &w {
            assert_eq!(v.coeff_num(), 1);
        }
        assert!(w.contains_key(&[1, 1]));
    }

    #[test]
    fn weights_reject_degenerate() {
        let np = polygon("u1");
        assert!(matches!(
            edge_entropy_weights(&np, 2),
            Err(PolytopeError::Degenerate { .. })
        ));
    }
}
