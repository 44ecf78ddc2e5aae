//! Exact 3D convex hulls of small integer point sets by supporting-plane
//! enumeration. Inputs here are polynomial supports with a handful of
//! points, so the cubic triple scan is the simple and robust choice.

use super::geom::{convex_hull_2d, cross3, dot3, gcd_all, primitive, sub3};
use super::PolytopeError;
use std::collections::BTreeMap;

/// A 2-face with its primitive outward normal and counterclockwise vertex
/// cycle (as seen from outside).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face3 {
    pub normal: [i64; 3],
    pub cycle: Vec<usize>,
}

/// An edge with its endpoints, the two incident faces, and its lattice
/// length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge3 {
    pub endpoints: [usize; 2],
    pub faces: [usize; 2],
    pub lattice_length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolytope3 {
    vertices: Vec<[i64; 3]>,
    edges: Vec<Edge3>,
    faces: Vec<Face3>,
    affine_dim: usize,
}

impl NewtonPolytope3 {
    pub fn from_points(points: &[[i64; 3]]) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::ZeroPolynomial);
        }
        let mut pts: Vec<[i64; 3]> = points.to_vec();
        pts.sort();
        pts.dedup();
        let affine_dim = affine_dimension(&pts);
        if affine_dim < 3 {
            // degenerate: record extreme points only; the face structure
            // used downstream requires full dimension
            let vertices = degenerate_vertices(&pts, affine_dim);
            return Ok(NewtonPolytope3 {
                vertices,
                edges: Vec::new(),
                faces: Vec::new(),
                affine_dim,
            });
        }

        // enumerate supporting planes through point triples
        let mut planes: BTreeMap<[i64; 3], i64> = BTreeMap::new();
        let n = pts.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let normal = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]));
                    let Some(normal) = primitive(&normal) else {
                        continue;
                    };
                    let normal = [normal[0], normal[1], normal[2]];
                    let c = dot3(normal, pts[i]);
                    let mut all_le = true;
                    let mut all_ge = true;
                    for p in &pts {
                        let d = dot3(normal, *p);
                        all_le &= d <= c;
                        all_ge &= d >= c;
                    }
                    if all_le {
                        planes.insert(normal, c);
                    } else if all_ge {
                        planes.insert([-normal[0], -normal[1], -normal[2]], -c);
                    }
                }
            }
        }

        // face cycles and the vertex set
        let mut vertices: Vec<[i64; 3]> = Vec::new();
        let mut vertex_index: BTreeMap<[i64; 3], usize> = BTreeMap::new();
        let mut faces: Vec<Face3> = Vec::new();
        for (normal, c) in planes {
            let on_face: Vec<[i64; 3]> = pts
                .iter()
                .copied()
                .filter(|p| dot3(normal, *p) == c)
                .collect();
            let cycle_pts = face_cycle(&on_face, normal);
            let cycle: Vec<usize> = cycle_pts
                .into_iter()
                .map(|p| {
                    *vertex_index.entry(p).or_insert_with(|| {
                        vertices.push(p);
                        vertices.len() - 1
                    })
                })
                .collect();
            faces.push(Face3 { normal, cycle });
        }

        // edges from consecutive face-cycle pairs; every edge of a
        // full-dimensional polytope lies on exactly two faces
        let mut edge_faces: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            let k = face.cycle.len();
            for t in 0..k {
                let a = face.cycle[t];
                let b = face.cycle[(t + 1) % k];
                let key = [a.min(b), a.max(b)];
                edge_faces.entry(key).or_default().push(fi);
            }
        }
        let mut edges = Vec::new();
        for (endpoints, incident) in edge_faces {
            debug_assert_eq!(incident.len(), 2, "edge on {} faces", incident.len());
            let d = sub3(vertices[endpoints[1]], vertices[endpoints[0]]);
            edges.push(Edge3 {
                endpoints,
                faces: [incident[0], incident[1]],
                lattice_length: gcd_all(&d) as u64,
            });
        }

        Ok(NewtonPolytope3 {
            vertices,
            edges,
            faces,
            affine_dim,
        })
    }

    pub fn vertices(&self) -> &[[i64; 3]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge3] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face3] {
        &self.faces
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }
}

fn affine_dimension(pts: &[[i64; 3]]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = pts[0];
    let mut first_dir: Option<[i64; 3]> = None;
    let mut plane_normal: Option<[i64; 3]> = None;
    for p in &pts[1..] {
        let d = sub3(*p, base);
        if d == [0, 0, 0] {
            continue;
        }
        match (first_dir, plane_normal) {
            (None, _) => first_dir = Some(d),
            (Some(u), None) => {
                let n = cross3(u, d);
                if n != [0, 0, 0] {
                    plane_normal = Some(n);
                }
            }
            (Some(_), Some(n)) => {
                if dot3(n, d) != 0 {
                    return 3;
                }
            }
        }
    }
    match (first_dir, plane_normal) {
        (None, _) => 0,
        (Some(_), None) => 1,
        (Some(_), Some(_)) => 2,
    }
}

fn degenerate_vertices(pts: &[[i64; 3]], affine_dim: usize) -> Vec<[i64; 3]> {
    match affine_dim {
        0 => vec![pts[0]],
        1 => {
            // extremes along the carrier line
            let base = pts[0];
            let dir = pts
                .iter()
                .find_map(|p| {
                    let d = sub3(*p, base);
                    (d != [0, 0, 0]).then_some(d)
                })
                .expect("dimension 1");
            let lo = pts.iter().min_by_key(|p| dot3(sub3(**p, base), dir)).unwrap();
            let hi = pts.iter().max_by_key(|p| dot3(sub3(**p, base), dir)).unwrap();
            vec![*lo, *hi]
        }
        _ => {
            // planar: take the 2D hull in a projection that keeps the
            // plane nondegenerate
            let base = pts[0];
            let mut normal = [0, 0, 0];
            'outer: for p in pts {
                for q in pts {
                    let n = cross3(sub3(*p, base), sub3(*q, base));
                    if n != [0, 0, 0] {
                        normal = n;
                        break 'outer;
                    }
                }
            }
            let drop = (0..3).max_by_key(|i| normal[*i].abs()).unwrap();
            let keep: Vec<usize> = (0..3).filter(|i| *i != drop).collect();
            let projected: Vec<[i64; 2]> =
                pts.iter().map(|p| [p[keep[0]], p[keep[1]]]).collect();
            let hull2 = convex_hull_2d(&projected);
            hull2
                .iter()
                .map(|q| {
                    *pts.iter()
                        .find(|p| [p[keep[0]], p[keep[1]]] == *q)
                        .expect("projected point")
                })
                .collect()
        }
    }
}

/// Order coplanar points into the counterclockwise boundary cycle of their
/// 2D hull, as seen from outside along `normal`.
fn face_cycle(on_face: &[[i64; 3]], normal: [i64; 3]) -> Vec<[i64; 3]> {
    let drop = (0..3).max_by_key(|i| normal[*i].abs()).unwrap();
    let keep: Vec<usize> = (0..3).filter(|i| *i != drop).collect();
    let projected: Vec<[i64; 2]> = on_face
        .iter()
        .map(|p| [p[keep[0]], p[keep[1]]])
        .collect();
    let hull2 = convex_hull_2d(&projected);
    let mut cycle: Vec<[i64; 3]> = hull2
        .iter()
        .map(|q| {
            *on_face
                .iter()
                .find(|p| [p[keep[0]], p[keep[1]]] == *q)
                .expect("projected point")
        })
        .collect();
    if cycle.len() >= 3 {
        let t = cross3(sub3(cycle[1], cycle[0]), sub3(cycle[2], cycle[0]));
        if dot3(t, normal) < 0 {
            cycle.reverse();
        }
    }
    cycle
}
