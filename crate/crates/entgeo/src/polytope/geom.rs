//! Low-level exact integer geometry shared across the crate.

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |acc, x| gcd_i64(acc, *x))
}

/// Divide by the gcd of the entries, keeping the direction.
/// Returns `None` for the zero vector.
pub(crate) fn primitive(v: &[i64]) -> Option<Vec<i64>> {
    let g = gcd_all(v);
    if g == 0 {
        return None;
    }
    Some(v.iter().map(|x| x / g).collect())
}

/// Cross product of `b - a` and `c - a`; positive when `c` lies to the
/// left of the ray `a -> b`.
pub(crate) fn cross2(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ac = [c[0] - a[0], c[1] - a[1]];
    ab[0] * ac[1] - ab[1] * ac[0]
}

/// Convex hull in counterclockwise order with collinear points dropped.
///
/// A single point yields one vertex; collinear input yields the two
/// extreme endpoints.
pub(crate) fn convex_hull_2d(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts: Vec<[i64; 2]> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 1 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross2(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross2(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// All lattice points inside or on the hull (given as a CCW vertex cycle;
/// also accepts a point or a segment).
pub(crate) fn lattice_points_in_hull(hull: &[[i64; 2]]) -> Vec<[i64; 2]> {
    match hull.len() {
        0 => Vec::new(),
        1 => vec![hull[0]],
        2 => {
            let a = hull[0];
            let b = hull[1];
            let d = [b[0] - a[0], b[1] - a[1]];
            let g = gcd_i64(d[0], d[1]);
            let step = [d[0] / g, d[1] / g];
            (0..=g)
                .map(|j| [a[0] + j * step[0], a[1] + j * step[1]])
                .collect()
        }
        _ => {
            let min_x = hull.iter().map(|p| p[0]).min().unwrap();
            let max_x = hull.iter().map(|p| p[0]).max().unwrap();
            let min_y = hull.iter().map(|p| p[1]).min().unwrap();
            let max_y = hull.iter().map(|p| p[1]).max().unwrap();
            let mut out = Vec::new();
            for x in min_x..=max_x {
                for y in min_y..=max_y {
                    let p = [x, y];
                    let inside = (0..hull.len()).all(|i| {
                        let a = hull[i];
                        let b = hull[(i + 1) % hull.len()];
                        cross2(a, b, p) >= 0
                    });
                    if inside {
                        out.push(p);
                    }
                }
            }
            out
        }
    }
}

/// 3D cross product.
pub(crate) fn cross3(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn dot3(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn sub3(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
