//! Flat SVG rendering of a Newton polygon with lattice dots and outward
//! normal arrows.

use super::NewtonPolygon;
use std::fmt::Write;

const SCALE: f64 = 40.0;
const PAD: f64 = 60.0;

/// Render the polygon as a standalone SVG 1.1 document.
pub fn polygon_svg(np: &NewtonPolygon, title: &str) -> String {
    let vs = np.vertices();
    let min_x = vs.iter().map(|p| p[0]).min().unwrap_or(0) - 1;
    let max_x = vs.iter().map(|p| p[0]).max().unwrap_or(0) + 1;
    let min_y = vs.iter().map(|p| p[1]).min().unwrap_or(0) - 1;
    let max_y = vs.iter().map(|p| p[1]).max().unwrap_or(0) + 1;
    let width = (max_x - min_x) as f64 * SCALE + 2.0 * PAD;
    let height = (max_y - min_y) as f64 * SCALE + 2.0 * PAD;
    // lattice y grows upward, SVG y grows downward
    let tx = |x: i64| PAD + (x - min_x) as f64 * SCALE;
    let ty = |y: i64| height - PAD - (y - min_y) as f64 * SCALE;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    );
    let _ = writeln!(out, "  <title>{}</title>", xml_escape(title));
    let _ = writeln!(
        out,
        "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>"
    );
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let _ = writeln!(
                out,
                "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"1.5\" fill=\"#bbbbbb\"/>",
                tx(x),
                ty(y)
            );
        }
    }
    if vs.len() >= 2 {
        let pts: Vec<String> = vs
            .iter()
            .map(|p| format!("{:.1},{:.1}", tx(p[0]), ty(p[1])))
            .collect();
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"#dce8f7\" stroke=\"#333333\" stroke-width=\"2\"/>",
            pts.join(" ")
        );
    }
    for p in vs {
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"#111111\"/>",
            tx(p[0]),
            ty(p[1])
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" fill=\"#111111\">({}, {})</text>",
            tx(p[0]) + 6.0,
            ty(p[1]) + 14.0,
            p[0],
            p[1]
        );
    }
    for e in np.edges() {
        // arrow from the edge midpoint along the outward normal
        let mx = (tx(e.from[0]) + tx(e.to[0])) / 2.0;
        let my = (ty(e.from[1]) + ty(e.to[1])) / 2.0;
        let n = [e.normal[0] as f64, e.normal[1] as f64];
        let len = (n[0] * n[0] + n[1] * n[1]).sqrt();
        let (ux, uy) = (n[0] / len, -n[1] / len);
        let (hx, hy) = (mx + ux * 28.0, my + uy * 28.0);
        let _ = writeln!(
            out,
            "  <line x1=\"{mx:.1}\" y1=\"{my:.1}\" x2=\"{hx:.1}\" y2=\"{hy:.1}\" stroke=\"#c03030\" stroke-width=\"2\"/>"
        );
        // arrow head
        let (bx, by) = (hx - ux * 8.0, hy - uy * 8.0);
        let (px, py) = (-uy, ux);
        let _ = writeln!(
            out,
            "  <polygon points=\"{hx:.1},{hy:.1} {:.1},{:.1} {:.1},{:.1}\" fill=\"#c03030\"/>",
            bx + px * 4.0,
            by + py * 4.0,
            bx - px * 4.0,
            by - py * 4.0
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" fill=\"#c03030\">({}, {}) x{}</text>",
            hx + ux * 6.0,
            hy + uy * 6.0,
            e.normal[0],
            e.normal[1],
            e.lattice_length
        );
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_contains_polygon_and_arrows() {
        let np = NewtonPolygon::from_points(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let svg = polygon_svg(&np, "triangle");
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polygon points="));
        assert_eq!(svg.matches("<line").count(), 3);
        assert!(svg.contains("(1, 1) x1"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn point_polytope_renders_without_edges() {
        let np = NewtonPolygon::from_points(&[[2, 3]]).unwrap();
        let svg = polygon_svg(&np, "point");
        assert!(!svg.contains("<line"));
        assert!(svg.contains("(2, 3)"));
    }
}
