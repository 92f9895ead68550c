//! SVG rendering of a drawing. The longest bounding-box side maps to 1024
//! user units; labels carry the original integer coordinates and lengths.

use crate::embed::Drawing;
use std::fmt::Write;

pub const CANVAS: f64 = 1024.0;
const MARGIN: f64 = 32.0;
/// Grid lines are drawn only when there are at most this many per axis.
const MAX_GRID_LINES: u64 = 128;

pub fn render_svg(d: &Drawing) -> String {
    let b = d.bbox();
    let side = b.max_side().max(1) as f64;
    let scale = CANVAS / side;
    let w = b.width() as f64 * scale + 2.0 * MARGIN;
    let h = b.height() as f64 * scale + 2.0 * MARGIN;
    // y grows upwards in the drawing and downwards in SVG.
    let tx = |x: i64| (x - b.xmin) as f64 * scale + MARGIN;
    let ty = |y: i64| (b.ymax - y) as f64 * scale + MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let step = (b.max_side().div_ceil(MAX_GRID_LINES)).max(1);
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="0.5">"##);
    let first = |lo: i64| lo.div_euclid(step as i64) * step as i64;
    let mut x = first(b.xmin);
    while x <= b.xmax {
        if x >= b.xmin {
            let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, tx(x), ty(b.ymin), tx(x), ty(b.ymax));
        }
        x += step as i64;
    }
    let mut y = first(b.ymin);
    while y <= b.ymax {
        if y >= b.ymin {
            let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, tx(b.xmin), ty(y), tx(b.xmax), ty(y));
        }
        y += step as i64;
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#);
    for e in &d.edges {
        let (p, q) = (d.positions[e.u], d.positions[e.v]);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, tx(p.x), ty(p.y), tx(q.x), ty(q.y));
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g font-family="monospace" font-size="10" fill="#b03030" text-anchor="middle">"##);
    for e in &d.edges {
        let (p, q) = (d.positions[e.u], d.positions[e.v]);
        let (mx, my) = ((tx(p.x) + tx(q.x)) / 2.0, (ty(p.y) + ty(q.y)) / 2.0);
        let _ = writeln!(s, r#"<text x="{mx:.2}" y="{:.2}">{}</text>"#, my - 3.0, e.length);
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g font-family="monospace" font-size="9" fill="#304080">"##);
    for (v, p) in d.positions.iter().enumerate() {
        let (cx, cy) = (tx(p.x), ty(p.y));
        let _ = writeln!(s, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3"><title>{v} ({}, {})</title></circle>"#, p.x, p.y);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{v} ({},{})</text>"#, cx + 4.0, cy + 11.0, p.x, p.y);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::embed_tree;
    use crate::graph::InputGraph;

    #[test]
    fn path_svg() {
        let g = InputGraph::new(3, vec![(0, 1), (1, 2)]).unwrap().with_root(0).unwrap();
        let s = render_svg(&embed_tree(&g).unwrap());
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<circle").count(), 3);
        assert!(s.contains(">5</text>"));
        assert!(s.contains("2 (6,8)"));
        // the longest side (8) spans the canvas
        assert!(s.contains(&format!("{:.2}", CANVAS + MARGIN)));
    }

    #[test]
    fn single_vertex_svg() {
        let g = InputGraph::new(1, vec![]).unwrap();
        let s = render_svg(&embed_tree(&g).unwrap());
        assert_eq!(s.matches("<circle").count(), 1);
    }
}
