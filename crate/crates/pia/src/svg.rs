//! Minimal SVG rendering of a polygon, its inscribed circle and optionally
//! the nodes a solver evaluated.

use crate::geometry::{bounding_box, Point, Polygon};

/// Renders the polygon and result circle, plus one small square per entry of
/// `nodes`. The viewport is the polygon bounding box padded by 5%; the y axis
/// is flipped so the drawing matches mathematical orientation. The output
/// contains exactly one `<circle>` and one `<polygon>` element.
pub fn render(poly: &Polygon, center: Point, radius: f64, nodes: &[Point]) -> String {
    let bbox = bounding_box(poly);
    let pad = 0.05 * bbox.width().max(bbox.height());
    let min_x = bbox.min_x - pad;
    let width = bbox.width() + 2.0 * pad;
    let height = bbox.height() + 2.0 * pad;
    // Flip y: SVG's y axis points down.
    let min_y = -(bbox.max_y + pad);
    let stroke = 0.004 * width.max(height);
    let dot = 1.5 * stroke;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{min_x} {min_y} {width} {height}\">\n"
    ));
    let points: Vec<String> = poly
        .vertices()
        .iter()
        .map(|p| format!("{},{}", p.x, -p.y))
        .collect();
    out.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n",
        points.join(" ")
    ));
    for n in nodes {
        out.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"{dot}\" height=\"{dot}\" fill=\"steelblue\"/>\n",
            n.x - 0.5 * dot,
            -n.y - 0.5 * dot
        ));
    }
    out.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"none\" stroke=\"crimson\" \
         stroke-width=\"{stroke}\"/>\n",
        center.x, -center.y
    ));
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_circle_one_polygon() {
        let sq = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let svg = render(&sq, Point::new(0.5, 0.5), 0.5, &[Point::new(0.2, 0.2)]);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
