//! SVG 1.1 rendering of points and boxes.
//!
//! The drawing is scaled to fit a fixed canvas with the y axis pointing up.
//! Covered points are filled dots, outliers hollow circles.

use std::fmt::Write;

use boxcover::{AxisBox64, Point64};

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 20.0;

pub fn render(points: &[Point64], boxes: &[AxisBox64], outliers: &[usize]) -> String {
    let mut xs = points.iter().map(|p| p.x).chain(boxes.iter().flat_map(|b| [b.xmin, b.xmax]));
    let mut ys = points.iter().map(|p| p.y).chain(boxes.iter().flat_map(|b| [b.ymin, b.ymax]));
    let first_x = xs.next();
    let first_y = ys.next();
    let (x0, x1) = xs.fold((first_x.unwrap_or(0.0), first_x.unwrap_or(1.0)), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let (y0, y1) = ys.fold((first_y.unwrap_or(0.0), first_y.unwrap_or(1.0)), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let extent = (x1 - x0).max(y1 - y0);
    let scale = if extent > 0.0 {
        (CANVAS - 2.0 * MARGIN) / extent
    } else {
        1.0
    };
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| CANVAS - MARGIN - (y - y0) * scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    );
    for b in boxes {
        let _ = writeln!(
            out,
            "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>",
            sx(b.xmin),
            sy(b.ymax),
            (b.xmax - b.xmin) * scale,
            (b.ymax - b.ymin) * scale
        );
    }
    let mut outlier = vec![false; points.len()];
    for &id in outliers {
        if let Some(slot) = outlier.get_mut(id) {
            *slot = true;
        }
    }
    for (p, &out_p) in points.iter().zip(&outlier) {
        let fill = if out_p { "none" } else { "black" };
        let _ = writeln!(
            out,
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\" fill=\"{fill}\" stroke=\"black\"/>",
            sx(p.x),
            sy(p.y)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use boxcover::Shape;

    #[test]
    fn counts_elements() {
        let pts = Point64::from_coords(&[(0.0, 0.0), (1.0, 1.0), (10.0, 0.0), (12.0, 2.0)]);
        let boxes = [
            AxisBox64::new(0.0, 0.0, 1.0, 1.0, Shape::Square),
            AxisBox64::new(10.0, 0.0, 12.0, 2.0, Shape::Square),
        ];
        let svg = render(&pts, &boxes, &[]);
        assert_eq!(svg.matches("<rect").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg, render(&pts, &boxes, &[]));
        let hollow = render(&pts, &[], &[3]);
        assert_eq!(hollow.matches("fill=\"none\" stroke=\"black\"").count(), 1);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(render(&[], &[], &[]).contains("</svg>"));
        let one = Point64::from_coords(&[(5.0, 5.0)]);
        assert!(!render(&one, &[], &[]).contains("NaN"));
    }
}
