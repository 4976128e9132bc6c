//! Exact single-box solvers: the smallest square or rectangle covering all but
//! at most `j` points of a (small) point list. These are the base cases of
//! the split recursion.

use core::cmp::Ordering;

use crate::model::{AxisBox, Point, Shape};
use crate::preprocess::{axis_cmp, extreme_subset, Axis};
use crate::scalar::Coord;

/// Optimal single box for a point list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaseResult<T> {
    pub area: T,
    /// `None` when every point may be an outlier.
    pub bbox: Option<AxisBox<T>>,
    /// Points of the input list inside `bbox`.
    pub covered: usize,
    /// Tight bounding box of the covered input points.
    pub span: Option<AxisBox<T>>,
}

impl<T: Coord> BaseResult<T> {
    pub fn absent() -> Self {
        BaseResult {
            area: T::zero(),
            bbox: None,
            covered: 0,
            span: None,
        }
    }

    /// Side length of the box (the larger extent for rectangles).
    pub fn side(&self) -> T {
        self.bbox
            .map(|b| b.width().max_coord(b.height()))
            .unwrap_or_else(T::zero)
    }

    fn from_box(points: &[Point<T>], area: T, bbox: AxisBox<T>) -> Self {
        let inside: Vec<&Point<T>> = points.iter().filter(|p| bbox.contains(p)).collect();
        BaseResult {
            area,
            bbox: Some(bbox),
            covered: inside.len(),
            span: AxisBox::bounding(inside, bbox.shape),
        }
    }
}

pub fn solve_base<T: Coord>(shape: Shape, points: &[Point<T>], j: usize) -> BaseResult<T> {
    match shape {
        Shape::Square => solve_square_1k(points, j),
        Shape::Rect => solve_rect_1k(points, j),
    }
}

/// All pairwise coordinate differences (both axes), ascending and
/// deduplicated. Zero is always included for a non-empty input.
pub fn candidate_side_lengths<T: Coord>(points: &[Point<T>]) -> Vec<T> {
    let mut out = Vec::with_capacity(points.len() * points.len());
    for (i, a) in points.iter().enumerate() {
        for b in &points[i..] {
            out.push(abs_diff(a.x, b.x));
            out.push(abs_diff(a.y, b.y));
        }
    }
    out.sort_unstable_by(T::cmp_coord);
    out.dedup();
    out
}

#[inline]
fn abs_diff<T: Coord>(a: T, b: T) -> T {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Smallest axis-aligned square covering at least `|points| - j` points.
///
/// The search runs on the extreme points only (the optimum never depends on
/// the others). The optimal side is the larger extent of the covered set, a
/// coordinate difference, so binary search over the sorted differences with
/// a placement test finds it. The placement test only tries squares whose
/// bottom-left corner is `(x_a, y_b)` for point coordinates: any square of
/// side `s` covering a set `S` can be translated so that its bottom-left
/// corner is `(min x of S, min y of S)` and still covers `S`, because `s` is
/// at least the width and the height of `S`.
///
/// Among optimal squares the one with the lexicographically smallest corner
/// is returned.
pub fn solve_square_1k<T: Coord>(points: &[Point<T>], j: usize) -> BaseResult<T> {
    if j >= points.len() {
        return BaseResult::absent();
    }
    let ext = extreme_subset(points, j);
    let need = ext.len() - j;
    let sides = candidate_side_lengths(&ext);
    let mut by_x = ext.clone();
    by_x.sort_unstable_by(|a, b| axis_cmp(Axis::X, a, b));
    let mut by_y = ext;
    by_y.sort_unstable_by(|a, b| axis_cmp(Axis::Y, a, b));

    let placer = SquarePlacer {
        by_x: &by_x,
        by_y: &by_y,
        need,
    };
    // the largest difference always admits a square covering everything
    let (mut lo, mut hi) = (0, sides.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if placer.anchor(sides[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let side = sides[lo];
    let (ax, ay) = placer
        .anchor(side)
        .expect("largest candidate side always fits");

    // Extend by the covered extremes so rounding in `ax + side` never drops a
    // point that passed the difference test.
    let mut xmax = ax + side;
    let mut ymax = ay + side;
    for p in &by_y {
        if placer.fits(p, ax, ay, side) {
            xmax = xmax.max_coord(p.x);
            ymax = ymax.max_coord(p.y);
        }
    }
    let bbox = AxisBox::new(ax, ay, xmax, ymax, Shape::Square);
    BaseResult::from_box(points, side * side, bbox)
}

struct SquarePlacer<'a, T> {
    by_x: &'a [Point<T>],
    by_y: &'a [Point<T>],
    need: usize,
}

impl<T: Coord> SquarePlacer<'_, T> {
    #[inline]
    fn fits(&self, p: &Point<T>, ax: T, ay: T, side: T) -> bool {
        p.x >= ax && p.x - ax <= side && p.y >= ay && p.y - ay <= side
    }

    /// Lexicographically smallest corner `(x_a, y_b)` whose square of the
    /// given side covers at least `need` points.
    fn anchor(&self, side: T) -> Option<(T, T)> {
        let mut ys: Vec<T> = Vec::with_capacity(self.by_y.len());
        let mut prev: Option<T> = None;
        for a in self.by_x {
            if prev == Some(a.x) {
                continue;
            }
            prev = Some(a.x);
            ys.clear();
            ys.extend(
                self.by_y
                    .iter()
                    .filter(|p| p.x >= a.x && p.x - a.x <= side)
                    .map(|p| p.y),
            );
            if ys.len() < self.need {
                continue;
            }
            let mut hi = 0;
            for lo in 0..ys.len() {
                if lo > 0 && ys[lo] == ys[lo - 1] {
                    continue;
                }
                if ys.len() - lo < self.need {
                    break;
                }
                hi = hi.max(lo);
                while hi < ys.len() && ys[hi] - ys[lo] <= side {
                    hi += 1;
                }
                if hi - lo >= self.need {
                    return Some((a.x, ys[lo]));
                }
            }
        }
        None
    }
}

/// Smallest axis-aligned rectangle covering at least `|points| - j` points.
///
/// The optimal rectangle is the bounding box of the points it covers, so its
/// edges pass through points. With the `j + 1` leftmost, rightmost, lowest
/// and highest points in four sorted lists, every vertical slab is fixed by a
/// left edge from the left list and a right edge from the right list. The
/// points outside the slab are outliers; the remaining budget `r` is split
/// between points above and below, and the `r + 1` highest and lowest slab
/// points always come from the top and bottom lists. That gives `O(j)`
/// top/bottom pairs per slab and `O(j^3)` candidates overall.
///
/// Among optimal rectangles the lexicographically smallest
/// `(xmin, ymin, xmax, ymax)` is returned; it is always the bounding box of
/// the points it covers.
pub fn solve_rect_1k<T: Coord>(points: &[Point<T>], j: usize) -> BaseResult<T> {
    let n = points.len();
    if j >= n {
        return BaseResult::absent();
    }
    let ext = extreme_subset(points, j);
    let take = j + 1;
    let left = select(&ext, take, Axis::X, false);
    let right = select(&ext, take, Axis::X, true);
    let bottom = select(&ext, take, Axis::Y, false);
    let top = select(&ext, take, Axis::Y, true);

    let mut best: Option<(T, AxisBox<T>)> = None;
    let mut top_in: Vec<T> = Vec::with_capacity(take);
    let mut bottom_in: Vec<T> = Vec::with_capacity(take);
    for a in 0..left.len() {
        if a > 0 && left[a].x == left[a - 1].x {
            continue;
        }
        let xl = left[a].x;
        for b in 0..right.len() {
            if a + b > j {
                break;
            }
            if b > 0 && right[b].x == right[b - 1].x {
                continue;
            }
            let xr = right[b].x;
            if xl > xr {
                continue;
            }
            let budget = j - a - b;
            let in_slab = |p: &&Point<T>| p.x >= xl && p.x <= xr;
            top_in.clear();
            top_in.extend(top.iter().filter(in_slab).map(|p| p.y));
            bottom_in.clear();
            bottom_in.extend(bottom.iter().filter(in_slab).map(|p| p.y));
            for t in 0..=budget {
                let u = budget - t;
                if t >= top_in.len() || u >= bottom_in.len() {
                    continue;
                }
                let (yt, yb) = (top_in[t], bottom_in[u]);
                if yb > yt {
                    continue;
                }
                let area = (xr - xl) * (yt - yb);
                if let Some((best_area, _)) = best {
                    if area > best_area {
                        continue;
                    }
                }
                let cand = AxisBox::new(xl, yb, xr, yt, Shape::Rect);
                let tight = AxisBox::bounding(ext.iter().filter(|p| cand.contains(p)), Shape::Rect)
                    .expect("slab keeps at least one point");
                let tight_area = tight.area();
                let better = match &best {
                    None => true,
                    Some((ba, bb)) => match tight_area.cmp_coord(ba) {
                        Ordering::Less => true,
                        Ordering::Equal => lex_cmp(&tight, bb) == Ordering::Less,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((tight_area, tight));
                }
            }
        }
    }
    let (area, bbox) = best.expect("the full bounding box is always a candidate");
    BaseResult::from_box(points, area, bbox)
}

/// The `take` smallest points along `axis` (largest when `reverse`), most
/// extreme first, by linear-time selection followed by a small sort.
fn select<T: Coord>(points: &[Point<T>], take: usize, axis: Axis, reverse: bool) -> Vec<Point<T>> {
    let cmp = |a: &Point<T>, b: &Point<T>| {
        let o = axis_cmp(axis, a, b);
        if reverse {
            o.reverse()
        } else {
            o
        }
    };
    let mut v = points.to_vec();
    let take = take.min(v.len());
    if take < v.len() && take > 0 {
        v.select_nth_unstable_by(take - 1, cmp);
    }
    v.truncate(take);
    v.sort_unstable_by(cmp);
    v
}

pub(crate) fn lex_cmp<T: Coord>(a: &AxisBox<T>, b: &AxisBox<T>) -> Ordering {
    a.xmin
        .cmp_coord(&b.xmin)
        .then_with(|| a.ymin.cmp_coord(&b.ymin))
        .then_with(|| a.xmax.cmp_coord(&b.xmax))
        .then_with(|| a.ymax.cmp_coord(&b.ymax))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(f64, f64)]) -> Vec<Point<f64>> {
        Point::from_coords(coords)
    }

    /// Every square with a corner at point coordinates and a side from the
    /// candidate list; smallest side covering enough points.
    fn brute_square(points: &[Point<f64>], j: usize) -> f64 {
        if j >= points.len() {
            return 0.0;
        }
        let need = points.len() - j;
        let mut best = f64::INFINITY;
        for a in points {
            for b in points {
                for c in points {
                    for d in points {
                        let s = (c.x - a.x).abs().max((d.y - b.y).abs());
                        let count = points
                            .iter()
                            .filter(|p| p.x >= a.x && p.x - a.x <= s && p.y >= b.y && p.y - b.y <= s)
                            .count();
                        if count >= need {
                            best = best.min(s * s);
                        }
                    }
                }
            }
        }
        best
    }

    fn brute_rect(points: &[Point<f64>], j: usize) -> f64 {
        let n = points.len();
        if j >= n {
            return 0.0;
        }
        // every subset of exclusions of size j
        let mut best = f64::INFINITY;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != n - j {
                continue;
            }
            let kept: Vec<&Point<f64>> =
                (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &points[i]).collect();
            let b = AxisBox::bounding(kept, Shape::Rect).unwrap();
            best = best.min(b.area());
        }
        best
    }

    #[test]
    fn square_examples() {
        let q = pts(&[(0., 0.), (1., 0.), (0., 1.), (1., 1.), (5., 5.)]);
        assert_eq!(brute_square(&q, 1), 1.0);
        let r = solve_square_1k(&q, 1);
        assert_eq!(r.area, 1.0);
        assert_eq!(r.bbox, Some(AxisBox::new(0., 0., 1., 1., Shape::Square)));
        assert_eq!(r.covered, 4);
        assert_eq!(solve_square_1k(&q, 0).area, 25.0);
        let r = solve_square_1k(&q, 4);
        assert_eq!(r.area, 0.0);
        assert_eq!(r.covered, 1);
        assert!(r.bbox.is_some());
        assert_eq!(solve_square_1k(&q, 5), BaseResult::absent());
    }

    #[test]
    fn rect_examples() {
        let q = pts(&[(0., 0.), (1., 5.), (2., 1.), (3., 4.), (10., 10.)]);
        assert_eq!(brute_rect(&q, 1), 15.0);
        let r = solve_rect_1k(&q, 1);
        assert_eq!(r.area, 15.0);
        assert_eq!(r.bbox, Some(AxisBox::new(0., 0., 3., 5., Shape::Rect)));
        let r = solve_rect_1k(&pts(&[(0., 0.), (4., 2.)]), 0);
        assert_eq!(r.area, 8.0);
        assert_eq!(r.bbox, Some(AxisBox::new(0., 0., 4., 2., Shape::Rect)));
        let r = solve_rect_1k(&pts(&[(3., 7.)]), 0);
        assert_eq!(r.area, 0.0);
        assert_eq!(r.covered, 1);
    }

    #[test]
    fn side_length_candidates() {
        assert_eq!(candidate_side_lengths(&pts(&[(0., 0.), (1., 1.)])), vec![0., 1.]);
        assert_eq!(
            candidate_side_lengths(&pts(&[(0., 0.), (2., 0.), (5., 0.)])),
            vec![0., 2., 3., 5.]
        );
        assert_eq!(candidate_side_lengths(&pts(&[(0., 0.)])), vec![0.]);
        assert!(candidate_side_lengths::<f64>(&[]).is_empty());
    }

    #[test]
    fn agrees_with_brute_force_on_small_lists() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for round in 0..300 {
            let n = rng.random_range(1..=9);
            let grid = if round % 2 == 0 { 5 } else { 1000 };
            let coords: Vec<(f64, f64)> = (0..n)
                .map(|_| (rng.random_range(0..grid) as f64, rng.random_range(0..grid) as f64))
                .collect();
            let q = pts(&coords);
            for j in 0..=n {
                let sq = solve_square_1k(&q, j);
                assert_eq!(sq.area, brute_square(&q, j), "square {coords:?} j={j}");
                assert!(sq.covered + j >= n);
                let rc = solve_rect_1k(&q, j);
                assert_eq!(rc.area, brute_rect(&q, j), "rect {coords:?} j={j}");
                assert!(rc.covered + j >= n);
                if let Some(b) = rc.bbox {
                    assert_eq!(Some(b), rc.span, "rectangle is the bounding box of its points");
                }
            }
        }
    }

    #[test]
    fn integer_coordinates() {
        let q: Vec<Point<i64>> = Point::from_coords(&[(0, 0), (3, 1), (1, 4), (100, 100)]);
        assert_eq!(solve_square_1k(&q, 1).area, 16);
        assert_eq!(solve_rect_1k(&q, 1).area, 12);
    }
}
