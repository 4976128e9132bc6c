//! Solvers for one, two and three boxes.
//!
//! Two disjoint boxes are always separated by an axis-parallel line, and of
//! three disjoint boxes one can always be cut off from the other two by such
//! a line. A separating line is identified with a split position in the x- or
//! y-order, so a two-box solution is a pair of single-box solutions on the
//! two sides of some split, with the outlier budget divided between them. For
//! a fixed budget split the single-box optimum on a growing side never
//! decreases and the one on the shrinking side never increases, so the best
//! split position is found by binary search on the sign of their difference.
//! Three boxes recurse: one side holds a single box, the other a two-box
//! subproblem.
//!
//! Every subset visited by the recursion is a rectangle in rank space, and
//! its extreme points come straight from the shared [`RangeExtremaIndex`];
//! nothing is re-sorted below the top level.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::base::{solve_base, BaseResult};
use crate::error::Result;
use crate::model::{AxisBox, CoverSolution, Point, ProblemSpec, Shape};
use crate::preprocess::{
    build_range_index, build_sorted, extreme_points, Axis, Orientation, RangeExtremaIndex,
    RankRect, Side, SortedPointSet, TieOrder,
};
use crate::scalar::Coord;

mod placement;

pub use placement::{place_squares, Separation};

/// One separating-line configuration: the line's orientation, which side
/// holds the lone box, that box's outlier budget, and the number of points on
/// the first side of the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitConfig {
    pub orientation: Orientation,
    pub single_side: Side,
    pub kprime: usize,
    pub m: usize,
}

/// Result of a split search: the best objective over all split positions for
/// one configuration, the position that attains it and the boxes.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitOutcome<T> {
    pub objective: T,
    pub config: SplitConfig,
    pub boxes: Vec<AxisBox<T>>,
}

/// Optimal boxes for one side of a split.
#[derive(Debug, Clone, PartialEq)]
pub struct SideOutcome<T> {
    pub objective: T,
    pub boxes: Vec<AxisBox<T>>,
}

/// Builds the sorted views and the index, then solves.
pub fn solve<T: Coord>(points: Vec<Point<T>>, spec: ProblemSpec) -> Result<CoverSolution<T>> {
    let set = build_sorted(points)?;
    let idx = build_range_index(&set);
    Ok(solve_pk(&set, &idx, &spec))
}

/// Exact optimum for `spec` on a preprocessed point set.
pub fn solve_pk<T: Coord>(
    set: &SortedPointSet<T>,
    idx: &RangeExtremaIndex,
    spec: &ProblemSpec,
) -> CoverSolution<T> {
    let n = set.len();
    let k = spec.budget(n);
    if k >= n {
        return CoverSolution::from_boxes(set.points(), Vec::new());
    }
    if spec.p == 1 {
        // whole-set extremes by linear selection; no index needed
        let ext = extreme_points(set, k);
        let pts: Vec<Point<T>> = ext.union.iter().map(|&id| *set.point(id)).collect();
        let base = solve_base(spec.shape, &pts, k);
        return CoverSolution::from_boxes(set.points(), base.bbox.into_iter().collect());
    }
    let (mut best, mut best_sol) = solve_exact(set, idx, spec.shape, k, spec.p);
    // Points sharing a coordinate with the separating line may have to be
    // divided between the sides in either secondary direction; retry with
    // the secondary order reversed on every axis that has such ties.
    let flip_x = set.has_ties(Axis::X);
    let flip_y = set.has_ties(Axis::Y);
    for (x_desc, y_desc) in [(true, false), (false, true), (true, true)] {
        if (x_desc && !flip_x) || (y_desc && !flip_y) {
            continue;
        }
        let base = set.ties();
        let alt_set = set.with_ties(TieOrder {
            x_desc: base.x_desc ^ x_desc,
            y_desc: base.y_desc ^ y_desc,
        });
        let alt_idx = build_range_index(&alt_set);
        let (value, sol) = solve_exact(&alt_set, &alt_idx, spec.shape, k, spec.p);
        if value < best {
            best = value;
            best_sol = sol;
        }
    }
    best_sol
}

/// Optimum for `p >= 2` boxes under the set's current orders.
///
/// The split recursion treats the two-box side of a three-square split as an
/// independent problem, which can let its squares reach across the outer
/// line. That gives a lower bound; when the resulting squares cannot be
/// placed disjointly the search is redone in strict mode, where every
/// configuration is checked to be realizable.
fn solve_exact<T: Coord>(
    set: &SortedPointSet<T>,
    idx: &RangeExtremaIndex,
    shape: Shape,
    k: usize,
    p: usize,
) -> (T, CoverSolution<T>) {
    let ctx = Ctx::new(set, idx, shape);
    let full = RankRect::full(set.len());
    let scored = ctx.solve_multi(&full, k, p, None);
    if let Some(sol) = ctx.assemble(&scored.plan) {
        return (scored.value, sol);
    }
    ctx.strict.set(true);
    let scored = ctx.solve_multi(&full, k, p, None);
    let sol = ctx
        .assemble(&scored.plan)
        .expect("strict configurations are placeable");
    (scored.value, sol)
}

/// Minimizes, over all split positions, the larger of the lone box's
/// optimum (with `kprime` outliers) and the other side's optimum with
/// `p_other` boxes and `k - kprime` outliers.
#[allow(clippy::too_many_arguments)]
pub fn split_search<T: Coord>(
    set: &SortedPointSet<T>,
    idx: &RangeExtremaIndex,
    orientation: Orientation,
    single_side: Side,
    kprime: usize,
    k: usize,
    p_other: usize,
    shape: Shape,
) -> SplitOutcome<T> {
    assert!(kprime <= k, "lone-box budget exceeds the total budget");
    assert!((1..=2).contains(&p_other), "the other side holds one or two boxes");
    let ctx = Ctx::new(set, idx, shape);
    let full = RankRect::full(set.len());
    let found = ctx.split_search(&full, orientation, single_side, kprime, k, p_other, None);
    let config = SplitConfig {
        orientation,
        single_side,
        kprime,
        m: first_count(single_side, found.single_size, set.len()),
    };
    let plan = ctx.plan_split(
        &full,
        config.orientation,
        single_side,
        kprime,
        k,
        p_other,
        found.single_size,
        None,
    );
    SplitOutcome {
        objective: found.value,
        config,
        boxes: ctx.assemble(&plan).map(|s| s.boxes).unwrap_or_default(),
    }
}

/// Optimum of one side of the split that puts the first `m` points (in the
/// orientation's order) on the first side, using `p_side` boxes and `j`
/// outliers on that side.
#[allow(clippy::too_many_arguments)]
pub fn objective_on_side<T: Coord>(
    set: &SortedPointSet<T>,
    idx: &RangeExtremaIndex,
    orientation: Orientation,
    side: Side,
    m: usize,
    p_side: usize,
    j: usize,
    shape: Shape,
) -> SideOutcome<T> {
    assert!(m <= set.len(), "split index out of range");
    assert!((1..=2).contains(&p_side), "a side holds one or two boxes");
    let ctx = Ctx::new(set, idx, shape);
    let (first, second) = idx.split(&RankRect::full(set.len()), orientation.axis(), m);
    let rect = match side {
        Side::First => first,
        Side::Second => second,
    };
    let scored = ctx.solve_multi(&rect, j, p_side, None);
    SideOutcome {
        objective: scored.value,
        boxes: ctx
            .assemble(&scored.plan)
            .expect("two squares split by a line can be placed")
            .boxes,
    }
}

fn first_count(single_side: Side, single_size: usize, n: usize) -> usize {
    match single_side {
        Side::First => single_size,
        Side::Second => n - single_size,
    }
}

/// How a rank rectangle is covered.
#[derive(Debug, Clone)]
enum Plan<T> {
    Empty,
    One(BaseResult<T>),
    Split {
        orientation: Orientation,
        single_side: Side,
        single: Box<Plan<T>>,
        other: Box<Plan<T>>,
    },
}

#[derive(Debug, Clone)]
struct Scored<T> {
    value: T,
    plan: Plan<T>,
}

struct Found<T> {
    value: T,
    single_size: usize,
}

struct Ctx<'a, T> {
    set: &'a SortedPointSet<T>,
    idx: &'a RangeExtremaIndex,
    shape: Shape,
    cache: RefCell<HashMap<(RankRect, usize), BaseResult<T>>>,
    /// Only consider configurations whose squares can be placed.
    strict: Cell<bool>,
}

impl<'a, T: Coord> Ctx<'a, T> {
    fn new(set: &'a SortedPointSet<T>, idx: &'a RangeExtremaIndex, shape: Shape) -> Self {
        Ctx {
            set,
            idx,
            shape,
            cache: RefCell::new(HashMap::new()),
            strict: Cell::new(false),
        }
    }

    /// Single-box optimum on a rectangle, from its extreme points.
    fn single(&self, r: &RankRect, j: usize) -> BaseResult<T> {
        if let Some(hit) = self.cache.borrow().get(&(*r, j)) {
            return *hit;
        }
        let count = self.idx.count(r);
        let result = if j >= count {
            BaseResult::absent()
        } else {
            let ext = self.idx.rect_extremes(self.set, r, j);
            let pts: Vec<Point<T>> = ext.union.iter().map(|&id| *self.set.point(id)).collect();
            solve_base(self.shape, &pts, j)
        };
        self.cache.borrow_mut().insert((*r, j), result);
        result
    }

    fn value(&self, r: &RankRect, j: usize, p: usize, only: Option<Orientation>) -> T {
        match p {
            1 => self.single(r, j).area,
            _ => self.solve_multi(r, j, p, only).value,
        }
    }

    /// Best cover of `r` with `p` boxes and `j` outliers. `only` restricts
    /// the separating line to one orientation.
    fn solve_multi(&self, r: &RankRect, j: usize, p: usize, only: Option<Orientation>) -> Scored<T> {
        let count = self.idx.count(r);
        if j >= count {
            return Scored {
                value: T::zero(),
                plan: Plan::Empty,
            };
        }
        if p == 1 {
            let base = self.single(r, j);
            return Scored {
                value: base.area,
                plan: Plan::One(base),
            };
        }
        // p = 2: the lone box may sit on either side, but the other side also
        // holds one box, so the first side suffices
        let sides: &[Side] = if p == 2 { &[Side::First] } else { &Side::BOTH };
        let orientations = match only {
            Some(o) => vec![o],
            None => Orientation::BOTH.to_vec(),
        };
        let strict = self.strict.get() && p == 3 && self.shape == Shape::Square;
        let mut best: Option<(T, Orientation, Side, usize, usize)> = None;
        for &orientation in &orientations {
            // in strict mode the inner line is perpendicular; parallel lines
            // are handled by `three_strips`
            let inner = strict.then(|| orientation.perpendicular());
            for &single_side in sides {
                for kprime in 0..=j {
                    let found = self.split_search(r, orientation, single_side, kprime, j, p - 1, inner);
                    if best.as_ref().is_none_or(|b| found.value < b.0) {
                        best = Some((found.value, orientation, single_side, kprime, found.single_size));
                    }
                }
            }
        }
        let (value, orientation, single_side, kprime, size) = best.expect("at least one configuration");
        let inner = strict.then(|| orientation.perpendicular());
        let scored = Scored {
            value,
            plan: self.plan_split(r, orientation, single_side, kprime, j, p - 1, size, inner),
        };
        if strict {
            if let Some(strips) = self.three_strips(r, j, value) {
                return strips;
            }
        }
        scored
    }

    /// Exact search over three boxes in parallel strips A | M | R along
    /// either axis. The middle square has to fit between the last point of
    /// A and the first point of R (when those boxes exist); configurations
    /// where it does not are skipped. Only configurations strictly better
    /// than `bound` are returned.
    fn three_strips(&self, r: &RankRect, j: usize, bound: T) -> Option<Scored<T>> {
        let total = self.idx.count(r);
        let mut best: Option<(T, Plan<T>)> = None;
        let mut limit = bound;
        for orientation in Orientation::BOTH {
            let axis = orientation.axis();
            let coord_at = |i: usize| {
                let rank = self.idx.nth_rank(r, axis, i);
                let p = self.set.point(self.set.order(axis)[rank]);
                match axis {
                    Axis::X => p.x,
                    Axis::Y => p.y,
                }
            };
            for ka in 0..=j {
                for km in 0..=j - ka {
                    let kr = j - ka - km;
                    for m1 in 0..=total {
                        // A's box only grows with m1
                        let a = self.single(&self.idx.split(r, axis, m1).0, ka);
                        if a.area >= limit {
                            break;
                        }
                        let rest = self.idx.split(r, axis, m1).1;
                        let left = a.bbox.map(|_| coord_at(m1 - 1));
                        let size = total - m1;
                        let eval = |mm: usize| {
                            let (mid, right) = self.idx.split(&rest, axis, mm);
                            (self.single(&mid, km), self.single(&right, kr), mm)
                        };
                        let feasible = |mm: usize, mb: &BaseResult<T>, rb: &BaseResult<T>| {
                            let right = rb.bbox.map(|_| coord_at(m1 + mm));
                            middle_fits(mb, axis, left, right)
                        };
                        // balance point of the middle (growing) and right
                        // (shrinking) boxes
                        let (mut lo, mut hi) = (0, size);
                        while lo < hi {
                            let mid = (lo + hi) / 2;
                            let (mb, rb, _) = eval(mid);
                            if mb.area >= rb.area {
                                hi = mid;
                            } else {
                                lo = mid + 1;
                            }
                        }
                        // walk outwards; values only grow in both directions
                        let mut found: Option<(T, BaseResult<T>, BaseResult<T>, usize)> = None;
                        for mm in lo..=size {
                            let (mb, rb, _) = eval(mm);
                            let v = a.area.max_coord(mb.area).max_coord(rb.area);
                            if v >= limit {
                                break;
                            }
                            if feasible(mm, &mb, &rb) {
                                found = Some((v, mb, rb, mm));
                                limit = v;
                                break;
                            }
                        }
                        for mm in (0..lo).rev() {
                            let (mb, rb, _) = eval(mm);
                            let v = a.area.max_coord(mb.area).max_coord(rb.area);
                            if v >= limit {
                                break;
                            }
                            if feasible(mm, &mb, &rb) {
                                found = Some((v, mb, rb, mm));
                                limit = v;
                                break;
                            }
                        }
                        if let Some((v, mb, rb, _)) = found {
                            let leaf = |b: BaseResult<T>| match b.bbox {
                                Some(_) => Plan::One(b),
                                None => Plan::Empty,
                            };
                            let plan = Plan::Split {
                                orientation,
                                single_side: Side::First,
                                single: Box::new(leaf(a)),
                                other: Box::new(Plan::Split {
                                    orientation,
                                    single_side: Side::First,
                                    single: Box::new(leaf(mb)),
                                    other: Box::new(leaf(rb)),
                                }),
                            };
                            best = Some((v, plan));
                        }
                    }
                }
            }
        }
        best.map(|(value, plan)| Scored { value, plan })
    }

    fn split_rects(
        &self,
        r: &RankRect,
        orientation: Orientation,
        single_side: Side,
        single_size: usize,
        total: usize,
    ) -> (RankRect, RankRect) {
        let axis = orientation.axis();
        match single_side {
            Side::First => self.idx.split(r, axis, single_size),
            Side::Second => {
                let (other, single) = self.idx.split(r, axis, total - single_size);
                (single, other)
            }
        }
    }

    /// Binary search over the lone box's side size `m`: `f(m)` (lone box) is
    /// non-decreasing, `g(m)` (other side) non-increasing, so the first `m`
    /// with `f(m) >= g(m)` and its predecessor bracket the minimum of
    /// `max(f, g)`.
    #[allow(clippy::too_many_arguments)]
    fn split_search(
        &self,
        r: &RankRect,
        orientation: Orientation,
        single_side: Side,
        kprime: usize,
        j: usize,
        p_other: usize,
        inner: Option<Orientation>,
    ) -> Found<T> {
        let total = self.idx.count(r);
        let eval = |m: usize| -> (T, T) {
            let (single, other) = self.split_rects(r, orientation, single_side, m, total);
            (
                self.single(&single, kprime).area,
                self.value(&other, j - kprime, p_other, inner),
            )
        };
        let (mut lo, mut hi) = (0, total);
        while lo < hi {
            let mid = (lo + hi) / 2;
            let (f, g) = eval(mid);
            if f >= g {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let mut best: Option<Found<T>> = None;
        for m in lo.saturating_sub(1)..=(lo + 1).min(total) {
            let (f, g) = eval(m);
            let value = f.max_coord(g);
            if best.as_ref().is_none_or(|b| value < b.value) {
                best = Some(Found {
                    value,
                    single_size: m,
                });
            }
        }
        best.expect("non-empty candidate range")
    }

    #[allow(clippy::too_many_arguments)]
    fn plan_split(
        &self,
        r: &RankRect,
        orientation: Orientation,
        single_side: Side,
        kprime: usize,
        j: usize,
        p_other: usize,
        single_size: usize,
        inner: Option<Orientation>,
    ) -> Plan<T> {
        let total = self.idx.count(r);
        let (single, other) = self.split_rects(r, orientation, single_side, single_size, total);
        let single_plan = match self.single(&single, kprime) {
            b if b.bbox.is_some() => Plan::One(b),
            _ => Plan::Empty,
        };
        Plan::Split {
            orientation,
            single_side,
            single: Box::new(single_plan),
            other: Box::new(self.solve_multi(&other, j - kprime, p_other, inner).plan),
        }
    }

    /// Turns a plan into positioned boxes; `None` when its squares admit no
    /// disjoint placement.
    fn assemble(&self, plan: &Plan<T>) -> Option<CoverSolution<T>> {
        let mut pieces = Vec::new();
        let mut seps = Vec::new();
        collect(plan, &mut pieces, &mut seps);
        let boxes = match self.shape {
            Shape::Rect => pieces.iter().filter_map(|b| b.bbox).collect(),
            Shape::Square if pieces.len() <= 1 => pieces.iter().filter_map(|b| b.bbox).collect(),
            Shape::Square => {
                let squares: Vec<(AxisBox<T>, T)> = pieces
                    .iter()
                    .map(|b| (b.span.expect("present box covers a point"), b.side()))
                    .collect();
                place_squares(&squares, &seps)?
            }
        };
        Some(CoverSolution::from_boxes(self.set.points(), boxes))
    }
}

/// Whether the middle square fits between the end of the left neighbour's
/// points (`left`) and the start of the right neighbour's (`right`), using
/// the same arithmetic as the placement.
fn middle_fits<T: Coord>(mid: &BaseResult<T>, axis: Axis, left: Option<T>, right: Option<T>) -> bool {
    let (Some(span), Some(left), Some(right)) = (mid.span, left, right) else {
        return true;
    };
    let (lo, hi) = match axis {
        Axis::X => (span.xmin, span.xmax),
        Axis::Y => (span.ymin, span.ymax),
    };
    let side = mid.side();
    let lowest = (hi - side).min_coord(lo);
    let end = if lowest < left {
        (left + side).max_coord(hi)
    } else {
        hi
    };
    end <= right
}

/// Flattens a plan into its boxes and, for every pair of boxes that a split
/// separates, the separation it implies.
fn collect<T: Coord>(plan: &Plan<T>, pieces: &mut Vec<BaseResult<T>>, seps: &mut Vec<Separation>) {
    match plan {
        Plan::Empty => {}
        Plan::One(b) => {
            if b.bbox.is_some() {
                pieces.push(*b);
            }
        }
        Plan::Split {
            orientation,
            single_side,
            single,
            other,
        } => {
            let (first, second) = match single_side {
                Side::First => (single, other),
                Side::Second => (other, single),
            };
            let start = pieces.len();
            collect(first, pieces, seps);
            let mid = pieces.len();
            collect(second, pieces, seps);
            for a in start..mid {
                for b in mid..pieces.len() {
                    seps.push(Separation {
                        before: a,
                        after: b,
                        orientation: *orientation,
                    });
                }
            }
        }
    }
}
