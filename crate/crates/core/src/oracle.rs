//! Brute-force reference solver.
//!
//! Slow and simple on purpose. It shares only the model types with the fast
//! path: no extreme-point pruning, no rank index, no binary search.
//!
//! Single boxes are found by enumerating canonical placements:
//!
//! * a rectangle can always be shrunk to the bounding box of the points it
//!   covers, so its edges lie on point coordinates and enumerating every
//!   (left, right, bottom, top) coordinate combination finds the optimum;
//! * a square covering a set `C` can be translated so that its bottom-left
//!   corner is `(min x of C, min y of C)` and still cover `C`, so anchors are
//!   all (x, y) coordinate pairs, and for a fixed anchor the side needed for
//!   each point is `max(x - a, y - b)`.
//!
//! With two or three boxes some axis-parallel line has one box on one side
//! and the rest on the other, and two boxes are always separated by a line.
//! The oracle enumerates every such bipartition of the covered points
//! explicitly: each orientation, each threshold coordinate, and every way of
//! distributing the points lying on the threshold line between the sides.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{boxes_interior_disjoint, AxisBox, CoverSolution, Point, Shape};
use crate::scalar::Coord;

/// Largest `n` accepted for `p = 1`, `2` and `3`.
pub const ORACLE_LIMITS: [usize; 3] = [64, 20, 16];

pub fn oracle_limit(p: usize) -> usize {
    ORACLE_LIMITS[p.clamp(1, 3) - 1]
}

/// Exact optimum by exhaustive enumeration. Points keep their ids; the
/// outlier list refers to them.
pub fn oracle_solve<T: Coord>(
    points: &[Point<T>],
    p: usize,
    k: usize,
    shape: Shape,
) -> Result<CoverSolution<T>> {
    if !(1..=3).contains(&p) {
        return Err(Error::InvalidBoxCount(p));
    }
    let n = points.len();
    let limit = oracle_limit(p);
    if n > limit {
        return Err(Error::OracleLimit { n, p, limit });
    }
    if let Some(bad) = points
        .iter()
        .find(|q| !q.x.is_finite_coord() || !q.y.is_finite_coord())
    {
        return Err(Error::NonFinite { id: bad.id });
    }
    let need = n.saturating_sub(k);
    if need == 0 {
        return Ok(CoverSolution::from_boxes(points, Vec::new()));
    }
    let mut o = Oracle {
        pts: points,
        shape,
        single: HashMap::new(),
        pair: HashMap::new(),
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let cover = match p {
        1 => o.one(full)[need].clone(),
        2 => o.two(full, None)[need].clone(),
        _ => o.three(full, need),
    };
    let boxes = o.realize(&cover);
    Ok(CoverSolution::from_boxes(points, boxes))
}

/// One box choice: covered points (as a mask) and the box area.
#[derive(Debug, Clone)]
struct Single<T> {
    area: T,
    /// Square side; unused for rectangles.
    side: T,
    covered: u64,
    bx: Option<AxisBox<T>>,
}

/// How the best value for some coverage count is achieved. Split lines
/// themselves are not kept; squares are placed from the covered sets.
#[derive(Debug, Clone)]
enum Cover<T> {
    Box(Single<T>),
    Split {
        area: T,
        first: Box<Cover<T>>,
        second: Box<Cover<T>>,
    },
}

fn collect_leaves<T: Coord>(cover: &Cover<T>, out: &mut Vec<Single<T>>) {
    match cover {
        Cover::Box(s) => {
            if s.covered != 0 {
                out.push(s.clone());
            }
        }
        Cover::Split { first, second, .. } => {
            collect_leaves(first, out);
            collect_leaves(second, out);
        }
    }
}

impl<T: Coord> Cover<T> {
    fn area(&self) -> T {
        match self {
            Cover::Box(s) => s.area,
            Cover::Split { area, .. } => *area,
        }
    }
}

struct Oracle<'a, T> {
    pts: &'a [Point<T>],
    shape: Shape,
    single: HashMap<u64, Vec<Single<T>>>,
    pair: HashMap<(u64, Option<bool>), Vec<Cover<T>>>,
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn better<T: Coord>(slot: &mut Option<Cover<T>>, cand: Cover<T>) {
    if slot.as_ref().is_none_or(|c| cand.area() < c.area()) {
        *slot = Some(cand);
    }
}

impl<T: Coord> Oracle<'_, T> {
    /// Best single box for every coverage count `0..=|mask|` (at least that
    /// many points covered).
    fn one(&mut self, mask: u64) -> Vec<Cover<T>> {
        if !self.single.contains_key(&mask) {
            let table = match self.shape {
                Shape::Rect => self.rect_table(mask),
                Shape::Square => self.square_table(mask),
            };
            self.single.insert(mask, table);
        }
        self.single[&mask].iter().cloned().map(Cover::Box).collect()
    }

    fn empty_table(&self, mask: u64) -> Vec<Option<Single<T>>> {
        let size = mask.count_ones() as usize;
        let mut best: Vec<Option<Single<T>>> = vec![None; size + 1];
        best[0] = Some(Single {
            area: T::zero(),
            side: T::zero(),
            covered: 0,
            bx: None,
        });
        best
    }

    fn finish(mut best: Vec<Option<Single<T>>>) -> Vec<Single<T>> {
        // "at least c" is the suffix minimum over exact counts
        for c in (0..best.len().saturating_sub(1)).rev() {
            let next = best[c + 1].clone();
            if let Some(nx) = next {
                if best[c].as_ref().is_none_or(|b| nx.area < b.area) {
                    best[c] = Some(nx);
                }
            }
        }
        best.into_iter()
            .map(|b| b.expect("every count is reachable"))
            .collect()
    }

    fn rect_table(&self, mask: u64) -> Vec<Single<T>> {
        let mut best = self.empty_table(mask);
        let ids: Vec<usize> = members(mask).collect();
        let mut xs: Vec<T> = ids.iter().map(|&i| self.pts[i].x).collect();
        xs.sort_by(|a, b| a.cmp_coord(b));
        xs.dedup();
        for (li, &xl) in xs.iter().enumerate() {
            for &xr in &xs[li..] {
                let mut slab: Vec<usize> = ids
                    .iter()
                    .copied()
                    .filter(|&i| xl <= self.pts[i].x && self.pts[i].x <= xr)
                    .collect();
                slab.sort_by(|&a, &b| self.pts[a].y.cmp_coord(&self.pts[b].y));
                for lo in 0..slab.len() {
                    let yb = self.pts[slab[lo]].y;
                    if lo > 0 && self.pts[slab[lo - 1]].y == yb {
                        continue;
                    }
                    let mut covered = 0u64;
                    for hi in lo..slab.len() {
                        covered |= 1 << slab[hi];
                        let yt = self.pts[slab[hi]].y;
                        if hi + 1 < slab.len() && self.pts[slab[hi + 1]].y == yt {
                            continue;
                        }
                        let area = (xr - xl) * (yt - yb);
                        let c = covered.count_ones() as usize;
                        if best[c].as_ref().is_none_or(|b| area < b.area) {
                            best[c] = Some(Single {
                                area,
                                side: T::zero(),
                                covered,
                                bx: Some(AxisBox::new(xl, yb, xr, yt, Shape::Rect)),
                            });
                        }
                    }
                }
            }
        }
        Self::finish(best)
    }

    fn square_table(&self, mask: u64) -> Vec<Single<T>> {
        let mut best = self.empty_table(mask);
        let ids: Vec<usize> = members(mask).collect();
        for &ia in &ids {
            for &ib in &ids {
                let (a, b) = (self.pts[ia].x, self.pts[ib].y);
                let mut reach: Vec<(T, usize)> = ids
                    .iter()
                    .filter(|&&i| self.pts[i].x >= a && self.pts[i].y >= b)
                    .map(|&i| ((self.pts[i].x - a).max_coord(self.pts[i].y - b), i))
                    .collect();
                reach.sort_by(|u, v| u.0.cmp_coord(&v.0));
                let mut covered = 0u64;
                for (c, &(side, i)) in reach.iter().enumerate() {
                    covered |= 1 << i;
                    if c + 1 < reach.len() && reach[c + 1].0 == side {
                        continue;
                    }
                    let area = side * side;
                    let count = c + 1;
                    if best[count].as_ref().is_none_or(|s| area < s.area) {
                        best[count] = Some(Single {
                            area,
                            side,
                            covered,
                            bx: None,
                        });
                    }
                }
            }
        }
        Self::finish(best)
    }

    /// Every bipartition of `mask` by an axis-parallel line, as
    /// `(vertical, low side, high side)`.
    fn bipartitions(&self, mask: u64) -> Vec<(bool, u64, u64)> {
        let mut out = Vec::new();
        for vertical in [true, false] {
            let key = |i: usize| if vertical { self.pts[i].x } else { self.pts[i].y };
            let mut vals: Vec<T> = members(mask).map(key).collect();
            vals.sort_by(|a, b| a.cmp_coord(b));
            vals.dedup();
            for &t in &vals {
                let below: u64 = members(mask).filter(|&i| key(i) < t).fold(0, |m, i| m | 1 << i);
                let on: Vec<usize> = members(mask).filter(|&i| key(i) == t).collect();
                for sub in 0..1u64 << on.len() {
                    let low = on
                        .iter()
                        .enumerate()
                        .filter(|&(b, _)| sub >> b & 1 == 1)
                        .fold(below, |m, (_, &i)| m | 1 << i);
                    out.push((vertical, low, mask & !low));
                }
            }
        }
        out
    }

    fn combine(
        slots: &mut [Option<Cover<T>>],
        first: &[Cover<T>],
        second: &[Cover<T>],
    ) {
        for (ca, a) in first.iter().enumerate() {
            for (cb, b) in second.iter().enumerate() {
                let area = a.area().max_coord(b.area());
                better(
                    &mut slots[ca + cb],
                    Cover::Split {
                        area,
                        first: Box::new(a.clone()),
                        second: Box::new(b.clone()),
                    },
                );
            }
        }
    }

    fn at_least(slots: Vec<Option<Cover<T>>>) -> Vec<Cover<T>> {
        let mut out: Vec<Cover<T>> = Vec::with_capacity(slots.len());
        for slot in slots.into_iter().rev() {
            let s = slot.expect("every count is reachable");
            match out.last() {
                Some(prev) if prev.area() <= s.area() => out.push(prev.clone()),
                _ => out.push(s),
            }
        }
        out.reverse();
        out
    }

    /// Best pair of boxes split by a line of the given orientation (or any
    /// orientation when `dir` is `None`), per coverage count.
    fn two(&mut self, mask: u64, dir: Option<bool>) -> Vec<Cover<T>> {
        if let Some(v) = self.pair.get(&(mask, dir)) {
            return v.clone();
        }
        let size = mask.count_ones() as usize;
        if size <= 1 {
            return self.one(mask);
        }
        let mut slots: Vec<Option<Cover<T>>> = vec![None; size + 1];
        for (vertical, low, high) in self.bipartitions(mask) {
            if dir.is_some_and(|d| d != vertical) {
                continue;
            }
            let a = self.one(low);
            let b = self.one(high);
            Self::combine(&mut slots, &a, &b);
        }
        let table = Self::at_least(slots);
        self.pair.insert((mask, dir), table.clone());
        table
    }

    /// Three boxes. One box is always cut off from the other two by a line.
    /// Rectangles (and squares, when the second line is perpendicular to
    /// the first) can then be chosen independently on each side. Squares in
    /// three parallel strips are not independent: the middle square has to
    /// fit between the outer strips' points, so those triples are
    /// enumerated directly.
    fn three(&mut self, mask: u64, need: usize) -> Cover<T> {
        let size = mask.count_ones() as usize;
        let mut slots: Vec<Option<Cover<T>>> = vec![None; size + 1];
        let squares = self.shape == Shape::Square;
        for (vertical, low, high) in self.bipartitions(mask) {
            let inner = squares.then_some(!vertical);
            let (a1, b2) = (self.one(low), self.two(high, inner));
            Self::combine(&mut slots, &a1, &b2);
            let (a2, b1) = (self.two(low, inner), self.one(high));
            Self::combine(&mut slots, &a2, &b1);
            if squares {
                self.strips(&mut slots, vertical, low, high);
            }
        }
        Self::at_least(slots)
            .into_iter()
            .nth(need)
            .expect("need is at most n")
    }

    /// Parallel strips `low | mid | right` with `high` split again by a line
    /// of the same orientation.
    fn strips(&mut self, slots: &mut [Option<Cover<T>>], vertical: bool, low: u64, high: u64) {
        let key = |q: &Point<T>| if vertical { q.x } else { q.y };
        let a = self.one(low);
        let low_end = members(low).map(|i| key(&self.pts[i])).reduce(|u, v| u.max_coord(v));
        for (v2, mid, right) in self.bipartitions(high) {
            if v2 != vertical {
                continue;
            }
            let right_start = members(right)
                .map(|i| key(&self.pts[i]))
                .reduce(|u, v| u.min_coord(v));
            let (m, r) = (self.one(mid), self.one(right));
            for (ca, sa) in a.iter().enumerate() {
                for (cm, sm) in m.iter().enumerate() {
                    let Cover::Box(mb) = sm else { unreachable!() };
                    let left = if ca > 0 { low_end } else { None };
                    for (cr, sr) in r.iter().enumerate() {
                        let right_at = if cr > 0 { right_start } else { None };
                        if !self.middle_fits(mb, vertical, left, right_at) {
                            continue;
                        }
                        let area = sa.area().max_coord(sm.area()).max_coord(sr.area());
                        better(
                            &mut slots[ca + cm + cr],
                            Cover::Split {
                                area,
                                first: Box::new(sa.clone()),
                                second: Box::new(Cover::Split {
                                    area: sm.area().max_coord(sr.area()),
                                    first: Box::new(sm.clone()),
                                    second: Box::new(sr.clone()),
                                }),
                            },
                        );
                    }
                }
            }
        }
    }

    /// The middle square placed flush against its own far edge or, failing
    /// that, against the left neighbour's points must end before the right
    /// neighbour's points begin.
    fn middle_fits(&self, mid: &Single<T>, vertical: bool, left: Option<T>, right: Option<T>) -> bool {
        let (Some(left), Some(right)) = (left, right) else {
            return true;
        };
        if mid.covered == 0 {
            return true;
        }
        let key = |i: usize| if vertical { self.pts[i].x } else { self.pts[i].y };
        let lo = members(mid.covered).map(key).reduce(|u, v| u.min_coord(v)).expect("non-empty");
        let hi = members(mid.covered).map(key).reduce(|u, v| u.max_coord(v)).expect("non-empty");
        if (hi - mid.side).min_coord(lo) >= left {
            return true;
        }
        (left + mid.side).max_coord(hi) <= right
    }

    /// Turns a cover plan into boxes.
    fn realize(&self, cover: &Cover<T>) -> Vec<AxisBox<T>> {
        let mut leaves = Vec::new();
        collect_leaves(cover, &mut leaves);
        match self.shape {
            Shape::Rect => leaves.iter().filter_map(|s| s.bx).collect(),
            Shape::Square => self.place(&leaves),
        }
    }

    /// Squares of the chosen sides around the covered sets. Any feasible
    /// placement can be compacted towards low coordinates until every square
    /// starts either at its lowest possible position or at the end of
    /// another square (itself compacted), so along each axis a square only
    /// needs these starts. All combinations are tried.
    fn place(&self, leaves: &[Single<T>]) -> Vec<AxisBox<T>> {
        let spans: Vec<[T; 4]> = leaves
            .iter()
            .map(|s| {
                let mut it = members(s.covered).map(|i| self.pts[i]);
                let f = it.next().expect("non-empty leaf");
                it.fold([f.x, f.y, f.x, f.y], |b, q| {
                    [
                        b[0].min_coord(q.x),
                        b[1].min_coord(q.y),
                        b[2].max_coord(q.x),
                        b[3].max_coord(q.y),
                    ]
                })
            })
            .collect();
        let m = leaves.len();
        // per axis, per leaf: candidate intervals
        let mut options: Vec<Vec<(T, T)>> = Vec::new();
        for axis in 0..2 {
            for i in 0..m {
                let (lo, hi, s) = (spans[i][axis], spans[i][axis + 2], leaves[i].side);
                let lowest = (hi - s).min_coord(lo);
                // at its lowest a square ends exactly at its span's end
                let mut opts = vec![(lowest, hi)];
                let mut starts = Vec::new();
                for j in (0..m).filter(|&j| j != i) {
                    let ej = spans[j][axis + 2];
                    starts.push(ej);
                    for l in (0..m).filter(|&l| l != i && l != j) {
                        starts.push((ej + leaves[l].side).max_coord(spans[l][axis + 2]));
                    }
                }
                opts.extend(
                    starts
                        .into_iter()
                        .filter(|&st| st > lowest && st <= lo)
                        .map(|st| (st, (st + s).max_coord(hi))),
                );
                options.push(opts);
            }
        }
        let mut choice = vec![0usize; 2 * m];
        let build = |choice: &[usize]| -> Vec<AxisBox<T>> {
            (0..m)
                .map(|i| {
                    let (x0, x1) = options[i][choice[i]];
                    let (y0, y1) = options[m + i][choice[m + i]];
                    AxisBox::new(x0, y0, x1, y1, Shape::Square)
                })
                .collect()
        };
        loop {
            let boxes = build(&choice);
            if boxes_interior_disjoint(&boxes) {
                return boxes;
            }
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    // nothing fits; report the compacted placement and let
                    // validation flag it
                    return build(&vec![0; 2 * m]);
                }
                choice[pos] += 1;
                if choice[pos] < options[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

