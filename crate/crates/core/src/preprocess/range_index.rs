//! Orthogonal top-m queries over rank space.
//!
//! Points are identified with their rank pair `(rank_x, rank_y)`. Two wavelet
//! matrices store the permutation in both directions: one indexed by x-rank
//! holding y-ranks, one indexed by y-rank holding x-ranks. A query for the m
//! highest (or lowest) points inside a rank rectangle counts the values below
//! the rectangle's bounds and then extracts consecutive order statistics, for
//! `O((m + 1) log n)` per query. Build is `O(n log n)`, space `O(n log n)`
//! bits.

use crate::error::{Error, Result};
use crate::preprocess::extremes::ExtremeSet;
use crate::preprocess::sorted::{Axis, SortedPointSet};
use crate::preprocess::wavelet::WaveletMatrix;
use crate::preprocess::{Direction, Orientation, Side};
use crate::scalar::Coord;

/// Half-open rectangle in rank space: x-ranks `x_lo..x_hi`, y-ranks
/// `y_lo..y_hi`. Every subset the solvers work on is one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RankRect {
    pub x_lo: usize,
    pub x_hi: usize,
    pub y_lo: usize,
    pub y_hi: usize,
}

impl RankRect {
    pub fn full(n: usize) -> Self {
        RankRect {
            x_lo: 0,
            x_hi: n,
            y_lo: 0,
            y_hi: n,
        }
    }

    fn bounds(&self, axis: Axis) -> (usize, usize) {
        match axis {
            Axis::X => (self.x_lo, self.x_hi),
            Axis::Y => (self.y_lo, self.y_hi),
        }
    }

    fn with_bounds(mut self, axis: Axis, lo: usize, hi: usize) -> Self {
        match axis {
            Axis::X => {
                self.x_lo = lo;
                self.x_hi = hi;
            }
            Axis::Y => {
                self.y_lo = lo;
                self.y_hi = hi;
            }
        }
        self
    }

    pub fn contains_ranks(&self, rx: usize, ry: usize) -> bool {
        (self.x_lo..self.x_hi).contains(&rx) && (self.y_lo..self.y_hi).contains(&ry)
    }
}

#[derive(Debug, Clone, Default)]
pub struct RangeExtremaIndex {
    n: usize,
    /// position = x-rank, value = y-rank
    y_by_x: WaveletMatrix,
    /// position = y-rank, value = x-rank
    x_by_y: WaveletMatrix,
}

pub fn build_range_index<T: Coord>(set: &SortedPointSet<T>) -> RangeExtremaIndex {
    let y_of: Vec<usize> = set.by_x().iter().map(|&id| set.rank_y()[id]).collect();
    let x_of: Vec<usize> = set.by_y().iter().map(|&id| set.rank_x()[id]).collect();
    RangeExtremaIndex {
        n: set.len(),
        y_by_x: WaveletMatrix::new(&y_of),
        x_by_y: WaveletMatrix::new(&x_of),
    }
}

impl RangeExtremaIndex {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The wavelet matrix whose positions run along `axis.other()` and whose
    /// values are ranks along `axis`.
    fn values_along(&self, axis: Axis) -> &WaveletMatrix {
        match axis {
            Axis::Y => &self.y_by_x,
            Axis::X => &self.x_by_y,
        }
    }

    /// Number of points in the rectangle.
    pub fn count(&self, r: &RankRect) -> usize {
        if r.x_lo >= r.x_hi || r.y_lo >= r.y_hi {
            return 0;
        }
        let wm = &self.y_by_x;
        wm.count_less(r.x_lo, r.x_hi, r.y_hi) - wm.count_less(r.x_lo, r.x_hi, r.y_lo)
    }

    /// Ranks along `axis` of the `m` most extreme points of the rectangle in
    /// `dir`, most extreme first.
    pub fn extreme_ranks(&self, r: &RankRect, axis: Axis, dir: Direction, m: usize) -> Vec<usize> {
        let (plo, phi) = r.bounds(axis.other());
        let (vlo, vhi) = r.bounds(axis);
        if plo >= phi || vlo >= vhi || m == 0 {
            return Vec::new();
        }
        let wm = self.values_along(axis);
        let below = wm.count_less(plo, phi, vlo);
        let upto = wm.count_less(plo, phi, vhi);
        let take = m.min(upto - below);
        match dir {
            Direction::Min => (below..below + take)
                .map(|i| wm.nth_smallest(plo, phi, i))
                .collect(),
            Direction::Max => (upto - take..upto)
                .rev()
                .map(|i| wm.nth_smallest(plo, phi, i))
                .collect(),
        }
    }

    /// Rank along `axis` of the `nth` (0-based) point of the rectangle in
    /// ascending `axis` order.
    pub fn nth_rank(&self, r: &RankRect, axis: Axis, nth: usize) -> usize {
        let (plo, phi) = r.bounds(axis.other());
        let (vlo, _) = r.bounds(axis);
        let wm = self.values_along(axis);
        let below = wm.count_less(plo, phi, vlo);
        wm.nth_smallest(plo, phi, below + nth)
    }

    /// Splits the rectangle's points by a line perpendicular to `axis`: the
    /// first `m` points in ascending `axis` order go to the first rectangle.
    ///
    /// # Panics
    /// If `m` exceeds the number of points in `r`.
    pub fn split(&self, r: &RankRect, axis: Axis, m: usize) -> (RankRect, RankRect) {
        let (lo, hi) = r.bounds(axis);
        let cut = if m == 0 {
            lo
        } else {
            self.nth_rank(r, axis, m - 1) + 1
        };
        (r.with_bounds(axis, lo, cut), r.with_bounds(axis, cut, hi))
    }

    /// The `m` extreme points along `axis` among the points whose rank on the
    /// other axis lies in `range`, most extreme first.
    pub fn top_m<T: Coord>(
        &self,
        set: &SortedPointSet<T>,
        axis: Axis,
        range: core::ops::Range<usize>,
        dir: Direction,
        m: usize,
    ) -> Vec<usize> {
        let r = RankRect::full(self.n).with_bounds(axis.other(), range.start, range.end.min(self.n));
        self.extreme_ids(set, &r, axis, dir, m)
    }

    /// Ids of the `m` extreme points of a rectangle.
    pub fn extreme_ids<T: Coord>(
        &self,
        set: &SortedPointSet<T>,
        r: &RankRect,
        axis: Axis,
        dir: Direction,
        m: usize,
    ) -> Vec<usize> {
        let order = set.order(axis);
        self.extreme_ranks(r, axis, dir, m)
            .into_iter()
            .map(|rank| order[rank])
            .collect()
    }

    /// The (k+1)-extreme points of the points inside a rectangle.
    pub fn rect_extremes<T: Coord>(
        &self,
        set: &SortedPointSet<T>,
        r: &RankRect,
        k: usize,
    ) -> ExtremeSet {
        let m = k + 1;
        ExtremeSet::from_lists(
            self.extreme_ids(set, r, Axis::Y, Direction::Max, m),
            self.extreme_ids(set, r, Axis::Y, Direction::Min, m),
            self.extreme_ids(set, r, Axis::X, Direction::Min, m),
            self.extreme_ids(set, r, Axis::X, Direction::Max, m),
        )
    }
}

/// Extreme points of the first `m` points (or the remaining `n - m`) in the
/// sort order across the separating line. Along the split axis the lists are
/// read off the sorted order; across it they come from the index.
pub fn prefix_extremes<T: Coord>(
    idx: &RangeExtremaIndex,
    set: &SortedPointSet<T>,
    orientation: Orientation,
    m: usize,
    side: Side,
    k: usize,
) -> Result<ExtremeSet> {
    let n = set.len();
    if m > n {
        return Err(Error::SplitOutOfRange { m, n });
    }
    let axis = orientation.axis();
    let range = match side {
        Side::First => 0..m,
        Side::Second => m..n,
    };
    let take = (k + 1).min(range.len());
    let order = &set.order(axis)[range.clone()];
    let low: Vec<usize> = order[..take].to_vec();
    let high: Vec<usize> = order.iter().rev().take(take).copied().collect();
    let across = axis.other();
    let max = idx.top_m(set, across, range.clone(), Direction::Max, k + 1);
    let min = idx.top_m(set, across, range, Direction::Min, k + 1);
    Ok(match axis {
        Axis::X => ExtremeSet::from_lists(max, min, low, high),
        Axis::Y => ExtremeSet::from_lists(high, low, min, max),
    })
}
