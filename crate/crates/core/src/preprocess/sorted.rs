use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::Point;
use crate::scalar::Coord;

/// Coordinate axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

/// Strict total order along `axis`: the coordinate itself, then the other
/// coordinate, then the id. Identical points are ordered by id.
#[inline]
pub fn axis_cmp<T: Coord>(axis: Axis, a: &Point<T>, b: &Point<T>) -> Ordering {
    let (a1, a2, b1, b2) = match axis {
        Axis::X => (a.x, a.y, b.x, b.y),
        Axis::Y => (a.y, a.x, b.y, b.x),
    };
    a1.cmp_coord(&b1)
        .then_with(|| a2.cmp_coord(&b2))
        .then_with(|| a.id.cmp(&b.id))
}

/// Direction of the secondary key in each axis order. The default sorts
/// points sharing an x coordinate by ascending y (and vice versa); reversing
/// it changes which of them a prefix of the order picks up first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TieOrder {
    /// In the x-order, points with equal x come by descending y.
    pub x_desc: bool,
    /// In the y-order, points with equal y come by descending x.
    pub y_desc: bool,
}

impl TieOrder {
    pub fn desc(self, axis: Axis) -> bool {
        match axis {
            Axis::X => self.x_desc,
            Axis::Y => self.y_desc,
        }
    }
}

/// [`axis_cmp`] with the secondary key reversed when `desc` is set.
#[inline]
pub fn axis_cmp_with<T: Coord>(axis: Axis, desc: bool, a: &Point<T>, b: &Point<T>) -> Ordering {
    let (a1, a2, b1, b2) = match axis {
        Axis::X => (a.x, a.y, b.x, b.y),
        Axis::Y => (a.y, a.x, b.y, b.x),
    };
    let second = if desc { b2.cmp_coord(&a2) } else { a2.cmp_coord(&b2) };
    a1.cmp_coord(&b1)
        .then(second)
        .then_with(|| a.id.cmp(&b.id))
}

/// The input points together with both sorted orders and their inverses.
#[derive(Debug, Clone)]
pub struct SortedPointSet<T> {
    points: Vec<Point<T>>,
    ties: TieOrder,
    by_x: Vec<usize>,
    by_y: Vec<usize>,
    rank_x: Vec<usize>,
    rank_y: Vec<usize>,
}

/// Sorts the points along both axes. Ids must be `0..n` in input order and
/// every coordinate finite.
pub fn build_sorted<T: Coord>(points: Vec<Point<T>>) -> Result<SortedPointSet<T>> {
    build_sorted_with(points, TieOrder::default())
}

/// Like [`build_sorted`] with a chosen secondary direction per axis.
pub fn build_sorted_with<T: Coord>(
    points: Vec<Point<T>>,
    ties: TieOrder,
) -> Result<SortedPointSet<T>> {
    for (position, p) in points.iter().enumerate() {
        if p.id != position {
            return Err(Error::BadId {
                position,
                id: p.id,
            });
        }
        if !p.x.is_finite_coord() || !p.y.is_finite_coord() {
            return Err(Error::NonFinite { id: p.id });
        }
    }
    let by_x = sorted_ids(&points, Axis::X, ties.x_desc);
    let by_y = sorted_ids(&points, Axis::Y, ties.y_desc);
    let rank_x = inverse(&by_x);
    let rank_y = inverse(&by_y);
    Ok(SortedPointSet {
        points,
        ties,
        by_x,
        by_y,
        rank_x,
        rank_y,
    })
}

fn sorted_ids<T: Coord>(points: &[Point<T>], axis: Axis, desc: bool) -> Vec<usize> {
    // sort contiguous keys rather than ids into `points`: far fewer cache
    // misses on large inputs
    let mut keyed: Vec<(T, T, usize)> = points
        .iter()
        .map(|p| match axis {
            Axis::X => (p.x, p.y, p.id),
            Axis::Y => (p.y, p.x, p.id),
        })
        .collect();
    keyed.sort_unstable_by(|a, b| {
        let second = if desc { b.1.cmp_coord(&a.1) } else { a.1.cmp_coord(&b.1) };
        a.0.cmp_coord(&b.0).then(second).then_with(|| a.2.cmp(&b.2))
    });
    keyed.into_iter().map(|k| k.2).collect()
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (rank, &id) in perm.iter().enumerate() {
        inv[id] = rank;
    }
    inv
}

impl<T: Coord> SortedPointSet<T> {
    pub fn from_coords(coords: &[(T, T)]) -> Result<Self> {
        build_sorted(Point::from_coords(coords))
    }

    pub fn ties(&self) -> TieOrder {
        self.ties
    }

    /// Whether two points share a coordinate on `axis`.
    pub fn has_ties(&self, axis: Axis) -> bool {
        let c = |id: usize| match axis {
            Axis::X => self.points[id].x,
            Axis::Y => self.points[id].y,
        };
        self.order(axis).windows(2).any(|w| c(w[0]) == c(w[1]))
    }

    /// The same points re-sorted with other secondary directions.
    pub fn with_ties(&self, ties: TieOrder) -> Self {
        build_sorted_with(self.points.clone(), ties).expect("points already validated")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    #[inline]
    pub fn point(&self, id: usize) -> &Point<T> {
        &self.points[id]
    }

    #[inline]
    pub fn by_x(&self) -> &[usize] {
        &self.by_x
    }

    #[inline]
    pub fn by_y(&self) -> &[usize] {
        &self.by_y
    }

    #[inline]
    pub fn rank_x(&self) -> &[usize] {
        &self.rank_x
    }

    #[inline]
    pub fn rank_y(&self) -> &[usize] {
        &self.rank_y
    }

    /// Ids in ascending order along `axis`.
    #[inline]
    pub fn order(&self, axis: Axis) -> &[usize] {
        match axis {
            Axis::X => &self.by_x,
            Axis::Y => &self.by_y,
        }
    }

    /// Rank of each id along `axis`.
    #[inline]
    pub fn ranks(&self, axis: Axis) -> &[usize] {
        match axis {
            Axis::X => &self.rank_x,
            Axis::Y => &self.rank_y,
        }
    }
}
