//! Domain types shared by every solver, plus solution validation.

use core::fmt;

use crate::error::{Error, Result};
use crate::preprocess::SortedPointSet;
use crate::scalar::Coord;

/// An input site. `id` is its position in the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
    pub id: usize,
}

impl<T: Coord> Point<T> {
    pub fn new(x: T, y: T, id: usize) -> Self {
        Point { x, y, id }
    }

    /// Builds points from coordinate pairs, numbering them in order.
    pub fn from_coords(coords: &[(T, T)]) -> Vec<Self> {
        coords
            .iter()
            .enumerate()
            .map(|(id, &(x, y))| Point { x, y, id })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Square,
    Rect,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Square => "square",
            Shape::Rect => "rect",
        })
    }
}

/// A closed axis-aligned box. Zero width or height is allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisBox<T> {
    pub xmin: T,
    pub ymin: T,
    pub xmax: T,
    pub ymax: T,
    pub shape: Shape,
}

impl<T: Coord> AxisBox<T> {
    /// # Panics
    /// If `xmin > xmax` or `ymin > ymax`.
    pub fn new(xmin: T, ymin: T, xmax: T, ymax: T, shape: Shape) -> Self {
        assert!(xmin <= xmax && ymin <= ymax, "inverted box");
        AxisBox {
            xmin,
            ymin,
            xmax,
            ymax,
            shape,
        }
    }

    /// The degenerate box sitting on a single point.
    pub fn point(p: &Point<T>, shape: Shape) -> Self {
        AxisBox::new(p.x, p.y, p.x, p.y, shape)
    }

    /// Tight bounding box of a non-empty set of points.
    pub fn bounding<'a, I>(points: I, shape: Shape) -> Option<Self>
    where
        I: IntoIterator<Item = &'a Point<T>>,
    {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut b = AxisBox::point(first, shape);
        for p in it {
            b.xmin = b.xmin.min_coord(p.x);
            b.xmax = b.xmax.max_coord(p.x);
            b.ymin = b.ymin.min_coord(p.y);
            b.ymax = b.ymax.max_coord(p.y);
        }
        Some(b)
    }

    #[inline]
    pub fn width(&self) -> T {
        self.xmax - self.xmin
    }

    #[inline]
    pub fn height(&self) -> T {
        self.ymax - self.ymin
    }

    #[inline]
    pub fn area(&self) -> T {
        self.width() * self.height()
    }

    /// Closed containment.
    #[inline]
    pub fn contains(&self, p: &Point<T>) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    /// True when the open interiors intersect. Boxes that only share edges or
    /// corners do not overlap; a degenerate box has an empty interior.
    pub fn interiors_overlap(&self, other: &Self) -> bool {
        let open = |b: &Self| b.xmin < b.xmax && b.ymin < b.ymax;
        open(self)
            && open(other)
            && self.xmin < other.xmax
            && other.xmin < self.xmax
            && self.ymin < other.ymax
            && other.ymin < self.ymax
    }

    /// Side lengths agree (up to rounding for floating point boxes that were
    /// positioned by adding a side length to a coordinate).
    pub fn is_square(&self) -> bool {
        self.width().approx_eq(self.height())
    }
}

pub fn box_area<T: Coord>(b: &AxisBox<T>) -> T {
    b.area()
}

pub fn boxes_interior_disjoint<T: Coord>(boxes: &[AxisBox<T>]) -> bool {
    first_overlap(boxes).is_none()
}

fn first_overlap<T: Coord>(boxes: &[AxisBox<T>]) -> Option<(usize, usize)> {
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].interiors_overlap(&boxes[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Problem parameters. Coverage is always "at least `n - k` points".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemSpec {
    pub p: usize,
    pub k: usize,
    pub shape: Shape,
}

impl ProblemSpec {
    pub fn new(p: usize, k: usize, shape: Shape) -> Result<Self> {
        if !(1..=3).contains(&p) {
            return Err(Error::InvalidBoxCount(p));
        }
        Ok(ProblemSpec { p, k, shape })
    }

    /// Outlier budget clamped to the instance size.
    pub fn budget(&self, n: usize) -> usize {
        self.k.min(n)
    }
}

/// A complete answer: the boxes actually used (absent slots are omitted),
/// the objective, and the coverage bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverSolution<T> {
    pub boxes: Vec<AxisBox<T>>,
    pub objective: T,
    pub covered: usize,
    /// Ids of uncovered points, ascending.
    pub outliers: Vec<usize>,
}

impl<T: Coord> CoverSolution<T> {
    /// Derives objective, coverage and outliers from the boxes.
    pub fn from_boxes(points: &[Point<T>], boxes: Vec<AxisBox<T>>) -> Self {
        let objective = max_area(&boxes);
        let mut outliers = Vec::new();
        for p in points {
            if !boxes.iter().any(|b| b.contains(p)) {
                outliers.push(p.id);
            }
        }
        CoverSolution {
            covered: points.len() - outliers.len(),
            boxes,
            objective,
            outliers,
        }
    }
}

fn max_area<T: Coord>(boxes: &[AxisBox<T>]) -> T {
    boxes
        .iter()
        .map(AxisBox::area)
        .fold(T::zero(), |a, b| a.max_coord(b))
}

/// The first invariant a candidate solution breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooManyBoxes { boxes: usize, p: usize },
    Shape { index: usize },
    Disjointness { first: usize, second: usize },
    ObjectiveMismatch,
    Coverage { covered: usize, required: usize },
    Bookkeeping,
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::TooManyBoxes { .. } => "box-count",
            Violation::Shape { .. } => "shape",
            Violation::Disjointness { .. } => "disjointness",
            Violation::ObjectiveMismatch => "objective-mismatch",
            Violation::Coverage { .. } => "coverage",
            Violation::Bookkeeping => "bookkeeping",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyBoxes { boxes, p } => {
                write!(f, "box-count: {boxes} boxes for p = {p}")
            }
            Violation::Shape { index } => write!(f, "shape: box {index} is not a valid square"),
            Violation::Disjointness { first, second } => {
                write!(f, "disjointness: boxes {first} and {second} overlap")
            }
            Violation::ObjectiveMismatch => {
                f.write_str("objective-mismatch: objective differs from the largest box area")
            }
            Violation::Coverage { covered, required } => {
                write!(f, "coverage: {covered} points covered, {required} required")
            }
            Violation::Bookkeeping => {
                f.write_str("bookkeeping: covered count or outlier list disagrees with the boxes")
            }
        }
    }
}

impl std::error::Error for Violation {}

/// Checks every solution invariant against the point set.
pub fn validate_solution<T: Coord>(
    set: &SortedPointSet<T>,
    spec: &ProblemSpec,
    sol: &CoverSolution<T>,
) -> core::result::Result<(), Violation> {
    validate_points(set.points(), spec, sol)
}

/// [`validate_solution`] on a plain point slice.
pub fn validate_points<T: Coord>(
    points: &[Point<T>],
    spec: &ProblemSpec,
    sol: &CoverSolution<T>,
) -> core::result::Result<(), Violation> {
    if sol.boxes.len() > spec.p {
        return Err(Violation::TooManyBoxes {
            boxes: sol.boxes.len(),
            p: spec.p,
        });
    }
    for (index, b) in sol.boxes.iter().enumerate() {
        let inverted = b.xmin > b.xmax || b.ymin > b.ymax;
        let wrong_tag = b.shape != spec.shape;
        if inverted || wrong_tag || (b.shape == Shape::Square && !b.is_square()) {
            return Err(Violation::Shape { index });
        }
    }
    if let Some((first, second)) = first_overlap(&sol.boxes) {
        return Err(Violation::Disjointness { first, second });
    }
    if !sol.objective.approx_eq(max_area(&sol.boxes)) {
        return Err(Violation::ObjectiveMismatch);
    }
    let n = points.len();
    let mut covered = 0;
    let mut outliers = sol.outliers.iter().copied().peekable();
    for p in points {
        let inside = sol.boxes.iter().any(|b| b.contains(p));
        if inside {
            covered += 1;
        }
        let listed = outliers.next_if_eq(&p.id).is_some();
        if listed == inside {
            return Err(Violation::Bookkeeping);
        }
    }
    let required = n - spec.budget(n);
    if covered < required {
        return Err(Violation::Coverage { covered, required });
    }
    if outliers.next().is_some() || covered != sol.covered {
        return Err(Violation::Bookkeeping);
    }
    Ok(())
}
