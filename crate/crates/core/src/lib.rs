//! Exact solvers for covering planar points with up to three pairwise
//! interior-disjoint axis-aligned squares or rectangles, allowing up to `k`
//! outliers and minimizing the area of the largest box.
//!
//! The solvers are generic over the coordinate type ([`Coord`]); `f64` is
//! the usual choice and [`Point64`], [`Solution64`] and friends name the
//! concrete types.
//!
//! ```
//! use boxcover::{solve, Point64, ProblemSpec, Shape};
//!
//! let points = Point64::from_coords(&[(0.0, 0.0), (1.0, 1.0), (10.0, 0.0), (12.0, 2.0)]);
//! let spec = ProblemSpec::new(2, 0, Shape::Square).unwrap();
//! let sol = solve(points, spec).unwrap();
//! assert_eq!(sol.objective, 4.0);
//! ```

pub mod base;
pub mod error;
pub mod generators;
pub mod model;
pub mod oracle;
pub mod preprocess;
pub mod scalar;
pub mod solver;

pub use base::{candidate_side_lengths, solve_rect_1k, solve_square_1k, BaseResult};
pub use error::{Error, Result};
pub use model::{
    box_area, boxes_interior_disjoint, validate_points, validate_solution, AxisBox,
    CoverSolution, Point, ProblemSpec, Shape, Violation,
};

pub use preprocess::{
    build_range_index, build_sorted, extreme_points, prefix_extremes, Axis, Direction,
    ExtremeSet, Orientation, RangeExtremaIndex, RankRect, Side, SortedPointSet,
};
pub use oracle::{oracle_limit, oracle_solve};
pub use scalar::Coord;
pub use solver::{solve, solve_pk, split_search, SplitConfig};

pub type Point64 = Point<f64>;
pub type Point32 = Point<f32>;
pub type AxisBox64 = AxisBox<f64>;
pub type AxisBox32 = AxisBox<f32>;
pub type Solution64 = CoverSolution<f64>;
pub type Solution32 = CoverSolution<f32>;
pub type SortedPointSet64 = SortedPointSet<f64>;
