//! Sorted views, extreme-point selection and the rank-space query index.

mod extremes;
mod range_index;
mod sorted;
mod wavelet;

pub use extremes::{extreme_points, extreme_subset, extremes_of, ExtremeSet};
pub use range_index::{build_range_index, prefix_extremes, RangeExtremaIndex, RankRect};
pub use sorted::{
    axis_cmp, axis_cmp_with, build_sorted, build_sorted_with, Axis, SortedPointSet, TieOrder,
};
pub use wavelet::WaveletMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

/// Orientation of a separating line. A vertical line splits the points by
/// x-order, a horizontal one by y-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Vertical, Orientation::Horizontal];

    pub fn perpendicular(self) -> Orientation {
        match self {
            Orientation::Vertical => Orientation::Horizontal,
            Orientation::Horizontal => Orientation::Vertical,
        }
    }

    /// The axis along which points are ordered for this split.
    pub fn axis(self) -> Axis {
        match self {
            Orientation::Vertical => Axis::X,
            Orientation::Horizontal => Axis::Y,
        }
    }
}

/// Which side of a separating line: `First` holds the lower-ranked points
/// (and points on the line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::First, Side::Second];
}
