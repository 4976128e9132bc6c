//! Positioning squares so that they stay pairwise interior-disjoint.
//!
//! Each square must contain the bounding box (span) of its points, which
//! leaves it a range of positions on each axis. For every pair a separation
//! is chosen (one before the other along x or along y); along each axis the
//! chosen separations form precedence constraints that are satisfied, when
//! possible, by placing every square as early as its predecessors allow.
//! The separations implied by the solver's split lines are tried first, then
//! every other combination.

use crate::model::{AxisBox, Shape};
use crate::preprocess::{Axis, Orientation};
use crate::scalar::Coord;

/// Box `before` lies entirely on the low side of box `after` across a line of
/// the given orientation (left of it for a vertical line, below it for a
/// horizontal one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separation {
    pub before: usize,
    pub after: usize,
    pub orientation: Orientation,
}

/// Positions squares given as `(span, side)` pairs. Returns `None` when no
/// choice of pairwise separations admits a placement.
pub fn place_squares<T: Coord>(
    squares: &[(AxisBox<T>, T)],
    natural: &[Separation],
) -> Option<Vec<AxisBox<T>>> {
    let n = squares.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let options: Vec<Vec<Separation>> = pairs
        .iter()
        .map(|&(i, j)| {
            let nat = natural
                .iter()
                .find(|s| (s.before, s.after) == (i, j) || (s.before, s.after) == (j, i))
                .copied();
            let mut opts: Vec<Separation> = nat.into_iter().collect();
            for orientation in Orientation::BOTH {
                for (before, after) in [(i, j), (j, i)] {
                    let s = Separation {
                        before,
                        after,
                        orientation,
                    };
                    if Some(s) != nat {
                        opts.push(s);
                    }
                }
            }
            opts
        })
        .collect();

    let mut choice = vec![0usize; pairs.len()];
    loop {
        let chosen: Vec<Separation> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        if let Some(boxes) = try_place(squares, &chosen) {
            return Some(boxes);
        }
        // next combination, odometer style
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return None;
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

fn try_place<T: Coord>(squares: &[(AxisBox<T>, T)], seps: &[Separation]) -> Option<Vec<AxisBox<T>>> {
    let xs = place_axis(squares, seps, Axis::X)?;
    let ys = place_axis(squares, seps, Axis::Y)?;
    Some(
        xs.into_iter()
            .zip(ys)
            .map(|((x0, x1), (y0, y1))| AxisBox::new(x0, y0, x1, y1, Shape::Square))
            .collect(),
    )
}

/// Earliest-start placement along one axis under the precedence constraints
/// of the separations across that axis.
fn place_axis<T: Coord>(
    squares: &[(AxisBox<T>, T)],
    seps: &[Separation],
    axis: Axis,
) -> Option<Vec<(T, T)>> {
    let n = squares.len();
    let edges: Vec<(usize, usize)> = seps
        .iter()
        .filter(|s| s.orientation.axis() == axis)
        .map(|s| (s.before, s.after))
        .collect();
    let mut indegree = vec![0usize; n];
    for &(_, b) in &edges {
        indegree[b] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).rev().collect();
    let mut placed: Vec<Option<(T, T)>> = vec![None; n];
    let mut done = 0;
    while let Some(i) = ready.pop() {
        let (span, side) = squares[i];
        let (lo, hi) = match axis {
            Axis::X => (span.xmin, span.xmax),
            Axis::Y => (span.ymin, span.ymax),
        };
        let mut start = (hi - side).min_coord(lo);
        let mut pushed = false;
        for &(a, b) in &edges {
            if b == i {
                let (_, end) = placed[a].expect("predecessor placed first");
                if end > start {
                    start = end;
                    pushed = true;
                }
            }
        }
        if start > lo {
            return None;
        }
        let end = if pushed { (start + side).max_coord(hi) } else { hi };
        placed[i] = Some((start, end));
        done += 1;
        for &(a, b) in &edges {
            if a == i {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    if done < n {
        return None;
    }
    Some(placed.into_iter().map(|p| p.expect("all placed")).collect())
}
