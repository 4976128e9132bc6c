//! Seeded instance generators. Every generator is a pure function of its
//! arguments; randomness comes from ChaCha8 seeded with the given `u64`, so
//! output is identical across platforms.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::model::{AxisBox, Point, Shape};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in `bbox`. No two points share an x or a y coordinate:
/// a coordinate that collides with an earlier one is drawn again.
pub fn gen_uniform(n: usize, seed: u64, bbox: AxisBox<f64>) -> Vec<Point<f64>> {
    let mut r = rng(seed);
    let mut seen_x = HashSet::with_capacity(n);
    let mut seen_y = HashSet::with_capacity(n);
    let draw = |r: &mut ChaCha8Rng, lo: f64, hi: f64, seen: &mut HashSet<u64>| loop {
        let v = if lo < hi { r.random_range(lo..=hi) } else { lo };
        if seen.insert(v.to_bits()) || lo == hi {
            return v;
        }
    };
    (0..n)
        .map(|id| {
            let x = draw(&mut r, bbox.xmin, bbox.xmax, &mut seen_x);
            let y = draw(&mut r, bbox.ymin, bbox.ymax, &mut seen_y);
            Point::new(x, y, id)
        })
        .collect()
}

/// The unit square, the default region for [`gen_uniform`].
pub fn unit_box() -> AxisBox<f64> {
    AxisBox::new(0.0, 0.0, 1.0, 1.0, Shape::Rect)
}

/// `c` Gaussian clusters of `per_cluster` points each. Centres are uniform in
/// `[0, 100]²`; `spread` is the standard deviation around each centre.
/// With `per_cluster == 1` the centres themselves are returned.
pub fn gen_clusters(c: usize, per_cluster: usize, spread: f64, seed: u64) -> Vec<Point<f64>> {
    let mut r = rng(seed);
    let noise = Normal::new(0.0, spread.abs()).expect("finite spread");
    let mut out = Vec::with_capacity(c * per_cluster);
    for _ in 0..c {
        let cx: f64 = r.random_range(0.0..100.0);
        let cy: f64 = r.random_range(0.0..100.0);
        for i in 0..per_cluster {
            let (x, y) = if per_cluster == 1 && i == 0 {
                (cx, cy)
            } else {
                (cx + noise.sample(&mut r), cy + noise.sample(&mut r))
            };
            out.push(Point::new(x, y, out.len()));
        }
    }
    out
}

/// Points `(v, v)` for each value, in order.
pub fn gen_diagonal(values: &[f64]) -> Vec<Point<f64>> {
    values
        .iter()
        .enumerate()
        .map(|(id, &v)| Point::new(v, v, id))
        .collect()
}

/// `n` points on a small integer grid with about `sqrt(n)` distinct values
/// per axis, so many points share x or y coordinates and some coincide.
pub fn gen_shared_coords(n: usize, seed: u64) -> Vec<Point<f64>> {
    let mut r = rng(seed);
    let levels = ((n as f64).sqrt().ceil() as u32).max(2);
    (0..n)
        .map(|id| {
            let x = r.random_range(0..levels) as f64;
            let y = r.random_range(0..levels) as f64;
            Point::new(x, y, id)
        })
        .collect()
}

/// The full `side × side` grid with unit spacing, row by row.
pub fn gen_grid(side: usize) -> Vec<Point<f64>> {
    (0..side * side)
        .map(|id| Point::new((id % side) as f64, (id / side) as f64, id))
        .collect()
}
