//! Seeded graph families. All randomness comes from `ChaCha8Rng::seed_from_u64`,
//! so output depends only on the arguments.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphcore::Digraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `m` arcs with endpoints drawn uniformly (no self-loops).
    Gnp,
    /// Layers of about `sqrt(n)` vertices; most arcs go one layer down.
    Layered,
    /// The path `0 -> 1 -> ... -> n-1` plus chords that never beat it, so
    /// the shortest path tree from `0` is the whole path.
    PathShortcut,
    /// Bidirected grid of about `sqrt(n)` columns; `m` is ignored.
    Grid,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Gnp,
        Family::Layered,
        Family::PathShortcut,
        Family::Grid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::Layered => "layered",
            Family::PathShortcut => "path-shortcut",
            Family::Grid => "grid",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown graph family `{s}`"))
    }
}

/// Generates a graph on `n` vertices with weights in `1..=max_w`.
///
/// # Panics
/// If `max_w == 0`.
pub fn generate(family: Family, n: usize, m: usize, max_w: u64, seed: u64) -> Digraph {
    assert!(max_w >= 1, "weights start at 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = match family {
        Family::Gnp => gnp(&mut rng, n, m, max_w),
        Family::Layered => layered(&mut rng, n, m, max_w),
        Family::PathShortcut => path_shortcut(&mut rng, n, m, max_w),
        Family::Grid => grid(&mut rng, n, max_w),
    };
    Digraph::new(n, edges).expect("generated ids are in range")
}

type Arcs = Vec<(usize, usize, u64)>;

fn gnp(rng: &mut ChaCha8Rng, n: usize, m: usize, max_w: u64) -> Arcs {
    if n < 2 {
        return Vec::new();
    }
    (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            (u, v, rng.gen_range(1..=max_w))
        })
        .collect()
}

fn layered(rng: &mut ChaCha8Rng, n: usize, m: usize, max_w: u64) -> Arcs {
    if n < 2 {
        return Vec::new();
    }
    let width = (n as f64).sqrt().ceil() as usize;
    let layer = |v: usize| v / width;
    let mut arcs = Arcs::new();
    // every vertex past the first layer gets one parent in the layer above
    for v in width.min(n)..n {
        let above = (layer(v) - 1) * width;
        let u = rng.gen_range(above..above + width);
        arcs.push((u, v, rng.gen_range(1..=max_w)));
    }
    for v in 1..width.min(n) {
        arcs.push((0, v, rng.gen_range(1..=max_w)));
    }
    while arcs.len() < m {
        let u = rng.gen_range(0..n);
        let v = if rng.gen_bool(0.8) && layer(u) < layer(n - 1) {
            let below = (layer(u) + 1) * width;
            rng.gen_range(below..(below + width).min(n))
        } else {
            rng.gen_range(0..n)
        };
        if u != v {
            arcs.push((u, v, rng.gen_range(1..=max_w)));
        }
    }
    arcs
}

fn path_shortcut(rng: &mut ChaCha8Rng, n: usize, m: usize, max_w: u64) -> Arcs {
    let mut arcs: Arcs = (1..n).map(|v| (v - 1, v, 1)).collect();
    if n < 3 {
        return arcs;
    }
    while arcs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if v > u + 1 {
            // a forward chord must be strictly longer than the path it skips
            let span = (v - u) as u64;
            if span + 1 > max_w {
                continue;
            }
            arcs.push((u, v, rng.gen_range(span + 1..=max_w)));
        } else {
            arcs.push((u, v, rng.gen_range(1..=max_w)));
        }
    }
    arcs
}

fn grid(rng: &mut ChaCha8Rng, n: usize, max_w: u64) -> Arcs {
    let cols = ((n as f64).sqrt().ceil() as usize).max(1);
    let mut arcs = Arcs::new();
    for v in 0..n {
        for u in [v + 1, v + cols] {
            let same_row = u != v + 1 || u % cols != 0;
            if u < n && same_row {
                arcs.push((v, u, rng.gen_range(1..=max_w)));
                arcs.push((u, v, rng.gen_range(1..=max_w)));
            }
        }
    }
    arcs
}
