//! The two graph families: double wheels and Tower-of-Hanoi state graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The two graph families with closed-form index formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "dw")]
    DoubleWheel,
    #[serde(rename = "hanoi")]
    Hanoi,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::DoubleWheel, Family::Hanoi];

    pub fn name(self) -> &'static str {
        match self {
            Family::DoubleWheel => "dw",
            Family::Hanoi => "hanoi",
        }
    }

    /// Smallest order the generator accepts.
    pub fn min_order(self) -> u32 {
        match self {
            Family::DoubleWheel => 3,
            Family::Hanoi => 1,
        }
    }

    /// Builds the family member of order `n`.
    pub fn generate(self, n: u32) -> Result<Graph> {
        match self {
            Family::DoubleWheel => double_wheel(n as usize),
            Family::Hanoi => hanoi(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dw" | "double-wheel" | "double_wheel" => Ok(Family::DoubleWheel),
            "h" | "hanoi" => Ok(Family::Hanoi),
            _ => Err(Error::Usage(format!("unknown graph family `{s}`"))),
        }
    }
}

/// Largest Hanoi order built by [`hanoi`]; 3^13 is about 1.6M states.
pub const HANOI_MAX_ORDER: u32 = 13;

/// Double wheel DW_n: two disjoint n-cycles joined to a common hub.
///
/// Numbering: hub is vertex 0, the inner cycle is `1..=n`, the outer cycle
/// is `n+1..=2n`. Each cycle is closed by the edge between its first and
/// last vertex.
pub fn double_wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "double wheel needs cycles of length >= 3, got n = {n}"
        )));
    }
    let mut edges = Vec::with_capacity(4 * n);
    for offset in [1, n + 1] {
        for i in 0..n {
            let v = offset + i;
            edges.push((0, v));
            edges.push((v, offset + (i + 1) % n));
        }
    }
    Graph::from_edges(2 * n + 1, edges)
}

/// Tower-of-Hanoi state graph H_n with the default size cap.
pub fn hanoi(n: u32) -> Result<Graph> {
    hanoi_with_cap(n, HANOI_MAX_ORDER)
}

/// Tower-of-Hanoi state graph for `n` discs on three pegs.
///
/// A state assigns a peg to every disc; disc 0 is the smallest. The vertex
/// id of a state is `sum(peg[i] * 3^i)`, so disc 0 is the least significant
/// ternary digit. Two states are adjacent when one legal move turns one into
/// the other: disc `i` may move from peg `a` to peg `b` iff no smaller disc
/// sits on either peg.
pub fn hanoi_with_cap(n: u32, cap: u32) -> Result<Graph> {
    if n < 1 || n > cap {
        return Err(Error::Domain(format!(
            "Hanoi order must lie in 1..={cap}, got n = {n}"
        )));
    }
    let discs = n as usize;
    let states = 3usize.pow(n);
    let powers: Vec<usize> = (0..discs).map(|i| 3usize.pow(i as u32)).collect();

    let mut adjacency = Vec::with_capacity(states);
    let mut pegs = vec![0usize; discs];
    for state in 0..states {
        let mut rest = state;
        for peg in pegs.iter_mut() {
            *peg = rest % 3;
            rest /= 3;
        }
        // smallest disc on each peg, `discs` when the peg is empty
        let mut top = [discs; 3];
        for (disc, &peg) in pegs.iter().enumerate().rev() {
            top[peg] = disc;
        }
        let mut neighbors = Vec::with_capacity(3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let disc = top[a].min(top[b]);
            if disc == discs {
                continue;
            }
            let from = pegs[disc];
            let to = if from == a { b } else { a };
            neighbors.push(state - from * powers[disc] + to * powers[disc]);
        }
        adjacency.push(neighbors);
    }
    Ok(Graph::from_adjacency(adjacency))
}

/// Vertex ids of the three perfect states (all discs on one peg).
pub fn hanoi_corners(n: u32) -> [usize; 3] {
    let all_ones = (3usize.pow(n) - 1) / 2;
    [0, all_ones, 2 * all_ones]
}
