//! Degree-based topological indices.
//!
//! Every index here is a sum over edges of a weight `w(a, b)` of the two
//! endpoint labels. Four weight forms exist:
//!
//! | kind               | weight                   | labels  |
//! |--------------------|--------------------------|---------|
//! | `randic`           | 1/√(ab)                  | degrees |
//! | `sum_connectivity` | 1/√(a+b)                 | degrees |
//! | `abc`              | √((a+b−2)/(ab))          | degrees |
//! | `ga`               | 2√(ab)/(a+b)             | degrees |
//! | `abc4`             | √((a+b−2)/(ab))          | S-values|
//! | `ga5`              | 2√(ab)/(a+b)             | S-values|
//!
//! `abc4` and `ga5` reuse the ABC and GA forms on neighbor-degree sums.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{EdgePartition, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Randic,
    SumConnectivity,
    Abc,
    Ga,
    Abc4,
    Ga5,
}

impl IndexKind {
    pub const ALL: [IndexKind; 6] = [
        IndexKind::Randic,
        IndexKind::SumConnectivity,
        IndexKind::Abc,
        IndexKind::Ga,
        IndexKind::Abc4,
        IndexKind::Ga5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Randic => "randic",
            IndexKind::SumConnectivity => "sum_connectivity",
            IndexKind::Abc => "abc",
            IndexKind::Ga => "ga",
            IndexKind::Abc4 => "abc4",
            IndexKind::Ga5 => "ga5",
        }
    }

    /// Which vertex label feeds the weight: degrees or neighbor-degree sums.
    pub fn labeling(self) -> Labeling {
        match self {
            IndexKind::Abc4 | IndexKind::Ga5 => Labeling::NeighborSum,
            _ => Labeling::Degree,
        }
    }

    fn weight(self, a: f64, b: f64) -> f64 {
        match self {
            IndexKind::Randic => 1.0 / (a * b).sqrt(),
            IndexKind::SumConnectivity => 1.0 / (a + b).sqrt(),
            IndexKind::Abc | IndexKind::Abc4 => ((a + b - 2.0) / (a * b)).sqrt(),
            IndexKind::Ga | IndexKind::Ga5 => 2.0 * (a * b).sqrt() / (a + b),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .or(match key.as_str() {
                "sum" | "sc" => Some(IndexKind::SumConnectivity),
                "chi" => Some(IndexKind::Randic),
                _ => None,
            })
            .ok_or_else(|| Error::Usage(format!("unknown index `{s}`")))
    }
}

/// Per-edge weight of `kind` for an edge whose endpoint labels are `a`, `b`.
pub fn edge_term(kind: IndexKind, a: u64, b: u64) -> Result<f64> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!(
            "edge labels must be positive, got ({a}, {b})"
        )));
    }
    Ok(kind.weight(a as f64, b as f64))
}

/// How edge weights are accumulated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Summation {
    /// Plain left-to-right addition in edge order.
    #[default]
    Naive,
    /// Neumaier compensated summation in edge order.
    Compensated,
}

/// Edge-by-edge value of `kind` on `graph`, summed in sorted edge order.
pub fn compute_index(graph: &Graph, kind: IndexKind) -> f64 {
    compute_index_with(graph, kind, Summation::Naive)
}

pub fn compute_index_with(graph: &Graph, kind: IndexKind, summation: Summation) -> f64 {
    let labels = match kind.labeling() {
        Labeling::Degree => graph.degrees(),
        Labeling::NeighborSum => graph.neighbor_degree_sums(),
    };
    let terms = graph
        .edge_iter()
        .map(|e| kind.weight(labels[e.u] as f64, labels[e.v] as f64));
    match summation {
        Summation::Naive => terms.sum(),
        Summation::Compensated => neumaier_sum(terms),
    }
}

/// Value of `kind` as `sum(count * weight(lo, hi))` over partition classes.
pub fn compute_from_partition(partition: &EdgePartition, kind: IndexKind) -> Result<f64> {
    if partition.labeling() != kind.labeling() {
        return Err(Error::Usage(format!(
            "{kind} needs a {} partition, got a {} partition",
            kind.labeling(),
            partition.labeling()
        )));
    }
    partition
        .iter()
        .map(|(key, count)| edge_term(kind, key.lo, key.hi).map(|w| count as f64 * w))
        .sum()
}

fn neumaier_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}
