//! Edge partitions by unordered endpoint-label pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex label used to classify edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    /// Vertex degree.
    Degree,
    /// Sum of the degrees of the vertex's neighbors.
    NeighborSum,
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Labeling::Degree => "degree",
            Labeling::NeighborSum => "neighbor-sum",
        })
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "degree" => Ok(Labeling::Degree),
            "neighbor-sum" | "neighbour-sum" | "s" => Ok(Labeling::NeighborSum),
            _ => Err(Error::Usage(format!("unknown partition mode `{s}`"))),
        }
    }
}

/// Unordered label pair stored with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DegreePairKey {
    pub lo: u64,
    pub hi: u64,
}

impl DegreePairKey {
    pub fn new(a: u64, b: u64) -> Self {
        DegreePairKey {
            lo: a.min(b),
            hi: a.max(b),
        }
    }
}

impl fmt::Display for DegreePairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.lo, self.hi)
    }
}

/// One class of a partition in flat form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRow {
    pub lo: u64,
    pub hi: u64,
    pub count: u64,
}

/// Edge counts per label-pair class. Empty classes are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    mode: Labeling,
    classes: BTreeMap<DegreePairKey, u64>,
}

impl EdgePartition {
    pub fn labeling(&self) -> Labeling {
        self.mode
    }

    /// Count of edges in class `{a, b}`, zero when absent.
    pub fn count(&self, a: u64, b: u64) -> u64 {
        self.classes
            .get(&DegreePairKey::new(a, b))
            .copied()
            .unwrap_or(0)
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn total_edges(&self) -> u64 {
        self.classes.values().sum()
    }

    /// Classes in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = (DegreePairKey, u64)> + '_ {
        self.classes.iter().map(|(&k, &c)| (k, c))
    }

    pub fn classes(&self) -> &BTreeMap<DegreePairKey, u64> {
        &self.classes
    }

    pub fn rows(&self) -> Vec<PartitionRow> {
        self.iter()
            .map(|(k, count)| PartitionRow { lo: k.lo, hi: k.hi, count })
            .collect()
    }
}

pub fn degree_partition(graph: &Graph) -> EdgePartition {
    partition(graph, Labeling::Degree)
}

pub fn neighbor_sum_partition(graph: &Graph) -> EdgePartition {
    partition(graph, Labeling::NeighborSum)
}

pub fn partition(graph: &Graph, mode: Labeling) -> EdgePartition {
    let labels = match mode {
        Labeling::Degree => graph.degrees(),
        Labeling::NeighborSum => graph.neighbor_degree_sums(),
    };
    let mut classes = BTreeMap::new();
    for e in graph.edge_iter() {
        let key = DegreePairKey::new(labels[e.u] as u64, labels[e.v] as u64);
        *classes.entry(key).or_insert(0) += 1;
    }
    EdgePartition { mode, classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{double_wheel, hanoi};

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = degree_partition(&g);
        assert_eq!(p.classes().iter().collect::<Vec<_>>(), [(&DegreePairKey::new(2, 2), &3)]);
        let p = neighbor_sum_partition(&g);
        assert_eq!(p.count(4, 4), 3);
        assert_eq!(p.class_count(), 1);
    }

    #[test]
    fn double_wheel_tables() {
        for n in [3u64, 4, 5, 17] {
            let g = double_wheel(n as usize).unwrap();
            let p = degree_partition(&g);
            assert_eq!(p.class_count(), 2);
            assert_eq!(p.count(3, 3), 2 * n);
            assert_eq!(p.count(2 * n, 3), 2 * n);
            let p = neighbor_sum_partition(&g);
            assert_eq!(p.class_count(), 2);
            assert_eq!(p.count(2 * n + 6, 2 * n + 6), 2 * n);
            assert_eq!(p.count(2 * n + 6, 6 * n), 2 * n);
        }
    }

    #[test]
    fn hanoi_three_tables() {
        let g = hanoi(3).unwrap();
        let p = degree_partition(&g);
        assert_eq!(p.count(2, 3), 6);
        assert_eq!(p.count(3, 3), 33);
        let p = neighbor_sum_partition(&g);
        let rows: Vec<_> = p.iter().map(|(k, c)| (k.lo, k.hi, c)).collect();
        assert_eq!(rows, [(6, 8, 6), (8, 8, 3), (8, 9, 6), (9, 9, 24)]);
        assert_eq!(p.count(9, 8), 6);
    }

    #[test]
    fn mode_names() {
        assert_eq!("neighbor-sum".parse::<Labeling>().unwrap(), Labeling::NeighborSum);
        assert_eq!("neighbor_sum".parse::<Labeling>().unwrap(), Labeling::NeighborSum);
        assert_eq!("Degree".parse::<Labeling>().unwrap(), Labeling::Degree);
        assert!("eccentricity".parse::<Labeling>().is_err());
        assert_eq!(DegreePairKey::new(9, 8).to_string(), "E(8,9)");
    }
}
