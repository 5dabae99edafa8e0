use std::f64::consts::{FRAC_PI_2, PI};

use degree_indices::closed_forms::{closed_form, min_order};
use degree_indices::indices::compute_index;
use degree_indices::partition::{partition, PartitionRow};
use degree_indices::verify::relative_error;
use degree_indices::{Family, FormulaVariant, IndexKind, Labeling};
use serde::Serialize;

/// Orders above these are too slow or too dense to draw in a browser tab.
pub const SERIES_MAX: [(Family, u32); 2] = [(Family::DoubleWheel, 400), (Family::Hanoi, 10)];
pub const LAYOUT_MAX: [(Family, u32); 2] = [(Family::DoubleWheel, 60), (Family::Hanoi, 7)];

fn cap(table: &[(Family, u32); 2], family: Family) -> u32 {
    table.iter().find(|(f, _)| *f == family).map(|&(_, c)| c).unwrap_or(0)
}

fn parse<T: std::str::FromStr<Err = degree_indices::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: degree_indices::Error| e.to_string())
}

#[derive(Debug, Serialize)]
pub struct SeriesPoint {
    pub n: u32,
    pub brute: f64,
    pub closed: Option<f64>,
    pub rel_error: Option<f64>,
}

#[derive(Debug, Serialize)]
struct Series {
    family: Family,
    kind: IndexKind,
    variant: FormulaVariant,
    points: Vec<SeriesPoint>,
}

pub fn series_points(
    family: Family,
    kind: IndexKind,
    n_min: u32,
    n_max: u32,
    variant: FormulaVariant,
) -> Result<Vec<SeriesPoint>, String> {
    let hi = n_max.min(cap(&SERIES_MAX, family));
    let lo = n_min.max(family.min_order());
    if lo > hi {
        return Err(format!("empty range {lo}..={hi} for {family}"));
    }
    (lo..=hi)
        .map(|n| {
            let graph = family.generate(n).map_err(|e| e.to_string())?;
            let brute = compute_index(&graph, kind);
            let closed = if n >= min_order(family, kind) {
                Some(closed_form(family, kind, n, variant).map_err(|e| e.to_string())?.value)
            } else {
                None
            };
            Ok(SeriesPoint {
                n,
                brute,
                closed,
                rel_error: closed.map(|c| relative_error(c, brute)),
            })
        })
        .collect()
}

pub fn index_series(family: &str, kind: &str, n_min: u32, n_max: u32, variant: &str) -> Result<String, String> {
    let (family, kind, variant) = (parse(family)?, parse(kind)?, parse(variant)?);
    let points = series_points(family, kind, n_min, n_max, variant)?;
    Ok(to_json(&Series { family, kind, variant, points }))
}

#[derive(Debug, Serialize)]
struct Table {
    mode: Labeling,
    edges: u64,
    classes: Vec<PartitionRow>,
}

pub fn partition_table(family: &str, n: u32, mode: &str) -> Result<String, String> {
    let family: Family = parse(family)?;
    let mode: Labeling = parse(mode)?;
    if n > cap(&SERIES_MAX, family) {
        return Err(format!("{family} order capped at {} in the demo", cap(&SERIES_MAX, family)));
    }
    let graph = family.generate(n).map_err(|e| e.to_string())?;
    let p = partition(&graph, mode);
    Ok(to_json(&Table {
        mode,
        edges: p.total_edges(),
        classes: p.rows(),
    }))
}

#[derive(Debug, Serialize, PartialEq)]
pub struct Vertex {
    pub x: f64,
    pub y: f64,
    pub label: usize,
}

#[derive(Debug, Serialize)]
pub struct Layout {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[usize; 2]>,
}

/// Unit-square coordinates: DW_n as two concentric rings around the hub,
/// H_n as a Sierpiński gasket with each disc halving the triangle size.
pub fn layout(family: Family, n: u32, mode: Labeling) -> Result<Layout, String> {
    let limit = cap(&LAYOUT_MAX, family);
    if n > limit {
        return Err(format!("{family} layout capped at n = {limit}"));
    }
    let graph = family.generate(n).map_err(|e| e.to_string())?;
    let labels = match mode {
        Labeling::Degree => graph.degrees(),
        Labeling::NeighborSum => graph.neighbor_degree_sums(),
    };
    let positions: Vec<(f64, f64)> = match family {
        Family::DoubleWheel => {
            let n = n as usize;
            let ring = |i: usize, r: f64| {
                let t = 2.0 * PI * i as f64 / n as f64 - FRAC_PI_2;
                (0.5 + r * t.cos(), 0.5 + r * t.sin())
            };
            std::iter::once((0.5, 0.5))
                .chain((0..n).map(|i| ring(i, 0.22)))
                .chain((0..n).map(|i| ring(i, 0.45)))
                .collect()
        }
        Family::Hanoi => {
            let corners = [(0.5, 0.05), (0.05, 0.83), (0.95, 0.83)];
            let scale = 1.0 / ((1u64 << n) - 1) as f64;
            (0..graph.vertex_count())
                .map(|mut state| {
                    let (mut x, mut y) = (0.0, 0.0);
                    for disc in 0..n {
                        let peg = state % 3;
                        state /= 3;
                        let w = (1u64 << disc) as f64 * scale;
                        x += w * corners[peg].0;
                        y += w * corners[peg].1;
                    }
                    (x, y)
                })
                .collect()
        }
    };
    Ok(Layout {
        vertices: positions
            .into_iter()
            .zip(labels)
            .map(|((x, y), label)| Vertex { x, y, label })
            .collect(),
        edges: graph.edges().into_iter().map(|e| [e.u, e.v]).collect(),
    })
}

pub fn graph_layout(family: &str, n: u32, mode: &str) -> Result<String, String> {
    Ok(to_json(&layout(parse(family)?, n, parse(mode)?)?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}
