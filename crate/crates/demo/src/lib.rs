//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string. The work happens in [`explore`],
//! which is plain Rust and is what the tests exercise.

use wasm_bindgen::prelude::*;

pub mod explore;

/// Brute-force and closed-form values of one index over a range of orders.
#[wasm_bindgen(js_name = indexSeries)]
pub fn index_series(family: &str, kind: &str, n_min: u32, n_max: u32, variant: &str) -> Result<String, JsError> {
    explore::index_series(family, kind, n_min, n_max, variant).map_err(|e| JsError::new(&e))
}

/// Edge partition classes of one family member.
#[wasm_bindgen(js_name = partitionTable)]
pub fn partition_table(family: &str, n: u32, mode: &str) -> Result<String, JsError> {
    explore::partition_table(family, n, mode).map_err(|e| JsError::new(&e))
}

/// Vertex positions, labels and edges for drawing a family member.
#[wasm_bindgen(js_name = graphLayout)]
pub fn graph_layout(family: &str, n: u32, mode: &str) -> Result<String, JsError> {
    explore::graph_layout(family, n, mode).map_err(|e| JsError::new(&e))
}
