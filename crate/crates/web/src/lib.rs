//! WebAssembly bindings for the static demo page in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

/// JSON array of `{name, text}` reference documents.
#[wasm_bindgen]
pub fn presets() -> String {
    demo::presets()
}

/// Circuits, graph edges, components and a disconnecting set, as JSON.
#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    demo::analyze(text).map_err(|e| JsValue::from_str(&e))
}

/// Lower and upper approximation, closure and rank of a set, as JSON.
#[wasm_bindgen]
pub fn approximate(text: &str, selected: Vec<u32>) -> Result<String, JsValue> {
    let selected: Vec<usize> = selected.into_iter().map(|i| i as usize).collect();
    demo::approximate(text, &selected).map_err(|e| JsValue::from_str(&e))
}
