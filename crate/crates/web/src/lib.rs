//! Browser bindings for the interactive side-disk page in `www/`.
//!
//! The plain functions return `Result<_, String>` so they can be tested
//! natively; the `#[wasm_bindgen]` wrappers only convert errors.

use serde_json::json;
use wasm_bindgen::prelude::*;

use sidedisk_core::extremal::{harness, star, triangle_config, HarnessParams};
use sidedisk_core::{
    analyze, make_polygon, render_svg, GreatPolygon, RenderSpec, Tolerance, DEFAULT_MIN_GAP,
};

fn polygon(angles: &[f64]) -> Result<GreatPolygon, String> {
    make_polygon(angles, DEFAULT_MIN_GAP).map_err(|e| e.to_string())
}

/// SVG for the given vertex angles (radians).
pub fn figure(angles: &[f64], size: u32, show_corners: bool) -> Result<String, String> {
    let spec = RenderSpec {
        width: size,
        height: size,
        show_corners,
        ..Default::default()
    };
    render_svg(&polygon(angles)?, &spec, Tolerance::default()).map_err(|e| e.to_string())
}

/// Analysis report as JSON; `n = 2` gets a report with only the vertex count.
pub fn analysis(angles: &[f64]) -> Result<String, String> {
    let poly = polygon(angles)?;
    if poly.n() < 3 {
        return Ok(json!({ "n": poly.n() }).to_string());
    }
    let report = analyze(&poly, Tolerance::default()).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Vertex angles of a preset: `"star"` or `"triangle"`.
pub fn preset(kind: &str, n: usize) -> Result<Vec<f64>, String> {
    let poly = match kind {
        "star" => star(n).map(|(p, _)| p),
        "triangle" => triangle_config(n, None).map(|(p, _)| p),
        other => return Err(format!("unknown preset '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    Ok(poly.angles_radians())
}

pub fn harness_summary(n_min: usize, n_max: usize, trials: usize, seed: u64) -> Result<String, String> {
    let params = HarnessParams::new(n_min, n_max, trials, seed, Tolerance::default());
    let report = harness(&params).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = renderSvg)]
pub fn render_svg_js(angles: Vec<f64>, size: u32, show_corners: bool) -> Result<String, JsValue> {
    figure(&angles, size, show_corners).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = analyzeJson)]
pub fn analyze_json_js(angles: Vec<f64>) -> Result<String, JsValue> {
    analysis(&angles).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = presetAngles)]
pub fn preset_angles_js(kind: &str, n: usize) -> Result<Vec<f64>, JsValue> {
    preset(kind, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = runHarness)]
pub fn run_harness_js(n_min: usize, n_max: usize, trials: usize, seed: u64) -> Result<String, JsValue> {
    harness_summary(n_min, n_max, trials, seed).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_and_analysis() {
        let angles = preset("star", 4).unwrap();
        let svg = figure(&angles, 400, true).unwrap();
        assert_eq!(svg.matches(r#"class="corner""#).count(), 4);
        let report: serde_json::Value = serde_json::from_str(&analysis(&angles).unwrap()).unwrap();
        assert_eq!(report["d"], 2);
    }

    #[test]
    fn two_vertices_and_errors() {
        let r: serde_json::Value = serde_json::from_str(&analysis(&[0.0, 3.0]).unwrap()).unwrap();
        assert_eq!(r["n"], 2);
        assert!(analysis(&[0.0, 1e-9]).is_err());
        assert!(preset("hexagon", 6).is_err());
        assert!(preset("triangle", 3).is_err());
        assert!(figure(&[0.0, 2.0, 4.0], 10, false).is_err());
    }

    #[test]
    fn harness_runs_sequentially() {
        let r: serde_json::Value = serde_json::from_str(&harness_summary(3, 6, 20, 1).unwrap()).unwrap();
        assert_eq!(r["totals"]["trials"], 80);
        assert_eq!(r["totals"]["violated"], 0);
    }
}
