//! Browser bindings: family lookup, Hasse diagrams and resolution counts.

use serde_json::json;
use wasm_bindgen::prelude::*;

use quiver_strata::arrangement::num_resolutions;
use quiver_strata::format::{read_quiver, write_quiver};
use quiver_strata::namikawa::namikawa_group;
use quiver_strata::stratification::{hasse_diagram, isotropic_decompositions};
use quiver_strata::{build_family, DimVector, FamilyName, WeightedGraph};

/// A family name or a quiver document.
fn load(input: &str) -> Result<(WeightedGraph, DimVector), String> {
    let input = input.trim();
    if input.starts_with('{') {
        read_quiver(input).map_err(|e| e.to_string())
    } else {
        let f: FamilyName = input.parse().map_err(|e: quiver_strata::Error| e.to_string())?;
        build_family(f).map_err(|e| e.to_string())
    }
}

/// Quiver document, `p`, balances, Namikawa Weyl group and `(δ, θ)` rows.
pub fn describe_json(input: &str) -> Result<String, String> {
    let (g, a) = load(input)?;
    let w = namikawa_group(&g, &a).map_err(|e| e.to_string())?;
    let rows: Vec<_> = isotropic_decompositions(&g, &a)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|d| json!({ "delta": d.delta.to_string(), "theta": d.theta.to_string() }))
        .collect();
    Ok(json!({
        "quiver": serde_json::from_str::<serde_json::Value>(&write_quiver(&g, &a)).expect("valid document"),
        "p": g.p(&a).map_err(|e| e.to_string())?,
        "balances": g.balances(&a).map_err(|e| e.to_string())?,
        "namikawa": w.to_string(),
        "isotropic": rows,
    })
    .to_string())
}

/// Hasse diagram of the leaves as text.
pub fn hasse_text(input: &str) -> Result<String, String> {
    let (g, a) = load(input)?;
    hasse_diagram(&g, &a).map(|h| h.to_text()).map_err(|e| e.to_string())
}

/// Hyperplanes, chambers, Weyl group order and number of resolutions.
pub fn resolutions_text(input: &str) -> Result<String, String> {
    let (g, a) = load(input)?;
    let r = num_resolutions(&g, &a).map_err(|e| e.to_string())?;
    Ok(format!("hyperplanes={} chambers={} |W|={} N={}", r.hyperplanes, r.chambers, r.weyl_order, r.n_resolutions))
}

#[wasm_bindgen]
pub fn describe(input: &str) -> Result<String, JsError> {
    describe_json(input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hasse(input: &str) -> Result<String, JsError> {
    hasse_text(input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn resolutions(input: &str) -> Result<String, JsError> {
    resolutions_text(input).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_and_document_inputs_agree() {
        let (g, a) = build_family("I(1,1,3)".parse().unwrap()).unwrap();
        let doc = write_quiver(&g, &a);
        assert_eq!(resolutions_text("I(1,1,3)").unwrap(), "hyperplanes=6 chambers=24 |W|=6 N=4");
        assert_eq!(resolutions_text(&doc).unwrap(), resolutions_text("I(1,1,3)").unwrap());
    }

    #[test]
    fn describe_reports_namikawa_group() {
        let v: serde_json::Value = serde_json::from_str(&describe_json("IIb").unwrap()).unwrap();
        assert_eq!(v["namikawa"], "E8, order 696729600");
        assert_eq!(v["p"], 2);
    }

    #[test]
    fn errors_are_strings() {
        assert!(hasse_text("I(0,0,0)").is_err());
        assert!(hasse_text("{\"vertices\":1}").is_err());
    }
}
