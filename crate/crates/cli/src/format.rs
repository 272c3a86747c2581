//! Text and JSON rendering of multivectors.
//!
//! Terms print in storage order (grade-major, then lexicographic), which
//! makes both formats deterministic. The text form re-parses to the same
//! multivector: `1 + 2*e1 - 3*e1^e2` round-trips.

use gacalc_core::Multivector;
use serde::Serialize;

/// Render as calculator syntax: `1 + 2*e1 - 3*e1^e2`, or `0` when empty.
pub fn text(mv: &Multivector) -> String {
    if mv.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (blade, coeff) in mv.terms() {
        let negative = coeff < 0.0;
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = coeff.abs();
        let blade_part: Vec<String> = blade.indices().map(|i| format!("e{i}")).collect();
        if blade_part.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if magnitude != 1.0 {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&blade_part.join("^"));
        }
    }
    out
}

#[derive(Serialize)]
struct JsonTerm {
    blade: Vec<usize>,
    coeff: f64,
}

#[derive(Serialize)]
struct JsonMultivector {
    dim: usize,
    terms: Vec<JsonTerm>,
}

/// Render as a single-line JSON object:
/// `{"dim":3,"terms":[{"blade":[1,2],"coeff":-3.0}]}`.
pub fn json(mv: &Multivector) -> String {
    let doc = JsonMultivector {
        dim: mv.dim(),
        terms: mv
            .terms()
            .map(|(blade, coeff)| JsonTerm { blade: blade.indices().collect(), coeff })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain struct serializes")
}
