//! Three operations for the browser page in `www/`. The plain functions are
//! what the tests exercise; the `wasm_bindgen` wrappers only convert errors.

use capelli::capelli::{capelli_bitableau, capelli_h, right_young_capelli, star_capelli_bitableau};
use capelli::koszul::{inverse_koszul, koszul};
use capelli::{Poly, Tableau, UeaElement};
use wasm_bindgen::prelude::*;

/// Same limits as the command line, without an override.
const MAX_N: usize = 5;
const MAX_WEIGHT: usize = 5;

fn check_n(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must be in 1..={MAX_N}"));
    }
    Ok(())
}

fn tableau(text: &str, n: usize) -> Result<Tableau, String> {
    let t: Tableau = text.parse().map_err(|e: capelli::Error| e.to_string())?;
    t.check_alphabet(n).map_err(|e| e.to_string())?;
    if t.shape().weight() > MAX_WEIGHT {
        return Err(format!("at most {MAX_WEIGHT} boxes"));
    }
    Ok(t)
}

/// PBW expansion of `[S|T]`, `[S|T]*` or `[S|⎕T]`, followed by its Koszul image.
pub fn expand_text(kind: &str, n: usize, left: &str, right: &str) -> Result<String, String> {
    check_n(n)?;
    let (s, t) = (tableau(left, n)?, tableau(right, n)?);
    let e = match kind {
        "capelli" => capelli_bitableau(&s, &t),
        "star" => star_capelli_bitableau(&s, &t),
        "young" => right_young_capelli(&s, &t),
        other => return Err(format!("unknown type {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(format!("{e}\n\nKoszul image:\n{}", koszul(&e)))
}

/// Either direction of the Koszul map, chosen by the input's syntax.
pub fn koszul_text(n: usize, input: &str) -> Result<String, String> {
    check_n(n)?;
    let input = input.trim();
    if input.contains('e') {
        let e: UeaElement = input.parse().map_err(|e: capelli::Error| e.to_string())?;
        if e.max_index() as usize > n {
            return Err(format!("index outside 1..={n}"));
        }
        Ok(koszul(&e).to_string())
    } else {
        let p: Poly = input.parse().map_err(|e: capelli::Error| e.to_string())?;
        if p.max_index() as usize > n {
            return Err(format!("index outside 1..={n}"));
        }
        if p.degree().unwrap_or(0) > MAX_WEIGHT {
            return Err(format!("degree at most {MAX_WEIGHT}"));
        }
        Ok(inverse_koszul(&p).to_string())
    }
}

/// The Capelli element `H_k(n)` and its Koszul image.
pub fn central_text(n: usize, k: usize) -> Result<String, String> {
    check_n(n)?;
    let h = capelli_h(k, n).map_err(|e| e.to_string())?;
    Ok(format!("{h}\n\nKoszul image:\n{}", koszul(&h)))
}

#[wasm_bindgen]
pub fn expand(kind: &str, n: usize, left: &str, right: &str) -> Result<String, JsError> {
    expand_text(kind, n, left, right).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = koszulMap)]
pub fn koszul_map(n: usize, input: &str) -> Result<String, JsError> {
    koszul_text(n, input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn central(n: usize, k: usize) -> Result<String, JsError> {
    central_text(n, k).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_reports_element_and_image() {
        let out = expand_text("capelli", 2, "2 1", "1 2").unwrap();
        assert_eq!(out, "+e[1,1] +e[1,1]e[2,2] -e[1,2]e[2,1]\n\nKoszul image:\n+(1|1)(2|2) -(1|2)(2|1)");
        assert!(expand_text("star", 2, "1 3", "1 2").is_err());
        assert!(expand_text("cubic", 2, "1", "1").is_err());
        assert!(expand_text("young", 9, "1", "1").is_err());
    }

    #[test]
    fn koszul_both_ways() {
        assert_eq!(koszul_text(3, "-e[1,2]e[2,1]e[3,1] +e[1,1]e[3,1]").unwrap(), "-(1|2)(2|1)(3|1)");
        assert_eq!(koszul_text(2, "+(1|2)(2|1)").unwrap(), "-e[1,1] +e[1,2]e[2,1]");
        assert!(koszul_text(2, "+(1|3)").is_err());
    }

    #[test]
    fn central_element() {
        assert_eq!(central_text(2, 1).unwrap(), "+e[1,1] +e[2,2]\n\nKoszul image:\n+(1|1) +(2|2)");
        assert!(central_text(2, 3).is_err());
    }
}
