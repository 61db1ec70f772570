//! Browser bindings: describe a semigroup, classify a set, run a verification suite.
//!
//! Each export wraps a plain function returning `Result<String, String>` so the
//! logic is testable off the browser.

use fcentral::largeness::classify;
use fcentral::semigroup::make_family;
use fcentral::verify::{run_suite, Suite, VerifyConfig};
use fcentral::{ElementSet, FamilySpec, Filter, FiniteSemigroup, IdealCatalog};
use wasm_bindgen::prelude::*;

/// Largest order the page will verify exhaustively.
pub const PAGE_MAX_ORDER: usize = 3;

/// A family name such as `Z6` or `RB2x2`, or a table in file format.
pub fn load(source: &str) -> Result<FiniteSemigroup, String> {
    let text = source.trim();
    match text.parse::<FamilySpec>() {
        Ok(spec) => make_family(spec).map_err(|e| e.to_string()),
        Err(_) => FiniteSemigroup::parse_table(text).map_err(|e| e.to_string()),
    }
}

pub fn describe_text(source: &str) -> Result<String, String> {
    let s = load(source)?;
    let cat = IdealCatalog::new(&s);
    let width = (s.order() - 1).to_string().len();
    let mut out = format!("{} (order {})\n\n{:>width$} |", s.label(), s.order(), "·");
    for y in 0..s.order() {
        out.push_str(&format!(" {y:>width$}"));
    }
    out.push_str(&format!("\n{}\n", "-".repeat((width + 1) * (s.order() + 1) + 1)));
    for x in 0..s.order() {
        out.push_str(&format!("{x:>width$} |"));
        for y in 0..s.order() {
            out.push_str(&format!(" {:>width$}", s.mul(x, y)));
        }
        out.push('\n');
    }
    let list = |v: &[ElementSet]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    out.push_str(&format!(
        "\nidempotents          {}\nminimal idempotents  {}\nsmallest ideal       {}\nminimal left ideals  {}\nminimal right ideals {}\n",
        cat.idempotents,
        cat.minimal_idempotents,
        cat.smallest_ideal,
        list(&cat.minimal_left_ideals),
        list(&cat.minimal_right_ideals)
    ));
    Ok(out)
}

pub fn classify_text(source: &str, set: &str, filter: &str) -> Result<String, String> {
    let s = load(source)?;
    let a = ElementSet::parse_literal(s.order(), set).map_err(|e| e.to_string())?;
    let f = if filter.trim().is_empty() {
        Filter::trivial(s.order())
    } else {
        Filter::parse_literal(s.order(), filter).map_err(|e| e.to_string())?
    };
    classify(&s, &a, &f).map(|r| r.human()).map_err(|e| e.to_string())
}

pub fn verify_text(suite: &str, max_order: usize) -> Result<String, String> {
    if max_order > PAGE_MAX_ORDER {
        return Err(format!("the page verifies orders up to {PAGE_MAX_ORDER}"));
    }
    let suite: Suite = suite.parse().map_err(|e: fcentral::Error| e.to_string())?;
    let reports = run_suite(suite, &VerifyConfig::exhaustive(max_order)).map_err(|e| e.to_string())?;
    Ok(reports.iter().map(|r| r.human()).collect())
}

#[wasm_bindgen]
pub fn describe(source: &str) -> Result<String, JsValue> {
    describe_text(source).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = classifySet)]
pub fn classify_set(source: &str, set: &str, filter: &str) -> Result<String, JsValue> {
    classify_text(source, set, filter).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = runSuite)]
pub fn run_suite_js(suite: &str, max_order: usize) -> Result<String, JsValue> {
    verify_text(suite, max_order).map_err(|e| JsValue::from_str(&e))
}
