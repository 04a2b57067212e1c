//! Browser bindings. Each export takes source text and returns a JSON
//! string; failures come back as `{"error": "..."}`.

use omega_power::classify::classify_report;
use omega_power::dict::{parse_dictionary, DictionaryExpression};
use omega_power::engine::{greedy_decompose, member_lasso, minimal_generator};
use omega_power::error::Error;
use omega_power::rank::rank_lasso;
use omega_power::reductions::{alpha0_death_step, alpha0_rank, tree_dict, tree_ranges, FiniteTree};
use omega_power::streams::Lasso;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const DECOMPOSE_CHUNKS: usize = 8;

fn err(e: Error) -> String {
    e.to_string()
}

fn dictionary(src: &str) -> Result<DictionaryExpression, String> {
    parse_dictionary(src).map_err(err)
}

fn render(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Membership, rank and the first chunks of the leftmost decomposition.
pub fn lasso_report(dict_src: &str, lasso: &str) -> Result<Value, String> {
    let d = dictionary(dict_src)?;
    let alpha: Lasso = lasso.trim().parse().map_err(err)?;
    d.alphabet().check(alpha.head()).map_err(err)?;
    d.alphabet().check(alpha.cycle()).map_err(err)?;
    let member = member_lasso(&d, &alpha);
    let chunks = if member {
        let cs = greedy_decompose(&d, &alpha, DECOMPOSE_CHUNKS).map_err(err)?;
        Value::from(cs.iter().map(ToString::to_string).collect::<Vec<_>>())
    } else {
        Value::Null
    };
    Ok(json!({
        "lasso": alpha.to_string(),
        "member": member,
        "rank": rank_lasso(&d, &alpha),
        "chunks": chunks,
    }))
}

/// Topological class, generator classes, rank summary and a minimal
/// generator of a finite dictionary.
pub fn dictionary_report(dict_src: &str) -> Result<Value, String> {
    let d = dictionary(dict_src)?.to_finite().map_err(|e| match e {
        Error::NotFinite => "classification needs a finite dictionary".to_string(),
        other => err(other),
    })?;
    let mut v = serde_json::to_value(classify_report(&d).map_err(err)?).map_err(|e| e.to_string())?;
    let minimal = minimal_generator(&d).map_err(err)?;
    v["dictionary"] = json!(d.to_string());
    v["minimal"] = json!(minimal.words().iter().map(ToString::to_string).collect::<Vec<_>>());
    v["antichain"] = json!(d.is_antichain());
    v["code"] = json!(d.is_code().unwrap_or(false));
    Ok(v)
}

/// Block ranges, ranks and death step of the tree encoding; the words
/// themselves only when they are small enough to list.
pub fn tree_report(tree_src: &str) -> Result<Value, String> {
    let t: FiniteTree = tree_src.parse().map_err(err)?;
    let ranges = tree_ranges(&t).map_err(err)?;
    let words = tree_dict(&t)
        .ok()
        .filter(|d| d.words().iter().map(|w| w.len()).sum::<usize>() <= 4096)
        .map(|d| d.words().iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(json!({
        "nodes": t.len(),
        "tree_rank": t.rank(),
        "alpha0_rank": alpha0_rank(&t).map_err(err)?,
        "alpha0_death_step": alpha0_death_step(&t).map_err(err)?.to_string(),
        "blocks": ranges.iter().map(|r| [r.lo.to_string(), r.hi.to_string()]).collect::<Vec<_>>(),
        "words": words,
    }))
}

#[wasm_bindgen]
pub fn analyze_lasso(dict_src: &str, lasso: &str) -> String {
    render(lasso_report(dict_src, lasso))
}

#[wasm_bindgen]
pub fn classify_dictionary(dict_src: &str) -> String {
    render(dictionary_report(dict_src))
}

#[wasm_bindgen]
pub fn encode_tree(tree_src: &str) -> String {
    render(tree_report(tree_src))
}
