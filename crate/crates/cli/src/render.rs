use braid_gamma::braid::BraidWord;
use braid_gamma::poly::{Monomial, Poly};
use serde_json::{json, Map, Value};

/// `{"variables": [...], "terms": [[exps..., "coeff"], ...]}`
pub fn poly_json<M: Monomial>(p: &Poly<M>) -> Value {
    let terms: Vec<Value> = p
        .term_rows()
        .into_iter()
        .map(|(exps, c)| {
            let mut row: Vec<Value> = exps.into_iter().map(Value::from).collect();
            row.push(Value::from(c));
            Value::Array(row)
        })
        .collect();
    json!({ "variables": M::VARIABLES, "terms": terms })
}

/// A constant with no variables, for integer-valued results.
pub fn integer_json(x: i64) -> Value {
    json!({ "variables": [], "terms": [[x.to_string()]] })
}

/// The common envelope shared by every per-braid subcommand.
pub fn envelope(input: &str, w: &BraidWord, result: Value) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("input".into(), Value::from(input));
    obj.insert("strands".into(), Value::from(w.strands()));
    obj.insert("exponent_sum".into(), Value::from(w.exponent_sum()));
    obj.insert("components".into(), Value::from(w.components()));
    obj.insert("result".into(), result);
    obj
}
