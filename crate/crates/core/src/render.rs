//! Text and JSON renderings of a [`Decomposition`].
//!
//! Integers are printed as plain decimal digits at any size, so the JSON is
//! written by hand with a fixed key order.

use std::fmt::Write;

use crate::closedform::Decomposition;
use crate::exactmath::UnitTriple;

pub fn to_text(d: &Decomposition) -> String {
    let t = d.triple();
    let mut s = format!(
        "{}/{} = 1/{} + 1/{} + 1/{}\nmethod: {}\n",
        d.r(),
        d.a(),
        t.b(),
        t.c(),
        t.d(),
        d.method()
    );
    if let Some(w) = d.witness() {
        let _ = writeln!(s, "witness: x={} y={} z={} (q={})", w.x(), w.y(), w.z(), w.q());
    }
    s
}

/// `{"r":..,"a":..,"b":..,"c":..,"d":..,"method":"..","witness":null|{"x":..,"y":..,"z":..,"q":..}}`
pub fn to_json(d: &Decomposition) -> String {
    let t = d.triple();
    let witness = match d.witness() {
        Some(w) => format!(
            "{{\"x\":{},\"y\":{},\"z\":{},\"q\":{}}}",
            w.x(),
            w.y(),
            w.z(),
            w.q()
        ),
        None => "null".to_string(),
    };
    format!(
        "{{\"r\":{},\"a\":{},\"b\":{},\"c\":{},\"d\":{},\"method\":\"{}\",\"witness\":{}}}",
        d.r(),
        d.a(),
        t.b(),
        t.c(),
        t.d(),
        d.method(),
        witness
    )
}

/// One `b,c,d` line per triple.
pub fn triples_csv(ts: &[UnitTriple]) -> String {
    ts.iter()
        .map(|t| format!("{},{},{}\n", t.b(), t.c(), t.d()))
        .collect()
}
