use num_traits::{One, Zero};
use prelie_core::algebra::Violation;
use prelie_core::cochain::{Cochain, CochainBasis};
use prelie_core::scalar::format_rational;
use prelie_core::Q;
use serde_json::{json, Value};

/// `v1 - 1/2 v3`, or `0`.
pub fn combination(coeffs: &[Q], symbol: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = *c < Q::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&format_rational(&magnitude));
            out.push(' ');
        }
        out.push_str(&format!("{symbol}{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// One line `name(e1∧e2, e3) = ...` per basis argument with a nonzero value.
pub fn cochain_lines(f: &Cochain<Q>, name: &str, module_symbol: &str) -> Vec<String> {
    let v = f.module_dim();
    let basis = CochainBasis::new(f.arity(), f.algebra_dim()).expect("arity at least 1");
    let mut lines = Vec::new();
    for (pos, (wedge, last)) in basis.elements().enumerate() {
        let value = &f.coordinates()[pos * v..(pos + 1) * v];
        if value.iter().all(Zero::is_zero) {
            continue;
        }
        let mut args = String::new();
        if !wedge.is_empty() {
            let w: Vec<String> = wedge.iter().map(|x| format!("e{}", x + 1)).collect();
            args.push_str(&w.join("∧"));
            args.push_str(", ");
        }
        args.push_str(&format!("e{}", last + 1));
        lines.push(format!("{name}({args}) = {}", combination(value, module_symbol)));
    }
    lines
}

pub fn rationals(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|c| Value::from(format_rational(c))).collect())
}

pub fn bracketed(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

pub fn violation_json(part: Option<&str>, v: &Violation<Q>) -> Value {
    json!({
        "part": part,
        "axiom": v.axiom,
        "indices": v.one_based(),
        "lhs": rationals(&v.lhs),
        "rhs": rationals(&v.rhs),
    })
}

pub fn violation_text(part: Option<&str>, v: &Violation<Q>) -> String {
    let idx: Vec<String> = v.one_based().iter().map(ToString::to_string).collect();
    let prefix = part.map(|p| format!("in {p}: ")).unwrap_or_default();
    format!(
        "{prefix}{} fails at ({}): lhs = {}, rhs = {}",
        v.axiom,
        idx.join(","),
        bracketed(&v.lhs),
        bracketed(&v.rhs)
    )
}
