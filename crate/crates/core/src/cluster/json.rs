//! Seed/matrix ⇄ JSON: {"n":…, "B":[[…]], "x":[strings], "y":[strings or
//! exponent vectors]}. Strings use the generator names x1…xn, y1…yn.

use super::seed::{generator_names, Coefficients, Seed};
use super::{ClusterError, ExchangeMatrix};
use crate::ratfun::parse_rational_function;
use crate::tropical::TropicalMonomial;
use serde_json::{json, Value};

pub fn matrix_to_json(b: &ExchangeMatrix) -> Value {
    json!(b.rows())
}

pub fn matrix_from_json(v: &Value) -> Result<ExchangeMatrix, ClusterError> {
    let rows: Vec<Vec<i64>> = serde_json::from_value(v.clone())
        .map_err(|e| ClusterError::Invalid(format!("B: {e}")))?;
    ExchangeMatrix::new(rows)
}

pub fn seed_to_json(s: &Seed) -> Value {
    let n = s.n();
    let names = generator_names(n);
    let x: Vec<String> = s.x().iter().map(|f| f.render(&names)).collect();
    let y: Value = match s.y() {
        Coefficients::Universal(ys) => {
            json!(ys.iter().map(|f| f.render(&names)).collect::<Vec<_>>())
        }
        Coefficients::Tropical(ys) => {
            json!(ys.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>())
        }
    };
    json!({"n": n, "B": matrix_to_json(s.b()), "x": x, "y": y})
}

pub fn seed_from_json(v: &Value) -> Result<Seed, ClusterError> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| ClusterError::Invalid("missing rank n".into()))? as usize;
    let b = matrix_from_json(
        v.get("B")
            .ok_or_else(|| ClusterError::Invalid("missing B".into()))?,
    )?;
    if b.n() != n {
        return Err(ClusterError::Invalid("B size disagrees with n".into()));
    }
    let names = generator_names(n);
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let parse = |src: &str| {
        parse_rational_function(src, &name_refs)
            .map_err(|e| ClusterError::Invalid(format!("`{src}`: {e}")))
    };

    let xs = v
        .get("x")
        .and_then(Value::as_array)
        .ok_or_else(|| ClusterError::Invalid("missing x".into()))?;
    if xs.len() != n {
        return Err(ClusterError::Invalid("x length disagrees with n".into()));
    }
    let mut x = Vec::with_capacity(n);
    for e in xs {
        let src = e
            .as_str()
            .ok_or_else(|| ClusterError::Invalid("x entries must be strings".into()))?;
        x.push(parse(src)?);
    }

    let ys = v
        .get("y")
        .and_then(Value::as_array)
        .ok_or_else(|| ClusterError::Invalid("missing y".into()))?;
    if ys.len() != n {
        return Err(ClusterError::Invalid("y length disagrees with n".into()));
    }
    let y = if ys.iter().all(|e| e.is_array()) {
        let mut ms = Vec::with_capacity(n);
        for e in ys {
            let exps: Vec<i64> = serde_json::from_value(e.clone())
                .map_err(|err| ClusterError::Invalid(format!("y exponents: {err}")))?;
            if exps.len() != n {
                return Err(ClusterError::Invalid("y exponent vector length".into()));
            }
            ms.push(TropicalMonomial::new(exps));
        }
        Coefficients::Tropical(ms)
    } else {
        let mut fs = Vec::with_capacity(n);
        for e in ys {
            let src = e
                .as_str()
                .ok_or_else(|| ClusterError::Invalid("y entries must all be strings or all arrays".into()))?;
            fs.push(parse(src)?);
        }
        Coefficients::Universal(fs)
    };
    Ok(Seed::new(b, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_roundtrip() {
        let b = ExchangeMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let s = Seed::initial_universal(b).mutate(0).unwrap();
        let v = seed_to_json(&s);
        let back = seed_from_json(&v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn tropical_roundtrip() {
        let b = ExchangeMatrix::new(vec![vec![0, 2], vec![-2, 0]]).unwrap();
        let s = Seed::initial_tropical(b).mutate(1).unwrap();
        let v = seed_to_json(&s);
        assert!(v["y"][0].is_array());
        let back = seed_from_json(&v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(seed_from_json(&serde_json::json!({"n": 2})).is_err());
        let bad = serde_json::json!({
            "n": 2, "B": [[0, 1], [-1, 0]], "x": ["x1", "q"], "y": ["y1", "y2"]
        });
        assert!(seed_from_json(&bad).is_err());
    }
}
