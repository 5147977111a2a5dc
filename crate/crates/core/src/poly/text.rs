//! One term per line: `<coeff> <alpha> <beta>`, coefficient an integer or
//! `p/q`. Lines starting with `#` and blank lines are skipped.

use super::{parse_rational, PolyError, Rational};

pub fn parse_terms(text: &str) -> Result<Vec<(Rational, u64, u64)>, PolyError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| PolyError::Parse { line: idx + 1, message };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(err(format!("expected 3 fields, found {}", toks.len())));
        }
        let c = parse_rational(toks[0])
            .ok_or_else(|| err(format!("bad coefficient `{}`", toks[0])))?;
        let a: u64 = toks[1]
            .parse()
            .map_err(|_| err(format!("bad exponent `{}`", toks[1])))?;
        let b: u64 = toks[2]
            .parse()
            .map_err(|_| err(format!("bad exponent `{}`", toks[2])))?;
        out.push((c, a, b));
    }
    Ok(out)
}

pub fn format_terms(terms: &[(Rational, u64, u64)]) -> String {
    let mut s = String::new();
    for (c, a, b) in terms {
        s.push_str(&format!("{c} {a} {b}\n"));
    }
    s
}
