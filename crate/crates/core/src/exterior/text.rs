//! Text encoding of forms: `<coeff>*e<indices>` terms joined by ` + `.
//!
//! Indices are written as concatenated digits (`e123`) when every index is a
//! single digit and comma-separated in braces (`e{1,2,10}`) otherwise.
//! Coefficients with more than one field term are parenthesised.

use super::{KForm, MultiIndex};
use crate::error::{Error, Result};
use crate::field::FieldElem;

pub(super) fn index_string(m: MultiIndex) -> String {
    let idx = m.indices();
    if idx.iter().all(|&i| i < 10) {
        idx.iter().map(|i| i.to_string()).collect()
    } else {
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn coeff_string(c: &FieldElem) -> String {
    let s = c.to_string();
    if c.terms().count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

pub(super) fn format_form(w: &KForm) -> String {
    if w.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> =
        w.terms().map(|(m, c)| format!("{}*e{}", coeff_string(c), index_string(m))).collect();
    parts.join(" + ")
}

/// Splits on `+` outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("bad multi-index `{s}`"));
    if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

pub(super) fn parse_form(s: &str, n: usize, k: usize) -> Result<KForm> {
    let mut w = KForm::zero(n, k);
    let s = s.trim();
    if s == "0" {
        return Ok(w);
    }
    for raw in split_top_level(s) {
        let term = raw.trim();
        let (coeff, idx) = term
            .rsplit_once("*e")
            .ok_or_else(|| Error::Parse(format!("form term `{term}` lacks `*e`")))?;
        let coeff = coeff.trim();
        let coeff = coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coeff);
        let c: FieldElem = coeff.parse()?;
        let indices = parse_indices(idx.trim())?;
        if indices.len() != k {
            return Err(Error::Parse(format!("term `{term}` has degree {}, expected {k}", indices.len())));
        }
        let m = MultiIndex::new(&indices).map_err(|e| Error::Parse(e.to_string()))?;
        if m.max_index() > n {
            return Err(Error::Parse(format!("term `{term}` uses an index above {n}")));
        }
        w.add_term(m, c);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = "1*e123 + -1*e167";
        let w = KForm::parse(s, 7, 3).unwrap();
        assert_eq!(w.to_text(), s);
        let z = KForm::parse("(1 + 1*r2)*e12 + i*3/4*e34", 7, 2).unwrap();
        assert_eq!(KForm::parse(&z.to_text(), 7, 2).unwrap(), z);
        assert_eq!(z.to_text(), "(1 + 1*r2)*e12 + i*3/4*e34");
        assert!(KForm::parse("0", 7, 3).unwrap().is_zero());
    }

    #[test]
    fn wide_indices() {
        let w = KForm::term(12, &[1, 10], FieldElem::one()).unwrap();
        assert_eq!(w.to_text(), "1*e{1,10}");
        assert_eq!(KForm::parse("1*e{1,10}", 12, 2).unwrap(), w);
    }

    #[test]
    fn rejects_malformed() {
        assert!(KForm::parse("1*e21", 7, 2).is_err());
        assert!(KForm::parse("1*e12", 7, 3).is_err());
        assert!(KForm::parse("1*e18", 7, 2).is_err());
        assert!(KForm::parse("e12", 7, 2).is_err());
    }
}
