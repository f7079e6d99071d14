//! Line-oriented text form of a [`PowerSeries`]:
//!
//! ```text
//! # comment
//! a0_re a0_im
//! n N
//! k re im      (one line per stored coefficient, n <= k <= N)
//! ```
//!
//! Tokens are whitespace separated; everything after `#` is ignored.
//! Coefficients not listed are zero.

use std::fmt::Write;

use num_complex::Complex64;

use super::PowerSeries;
use crate::error::{Error, Result};

pub fn parse_literal(text: &str) -> Result<PowerSeries> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing constant term line".into(),
    })?;
    let [re, im] = fields::<2>(line, header)?;
    let a0 = Complex64::new(num(line, re)?, num(line, im)?);

    let (line, dims) = lines.next().ok_or(Error::Parse {
        line,
        msg: "missing `n N` line".into(),
    })?;
    let [n, order] = fields::<2>(line, dims)?;
    let n: usize = int(line, n)?;
    let order: usize = int(line, order)?;
    if n == 0 {
        return Err(Error::Parse {
            line,
            msg: "class index n must be at least 1".into(),
        });
    }
    if order < n {
        return Err(Error::Parse {
            line,
            msg: format!("truncation order {order} is below n = {n}"),
        });
    }

    let mut coeffs = vec![None; order - n + 1];
    for (line, text) in lines {
        let [k, re, im] = fields::<3>(line, text)?;
        let k: usize = int(line, k)?;
        if k < n || k > order {
            return Err(Error::Parse {
                line,
                msg: format!("index {k} outside {n}..={order}"),
            });
        }
        let slot = &mut coeffs[k - n];
        if slot.is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate coefficient for index {k}"),
            });
        }
        *slot = Some(Complex64::new(num(line, re)?, num(line, im)?));
    }

    PowerSeries::new(
        a0,
        n,
        coeffs.into_iter().map(Option::unwrap_or_default).collect(),
    )
}

/// Writes every stored coefficient, using 17 significant digits.
pub fn format_literal(s: &PowerSeries) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:.16e} {:.16e}", s.a0().re, s.a0().im);
    let _ = writeln!(out, "{} {}", s.n(), s.order());
    for (i, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{} {:.16e} {:.16e}", s.n() + i, c.re, c.im);
    }
    out
}

fn fields<const K: usize>(line: usize, text: &str) -> Result<[&str; K]> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    toks.try_into().map_err(|toks: Vec<&str>| Error::Parse {
        line,
        msg: format!("expected {K} fields, found {}", toks.len()),
    })
}

fn num(line: usize, tok: &str) -> Result<f64> {
    tok.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("`{tok}` is not a finite number"),
        })
}

fn int(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{tok}` is not a non-negative integer"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_truncation() {
        let text = "# 0.8 + z^2 + z^4\n0.8 0\n2 4\n2 1 0\n4 1 0 # last\n";
        let s = parse_literal(text).unwrap();
        assert_eq!(s.a0(), Complex64::new(0.8, 0.0));
        assert_eq!(s.n(), 2);
        assert_eq!(s.order(), 4);
        assert_eq!(s.coeff(3), Complex64::default());
        assert_eq!(s.coeff(4), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn constant_series_has_no_coefficient_lines() {
        let s = parse_literal("3 0\n1 1\n").unwrap();
        assert!(s.is_constant());
    }

    #[test]
    fn rejects_malformed_input() {
        let err = |t: &str| parse_literal(t).unwrap_err();
        assert!(matches!(err(""), Error::Parse { line: 0, .. }));
        assert!(matches!(err("1 0\n"), Error::Parse { .. }));
        assert!(matches!(err("1 0\n0 3\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("1 0\n3 2\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("1 0\n1 2\n5 1 0\n"), Error::Parse { line: 3, .. }));
        assert!(matches!(err("1 0\n1 2\n1 1 0\n1 2 0\n"), Error::Parse { line: 4, .. }));
        assert!(matches!(err("1 x\n1 2\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(err("1 0\n1 2\n1 1\n"), Error::Parse { line: 3, .. }));
    }

    #[test]
    fn format_then_parse_is_identity() {
        let s = PowerSeries::new(
            Complex64::new(0.1, -2.0 / 3.0),
            3,
            vec![Complex64::new(1.0 / 7.0, 1e-300), Complex64::new(-5.5, 0.0)],
        )
        .unwrap();
        assert_eq!(parse_literal(&format_literal(&s)).unwrap(), s);
    }
}
