//! Square matrix files.
//!
//! ```text
//! rows: e f g
//! 0  1 -1
//! -1 0  2
//! 1 -2  0
//! ```
//!
//! Entries are integers or rationals `p/q`; a file containing any `/`
//! parses as rational. The JSON export carries a ring tag.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use ribbonkit_core::chord::EdgeLabel;
use ribbonkit_core::exactla::gf2::Gf2Matrix;
use ribbonkit_core::exactla::int::IntMatrix;
use ribbonkit_core::exactla::rat::RatMatrix;
use serde::Serialize;

use super::{logical_lines, split_key, syntax, FmtResult};

/// A parsed matrix, in the smallest ring that holds its entries.
#[derive(Debug, Clone)]
pub enum ParsedMatrix {
    Int(IntMatrix),
    Rat(RatMatrix),
}

impl ParsedMatrix {
    pub fn to_rat(&self) -> RatMatrix {
        match self {
            ParsedMatrix::Int(m) => RatMatrix::from_int(m),
            ParsedMatrix::Rat(m) => m.clone(),
        }
    }

    pub fn as_int(&self) -> Option<&IntMatrix> {
        match self {
            ParsedMatrix::Int(m) => Some(m),
            ParsedMatrix::Rat(_) => None,
        }
    }
}

pub fn parse(text: &str) -> FmtResult<ParsedMatrix> {
    let lines = logical_lines(text);
    let Some(first) = lines.first() else {
        return syntax(1, 1, "missing `rows:` line");
    };
    let (key, arg, rest) = split_key(first)?;
    if key != "rows" || arg.is_some() {
        return syntax(first.number, 1, "matrix files start with `rows: label...`");
    }
    let labels: Result<Vec<EdgeLabel>, _> = rest.split_whitespace().map(EdgeLabel::new).collect();
    let labels = labels?;
    let n = labels.len();
    if lines.len() != n + 1 {
        return syntax(
            first.number,
            1,
            format!(
                "expected {n} rows after the label line, got {}",
                lines.len() - 1
            ),
        );
    }
    let rational = text.contains('/');
    let mut int_rows: Vec<Vec<i128>> = Vec::new();
    let mut rat_rows: Vec<Vec<BigRational>> = Vec::new();
    for line in &lines[1..] {
        let tokens: Vec<&str> = line.content.split_whitespace().collect();
        if tokens.len() != n {
            return syntax(
                line.number,
                1,
                format!("expected {n} entries, got {}", tokens.len()),
            );
        }
        if rational {
            let mut row = Vec::with_capacity(n);
            for t in tokens {
                row.push(parse_rational(line.number, t)?);
            }
            rat_rows.push(row);
        } else {
            let mut row = Vec::with_capacity(n);
            for t in tokens {
                let Ok(v) = t.parse::<i128>() else {
                    return syntax(line.number, 1, format!("bad integer `{t}`"));
                };
                row.push(v);
            }
            int_rows.push(row);
        }
    }
    if rational {
        Ok(ParsedMatrix::Rat(RatMatrix::from_rows(labels, rat_rows)?))
    } else {
        Ok(ParsedMatrix::Int(IntMatrix::from_rows(labels, int_rows)?))
    }
}

fn parse_rational(line: usize, token: &str) -> FmtResult<BigRational> {
    let parse_int = |s: &str| -> FmtResult<BigInt> {
        s.parse::<BigInt>()
            .map_or_else(|_| syntax(line, 1, format!("bad number `{token}`")), Ok)
    };
    match token.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return syntax(line, 1, format!("zero denominator in `{token}`"));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
        None => Ok(BigRational::from(parse_int(token)?)),
    }
}

pub fn serialize_int(m: &IntMatrix) -> String {
    let labels: Vec<&str> = m.labels().iter().map(|e| e.as_str()).collect();
    let mut out = format!("rows: {}\n", labels.join(" "));
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn serialize_gf2(m: &Gf2Matrix) -> String {
    serialize_int(&m.to_int())
}

#[derive(Serialize)]
pub struct MatrixJson {
    pub ring: &'static str,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn int_to_json(m: &IntMatrix, ring: &'static str) -> MatrixJson {
    MatrixJson {
        ring,
        labels: m.labels().iter().map(|e| e.as_str().to_string()).collect(),
        rows: m
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_matrix() {
        let text = "rows: 1 2\n0 1\n-1 0\n";
        let m = parse(text).unwrap();
        let m = m.as_int().unwrap();
        assert_eq!(m.entry(0, 1), 1);
        assert_eq!(parse(&serialize_int(m)).unwrap().as_int().unwrap(), m);
    }

    #[test]
    fn parse_rational_matrix() {
        let text = "rows: a b\n1/2 0\n0 -3/4\n";
        match parse(text).unwrap() {
            ParsedMatrix::Rat(m) => {
                assert_eq!(
                    m.entry(0, 0),
                    &BigRational::new(BigInt::from(1), BigInt::from(2))
                );
            }
            ParsedMatrix::Int(_) => panic!("expected rational"),
        }
    }

    #[test]
    fn row_count_mismatch() {
        assert!(parse("rows: a b\n0 1\n").is_err());
        assert!(parse("rows: a b\n0 1 2\n1 0\n").is_err());
    }
}
