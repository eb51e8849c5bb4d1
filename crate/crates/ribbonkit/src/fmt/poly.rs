//! Polynomial files: `poly: c0 c1 c2 ...`, coefficients by increasing
//! degree, exact integers.

use num_bigint::BigInt;
use ribbonkit_core::analysis::IntPolynomial;

use super::{logical_lines, split_key, syntax, FmtResult};

pub fn parse(text: &str) -> FmtResult<IntPolynomial> {
    let lines = logical_lines(text);
    let Some(line) = lines.first() else {
        return syntax(1, 1, "missing `poly:` line");
    };
    let (key, arg, rest) = split_key(line)?;
    if key != "poly" || arg.is_some() {
        return syntax(line.number, 1, format!("unknown key `{key}`"));
    }
    if let Some(extra) = lines.get(1) {
        return syntax(extra.number, 1, "polynomial files hold a single line");
    }
    let mut coeffs = Vec::new();
    for t in rest.split_whitespace() {
        let Ok(c) = t.parse::<BigInt>() else {
            return syntax(line.number, 1, format!("bad coefficient `{t}`"));
        };
        coeffs.push(c);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Whether the text looks like a polynomial file.
pub fn looks_like_poly(text: &str) -> bool {
    logical_lines(text)
        .first()
        .is_some_and(|l| l.content.trim_start().starts_with("poly:"))
}

pub fn serialize(p: &IntPolynomial) -> String {
    let cells: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("poly: {}\n", cells.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = parse("poly: 1 6 9 8 12\n").unwrap();
        assert_eq!(format!("{p}"), "12x^4 + 8x^3 + 9x^2 + 6x + 1");
        assert_eq!(parse(&serialize(&p)).unwrap(), p);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = parse("poly: 1 0 0\n").unwrap();
        assert_eq!(p.coeffs().len(), 1);
    }
}
