//! The `.rgs` rotation-system format.
//!
//! ```text
//! vertex: h1 h2 h3        (one line per vertex, cyclic half-edge order)
//! edge NAME: h_a h_b
//! twisted: NAME...
//! ```

use ribbonkit_core::chord::EdgeLabel;
use ribbonkit_core::rotation::RotationSystem;

use super::{logical_lines, split_key, syntax, FmtResult};

pub fn parse(text: &str) -> FmtResult<RotationSystem> {
    let mut vertices: Vec<Vec<String>> = Vec::new();
    let mut edges: Vec<(EdgeLabel, String, String)> = Vec::new();
    let mut twisted: Vec<EdgeLabel> = Vec::new();
    for line in logical_lines(text) {
        let (key, arg, rest) = split_key(&line)?;
        match (key.as_str(), arg) {
            ("vertex", None) => {
                vertices.push(rest.split_whitespace().map(str::to_string).collect());
            }
            ("edge", Some(name)) => {
                let halves: Vec<&str> = rest.split_whitespace().collect();
                if halves.len() != 2 {
                    return syntax(line.number, 1, "expected `edge NAME: h_a h_b`");
                }
                edges.push((
                    EdgeLabel::new(name)?,
                    halves[0].to_string(),
                    halves[1].to_string(),
                ));
            }
            ("twisted", None) => {
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                twisted.extend(labels?);
            }
            (other, _) => return syntax(line.number, 1, format!("unknown key `{other}`")),
        }
    }
    Ok(RotationSystem::new(vertices, edges, &twisted)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_vertex_system() {
        let text = "vertex: a1 b1\nvertex: b2 a2\nedge a: a1 a2\nedge b: b1 b2\ntwisted: b\n";
        let rs = parse(text).unwrap();
        assert_eq!(rs.vertex_count(), 2);
        assert_eq!(rs.edge_count(), 2);
        let g = rs.to_anchored().unwrap();
        assert_eq!(g.anchor().len(), 1);
    }

    #[test]
    fn malformed_edge_line() {
        let err = parse("vertex: a1 a2\nedge a: a1\n").unwrap_err();
        assert!(matches!(
            err,
            super::super::FmtError::Syntax { line: 2, .. }
        ));
    }
}
