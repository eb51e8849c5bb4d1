//! The `.dsys` set-system format.
//!
//! ```text
//! ground: a b c
//! set:                    (one line per feasible set; empty allowed)
//! set: a
//! set: a b
//! ```

use ribbonkit_core::chord::EdgeLabel;
use ribbonkit_core::delta::SetSystem;
use serde::Serialize;

use super::{logical_lines, split_key, syntax, FmtResult};

pub fn parse(text: &str) -> FmtResult<SetSystem> {
    let mut ground: Option<Vec<EdgeLabel>> = None;
    let mut sets: Vec<Vec<EdgeLabel>> = Vec::new();
    for line in logical_lines(text) {
        let (key, arg, rest) = split_key(&line)?;
        match (key.as_str(), arg) {
            ("ground", None) => {
                if ground.is_some() {
                    return syntax(line.number, 1, "duplicate `ground:` line");
                }
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                ground = Some(labels?);
            }
            ("set", None) => {
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                sets.push(labels?);
            }
            (other, _) => return syntax(line.number, 1, format!("unknown key `{other}`")),
        }
    }
    let Some(ground) = ground else {
        return syntax(1, 1, "missing `ground:` line");
    };
    Ok(SetSystem::new(ground, sets)?)
}

pub fn serialize(s: &SetSystem) -> String {
    let mut out = String::new();
    let ground: Vec<&str> = s.ground().iter().map(|e| e.as_str()).collect();
    out.push_str(&format!("ground: {}\n", ground.join(" ")));
    for set in s.feasible_sets() {
        let labels: Vec<&str> = set.iter().map(|e| e.as_str()).collect();
        if labels.is_empty() {
            out.push_str("set:\n");
        } else {
            out.push_str(&format!("set: {}\n", labels.join(" ")));
        }
    }
    out
}

#[derive(Serialize)]
pub struct DsysJson {
    pub ground: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

pub fn to_json(s: &SetSystem) -> DsysJson {
    DsysJson {
        ground: s.ground().iter().map(|e| e.as_str().to_string()).collect(),
        sets: s
            .feasible_sets()
            .iter()
            .map(|set| set.iter().map(|e| e.as_str().to_string()).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "ground: 1 2 3\nset:\nset: 1\nset: 1 2\nset: 1 3\n";
        let s = parse(text).unwrap();
        assert_eq!(s.feasible_masks().len(), 4);
        assert_eq!(parse(&serialize(&s)).unwrap(), s);
    }

    #[test]
    fn empty_family_rejected() {
        assert!(parse("ground: 1 2\n").is_err());
    }
}
