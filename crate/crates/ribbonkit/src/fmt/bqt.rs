//! The `.bqt` bouquet format.
//!
//! ```text
//! # comment
//! bouquet NAME            (optional)
//! word: t1 t2 ... t2n
//! twisted: t...           (optional; an empty list is allowed)
//! anchor: t...            (optional; presents the partial dual at it)
//! cert: A B               (optional certificate, gap indices)
//! cert NAME: A B          (named certificate)
//! ```

use ribbonkit_core::chord::{ChordDiagram, EdgeLabel};
use ribbonkit_core::dual::AnchoredRibbon;
use ribbonkit_core::pseudo::Certificate;

use super::{logical_lines, split_key, syntax, FmtResult};

/// Parsed contents of a `.bqt` file.
#[derive(Debug, Clone)]
pub struct BqtFile {
    pub name: Option<String>,
    pub diagram: ChordDiagram,
    pub anchor: Vec<EdgeLabel>,
    pub certs: Vec<(Option<String>, Certificate)>,
}

impl BqtFile {
    pub fn from_diagram(diagram: ChordDiagram) -> BqtFile {
        BqtFile {
            name: None,
            diagram,
            anchor: Vec::new(),
            certs: Vec::new(),
        }
    }

    pub fn from_anchored(g: &AnchoredRibbon) -> BqtFile {
        BqtFile {
            name: None,
            diagram: g.base().clone(),
            anchor: g.anchor_vec(),
            certs: Vec::new(),
        }
    }

    /// The anchored presentation this file denotes.
    pub fn anchored(&self) -> ribbonkit_core::Result<AnchoredRibbon> {
        AnchoredRibbon::new(self.diagram.clone(), self.anchor.iter().cloned())
    }

    pub fn cert_named(&self, name: &str) -> Option<Certificate> {
        self.certs
            .iter()
            .find(|(n, _)| n.as_deref() == Some(name))
            .map(|(_, c)| *c)
    }

    /// The first certificate carried by the file, if any.
    pub fn first_cert(&self) -> Option<Certificate> {
        self.certs.first().map(|(_, c)| *c)
    }
}

pub fn parse(text: &str) -> FmtResult<BqtFile> {
    let mut name = None;
    let mut word: Option<(usize, Vec<EdgeLabel>)> = None;
    let mut twisted: Vec<EdgeLabel> = Vec::new();
    let mut anchor: Vec<EdgeLabel> = Vec::new();
    let mut certs = Vec::new();
    for line in logical_lines(text) {
        if let Some(rest) = line.content.strip_prefix("bouquet ") {
            name = Some(rest.trim().to_string());
            continue;
        }
        let (key, arg, rest) = split_key(&line)?;
        match (key.as_str(), arg) {
            ("word", None) => {
                if word.is_some() {
                    return syntax(line.number, 1, "duplicate `word:` line");
                }
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                word = Some((line.number, labels?));
            }
            ("twisted", None) => {
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                twisted.extend(labels?);
            }
            ("anchor", None) => {
                let labels: Result<Vec<EdgeLabel>, _> =
                    rest.split_whitespace().map(EdgeLabel::new).collect();
                anchor.extend(labels?);
            }
            ("cert", cert_name) => {
                let gaps: Vec<&str> = rest.split_whitespace().collect();
                if gaps.len() != 2 {
                    return syntax(line.number, 1, "expected `cert [NAME]: A B`");
                }
                let parse_gap = |s: &str| -> FmtResult<usize> {
                    s.parse().map_or_else(
                        |_| syntax(line.number, 1, format!("bad gap index `{s}`")),
                        Ok,
                    )
                };
                certs.push((
                    cert_name,
                    Certificate::new(parse_gap(gaps[0])?, parse_gap(gaps[1])?),
                ));
            }
            (other, _) => {
                return syntax(line.number, 1, format!("unknown key `{other}`"));
            }
        }
    }
    let Some((_, word)) = word else {
        return syntax(1, 1, "missing `word:` line");
    };
    let diagram = ChordDiagram::new(word, twisted)?;
    for e in &anchor {
        if !diagram.contains(e) {
            return Err(ribbonkit_core::Error::UnknownEdge(e.as_str().to_string()).into());
        }
    }
    for (_, cert) in &certs {
        cert.validate(&diagram)?;
    }
    Ok(BqtFile {
        name,
        diagram,
        anchor,
        certs,
    })
}

/// Deterministic serialization; the word starts at the diagram's stored
/// start slot and the twist list follows label order.
pub fn serialize(file: &BqtFile) -> String {
    let mut out = String::new();
    if let Some(name) = &file.name {
        out.push_str(&format!("bouquet {name}\n"));
    }
    let word: Vec<&str> = file.diagram.word().iter().map(|e| e.as_str()).collect();
    out.push_str(&format!("word: {}\n", word.join(" ")));
    let twisted: Vec<String> = file
        .diagram
        .twisted()
        .iter()
        .map(|e| e.as_str().to_string())
        .collect();
    out.push_str(&format!("twisted: {}\n", twisted.join(" ")));
    if !file.anchor.is_empty() {
        let anchor: Vec<&str> = file.anchor.iter().map(|e| e.as_str()).collect();
        out.push_str(&format!("anchor: {}\n", anchor.join(" ")));
    }
    for (name, cert) in &file.certs {
        match name {
            Some(n) => out.push_str(&format!("cert {n}: {} {}\n", cert.cut_a, cert.cut_b)),
            None => out.push_str(&format!("cert: {} {}\n", cert.cut_a, cert.cut_b)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_file() {
        let text = "# introductory bouquet\nbouquet intro\nword: 2 1 2 3 1 3\ntwisted: 1\n";
        let f = parse(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("intro"));
        assert_eq!(f.diagram.edge_count(), 3);
        assert!(f.diagram.is_twisted(&EdgeLabel::numeric(1)).unwrap());
    }

    #[test]
    fn parse_empty_word() {
        let f = parse("word:\ntwisted:\n").unwrap();
        assert_eq!(f.diagram.edge_count(), 0);
    }

    #[test]
    fn odd_occurrence_is_malformed() {
        let err = parse("word: 1 2 1\n").unwrap_err();
        assert!(matches!(
            err,
            super::super::FmtError::Core(ribbonkit_core::Error::MalformedWord(..))
        ));
    }

    #[test]
    fn unknown_key_reports_position() {
        let err = parse("word: 1 1\nwards: 2\n").unwrap_err();
        match err {
            super::super::FmtError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_with_anchor_and_certs() {
        let text = "word: 1 2 1 2\ntwisted:\nanchor: 1 2\ncert S: 0 0\n";
        let f = parse(text).unwrap();
        assert_eq!(f.anchor.len(), 2);
        assert_eq!(f.cert_named("S").unwrap(), Certificate::new(0, 0));
        let emitted = serialize(&f);
        let f2 = parse(&emitted).unwrap();
        assert_eq!(f2.diagram, f.diagram);
        assert_eq!(f2.anchor, f.anchor);
        assert_eq!(f2.certs, f.certs);
    }

    #[test]
    fn invalid_cert_rejected_at_parse() {
        // The twisted chord is not split by (0, 0).
        let err = parse("word: 1 1\ntwisted: 1\ncert: 0 0\n").unwrap_err();
        assert!(matches!(
            err,
            super::super::FmtError::Core(ribbonkit_core::Error::InvalidCertificate(_))
        ));
    }
}
