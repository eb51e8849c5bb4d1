//! The shipped fixture files must parse back to the built-in catalog and
//! carry valid content checksums.

use ribbonkit::core::corpus;
use ribbonkit::fmt::bqt;
use sha2::{Digest, Sha256};

fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(format!("{name}.bqt"))
}

#[test]
fn shipped_fixtures_match_catalog_and_checksums() {
    for info in corpus::fixture_catalog() {
        let text = std::fs::read_to_string(data_path(info.name)).unwrap();
        let (first, body) = text.split_once('\n').unwrap();
        let sha = first
            .strip_prefix("# sha256: ")
            .unwrap_or_else(|| panic!("{}: missing checksum line", info.name));
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        assert_eq!(digest, sha, "{}: checksum drift", info.name);
        let parsed = bqt::parse(&text).unwrap();
        assert_eq!(
            parsed.diagram,
            corpus::fixture(info.name).unwrap(),
            "{}: content drift",
            info.name
        );
    }
}

#[test]
fn shipped_certificates_are_the_catalog_ones() {
    let text = std::fs::read_to_string(data_path("ex316")).unwrap();
    let parsed = bqt::parse(&text).unwrap();
    let (s, t) = corpus::ex316_certificates();
    assert_eq!(parsed.cert_named("S"), Some(s));
    assert_eq!(parsed.cert_named("T"), Some(t));
    let text = std::fs::read_to_string(data_path("fig5")).unwrap();
    let parsed = bqt::parse(&text).unwrap();
    assert_eq!(parsed.first_cert(), Some(corpus::fig5_certificate()));
}
