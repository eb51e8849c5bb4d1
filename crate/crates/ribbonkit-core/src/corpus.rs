//! Fixture diagrams and seeded random generators.
//!
//! The fixtures are frozen transcriptions of worked examples: the
//! three-loop introduction bouquet, an eight-loop adjustment example, the
//! six-loop bouquet with two inequivalent certificates, a pair of
//! six-loop bouquets with equal delta-matroids but opposite
//! pseudo-orientability verdicts, a seven-loop bouquet that is not
//! pseudo-orientable yet has a stable quasi-tree polynomial, and the
//! cyclic family of all-twisted bouquets whose interlacement graph is the
//! n-cycle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chord::{ChordDiagram, EdgeLabel};
use crate::delta::SetSystem;
use crate::dual;
use crate::error::Error;
use crate::exactla::int::IntMatrix;
use crate::pseudo::Certificate;
use crate::Result;

/// The cyclic all-twisted bouquet: `n` non-orientable loops whose
/// interlacement graph is the cycle `1 - 2 - ... - n - 1`.
///
/// For `n >= 3` the word lists the pairs `(i, i-1 mod n)`; the two small
/// cases are the single twisted loop and the interlaced twisted pair.
pub fn make_cn(n: usize) -> Result<ChordDiagram> {
    match n {
        0 => Err(Error::InvalidN(0)),
        1 => ChordDiagram::from_tokens(["1", "1"], ["1"]),
        2 => ChordDiagram::from_tokens(["1", "2", "1", "2"], ["1", "2"]),
        _ => {
            if n > 30 {
                return Err(Error::InvalidN(n));
            }
            let mut word = Vec::with_capacity(2 * n);
            for i in 1..=n {
                word.push(EdgeLabel::numeric(i));
                word.push(EdgeLabel::numeric((i + n - 2) % n + 1));
            }
            let twisted: Vec<EdgeLabel> = (1..=n).map(EdgeLabel::numeric).collect();
            ChordDiagram::new(word, twisted)
        }
    }
}

/// Catalog entry: a fixture with its description.
pub struct FixtureInfo {
    pub name: &'static str,
    pub description: &'static str,
}

/// Names and one-line descriptions of the built-in fixtures.
pub fn fixture_catalog() -> Vec<FixtureInfo> {
    vec![
        FixtureInfo {
            name: "fig1",
            description: "three loops, one twisted interlacing the other two; \
                          the running adjustment example",
        },
        FixtureInfo {
            name: "fig5",
            description: "eight loops, three twisted; certificated split across \
                          the two half-circles",
        },
        FixtureInfo {
            name: "ex316",
            description: "six loops, four twisted, with two inequivalent \
                          certificates whose adjusted matrices share det(I+M)=27 \
                          but differ in Smith normal form",
        },
        FixtureInfo {
            name: "fig7-b1",
            description: "pseudo-orientable half of the pair with equal \
                          delta-matroids",
        },
        FixtureInfo {
            name: "fig7-b2",
            description: "non-pseudo-orientable half of the pair with equal \
                          delta-matroids",
        },
        FixtureInfo {
            name: "fig8",
            description: "seven loops, three twisted; not pseudo-orientable yet \
                          with a Hurwitz-stable quasi-tree polynomial",
        },
    ]
}

/// Returns the named fixture diagram.
pub fn fixture(name: &str) -> Result<ChordDiagram> {
    let spec: (&[&str], &[&str]) = match name {
        "fig1" => (&["2", "1", "2", "3", "1", "3"], &["1"]),
        "fig5" => (
            &[
                "1", "2", "3", "2", "4", "1", "5", "6", "7", "4", "6", "5", "7", "3", "8", "8",
            ],
            &["3", "4", "5"],
        ),
        "ex316" => (
            &["1", "2", "1", "3", "4", "5", "4", "6", "3", "2", "6", "5"],
            &["2", "3", "5", "6"],
        ),
        "fig7-b1" => (
            &[
                "h1", "x", "v2", "v1", "y", "x", "h1", "h2", "y", "v1", "v2", "h2",
            ],
            &["x", "y"],
        ),
        "fig7-b2" => (
            &[
                "x", "h1", "v2", "y", "v1", "h1", "x", "h2", "v1", "y", "v2", "h2",
            ],
            &["x", "y"],
        ),
        "fig8" => (
            &[
                "7", "1", "6", "7", "2", "3", "1", "2", "5", "6", "4", "5", "3", "4",
            ],
            &["1", "3", "6"],
        ),
        _ => return Err(Error::UnknownFixture(String::from(name))),
    };
    ChordDiagram::from_tokens(spec.0.iter().copied(), spec.1.iter().copied())
}

/// The two inequivalent certificates of the `ex316` fixture, in the order
/// matching the published adjusted matrices.
pub fn ex316_certificates() -> (Certificate, Certificate) {
    (Certificate::new(0, 8), Certificate::new(10, 4))
}

/// The certificate drawn with the `fig5` fixture.
pub fn fig5_certificate() -> Certificate {
    Certificate::new(0, 7)
}

/// The integer skew-symmetric matrix attached to the `fig8` fixture: the
/// signed adjacency matrix of a digraph on the seven loops plus one hub
/// vertex. It is principally unimodular and represents the parity lift of
/// the fixture's delta-matroid.
pub fn fig8_lift_matrix() -> IntMatrix {
    let arcs: [(usize, usize); 10] = [
        (2, 1),
        (3, 2),
        (4, 3),
        (5, 4),
        (6, 5),
        (7, 6),
        (1, 7),
        (1, 8),
        (8, 3),
        (8, 6),
    ];
    let mut entries = vec![0i128; 64];
    for (u, v) in arcs {
        entries[(u - 1) * 8 + (v - 1)] = 1;
        entries[(v - 1) * 8 + (u - 1)] = -1;
    }
    let labels: Vec<EdgeLabel> = (1..=8).map(EdgeLabel::numeric).collect();
    IntMatrix::from_entries(labels, entries).expect("fixture matrix is square")
}

/// A seeded random bouquet: a shuffled double-occurrence word on `n`
/// labels with each loop twisted independently with probability
/// `twist_density`. Deterministic per seed.
pub fn random_bouquet(seed: u64, n: usize, twist_density: f64) -> Result<ChordDiagram> {
    if n > 20 {
        return Err(Error::InvalidParams(alloc::format!(
            "n = {n} exceeds the generator bound 20"
        )));
    }
    if !(0.0..=1.0).contains(&twist_density) {
        return Err(Error::InvalidParams(String::from(
            "twist_density must lie in [0, 1]",
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<EdgeLabel> = (1..=n)
        .flat_map(|i| {
            let l = EdgeLabel::numeric(i);
            [l.clone(), l]
        })
        .collect();
    word.shuffle(&mut rng);
    let twisted: Vec<EdgeLabel> = (1..=n)
        .filter(|_| rng.gen_bool(twist_density))
        .map(EdgeLabel::numeric)
        .collect();
    ChordDiagram::new(word, twisted)
}

/// A seeded random pseudo-orientable bouquet.
///
/// A certificated diagram is built directly (one arc per side, twisted
/// chords split across the cut, untwisted chords confined to a side) and
/// then hidden behind a random sequence of elementary partial duals,
/// which preserve pseudo-orientability.
pub fn random_pseudo(seed: u64, n: usize) -> Result<ChordDiagram> {
    if n > 20 {
        return Err(Error::InvalidParams(alloc::format!(
            "n = {n} exceeds the generator bound 20"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let twisted_count = rng.gen_range(0..=n);
    let side1_untwisted = rng.gen_range(0..=(n - twisted_count));
    let mut side1: Vec<EdgeLabel> = Vec::new();
    let mut side2: Vec<EdgeLabel> = Vec::new();
    for i in 1..=n {
        let label = EdgeLabel::numeric(i);
        if i <= twisted_count {
            side1.push(label.clone());
            side2.push(label);
        } else if i <= twisted_count + side1_untwisted {
            side1.push(label.clone());
            side1.push(label);
        } else {
            side2.push(label.clone());
            side2.push(label);
        }
    }
    side1.shuffle(&mut rng);
    side2.shuffle(&mut rng);
    side1.extend(side2);
    let twisted: Vec<EdgeLabel> = (1..=twisted_count).map(EdgeLabel::numeric).collect();
    let mut d = ChordDiagram::new(side1, twisted)?;
    // Hide the certificate.
    for _ in 0..2 * n {
        let twisted_edges: Vec<EdgeLabel> = d
            .edges()
            .iter()
            .filter(|e| d.is_twisted(e).expect("edge present"))
            .cloned()
            .collect();
        let mut pairs: Vec<(EdgeLabel, EdgeLabel)> = Vec::new();
        for (i, e) in d.edges().iter().enumerate() {
            for f in d.edges().iter().skip(i + 1) {
                if !d.is_twisted(e).unwrap()
                    && !d.is_twisted(f).unwrap()
                    && d.interlace(e, f).unwrap()
                {
                    pairs.push((e.clone(), f.clone()));
                }
            }
        }
        let moves = twisted_edges.len() + pairs.len();
        if moves == 0 {
            break;
        }
        let pick = rng.gen_range(0..moves);
        d = if pick < twisted_edges.len() {
            dual::elementary_dual_twisted(&d, &twisted_edges[pick])?
        } else {
            let (e, f) = &pairs[pick - twisted_edges.len()];
            dual::elementary_dual_pair(&d, e, f)?
        };
    }
    Ok(d)
}

/// Seeded random orientable bouquet.
pub fn random_orientable(seed: u64, n: usize) -> Result<ChordDiagram> {
    random_bouquet(seed, n, 0.0)
}

/// All bouquets on exactly `n` labeled chords: every double-occurrence
/// word on `1..=n` (first occurrences in label order) times every twist
/// pattern.
pub fn enumerate_bouquets(n: usize) -> Result<Vec<ChordDiagram>> {
    if n > 4 {
        return Err(Error::SizeLimitExceeded {
            requested: n,
            limit: 4,
        });
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::with_capacity(2 * n);
    fn go(current: &mut Vec<usize>, counts: &mut [u8], words: &mut Vec<Vec<usize>>) {
        let n = counts.len();
        if current.len() == 2 * n {
            words.push(current.clone());
            return;
        }
        // Keep first occurrences in label order to avoid relabelings.
        let mut first_new = true;
        for label in 0..n {
            match counts[label] {
                0 => {
                    if first_new {
                        counts[label] = 1;
                        current.push(label);
                        go(current, counts, words);
                        current.pop();
                        counts[label] = 0;
                    }
                    first_new = false;
                }
                1 => {
                    counts[label] = 2;
                    current.push(label);
                    go(current, counts, words);
                    current.pop();
                    counts[label] = 1;
                }
                _ => {}
            }
        }
    }
    let mut counts = vec![0u8; n];
    go(&mut current, &mut counts, &mut words);
    let mut out = Vec::new();
    for w in words {
        let word: Vec<EdgeLabel> = w.iter().map(|&i| EdgeLabel::numeric(i + 1)).collect();
        for mask in 0..1u64 << n {
            let twisted: Vec<EdgeLabel> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| EdgeLabel::numeric(i + 1))
                .collect();
            out.push(ChordDiagram::new(word.clone(), twisted)?);
        }
    }
    Ok(out)
}

/// Rejection-samples set systems satisfying the exchange axiom on a small
/// ground set. Deterministic per seed.
pub fn random_delta_matroids(seed: u64, count: usize, max_ground: usize) -> Vec<SetSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_ground);
        let density = rng.gen_range(0.15..0.7);
        let mut feasible: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect();
        if feasible.is_empty() {
            feasible.push(rng.gen_range(0..1u64 << n));
        }
        let ground: Vec<EdgeLabel> = (1..=n).map(EdgeLabel::numeric).collect();
        let sys = SetSystem::from_masks(ground, feasible).expect("masks in range");
        if sys.is_delta_matroid(16).expect("small ground") {
            out.push(sys);
        }
    }
    out
}

/// A seeded random skew-symmetric integer matrix with entries in
/// `[-bound, bound]`.
pub fn random_skew_matrix(seed: u64, n: usize, bound: i128) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = vec![0i128; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(-bound..=bound);
            entries[i * n + j] = v;
            entries[j * n + i] = -v;
        }
    }
    let labels: Vec<EdgeLabel> = (1..=n).map(EdgeLabel::numeric).collect();
    IntMatrix::from_entries(labels, entries).expect("square by construction")
}

/// A seeded random integer vector with entries in `[-bound, bound]`.
pub fn random_vector(seed: u64, n: usize, bound: i128) -> Vec<i128> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_u64);
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseudo::find_certificate;

    #[test]
    fn cn_interlacement_is_the_cycle() {
        for n in 3..=8 {
            let d = make_cn(n).unwrap();
            assert_eq!(d.edge_count(), n);
            assert!(!d.is_orientable());
            for i in 1..=n {
                for j in i + 1..=n {
                    let adjacent = j - i == 1 || (i == 1 && j == n);
                    assert_eq!(
                        d.interlace(&EdgeLabel::numeric(i), &EdgeLabel::numeric(j))
                            .unwrap(),
                        adjacent,
                        "n={n} pair ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn cn_quasi_tree_counts() {
        let counts = [4, 12, 22, 36, 72];
        for (n, &want) in (3..=7).zip(&counts) {
            let d = make_cn(n).unwrap();
            assert_eq!(d.quasi_tree_masks().unwrap().len(), want, "n = {n}");
        }
    }

    #[test]
    fn cn_pseudo_orientability_threshold() {
        for n in 1..=7 {
            let d = make_cn(n).unwrap();
            assert_eq!(find_certificate(&d).is_some(), n <= 4, "n = {n}");
        }
    }

    #[test]
    fn fixtures_parse_and_have_expected_sizes() {
        for info in fixture_catalog() {
            let d = fixture(info.name).unwrap();
            assert!(d.edge_count() > 0, "{}", info.name);
        }
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn ex316_certificates_are_valid_and_inequivalent() {
        let d = fixture("ex316").unwrap();
        let (s, t) = ex316_certificates();
        s.validate(&d).unwrap();
        t.validate(&d).unwrap();
        assert_ne!(s.end_partition(&d), t.end_partition(&d));
    }

    #[test]
    fn fig5_certificate_is_valid() {
        let d = fixture("fig5").unwrap();
        fig5_certificate().validate(&d).unwrap();
    }

    #[test]
    fn random_bouquet_is_deterministic() {
        let a = random_bouquet(7, 6, 0.5).unwrap();
        let b = random_bouquet(7, 6, 0.5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_bouquet(8, 6, 0.5).unwrap());
    }

    #[test]
    fn zero_density_gives_orientable() {
        for seed in 0..20 {
            assert!(random_bouquet(seed, 5, 0.0).unwrap().is_orientable());
        }
    }

    #[test]
    fn random_pseudo_always_certificated() {
        for seed in 0..50 {
            let d = random_pseudo(seed, 7).unwrap();
            assert!(find_certificate(&d).is_some(), "seed {seed}");
        }
    }

    #[test]
    fn bouquet_enumeration_counts() {
        // 1 word on 1 chord, 3 on 2 chords, 15 on 3 chords (double
        // factorials), each with 2^n twist patterns.
        assert_eq!(enumerate_bouquets(1).unwrap().len(), 2);
        assert_eq!(enumerate_bouquets(2).unwrap().len(), 3 * 4);
        assert_eq!(enumerate_bouquets(3).unwrap().len(), 15 * 8);
    }

    #[test]
    fn random_delta_matroids_satisfy_axiom() {
        let systems = random_delta_matroids(3, 25, 4);
        assert_eq!(systems.len(), 25);
        for s in &systems {
            assert!(s.is_delta_matroid(16).unwrap());
        }
    }
}
