//! Command-line front end.
//!
//! Reports go to stdout as JSON lines (or TSV with `--format tsv`);
//! diagram-producing commands emit `.bqt` text so they pipe into each
//! other. Computation errors print a JSON object on stderr and exit 1;
//! usage errors exit 2; `stability` exits 3 on an unstable verdict.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use ribbonkit::fmt::{bqt, dsys, matrix, poly, rgs};
use ribbonkit::report::{self, to_tsv};
use ribbonkit::{checks, core};

use core::analysis::{self, stability, ConcavityMode};
use core::chord::EdgeLabel;
use core::corpus;
use core::dual::AnchoredRibbon;
use core::interlace::{self, Orientation};
use core::pseudo;

#[derive(Parser)]
#[command(
    name = "ribbonkit",
    version,
    about = "Exact quasi-tree, partial-duality, and stability computations on bouquets",
    after_help = "FILE arguments accept `-` for stdin. The RIBBONKIT_LIMIT \
                  environment variable overrides the exhaustive enumeration bound \
                  (default 20 edges)."
)]
struct Cli {
    /// Output format. Reports default to JSON lines; matrix, lift, and
    /// diagram emitters default to their pipeable text formats and switch
    /// to a tagged JSON export with `--format json`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    M2,
    Mpm,
    Adjusted,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConcavityArg {
    Lc,
    Ulc,
}

#[derive(Subcommand)]
enum Cmd {
    /// List and count the quasi-trees of a diagram.
    Quasitrees { file: String },
    /// Decide pseudo-orientability and report a certificate.
    CheckPseudo { file: String },
    /// Adjust a pseudo-orientable diagram, adding the named fresh chord.
    Adjust {
        file: String,
        #[arg(long)]
        hat: String,
    },
    /// Emit an interlacing matrix of the diagram.
    Matrix {
        file: String,
        #[arg(long, value_enum)]
        kind: MatrixKind,
        /// Certificate: either two gap indices or the name of a stored one.
        #[arg(long, num_args = 1..=2)]
        cert: Option<Vec<String>>,
    },
    /// Check that a matrix detects the diagram's quasi-trees.
    VerifyDetect { file: String, matrix_file: String },
    /// Quasi-tree generating polynomial, optionally evaluated at a point.
    Poly {
        file: String,
        /// Rational evaluation point, one `edge=value` per occurrence.
        #[arg(long, value_name = "EDGE=VALUE")]
        eval: Vec<String>,
    },
    /// Exact Hurwitz stability of a polynomial file or a diagram's
    /// quasi-tree polynomial. Exits 3 when unstable.
    Stability { file: String },
    /// Paired quasi-tree counts and their log-concavity.
    Logconcavity {
        file: String,
        /// The reference subset for the paired counts.
        #[arg(long, num_args = 0.., value_name = "EDGE")]
        anchor: Vec<String>,
        #[arg(long, value_enum, default_value_t = ConcavityArg::Ulc)]
        mode: ConcavityArg,
    },
    /// Parity lift of a set system.
    Lift {
        file: String,
        #[arg(long)]
        hat: String,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        file: String,
        /// Add the identity before reducing (published forms use I + M).
        #[arg(long)]
        plus_identity: bool,
    },
    /// Partial dual of a diagram at the given edges.
    Dual {
        file: String,
        #[arg(long, num_args = 0.., value_name = "EDGE")]
        at: Vec<String>,
    },
    /// Present a rotation system as a bouquet anchored at a spanning tree.
    FromRotation { file: String },
    /// Built-in families.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Emit a fixture diagram; `fixture list` prints the catalog.
    Fixture { name: String },
    /// Run the reproduction suite and print a pass/fail table.
    VerifyPaper {
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// The cyclic all-twisted bouquet on n loops.
    Cn {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            let payload = serde_json::to_string(&report::ErrorJson {
                error: format!("{err:#}"),
            })
            .expect("error serialization");
            eprintln!("{payload}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn enum_limit() -> usize {
    std::env::var("RIBBONKIT_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(core::DEFAULT_ENUM_LIMIT)
}

fn emit<T: serde::Serialize>(format: Option<Format>, value: &T) -> Result<()> {
    match format {
        None | Some(Format::Json) => println!("{}", serde_json::to_string(value)?),
        Some(Format::Tsv) => print!("{}", to_tsv(&serde_json::to_value(value)?)),
        Some(Format::Text) => bail!("this report has no plain-text form; use json or tsv"),
    }
    Ok(())
}

fn load_bqt(path: &str) -> Result<bqt::BqtFile> {
    Ok(bqt::parse(&read_input(path)?)?)
}

fn parse_labels(tokens: &[String]) -> Result<Vec<EdgeLabel>> {
    tokens
        .iter()
        .map(|t| EdgeLabel::new(t.clone()).map_err(Into::into))
        .collect()
}

fn resolve_cert(file: &bqt::BqtFile, arg: &Option<Vec<String>>) -> Result<pseudo::Certificate> {
    match arg {
        Some(tokens) if tokens.len() == 2 => {
            let a = tokens[0].parse().context("bad gap index")?;
            let b = tokens[1].parse().context("bad gap index")?;
            let cert = pseudo::Certificate::new(a, b);
            cert.validate(&file.diagram)?;
            Ok(cert)
        }
        Some(tokens) => file
            .cert_named(&tokens[0])
            .ok_or_else(|| anyhow!("no stored certificate named `{}`", tokens[0])),
        None => file
            .first_cert()
            .or_else(|| pseudo::find_certificate(&file.diagram))
            .ok_or_else(|| anyhow!("diagram is not pseudo-orientable")),
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let format = cli.format;
    match &cli.cmd {
        Cmd::Quasitrees { file } => {
            let g = load_bqt(file)?.anchored()?;
            let masks = g.quasi_tree_masks_with_limit(enum_limit())?;
            let quasi_trees: Vec<Vec<String>> = masks
                .iter()
                .map(|&m| {
                    g.edges()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| m >> i & 1 == 1)
                        .map(|(_, e)| e.as_str().to_string())
                        .collect()
                })
                .collect();
            emit(
                format,
                &report::QuasiTreesReport {
                    count: masks.len() as u64,
                    quasi_trees,
                },
            )?;
        }
        Cmd::CheckPseudo { file } => {
            let g = load_bqt(file)?.anchored()?;
            let r = pseudo::is_pseudo_orientable(&g);
            emit(
                format,
                &report::PseudoReportJson {
                    pseudo: r.pseudo,
                    certificate: r.certificate.map(|c| [c.cut_a, c.cut_b]),
                    adjusted: r
                        .adjusted
                        .map(|a| bqt::serialize(&bqt::BqtFile::from_anchored(&a))),
                },
            )?;
        }
        Cmd::Adjust { file, hat } => {
            let f = load_bqt(file)?;
            let g = f.anchored()?;
            let cert = resolve_cert(&f, &None)?;
            let hat = EdgeLabel::new(hat.clone())?;
            let adjusted = pseudo::adjust_anchored(&g, &cert, hat)?;
            print!(
                "{}",
                bqt::serialize(&bqt::BqtFile::from_anchored(&adjusted))
            );
        }
        Cmd::Matrix { file, kind, cert } => {
            let f = load_bqt(file)?;
            let (m, ring) = match kind {
                MatrixKind::M2 => (interlace::m2(&f.diagram).to_int(), "gf2"),
                MatrixKind::Mpm => {
                    let o = Orientation::canonical(&f.diagram);
                    (interlace::mpm(&f.diagram, &o)?, "int")
                }
                MatrixKind::Adjusted => {
                    let c = resolve_cert(&f, cert)?;
                    let o = Orientation::canonical(&f.diagram);
                    (interlace::adjusted_matrix(&f.diagram, &c, &o)?, "int")
                }
            };
            if format == Some(Format::Json) {
                println!("{}", serde_json::to_string(&matrix::int_to_json(&m, ring))?);
            } else {
                print!("{}", matrix::serialize_int(&m));
            }
        }
        Cmd::VerifyDetect { file, matrix_file } => {
            let f = load_bqt(file)?;
            let m = matrix::parse(&read_input(matrix_file)?)?;
            let r = interlace::verify_detection(&f.diagram, &m.to_rat(), enum_limit())?;
            let witness = r.witness.map(|mask| {
                m.to_rat()
                    .labels()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, l)| l.as_str().to_string())
                    .collect()
            });
            emit(
                format,
                &report::DetectionReportJson {
                    detects: r.detects,
                    det_plus_identity: r.det_plus_identity.to_string(),
                    quasi_tree_count: r.quasi_tree_count,
                    witness_subset: witness,
                },
            )?;
        }
        Cmd::Poly { file, eval } => {
            let g = load_bqt(file)?.anchored()?;
            let p = analysis::qt_poly_with_limit(&g, enum_limit())?;
            let value = if eval.is_empty() {
                None
            } else {
                let mut point = BTreeMap::new();
                for pair in eval {
                    let (edge, value) = pair
                        .split_once('=')
                        .ok_or_else(|| anyhow!("--eval expects edge=value, got `{pair}`"))?;
                    point.insert(EdgeLabel::new(edge)?, parse_rat(value)?);
                }
                Some(analysis::qt_poly_eval(&g, &point)?.to_string())
            };
            emit(
                format,
                &report::PolyReportJson {
                    coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
                    rendered: p.to_string(),
                    value,
                },
            )?;
        }
        Cmd::Stability { file } => {
            let text = read_input(file)?;
            let p = if poly::looks_like_poly(&text) {
                poly::parse(&text)?
            } else {
                let g = bqt::parse(&text)?.anchored()?;
                analysis::qt_poly_with_limit(&g, enum_limit())?
            };
            let r = stability::is_hurwitz_stable(&p)?;
            emit(
                format,
                &report::StabilityReportJson {
                    stable: r.stable,
                    rhp_count: r.rhp_count,
                    witness_root: r.witness_root.map(|(re, im)| [re, im]),
                },
            )?;
            if !r.stable {
                return Ok(ExitCode::from(3));
            }
        }
        Cmd::Logconcavity { file, anchor, mode } => {
            let g = load_bqt(file)?.anchored()?;
            let q = parse_labels(anchor)?;
            let s = analysis::q_sequence_with_limit(&g, &q, enum_limit())?;
            let mode = match mode {
                ConcavityArg::Lc => ConcavityMode::LC,
                ConcavityArg::Ulc => ConcavityMode::ULC,
            };
            let v = analysis::check_log_concavity(&s, mode);
            emit(
                format,
                &report::ConcavityReportJson {
                    values: s.values.clone(),
                    offset: s.offset,
                    mode: format!("{mode:?}"),
                    passes: v.passes,
                    internal_zeros: v.internal_zeros,
                    first_violation: v.first_violation,
                },
            )?;
        }
        Cmd::Lift { file, hat } => {
            let s = dsys::parse(&read_input(file)?)?;
            let lifted = s.lift(EdgeLabel::new(hat.clone())?)?;
            if format == Some(Format::Json) {
                println!("{}", serde_json::to_string(&dsys::to_json(lifted.inner()))?);
            } else {
                print!("{}", dsys::serialize(lifted.inner()));
            }
        }
        Cmd::Snf {
            file,
            plus_identity,
        } => {
            let m = matrix::parse(&read_input(file)?)?;
            let m = m
                .as_int()
                .ok_or_else(|| anyhow!("Smith normal form needs an integer matrix"))?;
            let m = if *plus_identity {
                m.plus_identity()
            } else {
                m.clone()
            };
            let snf = m.smith_normal_form();
            emit(
                format,
                &report::SnfReportJson {
                    diagonal: snf.diagonal.iter().map(|d| d.to_string()).collect(),
                },
            )?;
        }
        Cmd::Dual { file, at } => {
            let f = load_bqt(file)?;
            let x = parse_labels(at)?;
            if f.anchor.is_empty() {
                let out = core::dual::partial_dual(&f.diagram, &x)?;
                print!("{}", bqt::serialize(&bqt::BqtFile::from_diagram(out)));
            } else {
                // The dual of an anchored presentation moves the anchor.
                let g = f.anchored()?;
                let mut anchor: std::collections::BTreeSet<EdgeLabel> = g.anchor().clone();
                for e in x {
                    if !anchor.remove(&e) {
                        anchor.insert(e);
                    }
                }
                let out = AnchoredRibbon::new(f.diagram.clone(), anchor)?;
                print!("{}", bqt::serialize(&bqt::BqtFile::from_anchored(&out)));
            }
        }
        Cmd::FromRotation { file } => {
            let rs = rgs::parse(&read_input(file)?)?;
            let g = rs.to_anchored()?;
            print!("{}", bqt::serialize(&bqt::BqtFile::from_anchored(&g)));
        }
        Cmd::Family { family } => match family {
            FamilyCmd::Cn { n } => {
                let d = corpus::make_cn(*n)?;
                let mut f = bqt::BqtFile::from_diagram(d);
                f.name = Some(format!("cn-{n}"));
                print!("{}", bqt::serialize(&f));
            }
        },
        Cmd::Fixture { name } => {
            if name == "list" {
                for info in corpus::fixture_catalog() {
                    println!("{}\t{}", info.name, info.description);
                }
            } else {
                let d = corpus::fixture(name)?;
                let mut f = bqt::BqtFile::from_diagram(d);
                f.name = Some(name.clone());
                match name.as_str() {
                    "ex316" => {
                        let (s, t) = corpus::ex316_certificates();
                        f.certs = vec![(Some("S".into()), s), (Some("T".into()), t)];
                    }
                    "fig5" => {
                        f.certs = vec![(None, corpus::fig5_certificate())];
                    }
                    _ => {}
                }
                print!("{}", bqt::serialize(&f));
            }
        }
        Cmd::VerifyPaper { filter } => {
            let outcomes = checks::run(filter.as_deref());
            if outcomes.is_empty() {
                bail!(
                    "no check matches filter `{}`",
                    filter.as_deref().unwrap_or("")
                );
            }
            let mut failed = 0;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                match format {
                    Some(Format::Tsv) | Some(Format::Text) => {
                        println!("{status}\t{}\t{}", o.name, o.details);
                    }
                    _ => emit(
                        format,
                        &report::CheckReportJson {
                            name: o.name.to_string(),
                            passed: o.passed,
                            details: o.details.clone(),
                        },
                    )?,
                }
                failed += u32::from(!o.passed);
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_rat(s: &str) -> Result<BigRational> {
    let parse_int =
        |t: &str| -> Result<BigInt> { t.parse().map_err(|_| anyhow!("bad number `{s}`")) };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                bail!("zero denominator in `{s}`");
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}
