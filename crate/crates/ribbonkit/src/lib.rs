//! File formats, reports, and the reproduction suite for the bouquet and
//! delta-matroid library.
//!
//! The algorithmic core lives in `ribbonkit-core`; this crate adds the
//! line-oriented text formats (`.bqt` diagrams, `.rgs` rotation systems,
//! `.dsys` set systems, matrix and polynomial files), JSON/TSV report
//! types used by the command-line tool, and the named checks behind
//! `ribbonkit verify-paper`.
//!
//! ```
//! let file = ribbonkit::fmt::bqt::parse(
//!     "bouquet example\nword: 1 2 1 2\ntwisted:\nanchor: 1 2\n",
//! )?;
//! let graph = file.anchored()?;
//! assert_eq!(graph.quasi_tree_masks()?.len(), 2);
//! let round_trip = ribbonkit::fmt::bqt::serialize(&file);
//! assert!(round_trip.contains("anchor: 1 2"));
//! # Ok::<(), anyhow::Error>(())
//! ```

pub mod checks;
pub mod fmt;
pub mod report;

pub use ribbonkit_core as core;
