//! Exact combinatorics of single-vertex ribbon graphs (bouquets) and their
//! delta-matroids.
//!
//! A bouquet is stored as a signed chord diagram: a cyclic double-occurrence
//! word of edge labels together with the set of twisted (non-orientable)
//! loops. On top of that the crate provides
//!
//! * quasi-tree tests and enumeration, with two independent routes (a
//!   geometric boundary trace and GF(2) ranks of the binary interlacing
//!   matrix),
//! * partial duality via elementary arc surgeries, partial Petrials, and the
//!   anchored presentation of general ribbon graphs,
//! * set systems and delta-matroids: exchange axioms, twists, minors, the
//!   parity lift and its inverse,
//! * exact linear algebra over the integers, rationals, and GF(2):
//!   determinants, principal pivot transforms, principal unimodularity,
//!   Smith normal forms,
//! * the interlacing-matrix constructions attached to bouquets and the
//!   detection check relating principal minors to quasi-trees,
//! * pseudo-orientability certificates and the adjustment operation,
//! * quasi-tree generating polynomials, exact Hurwitz stability verdicts,
//!   and (ultra-)log-concavity analysis,
//! * a corpus of fixture diagrams and seeded random generators.
//!
//! Everything is exact: no floating point enters any verdict. The only
//! floating-point code is a root-finding oracle used to cross-check the
//! exact stability decisions.
//!
//! The crate is `no_std` (it requires `alloc`). All values are immutable
//! after construction and every operation is a pure function, so the types
//! are safe to share across threads.
//!
//! ```
//! use ribbonkit_core::chord::ChordDiagram;
//! use ribbonkit_core::dual::AnchoredRibbon;
//! use ribbonkit_core::{analysis, pseudo};
//!
//! // One twisted loop interlacing two untwisted ones.
//! let d = ChordDiagram::from_tokens(
//!     ["2", "1", "2", "3", "1", "3"],
//!     ["1"],
//! )?;
//! assert_eq!(d.quasi_trees()?.len(), 4);
//!
//! // It is pseudo-orientable; adjusting along a certificate yields an
//! // orientable bouquet realizing the parity lift of its delta-matroid.
//! let cert = pseudo::find_certificate(&d).expect("certificated");
//! let adjusted = pseudo::adjust(&d, &cert, pseudo::fresh_hat_label(&d))?;
//! assert!(adjusted.is_orientable());
//!
//! // The quasi-tree generating polynomial is Hurwitz stable.
//! let poly = analysis::qt_poly(&AnchoredRibbon::bouquet(d))?;
//! assert_eq!(poly.to_string(), "2x^2 + x + 1");
//! assert!(analysis::stability::is_hurwitz_stable(&poly)?.stable);
//! # Ok::<(), ribbonkit_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod analysis;
pub mod chord;
pub mod corpus;
pub mod delta;
pub mod dual;
pub mod error;
pub mod exactla;
pub mod interlace;
pub mod pseudo;
pub mod rotation;

pub use chord::{BoundaryReport, ChordDiagram, EdgeLabel};
pub use delta::SetSystem;
pub use dual::AnchoredRibbon;
pub use error::Error;

pub use pseudo::Certificate;

/// Default bound on the edge count for exhaustive subset enumeration.
pub const DEFAULT_ENUM_LIMIT: usize = 20;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
