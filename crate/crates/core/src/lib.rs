//! Spectral radius under vertex deletion.
//!
//! For a simple graph `G` and a non-isolated vertex `v` of degree `d(v)`,
//!
//! ```text
//! λ(G) <= sqrt(λ(G - v)² + 2 d(v) - 1)
//! ```
//!
//! where `λ` is the largest adjacency eigenvalue. For connected `G` equality
//! holds exactly when `G` is complete, or `G` is a star and `v` a leaf.
//!
//! The crate evaluates this bound ([`bounds::theorem1_report`]), produces a
//! numerical certificate for every step of its matrix-analytic proof
//! ([`bounds::proof_certificate`]), checks companion bounds, and verifies all
//! of it over corpora of graphs ([`harness::run_scan`]), including every
//! connected graph on up to seven vertices.
//!
//! ```
//! use spectral_deletion::bounds::{theorem1_report, Tolerances};
//! use spectral_deletion::graph::{complete, VertexId};
//!
//! let report = theorem1_report(&complete(4).unwrap(), VertexId(0), &Tolerances::default()).unwrap();
//! assert!((report.lambda - 3.0).abs() < 1e-12);
//! assert!(report.equality);
//! ```

pub mod bounds;
pub mod cli;
pub mod graph;
pub mod harness;
pub mod linalg;
