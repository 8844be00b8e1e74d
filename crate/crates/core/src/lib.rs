//! Exact verification engine for finite-dimensional Hopf algebras given by
//! structure constants over cyclotomic fields.

pub mod cyclofield;
pub mod error;
pub mod format;
pub mod hopf;
pub mod integrals;
pub mod lab;
pub mod linalg;
pub mod report;
pub mod zoo;

pub use cyclofield::{CycField, CycNumber, Rational};
pub use error::{Error, Result};
pub use hopf::{AxiomReport, Functional, HopfElement, HopfPresentation, StructEntry};
pub use integrals::{IntegralPair, TraceVariant};
pub use linalg::{Mat, Subspace};
pub use report::{build_report, InvariantReport, ReportOptions};
