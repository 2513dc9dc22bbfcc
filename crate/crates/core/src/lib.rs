//! Schur products of linear codes, Reed-Solomon recognition and the
//! classification of pairs of codes whose product attains the Singleton bound.

pub mod classify;
pub mod code;
pub mod doc;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod random;
pub mod rs;
pub mod search;
pub mod stab;

pub use code::{Limits, LinearCode};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement, ProjPoint};
pub use linalg::{Echelon, Matrix, Span};
pub use doc::{BlockDoc, CodeDoc};
pub use stab::{AlgebraBasis, ProjectorDecomposition, RefinedSingleton};
pub use rs::{CommonEvaluation, RsCertificate};
pub use classify::{BoundReport, DualBlock, PmdsCertificate, Ratio, Relation, Which};
pub use search::{Mode, SearchConfig, SearchRecord, SearchSummary};
