//! JSON action documents, the built-in catalog, verdict reports with
//! embedded witnesses, and an independent audit of those witnesses.

pub mod audit;
pub mod catalog;
pub mod document;
pub mod error;
pub mod report;
pub mod scalar;
pub mod text;

pub use document::{parse_document, ActionDocument, Check};
pub use error::RunError;
pub use report::{run, VerdictReport};
