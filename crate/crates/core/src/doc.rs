//! JSON documents shared by the library and the command line.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::Error;
use crate::gf::Field;

/// `{"field": {...}, "n": int, "generators": [[int,...],...]}`.
/// Generators need not be reduced on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDoc {
    pub field: Field,
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl TryFrom<CodeDoc> for LinearCode {
    type Error = Error;

    fn try_from(doc: CodeDoc) -> Result<Self, Error> {
        LinearCode::from_rows(&doc.field, doc.n, &doc.generators)
    }
}

impl From<LinearCode> for CodeDoc {
    fn from(c: LinearCode) -> Self {
        CodeDoc::from(&c)
    }
}

impl From<&LinearCode> for CodeDoc {
    fn from(c: &LinearCode) -> Self {
        CodeDoc { field: c.field().clone(), n: c.n(), generators: c.generator().to_rows() }
    }
}

/// A block code together with the ambient coordinates it lives on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub coordinates: Vec<usize>,
    #[serde(flatten)]
    pub code: CodeDoc,
}
