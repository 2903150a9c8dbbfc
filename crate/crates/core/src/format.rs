//! JSON code files.
//!
//! ```json
//! {"p":2,"e":1,"modulus":[0,1],"n":4,"l":2,"blocks":[[[1,0,0,0],[0,1,0,0]], …]}
//! ```
//!
//! Blocks are RREF basis rows with field elements integer-encoded. Files
//! written by the spread construction carry an extra `construction` object.

use serde::{Deserialize, Serialize};

use crate::code::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldSpec};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    #[serde(rename = "type")]
    pub kind: String,
    pub q: u64,
    pub l: u32,
    pub k: u32,
    /// Characteristic and degree of the big field GF(p^e) = GF(q^(kl)).
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
    /// Integer encoding of the primitive element in the big field.
    pub alpha: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
    pub n: usize,
    pub l: usize,
    pub blocks: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

impl CodeFile {
    pub fn from_code(code: &ConstantDimensionCode) -> Self {
        let FieldDescriptor { p, e, modulus } = code.field().descriptor();
        CodeFile {
            p,
            e,
            modulus,
            n: code.ambient_dim(),
            l: code.dim(),
            blocks: code.codewords().iter().map(|s| s.rows().to_vec()).collect(),
            construction: None,
        }
    }

    pub fn to_code(&self) -> Result<ConstantDimensionCode> {
        let field = FieldSpec::from_descriptor(&FieldDescriptor {
            p: self.p,
            e: self.e,
            modulus: self.modulus.clone(),
        })?;
        let blocks = self
            .blocks
            .iter()
            .map(|rows| Subspace::from_rows(&field, self.n, rows))
            .collect::<Result<Vec<_>>>()?;
        ConstantDimensionCode::new(&field, self.n, self.l, blocks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("code file serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("code file serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

pub fn code_to_json(code: &ConstantDimensionCode) -> String {
    CodeFile::from_code(code).to_json()
}

pub fn code_from_json(text: &str) -> Result<ConstantDimensionCode> {
    CodeFile::parse(text)?.to_code()
}
