//! Loading complexes from files or the built-in corpus.

use std::path::Path;

use cxcore::corpus::{parse_dsc, parse_sqc, serialize_sqc, standard_complex};
use cxcore::curvature::VhPartition;
use cxcore::{DeltaComplex, SquareComplex};
use sha2::{Digest, Sha256};

use crate::CliError;

pub enum Complex {
    Square { complex: SquareComplex, partition: Option<VhPartition> },
    Delta(DeltaComplex),
}

pub struct Loaded {
    pub complex: Complex,
    /// SHA-256 of the input text (canonical SQC for corpus inputs).
    pub digest: String,
}

pub fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// DSC documents are recognized by their first declaration.
pub fn is_dsc(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.split_whitespace().next() == Some("simplex"))
}

pub fn parse(text: &str) -> Result<Complex, CliError> {
    if is_dsc(text) {
        Ok(Complex::Delta(parse_dsc(text)?))
    } else {
        let doc = parse_sqc(text)?;
        Ok(Complex::Square { complex: doc.complex, partition: doc.partition })
    }
}

pub fn load(input: Option<&Path>, corpus: Option<&str>) -> Result<Loaded, CliError> {
    match (input, corpus) {
        (Some(path), None) => {
            let text = read(path)?;
            Ok(Loaded { complex: parse(&text)?, digest: digest(&text) })
        }
        (None, Some(name)) => {
            let (complex, partition) = standard_complex(name)?;
            let text = serialize_sqc(&complex, partition.as_ref());
            Ok(Loaded { complex: Complex::Square { complex, partition }, digest: digest(&text) })
        }
        (Some(_), Some(_)) => Err(CliError::Usage("give either --input or --corpus, not both".into())),
        (None, None) => Err(CliError::Usage("an input is required: --input FILE or --corpus NAME".into())),
    }
}
