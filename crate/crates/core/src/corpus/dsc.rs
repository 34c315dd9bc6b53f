use crate::delta::{DeltaComplex, RawDeltaComplex};
use crate::error::{Error, Result};

/// Parses a DSC document. Names are arbitrary whitespace-free tokens.
pub fn parse_dsc(text: &str) -> Result<DeltaComplex> {
    let mut raw = RawDeltaComplex::default();
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let content = full.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        if keyword != "simplex" {
            return Err(Error::Syntax { line, message: format!("unknown keyword `{keyword}`") });
        }
        let [dim, name, facets @ ..] = args else {
            return Err(Error::Syntax { line, message: "expected `simplex <k> <name> ...`".into() });
        };
        let dim: usize = dim
            .parse()
            .map_err(|_| Error::Syntax { line, message: format!("bad dimension `{dim}`") })?;
        let expected = if dim == 0 { 0 } else { dim + 1 };
        if facets.len() != expected {
            return Err(Error::Syntax {
                line,
                message: format!("{dim}-simplex `{name}` needs {expected} facets, found {}", facets.len()),
            });
        }
        raw.add(dim, *name, facets.iter().map(|f| f.to_string()).collect());
    }
    DeltaComplex::validate(&raw)
}

/// Canonical form: by dimension, then by name.
pub fn serialize_dsc(x: &DeltaComplex) -> String {
    let mut out = String::new();
    for (dim, name, facets) in x.to_raw().simplices {
        out.push_str(&format!("simplex {dim} {name}"));
        for f in facets {
            out.push(' ');
            out.push_str(&f);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "simplex 0 a\nsimplex 0 b\nsimplex 0 c\n\
        simplex 1 ab b a\nsimplex 1 ac c a\nsimplex 1 bc c b\nsimplex 2 abc bc ac ab\n";

    #[test]
    fn triangle_round_trip() {
        let x = parse_dsc(TRIANGLE).unwrap();
        assert_eq!(x.count(2), 1);
        assert_eq!(serialize_dsc(&x), TRIANGLE);
    }

    #[test]
    fn wrong_arity_is_a_syntax_error() {
        let text = "simplex 0 a\nsimplex 0 b\nsimplex 1 ab b\n";
        assert!(matches!(parse_dsc(text), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse_dsc("simplex x a\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_dsc("vertex a\n"), Err(Error::Syntax { line: 1, .. })));
    }
}
