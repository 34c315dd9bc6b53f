use crate::curvature::VhPartition;
use crate::error::{Error, Result};
use crate::square::{RawSquareComplex, Sign, SquareComplex};

/// A parsed SQC document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqcDocument {
    pub complex: SquareComplex,
    pub partition: Option<VhPartition>,
}

/// Identifiers in SQC documents: `[A-Za-z0-9_]+`.
pub fn is_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn name(line: usize, s: &str) -> Result<String> {
    if is_name(s) {
        Ok(s.to_string())
    } else {
        Err(syntax(line, format!("invalid identifier `{s}`")))
    }
}

pub fn parse_sqc(text: &str) -> Result<SqcDocument> {
    let mut raw = RawSquareComplex::default();
    let mut vertical: Option<Vec<String>> = None;
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        let content = full.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        match keyword {
            "vertex" => match args {
                [v] => {
                    raw.vertex(name(line, v)?);
                }
                _ => return Err(syntax(line, "expected `vertex <name>`")),
            },
            "edge" => match args {
                [e, t, h] => {
                    raw.edge(name(line, e)?, name(line, t)?, name(line, h)?);
                }
                _ => return Err(syntax(line, "expected `edge <name> <tail> <head>`")),
            },
            "square" => match args {
                [s, sides @ ..] if sides.len() == 4 => {
                    let mut words = Vec::with_capacity(4);
                    for side in sides {
                        let (edge, sign) = match side.strip_prefix('-') {
                            Some(rest) => (rest, Sign::Minus),
                            None => (*side, Sign::Plus),
                        };
                        words.push((name(line, edge)?, sign));
                    }
                    let words: [(String, Sign); 4] = words.try_into().expect("four sides");
                    raw.squares.push((name(line, s)?, words));
                }
                _ => return Err(syntax(line, "expected `square <name> <s0> <s1> <s2> <s3>`")),
            },
            "vclass" => {
                let list = vertical.get_or_insert_with(Vec::new);
                for e in args {
                    list.push(name(line, e)?);
                }
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    let complex = SquareComplex::validate(&raw)?;
    let partition = match vertical {
        Some(list) => Some(VhPartition::from_vertical(&complex, &list)?),
        None => None,
    };
    Ok(SqcDocument { complex, partition })
}

/// Canonical form: vertices, edges, squares, each sorted by name, then one
/// `vclass` line when a partition is given.
pub fn serialize_sqc(x: &SquareComplex, partition: Option<&VhPartition>) -> String {
    let mut out = String::new();
    for v in x.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for e in x.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.id, x.vertices()[e.tail], x.vertices()[e.head]));
    }
    for sq in x.squares() {
        out.push_str(&format!("square {}", sq.id));
        for side in sq.sides {
            out.push(' ');
            out.push_str(&x.side_label(side));
        }
        out.push('\n');
    }
    if let Some(p) = partition {
        out.push_str("vclass");
        for name in p.vertical_names(x) {
            out.push(' ');
            out.push_str(&name);
        }
        out.push('\n');
    }
    out
}
