use serde::{Deserialize, Serialize};

/// A square corner, naming one edge of a square-complex link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerRef {
    pub square: String,
    pub corner: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// Opposite sides of a square: same class.
    Same,
    /// Adjacent sides of a square: different classes.
    Differ,
}

/// One step of a VH constraint cycle, walking from edge `from` to edge `to`
/// through the constraint between sides `from_side` and `to_side` of `square`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintStep {
    pub square: String,
    pub kind: ConstraintKind,
    pub from_side: usize,
    pub to_side: usize,
    pub from: String,
    pub to: String,
}

/// Machine-checkable evidence that a local condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// An embedded cycle of length at most 3 in a square-complex vertex link,
    /// listed as consecutive link edges and the link vertices between them.
    ShortLinkCycle {
        vertex: String,
        corners: Vec<CornerRef>,
        ends: Vec<String>,
    },
    /// A cycle of VH constraints with an odd number of `Differ` steps.
    VhContradiction { steps: Vec<ConstraintStep> },
    /// Link simplices violating simplicity: one simplex with a repeated
    /// vertex, or two simplices on the same vertex set.
    NotSimple { base: String, cells: Vec<String> },
    /// A clique of the link 1-skeleton spanned by no link simplex; every
    /// proper subset is spanned.
    MissingCliqueSimplex { base: String, clique: Vec<String> },
    /// An embedded 4- or 5-cycle without diagonals in a link.
    ChordlessCycle { base: String, cycle: Vec<String> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ShortLinkCycle { .. } => "ShortLinkCycle",
            Certificate::VhContradiction { .. } => "VhContradiction",
            Certificate::NotSimple { .. } => "NotSimple",
            Certificate::MissingCliqueSimplex { .. } => "MissingCliqueSimplex",
            Certificate::ChordlessCycle { .. } => "ChordlessCycle",
        }
    }

    /// Where the certificate lives: a vertex or simplex name, or the complex
    /// as a whole for VH contradictions.
    pub fn location(&self) -> Option<&str> {
        match self {
            Certificate::ShortLinkCycle { vertex, .. } => Some(vertex),
            Certificate::VhContradiction { .. } => None,
            Certificate::NotSimple { base, .. }
            | Certificate::MissingCliqueSimplex { base, .. }
            | Certificate::ChordlessCycle { base, .. } => Some(base),
        }
    }
}
