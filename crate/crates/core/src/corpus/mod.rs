//! Text formats for square and simplicial complexes, and builders for the
//! standard examples.
//!
//! SQC (square complexes), one declaration per line, `#` to end of line is a
//! comment:
//!
//! ```text
//! vertex v
//! edge a v v
//! edge b v v
//! square q a b -a -b
//! vclass b
//! ```
//!
//! `vclass` lists vertical edges; any number of such lines may appear and
//! their presence attaches a VH partition to the document.
//!
//! DSC (generalized simplicial complexes): `simplex 0 <name>` for vertices and
//! `simplex <k> <name> <f0> ... <fk>` where `fi` is the facet at slot i.

mod build;
mod dsc;
mod sqc;

pub use build::{generic_triangulation, graph, graph_product, path, rose, standard_complex, STANDARD_NAMES};
pub use dsc::{parse_dsc, serialize_dsc};
pub use sqc::{is_name, parse_sqc, serialize_sqc, SqcDocument};
