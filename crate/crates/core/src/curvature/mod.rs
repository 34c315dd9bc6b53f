//! Local curvature conditions with certificate-producing checkers.

pub mod certificate;
pub mod cycles;
pub mod flag;
pub mod graph;
pub mod npc;
pub mod sixlarge;
pub mod verify;
pub mod vh;

pub use certificate::{Certificate, ConstraintKind, ConstraintStep, CornerRef};
pub use cycles::{chordless_cycles, is_chordless_cycle};
pub use flag::{check_flag, check_simple, maximal_cliques, DEFAULT_CLIQUE_CAP};
pub use graph::SimpleGraph;
pub use npc::{check_npc, check_npc_vh_reduced, short_cycle_search, LinkCycle, Verdict};
pub use sixlarge::{check_link, check_locally_6_large, SixLargeOptions, SixLargeReport};
pub use verify::{verify_certificate, Subject};
pub use vh::{detect_vh, EdgeClass, VhDetection, VhPartition};
