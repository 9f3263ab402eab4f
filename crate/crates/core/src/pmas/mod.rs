//! Population monotonic allocation schemes: classification, construction,
//! verification and an exact existence oracle.

mod build;
mod classify;
mod oracle;
mod scheme;

pub use build::{build_pmas, build_veto_pmas, decompose_admissible, Component, Decomposition};
pub use classify::{
    classify_blocks, classify_blocks_mutant, Block, BlockDecomposition, BlockKind, Verdict, Witness,
};
pub use oracle::{pmas_exists_lp, pmas_extend_lp, OracleResult, ORACLE_MAX_PLAYERS};
pub use scheme::{verify_pmas, Coverage, PmasCheck, Scheme, Violation};
