//! File formats, reports and verification suites behind the `pmas` binary.

pub mod error;
pub mod generate;
pub mod input;
pub mod output;
pub mod report;
pub mod suites;

pub use error::CliError;

/// Default player limit for commands that sweep every coalition.
pub const DEFAULT_SWEEP_CAP: usize = 16;

/// Reads `PMAS_MAX_PLAYERS`, falling back to [`DEFAULT_SWEEP_CAP`] and never
/// exceeding the library's hard limit.
pub fn sweep_cap() -> Result<usize, CliError> {
    match std::env::var("PMAS_MAX_PLAYERS") {
        Ok(v) => {
            let cap: usize = v.trim().parse().map_err(|_| {
                CliError::Usage(format!("PMAS_MAX_PLAYERS must be a number, got {v:?}"))
            })?;
            Ok(cap.min(pmas_core::game::MAX_PLAYERS))
        }
        Err(_) => Ok(DEFAULT_SWEEP_CAP),
    }
}

pub fn check_sweep(players: usize) -> Result<(), CliError> {
    let limit = sweep_cap()?;
    if players > limit {
        return Err(CliError::Size { players, limit });
    }
    Ok(())
}
