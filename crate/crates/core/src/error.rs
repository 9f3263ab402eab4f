use crate::coalition::Coalition;
use crate::pmas::Witness;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("constraint {row} has {found} coefficients, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("constraint {row} references variable {var} of a {vars}-variable program")]
    VariableOutOfRange { row: usize, var: usize, vars: usize },
    #[error("objective has {found} coefficients, expected {expected}")]
    ObjectiveLength { expected: usize, found: usize },
    #[error("player {player} is out of range for a {players}-player game")]
    PlayerOutOfRange { player: usize, players: usize },
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("{players} players exceeds the limit of {limit}")]
    TooManyPlayers { players: usize, limit: usize },
    #[error("payoff vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("payoff vector is not in the core: coalition {violated} is violated")]
    NotInCore { violated: Coalition },
    #[error("matrix does not admit a PMAS: {0}")]
    NotAdmissible(Witness),
    #[error(
        "player {player} is not a veto player: coalition {coalition} has nonzero worth without it"
    )]
    NotVeto { player: usize, coalition: Coalition },
    #[error("game is not monotonic: w({subset}) > w({superset})")]
    NotMonotonic {
        subset: Coalition,
        superset: Coalition,
    },
    #[error("game has an empty core")]
    Unbalanced,
    #[error("degenerate upper and lower vectors with sum(m) != w(N)")]
    DegenerateTau,
    #[error("scheme has no suballocation for essential coalition {missing}")]
    IncompleteScheme { missing: Coalition },
    #[error("scheme entry for {coalition} has the wrong length")]
    MalformedScheme { coalition: Coalition },
    #[error("games to compose must be nonempty")]
    NothingToCompose,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("internal solver failure: {0}")]
    Solver(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
