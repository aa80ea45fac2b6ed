use thiserror::Error;

/// Failures while building or ingesting a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("cayley table is not square: row {row} has {len} entries, expected {order}")]
    NonSquare { row: usize, len: usize, order: usize },
    #[error("cayley entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("cayley table is not a latin square: {line} {index} repeats element {value}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("associativity fails at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element index {index} out of range for order {order}")]
    BadElement { index: usize, order: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid group spec `{0}` (expected cyclic:N, dihedral:N, dicyclic:M or cayley:PATH)")]
    BadSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("member set is not a subgroup of this lattice")]
    NotInLattice,
}

/// Failures from matrix construction and the numeric eigensolver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("matrix dimension {dimension} exceeds dense limit {limit}; use the component-wise numeric path")]
    DimensionLimit { dimension: usize, limit: usize },
    #[error("adjacency matrix entry ({row}, {col}) = {value} is not a 0/1 simple-graph entry")]
    NonBinary { row: usize, col: usize, value: f64 },
    #[error("exact spectrum has {exact} values but {numeric} numeric eigenvalues were supplied")]
    LengthMismatch { exact: usize, numeric: usize },
    #[error("jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnergyError {
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("comparison of {what} is indeterminate: |difference| = {difference:e} is inside the float guard band")]
    Indeterminate { what: &'static str, difference: f64 },
}

/// Violated admissibility constraint for a (family, prime) pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{family} requires p >= {min}, got p = {p}")]
    PrimeTooSmall { family: &'static str, min: u64, p: u64 },
    #[error("p = {p} exceeds the supported maximum {max}")]
    PrimeTooLarge { p: u64, max: u64 },
    #[error("unknown family `{0}` (expected D2p, D2p2, Q4p or Q4p2)")]
    UnknownFamily(String),
    #[error("group order {order} exceeds the brute-force ceiling {limit}")]
    OrderLimit { order: usize, limit: usize },
}

/// Umbrella error for the full pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Energy(#[from] EnergyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
