use thiserror::Error;

/// Failure of a single scalar operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("integer overflow in exact dyadic arithmetic")]
    Overflow,
    #[error("non-finite floating-point amplitude")]
    NonFinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),

    #[error("qubit {qubit} out of range for a {num_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    SameQubit(usize),

    #[error("register of {len} qubits starting at {start} does not fit in {num_qubits} qubits")]
    RegisterOutOfRange {
        start: usize,
        len: usize,
        num_qubits: usize,
    },

    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("amplitude array length {0} is not a power of two >= 2")]
    InvalidLength(usize),

    #[error("ancilla is entangled with the register; cannot discard it")]
    EntangledAncilla,

    #[error("duplicate checkpoint label {0:?}")]
    DuplicateCheckpoint(String),

    #[error("{what} {value} exceeds the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
