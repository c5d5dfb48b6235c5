//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by circuit construction, simulation, and compilation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A gate references a qubit index at or beyond the circuit width.
    #[error("gate {gate_index} references qubit {qubit}, but the circuit has {num_qubits} qubits")]
    QubitOutOfRange {
        gate_index: usize,
        qubit: usize,
        num_qubits: usize,
    },

    /// A gate lists the same qubit twice (e.g. CNOT with control == target).
    #[error("gate {gate_index} uses qubit {qubit} more than once")]
    DuplicateQubit { gate_index: usize, qubit: usize },

    /// A multi-controlled gate has an empty control or qubit list.
    #[error("gate {gate_index} has no controls")]
    EmptyControls { gate_index: usize },

    /// A polarity mask has a different length than the control list.
    #[error("gate {gate_index} has {controls} controls but a polarity mask of length {polarity}")]
    PolarityLengthMismatch {
        gate_index: usize,
        controls: usize,
        polarity: usize,
    },

    /// A designated special qubit (clean qubit, output, cone seed, ...) is out of range.
    #[error("{role} qubit {qubit} is out of range for a circuit with {num_qubits} qubits")]
    SpecialQubitOutOfRange {
        role: &'static str,
        qubit: usize,
        num_qubits: usize,
    },

    /// The same qubit appears twice in an output or subset list.
    #[error("{role} list names qubit {qubit} more than once")]
    DuplicateSpecialQubit { role: &'static str, qubit: usize },

    /// An output (or subset) list that must be nonempty is empty.
    #[error("{role} list must name at least one qubit")]
    EmptySpecialQubits { role: &'static str },

    /// An operation that reads a single designated output got several.
    #[error("operation requires exactly one designated output, circuit has {count}")]
    RequiresSingleOutput { count: usize },

    /// The circuit is too wide for dense statevector simulation.
    #[error("circuit has {num_qubits} qubits; dense simulation is capped at {cap}")]
    TooManyQubits { num_qubits: usize, cap: usize },

    /// The circuit is too wide to build its full unitary matrix.
    #[error("circuit has {num_qubits} qubits; building a dense unitary is capped at {cap}")]
    UnitaryTooLarge { num_qubits: usize, cap: usize },

    /// The ensemble average over mixed qubits would need too many basis settings.
    #[error("{mixed_qubits} mixed qubits exceed the ensemble cap of {cap}")]
    EnsembleTooLarge { mixed_qubits: usize, cap: usize },

    /// A light cone grew past the configured cap.
    #[error("light cone touches {cone_size} qubits, exceeding the cap of {cap}")]
    ConeTooLarge { cone_size: usize, cap: usize },

    /// A multi-controlled-X lowering was not given enough borrowable ancillas.
    #[error("decomposing a {controls}-control Toffoli needs {needed} ancilla(s), got {got}")]
    NotEnoughAncillas {
        controls: usize,
        needed: usize,
        got: usize,
    },

    /// An ancilla index overlaps the controls/target or repeats.
    #[error("ancilla qubit {qubit} collides with another wire of the decomposition")]
    AncillaCollision { qubit: usize },

    /// A basis-state label does not fit the circuit width.
    #[error("basis state {basis_state} does not fit in {num_qubits} qubits")]
    BasisStateOutOfRange { basis_state: u64, num_qubits: usize },

    /// A state and a circuit disagree on qubit count.
    #[error("state has {state_qubits} qubits but the circuit has {circuit_qubits}")]
    DimensionMismatch {
        state_qubits: usize,
        circuit_qubits: usize,
    },

    /// Two distributions that must share an output arity do not.
    #[error("distributions have different output arity ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },

    /// A probability argument fell outside [0, 1].
    #[error("probability {value} is outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    /// An outcome bit string has the wrong length.
    #[error("outcome string has {got} bits, expected {expected}")]
    OutcomeLengthMismatch { got: usize, expected: usize },

    /// A circuit does not have the sandwich shape (Hadamard layer, commuting
    /// diagonal gates, Hadamard layer) required by the graph-based simulator.
    #[error("circuit is not in hypergraph form: {reason}")]
    NotIqpShaped { reason: String },

    /// An interaction pair in a diagonal-layer description is not a
    /// normalized `(low, high)` pair of distinct in-range qubits.
    #[error(
        "interaction ({a}, {b}) is not an ordered pair of distinct qubits below {num_qubits}"
    )]
    InvalidInteraction {
        a: usize,
        b: usize,
        num_qubits: usize,
    },

    /// A per-qubit phase-step list does not match the qubit count.
    #[error("phase step list has {got} entries, expected {expected}")]
    PhaseListLengthMismatch { got: usize, expected: usize },

    /// A phase step is not representable: vertex steps use 0..=15 and
    /// interaction steps use 1..=15 (absence encodes zero).
    #[error("phase step {k} is out of range (vertex steps 0..=15, interaction steps 1..=15)")]
    PhaseStepOutOfRange { k: u8 },
}

pub type Result<T> = std::result::Result<T, Error>;
