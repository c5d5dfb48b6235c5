//! Gate kinds: the primitive operations a circuit is built from.

/// One primitive gate on named qubit wires.
///
/// Rotation kinds carry a phase step `k` interpreted as the angle `k * π/8`
/// and stored modulo 16:
///
/// * [`Gate::Rz8`] applies `exp(i k π/8 Z)`, i.e. `diag(e^{ikπ/8}, e^{-ikπ/8})`.
/// * [`Gate::Rzz8`] applies `exp(i k π/8 Z⊗Z)`.
/// * [`Gate::Ncp8`] multiplies the amplitude of every basis state whose listed
///   qubits all match their polarity bits by `e^{ikπ/8}` (a multi-controlled
///   phase; with a single qubit and polarity `true`, `k = 2` is exactly `S`
///   restricted to the lattice, `k = 2` on two qubits is controlled-S, and
///   `k = 8` on two qubits is CZ).
///
/// Multi-controlled kinds carry one polarity bit per control: `true` fires on
/// `|1⟩`, `false` on `|0⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    /// Hadamard.
    H(usize),
    /// Pauli X.
    X(usize),
    /// Pauli Z.
    Z(usize),
    /// Phase gate `diag(1, i)`.
    S(usize),
    /// Inverse phase gate `diag(1, -i)`.
    Sdg(usize),
    /// `diag(1, e^{iπ/4})`.
    T(usize),
    /// `diag(1, e^{-iπ/4})`.
    Tdg(usize),
    /// Controlled X.
    Cnot { control: usize, target: usize },
    /// Controlled Z (symmetric in its two qubits).
    Cz(usize, usize),
    /// Doubly-controlled X.
    Toffoli { controls: [usize; 2], target: usize },
    /// Multi-controlled X with per-control polarity.
    Ncx {
        controls: Vec<usize>,
        polarity: Vec<bool>,
        target: usize,
    },
    /// Z rotation by `k * π/8`: `exp(i k π/8 Z)`.
    Rz8 { k: u8, qubit: usize },
    /// ZZ rotation by `k * π/8`: `exp(i k π/8 Z⊗Z)`.
    Rzz8 { k: u8, qubits: (usize, usize) },
    /// Multi-controlled phase `e^{ikπ/8}` on the polarity-matched subspace.
    Ncp8 {
        qubits: Vec<usize>,
        polarity: Vec<bool>,
        k: u8,
    },
}

impl Gate {
    /// Doubly-controlled X with positive controls.
    pub fn ccx(c1: usize, c2: usize, target: usize) -> Gate {
        Gate::Toffoli {
            controls: [c1, c2],
            target,
        }
    }

    /// Multi-controlled X; `polarity[i]` is the firing value of `controls[i]`.
    pub fn ncx(controls: Vec<usize>, polarity: Vec<bool>, target: usize) -> Gate {
        Gate::Ncx {
            controls,
            polarity,
            target,
        }
    }

    /// Z rotation by `k * π/8`; `k` is reduced modulo 16.
    pub fn rz8(k: i64, qubit: usize) -> Gate {
        Gate::Rz8 {
            k: k.rem_euclid(16) as u8,
            qubit,
        }
    }

    /// ZZ rotation by `k * π/8`; `k` is reduced modulo 16.
    pub fn rzz8(k: i64, a: usize, b: usize) -> Gate {
        Gate::Rzz8 {
            k: k.rem_euclid(16) as u8,
            qubits: (a, b),
        }
    }

    /// Multi-controlled phase `e^{ikπ/8}`; `k` is reduced modulo 16.
    pub fn ncp8(qubits: Vec<usize>, polarity: Vec<bool>, k: i64) -> Gate {
        Gate::Ncp8 {
            qubits,
            polarity,
            k: k.rem_euclid(16) as u8,
        }
    }

    /// Every qubit the gate touches, controls before target.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q)
            | Gate::Rz8 { qubit: q, .. } => vec![*q],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Cz(a, b) => vec![*a, *b],
            Gate::Rzz8 { qubits: (a, b), .. } => vec![*a, *b],
            Gate::Toffoli { controls, target } => vec![controls[0], controls[1], *target],
            Gate::Ncx {
                controls, target, ..
            } => {
                let mut qs = controls.clone();
                qs.push(*target);
                qs
            }
            Gate::Ncp8 { qubits, .. } => qubits.clone(),
        }
    }

    /// The inverse gate. Self-inverse kinds return a clone; phase kinds flip
    /// their phase step to `16 - k` (mod 16).
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::S(q) => Gate::Sdg(*q),
            Gate::Sdg(q) => Gate::S(*q),
            Gate::T(q) => Gate::Tdg(*q),
            Gate::Tdg(q) => Gate::T(*q),
            Gate::Rz8 { k, qubit } => Gate::Rz8 {
                k: (16 - k) % 16,
                qubit: *qubit,
            },
            Gate::Rzz8 { k, qubits } => Gate::Rzz8 {
                k: (16 - k) % 16,
                qubits: *qubits,
            },
            Gate::Ncp8 {
                qubits,
                polarity,
                k,
            } => Gate::Ncp8 {
                qubits: qubits.clone(),
                polarity: polarity.clone(),
                k: (16 - k) % 16,
            },
            other => other.clone(),
        }
    }

    /// The same gate with every qubit index rewritten through `f`.
    pub fn map_qubits(&self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::H(q) => Gate::H(f(*q)),
            Gate::X(q) => Gate::X(f(*q)),
            Gate::Z(q) => Gate::Z(f(*q)),
            Gate::S(q) => Gate::S(f(*q)),
            Gate::Sdg(q) => Gate::Sdg(f(*q)),
            Gate::T(q) => Gate::T(f(*q)),
            Gate::Tdg(q) => Gate::Tdg(f(*q)),
            Gate::Cnot { control, target } => Gate::Cnot {
                control: f(*control),
                target: f(*target),
            },
            Gate::Cz(a, b) => Gate::Cz(f(*a), f(*b)),
            Gate::Toffoli { controls, target } => Gate::Toffoli {
                controls: [f(controls[0]), f(controls[1])],
                target: f(*target),
            },
            Gate::Ncx {
                controls,
                polarity,
                target,
            } => Gate::Ncx {
                controls: controls.iter().map(|&q| f(q)).collect(),
                polarity: polarity.clone(),
                target: f(*target),
            },
            Gate::Rz8 { k, qubit } => Gate::Rz8 {
                k: *k,
                qubit: f(*qubit),
            },
            Gate::Rzz8 { k, qubits: (a, b) } => Gate::Rzz8 {
                k: *k,
                qubits: (f(*a), f(*b)),
            },
            Gate::Ncp8 {
                qubits,
                polarity,
                k,
            } => Gate::Ncp8 {
                qubits: qubits.iter().map(|&q| f(q)).collect(),
                polarity: polarity.clone(),
                k: *k,
            },
        }
    }
}
