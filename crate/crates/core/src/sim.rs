//! Dense statevector simulation: exact amplitudes, unitaries for small
//! widths, and output probabilities.

use ndarray::Array2;
use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_8};

use crate::circuit::Circuit;
use crate::dist::OutcomeDistribution;
use crate::error::{Error, Result};
use crate::gate::Gate;

/// Hard cap on dense simulation width (2^26 amplitudes = 1 GiB).
pub const STATEVECTOR_QUBIT_CAP: usize = 26;

/// Cap on building a full 2^n × 2^n unitary.
pub const UNITARY_QUBIT_CAP: usize = 12;

/// 2^n complex amplitudes over the computational basis, little-endian:
/// bit `j` of an amplitude index is qubit `j`'s basis value.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0⟩` over `num_qubits` qubits.
    pub fn zero_state(num_qubits: usize) -> Result<StateVector> {
        StateVector::basis_state(num_qubits, 0)
    }

    /// The computational basis state with the given little-endian index.
    pub fn basis_state(num_qubits: usize, index: u64) -> Result<StateVector> {
        if num_qubits > STATEVECTOR_QUBIT_CAP {
            return Err(Error::TooManyQubits {
                num_qubits,
                cap: STATEVECTOR_QUBIT_CAP,
            });
        }
        if index >> num_qubits != 0 {
            return Err(Error::BasisStateOutOfRange {
                basis_state: index,
                num_qubits,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Resets the state to a computational basis state without reallocating.
    pub fn set_basis(&mut self, index: u64) -> Result<()> {
        if index >> self.num_qubits != 0 {
            return Err(Error::BasisStateOutOfRange {
                basis_state: index,
                num_qubits: self.num_qubits,
            });
        }
        self.amps.fill(Complex64::new(0.0, 0.0));
        self.amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Squared norm (1 up to rounding for any state produced here).
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Probability that measuring `qubit` yields `value`.
    pub fn bit_probability(&self, qubit: usize, value: bool) -> f64 {
        let bit = 1usize << qubit;
        let want = if value { bit } else { 0 };
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & bit == want)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Applies one gate in place. The gate must fit the state's width.
    pub fn apply(&mut self, gate: &Gate) {
        debug_assert!(gate.qubits().iter().all(|&q| q < self.num_qubits));
        let dim = self.amps.len();
        match gate {
            Gate::H(q) => {
                let bit = 1usize << q;
                for i in 0..dim {
                    if i & bit == 0 {
                        let j = i | bit;
                        let a = self.amps[i];
                        let b = self.amps[j];
                        self.amps[i] = (a + b) * FRAC_1_SQRT_2;
                        self.amps[j] = (a - b) * FRAC_1_SQRT_2;
                    }
                }
            }
            Gate::X(q) => {
                let bit = 1usize << q;
                for i in 0..dim {
                    if i & bit == 0 {
                        self.amps.swap(i, i | bit);
                    }
                }
            }
            Gate::Z(q) => self.phase_if(1 << q, 1 << q, Complex64::new(-1.0, 0.0)),
            Gate::S(q) => self.phase_if(1 << q, 1 << q, Complex64::new(0.0, 1.0)),
            Gate::Sdg(q) => self.phase_if(1 << q, 1 << q, Complex64::new(0.0, -1.0)),
            Gate::T(q) => self.phase_if(1 << q, 1 << q, omega()),
            Gate::Tdg(q) => self.phase_if(1 << q, 1 << q, omega().conj()),
            Gate::Cnot { control, target } => {
                let c = 1usize << control;
                let t = 1usize << target;
                for i in 0..dim {
                    if i & c != 0 && i & t == 0 {
                        self.amps.swap(i, i | t);
                    }
                }
            }
            Gate::Cz(a, b) => {
                let mask = (1usize << a) | (1usize << b);
                self.phase_if(mask, mask, Complex64::new(-1.0, 0.0));
            }
            Gate::Toffoli { controls, target } => {
                let c = (1usize << controls[0]) | (1usize << controls[1]);
                let t = 1usize << target;
                for i in 0..dim {
                    if i & c == c && i & t == 0 {
                        self.amps.swap(i, i | t);
                    }
                }
            }
            Gate::Ncx {
                controls,
                polarity,
                target,
            } => {
                let (mask, value) = control_masks(controls, polarity);
                let t = 1usize << target;
                for i in 0..dim {
                    if i & mask == value && i & t == 0 {
                        self.amps.swap(i, i | t);
                    }
                }
            }
            Gate::Rz8 { k, qubit } => {
                let bit = 1usize << qubit;
                let plus = step_phase(*k);
                let minus = step_phase((16 - k) % 16);
                for (i, amp) in self.amps.iter_mut().enumerate() {
                    *amp *= if i & bit == 0 { plus } else { minus };
                }
            }
            Gate::Rzz8 { k, qubits: (a, b) } => {
                let abit = 1usize << a;
                let bbit = 1usize << b;
                let plus = step_phase(*k);
                let minus = step_phase((16 - k) % 16);
                for (i, amp) in self.amps.iter_mut().enumerate() {
                    let equal = (i & abit == 0) == (i & bbit == 0);
                    *amp *= if equal { plus } else { minus };
                }
            }
            Gate::Ncp8 {
                qubits,
                polarity,
                k,
            } => {
                let (mask, value) = control_masks(qubits, polarity);
                self.phase_if(mask, value, step_phase(*k));
            }
        }
    }

    /// Multiplies every amplitude whose index matches `value` on `mask` by
    /// `phase`.
    fn phase_if(&mut self, mask: usize, value: usize, phase: Complex64) {
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == value {
                *amp *= phase;
            }
        }
    }
}

/// e^{iπ/4}, the phase of the T gate.
fn omega() -> Complex64 {
    Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2)
}

/// e^{ikπ/8} for a phase step k.
fn step_phase(k: u8) -> Complex64 {
    Complex64::from_polar(1.0, f64::from(k) * FRAC_PI_8)
}

/// (mask, value) such that `i & mask == value` iff every listed qubit of
/// index `i` matches its polarity bit.
fn control_masks(qubits: &[usize], polarity: &[bool]) -> (usize, usize) {
    let mut mask = 0usize;
    let mut value = 0usize;
    for (&q, &p) in qubits.iter().zip(polarity) {
        mask |= 1 << q;
        if p {
            value |= 1 << q;
        }
    }
    (mask, value)
}

/// Applies a whole circuit to a state, returning the evolved state.
pub fn apply_circuit(state: &StateVector, circuit: &Circuit) -> Result<StateVector> {
    circuit.validate()?;
    if state.num_qubits != circuit.num_qubits {
        return Err(Error::DimensionMismatch {
            state_qubits: state.num_qubits,
            circuit_qubits: circuit.num_qubits,
        });
    }
    let mut evolved = state.clone();
    for gate in &circuit.gates {
        evolved.apply(gate);
    }
    Ok(evolved)
}

/// The dense 2^n × 2^n unitary of a circuit, column `j` being the image of
/// basis state `j`. Capped at [`UNITARY_QUBIT_CAP`] qubits.
pub fn unitary_of(circuit: &Circuit) -> Result<Array2<Complex64>> {
    circuit.validate()?;
    let n = circuit.num_qubits;
    if n > UNITARY_QUBIT_CAP {
        return Err(Error::UnitaryTooLarge {
            num_qubits: n,
            cap: UNITARY_QUBIT_CAP,
        });
    }
    let dim = 1usize << n;
    let mut matrix = Array2::zeros((dim, dim));
    let mut state = StateVector::zero_state(n)?;
    for col in 0..dim {
        state.set_basis(col as u64)?;
        for gate in &circuit.gates {
            state.apply(gate);
        }
        for (row, amp) in state.amplitudes().iter().enumerate() {
            matrix[[row, col]] = *amp;
        }
    }
    Ok(matrix)
}

/// Probability that the single designated output qubit of `U|0...0⟩`
/// measures 1.
pub fn acceptance_probability(circuit: &Circuit) -> Result<f64> {
    circuit.validate()?;
    if circuit.outputs.len() != 1 {
        return Err(Error::RequiresSingleOutput {
            count: circuit.outputs.len(),
        });
    }
    let state = apply_circuit(&StateVector::zero_state(circuit.num_qubits)?, circuit)?;
    Ok(state.bit_probability(circuit.outputs[0], true))
}

/// Exact joint distribution of the listed qubits in a pure state. Outcome
/// strings are indexed with bit `i` holding `qubits[i]`'s value.
pub fn output_distribution(state: &StateVector, qubits: &[usize]) -> Result<OutcomeDistribution> {
    let mut seen = vec![false; state.num_qubits];
    for &q in qubits {
        if q >= state.num_qubits {
            return Err(Error::SpecialQubitOutOfRange {
                role: "output",
                qubit: q,
                num_qubits: state.num_qubits,
            });
        }
        if seen[q] {
            return Err(Error::DuplicateSpecialQubit {
                role: "output",
                qubit: q,
            });
        }
        seen[q] = true;
    }
    let mut probs = vec![0.0; 1 << qubits.len()];
    for (i, amp) in state.amps.iter().enumerate() {
        let mut outcome = 0usize;
        for (pos, &q) in qubits.iter().enumerate() {
            if i & (1 << q) != 0 {
                outcome |= 1 << pos;
            }
        }
        probs[outcome] += amp.norm_sqr();
    }
    Ok(OutcomeDistribution {
        output_qubits: qubits.to_vec(),
        probs,
    })
}
