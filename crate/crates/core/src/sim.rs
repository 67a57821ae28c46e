//! Dense statevector simulation of decoded circuit grids.
//!
//! States live on `2^n` complex amplitudes with qubit 0 as the least
//! significant bit of the basis index. Layers apply left to right; within a
//! layer, gates apply in ascending wire order. Only probabilities matter for
//! the diagonal objectives downstream, so global phase is neither tracked
//! nor compared.

use num_complex::Complex64;

use crate::gates::{CircuitGrid, GateKind, PlacedGate};
use crate::problems::DiagonalHamiltonian;
use crate::{Error, Result};

/// Hard cap on simulated qubits; 2^20 amplitudes is already 16 MiB.
pub const DEFAULT_MAX_QUBITS: usize = 20;

/// Normalization slack tolerated on a simulated state.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// A normalized `n`-qubit state.
#[derive(Clone, Debug)]
pub struct StateVector {
    qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// Measurement probabilities `p(z) = |amp_z|^2` over all basis states.
#[derive(Clone, Debug)]
pub struct BitstringDistribution {
    qubits: usize,
    probabilities: Vec<f64>,
}

impl StateVector {
    /// The basis state |0...0>.
    pub fn zero(qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::ZERO; 1 << qubits];
        amplitudes[0] = Complex64::ONE;
        StateVector { qubits, amplitudes }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn apply(&mut self, gate: &PlacedGate) {
        match gate.kind {
            GateKind::Identity => {}
            GateKind::Cnot => self.apply_cnot(gate.wire, gate.target.expect("cnot target")),
            GateKind::X => self.apply_single(gate.wire, &x_matrix()),
            kind => {
                let m = single_qubit_matrix(kind, gate.angle);
                self.apply_single(gate.wire, &m);
            }
        }
    }

    /// Applies a 2x2 unitary to `wire` in place.
    fn apply_single(&mut self, wire: usize, m: &[[Complex64; 2]; 2]) {
        let bit = 1usize << wire;
        let dim = self.amplitudes.len();
        let mut base = 0;
        while base < dim {
            for low in base..base + bit {
                let i0 = low;
                let i1 = low | bit;
                let a0 = self.amplitudes[i0];
                let a1 = self.amplitudes[i1];
                self.amplitudes[i0] = m[0][0] * a0 + m[0][1] * a1;
                self.amplitudes[i1] = m[1][0] * a0 + m[1][1] * a1;
            }
            base += bit << 1;
        }
    }

    fn apply_cnot(&mut self, control: usize, target: usize) {
        let cbit = 1usize << control;
        let tbit = 1usize << target;
        for i in 0..self.amplitudes.len() {
            if i & cbit != 0 && i & tbit == 0 {
                self.amplitudes.swap(i, i | tbit);
            }
        }
    }
}

impl BitstringDistribution {
    /// Builds a distribution from raw probabilities (length must be a power
    /// of two, entries non-negative and summing to 1 within 1e-10).
    pub fn from_probabilities(probabilities: Vec<f64>) -> Result<Self> {
        let len = probabilities.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::structural(format!(
                "distribution length {len} is not a power of two"
            )));
        }
        if probabilities.iter().any(|p| *p < 0.0) {
            return Err(Error::structural("negative probability"));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::structural(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        Ok(BitstringDistribution {
            qubits: len.trailing_zeros() as usize,
            probabilities,
        })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn x_matrix() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

/// The 2x2 unitary for a single-qubit gate kind. CNOT is not representable
/// here; callers handle it as the two-qubit permutation it is.
pub fn single_qubit_matrix(kind: GateKind, angle: Option<f64>) -> [[Complex64; 2]; 2] {
    let frac = std::f64::consts::FRAC_1_SQRT_2;
    match kind {
        GateKind::Rx => {
            let t = angle.expect("rotation angle") / 2.0;
            [
                [c(t.cos(), 0.0), c(0.0, -t.sin())],
                [c(0.0, -t.sin()), c(t.cos(), 0.0)],
            ]
        }
        GateKind::Ry => {
            let t = angle.expect("rotation angle") / 2.0;
            [
                [c(t.cos(), 0.0), c(-t.sin(), 0.0)],
                [c(t.sin(), 0.0), c(t.cos(), 0.0)],
            ]
        }
        GateKind::Rz => {
            let t = angle.expect("rotation angle") / 2.0;
            [
                [Complex64::from_polar(1.0, -t), c(0.0, 0.0)],
                [c(0.0, 0.0), Complex64::from_polar(1.0, t)],
            ]
        }
        GateKind::H => [[c(frac, 0.0), c(frac, 0.0)], [c(frac, 0.0), c(-frac, 0.0)]],
        GateKind::S => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]],
        GateKind::T => [
            [c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)],
        ],
        GateKind::X => x_matrix(),
        GateKind::Identity => [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
        GateKind::Cnot => panic!("CNOT has no single-qubit matrix"),
    }
}

/// Runs the circuit from |0...0> under the default qubit cap.
pub fn simulate(grid: &CircuitGrid) -> Result<StateVector> {
    simulate_with_limit(grid, DEFAULT_MAX_QUBITS)
}

/// Runs the circuit from |0...0>, rejecting circuits above `max_qubits`.
pub fn simulate_with_limit(grid: &CircuitGrid, max_qubits: usize) -> Result<StateVector> {
    let n = grid.qubits();
    if n > max_qubits {
        return Err(Error::capacity(format!(
            "{n} qubits exceeds simulator limit {max_qubits}"
        )));
    }
    let mut state = StateVector::zero(n);
    for layer in grid.layers() {
        for gate in layer {
            state.apply(gate);
        }
        debug_assert!((state.norm_sqr() - 1.0).abs() <= NORM_TOLERANCE);
    }
    Ok(state)
}

/// Measurement distribution of a state (qubit i is bit i of the outcome).
pub fn measure_distribution(state: &StateVector) -> BitstringDistribution {
    BitstringDistribution {
        qubits: state.qubits(),
        probabilities: state.amplitudes().iter().map(|a| a.norm_sqr()).collect(),
    }
}

/// Expectation of a diagonal Hamiltonian: `sum_z p(z) * cost(z)`.
pub fn expectation(state: &StateVector, h: &DiagonalHamiltonian) -> Result<f64> {
    if h.qubits() != state.qubits() {
        return Err(Error::Dimension(format!(
            "state has {} qubits, Hamiltonian has {}",
            state.qubits(),
            h.qubits()
        )));
    }
    Ok(state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(z, a)| a.norm_sqr() * h.cost(z as u64))
        .sum())
}
