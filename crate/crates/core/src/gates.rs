//! Gate sets and the scalar circuit encoding.
//!
//! A circuit on `n` wires and `L` layers is one flat vector of `n * L` reals,
//! flattened column-wise: entry `l * n + i` is the gate on wire `i` in layer
//! `l`. For each entry the integer part indexes an ordered gate set and the
//! decimal part completes the gate: rotation angle for variational gates,
//! target-wire segment for CNOT, discarded for fixed gates. Out-of-range
//! values (negative or past the end of the set) decode to the identity, so
//! decoding is total on anything a Gaussian sampler can produce.

use std::f64::consts::TAU;

use sha2::{Digest, Sha256};

use crate::{Error, Result};

/// The gate kinds a decoded circuit can contain.
///
/// `X` never appears in a gate set directly; it is the decode-time fallback
/// of a CNOT whose target segment lands on its own control wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Rx,
    Ry,
    Rz,
    H,
    S,
    T,
    Cnot,
    X,
    Identity,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::Rx => "RX",
            GateKind::Ry => "RY",
            GateKind::Rz => "RZ",
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::T => "T",
            GateKind::Cnot => "CNOT",
            GateKind::X => "X",
            GateKind::Identity => "I",
        }
    }

    pub fn is_rotation(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz)
    }
}

/// An ordered gate set. The order is load-bearing: `floor(value)` indexes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateSetSpec {
    name: &'static str,
    kinds: Vec<GateKind>,
}

impl GateSetSpec {
    fn new(name: &'static str, kinds: Vec<GateKind>) -> Self {
        debug_assert!(kinds.len() >= 2);
        debug_assert_eq!(
            kinds.iter().filter(|k| **k == GateKind::Identity).count(),
            1,
            "gate sets carry the identity exactly once"
        );
        debug_assert!(!kinds.contains(&GateKind::X));
        GateSetSpec { name, kinds }
    }

    /// Universal set {CNOT, H, S, T, I}.
    pub fn cliffordt() -> Self {
        Self::new(
            "cliffordt",
            vec![
                GateKind::Cnot,
                GateKind::H,
                GateKind::S,
                GateKind::T,
                GateKind::Identity,
            ],
        )
    }

    /// Variational set {RX, RY, RZ, CNOT, I}.
    pub fn rotcnot() -> Self {
        Self::new(
            "rotcnot",
            vec![
                GateKind::Rx,
                GateKind::Ry,
                GateKind::Rz,
                GateKind::Cnot,
                GateKind::Identity,
            ],
        )
    }

    /// Reduced set {RX, H, CNOT, I}.
    pub fn tinyh() -> Self {
        Self::new(
            "tinyh",
            vec![GateKind::Rx, GateKind::H, GateKind::Cnot, GateKind::Identity],
        )
    }

    /// Minimal variational set {RX, CNOT, I}.
    pub fn tiny() -> Self {
        Self::new("tiny", vec![GateKind::Rx, GateKind::Cnot, GateKind::Identity])
    }

    /// All built-in sets, in the canonical documentation order.
    pub fn all() -> Vec<Self> {
        vec![
            Self::cliffordt(),
            Self::rotcnot(),
            Self::tinyh(),
            Self::tiny(),
        ]
    }

    /// Looks a set up by its CLI name.
    pub fn by_name(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "cliffordt" => Ok(Self::cliffordt()),
            "rotcnot" => Ok(Self::rotcnot()),
            "tinyh" => Ok(Self::tinyh()),
            "tiny" => Ok(Self::tiny()),
            other => Err(Error::UnknownGateSet(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn kinds(&self) -> &[GateKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Count of distinct non-identity kinds a decode can produce. `X` joins
    /// the pool whenever CNOT is in the set.
    pub fn decodable_non_identity_kinds(&self) -> usize {
        let base = self.len() - 1;
        if self.kinds.contains(&GateKind::Cnot) {
            base + 1
        } else {
            base
        }
    }
}

/// Content hash of the built-in gate-set table, embedded in output files so
/// an archive of results is self-describing. Reordering a set changes the
/// meaning of every genome, and this hash is what catches it.
pub fn gate_set_table_hash() -> String {
    let mut canonical = String::new();
    for gs in GateSetSpec::all() {
        canonical.push_str(gs.name());
        canonical.push(':');
        for (i, k) in gs.kinds().iter().enumerate() {
            if i > 0 {
                canonical.push(',');
            }
            canonical.push_str(k.name());
        }
        canonical.push(';');
    }
    let digest = Sha256::digest(canonical.as_bytes());
    let mut hex = String::with_capacity(12);
    for byte in digest.iter().take(6) {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

/// Flat real-valued circuit encoding: `values[l * n + i]` is wire `i`, layer `l`.
#[derive(Clone, Debug, PartialEq)]
pub struct Genome {
    values: Vec<f64>,
    qubits: usize,
    layers: usize,
}

impl Genome {
    pub fn new(values: Vec<f64>, qubits: usize, layers: usize) -> Result<Self> {
        if qubits == 0 || layers == 0 {
            return Err(Error::structural("genome needs qubits >= 1 and layers >= 1"));
        }
        if values.len() != qubits * layers {
            return Err(Error::structural(format!(
                "genome length {} != qubits {} * layers {}",
                values.len(),
                qubits,
                layers
            )));
        }
        Ok(Genome {
            values,
            qubits,
            layers,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn layers(&self) -> usize {
        self.layers
    }
}

/// One decoded gate at a fixed grid position.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlacedGate {
    pub kind: GateKind,
    pub wire: usize,
    /// CNOT target wire; present iff `kind == Cnot`.
    pub target: Option<usize>,
    /// Rotation angle in [0, 2π); present iff `kind` is a rotation.
    pub angle: Option<f64>,
}

impl PlacedGate {
    fn fixed(kind: GateKind, wire: usize) -> Self {
        PlacedGate {
            kind,
            wire,
            target: None,
            angle: None,
        }
    }
}

/// A decoded circuit: `layers x qubits` grid of placed gates.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitGrid {
    qubits: usize,
    /// `gates[l][i]` sits on wire `i`; layers apply left to right.
    gates: Vec<Vec<PlacedGate>>,
}

impl CircuitGrid {
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn layer_count(&self) -> usize {
        self.gates.len()
    }

    pub fn layers(&self) -> &[Vec<PlacedGate>] {
        &self.gates
    }
}

/// Decodes one scalar into the gate for `wire`.
///
/// `floor(value)` picks the kind from the ordered set; anything negative,
/// non-finite or past the end of the set clamps to identity. The fractional
/// remainder selects the CNOT target segment (equal widths `1/n`, last
/// segment closed, own-wire target degrades to an uncontrolled X) or the
/// rotation angle (remapped to `[0, 2π)`), and is discarded for fixed gates.
pub fn decode_gate(value: f64, wire: usize, qubits: usize, gs: &GateSetSpec) -> PlacedGate {
    debug_assert!(wire < qubits);
    if !value.is_finite() || value < 0.0 {
        return PlacedGate::fixed(GateKind::Identity, wire);
    }
    let index = value.floor();
    if index >= gs.len() as f64 {
        return PlacedGate::fixed(GateKind::Identity, wire);
    }
    let kind = gs.kinds()[index as usize];
    let frac = value - index;
    match kind {
        GateKind::Cnot => {
            let segment = ((frac * qubits as f64).floor() as usize).min(qubits - 1);
            if segment == wire {
                PlacedGate::fixed(GateKind::X, wire)
            } else {
                PlacedGate {
                    kind: GateKind::Cnot,
                    wire,
                    target: Some(segment),
                    angle: None,
                }
            }
        }
        GateKind::Rx | GateKind::Ry | GateKind::Rz => PlacedGate {
            kind,
            wire,
            target: None,
            angle: Some(frac * TAU),
        },
        _ => PlacedGate::fixed(kind, wire),
    }
}

/// Decodes a whole genome into a circuit grid (column-wise layout).
pub fn decode_genome(genome: &Genome, gs: &GateSetSpec) -> CircuitGrid {
    let n = genome.qubits();
    let gates = (0..genome.layers())
        .map(|l| {
            (0..n)
                .map(|i| decode_gate(genome.values()[l * n + i], i, n, gs))
                .collect()
        })
        .collect();
    CircuitGrid { qubits: n, gates }
}
