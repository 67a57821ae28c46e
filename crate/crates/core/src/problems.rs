//! The four combinatorial cost Hamiltonians, their classical validators, and
//! an exhaustive oracle.
//!
//! Every problem is expressed as a diagonal operator made of Z and ZZ terms,
//! so its expectation is a probability-weighted classical bitstring cost. The
//! objective to MAXIMIZE is `f(z) = -cost(z)`; under the convention that a
//! measured 1 selects the vertex (Z = -1), the maximizer of `f` is the true
//! combinatorial optimum for all four problems (pinned by the oracle tests).

use rayon::prelude::*;

use crate::graphs::GraphInstance;
use crate::sim::BitstringDistribution;
use crate::{Error, Result};

/// Oracle enumeration cap: 2^24 bitstrings.
pub const ORACLE_MAX_VERTICES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    MaxCut,
    MinVec,
    MaxInd,
    MaxCli,
}

impl ProblemKind {
    pub fn all() -> [ProblemKind; 4] {
        [
            ProblemKind::MaxCut,
            ProblemKind::MinVec,
            ProblemKind::MaxInd,
            ProblemKind::MaxCli,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::MaxCut => "maxcut",
            ProblemKind::MinVec => "minvec",
            ProblemKind::MaxInd => "maxind",
            ProblemKind::MaxCli => "maxcli",
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "maxcut" => Ok(ProblemKind::MaxCut),
            "minvec" | "minver" => Ok(ProblemKind::MinVec),
            "maxind" => Ok(ProblemKind::MaxInd),
            "maxcli" => Ok(ProblemKind::MaxCli),
            other => Err(Error::UnknownProblem(other.to_string())),
        }
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A cost operator `constant + sum_i lin[i] Z_i + sum_(i,j) w_ij Z_i Z_j`.
///
/// `Z_i(z)` is +1 when bit `i` of `z` is 0 and -1 when it is 1, i.e. a
/// measured 1 selects vertex `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalHamiltonian {
    qubits: usize,
    constant: f64,
    linear: Vec<f64>,
    quadratic: Vec<(usize, usize, f64)>,
}

impl DiagonalHamiltonian {
    pub fn new(
        qubits: usize,
        constant: f64,
        linear: Vec<f64>,
        quadratic: Vec<(usize, usize, f64)>,
    ) -> Self {
        debug_assert_eq!(linear.len(), qubits);
        debug_assert!(quadratic.iter().all(|&(i, j, _)| i < qubits && j < qubits && i != j));
        DiagonalHamiltonian {
            qubits,
            constant,
            linear,
            quadratic,
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn linear(&self) -> &[f64] {
        &self.linear
    }

    pub fn quadratic(&self) -> &[(usize, usize, f64)] {
        &self.quadratic
    }

    /// Cost of one bitstring; O(|linear| + |quadratic|).
    pub fn cost(&self, z: u64) -> f64 {
        let zval = |i: usize| -> f64 {
            if z >> i & 1 == 0 {
                1.0
            } else {
                -1.0
            }
        };
        let mut acc = self.constant;
        for (i, w) in self.linear.iter().enumerate() {
            if *w != 0.0 {
                acc += w * zval(i);
            }
        }
        for &(i, j, w) in &self.quadratic {
            acc += w * zval(i) * zval(j);
        }
        acc
    }

    /// The objective to maximize: `f(z) = -cost(z)`.
    pub fn objective_of(&self, z: u64) -> f64 {
        -self.cost(z)
    }
}

/// Builds the cost Hamiltonian of `problem` on `graph`.
pub fn build_hamiltonian(problem: ProblemKind, graph: &GraphInstance) -> Result<DiagonalHamiltonian> {
    let v = graph.vertex_count();
    if v == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    let mut constant = 0.0;
    let mut linear = vec![0.0; v];
    let mut quadratic = Vec::new();
    match problem {
        // H = sum_E 1/2 (Z_i Z_j - 1); -<H> counts cut edges.
        ProblemKind::MaxCut => {
            for &(i, j) in graph.edges() {
                quadratic.push((i, j, 0.5));
                constant -= 0.5;
            }
        }
        // H = 3 sum_E (Z_i Z_j + Z_i + Z_j) - sum_V Z_i; uncovered edges cost
        // 9 apiece, so maximizing -<H> selects a smallest vertex cover.
        ProblemKind::MinVec => {
            for &(i, j) in graph.edges() {
                quadratic.push((i, j, 3.0));
                linear[i] += 3.0;
                linear[j] += 3.0;
            }
            for coef in linear.iter_mut() {
                *coef -= 1.0;
            }
        }
        // H = 3 sum_E (Z_i Z_j - Z_i - Z_j) + sum_V Z_i; selecting both ends
        // of an edge costs 12, so the maximizer is a largest independent set.
        ProblemKind::MaxInd => {
            for &(i, j) in graph.edges() {
                quadratic.push((i, j, 3.0));
                linear[i] -= 3.0;
                linear[j] -= 3.0;
            }
            for coef in linear.iter_mut() {
                *coef += 1.0;
            }
        }
        // Same as MaxInd but penalizing the complement edges: an independent
        // set in the complement is a clique in the graph.
        ProblemKind::MaxCli => {
            for &(i, j) in graph.complement().edges() {
                quadratic.push((i, j, 3.0));
                linear[i] -= 3.0;
                linear[j] -= 3.0;
            }
            for coef in linear.iter_mut() {
                *coef += 1.0;
            }
        }
    }
    Ok(DiagonalHamiltonian::new(v, constant, linear, quadratic))
}

/// Distribution-weighted objective `sum_z p(z) f(z)`.
pub fn objective(
    problem: ProblemKind,
    graph: &GraphInstance,
    dist: &BitstringDistribution,
) -> Result<f64> {
    let h = build_hamiltonian(problem, graph)?;
    if dist.qubits() != h.qubits() {
        return Err(Error::Dimension(format!(
            "distribution over {} qubits, graph has {} vertices",
            dist.qubits(),
            h.qubits()
        )));
    }
    Ok(dist
        .probabilities()
        .iter()
        .enumerate()
        .map(|(z, p)| p * h.objective_of(z as u64))
        .sum())
}

/// Exhaustive argmax of the objective over all `2^v` bitstrings.
///
/// Ties break toward the numerically lowest bitstring, so the result is
/// deterministic regardless of enumeration order.
pub fn brute_force_optimum(
    problem: ProblemKind,
    graph: &GraphInstance,
) -> Result<(u64, f64)> {
    let v = graph.vertex_count();
    if v > ORACLE_MAX_VERTICES {
        return Err(Error::capacity(format!(
            "{v} vertices exceeds oracle limit {ORACLE_MAX_VERTICES}"
        )));
    }
    let h = build_hamiltonian(problem, graph)?;
    let total: u64 = 1 << v;
    let best = (0..total)
        .into_par_iter()
        .map(|z| (z, h.objective_of(z)))
        .reduce(
            || (0u64, f64::NEG_INFINITY),
            |a, b| {
                if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
                    b
                } else {
                    a
                }
            },
        );
    Ok(best)
}

/// Result of the pure graph-theoretic check of one bitstring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckResult {
    /// Whether the selection satisfies the problem's constraint.
    pub valid: bool,
    /// Cut size for MaxCut; selected-set size otherwise.
    pub size: usize,
}

/// Validates a bitstring combinatorially, with no Hamiltonian involved.
/// Bit `i` of `bits` set means vertex `i` is selected.
pub fn combinatorial_check(
    problem: ProblemKind,
    graph: &GraphInstance,
    bits: u64,
) -> CheckResult {
    let selected = |i: usize| bits >> i & 1 == 1;
    let count = (0..graph.vertex_count()).filter(|&i| selected(i)).count();
    match problem {
        ProblemKind::MaxCut => {
            let cut = graph
                .edges()
                .iter()
                .filter(|&&(i, j)| selected(i) != selected(j))
                .count();
            CheckResult { valid: true, size: cut }
        }
        ProblemKind::MinVec => {
            let covered = graph
                .edges()
                .iter()
                .all(|&(i, j)| selected(i) || selected(j));
            CheckResult { valid: covered, size: count }
        }
        ProblemKind::MaxInd => {
            let independent = graph
                .edges()
                .iter()
                .all(|&(i, j)| !(selected(i) && selected(j)));
            CheckResult { valid: independent, size: count }
        }
        ProblemKind::MaxCli => {
            let vs: Vec<usize> = (0..graph.vertex_count()).filter(|&i| selected(i)).collect();
            let clique = vs
                .iter()
                .enumerate()
                .all(|(a, &i)| vs[a + 1..].iter().all(|&j| graph.has_edge(i, j)));
            CheckResult { valid: clique, size: count }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphInstance;

    fn k2() -> GraphInstance {
        GraphInstance::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn triangle() -> GraphInstance {
        GraphInstance::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path3() -> GraphInstance {
        GraphInstance::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn maxcut_k2_objective_per_bitstring() {
        let h = build_hamiltonian(ProblemKind::MaxCut, &k2()).unwrap();
        // Direct cut count over the four bitstrings.
        assert_eq!(h.objective_of(0b00), 0.0);
        assert_eq!(h.objective_of(0b01), 1.0);
        assert_eq!(h.objective_of(0b10), 1.0);
        assert_eq!(h.objective_of(0b11), 0.0);
    }

    #[test]
    fn maxcut_triangle_optimum_is_two() {
        let (_, value) = brute_force_optimum(ProblemKind::MaxCut, &triangle()).unwrap();
        // Brute force over the 8 bitstrings: best cut in a triangle is 2.
        assert_eq!(value, 2.0);
    }

    #[test]
    fn maxcut_k2_tie_breaks_to_lowest_bitstring() {
        let (bits, value) = brute_force_optimum(ProblemKind::MaxCut, &k2()).unwrap();
        assert_eq!(value, 1.0);
        assert_eq!(bits, 0b01);
    }

    #[test]
    fn maxind_k2_selects_exactly_one_vertex() {
        let (bits, _) = brute_force_optimum(ProblemKind::MaxInd, &k2()).unwrap();
        assert_eq!(bits.count_ones(), 1);
        let check = combinatorial_check(ProblemKind::MaxInd, &k2(), bits);
        assert!(check.valid);
        assert_eq!(check.size, 1);
    }

    #[test]
    fn minvec_path3_cover_is_the_middle_vertex() {
        let (bits, _) = brute_force_optimum(ProblemKind::MinVec, &path3()).unwrap();
        assert_eq!(bits, 0b010);
        let check = combinatorial_check(ProblemKind::MinVec, &path3(), bits);
        assert!(check.valid);
        assert_eq!(check.size, 1);
    }

    #[test]
    fn maxcli_complete_graph_selects_everything() {
        let k4 = GraphInstance::from_edges(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let (bits, _) = brute_force_optimum(ProblemKind::MaxCli, &k4).unwrap();
        assert_eq!(bits, 0b1111);
        assert!(combinatorial_check(ProblemKind::MaxCli, &k4, bits).valid);
    }

    #[test]
    fn maxind_on_edgeless_graph_selects_everything() {
        let g = GraphInstance::from_edges(5, &[]).unwrap();
        let (bits, value) = brute_force_optimum(ProblemKind::MaxInd, &g).unwrap();
        assert_eq!(bits, 0b11111);
        assert_eq!(value, 5.0); // 2 per selected vertex minus v
    }

    #[test]
    fn objective_uniform_k2_maxcut_is_half() {
        let dist = uniform_dist(2);
        let val = objective(ProblemKind::MaxCut, &k2(), &dist).unwrap();
        assert!((val - 0.5).abs() < 1e-12);
    }

    #[test]
    fn objective_point_mass_on_optimum_hits_optimal_value() {
        let (bits, opt) = brute_force_optimum(ProblemKind::MaxCut, &triangle()).unwrap();
        let dist = point_mass(3, bits);
        let val = objective(ProblemKind::MaxCut, &triangle(), &dist).unwrap();
        assert!((val - opt).abs() < 1e-12);
    }

    #[test]
    fn objective_edgeless_maxcut_is_zero() {
        let g = GraphInstance::from_edges(3, &[]).unwrap();
        let val = objective(ProblemKind::MaxCut, &g, &uniform_dist(3)).unwrap();
        assert_eq!(val, 0.0);
    }

    #[test]
    fn validator_examples() {
        assert!(!combinatorial_check(ProblemKind::MaxInd, &k2(), 0b11).valid);
        let cover = combinatorial_check(ProblemKind::MinVec, &k2(), 0b01);
        assert!(cover.valid);
        assert_eq!(cover.size, 1);
        let clique = combinatorial_check(ProblemKind::MaxCli, &triangle(), 0b111);
        assert!(clique.valid);
        assert_eq!(clique.size, 3);
    }

    #[test]
    fn maxcli_equals_maxind_on_complement() {
        for seed in 0..20 {
            let g = crate::graphs::erdos_renyi_connected(6, seed).unwrap();
            let (_, cli) = brute_force_optimum(ProblemKind::MaxCli, &g).unwrap();
            let (_, ind) = brute_force_optimum(ProblemKind::MaxInd, &g.complement()).unwrap();
            assert_eq!(cli, ind, "duality broken at seed {seed}");
        }
    }

    #[test]
    fn oracle_capacity_cap() {
        let g = GraphInstance::from_edges(25, &[(0, 1)]).unwrap();
        assert!(matches!(
            brute_force_optimum(ProblemKind::MaxCut, &g),
            Err(Error::Capacity(_))
        ));
    }

    fn uniform_dist(n: usize) -> BitstringDistribution {
        dist_from(vec![1.0 / (1 << n) as f64; 1 << n])
    }

    fn point_mass(n: usize, z: u64) -> BitstringDistribution {
        let mut p = vec![0.0; 1 << n];
        p[z as usize] = 1.0;
        dist_from(p)
    }

    fn dist_from(probabilities: Vec<f64>) -> BitstringDistribution {
        BitstringDistribution::from_probabilities(probabilities).unwrap()
    }
}
