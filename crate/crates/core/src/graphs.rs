//! Undirected simple graphs: instances, benchmark generators, edge-list I/O.
//!
//! Edge-list text format: first line `v m`, then `m` lines `i j` (0-based).

use std::collections::BTreeSet;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::rng::stream_rng;
use crate::{Error, Result};

/// A simple undirected graph. Edges are stored as ordered pairs `(i, j)` with
/// `i < j`, deduplicated and sorted, so equal graphs serialize identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    connected: bool,
}

impl GraphInstance {
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= vertices || b >= vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {vertices} vertices"
                )));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let connected = is_connected(vertices, &edges);
        Ok(GraphInstance {
            vertices,
            edges,
            connected,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Edge density m / C(v, 2).
    pub fn density(&self) -> f64 {
        let pairs = self.vertices * (self.vertices - 1) / 2;
        if pairs == 0 {
            0.0
        } else {
            self.edges.len() as f64 / pairs as f64
        }
    }

    /// The complement graph: all non-adjacent pairs become edges.
    pub fn complement(&self) -> GraphInstance {
        let mut edges = Vec::new();
        for i in 0..self.vertices {
            for j in (i + 1)..self.vertices {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        GraphInstance::from_edges(self.vertices, &edges).expect("complement is valid")
    }

    /// Serializes to the `v m` edge-list format.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {}", self.vertices, self.edges.len())?;
        for &(a, b) in &self.edges {
            writeln!(w, "{a} {b}")?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("write to vec");
        String::from_utf8(buf).expect("ascii")
    }

    /// Parses the `v m` edge-list format. Blank lines are ignored.
    pub fn read_edge_list<R: Read>(r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut lines = reader
            .lines()
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))?;
        let mut parts = header.split_whitespace();
        let v: usize = parse_field(parts.next(), "vertex count")?;
        let m: usize = parse_field(parts.next(), "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut parts = line.split_whitespace();
            let a: usize = parse_field(parts.next(), "edge endpoint")?;
            let b: usize = parse_field(parts.next(), "edge endpoint")?;
            edges.push((a, b));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges, file has {}",
                edges.len()
            )));
        }
        GraphInstance::from_edges(v, &edges)
    }

    pub fn read_edge_list_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::read_edge_list(file)
    }
}

fn parse_field(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what}")))
}

fn is_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); vertices];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; vertices];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == vertices
}

/// Benchmark graph families addressable from the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// Two complete graphs of size `clique` joined by a single bridge edge.
    Barbell { clique: usize },
    /// A 2 x `rungs` grid.
    Ladder { rungs: usize },
    /// `cliques` cliques of size `clique_size`, ring-connected by rewiring
    /// one edge per clique to the previous clique.
    Caveman { cliques: usize, clique_size: usize },
    /// Connected Erdős–Rényi instance; edge probability drawn uniformly
    /// from [0.3, 0.95], resampled until connected.
    ErdosRenyi { vertices: usize },
}

impl GraphFamily {
    /// Parses CLI syntax: `barbell:4`, `ladder:4`, `caveman:2x4`, `er:8`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let param = |what: &str| -> Result<usize> {
            params
                .ok_or_else(|| Error::InvalidParams(format!("{name} needs {what}")))?
                .parse()
                .map_err(|_| Error::InvalidParams(format!("{name}: bad {what} {params:?}")))
        };
        match name.to_ascii_lowercase().as_str() {
            "barbell" => Ok(GraphFamily::Barbell { clique: param("clique size")? }),
            "ladder" => Ok(GraphFamily::Ladder { rungs: param("rung count")? }),
            "caveman" => {
                let p = params
                    .ok_or_else(|| Error::InvalidParams("caveman needs CxK".into()))?;
                let (c, k) = p
                    .split_once('x')
                    .ok_or_else(|| Error::InvalidParams("caveman syntax is caveman:CxK".into()))?;
                let cliques = c
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("caveman: bad clique count {c:?}")))?;
                let clique_size = k
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("caveman: bad clique size {k:?}")))?;
                Ok(GraphFamily::Caveman { cliques, clique_size })
            }
            "er" | "erdos-renyi" | "erdosrenyi" => {
                Ok(GraphFamily::ErdosRenyi { vertices: param("vertex count")? })
            }
            other => Err(Error::InvalidParams(format!("unknown graph family {other:?}"))),
        }
    }

    /// Canonical CLI spelling (round-trips through [`parse`](Self::parse)).
    pub fn spec_string(&self) -> String {
        match self {
            GraphFamily::Barbell { clique } => format!("barbell:{clique}"),
            GraphFamily::Ladder { rungs } => format!("ladder:{rungs}"),
            GraphFamily::Caveman { cliques, clique_size } => {
                format!("caveman:{cliques}x{clique_size}")
            }
            GraphFamily::ErdosRenyi { vertices } => format!("er:{vertices}"),
        }
    }

    /// Whether repeated generation with different seeds yields different graphs.
    pub fn is_random(&self) -> bool {
        matches!(self, GraphFamily::ErdosRenyi { .. })
    }

    /// Builds the graph. `seed` only matters for random families.
    pub fn generate(&self, seed: u64) -> Result<GraphInstance> {
        match *self {
            GraphFamily::Barbell { clique } => barbell(clique),
            GraphFamily::Ladder { rungs } => ladder(rungs),
            GraphFamily::Caveman { cliques, clique_size } => caveman(cliques, clique_size),
            GraphFamily::ErdosRenyi { vertices } => erdos_renyi_connected(vertices, seed),
        }
    }
}

/// Two K_p cliques joined by one bridge edge; 2p vertices.
pub fn barbell(clique: usize) -> Result<GraphInstance> {
    if clique < 3 {
        return Err(Error::InvalidParams("barbell needs clique size >= 3".into()));
    }
    let mut edges = Vec::new();
    for offset in [0, clique] {
        for i in 0..clique {
            for j in (i + 1)..clique {
                edges.push((offset + i, offset + j));
            }
        }
    }
    edges.push((clique - 1, clique));
    GraphInstance::from_edges(2 * clique, &edges)
}

/// 2 x `rungs` grid: two paths 0..p-1 and p..2p-1 plus rung edges (i, i+p).
pub fn ladder(rungs: usize) -> Result<GraphInstance> {
    if rungs < 2 {
        return Err(Error::InvalidParams("ladder needs >= 2 rungs".into()));
    }
    let mut edges = Vec::new();
    for i in 0..rungs - 1 {
        edges.push((i, i + 1));
        edges.push((rungs + i, rungs + i + 1));
    }
    for i in 0..rungs {
        edges.push((i, rungs + i));
    }
    GraphInstance::from_edges(2 * rungs, &edges)
}

/// Connected caveman graph: `cliques` cliques of size `clique_size`; in each
/// clique the edge (start, start+1) is rewired to (start, start-1 mod v),
/// ring-connecting consecutive cliques by a single edge.
pub fn caveman(cliques: usize, clique_size: usize) -> Result<GraphInstance> {
    if cliques < 2 || clique_size < 2 {
        return Err(Error::InvalidParams(
            "caveman needs >= 2 cliques of size >= 2".into(),
        ));
    }
    let v = cliques * clique_size;
    let mut edges = BTreeSet::new();
    for c in 0..cliques {
        let start = c * clique_size;
        for i in 0..clique_size {
            for j in (i + 1)..clique_size {
                edges.insert((start + i, start + j));
            }
        }
    }
    for c in 0..cliques {
        let start = c * clique_size;
        edges.remove(&(start, start + 1));
        let prev = (start + v - 1) % v;
        edges.insert((prev.min(start), prev.max(start)));
    }
    let edges: Vec<_> = edges.into_iter().collect();
    GraphInstance::from_edges(v, &edges)
}

/// G(v, p) with p ~ U[0.3, 0.95], resampled (p and edges) until connected.
pub fn erdos_renyi_connected(vertices: usize, seed: u64) -> Result<GraphInstance> {
    if vertices < 2 {
        return Err(Error::InvalidParams("erdos-renyi needs >= 2 vertices".into()));
    }
    let mut rng = stream_rng(seed, 0x6572);
    loop {
        let g = erdos_renyi_once(vertices, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
}

fn erdos_renyi_once(vertices: usize, rng: &mut ChaCha8Rng) -> GraphInstance {
    let p: f64 = rng.random_range(0.3..0.95);
    let mut edges = Vec::new();
    for i in 0..vertices {
        for j in (i + 1)..vertices {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    GraphInstance::from_edges(vertices, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_of_four_has_eight_vertices_ten_edges() {
        let g = ladder(4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 10);
        assert!(g.is_connected());
    }

    #[test]
    fn barbell_of_four_has_thirteen_edges() {
        let g = barbell(4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 13); // 2 * C(4,2) + bridge
        assert!(g.is_connected());
        assert!(g.has_edge(3, 4));
    }

    #[test]
    fn caveman_two_by_four_is_connected_with_eight_vertices() {
        let g = caveman(2, 4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.is_connected());
        // One edge rewired per clique: same total as two K4.
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn erdos_renyi_is_seed_deterministic_and_connected() {
        let a = erdos_renyi_connected(8, 7).unwrap();
        let b = erdos_renyi_connected(8, 7).unwrap();
        let c = erdos_renyi_connected(8, 8).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_ne!(a, c);
    }

    #[test]
    fn er_batch_density_lands_in_plausible_interval() {
        let mean: f64 = (0..50)
            .map(|i| erdos_renyi_connected(8, 1000 + i).unwrap().density())
            .sum::<f64>()
            / 50.0;
        assert!((0.4..=0.85).contains(&mean), "mean density {mean}");
    }

    #[test]
    fn infeasible_generator_params_error() {
        assert!(barbell(2).is_err());
        assert!(ladder(1).is_err());
        assert!(caveman(1, 4).is_err());
        assert!(caveman(2, 1).is_err());
        assert!(erdos_renyi_connected(1, 0).is_err());
    }

    #[test]
    fn self_loops_and_range_violations_are_rejected() {
        assert!(GraphInstance::from_edges(3, &[(0, 0)]).is_err());
        assert!(GraphInstance::from_edges(3, &[(0, 3)]).is_err());
        // Duplicates collapse.
        let g = GraphInstance::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = barbell(3).unwrap();
        let text = g.to_edge_list_string();
        assert!(text.starts_with("6 7\n"));
        let back = GraphInstance::read_edge_list(text.as_bytes()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_header_mismatch_is_a_parse_error() {
        let text = "3 2\n0 1\n";
        assert!(GraphInstance::read_edge_list(text.as_bytes()).is_err());
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let g = GraphInstance::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.complement().edge_count(), 0);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn family_parse_round_trip() {
        for spec in ["barbell:4", "ladder:4", "caveman:2x4", "er:8"] {
            let fam = GraphFamily::parse(spec).unwrap();
            assert_eq!(fam.spec_string(), spec);
            assert!(fam.generate(1).is_ok());
        }
        assert!(GraphFamily::parse("mystery:3").is_err());
        assert!(GraphFamily::parse("caveman:2,4").is_err());
    }
}
