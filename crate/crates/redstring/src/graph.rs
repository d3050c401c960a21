//! Graph-state specifications and builders.
//!
//! A [`GraphSpec`] fixes everything a protocol needs: vertex stabilizer kinds
//! (X or Y), measurement bases, link set, and the named input→output paths
//! with their symmetry-string pairs. Builders cover the three families used
//! throughout: the nearest-neighbor chain, the six-vertex diamond, and the
//! hourglass with `rows` parallel rails per column.
//!
//! Vertex ids are 1-based; vertex id `v` occupies tensor-product position
//! `v` counted from the left, i.e. qubit index `v - 1`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, StabilizerSet, SymKind, SymLabel, SymmetryGroup};

/// Stabilizer kind of a vertex: `K = X Z..Z` or `K = Y Z..Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Input,
    Output,
    Middle,
}

/// Measurement basis used by the teleportation protocol at this vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeasureBasis {
    X,
    /// The -Y direction; outcome bit 0 maps to the +1 eigenvalue of -Y.
    MinusY,
    /// Output vertex: not measured during teleportation.
    None,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub kind: VertexKind,
    pub role: Role,
    /// Z-rotation angle (radians) applied after the Ising gates so that the
    /// ideal preparation is the exact +1 eigenstate of every stabilizer.
    pub theta: f64,
    pub measure_basis: MeasureBasis,
}

/// Residual single-qubit frame left on the output after the byproduct
/// correction of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFixup {
    Identity,
    Hadamard,
}

/// A named input→output path together with the stabilizer subsets whose
/// products are its two symmetry strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedPath {
    pub id: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub vertices: Vec<usize>,
    /// Subset generating the x-type string (X on the input vertex).
    pub x_subset: Vec<usize>,
    /// Subset generating the z-type string (Z on the input vertex).
    pub z_subset: Vec<usize>,
    /// Residual output frame of this path's protocol, validated by the
    /// branch-exhaustive teleportation tests.
    pub output_fixup: OutputFixup,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSpec {
    pub name: String,
    pub vertices: Vec<Vertex>,
    /// Unordered links stored as (lo, hi), sorted and deduplicated.
    pub links: Vec<(usize, usize)>,
    pub paths: Vec<NamedPath>,
}

/// A path together with its two symmetry strings.
#[derive(Debug, Clone)]
pub struct PathSymmetry {
    pub path_id: String,
    /// Carries X on the input vertex.
    pub x_type: PauliString,
    /// Carries Z on the input vertex.
    pub z_type: PauliString,
}

impl GraphSpec {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_qubits(&self) -> usize {
        self.vertices.len()
    }

    /// 0-based qubit index of a vertex id.
    pub fn qubit(&self, id: usize) -> Result<usize> {
        if id >= 1 && id <= self.vertices.len() {
            Ok(id - 1)
        } else {
            Err(Error::UnknownVertex(id))
        }
    }

    pub fn vertex(&self, id: usize) -> Result<&Vertex> {
        self.vertices
            .get(id.wrapping_sub(1))
            .filter(|v| v.id == id)
            .ok_or(Error::UnknownVertex(id))
    }

    pub fn has_link(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.links.binary_search(&key).is_ok()
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .links
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, id: usize) -> usize {
        self.neighbors(id).len()
    }

    pub fn input_id(&self) -> usize {
        self.vertices
            .iter()
            .find(|v| v.role == Role::Input)
            .map(|v| v.id)
            .expect("graph has an input vertex")
    }

    pub fn output_id(&self) -> usize {
        self.vertices
            .iter()
            .find(|v| v.role == Role::Output)
            .map(|v| v.id)
            .expect("graph has an output vertex")
    }

    /// Measured vertices in ascending id order (everything but the output).
    pub fn measured_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.measure_basis != MeasureBasis::None)
            .map(|v| v.id)
            .collect()
    }

    /// The stabilizer `K_v`: X or Y at `v` (per its kind), Z on every
    /// neighbor, identity elsewhere, phase +1.
    pub fn stabilizer_for_vertex(&self, id: usize) -> Result<PauliString> {
        let v = self.vertex(id)?;
        let n = self.num_qubits();
        let home = match v.kind {
            VertexKind::X => Pauli::X,
            VertexKind::Y => Pauli::Y,
        };
        let mut ops = vec![(self.qubit(id)?, home)];
        for nb in self.neighbors(id) {
            ops.push((self.qubit(nb)?, Pauli::Z));
        }
        Ok(PauliString::from_ops(n, &ops))
    }

    pub fn stabilizer_set(&self) -> StabilizerSet {
        StabilizerSet {
            generators: self
                .vertices
                .iter()
                .map(|v| self.stabilizer_for_vertex(v.id).expect("valid vertex"))
                .collect(),
            graph_id: self.name.clone(),
        }
    }

    /// Product of stabilizers over a vertex subset, with tracked phase.
    pub fn symmetry_from_subset(&self, subset: &[usize]) -> Result<PauliString> {
        if subset.is_empty() {
            return Err(Error::InvalidParam("empty stabilizer subset".into()));
        }
        let mut acc = PauliString::identity(self.num_qubits());
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        for id in sorted {
            acc = acc.multiply(&self.stabilizer_for_vertex(id)?)?;
        }
        Ok(acc)
    }

    /// Resolve a path id or alias.
    pub fn resolve_path(&self, name: &str) -> Result<&NamedPath> {
        self.paths
            .iter()
            .find(|p| p.id == name || p.aliases.iter().any(|a| a == name))
            .ok_or_else(|| Error::UnknownPath(name.to_string()))
    }

    /// All named paths with their symmetry-string pairs.
    pub fn enumerate_paths(&self) -> Result<Vec<PathSymmetry>> {
        self.paths
            .iter()
            .map(|p| {
                let (x_type, z_type) = self.path_symmetries(&p.id)?;
                Ok(PathSymmetry {
                    path_id: p.id.clone(),
                    x_type,
                    z_type,
                })
            })
            .collect()
    }

    /// The (x-type, z-type) symmetry strings of a named path, constructed as
    /// stabilizer products over the path's generating subsets.
    pub fn path_symmetries(&self, path: &str) -> Result<(PauliString, PauliString)> {
        let p = self.resolve_path(path)?;
        Ok((
            self.symmetry_from_subset(&p.x_subset)?,
            self.symmetry_from_subset(&p.z_subset)?,
        ))
    }

    /// The full labeled symmetry group: one (x, z) pair per named path.
    pub fn symmetry_group(&self) -> Result<SymmetryGroup> {
        let mut generators = Vec::new();
        let mut labels = Vec::new();
        for ps in self.enumerate_paths()? {
            generators.push(ps.x_type);
            labels.push(SymLabel {
                path: ps.path_id.clone(),
                kind: SymKind::XType,
            });
            generators.push(ps.z_type);
            labels.push(SymLabel {
                path: ps.path_id,
                kind: SymKind::ZType,
            });
        }
        Ok(SymmetryGroup { generators, labels })
    }

    /// Remove a vertex (used to strip the input for resource-state work);
    /// remaining ids are compacted downward, links/paths rewritten.
    pub fn without_vertex(&self, id: usize) -> Result<GraphSpec> {
        self.vertex(id)?;
        let remap = |v: usize| if v > id { v - 1 } else { v };
        let vertices = self
            .vertices
            .iter()
            .filter(|v| v.id != id)
            .map(|v| {
                let mut w = v.clone();
                w.id = remap(v.id);
                w
            })
            .collect();
        let links = self
            .links
            .iter()
            .filter(|&&(a, b)| a != id && b != id)
            .map(|&(a, b)| (remap(a), remap(b)))
            .collect();
        let strip = |vs: &[usize]| -> Vec<usize> {
            vs.iter().filter(|&&v| v != id).map(|&v| remap(v)).collect()
        };
        let paths = self
            .paths
            .iter()
            .map(|p| NamedPath {
                id: p.id.clone(),
                aliases: p.aliases.clone(),
                vertices: strip(&p.vertices),
                x_subset: strip(&p.x_subset),
                z_subset: strip(&p.z_subset),
                output_fixup: p.output_fixup,
            })
            .collect();
        Ok(GraphSpec {
            name: format!("{}-minus-{id}", self.name),
            vertices,
            links,
            paths,
        })
    }

    /// Structural validation used when loading user-provided JSON graphs.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.id != i + 1 {
                return Err(Error::Config(format!(
                    "vertex ids must be contiguous from 1; found {} at position {}",
                    v.id, i
                )));
            }
        }
        let inputs = self.vertices.iter().filter(|v| v.role == Role::Input).count();
        let outputs = self
            .vertices
            .iter()
            .filter(|v| v.role == Role::Output)
            .count();
        if inputs != 1 || outputs != 1 {
            return Err(Error::Config(format!(
                "need exactly one input and one output vertex (got {inputs}/{outputs})"
            )));
        }
        if self
            .vertices
            .iter()
            .any(|v| v.role == Role::Output && v.measure_basis != MeasureBasis::None)
        {
            return Err(Error::Config("output vertex must not carry a basis".into()));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.links {
            if a == b {
                return Err(Error::Config(format!("self-link at vertex {a}")));
            }
            if a > b || a < 1 || b > n {
                return Err(Error::Config(format!("bad link ({a}, {b})")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::Config(format!("duplicate link ({a}, {b})")));
            }
        }
        let input = self.input_id();
        let output = self.output_id();
        for p in &self.paths {
            if p.vertices.first() != Some(&input) || p.vertices.last() != Some(&output) {
                return Err(Error::Config(format!(
                    "path `{}` must run from input to output",
                    p.id
                )));
            }
            for w in p.vertices.windows(2) {
                if !self.has_link(w[0], w[1]) {
                    return Err(Error::Config(format!(
                        "path `{}` uses missing link ({}, {})",
                        p.id, w[0], w[1]
                    )));
                }
            }
            for set in [&p.x_subset, &p.z_subset] {
                if set.is_empty() {
                    return Err(Error::Config(format!(
                        "path `{}` is missing its symmetry subsets",
                        p.id
                    )));
                }
                if set.iter().any(|&v| v < 1 || v > n) {
                    return Err(Error::Config(format!(
                        "path `{}` has an out-of-range symmetry subset",
                        p.id
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Z-rotation angle applied after the Ising gates so that vertex `v` ends up
/// with the bare-graph-state frame (X kind) or the extra `exp(-i pi/4 Z)`
/// twist (Y kind). Each incident Ising gate contributes `exp(-i pi/4 Z)` to
/// its endpoints, which this rotation compensates.
fn vertex_theta(kind: VertexKind, degree: usize) -> f64 {
    let base = -FRAC_PI_2 * degree as f64;
    let theta = match kind {
        VertexKind::X => base,
        VertexKind::Y => base + FRAC_PI_2,
    };
    // canonical representative in (-pi, pi]
    let two_pi = std::f64::consts::TAU;
    let mut t = theta % two_pi;
    if t <= -std::f64::consts::PI {
        t += two_pi;
    } else if t > std::f64::consts::PI {
        t -= two_pi;
    }
    t
}

fn make_vertex(
    id: usize,
    label: impl Into<String>,
    kind: VertexKind,
    role: Role,
    degree: usize,
    basis: MeasureBasis,
) -> Vertex {
    Vertex {
        id,
        label: label.into(),
        kind,
        role,
        theta: vertex_theta(kind, degree),
        measure_basis: basis,
    }
}

/// Nearest-neighbor chain of `n` vertices: endpoints X-kind, interior Y-kind,
/// single path through every vertex. Interior vertices are measured along -Y,
/// the input along X.
pub fn build_chain(n: usize) -> Result<GraphSpec> {
    if n < 3 {
        return Err(Error::InvalidParam(format!(
            "chain needs at least 3 vertices, got {n}"
        )));
    }
    let links: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    let degree = |id: usize| if id == 1 || id == n { 1 } else { 2 };
    let vertices = (1..=n)
        .map(|id| {
            let (kind, role, basis) = if id == 1 {
                (VertexKind::X, Role::Input, MeasureBasis::X)
            } else if id == n {
                (VertexKind::X, Role::Output, MeasureBasis::None)
            } else {
                (VertexKind::Y, Role::Middle, MeasureBasis::MinusY)
            };
            make_vertex(id, id.to_string(), kind, role, degree(id), basis)
        })
        .collect();
    let g = GraphSpec {
        name: format!("chain:{n}"),
        vertices,
        links,
        paths: vec![NamedPath {
            id: "1".into(),
            aliases: vec![],
            vertices: (1..=n).collect(),
            x_subset: (1..=n).step_by(2).collect(),
            z_subset: (2..=n).step_by(2).collect(),
            output_fixup: if n % 2 == 0 {
                OutputFixup::Hadamard
            } else {
                OutputFixup::Identity
            },
        }],
    };
    g.validate()?;
    Ok(g)
}

/// The six-vertex diamond: links {12,23,34,45,56,24,35}, vertices 2–5 Y-kind,
/// all measured vertices read along X. Two entwined paths share the input,
/// the 2 and 5 hubs, and the output:
///
/// * path "1" (alias "green"): vertices 1-2-4-5-6, symmetry pair
///   {X1X3X5Z6, Z1X2X4X6};
/// * path "2" (alias "blue"): vertices 1-2-3-5-6, symmetry pair
///   {X1X4X5Z6, Z1X2X3X6}.
pub fn build_diamond() -> GraphSpec {
    let mut links = vec![(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)];
    links.sort_unstable();
    let deg = |id: usize| links.iter().filter(|&&(a, b)| a == id || b == id).count();
    let vertices = (1..=6)
        .map(|id| {
            let (kind, role, basis) = match id {
                1 => (VertexKind::X, Role::Input, MeasureBasis::X),
                6 => (VertexKind::X, Role::Output, MeasureBasis::None),
                _ => (VertexKind::Y, Role::Middle, MeasureBasis::X),
            };
            make_vertex(id, id.to_string(), kind, role, deg(id), basis)
        })
        .collect();
    let g = GraphSpec {
        name: "diamond".into(),
        vertices,
        links,
        paths: vec![
            NamedPath {
                id: "1".into(),
                aliases: vec!["green".into()],
                vertices: vec![1, 2, 4, 5, 6],
                x_subset: vec![1, 3, 5],
                z_subset: vec![2, 4, 6],
                output_fixup: OutputFixup::Hadamard,
            },
            NamedPath {
                id: "2".into(),
                aliases: vec!["blue".into()],
                vertices: vec![1, 2, 3, 5, 6],
                x_subset: vec![1, 4, 5],
                z_subset: vec![2, 3, 6],
                output_fixup: OutputFixup::Hadamard,
            },
        ],
    };
    g.validate().expect("diamond is well-formed");
    g
}

/// Id of hourglass bulk vertex (column `i` in 1..=n, row `k` in 0..rows).
pub fn hourglass_bulk_id(rows: usize, i: usize, k: usize) -> usize {
    2 + (i - 1) * rows + k + 1
}

/// Hourglass graph with `n` columns of `rows` parallel rail vertices between
/// the input-adjacent hub `m` and the output: `I – m – (i,k) – O` with full
/// bipartite connections between adjacent columns. Bulk vertices are Y-kind
/// and measured along -Y; I and m are X-kind and measured along X.
///
/// Named paths are all `rows^n` per-column row choices, id'ed by their row
/// digits (e.g. "00", "01"). The all-0 path is aliased "upper" and the
/// all-(rows-1) path "lower"; for 3 rows every constant path also gets a
/// "rowK" alias.
pub fn build_hourglass(n: usize, rows: usize) -> Result<GraphSpec> {
    if n < 1 {
        return Err(Error::InvalidParam(format!("hourglass needs n >= 1, got {n}")));
    }
    if !(2..=3).contains(&rows) {
        return Err(Error::InvalidParam(format!(
            "hourglass supports rows in {{2, 3}}, got {rows}"
        )));
    }
    let input = 1usize;
    let m = 2usize;
    let output = 2 + n * rows + 1;
    let bulk = |i: usize, k: usize| hourglass_bulk_id(rows, i, k);

    let mut links = vec![(input, m)];
    for k in 0..rows {
        links.push((m, bulk(1, k)));
        links.push((bulk(n, k), output));
    }
    for i in 1..n {
        for k in 0..rows {
            for k2 in 0..rows {
                let (a, b) = (bulk(i, k), bulk(i + 1, k2));
                links.push((a.min(b), a.max(b)));
            }
        }
    }
    links.sort_unstable();
    links.dedup();

    let mut vertices = Vec::with_capacity(output);
    let deg = |id: usize| links.iter().filter(|&&(a, b)| a == id || b == id).count();
    vertices.push(make_vertex(input, "I", VertexKind::X, Role::Input, deg(input), MeasureBasis::X));
    vertices.push(make_vertex(m, "m", VertexKind::X, Role::Middle, deg(m), MeasureBasis::X));
    for i in 1..=n {
        for k in 0..rows {
            let id = bulk(i, k);
            vertices.push(make_vertex(
                id,
                format!("{i},{k}"),
                VertexKind::Y,
                Role::Middle,
                deg(id),
                MeasureBasis::MinusY,
            ));
        }
    }
    vertices.push(make_vertex(output, "O", VertexKind::X, Role::Output, deg(output), MeasureBasis::None));

    let mut paths = Vec::new();
    for choice in 0..rows.pow(n as u32) {
        let mut digits = Vec::with_capacity(n);
        let mut c = choice;
        for _ in 0..n {
            digits.push(c % rows);
            c /= rows;
        }
        let id: String = digits.iter().map(|d| d.to_string()).collect();
        let mut aliases = Vec::new();
        if digits.iter().all(|&d| d == 0) {
            aliases.push("upper".into());
        }
        if digits.iter().all(|&d| d == rows - 1) {
            aliases.push("lower".into());
        }
        if rows == 3 {
            for r in 0..rows {
                if digits.iter().all(|&d| d == r) {
                    aliases.push(format!("row{r}"));
                }
            }
        }
        let mut vs = vec![input, m];
        for (i, &k) in digits.iter().enumerate() {
            vs.push(bulk(i + 1, k));
        }
        vs.push(output);
        // The x-type string is K_I times odd-column stabilizers (plus K_O
        // when n is even); the z-type is K_m times even-column stabilizers
        // (plus K_O when n is odd). Z's on even/odd columns cancel pairwise,
        // leaving the Y-on-rail letter pattern.
        let mut x_subset = vec![input];
        let mut z_subset = vec![m];
        for (i, &k) in digits.iter().enumerate() {
            let col = i + 1;
            if col % 2 == 1 {
                x_subset.push(bulk(col, k));
            } else {
                z_subset.push(bulk(col, k));
            }
        }
        if n % 2 == 0 {
            x_subset.push(output);
        } else {
            z_subset.push(output);
        }
        paths.push(NamedPath {
            id,
            aliases,
            vertices: vs,
            x_subset,
            z_subset,
            output_fixup: if (n + 3) % 2 == 0 {
                OutputFixup::Hadamard
            } else {
                OutputFixup::Identity
            },
        });
    }

    let g = GraphSpec {
        name: if rows == 2 {
            format!("hourglass:n={n}")
        } else {
            format!("hourglass:n={n},rows={rows}")
        },
        vertices,
        links,
        paths,
    };
    g.validate()?;
    Ok(g)
}

/// Parse a CLI graph argument: `chain:6`, `diamond`,
/// `hourglass:n=2,rows=2`, or a path to a JSON graph file.
pub fn parse_graph_arg(arg: &str) -> Result<GraphSpec> {
    if arg == "diamond" {
        return Ok(build_diamond());
    }
    if let Some(rest) = arg.strip_prefix("chain:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad chain size `{rest}`")))?;
        return build_chain(n);
    }
    if let Some(rest) = arg.strip_prefix("hourglass:") {
        let mut n = None;
        let mut rows = 2usize;
        for part in rest.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad hourglass parameter `{part}`")))?;
            match key {
                "n" => {
                    n = Some(value.parse().map_err(|_| {
                        Error::Parse(format!("bad hourglass n `{value}`"))
                    })?)
                }
                "rows" => {
                    rows = value.parse().map_err(|_| {
                        Error::Parse(format!("bad hourglass rows `{value}`"))
                    })?
                }
                _ => return Err(Error::Parse(format!("unknown hourglass key `{key}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("hourglass needs n=<columns>".into()))?;
        return build_hourglass(n, rows);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Parse(format!("graph `{arg}` is not a builtin and not readable: {e}")))?;
    let g: GraphSpec = serde_json::from_str(&text)?;
    g.validate()?;
    Ok(g)
}

/// One operation of a preparation circuit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateOp {
    InitPlus { v: usize },
    /// `exp(-i (pi/4 + epsilon) Z Z)` on the link's qubits.
    Ising { v: usize, w: usize, epsilon: f64 },
    /// `Rz(angle) = exp(-i angle Z / 2)`.
    Rz { v: usize, angle: f64 },
    /// `Rx(angle) = exp(-i angle X / 2)`.
    Rx { v: usize, angle: f64 },
    Hadamard { v: usize },
}

/// Ordered list of preparation operations.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct GateList {
    pub ops: Vec<GateOp>,
}

/// Compile the preparation circuit: `|+>` on every vertex, one Ising gate per
/// link (carrying any ZZ-crosstalk ε for that link), then the Z-rotations
/// that realize each vertex kind. Basis changes for the measurements are not
/// part of preparation; the measurement step applies them.
pub fn compile_preparation(g: &GraphSpec, zz_epsilons: &[(usize, usize, f64)]) -> Result<GateList> {
    for &(a, b, _) in zz_epsilons {
        if !g.has_link(a, b) {
            return Err(Error::UnknownLink(a, b));
        }
    }
    let mut ops = Vec::new();
    for v in &g.vertices {
        ops.push(GateOp::InitPlus { v: v.id });
    }
    for &(a, b) in &g.links {
        let epsilon: f64 = zz_epsilons
            .iter()
            .filter(|&&(x, y, _)| (x.min(y), x.max(y)) == (a, b))
            .map(|&(_, _, e)| e)
            .sum();
        ops.push(GateOp::Ising { v: a, w: b, epsilon });
    }
    for v in &g.vertices {
        if v.theta != 0.0 {
            ops.push(GateOp::Rz {
                v: v.id,
                angle: v.theta,
            });
        }
    }
    Ok(GateList { ops })
}
