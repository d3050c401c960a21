//! Exact dense quantum-state simulation.
//!
//! Qubit `q` (0-based, equal to vertex id minus one) occupies tensor-product
//! position `q` from the left: basis index bit `1 << (n-1-q)`. Statevectors
//! are capped at 16 qubits and density matrices at 10; constructors refuse
//! larger systems.

mod density;
mod statevector;

pub use density::DensityMatrix;
pub use statevector::{bloch_state, StateVector};

use num_complex::Complex64;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{GateList, GateOp, GraphSpec, MeasureBasis};

pub const MAX_STATEVECTOR_QUBITS: usize = 16;
pub const MAX_DENSITY_QUBITS: usize = 10;

pub(crate) const NORM_TOL: f64 = 1e-10;

/// Single-qubit measurement basis. Outcome bit 0 always maps to the +1
/// eigenvalue of the measured operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Basis {
    X,
    /// The -Y operator: bit 0 projects onto (|0> - i|1>)/sqrt(2).
    MinusY,
    Z,
    /// Operator `r·sigma` for the Bloch direction (polar, azimuth); bit 0
    /// projects onto the +r state cos(t/2)|0> + e^{i phi} sin(t/2)|1>.
    Axis { polar: f64, azimuth: f64 },
}

impl Basis {
    /// Column-major pair of eigenstates: `[ |b0>, |b1> ]`, each as
    /// `[amp0, amp1]`.
    pub(crate) fn eigenstates(self) -> [[Complex64; 2]; 2] {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let r = |x: f64| Complex64::new(x, 0.0);
        match self {
            Basis::X => [[r(inv), r(inv)], [r(inv), r(-inv)]],
            Basis::MinusY => [
                [r(inv), Complex64::new(0.0, -inv)],
                [r(inv), Complex64::new(0.0, inv)],
            ],
            Basis::Z => [[r(1.0), r(0.0)], [r(0.0), r(1.0)]],
            Basis::Axis { polar, azimuth } => {
                let (c, s) = ((polar / 2.0).cos(), (polar / 2.0).sin());
                let e = Complex64::from_polar(1.0, azimuth);
                [[r(c), e * s], [r(s), -e * c]]
            }
        }
    }
}

impl From<MeasureBasis> for Basis {
    fn from(b: MeasureBasis) -> Self {
        match b {
            MeasureBasis::X => Basis::X,
            MeasureBasis::MinusY => Basis::MinusY,
            MeasureBasis::None => panic!("output vertex has no measurement basis"),
        }
    }
}

/// Ordered list of (qubit, basis) single-qubit measurements.
pub type MeasurementPlan = Vec<(usize, Basis)>;

/// The measurement plan of a graph protocol: every non-output vertex in
/// ascending id order, in its specified basis.
pub fn protocol_plan(g: &GraphSpec) -> MeasurementPlan {
    g.vertices
        .iter()
        .filter(|v| v.measure_basis != MeasureBasis::None)
        .map(|v| (v.id - 1, Basis::from(v.measure_basis)))
        .collect()
}

/// Outcome bits of one measurement branch, keyed by qubit index, together
/// with the branch probability.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub outcomes: BTreeMap<usize, u8>,
    pub probability: f64,
}

impl MeasurementRecord {
    pub fn bit(&self, qubit: usize) -> u8 {
        self.outcomes[&qubit]
    }

    /// Sum of outcome bits over the given qubits, mod 2.
    pub fn parity(&self, qubits: &[usize]) -> u8 {
        qubits.iter().map(|q| self.outcomes[q]).sum::<u8>() % 2
    }
}

/// One fully-measured branch: record plus the post-measurement state.
#[derive(Debug, Clone)]
pub struct Branch<S> {
    pub record: MeasurementRecord,
    pub state: S,
}

pub(crate) fn check_statevector_cap(n: usize) -> Result<()> {
    if n > MAX_STATEVECTOR_QUBITS {
        return Err(Error::SizeCap {
            requested: n,
            cap: MAX_STATEVECTOR_QUBITS,
            representation: "statevector",
        });
    }
    Ok(())
}

pub(crate) fn check_density_cap(n: usize) -> Result<()> {
    if n > MAX_DENSITY_QUBITS {
        return Err(Error::SizeCap {
            requested: n,
            cap: MAX_DENSITY_QUBITS,
            representation: "density matrix",
        });
    }
    Ok(())
}

pub(crate) fn check_qubit(q: usize, n: usize) -> Result<()> {
    if q >= n {
        return Err(Error::QubitOutOfRange {
            index: q,
            num_qubits: n,
        });
    }
    Ok(())
}

/// How a Pauli string acts on basis indices of this module's bit order:
/// `P |i> = phase * (-1)^{popcount(i & sign_mask)} |i ^ flip>`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PauliAction {
    pub flip: usize,
    pub sign_mask: usize,
    pub phase: Complex64,
}

impl PauliAction {
    pub fn new(p: &crate::pauli::PauliString, n: usize) -> Self {
        use crate::pauli::Pauli;
        let mask = |q: usize| 1usize << (n - 1 - q);
        let mut flip = 0usize;
        let mut sign_mask = 0usize;
        let mut i_exp = p.phase().exponent();
        for q in 0..n {
            match p.letter(q) {
                Pauli::I => {}
                Pauli::X => flip |= mask(q),
                Pauli::Z => sign_mask |= mask(q),
                Pauli::Y => {
                    flip |= mask(q);
                    sign_mask |= mask(q);
                    i_exp = (i_exp + 1) % 4;
                }
            }
        }
        let phase = match i_exp {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        PauliAction {
            flip,
            sign_mask,
            phase,
        }
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> Complex64 {
        if (i & self.sign_mask).count_ones() % 2 == 0 {
            self.phase
        } else {
            -self.phase
        }
    }
}

/// 2x2 unitary of `Rz(angle) = exp(-i angle Z / 2)`.
pub(crate) fn rz_matrix(angle: f64) -> [Complex64; 4] {
    let h = angle / 2.0;
    [
        Complex64::from_polar(1.0, -h),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::from_polar(1.0, h),
    ]
}

/// 2x2 unitary of `Rx(angle) = exp(-i angle X / 2)`.
pub(crate) fn rx_matrix(angle: f64) -> [Complex64; 4] {
    let h = angle / 2.0;
    let c = Complex64::new(h.cos(), 0.0);
    let s = Complex64::new(0.0, -h.sin());
    [c, s, s, c]
}

pub(crate) fn hadamard_matrix() -> [Complex64; 4] {
    let inv = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [inv, inv, inv, -inv]
}

/// Apply one preparation-circuit operation to a statevector. `InitPlus` is
/// only meaningful when building a fresh register and is rejected here.
pub fn apply_gate(state: &mut StateVector, op: &GateOp) -> Result<()> {
    match *op {
        GateOp::InitPlus { .. } => Err(Error::InvalidParam(
            "init_plus only appears at the head of a preparation circuit".into(),
        )),
        GateOp::Ising { v, w, epsilon } => {
            state.apply_ising(v - 1, w - 1, std::f64::consts::FRAC_PI_4 + epsilon)
        }
        GateOp::Rz { v, angle } => state.apply_single(v - 1, &rz_matrix(angle)),
        GateOp::Rx { v, angle } => state.apply_single(v - 1, &rx_matrix(angle)),
        GateOp::Hadamard { v } => state.apply_single(v - 1, &hadamard_matrix()),
    }
}

/// Run a full preparation circuit. Every vertex must be initialized by an
/// `InitPlus` (the optional `input` override sets one qubit to an arbitrary
/// single-qubit state instead).
pub fn run_gate_list(
    num_qubits: usize,
    gates: &GateList,
    input: Option<(usize, [Complex64; 2])>,
) -> Result<StateVector> {
    let mut inited = vec![false; num_qubits];
    for op in &gates.ops {
        if let GateOp::InitPlus { v } = *op {
            check_qubit(v - 1, num_qubits)?;
            inited[v - 1] = true;
        }
    }
    if !inited.iter().all(|&b| b) {
        return Err(Error::InvalidParam(
            "preparation circuit must init every qubit".into(),
        ));
    }
    let mut state = StateVector::plus_state(num_qubits)?;
    if let Some((q, amps)) = input {
        check_qubit(q, num_qubits)?;
        state.set_product_qubit(q, amps);
    }
    for op in &gates.ops {
        if !matches!(op, GateOp::InitPlus { .. }) {
            apply_gate(&mut state, op)?;
        }
    }
    Ok(state)
}

/// Enumerate all outcome branches of a measurement plan with exact
/// probabilities and post-measurement states. Probabilities sum to one;
/// zero-probability branches are kept with a zero state so that the branch
/// count is always 2^len(plan).
pub fn enumerate_branches(state: &StateVector, plan: &MeasurementPlan) -> Result<Vec<Branch<StateVector>>> {
    let mut branches = Vec::with_capacity(1 << plan.len());
    let record = MeasurementRecord {
        outcomes: BTreeMap::new(),
        probability: 1.0,
    };
    descend(state.clone(), plan, 0, record, &mut branches)?;
    Ok(branches)
}

fn descend(
    state: StateVector,
    plan: &MeasurementPlan,
    depth: usize,
    record: MeasurementRecord,
    out: &mut Vec<Branch<StateVector>>,
) -> Result<()> {
    if depth == plan.len() {
        out.push(Branch { record, state });
        return Ok(());
    }
    let (q, basis) = plan[depth];
    for outcome in [0u8, 1u8] {
        let mut next = state.clone();
        let p = next.project(q, basis, outcome)?;
        let mut rec = record.clone();
        rec.outcomes.insert(q, outcome);
        rec.probability *= p;
        descend(next, plan, depth + 1, rec, out)?;
    }
    Ok(())
}

/// Density-matrix analogue of [`enumerate_branches`].
pub fn enumerate_branches_density(
    state: &DensityMatrix,
    plan: &MeasurementPlan,
) -> Result<Vec<Branch<DensityMatrix>>> {
    fn go(
        state: DensityMatrix,
        plan: &MeasurementPlan,
        depth: usize,
        record: MeasurementRecord,
        out: &mut Vec<Branch<DensityMatrix>>,
    ) -> Result<()> {
        if depth == plan.len() {
            out.push(Branch { record, state });
            return Ok(());
        }
        let (q, basis) = plan[depth];
        for outcome in [0u8, 1u8] {
            let mut next = state.clone();
            let p = next.project(q, basis, outcome)?;
            let mut rec = record.clone();
            rec.outcomes.insert(q, outcome);
            rec.probability *= p;
            go(next, plan, depth + 1, rec, out)?;
        }
        Ok(())
    }
    let mut branches = Vec::with_capacity(1 << plan.len());
    go(
        state.clone(),
        plan,
        0,
        MeasurementRecord {
            outcomes: BTreeMap::new(),
            probability: 1.0,
        },
        &mut branches,
    )?;
    Ok(branches)
}
