//! Dense statevector representation.

use num_complex::Complex64;
use rand::Rng;

use super::{check_qubit, check_statevector_cap, Basis, DensityMatrix, NORM_TOL};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};
use crate::rng::CellRng;

/// Pure state of `n` qubits as 2^n complex amplitudes.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl std::fmt::Debug for StateVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StateVector({} qubits, norm {})", self.n, self.norm())
    }
}

impl StateVector {
    /// |0...0>.
    pub fn zero_state(n: usize) -> Result<Self> {
        check_statevector_cap(n)?;
        let mut amps = vec![Complex64::default(); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// |+...+>.
    pub fn plus_state(n: usize) -> Result<Self> {
        check_statevector_cap(n)?;
        let dim = 1usize << n;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(StateVector {
            n,
            amps: vec![a; dim],
        })
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if !dim.is_power_of_two() {
            return Err(Error::InvalidParam(format!(
                "amplitude count {dim} is not a power of two"
            )));
        }
        let n = dim.trailing_zeros() as usize;
        check_statevector_cap(n)?;
        let state = StateVector { n, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidParam(format!(
                "amplitudes are not normalized (norm {norm})"
            )));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Bit mask of qubit `q` in a basis index (qubit 0 is the leftmost
    /// tensor factor, i.e. the most significant bit).
    #[inline]
    fn mask(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn renormalize(&mut self) {
        let norm = self.norm();
        if norm > 0.0 {
            let inv = 1.0 / norm;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }

    fn debug_check_norm(&self) {
        debug_assert!(
            (self.norm() - 1.0).abs() < NORM_TOL,
            "norm drift: {}",
            self.norm()
        );
    }

    /// Overwrite one qubit of a product state with the given single-qubit
    /// amplitudes. Only valid while the register is still a product over
    /// that qubit (used to plant the input state before entangling).
    pub fn set_product_qubit(&mut self, q: usize, chi: [Complex64; 2]) {
        let mask = self.mask(q);
        // current marginal must be |+>-like with equal halves; rescale both.
        let scale = (2.0f64).sqrt();
        for i in 0..self.amps.len() {
            let bit = (i & mask != 0) as usize;
            self.amps[i] *= chi[bit] * scale;
        }
        self.debug_check_norm();
    }

    /// Apply a 2x2 unitary `[[u00, u01], [u10, u11]]` (row-major) on `q`.
    pub fn apply_single(&mut self, q: usize, u: &[Complex64; 4]) -> Result<()> {
        check_qubit(q, self.n)?;
        let mask = self.mask(q);
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let j = i | mask;
                let (a, b) = (self.amps[i], self.amps[j]);
                self.amps[i] = u[0] * a + u[1] * b;
                self.amps[j] = u[2] * a + u[3] * b;
            }
        }
        self.debug_check_norm();
        Ok(())
    }

    /// Controlled-Z between two qubits.
    pub fn apply_cz(&mut self, q1: usize, q2: usize) -> Result<()> {
        check_qubit(q1, self.n)?;
        check_qubit(q2, self.n)?;
        if q1 == q2 {
            return Err(Error::InvalidParam("cz needs two distinct qubits".into()));
        }
        let (m1, m2) = (self.mask(q1), self.mask(q2));
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & m1 != 0 && i & m2 != 0 {
                *a = -*a;
            }
        }
        Ok(())
    }

    /// `exp(-i angle Z Z)` on the pair.
    pub fn apply_ising(&mut self, q1: usize, q2: usize, angle: f64) -> Result<()> {
        check_qubit(q1, self.n)?;
        check_qubit(q2, self.n)?;
        if q1 == q2 {
            return Err(Error::InvalidParam("ising needs two distinct qubits".into()));
        }
        let (m1, m2) = (self.mask(q1), self.mask(q2));
        let same = Complex64::from_polar(1.0, -angle);
        let diff = Complex64::from_polar(1.0, angle);
        for (i, a) in self.amps.iter_mut().enumerate() {
            let parity = ((i & m1 != 0) as u8) ^ ((i & m2 != 0) as u8);
            *a *= if parity == 0 { same } else { diff };
        }
        Ok(())
    }

    /// Apply a phase-tracked Pauli string.
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(p.num_qubits(), self.n));
        }
        let action = super::PauliAction::new(p, self.n);
        let mut out = vec![Complex64::default(); self.amps.len()];
        for (i, &a) in self.amps.iter().enumerate() {
            out[i ^ action.flip] = action.coeff(i) * a;
        }
        self.amps = out;
        Ok(())
    }

    /// `<psi| P |psi>` for a Hermitian string (phase ±1).
    pub fn expectation(&self, p: &PauliString) -> Result<f64> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(p.num_qubits(), self.n));
        }
        if !p.is_hermitian() {
            return Err(Error::NonHermitian);
        }
        let mut applied = self.clone();
        applied.apply_pauli(p)?;
        let val = self.inner(&applied)?;
        debug_assert!(val.im.abs() < 1e-9, "expectation not real: {val}");
        Ok(val.re)
    }

    /// Probability of outcome 0 when measuring `q` in `basis`.
    pub fn prob0(&self, q: usize, basis: Basis) -> Result<f64> {
        check_qubit(q, self.n)?;
        let eig = basis.eigenstates();
        let mask = self.mask(q);
        let mut p = 0.0;
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let j = i | mask;
                let c = eig[0][0].conj() * self.amps[i] + eig[0][1].conj() * self.amps[j];
                p += c.norm_sqr();
            }
        }
        Ok(p.clamp(0.0, 1.0))
    }

    /// Project onto the given outcome and renormalize; returns the branch
    /// probability. A zero-probability branch leaves a zero state.
    pub fn project(&mut self, q: usize, basis: Basis, outcome: u8) -> Result<f64> {
        check_qubit(q, self.n)?;
        let eig = basis.eigenstates();
        let b = &eig[outcome as usize];
        let mask = self.mask(q);
        let mut p = 0.0;
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let j = i | mask;
                let c = b[0].conj() * self.amps[i] + b[1].conj() * self.amps[j];
                p += c.norm_sqr();
                self.amps[i] = c * b[0];
                self.amps[j] = c * b[1];
            }
        }
        self.renormalize();
        Ok(p.clamp(0.0, 1.0))
    }

    /// Born-rule sample of one measurement; returns the outcome bit and
    /// collapses the state.
    pub fn measure(&mut self, q: usize, basis: Basis, rng: &mut CellRng) -> Result<u8> {
        let p0 = self.prob0(q, basis)?;
        let outcome = if rng.gen::<f64>() < p0 { 0 } else { 1 };
        self.project(q, basis, outcome)?;
        Ok(outcome)
    }

    /// Reduced density matrix on `keep` (ascending qubit order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        DensityMatrix::from_pure(self)?.partial_trace(keep)
    }

    /// Extract the single-qubit state of `q`, assuming the register is a
    /// product across that qubit (e.g. after all other qubits were
    /// projected). The first nonzero component is made real-positive.
    pub fn qubit_state(&self, q: usize) -> Result<[Complex64; 2]> {
        check_qubit(q, self.n)?;
        let mask = self.mask(q);
        let mut n0 = 0.0f64;
        let mut n1 = 0.0f64;
        let mut cross = Complex64::default();
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let j = i | mask;
                n0 += self.amps[i].norm_sqr();
                n1 += self.amps[j].norm_sqr();
                cross += self.amps[i].conj() * self.amps[j];
            }
        }
        let chi = if n0 > 1e-12 {
            let a0 = n0.sqrt();
            [Complex64::new(a0, 0.0), cross / a0]
        } else {
            [Complex64::new(0.0, 0.0), Complex64::new(n1.sqrt(), 0.0)]
        };
        let purity_err = (chi[0].norm_sqr() + chi[1].norm_sqr() - (n0 + n1)).abs();
        debug_assert!(
            purity_err < 1e-8,
            "qubit {q} is still entangled (defect {purity_err})"
        );
        Ok(chi)
    }

    /// Global-phase-insensitive distance: maximum amplitude difference after
    /// aligning the phases via `<other|self>`.
    pub fn angle_distance(&self, other: &Self) -> Result<f64> {
        let ov = other.inner(self)?;
        let phase = if ov.norm() > 1e-14 {
            ov / ov.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let mut worst = 0.0f64;
        for (a, b) in self.amps.iter().zip(&other.amps) {
            worst = worst.max((a - b * phase).norm());
        }
        Ok(worst)
    }
}

/// Single-qubit state from Bloch angles: cos(t/2)|0> + e^{i phi} sin(t/2)|1>.
pub fn bloch_state(polar: f64, azimuth: f64) -> [Complex64; 2] {
    [
        Complex64::new((polar / 2.0).cos(), 0.0),
        Complex64::from_polar((polar / 2.0).sin(), azimuth),
    ]
}
