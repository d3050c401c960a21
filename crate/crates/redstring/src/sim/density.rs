//! Dense density-matrix representation.

use num_complex::Complex64;
use rand::Rng;

use super::{check_density_cap, check_qubit, Basis, StateVector, NORM_TOL};
use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::rng::CellRng;

/// Mixed state of `n` qubits as a row-major 2^n x 2^n matrix.
#[derive(Clone)]
pub struct DensityMatrix {
    n: usize,
    dim: usize,
    mat: Vec<Complex64>,
}

impl std::fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DensityMatrix({} qubits, trace {})", self.n, self.trace())
    }
}

impl DensityMatrix {
    pub fn from_pure(state: &StateVector) -> Result<Self> {
        let n = state.num_qubits();
        check_density_cap(n)?;
        let amps = state.amplitudes();
        let dim = amps.len();
        let mut mat = vec![Complex64::default(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                mat[i * dim + j] = amps[i] * amps[j].conj();
            }
        }
        Ok(DensityMatrix { n, dim, mat })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[Complex64] {
        &self.mat
    }

    #[inline]
    fn mask(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.mat[i * self.dim + i].re).sum()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = self.mat[i * self.dim + j] - self.mat[j * self.dim + i].conj();
                if d.norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    fn debug_check_trace(&self) {
        debug_assert!(
            (self.trace() - 1.0).abs() < NORM_TOL,
            "trace drift: {}",
            self.trace()
        );
        debug_assert!(self.is_hermitian(1e-9), "hermiticity lost");
    }

    pub fn purity(&self) -> f64 {
        let mut p = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                p += (self.mat[i * self.dim + j] * self.mat[j * self.dim + i]).re;
            }
        }
        p
    }

    /// rho -> U rho U^dagger for a single-qubit unitary on `q`.
    pub fn apply_single(&mut self, q: usize, u: &[Complex64; 4]) -> Result<()> {
        check_qubit(q, self.n)?;
        let mask = self.mask(q);
        // left multiply by U (rows)
        for col in 0..self.dim {
            for i in 0..self.dim {
                if i & mask == 0 {
                    let j = i | mask;
                    let a = self.mat[i * self.dim + col];
                    let b = self.mat[j * self.dim + col];
                    self.mat[i * self.dim + col] = u[0] * a + u[1] * b;
                    self.mat[j * self.dim + col] = u[2] * a + u[3] * b;
                }
            }
        }
        // right multiply by U^dagger (columns)
        for row in 0..self.dim {
            let base = row * self.dim;
            for i in 0..self.dim {
                if i & mask == 0 {
                    let j = i | mask;
                    let a = self.mat[base + i];
                    let b = self.mat[base + j];
                    self.mat[base + i] = a * u[0].conj() + b * u[1].conj();
                    self.mat[base + j] = a * u[2].conj() + b * u[3].conj();
                }
            }
        }
        self.debug_check_trace();
        Ok(())
    }

    /// `exp(-i angle Z Z)` conjugation on the pair.
    pub fn apply_ising(&mut self, q1: usize, q2: usize, angle: f64) -> Result<()> {
        check_qubit(q1, self.n)?;
        check_qubit(q2, self.n)?;
        if q1 == q2 {
            return Err(Error::InvalidParam("ising needs two distinct qubits".into()));
        }
        let (m1, m2) = (self.mask(q1), self.mask(q2));
        let phase = |i: usize| -> Complex64 {
            let parity = ((i & m1 != 0) as u8) ^ ((i & m2 != 0) as u8);
            Complex64::from_polar(1.0, if parity == 0 { -angle } else { angle })
        };
        for i in 0..self.dim {
            let pi = phase(i);
            for j in 0..self.dim {
                self.mat[i * self.dim + j] *= pi * phase(j).conj();
            }
        }
        Ok(())
    }

    pub fn apply_cz(&mut self, q1: usize, q2: usize) -> Result<()> {
        check_qubit(q1, self.n)?;
        check_qubit(q2, self.n)?;
        let (m1, m2) = (self.mask(q1), self.mask(q2));
        let sign = |i: usize| if i & m1 != 0 && i & m2 != 0 { -1.0 } else { 1.0 };
        for i in 0..self.dim {
            let si = sign(i);
            for j in 0..self.dim {
                self.mat[i * self.dim + j] *= si * sign(j);
            }
        }
        Ok(())
    }

    /// rho -> P rho P^dagger for a Pauli string (global phase drops out).
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(p.num_qubits(), self.n));
        }
        let action = super::PauliAction::new(p, self.n);
        let mut out = vec![Complex64::default(); self.mat.len()];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = action.coeff(i) * action.coeff(j).conj();
                out[(i ^ action.flip) * self.dim + (j ^ action.flip)] =
                    c * self.mat[i * self.dim + j];
            }
        }
        self.mat = out;
        Ok(())
    }

    /// Two-qubit depolarizing channel with probability `p`:
    /// `rho -> (1-p) rho + p (I/4 ⊗ rho_rest)` on the pair.
    pub fn depolarize_pair(&mut self, q1: usize, q2: usize, p: f64) -> Result<()> {
        check_qubit(q1, self.n)?;
        check_qubit(q2, self.n)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParam(format!(
                "depolarizing probability {p} outside [0, 1]"
            )));
        }
        if p == 0.0 {
            return Ok(());
        }
        let (m1, m2) = (self.mask(q1), self.mask(q2));
        let pair_mask = m1 | m2;
        // rho_rest[i, j] over indices with pair bits cleared.
        let mut rest = vec![Complex64::default(); self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i & pair_mask == 0 && j & pair_mask == 0 {
                    let mut acc = Complex64::default();
                    for b in [0usize, m1, m2, m1 | m2] {
                        acc += self.mat[(i | b) * self.dim + (j | b)];
                    }
                    rest[i * self.dim + j] = acc;
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mixed = if (i & pair_mask) == (j & pair_mask) {
                    rest[(i & !pair_mask) * self.dim + (j & !pair_mask)] * 0.25
                } else {
                    Complex64::default()
                };
                let v = &mut self.mat[i * self.dim + j];
                *v = *v * (1.0 - p) + mixed * p;
            }
        }
        self.debug_check_trace();
        Ok(())
    }

    /// Tr(rho P) for a Hermitian string.
    pub fn expectation(&self, p: &PauliString) -> Result<f64> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(p.num_qubits(), self.n));
        }
        if !p.is_hermitian() {
            return Err(Error::NonHermitian);
        }
        // Tr(rho P) = sum_j c(j) rho[j ^ flip, j] where P|j> = c(j)|j ^ flip>.
        let action = super::PauliAction::new(p, self.n);
        let mut total = Complex64::default();
        for j in 0..self.dim {
            total += action.coeff(j) * self.mat[(j ^ action.flip) * self.dim + j];
        }
        debug_assert!(total.im.abs() < 1e-9, "expectation not real: {total}");
        Ok(total.re)
    }

    /// Probability of outcome 0 measuring `q` in `basis`: Tr(Pi rho) with
    /// Pi = |b0><b0| on `q`.
    pub fn prob0(&self, q: usize, basis: Basis) -> Result<f64> {
        check_qubit(q, self.n)?;
        let eig = basis.eigenstates();
        let b = &eig[0];
        let mask = self.mask(q);
        let mut total = 0.0;
        for rest in 0..self.dim {
            if rest & mask != 0 {
                continue;
            }
            let r0 = rest;
            let r1 = rest | mask;
            let block = |a: usize, c: usize| self.mat[a * self.dim + c];
            let val = b[0].conj() * (block(r0, r0) * b[0] + block(r0, r1) * b[1])
                + b[1].conj() * (block(r1, r0) * b[0] + block(r1, r1) * b[1]);
            total += val.re;
        }
        Ok(total.clamp(0.0, 1.0))
    }

    /// Project onto the outcome and renormalize; returns the probability.
    pub fn project(&mut self, q: usize, basis: Basis, outcome: u8) -> Result<f64> {
        check_qubit(q, self.n)?;
        let eig = basis.eigenstates();
        let b = &eig[outcome as usize];
        let mask = self.mask(q);
        // Pi = |b><b| on q: rho -> Pi rho Pi / p.
        // Left: rows collapse onto the 2-dim pattern; right: columns.
        for col in 0..self.dim {
            for i in 0..self.dim {
                if i & mask == 0 {
                    let j = i | mask;
                    let a = self.mat[i * self.dim + col];
                    let c = self.mat[j * self.dim + col];
                    let amp = b[0].conj() * a + b[1].conj() * c;
                    self.mat[i * self.dim + col] = amp * b[0];
                    self.mat[j * self.dim + col] = amp * b[1];
                }
            }
        }
        for row in 0..self.dim {
            let base = row * self.dim;
            for i in 0..self.dim {
                if i & mask == 0 {
                    let j = i | mask;
                    let a = self.mat[base + i];
                    let c = self.mat[base + j];
                    let amp = a * b[0] + c * b[1];
                    self.mat[base + i] = amp * b[0].conj();
                    self.mat[base + j] = amp * b[1].conj();
                }
            }
        }
        let p = self.trace();
        if p > 0.0 {
            let inv = 1.0 / p;
            for v in &mut self.mat {
                *v *= inv;
            }
        }
        Ok(p.clamp(0.0, 1.0))
    }

    pub fn measure(&mut self, q: usize, basis: Basis, rng: &mut CellRng) -> Result<u8> {
        let p0 = self.prob0(q, basis)?;
        let outcome = if rng.gen::<f64>() < p0 { 0 } else { 1 };
        self.project(q, basis, outcome)?;
        Ok(outcome)
    }

    /// Reduced density matrix on `keep` (ascending qubit indices). The kept
    /// qubits preserve their relative order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        if keep.is_empty() {
            return Err(Error::InvalidParam("empty keep set in partial trace".into()));
        }
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &q in &keep {
            check_qubit(q, self.n)?;
        }
        let k = keep.len();
        let traced: Vec<usize> = (0..self.n).filter(|q| !keep.contains(q)).collect();
        let kdim = 1usize << k;
        let tdim = 1usize << traced.len();
        let expand = |bits: usize, qubits: &[usize]| -> usize {
            let mut idx = 0usize;
            for (pos, &q) in qubits.iter().enumerate() {
                if bits >> (qubits.len() - 1 - pos) & 1 == 1 {
                    idx |= self.mask(q);
                }
            }
            idx
        };
        let mut mat = vec![Complex64::default(); kdim * kdim];
        for a in 0..kdim {
            for bq in 0..kdim {
                let ia = expand(a, &keep);
                let ib = expand(bq, &keep);
                let mut acc = Complex64::default();
                for t in 0..tdim {
                    let it = expand(t, &traced);
                    acc += self.mat[(ia | it) * self.dim + (ib | it)];
                }
                mat[a * kdim + bq] = acc;
            }
        }
        Ok(DensityMatrix {
            n: k,
            dim: kdim,
            mat,
        })
    }

    /// 2x2 Bloch components (x, y, z) of a single-qubit density matrix.
    pub fn bloch(&self) -> Result<(f64, f64, f64)> {
        if self.n != 1 {
            return Err(Error::InvalidParam("bloch() needs a single qubit".into()));
        }
        let x = 2.0 * self.mat[1].re;
        let y = -2.0 * self.mat[1].im;
        let z = self.mat[0].re - self.mat[3].re;
        Ok((x, y, z))
    }
}
