//! Shared test oracles: dense complex matrices built independently of the
//! library's symplectic Pauli arithmetic.

use num_complex::Complex64;
use redstring::pauli::{Pauli, PauliString, Phase};

pub type Mat = Vec<Vec<Complex64>>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli_matrix_2x2(p: Pauli) -> Mat {
    match p {
        Pauli::I => vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]],
        Pauli::X => vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]],
        Pauli::Y => vec![vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]],
        Pauli::Z => vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]],
    }
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = (a.len(), a[0].len());
    let (rb, cb) = (b.len(), b[0].len());
    let mut out = vec![vec![c(0.0, 0.0); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![c(0.0, 0.0); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = c(0.0, 0.0);
            for l in 0..k {
                acc += a[i][l] * b[l][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn scale(a: &Mat, s: Complex64) -> Mat {
    a.iter()
        .map(|row| row.iter().map(|&v| v * s).collect())
        .collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| x - y).collect())
        .collect()
}

pub fn frobenius_norm(a: &Mat) -> f64 {
    a.iter()
        .flat_map(|row| row.iter().map(|v| v.norm_sqr()))
        .sum::<f64>()
        .sqrt()
}

pub fn phase_value(ph: Phase) -> Complex64 {
    match ph {
        Phase::PlusOne => c(1.0, 0.0),
        Phase::PlusI => c(0.0, 1.0),
        Phase::MinusOne => c(-1.0, 0.0),
        Phase::MinusI => c(0.0, -1.0),
    }
}

/// Dense matrix of a phase-tracked Pauli string (tensor order: qubit 0
/// leftmost, matching the library convention).
pub fn dense_matrix(p: &PauliString) -> Mat {
    let mut m = pauli_matrix_2x2(p.letter(0));
    for q in 1..p.num_qubits() {
        m = kron(&m, &pauli_matrix_2x2(p.letter(q)));
    }
    scale(&m, phase_value(p.phase()))
}

pub fn commutator_norm(a: &PauliString, b: &PauliString) -> f64 {
    let ma = dense_matrix(a);
    let mb = dense_matrix(b);
    frobenius_norm(&sub(&matmul(&ma, &mb), &matmul(&mb, &ma)))
}
