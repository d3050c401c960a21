//! Error injection: coherent ZZ-crosstalk, coherent single-qubit axis
//! errors, and the two-qubit depolarizing channel used as the device-noise
//! proxy.
//!
//! In the experiment JSON an error is one of
//! `{"zz": [3, 5, 0.3]}`, `{"x1q": [7, "X", 0.4]}`, `{"depol2q": 0.02}`;
//! the CLI text form is `zz:3,5,0.3`, `x1q:7,X,0.4`, `depol2q:0.02`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::pauli::{Pauli, PauliString};
use crate::sim::{rx_matrix, rz_matrix, DensityMatrix, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ErrorAxis {
    X,
    Y,
    Z,
}

impl ErrorAxis {
    pub fn pauli(self) -> Pauli {
        match self {
            ErrorAxis::X => Pauli::X,
            ErrorAxis::Y => Pauli::Y,
            ErrorAxis::Z => Pauli::Z,
        }
    }
}

/// A located perturbation of the resource state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ErrorSpec {
    /// `E(eps) = exp(-i eps Z Z)` on a link, folded into that link's Ising
    /// gate as `exp(-i (pi/4 + eps) ZZ)`.
    #[serde(rename = "zz")]
    ZzCrosstalk(usize, usize, f64),
    /// `exp(-i theta P / 2)` on one vertex.
    #[serde(rename = "x1q")]
    SingleQubit(usize, ErrorAxis, f64),
    /// Two-qubit depolarizing channel of probability `p` applied after every
    /// Ising gate (density-matrix simulations only).
    #[serde(rename = "depol2q")]
    Depolarizing2q(f64),
}

impl ErrorSpec {
    pub fn validate(&self, g: &GraphSpec) -> Result<()> {
        match *self {
            ErrorSpec::ZzCrosstalk(a, b, _) => {
                if g.has_link(a, b) {
                    Ok(())
                } else {
                    Err(Error::UnknownLink(a, b))
                }
            }
            ErrorSpec::SingleQubit(v, _, _) => g.vertex(v).map(|_| ()),
            ErrorSpec::Depolarizing2q(p) => {
                if (0.0..=1.0).contains(&p) {
                    Ok(())
                } else {
                    Err(Error::InvalidParam(format!(
                        "depolarizing probability {p} outside [0, 1]"
                    )))
                }
            }
        }
    }

    /// Generator Pauli string of a coherent error (None for channels). For
    /// `exp(-i theta P)` commutation with `P` decides commutation with the
    /// exponential for every theta; a zero-strength error contributes the
    /// identity string.
    pub fn generator_string(&self, g: &GraphSpec) -> Result<Option<PauliString>> {
        let n = g.num_qubits();
        Ok(match *self {
            ErrorSpec::ZzCrosstalk(a, b, eps) => {
                self.validate(g)?;
                if eps == 0.0 {
                    Some(PauliString::identity(n))
                } else {
                    Some(PauliString::from_ops(
                        n,
                        &[(g.qubit(a)?, Pauli::Z), (g.qubit(b)?, Pauli::Z)],
                    ))
                }
            }
            ErrorSpec::SingleQubit(v, axis, theta) => {
                self.validate(g)?;
                if theta == 0.0 {
                    Some(PauliString::identity(n))
                } else {
                    Some(PauliString::from_ops(n, &[(g.qubit(v)?, axis.pauli())]))
                }
            }
            ErrorSpec::Depolarizing2q(_) => None,
        })
    }

    /// Coherent error strength (crosstalk ε or rotation θ); None for the
    /// depolarizing channel.
    pub fn strength(&self) -> Option<f64> {
        match *self {
            ErrorSpec::ZzCrosstalk(_, _, e) => Some(e),
            ErrorSpec::SingleQubit(_, _, t) => Some(t),
            ErrorSpec::Depolarizing2q(_) => None,
        }
    }

    /// Copy with the coherent strength replaced (used by sweeps). Channels
    /// are returned unchanged.
    pub fn with_strength(&self, s: f64) -> Self {
        match *self {
            ErrorSpec::ZzCrosstalk(a, b, _) => ErrorSpec::ZzCrosstalk(a, b, s),
            ErrorSpec::SingleQubit(v, axis, _) => ErrorSpec::SingleQubit(v, axis, s),
            ErrorSpec::Depolarizing2q(p) => ErrorSpec::Depolarizing2q(p),
        }
    }

    pub fn is_depolarizing(&self) -> bool {
        matches!(self, ErrorSpec::Depolarizing2q(_))
    }

    /// Parse the CLI text form.
    pub fn parse_cli(text: &str) -> Result<Self> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad error spec `{text}`")))?;
        let parts: Vec<&str> = rest.split(',').collect();
        match kind {
            "zz" => {
                if parts.len() != 3 {
                    return Err(Error::Parse(format!("zz needs `zz:a,b,eps`, got `{text}`")));
                }
                Ok(ErrorSpec::ZzCrosstalk(
                    parse_num(parts[0])?,
                    parse_num(parts[1])?,
                    parse_f64(parts[2])?,
                ))
            }
            "x1q" => {
                if parts.len() != 3 {
                    return Err(Error::Parse(format!(
                        "x1q needs `x1q:vertex,axis,theta`, got `{text}`"
                    )));
                }
                let axis = match parts[1] {
                    "X" | "x" => ErrorAxis::X,
                    "Y" | "y" => ErrorAxis::Y,
                    "Z" | "z" => ErrorAxis::Z,
                    other => return Err(Error::Parse(format!("bad axis `{other}`"))),
                };
                Ok(ErrorSpec::SingleQubit(
                    parse_num(parts[0])?,
                    axis,
                    parse_f64(parts[2])?,
                ))
            }
            "depol2q" => {
                if parts.len() != 1 {
                    return Err(Error::Parse(format!(
                        "depol2q needs `depol2q:p`, got `{text}`"
                    )));
                }
                Ok(ErrorSpec::Depolarizing2q(parse_f64(parts[0])?))
            }
            other => Err(Error::Parse(format!("unknown error kind `{other}`"))),
        }
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number `{s}`")))
}

/// `E(eps) = exp(-i eps Z Z)` on an existing link.
pub fn apply_crosstalk(
    state: &mut StateVector,
    g: &GraphSpec,
    a: usize,
    b: usize,
    eps: f64,
) -> Result<()> {
    if !g.has_link(a, b) {
        return Err(Error::UnknownLink(a, b));
    }
    state.apply_ising(g.qubit(a)?, g.qubit(b)?, eps)
}

/// `exp(-i theta P / 2)` on a vertex.
pub fn apply_single_qubit_error(
    state: &mut StateVector,
    g: &GraphSpec,
    vertex: usize,
    axis: ErrorAxis,
    theta: f64,
) -> Result<()> {
    let q = g.qubit(vertex)?;
    match axis {
        ErrorAxis::X => state.apply_single(q, &rx_matrix(theta)),
        ErrorAxis::Z => state.apply_single(q, &rz_matrix(theta)),
        ErrorAxis::Y => {
            let h = theta / 2.0;
            let c = num_complex::Complex64::new(h.cos(), 0.0);
            let s = num_complex::Complex64::new(h.sin(), 0.0);
            state.apply_single(q, &[c, -s, s, c])
        }
    }
}

/// Two-qubit depolarizing channel on a vertex pair of a density matrix.
pub fn apply_depolarizing_2q(
    dm: &mut DensityMatrix,
    g: &GraphSpec,
    a: usize,
    b: usize,
    p: f64,
) -> Result<()> {
    dm.depolarize_pair(g.qubit(a)?, g.qubit(b)?, p)
}
