//! Phase-tracked Pauli strings and the string-symmetry algebra.
//!
//! A [`PauliString`] is a tensor product of I/X/Y/Z letters over `num_qubits`
//! qubits together with a global phase in {+1, +i, -1, -i}. Letters are stored
//! as symplectic bit pairs (one X bit and one Z bit per qubit) and the phase
//! as a mod-4 counter, so products are exact and O(1) in the word width.
//!
//! Strings serialize to text as a `+`/`-`/`+i`/`-i` prefix followed by the
//! letter sequence, e.g. `+XIXXZI`, with qubit 0 leftmost.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Global phase of a Pauli string: i^exponent with exponent mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    pub fn exponent(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    pub fn from_exponent(k: u8) -> Self {
        match k % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    /// True for ±1 (the string is then Hermitian).
    pub fn is_real(self) -> bool {
        matches!(self, Phase::PlusOne | Phase::MinusOne)
    }

    /// The ±1 sign; None for ±i.
    pub fn sign(self) -> Option<f64> {
        match self {
            Phase::PlusOne => Some(1.0),
            Phase::MinusOne => Some(-1.0),
            _ => None,
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Phase::PlusOne => "+",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-",
            Phase::MinusI => "-i",
        }
    }
}

/// Phase-tracked Pauli string over up to 64 qubits.
///
/// Internally the operator is `i^k · prod_q W_q` where `W_q` are the letters;
/// multiplication tracks `k` exactly through the single-site relations
/// X·Y = iZ, Y·Z = iX, Z·X = iY and their anti-cyclic counterparts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    num_qubits: usize,
    x: u64,
    z: u64,
    /// Exponent of i, mod 4.
    k: u8,
}

impl PauliString {
    pub const MAX_QUBITS: usize = 64;

    pub fn identity(num_qubits: usize) -> Self {
        assert!(num_qubits <= Self::MAX_QUBITS);
        PauliString {
            num_qubits,
            x: 0,
            z: 0,
            k: 0,
        }
    }

    pub fn from_letters(letters: &[Pauli]) -> Self {
        let mut s = Self::identity(letters.len());
        for (q, &p) in letters.iter().enumerate() {
            s.set_letter(q, p);
        }
        s
    }

    /// Sparse constructor: identity except the given (qubit, letter) entries.
    pub fn from_ops(num_qubits: usize, ops: &[(usize, Pauli)]) -> Self {
        let mut s = Self::identity(num_qubits);
        for &(q, p) in ops {
            assert!(q < num_qubits, "qubit {q} out of range");
            s.set_letter(q, p);
        }
        s
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn phase(&self) -> Phase {
        Phase::from_exponent(self.k)
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.k = phase.exponent();
        self
    }

    /// Same letters, phase reset to +1.
    pub fn normalized(&self) -> Self {
        self.clone().with_phase(Phase::PlusOne)
    }

    pub fn letter(&self, q: usize) -> Pauli {
        assert!(q < self.num_qubits);
        Pauli::from_bits(self.x >> q & 1 == 1, self.z >> q & 1 == 1)
    }

    fn set_letter(&mut self, q: usize, p: Pauli) {
        let (xb, zb) = p.bits();
        self.x = self.x & !(1 << q) | (xb as u64) << q;
        self.z = self.z & !(1 << q) | (zb as u64) << q;
    }

    pub fn letters(&self) -> Vec<Pauli> {
        (0..self.num_qubits).map(|q| self.letter(q)).collect()
    }

    /// Qubits carrying a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        let occ = self.x | self.z;
        (0..self.num_qubits).filter(|&q| occ >> q & 1 == 1).collect()
    }

    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Hermitian iff the phase is ±1.
    pub fn is_hermitian(&self) -> bool {
        self.phase().is_real()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch(self.num_qubits, other.num_qubits));
        }
        Ok(())
    }

    /// Exact product with accumulated phase.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        // Letters as operators: prod W = i^{|x&z|} X^x Z^z, so the product
        // phase picks up (-1)^{|z_a & x_b|} from commuting Z^{z_a} past X^{x_b}.
        let xc = self.x ^ other.x;
        let zc = self.z ^ other.z;
        let ya = (self.x & self.z).count_ones();
        let yb = (other.x & other.z).count_ones();
        let yc = (xc & zc).count_ones();
        let swaps = (self.z & other.x).count_ones();
        let k = (self.k as u32 + other.k as u32 + ya + yb + 2 * swaps + 4u32.wrapping_sub(yc) % 4)
            % 4;
        Ok(PauliString {
            num_qubits: self.num_qubits,
            x: xc,
            z: zc,
            k: k as u8,
        })
    }

    /// True iff the strings commute: the number of sites with differing
    /// non-identity letters is even.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        let anti = (self.x & other.z).count_ones() + (self.z & other.x).count_ones();
        Ok(anti % 2 == 0)
    }

    /// Restrict to a qubit subset: letters kept on `keep`, identity elsewhere.
    /// The phase is kept as-is.
    pub fn restricted(&self, keep: &[usize]) -> Self {
        let mut mask = 0u64;
        for &q in keep {
            mask |= 1 << q;
        }
        PauliString {
            num_qubits: self.num_qubits,
            x: self.x & mask,
            z: self.z & mask,
            k: self.k,
        }
    }

    /// Drop the given qubits entirely, reindexing the rest in order.
    pub fn without_qubits(&self, drop: &[usize]) -> Self {
        let letters: Vec<Pauli> = (0..self.num_qubits)
            .filter(|q| !drop.contains(q))
            .map(|q| self.letter(q))
            .collect();
        let mut s = Self::from_letters(&letters);
        s.k = self.k;
        s
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase().prefix())?;
        for q in 0..self.num_qubits {
            write!(f, "{}", self.letter(q).symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0u8, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2u8, r)
        } else {
            (0u8, s)
        };
        let (k, body) = rest;
        if body.is_empty() || body.len() > Self::MAX_QUBITS {
            return Err(Error::Parse(format!("bad Pauli string `{s}`")));
        }
        let mut letters = Vec::with_capacity(body.len());
        for c in body.chars() {
            letters.push(match c {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                _ => return Err(Error::Parse(format!("bad Pauli letter `{c}` in `{s}`"))),
            });
        }
        let mut p = Self::from_letters(&letters);
        p.k = k;
        Ok(p)
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// One vertex stabilizer per vertex of the graph that produced it.
#[derive(Debug, Clone)]
pub struct StabilizerSet {
    pub generators: Vec<PauliString>,
    pub graph_id: String,
}

impl StabilizerSet {
    /// Exhaustively check that all pairs commute.
    pub fn all_commute(&self) -> bool {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if !a.commutes(b).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }
}

/// Which of the two roles a symmetry string plays for its path: the
/// `X`-type string carries X at the input, the `Z`-type carries Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymKind {
    XType,
    ZType,
}

/// Path/kind label attached to a symmetry generator: the `(p, q)` form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymLabel {
    pub path: String,
    pub kind: SymKind,
}

/// A set of labeled symmetry strings of one graph state.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    pub generators: Vec<PauliString>,
    pub labels: Vec<SymLabel>,
}

impl SymmetryGroup {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PauliString, &SymLabel)> {
        self.generators.iter().zip(self.labels.iter())
    }

    /// The generator with the given path and kind, if present.
    pub fn find(&self, path: &str, kind: SymKind) -> Option<&PauliString> {
        self.iter()
            .find(|(_, l)| l.path == path && l.kind == kind)
            .map(|(g, _)| g)
    }
}

/// Result of filtering a symmetry group against an error.
#[derive(Debug, Clone)]
pub struct SurvivingSymmetry {
    pub group: SymmetryGroup,
    /// Paths whose full {x-type, z-type} pair survives: teleportation along
    /// any of these is protected.
    pub protected_paths: Vec<String>,
}

impl SurvivingSymmetry {
    /// True iff some path retains its (Z2)^2 pair.
    pub fn protected(&self) -> bool {
        !self.protected_paths.is_empty()
    }
}

/// Keep the generators commuting with every error generator string.
///
/// An empty result is valid and means "unprotected". For a coherent error
/// `exp(-i θ P)` the generator string is `P` itself; commutation with `P`
/// implies commutation with the exponential for every θ.
pub fn surviving_subgroup(group: &SymmetryGroup, errors: &[PauliString]) -> Result<SurvivingSymmetry> {
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for (g, l) in group.iter() {
        let mut ok = true;
        for e in errors {
            if !g.commutes(e)? {
                ok = false;
                break;
            }
        }
        if ok {
            generators.push(g.clone());
            labels.push(l.clone());
        }
    }
    let mut protected_paths = Vec::new();
    for l in &labels {
        if l.kind == SymKind::XType
            && labels
                .iter()
                .any(|m| m.path == l.path && m.kind == SymKind::ZType)
            && !protected_paths.contains(&l.path)
        {
            protected_paths.push(l.path.clone());
        }
    }
    Ok(SurvivingSymmetry {
        group: SymmetryGroup { generators, labels },
        protected_paths,
    })
}

/// A symmetry string split into input, middle and output parts.
///
/// The parts are full-length strings supported only on the input vertex, the
/// middle vertices, and the output vertex respectively; their product
/// reconstructs the original string up to phase.
#[derive(Debug, Clone)]
pub struct SymmetryFactorization {
    pub input_part: PauliString,
    pub middle_part: PauliString,
    pub output_part: PauliString,
}

/// Factor `s` into input/middle/output parts for 0-based qubit indices
/// `input_q` and `output_q`.
pub fn factorize(s: &PauliString, input_q: usize, output_q: usize) -> SymmetryFactorization {
    let n = s.num_qubits();
    let middle: Vec<usize> = (0..n).filter(|&q| q != input_q && q != output_q).collect();
    SymmetryFactorization {
        input_part: s.restricted(&[input_q]).normalized(),
        middle_part: s.restricted(&middle).normalized(),
        output_part: s.restricted(&[output_q]).normalized(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_site_products() {
        assert_eq!(p("+X").multiply(&p("+Y")).unwrap(), p("+iZ"));
        assert_eq!(p("+Y").multiply(&p("+Z")).unwrap(), p("+iX"));
        assert_eq!(p("+Z").multiply(&p("+X")).unwrap(), p("+iY"));
        assert_eq!(p("+Y").multiply(&p("+X")).unwrap(), p("-iZ"));
        assert_eq!(p("+Z").multiply(&p("+Y")).unwrap(), p("-iX"));
        assert_eq!(p("+X").multiply(&p("+Z")).unwrap(), p("-iY"));
        assert_eq!(p("+X").multiply(&p("+X")).unwrap(), p("+I"));
    }

    #[test]
    fn two_site_examples() {
        // (X⊗I)·(Y⊗I) = i(Z⊗I)
        assert_eq!(p("+XI").multiply(&p("+YI")).unwrap(), p("+iZI"));
        // (Z⊗Z)·(Z⊗Z) = +(I⊗I)
        assert_eq!(p("+ZZ").multiply(&p("+ZZ")).unwrap(), p("+II"));
    }

    #[test]
    fn phases_compose() {
        assert_eq!(p("-X").multiply(&p("+Y")).unwrap(), p("-iZ"));
        assert_eq!(p("+iX").multiply(&p("+iY")).unwrap(), p("-iZ"));
        assert_eq!(p("+iZ").multiply(&p("-iZ")).unwrap(), p("+I"));
    }

    #[test]
    fn commutation_parity() {
        // Z3Z5 vs X1X3X5Z6 on six qubits: two anticommuting sites -> commute.
        let a = p("+IIZIZI");
        let b = p("+XIXIXZ");
        assert!(a.commutes(&b).unwrap());
        // Z3Z5 vs X1X4X5Z6: one anticommuting site -> anticommute.
        let c = p("+XIIXXZ");
        assert!(!a.commutes(&c).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(p("+X").multiply(&p("+XX")).is_err());
        assert!(p("+X").commutes(&p("+XX")).is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XIXXZ", "-iZZIII", "+iYIY", "-IIXX"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn factorize_identity() {
        let f = factorize(&p("+IIIIII"), 0, 5);
        assert!(f.input_part.is_identity_letters());
        assert!(f.middle_part.is_identity_letters());
        assert!(f.output_part.is_identity_letters());
    }

    #[test]
    fn factorize_reconstructs() {
        let s = p("+XIXXZI");
        let f = factorize(&s, 0, 5);
        let prod = f
            .input_part
            .multiply(&f.middle_part)
            .unwrap()
            .multiply(&f.output_part)
            .unwrap();
        assert_eq!(prod.normalized(), s.normalized());
    }

    #[test]
    fn surviving_subgroup_with_identity_error() {
        let group = SymmetryGroup {
            generators: vec![p("+XX"), p("+ZZ")],
            labels: vec![
                SymLabel {
                    path: "1".into(),
                    kind: SymKind::XType,
                },
                SymLabel {
                    path: "1".into(),
                    kind: SymKind::ZType,
                },
            ],
        };
        let surv = surviving_subgroup(&group, &[PauliString::identity(2)]).unwrap();
        assert_eq!(surv.group.len(), 2);
        assert!(surv.protected());
    }
}
