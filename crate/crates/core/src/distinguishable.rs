//! Teleportation of one qubit between three distinguishable particles.
//!
//! Qubit slots are labeled 1, 2, 3. Slot 3 carries the unknown state, slots
//! 1 and 2 share the entangled pair, and the joint state is always ordered
//! as `(3, 1, 2)`. The Bell measurement acts on slots 1 and 3 and the state
//! ends up on slot 2.

use std::{collections::BTreeMap, fmt, str::FromStr};

use crate::{
    error::{Error, Result},
    tensor::{
        apply, fidelity, normalize, partial_inner, tensor_product, Basis, LinearOperator,
        StateVector, C64, TOL,
    },
};

/// Slot holding the state to be teleported.
pub const INPUT_SLOT: u8 = 3;
/// Slot receiving the teleported state.
pub const RECEIVER_SLOT: u8 = 2;
/// Slots measured in the Bell basis, in basis order.
pub const MEASURED_PAIR: (u8, u8) = (1, 3);

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Normalized single-qubit state `alpha|0⟩ + beta|1⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState {
    alpha: C64,
    beta: C64,
}

impl QubitState {
    /// Requires `|alpha|² + |beta|² = 1` within [`TOL`].
    pub fn new(alpha: C64, beta: C64) -> Result<Self> {
        let n = alpha.norm_sqr() + beta.norm_sqr();
        if (n - 1.0).abs() > TOL {
            return Err(Error::NotNormalized(n.sqrt()));
        }
        Ok(Self { alpha, beta })
    }

    /// Rescales `(alpha, beta)` to unit norm.
    pub fn normalized(alpha: C64, beta: C64) -> Result<Self> {
        let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if n <= crate::tensor::NULL_NORM {
            return Err(Error::NullState(n));
        }
        Ok(Self { alpha: alpha / n, beta: beta / n })
    }

    pub fn zero() -> Self { Self { alpha: ONE, beta: ZERO } }

    pub fn one() -> Self { Self { alpha: ZERO, beta: ONE } }

    pub fn alpha(&self) -> C64 { self.alpha }

    pub fn beta(&self) -> C64 { self.beta }

    pub fn on_slot(&self, slot: u8) -> StateVector {
        StateVector::new(qubit_basis(slot), vec![self.alpha, self.beta])
            .expect("qubit basis has two labels")
    }
}

/// The four Bell states, in outcome order 1–4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] =
        [BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus];

    /// 1-based outcome number.
    pub fn outcome(self) -> usize { self as usize + 1 }

    pub fn name(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "PhiPlus",
            BellKind::PhiMinus => "PhiMinus",
            BellKind::PsiPlus => "PsiPlus",
            BellKind::PsiMinus => "PsiMinus",
        }
    }

    /// `true` for the Ψ± pair, which anti-correlates the two qubits.
    pub fn is_psi(self) -> bool { matches!(self, BellKind::PsiPlus | BellKind::PsiMinus) }

    /// Relative sign between the two terms.
    pub fn sign(self) -> f64 {
        match self {
            BellKind::PhiPlus | BellKind::PsiPlus => 1.0,
            BellKind::PhiMinus | BellKind::PsiMinus => -1.0,
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { f.write_str(self.name()) }
}

impl FromStr for BellKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BellKind::ALL.into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Bell state {s:?}"))
    }
}

/// Two-label basis `{0_s, 1_s}` for qubit slot `s`.
pub fn qubit_basis(slot: u8) -> Basis {
    Basis::new([format!("0_{slot}"), format!("1_{slot}")]).expect("two distinct labels")
}

/// Bell state on the ordered slot pair; basis order `00, 01, 10, 11` with the
/// first digit on `pair.0`.
pub fn bell_state(kind: BellKind, pair: (u8, u8)) -> Result<StateVector> {
    if pair.0 == pair.1 {
        return Err(Error::IdenticalSlots(pair.0));
    }
    let basis = Basis::product(&[qubit_basis(pair.0), qubit_basis(pair.1)])?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let s = kind.sign() * h;
    let amps = if kind.is_psi() {
        [ZERO, C64::new(h, 0.0), C64::new(s, 0.0), ZERO]
    } else {
        [C64::new(h, 0.0), ZERO, ZERO, C64::new(s, 0.0)]
    };
    StateVector::new(basis, amps.to_vec())
}

/// Input on slot 3 tensored with the `PhiPlus` pair on slots (1, 2).
pub fn total_state(input: &QubitState) -> StateVector {
    let pair = bell_state(BellKind::PhiPlus, (1, RECEIVER_SLOT)).expect("distinct slots");
    tensor_product(&input.on_slot(INPUT_SLOT), &pair).expect("disjoint factors")
}

/// Unnormalized slot-2 companions `c_k` with `total = Σ_k c_k ⊗ Bell_k(1,3)`.
pub fn decompose(total: &StateVector) -> Result<BTreeMap<BellKind, StateVector>> {
    BellKind::ALL.into_iter()
        .map(|k| Ok((k, partial_inner(&bell_state(k, MEASURED_PAIR)?, total)?)))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementOutcome {
    pub kind: BellKind,
    pub probability: f64,
    /// Normalized slot-2 state; `None` when the outcome has zero probability.
    pub conditional_state: Option<StateVector>,
}

/// Project slots (1, 3) of `total` onto `kind`.
pub fn measure_bell(total: &StateVector, kind: BellKind) -> Result<MeasurementOutcome> {
    let companion = partial_inner(&bell_state(kind, MEASURED_PAIR)?, total)?;
    let probability = companion.norm_sqr();
    let conditional_state = if probability > TOL { Some(normalize(&companion)?) } else { None };
    Ok(MeasurementOutcome { kind, probability, conditional_state })
}

/// Receiver amplitudes `[amp(0), amp(1)]` expected after outcome `kind`,
/// up to global phase: (α, β), (α, −β), (β, α), (−β, α).
pub fn expected_conditional(input: &QubitState, kind: BellKind) -> [C64; 2] {
    let (a, b) = (input.alpha, input.beta);
    match kind {
        BellKind::PhiPlus => [a, b],
        BellKind::PhiMinus => [a, -b],
        BellKind::PsiPlus => [b, a],
        BellKind::PsiMinus => [-b, a],
    }
}

/// Pauli correction for an outcome, as a row-major 2×2 matrix:
/// I, σ_z, σ_x, σ_xσ_z for outcomes 1–4.
pub fn pauli_correction(kind: BellKind) -> [[C64; 2]; 2] {
    let m = -ONE;
    match kind {
        BellKind::PhiPlus => [[ONE, ZERO], [ZERO, ONE]],
        BellKind::PhiMinus => [[ONE, ZERO], [ZERO, m]],
        BellKind::PsiPlus => [[ZERO, ONE], [ONE, ZERO]],
        BellKind::PsiMinus => [[ZERO, m], [ONE, ZERO]],
    }
}

/// [`pauli_correction`] acting on the receiver slot.
pub fn correction(kind: BellKind) -> LinearOperator {
    let [[a, b], [c, d]] = pauli_correction(kind);
    LinearOperator::from_rows(qubit_basis(RECEIVER_SLOT), &[a, b, c, d])
        .expect("2x2 matrix on a 2-label basis")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Teleported {
    pub kind: BellKind,
    pub probability: f64,
    pub conditional: StateVector,
    pub corrected: StateVector,
    /// |⟨input|corrected⟩|².
    pub fidelity: f64,
}

/// Run the protocol for `input` and post-select on `kind`.
pub fn teleport(input: &QubitState, kind: BellKind) -> Result<Teleported> {
    let outcome = measure_bell(&total_state(input), kind)?;
    let conditional = outcome.conditional_state.ok_or(Error::NullState(outcome.probability))?;
    let corrected = apply(&correction(kind), &conditional)?;
    let fidelity = fidelity(&input.on_slot(RECEIVER_SLOT), &corrected)?;
    Ok(Teleported { kind, probability: outcome.probability, conditional, corrected, fidelity })
}
