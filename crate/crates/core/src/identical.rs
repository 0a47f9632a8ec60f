//! Teleportation of a polarization state between three identical photons.
//!
//! The input photon travels along momentum 3, the entangled pair along
//! momenta 1 and 2. The Bell analyzer sees momenta 1 and 3, whose
//! two-photon symmetric space has dimension 10; the four symmetrized Bell
//! states span a 4-dimensional subspace of it. The teleported polarization
//! ends up on momentum 2.
//!
//! Tracing out "two of the particles" has no meaning for identical
//! particles, so the post-measurement state is obtained by contracting the
//! Bell bra against two photons of the three-photon state
//! ([`crate::symmetric::contract`]).

use std::f64::consts::FRAC_1_SQRT_2;

use crate::{
    distinguishable::{pauli_correction, BellKind, QubitState},
    error::{Error, Result},
    symmetric::{
        contract, sym_product, ModeLabel, ModeSet, ProductConfiguration, ProductSpace,
        SymmetricSpace,
    },
    tensor::{gram, normalize, projector, LinearOperator, StateVector, C64, TOL},
};

pub const INPUT_MOMENTUM: u8 = 3;
pub const RECEIVER_MOMENTUM: u8 = 2;
/// Momenta of the photons sent to the Bell analyzer.
pub const BELL_PAIR: (u8, u8) = (1, 3);
/// Momenta of the entangled pair.
pub const EPR_PAIR: (u8, u8) = (1, RECEIVER_MOMENTUM);

/// `alpha|kH⟩ + beta|kV⟩` for one photon with momentum `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarizationState {
    alpha: C64,
    beta: C64,
    momentum: u8,
}

impl PolarizationState {
    pub fn new(alpha: C64, beta: C64, momentum: u8) -> Result<Self> {
        Self::from_qubit(&QubitState::new(alpha, beta)?, momentum)
    }

    pub fn from_qubit(q: &QubitState, momentum: u8) -> Result<Self> {
        ModeLabel::new(momentum, crate::symmetric::Polarization::H)?;
        Ok(Self { alpha: q.alpha(), beta: q.beta(), momentum })
    }

    pub fn alpha(&self) -> C64 { self.alpha }

    pub fn beta(&self) -> C64 { self.beta }

    pub fn momentum(&self) -> u8 { self.momentum }

    pub fn qubit(&self) -> QubitState {
        QubitState::new(self.alpha, self.beta).expect("validated on construction")
    }

    /// The photon as a vector over the six single-photon modes.
    pub fn single_photon(&self) -> StateVector {
        single_photon(self.momentum, [self.alpha, self.beta])
    }
}

fn one_photon_space() -> SymmetricSpace {
    SymmetricSpace::new(&ModeSet::omega(), 1).expect("one photon is in range")
}

fn single_photon(momentum: u8, pol: [C64; 2]) -> StateVector {
    let h = format!("{}:1", ModeLabel::h(momentum));
    let v = format!("{}:1", ModeLabel::v(momentum));
    StateVector::from_labels(one_photon_space().basis().clone(), [(h.as_str(), pol[0]), (v.as_str(), pol[1])])
        .expect("momentum validated")
}

/// Modes {1H, 1V, 3H, 3V} seen by the Bell analyzer.
pub fn bell_modes() -> ModeSet { ModeSet::momenta(&[BELL_PAIR.0, BELL_PAIR.1]).expect("two momenta") }

/// `(|a,b⟩ + sign·|c,d⟩)/√2` for two distinct-mode photon pairs, built in
/// the occupation basis and renormalized.
fn two_pair_state(space: &SymmetricSpace, first: [ModeLabel; 2], second: [ModeLabel; 2], sign: f64)
    -> Result<StateVector>
{
    let a = space.symmetrize(&ProductConfiguration::new(first.to_vec())?)?;
    let b = space.symmetrize(&ProductConfiguration::new(second.to_vec())?)?;
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    normalize(&a.scale(s).add(&b.scale(s * sign))?)
}

/// Entangled pair `(|1H,2H⟩ + |1V,2V⟩)/√2` over all six modes.
pub fn epr_state() -> StateVector {
    let space = SymmetricSpace::new(&ModeSet::omega(), 2).expect("two photons");
    let (a, b) = EPR_PAIR;
    two_pair_state(&space, [ModeLabel::h(a), ModeLabel::h(b)], [ModeLabel::v(a), ModeLabel::v(b)], 1.0)
        .expect("modes are in the full set")
}

/// Symmetric three-photon state: the input photon created on top of the
/// entangled pair, one photon per momentum direction.
pub fn total_state(input: &PolarizationState) -> Result<StateVector> {
    if input.momentum != INPUT_MOMENTUM {
        return Err(Error::WrongMomentum { expected: INPUT_MOMENTUM, found: input.momentum });
    }
    normalize(&sym_product(&input.single_photon(), &epr_state())?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymBellState {
    pub kind: BellKind,
    pub pair: (u8, u8),
    /// Normalized, over Sym² of the pair's four modes.
    pub vector: StateVector,
}

/// Symmetrized Bell state on momenta (1, 3).
pub fn sym_bell(kind: BellKind) -> SymBellState {
    sym_bell_on(kind, BELL_PAIR).expect("distinct momenta")
}

/// Φ± = (|aH,bH⟩ ± |aV,bV⟩)/√2 and Ψ± = (|aH,bV⟩ ± |aV,bH⟩)/√2 for
/// `pair = (a, b)`.
pub fn sym_bell_on(kind: BellKind, pair: (u8, u8)) -> Result<SymBellState> {
    if pair.0 == pair.1 {
        return Err(Error::IdenticalSlots(pair.0));
    }
    let space = SymmetricSpace::new(&ModeSet::momenta(&[pair.0, pair.1])?, 2)?;
    let (a, b) = pair;
    let (first, second) = if kind.is_psi() {
        ([ModeLabel::h(a), ModeLabel::v(b)], [ModeLabel::v(a), ModeLabel::h(b)])
    } else {
        ([ModeLabel::h(a), ModeLabel::h(b)], [ModeLabel::v(a), ModeLabel::v(b)])
    };
    let vector = two_pair_state(&space, first, second, kind.sign())?;
    Ok(SymBellState { kind, pair, vector })
}

pub fn bell_projector(kind: BellKind) -> LinearOperator {
    projector(&sym_bell(kind).vector).expect("Bell states are normalized")
}

/// Identity on the 10-dimensional analyzer space minus the four Bell
/// projectors.
pub fn bell_complement() -> LinearOperator {
    let space = SymmetricSpace::new(&bell_modes(), 2).expect("two photons");
    BellKind::ALL.iter()
        .fold(LinearOperator::identity(space.basis().clone()), |acc, &k| {
            acc.sub(&bell_projector(k)).expect("same basis")
        })
}

pub fn bell_complement_rank() -> usize { bell_complement().rank(TOL) }

/// Weight `Σ_r ⟨m_r|op|m_r⟩` of an operator on the analyzer space, where
/// `m_r` collects, for each one-photon remainder `r`, the amplitudes of
/// contracting each analyzer basis state against `total`.
///
/// For `op = |B⟩⟨B|` this is the probability of outcome `B`; for the
/// identity it is the expected number of photon pairs inside the analyzer
/// modes.
pub fn measurement_weight(total: &StateVector, op: &LinearOperator) -> Result<f64> {
    let space = SymmetricSpace::of(op.basis_in())?;
    let remainders: Vec<StateVector> = space.states().iter()
        .map(|o| contract(&space.basis_state(o)?, total))
        .collect::<Result<_>>()?;
    let rest_dim = remainders.first().map_or(0, StateVector::len);
    let mut weight = 0.0;
    for r in 0..rest_dim {
        let m = StateVector::new(
            space.basis().clone(),
            remainders.iter().map(|v| v.amplitudes()[r]).collect(),
        )?;
        let opm = crate::tensor::apply(op, &m)?;
        weight += crate::tensor::inner_product(&m, &opm)?.re;
    }
    Ok(weight)
}

/// Outcome weights of the full analyzer measurement on `total`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementBudget {
    /// In [`BellKind::ALL`] order.
    pub bell: [f64; 4],
    pub complement: f64,
}

impl MeasurementBudget {
    pub fn total(&self) -> f64 { self.bell.iter().sum::<f64>() + self.complement }
}

pub fn measurement_budget(total: &StateVector) -> Result<MeasurementBudget> {
    let mut bell = [0.0; 4];
    for (slot, k) in bell.iter_mut().zip(BellKind::ALL) {
        *slot = measurement_weight(total, &bell_projector(k))?;
    }
    Ok(MeasurementBudget { bell, complement: measurement_weight(total, &bell_complement())? })
}

/// Result of projecting a three-photon state onto one symmetrized Bell
/// state.
#[derive(Clone, Debug, PartialEq)]
pub struct SymBellMeasurement {
    pub kind: BellKind,
    pub probability: f64,
    /// Normalized one-photon state over all six modes; `None` when the
    /// outcome has zero probability.
    pub conditional_state: Option<StateVector>,
}

pub fn measure_sym_bell(total: &StateVector, kind: BellKind) -> Result<SymBellMeasurement> {
    let bra = crate::symmetric::embed(&sym_bell(kind).vector, &SymmetricSpace::of(total.basis())?.modes().clone())?;
    let rest = contract(&bra, total)?;
    let probability = rest.norm_sqr();
    let conditional_state = if probability > TOL { Some(normalize(&rest)?) } else { None };
    Ok(SymBellMeasurement { kind, probability, conditional_state })
}

/// `[amp(kH), amp(kV)]` of a one-photon state.
pub fn polarization_pair(state: &StateVector, momentum: u8) -> Result<[C64; 2]> {
    Ok([
        state.amplitude(&format!("{}:1", ModeLabel::h(momentum)))?,
        state.amplitude(&format!("{}:1", ModeLabel::v(momentum)))?,
    ])
}

/// Norm of the part of a one-photon state outside momentum `momentum`.
pub fn leakage(state: &StateVector, momentum: u8) -> Result<f64> {
    let keep = [ModeLabel::h(momentum), ModeLabel::v(momentum)].map(|m| format!("{m}:1"));
    polarization_pair(state, momentum)?;
    Ok(state.basis().labels().iter().zip(state.amplitudes())
        .filter(|(l, _)| !keep.contains(l))
        .map(|(_, a)| a.norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// min over θ of ‖a − e^{iθ}·b‖ for two amplitude pairs.
pub fn pair_phase_distance(a: [C64; 2], b: [C64; 2]) -> f64 {
    let overlap = b[0].conj() * a[0] + b[1].conj() * a[1];
    let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { C64::new(1.0, 0.0) };
    ((a[0] - phase * b[0]).norm_sqr() + (a[1] - phase * b[1]).norm_sqr()).sqrt()
}

/// Distance, up to global phase, between the momentum-2 polarization pair
/// left by the identical-photon protocol and the slot-2 qubit left by the
/// distinguishable protocol for the same outcome (H ↔ 0, V ↔ 1).
pub fn conditional_mismatch(input: &QubitState, kind: BellKind) -> Result<f64> {
    use crate::distinguishable as dist;
    let d = dist::measure_bell(&dist::total_state(input), kind)?
        .conditional_state
        .ok_or(Error::NullState(0.0))?;
    let p = PolarizationState::from_qubit(input, INPUT_MOMENTUM)?;
    let s = measure_sym_bell(&total_state(&p)?, kind)?
        .conditional_state
        .ok_or(Error::NullState(0.0))?;
    let d = [d.amplitudes()[0], d.amplitudes()[1]];
    Ok(pair_phase_distance(polarization_pair(&s, RECEIVER_MOMENTUM)?, d))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymMeasurementOutcome {
    pub kind: BellKind,
    pub probability: f64,
    pub conditional_state: StateVector,
    pub corrected_state: StateVector,
    /// |⟨(α, β)|corrected polarization on momentum 2⟩|².
    pub fidelity: f64,
}

/// Full protocol for one outcome: measure, correct the momentum-2
/// polarization with the distinguishable-qubit Pauli table, compare.
pub fn teleport_identical(input: &PolarizationState, kind: BellKind) -> Result<SymMeasurementOutcome> {
    let m = measure_sym_bell(&total_state(input)?, kind)?;
    let conditional = m.conditional_state.ok_or(Error::NullState(m.probability))?;
    let [h, v] = polarization_pair(&conditional, RECEIVER_MOMENTUM)?;
    let u = pauli_correction(kind);
    let fixed = [u[0][0] * h + u[0][1] * v, u[1][0] * h + u[1][1] * v];
    let mut corrected = conditional.clone().into_amplitudes();
    let space = one_photon_space();
    for (mode, a) in [ModeLabel::h(RECEIVER_MOMENTUM), ModeLabel::v(RECEIVER_MOMENTUM)].into_iter().zip(fixed) {
        let occ = crate::symmetric::OccupationState::from_modes([mode]);
        corrected[space.index_of(&occ).expect("mode in full set")] = a;
    }
    let corrected_state = StateVector::new(space.basis().clone(), corrected)?;
    let overlap = input.alpha.conj() * fixed[0] + input.beta.conj() * fixed[1];
    Ok(SymMeasurementOutcome {
        kind,
        probability: m.probability,
        conditional_state: conditional,
        corrected_state,
        fidelity: overlap.norm_sqr(),
    })
}

/// Which version of the regrouped three-photon expansion to rebuild.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegroupingVariant {
    /// Ψ± terms pair `1H⊗3V` with `1V⊗3H`, and the Ψ⁻ two-photon factor is
    /// `1V⊗3H − 1H⊗3V`.
    Corrected,
    /// Uncorrected form: Ψ± terms `1H⊗3V ± 3V⊗1H`.
    Verbatim,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegroupingCheck {
    pub variant: RegroupingVariant,
    /// ‖normalized reconstruction − total_state‖.
    pub residual: f64,
    /// Norm of the reconstruction with the `1/(2√3)` prefactor,
    /// before renormalization.
    pub scale: f64,
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    all_permutations(n - 1).into_iter()
        .flat_map(|p| (0..n).map(move |pos| {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            q
        }))
        .collect()
}

/// `(1/(2√3)) Σ_{P₃}` of a first-quantized three-photon vector, expressed in
/// the occupation basis. Returns the state together with its norm.
fn permutation_sum(ps: &ProductSpace, v: &StateVector) -> Result<StateVector> {
    let space = SymmetricSpace::new(ps.modes(), 3)?;
    let mut acc = StateVector::zeros(ps.basis().clone());
    for p in all_permutations(3) {
        acc = acc.add(&ps.permute_slots(v, &p)?)?;
    }
    let pref = C64::new(1.0 / (2.0 * 3f64.sqrt()), 0.0);
    space.project(&acc.scale(pref))
}

/// Rebuild the three-photon state from its regrouping into
/// (one-photon companion) ⊗ (two-photon Bell-like factor) terms and compare
/// with [`total_state`].
pub fn regrouping_identity_check(input: &PolarizationState, variant: RegroupingVariant)
    -> Result<RegroupingCheck>
{
    let omega = ModeSet::omega();
    let single = |m: ModeLabel| {
        StateVector::basis_state(omega.basis(), &m.to_string()).expect("mode in full set")
    };
    let pol = |h: C64, v: C64| single(ModeLabel::h(2)).scale(h).add(&single(ModeLabel::v(2)).scale(v));
    let ps = ProductSpace::new(&omega, 3)?;
    let two = ProductSpace::new(&omega, 2)?;
    let pair = |a: ModeLabel, b: ModeLabel| two.product_of(&[single(a), single(b)]);
    let (a, b) = (input.alpha, input.beta);
    let one = C64::new(1.0, 0.0);
    let (h1, v1, h3, v3) = (ModeLabel::h(1), ModeLabel::v(1), ModeLabel::h(3), ModeLabel::v(3));

    let phi = |s: C64| pair(h1, h3)?.add(&pair(v1, v3)?.scale(s));
    let (psi_plus, psi_minus) = match variant {
        RegroupingVariant::Corrected => (
            pair(h1, v3)?.add(&pair(v1, h3)?)?,
            pair(v1, h3)?.sub(&pair(h1, v3)?)?,
        ),
        RegroupingVariant::Verbatim => (
            pair(h1, v3)?.add(&pair(v3, h1)?)?,
            pair(h1, v3)?.sub(&pair(v3, h1)?)?,
        ),
    };
    let terms = [
        (pol(a, b)?, phi(one)?),
        (pol(a, -b)?, phi(-one)?),
        (pol(b, a)?, psi_plus),
        (pol(-b, a)?, psi_minus),
    ];
    let mut sum = StateVector::zeros(ps.basis().clone());
    for (companion, rest) in terms {
        sum = sum.add(&crate::tensor::tensor_product(&companion, &rest)?)?;
    }
    let rebuilt = permutation_sum(&ps, &sum)?;
    let scale = rebuilt.norm();
    let residual = normalize(&rebuilt)?.distance(&total_state(input)?)?;
    Ok(RegroupingCheck { variant, residual, scale })
}

/// Three-photon state built directly in the first-quantized picture:
/// `(1/(2√3)) Σ_{P₃} φ ⊗ Φ⁺` with `Φ⁺ = (1/2) Σ_{P₂}(|1H,2H⟩ + |1V,2V⟩)`,
/// then converted to occupation coordinates. Not renormalized.
pub fn first_quantized_total_state(input: &PolarizationState) -> Result<StateVector> {
    if input.momentum != INPUT_MOMENTUM {
        return Err(Error::WrongMomentum { expected: INPUT_MOMENTUM, found: input.momentum });
    }
    let omega = ModeSet::omega();
    let single = |m: ModeLabel| StateVector::basis_state(omega.basis(), &m.to_string());
    let two = ProductSpace::new(&omega, 2)?;
    let mut epr = StateVector::zeros(two.basis().clone());
    for (x, y) in [(ModeLabel::h(1), ModeLabel::h(2)), (ModeLabel::v(1), ModeLabel::v(2))] {
        let xy = two.product_of(&[single(x)?, single(y)?])?;
        epr = epr.add(&xy)?.add(&two.permute_slots(&xy, &[1, 0])?)?;
    }
    let epr = epr.scale(C64::new(0.5, 0.0));
    let phi = single(ModeLabel::h(3))?.scale(input.alpha).add(&single(ModeLabel::v(3))?.scale(input.beta))?;
    let ps = ProductSpace::new(&omega, 3)?;
    permutation_sum(&ps, &crate::tensor::tensor_product(&phi, &epr)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImpossibilityReport {
    /// Dimension of Sym² over one momentum's two polarization modes.
    pub dimension: usize,
    /// Rank of the Gram matrix of the four symmetrized Bell candidates there.
    pub gram_rank: usize,
    /// Dimension of Sym² over the analyzer's four modes.
    pub contrast_dimension: usize,
    /// Rank of the Gram matrix of the four symmetrized Bell states there.
    pub contrast_gram_rank: usize,
}

/// Without momentum labels two photons only span a 3-dimensional symmetric
/// space: the antisymmetric Ψ⁻ candidate vanishes under symmetrization and
/// no four-outcome orthonormal Bell measurement exists.
pub fn impossibility_demo() -> Result<ImpossibilityReport> {
    let modes = ModeSet::momenta(&[1])?;
    let space = SymmetricSpace::new(&modes, 2)?;
    let ps = space.product_space();
    let (h, v) = (ModeLabel::h(1), ModeLabel::v(1));
    let prod = |a, b| ps.product_state(&ProductConfiguration::new(vec![a, b])?);
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    let candidates = BellKind::ALL.iter()
        .map(|&k| {
            let (x, y) = if k.is_psi() { (prod(h, v)?, prod(v, h)?) } else { (prod(h, h)?, prod(v, v)?) };
            space.project(&x.scale(s).add(&y.scale(s * k.sign()))?)
        })
        .collect::<Result<Vec<_>>>()?;
    let contrast: Vec<StateVector> = BellKind::ALL.iter().map(|&k| sym_bell(k).vector).collect();
    Ok(ImpossibilityReport {
        dimension: space.dim(),
        gram_rank: gram(&candidates)?.rank(TOL),
        contrast_dimension: SymmetricSpace::new(&bell_modes(), 2)?.dim(),
        contrast_gram_rank: gram(&contrast)?.rank(TOL),
    })
}
