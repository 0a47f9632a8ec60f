//! Bosonic state spaces over the six photon modes (three momentum
//! directions × two polarizations).
//!
//! The canonical representation is second-quantized: basis states are
//! [`OccupationState`]s, so permutation symmetry holds by construction.
//! [`ProductSpace`] is the first-quantized picture (one tensor factor per
//! particle) and exists for conversion and for brute-force cross-checks.
//!
//! Particle number is capped at [`MAX_PARTICLES`].

use std::{collections::{BTreeMap, HashMap}, fmt, str::FromStr};

use crate::{
    error::{Error, Result},
    tensor::{tensor_product, Basis, StateVector, Structure, C64, TOL},
};

pub const MAX_PARTICLES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarization {
    H,
    V,
}

/// One photon mode: momentum direction 1..=3 and a polarization.
///
/// Ordered `1H < 1V < 2H < 2V < 3H < 3V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModeLabel {
    momentum: u8,
    polarization: Polarization,
}

impl ModeLabel {
    pub const ALL: [ModeLabel; 6] = [
        ModeLabel { momentum: 1, polarization: Polarization::H },
        ModeLabel { momentum: 1, polarization: Polarization::V },
        ModeLabel { momentum: 2, polarization: Polarization::H },
        ModeLabel { momentum: 2, polarization: Polarization::V },
        ModeLabel { momentum: 3, polarization: Polarization::H },
        ModeLabel { momentum: 3, polarization: Polarization::V },
    ];

    pub fn new(momentum: u8, polarization: Polarization) -> Result<Self> {
        if !(1..=3).contains(&momentum) {
            return Err(Error::InvalidMode(format!("{momentum}{polarization:?}")));
        }
        Ok(Self { momentum, polarization })
    }

    pub const fn h(momentum: u8) -> Self { Self { momentum, polarization: Polarization::H } }

    pub const fn v(momentum: u8) -> Self { Self { momentum, polarization: Polarization::V } }

    pub fn momentum(&self) -> u8 { self.momentum }

    pub fn polarization(&self) -> Polarization { self.polarization }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.momentum, self.polarization)
    }
}

impl FromStr for ModeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidMode(s.to_string());
        let mut chars = s.chars();
        let m = chars.next().and_then(|c| c.to_digit(10)).ok_or_else(bad)?;
        let p = match chars.next() {
            Some('H') => Polarization::H,
            Some('V') => Polarization::V,
            _ => return Err(bad()),
        };
        if chars.next().is_some() {
            return Err(bad());
        }
        Self::new(m as u8, p).map_err(|_| bad())
    }
}

/// Sorted, duplicate-free, nonempty set of modes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModeSet(Vec<ModeLabel>);

impl ModeSet {
    pub fn new<I: IntoIterator<Item = ModeLabel>>(modes: I) -> Result<Self> {
        let mut v: Vec<ModeLabel> = modes.into_iter().collect();
        v.sort();
        let n = v.len();
        v.dedup();
        if v.is_empty() || v.len() != n {
            return Err(Error::InvalidModeSet);
        }
        Ok(Self(v))
    }

    /// All six modes.
    pub fn omega() -> Self { Self(ModeLabel::ALL.to_vec()) }

    /// Both polarizations of each listed momentum.
    pub fn momenta(momenta: &[u8]) -> Result<Self> {
        Self::new(momenta.iter().flat_map(|&k| [ModeLabel::h(k), ModeLabel::v(k)]))
    }

    pub fn modes(&self) -> &[ModeLabel] { &self.0 }

    pub fn len(&self) -> usize { self.0.len() }

    pub fn is_empty(&self) -> bool { self.0.is_empty() }

    pub fn contains(&self, m: ModeLabel) -> bool { self.0.binary_search(&m).is_ok() }

    pub fn position(&self, m: ModeLabel) -> Option<usize> { self.0.binary_search(&m).ok() }

    pub fn is_subset(&self, other: &ModeSet) -> bool { self.0.iter().all(|m| other.contains(*m)) }

    /// Single-particle basis with labels like `"1H"`.
    pub fn basis(&self) -> Basis {
        Basis::new(self.0.iter().map(ToString::to_string)).expect("modes are distinct")
    }

    fn from_basis(single: &Basis) -> Result<Self> {
        Self::new(single.labels().iter().map(|l| l.parse()).collect::<Result<Vec<_>>>()?)
    }
}

fn check_particles(n: usize) -> Result<()> {
    if (1..=MAX_PARTICLES).contains(&n) { Ok(()) } else { Err(Error::ParticleNumber(n)) }
}

/// One mode per particle, in particle order; repeats allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductConfiguration {
    slots: Vec<ModeLabel>,
}

impl ProductConfiguration {
    pub fn new(slots: Vec<ModeLabel>) -> Result<Self> {
        check_particles(slots.len())?;
        Ok(Self { slots })
    }

    pub fn slots(&self) -> &[ModeLabel] { &self.slots }

    pub fn occupation(&self) -> OccupationState { OccupationState::from_modes(self.slots.iter().copied()) }
}

/// Photon count per mode. Zero counts are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupationState {
    counts: BTreeMap<ModeLabel, usize>,
}

impl OccupationState {
    pub fn from_modes<I: IntoIterator<Item = ModeLabel>>(modes: I) -> Self {
        let mut counts = BTreeMap::new();
        for m in modes {
            *counts.entry(m).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn from_counts<I: IntoIterator<Item = (ModeLabel, usize)>>(counts: I) -> Self {
        let mut out = Self::default();
        for (m, n) in counts {
            if n > 0 {
                *out.counts.entry(m).or_insert(0) += n;
            }
        }
        out
    }

    pub fn count(&self, m: ModeLabel) -> usize { self.counts.get(&m).copied().unwrap_or(0) }

    pub fn total(&self) -> usize { self.counts.values().sum() }

    pub fn counts(&self) -> impl Iterator<Item = (ModeLabel, usize)> + '_ {
        self.counts.iter().map(|(m, n)| (*m, *n))
    }

    pub fn modes(&self) -> impl Iterator<Item = ModeLabel> + '_ { self.counts.keys().copied() }

    /// Occupation of the union of both photon sets.
    pub fn plus(&self, other: &Self) -> Self {
        Self::from_counts(self.counts().chain(other.counts()))
    }

    /// ∏_J n_J!
    pub fn factorial_product(&self) -> f64 {
        self.counts.values().map(|&n| factorial(n)).product()
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, n)) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}:{n}")?;
        }
        Ok(())
    }
}

impl FromStr for OccupationState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidOccupation(s.to_string());
        let mut counts = BTreeMap::new();
        for part in s.split(',') {
            let (m, n) = part.split_once(':').ok_or_else(bad)?;
            let m: ModeLabel = m.parse().map_err(|_| bad())?;
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 || counts.insert(m, n).is_some() {
                return Err(bad());
            }
        }
        Ok(Self { counts })
    }
}

fn factorial(n: usize) -> f64 { (1..=n).map(|k| k as f64).product() }

/// `sqrt(∏_J (a_J + b_J)! / (a_J! b_J!))`: the amplitude of `|a + b⟩` when the
/// photons of `a` are created on top of `|b⟩`.
pub fn creation_coefficient(a: &OccupationState, b: &OccupationState) -> f64 {
    (a.plus(b).factorial_product() / (a.factorial_product() * b.factorial_product())).sqrt()
}

/// Number of bosonic states of `n` particles over `mode_count` modes,
/// `C(mode_count + n − 1, n)`.
pub fn sym_dimension(mode_count: u64, n: u64) -> u64 {
    let top = mode_count + n - 1;
    let k = n.min(top - n);
    (0..k).fold(1, |acc, i| acc * (top - i) / (i + 1))
}

/// All count vectors of length `m` summing to `n`, in colexicographic order.
fn compositions(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == m {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for c in 0..=n {
            prefix.push(c);
            rec(m, n - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::with_capacity(m), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Sym^n over a mode set, in the occupation basis.
#[derive(Clone, Debug)]
pub struct SymmetricSpace {
    modes: ModeSet,
    particles: usize,
    states: Vec<OccupationState>,
    index: HashMap<OccupationState, usize>,
    basis: Basis,
}

impl SymmetricSpace {
    pub fn new(modes: &ModeSet, particles: usize) -> Result<Self> {
        check_particles(particles)?;
        let states: Vec<OccupationState> = compositions(modes.len(), particles)
            .into_iter()
            .map(|c| OccupationState::from_counts(modes.modes().iter().copied().zip(c)))
            .collect();
        let index = states.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        let basis = Basis::symmetric_power(
            &modes.basis(),
            particles,
            states.iter().map(ToString::to_string),
        )?;
        Ok(Self { modes: modes.clone(), particles, states, index, basis })
    }

    /// Recover the space an occupation-basis vector lives in.
    pub fn of(basis: &Basis) -> Result<Self> {
        match basis.structure() {
            Structure::SymmetricPower { single, particles } => {
                let space = Self::new(&ModeSet::from_basis(single)?, *particles)?;
                if &space.basis != basis {
                    return Err(Error::Structure("occupation basis"));
                }
                Ok(space)
            }
            _ => Err(Error::Structure("occupation basis")),
        }
    }

    pub fn modes(&self) -> &ModeSet { &self.modes }

    pub fn particles(&self) -> usize { self.particles }

    pub fn basis(&self) -> &Basis { &self.basis }

    pub fn dim(&self) -> usize { self.states.len() }

    pub fn states(&self) -> &[OccupationState] { &self.states }

    pub fn index_of(&self, occ: &OccupationState) -> Option<usize> { self.index.get(occ).copied() }

    fn check_member(&self, occ: &OccupationState) -> Result<usize> {
        if occ.total() != self.particles {
            return Err(Error::ParticleNumber(occ.total()));
        }
        if let Some(m) = occ.modes().find(|m| !self.modes.contains(*m)) {
            return Err(Error::ModeNotInTarget(m.to_string()));
        }
        Ok(self.index[occ])
    }

    pub fn basis_state(&self, occ: &OccupationState) -> Result<StateVector> {
        let k = self.check_member(occ)?;
        let mut amps = vec![C64::new(0.0, 0.0); self.dim()];
        amps[k] = C64::new(1.0, 0.0);
        StateVector::new(self.basis.clone(), amps)
    }

    /// Normalized symmetric state of a product configuration.
    ///
    /// With all modes distinct this is the `1/√n!`-weighted permutation sum;
    /// with repeated modes that sum has norm `√∏n_J!` and is rescaled.
    pub fn symmetrize(&self, config: &ProductConfiguration) -> Result<StateVector> {
        self.basis_state(&config.occupation())
    }

    /// First-quantized picture of this space.
    pub fn product_space(&self) -> ProductSpace {
        ProductSpace::new(&self.modes, self.particles).expect("particle number already checked")
    }

    /// Isometric embedding of an occupation-basis vector into the
    /// first-quantized tensor basis.
    pub fn expand(&self, v: &StateVector) -> Result<StateVector> {
        if v.basis() != &self.basis {
            return Err(Error::BasisMismatch("first-quantized expansion"));
        }
        let ps = self.product_space();
        let mut out = vec![C64::new(0.0, 0.0); ps.basis.len()];
        for (k, slot) in out.iter_mut().enumerate() {
            let occ = ps.occupation_at(k);
            let j = self.index[&occ];
            *slot = v.amplitudes()[j] * self.arrangement_weight(&occ);
        }
        StateVector::new(ps.basis, out)
    }

    /// Adjoint of [`Self::expand`]: the component of a first-quantized
    /// vector in the symmetric subspace, in occupation coordinates.
    /// Not renormalized.
    pub fn project(&self, v: &StateVector) -> Result<StateVector> {
        let ps = self.product_space();
        if v.basis() != &ps.basis {
            return Err(Error::BasisMismatch("symmetric projection"));
        }
        let mut out = StateVector::zeros(self.basis.clone()).into_amplitudes();
        for (k, a) in v.amplitudes().iter().enumerate() {
            let occ = ps.occupation_at(k);
            out[self.index[&occ]] += a * self.arrangement_weight(&occ);
        }
        StateVector::new(self.basis.clone(), out)
    }

    /// `sqrt(∏n_J! / n!)`, the amplitude on each distinct arrangement.
    fn arrangement_weight(&self, occ: &OccupationState) -> f64 {
        (occ.factorial_product() / factorial(self.particles)).sqrt()
    }
}

/// n-fold tensor power of the single-particle space, one factor per
/// particle.
#[derive(Clone, Debug)]
pub struct ProductSpace {
    modes: ModeSet,
    particles: usize,
    basis: Basis,
}

impl ProductSpace {
    pub fn new(modes: &ModeSet, particles: usize) -> Result<Self> {
        check_particles(particles)?;
        let single = modes.basis();
        let basis = Basis::product(&vec![single; particles])?;
        Ok(Self { modes: modes.clone(), particles, basis })
    }

    pub fn basis(&self) -> &Basis { &self.basis }

    pub fn particles(&self) -> usize { self.particles }

    pub fn modes(&self) -> &ModeSet { &self.modes }

    /// Mode of each particle for basis index `k`.
    pub fn configuration_at(&self, mut k: usize) -> Vec<ModeLabel> {
        let m = self.modes.len();
        let mut out = vec![self.modes.0[0]; self.particles];
        for slot in out.iter_mut().rev() {
            *slot = self.modes.0[k % m];
            k /= m;
        }
        out
    }

    fn occupation_at(&self, k: usize) -> OccupationState {
        OccupationState::from_modes(self.configuration_at(k))
    }

    fn index_of_configuration(&self, config: &[ModeLabel]) -> Result<usize> {
        let m = self.modes.len();
        config.iter().try_fold(0, |acc, mode| {
            self.modes.position(*mode)
                .map(|p| acc * m + p)
                .ok_or_else(|| Error::ModeNotInTarget(mode.to_string()))
        })
    }

    /// `|J_1⟩ ⊗ … ⊗ |J_n⟩`.
    pub fn product_state(&self, config: &ProductConfiguration) -> Result<StateVector> {
        if config.slots().len() != self.particles {
            return Err(Error::ParticleNumber(config.slots().len()));
        }
        let k = self.index_of_configuration(config.slots())?;
        StateVector::basis_state(self.basis.clone(), self.basis.label(k))
    }

    /// Tensor product of one single-particle vector per slot.
    pub fn product_of(&self, singles: &[StateVector]) -> Result<StateVector> {
        if singles.len() != self.particles {
            return Err(Error::ParticleNumber(singles.len()));
        }
        let single = self.modes.basis();
        if singles.iter().any(|s| s.basis() != &single) {
            return Err(Error::BasisMismatch("product of single-particle states"));
        }
        let mut acc = singles[0].clone();
        for s in &singles[1..] {
            acc = tensor_product(&acc, s)?;
        }
        Ok(acc)
    }

    /// Relabel particles: output slot `k` takes the mode that input slot
    /// `perm[k]` had.
    pub fn permute_slots(&self, v: &StateVector, perm: &[usize]) -> Result<StateVector> {
        if v.basis() != &self.basis {
            return Err(Error::BasisMismatch("permute slots"));
        }
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.particles).collect::<Vec<_>>() {
            return Err(Error::Structure("slot permutation"));
        }
        let mut out = StateVector::zeros(self.basis.clone()).into_amplitudes();
        for (k, a) in v.amplitudes().iter().enumerate() {
            let src = self.configuration_at(k);
            let dst: Vec<ModeLabel> = perm.iter().map(|&p| src[p]).collect();
            out[self.index_of_configuration(&dst)?] = *a;
        }
        StateVector::new(self.basis.clone(), out)
    }
}

/// Occupation basis of Sym^n over `modes`.
pub fn occupation_basis(modes: &ModeSet, n: usize) -> Result<Basis> {
    Ok(SymmetricSpace::new(modes, n)?.basis)
}

/// Normalized symmetric state of `config` over all six modes.
pub fn symmetrize(config: &ProductConfiguration) -> Result<StateVector> {
    SymmetricSpace::new(&ModeSet::omega(), config.slots().len())?.symmetrize(config)
}

/// Occupation basis state written in the first-quantized basis over all six
/// modes: `sqrt(∏n_J!/n!)` on each distinct arrangement.
pub fn first_quantized_expansion(occ: &OccupationState) -> Result<StateVector> {
    let space = SymmetricSpace::new(&ModeSet::omega(), occ.total())?;
    space.expand(&space.basis_state(occ)?)
}

/// Carry an occupation-basis vector into the same particle number over a
/// larger mode set.
pub fn embed(state: &StateVector, target: &ModeSet) -> Result<StateVector> {
    let src = SymmetricSpace::of(state.basis())?;
    if let Some(m) = src.modes.modes().iter().find(|m| !target.contains(**m)) {
        return Err(Error::ModeNotInTarget(m.to_string()));
    }
    let dst = SymmetricSpace::new(target, src.particles)?;
    let mut out = StateVector::zeros(dst.basis.clone()).into_amplitudes();
    for (occ, a) in src.states.iter().zip(state.amplitudes()) {
        out[dst.index[occ]] = *a;
    }
    StateVector::new(dst.basis, out)
}

/// Inverse of [`embed`]; fails if more than [`TOL`] of amplitude lies on
/// occupations outside `target`.
pub fn restrict(state: &StateVector, target: &ModeSet) -> Result<StateVector> {
    let src = SymmetricSpace::of(state.basis())?;
    let dst = SymmetricSpace::new(target, src.particles)?;
    let mut out = StateVector::zeros(dst.basis.clone()).into_amplitudes();
    let mut leak = 0.0;
    for (occ, a) in src.states.iter().zip(state.amplitudes()) {
        match dst.index_of(occ) {
            Some(k) => out[k] = *a,
            None => leak += a.norm_sqr(),
        }
    }
    if leak.sqrt() > TOL {
        return Err(Error::Leakage(leak.sqrt()));
    }
    StateVector::new(dst.basis, out)
}

fn union(a: &ModeSet, b: &ModeSet) -> ModeSet {
    let mut v = a.0.clone();
    v.extend(b.0.iter().filter(|m| !a.contains(**m)));
    ModeSet::new(v).expect("union of nonempty sets")
}

/// Create the photons of `a` on top of `b`: each basis pair contributes
/// [`creation_coefficient`] to `|a + b⟩`. The result lives over the union of
/// both mode sets and is not renormalized.
pub fn sym_product(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    let sa = SymmetricSpace::of(a.basis())?;
    let sb = SymmetricSpace::of(b.basis())?;
    let out_space = SymmetricSpace::new(&union(&sa.modes, &sb.modes), sa.particles + sb.particles)?;
    let mut out = StateVector::zeros(out_space.basis.clone()).into_amplitudes();
    for (oa, x) in sa.states.iter().zip(a.amplitudes()) {
        if x.norm() == 0.0 {
            continue;
        }
        for (ob, y) in sb.states.iter().zip(b.amplitudes()) {
            out[out_space.index[&oa.plus(ob)]] += x * y * creation_coefficient(oa, ob);
        }
    }
    StateVector::new(out_space.basis, out)
}

/// Remove the photons described by `bra` from `ket` (the adjoint of
/// [`sym_product`] in its first argument). For a k-photon bra and an
/// N-photon ket this equals `sqrt(C(N,k))` times the first-quantized partial
/// inner product over any k particles.
///
/// The result lives over the ket's mode set with N − k photons.
pub fn contract(bra: &StateVector, ket: &StateVector) -> Result<StateVector> {
    let sb = SymmetricSpace::of(bra.basis())?;
    let sk = SymmetricSpace::of(ket.basis())?;
    if sb.particles >= sk.particles {
        return Err(Error::TooFewPhotons { bra: sb.particles, ket: sk.particles });
    }
    if let Some(m) = sb.modes.modes().iter().find(|m| !sk.modes.contains(**m)) {
        return Err(Error::ModeNotInTarget(m.to_string()));
    }
    let rest = SymmetricSpace::new(&sk.modes, sk.particles - sb.particles)?;
    let mut out = StateVector::zeros(rest.basis.clone()).into_amplitudes();
    for (ob, x) in sb.states.iter().zip(bra.amplitudes()) {
        if x.norm() == 0.0 {
            continue;
        }
        for (or, slot) in rest.states.iter().zip(out.iter_mut()) {
            let k = sk.index[&ob.plus(or)];
            *slot += x.conj() * ket.amplitudes()[k] * creation_coefficient(ob, or);
        }
    }
    StateVector::new(rest.basis, out)
}
