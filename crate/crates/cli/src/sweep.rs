//! Randomized verification over Haar-random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use symtele_core::{
    distinguishable::{self as dist, expected_conditional},
    identical::{self as ident, pair_phase_distance, PolarizationState, INPUT_MOMENTUM, RECEIVER_MOMENTUM},
    BellKind, QubitState, Result, C64,
};

use crate::report::{amplitudes, Check, CsvRow, OutcomeRecord};

/// Haar-random qubit from two normalized complex Gaussians.
pub fn haar_qubit<R: Rng>(rng: &mut R) -> QubitState {
    loop {
        let mut g = || rng.sample::<f64, _>(StandardNormal);
        let (a, b) = (C64::new(g(), g()), C64::new(g(), g()));
        if let Ok(q) = QubitState::normalized(a, b) {
            return q;
        }
    }
}

pub fn haar_inputs(count: usize, seed: u64) -> Vec<QubitState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| haar_qubit(&mut rng)).collect()
}

fn pair(v: &symtele_core::StateVector) -> [C64; 2] { [v.amplitudes()[0], v.amplitudes()[1]] }

/// Worst-case residuals of one protocol over a set of inputs.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProtocolStats {
    pub probability: f64,
    pub probability_sum: f64,
    pub fidelity: f64,
    pub conditional_form: f64,
    /// Identical protocol only.
    pub leakage: f64,
    /// Identical protocol only: analyzer weight outside the four Bell states.
    pub complement: f64,
}

impl ProtocolStats {
    fn absorb(&mut self, o: &ProtocolStats) {
        self.probability = self.probability.max(o.probability);
        self.probability_sum = self.probability_sum.max(o.probability_sum);
        self.fidelity = self.fidelity.max(o.fidelity);
        self.conditional_form = self.conditional_form.max(o.conditional_form);
        self.leakage = self.leakage.max(o.leakage);
        self.complement = self.complement.max(o.complement);
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TrialResult {
    pub distinguishable: ProtocolStats,
    pub identical: ProtocolStats,
    pub cross_mismatch: f64,
    /// Σ of the four identical-protocol probabilities.
    pub identical_sum: f64,
    pub outcomes: Vec<OutcomeRecord>,
    pub rows: Vec<CsvRow>,
}

pub fn run_distinguishable(input: &QubitState) -> Result<(ProtocolStats, Vec<OutcomeRecord>)> {
    let mut s = ProtocolStats::default();
    let mut records = Vec::new();
    let mut sum = 0.0;
    for kind in BellKind::ALL {
        let t = dist::teleport(input, kind)?;
        sum += t.probability;
        s.probability = s.probability.max((t.probability - 0.25).abs());
        s.fidelity = s.fidelity.max((1.0 - t.fidelity).abs());
        s.conditional_form = s.conditional_form
            .max(pair_phase_distance(pair(&t.conditional), expected_conditional(input, kind)));
        records.push(OutcomeRecord {
            trial: None,
            protocol: None,
            kind: kind.name().to_string(),
            probability: t.probability,
            conditional: amplitudes(&t.conditional),
            corrected: amplitudes(&t.corrected),
            fidelity: t.fidelity,
        });
    }
    s.probability_sum = (sum - 1.0).abs();
    Ok((s, records))
}

pub fn run_identical(input: &QubitState) -> Result<(ProtocolStats, f64, Vec<OutcomeRecord>)> {
    let p = PolarizationState::from_qubit(input, INPUT_MOMENTUM)?;
    let mut s = ProtocolStats::default();
    let mut records = Vec::new();
    let mut sum = 0.0;
    for kind in BellKind::ALL {
        let t = ident::teleport_identical(&p, kind)?;
        sum += t.probability;
        s.probability = s.probability.max((t.probability - 0.25).abs());
        s.fidelity = s.fidelity.max((1.0 - t.fidelity).abs());
        let got = ident::polarization_pair(&t.conditional_state, RECEIVER_MOMENTUM)?;
        s.conditional_form = s.conditional_form.max(pair_phase_distance(got, expected_conditional(input, kind)));
        s.leakage = s.leakage.max(ident::leakage(&t.conditional_state, RECEIVER_MOMENTUM)?);
        records.push(OutcomeRecord {
            trial: None,
            protocol: None,
            kind: kind.name().to_string(),
            probability: t.probability,
            conditional: amplitudes(&t.conditional_state),
            corrected: amplitudes(&t.corrected_state),
            fidelity: t.fidelity,
        });
    }
    s.probability_sum = (sum - 1.0).abs();
    s.complement = ident::measurement_budget(&ident::total_state(&p)?)?.complement.abs();
    Ok((s, sum, records))
}

pub fn run_trial(trial: usize, input: &QubitState) -> Result<TrialResult> {
    let (d, d_rec) = run_distinguishable(input)?;
    let (i, sum, i_rec) = run_identical(input)?;
    let mut cross: f64 = 0.0;
    for kind in BellKind::ALL {
        cross = cross.max(ident::conditional_mismatch(input, kind)?);
    }
    let rows = i_rec.iter()
        .map(|o| CsvRow {
            trial,
            alpha: input.alpha(),
            beta: input.beta(),
            kind: o.kind.clone(),
            probability: o.probability,
            fidelity: o.fidelity,
        })
        .collect();
    let tag = |mut recs: Vec<OutcomeRecord>, name: &str| {
        for r in &mut recs {
            r.trial = Some(trial);
            r.protocol = Some(name.to_string());
        }
        recs
    };
    let mut outcomes = tag(d_rec, "distinguishable");
    outcomes.extend(tag(i_rec, "identical"));
    Ok(TrialResult { distinguishable: d, identical: i, cross_mismatch: cross, identical_sum: sum, outcomes, rows })
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepSummary {
    pub distinguishable: ProtocolStats,
    pub identical: ProtocolStats,
    pub cross_mismatch: f64,
    /// Identical-protocol probability sum farthest from 1.
    pub worst_sum: f64,
    pub outcomes: Vec<OutcomeRecord>,
    pub rows: Vec<CsvRow>,
}

pub fn sweep(trials: usize, seed: u64) -> Result<SweepSummary> {
    let mut out = SweepSummary { worst_sum: 1.0, ..Default::default() };
    for (k, q) in haar_inputs(trials, seed).iter().enumerate() {
        let t = run_trial(k, q)?;
        out.distinguishable.absorb(&t.distinguishable);
        out.identical.absorb(&t.identical);
        out.cross_mismatch = out.cross_mismatch.max(t.cross_mismatch);
        if (t.identical_sum - 1.0).abs() > (out.worst_sum - 1.0).abs() {
            out.worst_sum = t.identical_sum;
        }
        out.outcomes.extend(t.outcomes);
        out.rows.extend(t.rows);
    }
    Ok(out)
}

impl SweepSummary {
    pub fn checks(&self, tol: f64) -> Vec<Check> {
        let (d, i) = (&self.distinguishable, &self.identical);
        vec![
            Check::within("distinguishable: max |p - 1/4|", d.probability, tol),
            Check::within("distinguishable: max |sum p - 1|", d.probability_sum, tol),
            Check::within("distinguishable: max |1 - fidelity|", d.fidelity, tol),
            Check::within("distinguishable: max conditional form distance", d.conditional_form, tol),
            Check::within("identical: max |p - 1/4|", i.probability, tol),
            Check::within("identical: max |sum p - 1|", i.probability_sum, tol),
            Check::within("identical: max |1 - fidelity|", i.fidelity, tol),
            Check::within("identical: max conditional form distance", i.conditional_form, tol),
            Check::within("identical: max leakage outside momentum 2", i.leakage, tol),
            Check::within("identical: max non-Bell analyzer weight", i.complement, tol),
            Check::within("cross-protocol: max conditional mismatch", self.cross_mismatch, tol),
        ]
    }
}
