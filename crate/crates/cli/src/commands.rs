//! Command dispatch: each command builds a [`TeleportReport`].

use std::path::PathBuf;

use symtele_core::{
    distinguishable as dist,
    identical::{self as ident, PolarizationState, RegroupingVariant, INPUT_MOMENTUM},
    symmetric::{occupation_basis, sym_dimension, ModeSet, ModeLabel},
    tensor::{gram, LinearOperator},
    BellKind, QubitState, C64, TOL,
};

use crate::{
    report::{CsvRow, Format, InputRecord, Table, TeleportReport, Check},
    sweep,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Dims,
    TeleportDistinguishable,
    TeleportIdentical,
    Sweep,
    Verify,
    Impossibility,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<(C64, C64)>,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

/// Used when no `--alpha/--beta` pair is given.
pub const DEFAULT_INPUT: (C64, C64) = (C64::new(0.6, 0.0), C64::new(0.0, 0.8));

/// Random inputs used by the oracle and regrouping checks in `verify`.
pub const ORACLE_INPUTS: usize = 20;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] symtele_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl RunConfig {
    pub fn qubit(&self) -> Result<QubitState, CliError> {
        let (a, b) = self.input.unwrap_or(DEFAULT_INPUT);
        QubitState::normalized(a, b).map_err(|e| CliError::Usage(format!("invalid input state: {e}")))
    }
}

pub fn build_report(cfg: &RunConfig) -> Result<TeleportReport, CliError> {
    if cfg.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    Ok(match cfg.command {
        Command::Dims => dims(),
        Command::Impossibility => impossibility()?,
        Command::TeleportDistinguishable => teleport_distinguishable(&cfg.qubit()?)?,
        Command::TeleportIdentical => teleport_identical(&cfg.qubit()?)?,
        Command::Sweep => sweep_report(cfg.trials, cfg.seed)?,
        Command::Verify => verify(cfg.trials, cfg.seed)?,
    })
}

fn count_check(name: String, got: u64, want: u64) -> Check {
    Check::within(name, got.abs_diff(want) as f64, 0.0)
}

fn dims_checks() -> Vec<Check> {
    let mut checks: Vec<Check> = [(2u64, 2u64, 3u64), (4, 2, 10), (6, 3, 56)].iter()
        .map(|&(m, n, d)| count_check(format!("dim Sym^{n} over {m} modes = {d}"), sym_dimension(m, n), d))
        .collect();
    for m in 1..=ModeLabel::ALL.len() {
        let modes = ModeSet::new(ModeLabel::ALL[..m].iter().copied()).expect("nonempty prefix");
        for n in 1..=3 {
            let enumerated = occupation_basis(&modes, n).map_or(0, |b| b.len() as u64);
            checks.push(count_check(
                format!("enumerated basis size ({m} modes, {n} photons)"),
                enumerated,
                sym_dimension(m as u64, n as u64),
            ));
        }
    }
    checks
}

pub fn dims() -> TeleportReport {
    let mut r = TeleportReport::new("dims", InputRecord::None {});
    r.table = Some(Table {
        columns: ["modes", "photons", "dimension"].map(String::from).to_vec(),
        rows: [(2u64, 2u64), (4, 2), (6, 3)].iter()
            .map(|&(m, n)| vec![m.to_string(), n.to_string(), sym_dimension(m, n).to_string()])
            .collect(),
    });
    r.checks = dims_checks();
    r
}

fn impossibility_checks(rep: &ident::ImpossibilityReport) -> Vec<Check> {
    vec![
        count_check("dim Sym^2 over {1H,1V} = 3".into(), rep.dimension as u64, 3),
        Check::within("Gram rank of Bell candidates over {1H,1V} <= 3", rep.gram_rank.saturating_sub(3) as f64, 0.0),
        count_check("dim Sym^2 over {1H,1V,3H,3V} = 10".into(), rep.contrast_dimension as u64, 10),
        count_check("Gram rank of symmetrized Bell states = 4".into(), rep.contrast_gram_rank as u64, 4),
    ]
}

pub fn impossibility() -> Result<TeleportReport, CliError> {
    let rep = ident::impossibility_demo()?;
    let mut r = TeleportReport::new("impossibility", InputRecord::None {});
    r.table = Some(Table {
        columns: ["modes", "sym2_dimension", "bell_gram_rank"].map(String::from).to_vec(),
        rows: vec![
            vec!["1H,1V".into(), rep.dimension.to_string(), rep.gram_rank.to_string()],
            vec!["1H,1V,3H,3V".into(), rep.contrast_dimension.to_string(), rep.contrast_gram_rank.to_string()],
        ],
    });
    r.checks = impossibility_checks(&rep);
    Ok(r)
}

fn single_rows(q: &QubitState, outcomes: &[crate::report::OutcomeRecord]) -> Vec<CsvRow> {
    outcomes.iter()
        .map(|o| CsvRow {
            trial: 0,
            alpha: q.alpha(),
            beta: q.beta(),
            kind: o.kind.clone(),
            probability: o.probability,
            fidelity: o.fidelity,
        })
        .collect()
}

pub fn teleport_distinguishable(q: &QubitState) -> Result<TeleportReport, CliError> {
    let (s, outcomes) = sweep::run_distinguishable(q)?;
    let mut r = TeleportReport::new("distinguishable", InputRecord::state(q.alpha(), q.beta()));
    r.probability_sum = Some(outcomes.iter().map(|o| o.probability).sum());
    r.csv_rows = single_rows(q, &outcomes);
    r.outcomes = outcomes;
    r.checks = vec![
        Check::within("max |p - 1/4|", s.probability, TOL),
        Check::within("|sum p - 1|", s.probability_sum, TOL),
        Check::within("max |1 - fidelity|", s.fidelity, TOL),
        Check::within("max conditional form distance", s.conditional_form, TOL),
    ];
    Ok(r)
}

pub fn teleport_identical(q: &QubitState) -> Result<TeleportReport, CliError> {
    let (s, sum, outcomes) = sweep::run_identical(q)?;
    let mut cross: f64 = 0.0;
    for kind in BellKind::ALL {
        cross = cross.max(ident::conditional_mismatch(q, kind)?);
    }
    let mut r = TeleportReport::new("identical", InputRecord::state(q.alpha(), q.beta()));
    r.probability_sum = Some(sum);
    r.csv_rows = single_rows(q, &outcomes);
    r.outcomes = outcomes;
    r.checks = vec![
        Check::within("max |p - 1/4|", s.probability, TOL),
        Check::within("|sum p - 1|", s.probability_sum, TOL),
        Check::within("max |1 - fidelity|", s.fidelity, TOL),
        Check::within("max conditional form distance", s.conditional_form, TOL),
        Check::within("max leakage outside momentum 2", s.leakage, TOL),
        Check::within("non-Bell analyzer weight", s.complement, TOL),
        Check::within("max mismatch vs distinguishable protocol", cross, TOL),
    ];
    Ok(r)
}

pub fn sweep_report(trials: usize, seed: u64) -> Result<TeleportReport, CliError> {
    let s = sweep::sweep(trials, seed)?;
    let mut r = TeleportReport::new("sweep", InputRecord::Sweep { trials, seed });
    r.probability_sum = Some(s.worst_sum);
    r.checks = s.checks(TOL);
    r.outcomes = s.outcomes;
    r.csv_rows = s.rows;
    Ok(r)
}

fn bell_basis_checks() -> Result<Vec<Check>, CliError> {
    let vectors: Vec<_> = BellKind::ALL.iter().map(|&k| ident::sym_bell(k).vector).collect();
    let g = gram(&vectors)?;
    let gram_residual = g.max_abs_diff(&LinearOperator::identity(g.basis_in().clone()))?;
    let complement = ident::bell_complement();
    let mut sum = complement.clone();
    for k in BellKind::ALL {
        sum = sum.add(&ident::bell_projector(k))?;
    }
    let identity = LinearOperator::identity(complement.basis_in().clone());
    let dist_vectors = BellKind::ALL.iter()
        .map(|&k| dist::bell_state(k, dist::MEASURED_PAIR))
        .collect::<Result<Vec<_>, _>>()?;
    let dg = gram(&dist_vectors)?;
    Ok(vec![
        Check::within("distinguishable Bell Gram = I4", dg.max_abs_diff(&LinearOperator::identity(dg.basis_in().clone()))?, TOL),
        Check::within("symmetrized Bell Gram = I4", gram_residual, TOL),
        count_check("complement projector rank = 6".into(), ident::bell_complement_rank() as u64, 6),
        Check::within("complement projector idempotence", complement.projector_residual(), TOL),
        Check::within("Bell projectors + complement = I10", sum.max_abs_diff(&identity)?, TOL),
    ])
}

fn oracle_checks(seed: u64) -> Result<Vec<Check>, CliError> {
    let mut oracle: f64 = 0.0;
    let mut corrected: f64 = 0.0;
    let mut verbatim: f64 = 0.0;
    for q in sweep::haar_inputs(ORACLE_INPUTS, seed) {
        let p = PolarizationState::from_qubit(&q, INPUT_MOMENTUM)?;
        let direct = ident::total_state(&p)?;
        oracle = oracle.max(ident::first_quantized_total_state(&p)?.distance(&direct)?);
        corrected = corrected.max(ident::regrouping_identity_check(&p, RegroupingVariant::Corrected)?.residual);
        verbatim = verbatim.max(ident::regrouping_identity_check(&p, RegroupingVariant::Verbatim)?.residual);
    }
    Ok(vec![
        Check::within("occupation vs first-quantized total state", oracle, TOL),
        Check::within("regrouping reconstruction (corrected)", corrected, TOL),
        Check::info("regrouping reconstruction (verbatim)", verbatim),
    ])
}

pub fn verify(trials: usize, seed: u64) -> Result<TeleportReport, CliError> {
    let s = sweep::sweep(trials, seed)?;
    let mut r = TeleportReport::new("verify", InputRecord::Sweep { trials, seed });
    r.probability_sum = Some(s.worst_sum);
    r.checks = dims_checks();
    r.checks.extend(bell_basis_checks()?);
    r.checks.extend(oracle_checks(seed)?);
    r.checks.extend(impossibility_checks(&ident::impossibility_demo()?));
    r.checks.extend(s.checks(TOL));
    Ok(r)
}

pub fn render(report: &TeleportReport, format: Format) -> String { report.render(format) }

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command) -> RunConfig {
        RunConfig { command, input: None, trials: 3, seed: 42, format: Format::Json, output: None }
    }

    #[test]
    fn every_command_passes() {
        for c in [
            Command::Dims,
            Command::TeleportDistinguishable,
            Command::TeleportIdentical,
            Command::Sweep,
            Command::Verify,
            Command::Impossibility,
        ] {
            let r = build_report(&cfg(c)).unwrap();
            assert!(r.passed(), "{c:?}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn dims_table_rows() {
        let t = dims().table.unwrap();
        assert_eq!(t.rows, vec![vec!["2", "2", "3"], vec!["4", "2", "10"], vec!["6", "3", "56"]]);
    }

    #[test]
    fn unnormalized_input_is_normalized() {
        let mut c = cfg(Command::TeleportIdentical);
        c.input = Some((C64::new(3.0, 0.0), C64::new(4.0, 0.0)));
        let r = build_report(&c).unwrap();
        assert_eq!(r.input, InputRecord::state(C64::new(0.6, 0.0), C64::new(0.8, 0.0)));
    }

    #[test]
    fn zero_trials_and_null_input_are_usage_errors() {
        let mut c = cfg(Command::Sweep);
        c.trials = 0;
        assert!(matches!(build_report(&c), Err(CliError::Usage(_))));
        let mut c = cfg(Command::TeleportDistinguishable);
        c.input = Some((C64::new(0.0, 0.0), C64::new(0.0, 0.0)));
        assert!(matches!(build_report(&c), Err(CliError::Usage(_))));
    }
}
