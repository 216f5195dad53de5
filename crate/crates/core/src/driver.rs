//! Convergence runs and cross-checks of the two engines.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hankel::hankel_pq;
use crate::moments::{load_moments, MomentKind, MomentSequence, ReferenceConstant};
use crate::numerics::{harmonic, rat_to_decimal, DecimalString, Rational, RoundingMode};
use crate::ortho::{ortho_init, ortho_run, OrthoState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Gamma,
    Gompertz,
    Zeta,
    Factorial,
    Custom,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gamma" => Family::Gamma,
            "gompertz" => Family::Gompertz,
            "zeta" => Family::Zeta,
            "factorial" => Family::Factorial,
            "custom" => Family::Custom,
            other => return Err(Error::invalid(format!("unknown family {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Det,
    Ortho,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Ortho => "ortho",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "det" => Method::Det,
            "ortho" => Method::Ortho,
            "both" => Method::Both,
            other => return Err(Error::invalid(format!("unknown method {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "table" => OutputFormat::Table,
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => return Err(Error::invalid(format!("unknown format {other:?}"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    /// Zeta argument; ignored for other families.
    pub k: u32,
    pub n_max: usize,
    /// `None` picks `both` for built-in families and `ortho` for custom ones.
    pub method: Option<Method>,
    pub digits: usize,
    pub format: OutputFormat,
    pub exact: bool,
    pub moments_file: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(family: Family, n_max: usize) -> Self {
        Self {
            family,
            k: 2,
            n_max,
            method: None,
            digits: 10,
            format: OutputFormat::Table,
            exact: false,
            moments_file: None,
            out: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.family == Family::Zeta && self.k < 2 {
            return Err(Error::invalid(format!("zeta family needs k >= 2, got {}", self.k)));
        }
        if self.family == Family::Custom && self.moments_file.is_none() {
            return Err(Error::invalid("custom family needs a moments file"));
        }
        if self.digits == 0 {
            return Err(Error::invalid("digits must be at least 1"));
        }
        Ok(())
    }

    pub fn method(&self) -> Method {
        self.method.unwrap_or(match self.family {
            Family::Custom => Method::Ortho,
            _ => Method::Both,
        })
    }

    pub fn sequence(&self) -> Result<MomentSequence> {
        self.validate()?;
        sequence_for(self.family, self.k, self.moments_file.as_deref())
    }
}

pub fn sequence_for(
    family: Family,
    k: u32,
    moments_file: Option<&std::path::Path>,
) -> Result<MomentSequence> {
    match family {
        Family::Gamma => Ok(MomentSequence::gamma()),
        Family::Gompertz => Ok(MomentSequence::gompertz()),
        Family::Zeta => MomentSequence::zeta(k),
        Family::Factorial => Ok(MomentSequence::factorial()),
        Family::Custom => match moments_file {
            Some(path) => load_moments(path),
            None => Err(Error::invalid("custom family needs a moments file")),
        },
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximantRecord {
    pub n: usize,
    pub p: Rational,
    pub q: Rational,
    /// `p / q`.
    pub value: Rational,
    pub decimal: DecimalString,
    /// `reference - value`, with the reference decimal read exactly.
    pub reference_gap: Option<Rational>,
    pub method: Method,
}

impl ApproximantRecord {
    pub fn new(
        n: usize,
        p: Rational,
        q: Rational,
        digits: usize,
        reference: Option<&ReferenceConstant>,
        method: Method,
    ) -> Result<Self> {
        let value = &p / &q;
        let decimal = rat_to_decimal(&value, digits, RoundingMode::RoundHalfAway)?;
        let mut record = Self {
            n,
            p,
            q,
            value,
            decimal,
            reference_gap: None,
            method,
        };
        record.reference_gap = reference.map(|r| compare_reference(&record, r));
        Ok(record)
    }
}

/// `reference - value`; positive whenever the approximant lies below the constant.
pub fn compare_reference(record: &ApproximantRecord, reference: &ReferenceConstant) -> Rational {
    reference.value() - &record.value
}

/// Records for `n = 0..` in order, plus the failure that cut the run short, if any.
#[derive(Debug)]
pub struct RunOutcome {
    pub records: Vec<ApproximantRecord>,
    pub failure: Option<Error>,
}

pub fn run_convergence(config: &RunConfig) -> Result<RunOutcome> {
    let seq = config.sequence()?;
    run_sequence(&seq, config.n_max, config.method(), config.digits)
}

/// `(P_n, Q_n)` for `n = 0..=n_max` from the determinant path, evaluated in
/// parallel. Entries stop at the first failing index.
fn det_values(seq: &MomentSequence, n_max: usize) -> (Vec<(Rational, Rational)>, Option<Error>) {
    let mut results: Vec<Result<(Rational, Rational)>> = (0..=n_max)
        .into_par_iter()
        .map(|n| hankel_pq(seq, n))
        .collect();
    match results.iter().position(Result::is_err) {
        Some(bad) => {
            let err = results.swap_remove(bad).unwrap_err();
            results.truncate(bad);
            (results.into_iter().map(Result::unwrap).collect(), Some(err))
        }
        None => (results.into_iter().map(Result::unwrap).collect(), None),
    }
}

/// `(P_n, Q_n)` for `n = 0..=degree` from an orthogonal-polynomial run,
/// with `Q_n = t_0 ... t_n` and `P_n = A_n Q_n`.
fn ortho_values(state: &OrthoState) -> Vec<(Rational, Rational)> {
    let mut q = Rational::one();
    state
        .norms()
        .iter()
        .zip(state.partial_sums())
        .map(|(t, a)| {
            q *= t;
            (a * &q, q.clone())
        })
        .collect()
}

/// Run one sequence to `n_max` with the given method.
pub fn run_sequence(
    seq: &MomentSequence,
    n_max: usize,
    method: Method,
    digits: usize,
) -> Result<RunOutcome> {
    if digits == 0 {
        return Err(Error::invalid("digits must be at least 1"));
    }
    let (values, failure) = match method {
        Method::Det => det_values(seq, n_max),
        Method::Ortho => ortho_pairs(seq, n_max),
        Method::Both => {
            let (ortho, ortho_failure) = ortho_pairs(seq, n_max);
            let reach = ortho.len().saturating_sub(1);
            let (det, det_failure) = if ortho.is_empty() {
                (Vec::new(), None)
            } else {
                det_values(seq, reach)
            };
            let mut failure = ortho_failure.or(det_failure);
            let mut agreed = Vec::with_capacity(det.len());
            for (n, (d, o)) in det.into_iter().zip(ortho).enumerate() {
                let det_value = &d.0 / &d.1;
                let ortho_value = &o.0 / &o.1;
                if det_value != ortho_value {
                    failure = Some(Error::EngineMismatch {
                        n,
                        det: Box::new(det_value),
                        ortho: Box::new(ortho_value),
                    });
                    break;
                }
                agreed.push(d);
            }
            (agreed, failure)
        }
    };

    let records = values
        .into_iter()
        .enumerate()
        .map(|(n, (p, q))| ApproximantRecord::new(n, p, q, digits, seq.reference(), method))
        .collect::<Result<Vec<_>>>()?;
    Ok(RunOutcome { records, failure })
}

fn ortho_pairs(seq: &MomentSequence, n_max: usize) -> (Vec<(Rational, Rational)>, Option<Error>) {
    match ortho_run(seq, n_max) {
        Ok((state, failure)) => (ortho_values(&state), failure),
        Err(e) => (Vec::new(), Some(e)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct ValidationReport {
    pub sequence: String,
    pub n_max: usize,
    pub checks: Vec<Check>,
    /// Set when the sequence stopped being positive definite before `n_max`.
    pub positivity: Option<Error>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.positivity.is_none() && self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: &str, failure: Option<String>, ok_detail: String) {
        self.checks.push(Check {
            name: name.to_owned(),
            passed: failure.is_none(),
            detail: failure.unwrap_or(ok_detail),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "validation of {} for n = 0..={}", self.sequence, self.n_max)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        if let Some(e) = &self.positivity {
            writeln!(f, "FAIL positive definiteness: {e}")?;
        }
        Ok(())
    }
}

fn first_failure(range: impl IntoIterator<Item = usize>, mut ok: impl FnMut(usize) -> bool) -> Option<usize> {
    range.into_iter().find(|&n| !ok(n))
}

/// How many orthogonal polynomials the orthogonality check covers.
const ORTHOGONALITY_DEGREES: usize = 12;

/// Check the determinant path against the orthogonal-polynomial identities.
pub fn cross_validate(seq: &MomentSequence, n_max: usize) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        sequence: seq.kind().to_string(),
        n_max,
        checks: Vec::new(),
        positivity: None,
    };

    let (state, failure) = match ortho_run(seq, n_max) {
        Ok(run) => run,
        Err(e @ Error::PositivityViolation { .. }) => {
            report.positivity = Some(e);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    match failure {
        Some(e @ Error::PositivityViolation { .. }) => report.positivity = Some(e),
        Some(e) => return Err(e),
        None => {}
    }
    let reach = state.degree();
    let (det, det_failure) = det_values(seq, reach);
    if let Some(e) = det_failure {
        match e {
            Error::NonPositiveQ { .. } => {
                report.positivity.get_or_insert(e);
            }
            other => return Err(other),
        }
    }
    let ortho = ortho_values(&state);
    let det_ratios: Vec<Rational> = det.iter().map(|(p, q)| p / q).collect();
    let range = format!("n = 0..={}", det.len().saturating_sub(1));

    report.check(
        "engines agree",
        first_failure(0..det.len(), |n| det_ratios[n] == state.partial_sums()[n])
            .map(|n| format!("P_{n}/Q_{n} = {} from determinants, {} from polynomials", det_ratios[n], state.partial_sums()[n])),
        range.clone(),
    );
    report.check(
        "Q_n = t_0 ... t_n",
        first_failure(0..det.len(), |n| det[n].1 == ortho[n].1)
            .map(|n| format!("n = {n}: Q = {}, product = {}", det[n].1, ortho[n].1)),
        range.clone(),
    );
    report.check(
        "Q_n > 0",
        first_failure(0..det.len(), |n| det[n].1.is_positive())
            .map(|n| format!("Q_{n} = {}", det[n].1)),
        range.clone(),
    );
    report.check(
        "P_n/Q_n nondecreasing",
        first_failure(1..det.len(), |n| det_ratios[n] >= det_ratios[n - 1])
            .map(|n| format!("P_{n}/Q_{n} < P_{}/Q_{}", n - 1, n - 1)),
        range.clone(),
    );
    let a = seq.moments(2)?;
    let first = &a[0] * &a[0] / &a[1];
    report.check(
        "P_0/Q_0 = a_1^2/a_2",
        det_ratios
            .first()
            .filter(|v| **v != first)
            .map(|v| format!("{v} != {first}")),
        format!("{first}"),
    );

    if let Some(reference) = seq.reference() {
        let bound = reference.value();
        report.check(
            "P_n/Q_n < reference",
            first_failure(0..det.len(), |n| det_ratios[n] < bound)
                .map(|n| format!("P_{n}/Q_{n} >= {}", reference.decimal)),
            format!("{} = {}, {range}", reference.name, reference.decimal),
        );
    }

    if seq.kind() == MomentKind::Factorial {
        report.check(
            "P_n/Q_n = H_(n+1)",
            first_failure(0..det.len(), |n| {
                harmonic(n as u64 + 1).is_ok_and(|h| h == det_ratios[n])
            })
            .map(|n| format!("n = {n}")),
            range.clone(),
        );
        report.check(
            "P_n > 0",
            first_failure(0..det.len(), |n| det[n].0.is_positive())
                .map(|n| format!("P_{n} = {}", det[n].0)),
            range.clone(),
        );
    }

    let degrees = (reach + 1).min(ORTHOGONALITY_DEGREES + 1);
    let mut validated = ortho_init(seq)?.with_validation();
    let mut orth_failure = None;
    while validated.degree() + 1 < degrees {
        if let Err(e) = validated.step(seq) {
            orth_failure = Some(e.to_string());
            break;
        }
    }
    report.check(
        "L(e_2 q_i q_j) = 0 for i != j",
        orth_failure,
        format!("q_0..q_{}", degrees - 1),
    );

    Ok(report)
}
