//! Approximants from monic orthogonal polynomials.
//!
//! The polynomials `q_0, q_1, ...` are monic and orthogonal for the form
//! `(f, g) = L(e_2 f g)`, i.e. `sum_{i,j} f_i g_j a_{i+j+2}`. With
//! `p_{i+1} = e_1 q_i` the approximant is
//!
//! ```text
//! P_n / Q_n = sum_{i=0}^{n} s_i^2 / t_i,   s_i = L(e_1 q_i),  t_i = L(e_2 q_i^2)
//! ```
//!
//! and `Q_n = t_0 t_1 ... t_n`.
//!
//! Note the index shift: `t_i` pairs coefficients with `a_{j+j'+2}` while
//! `s_i` pairs them with `a_{j+1}`. Both come from `p = e_1 q`, one factor of
//! `x` per `p`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::moments::MomentSequence;
use crate::numerics::{denominator_lcm, Rational};

/// Polynomial coefficients, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffs(Vec<Rational>);

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self(coeffs)
    }

    pub fn one() -> Self {
        Self(vec![Rational::one()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(One::is_one)
    }

    /// Integer coefficients and their common denominator.
    fn scaled(&self) -> (Vec<BigInt>, BigInt) {
        let d = denominator_lcm(&self.0);
        let ints = self.0.iter().map(|c| c.numer() * (&d / c.denom())).collect();
        (ints, d)
    }
}

/// Moments `a_0..a_max` over one common denominator: `a_i = ints[i] / denom`.
#[derive(Debug, Clone)]
struct ScaledMoments {
    ints: Vec<BigInt>,
    denom: BigInt,
}

impl ScaledMoments {
    fn new(moments: &[Rational]) -> Self {
        let denom = denominator_lcm(moments);
        let ints = moments.iter().map(|a| a.numer() * (&denom / a.denom())).collect();
        Self { ints, denom }
    }

    /// Highest moment index held.
    fn max_index(&self) -> usize {
        self.ints.len() - 1
    }

    /// `sum_{i,j} f_i g_j ints[i+j+shift]`.
    fn pair(&self, f: &[BigInt], g: &[BigInt], shift: usize) -> BigInt {
        let mut total = BigInt::zero();
        for (i, fc) in f.iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            let mut w = BigInt::zero();
            for (j, gc) in g.iter().enumerate() {
                if !gc.is_zero() {
                    w += gc * &self.ints[i + j + shift];
                }
            }
            total += fc * w;
        }
        total
    }

    /// `sum_j f_j ints[j+1]`.
    fn linear(&self, f: &[BigInt]) -> BigInt {
        f.iter()
            .enumerate()
            .map(|(j, c)| c * &self.ints[j + 1])
            .sum()
    }
}

/// `L(e_2 f g) = sum_{i,j} f_i g_j a_{i+j+2}`.
pub fn inner_product(f: &PolyCoeffs, g: &PolyCoeffs, seq: &MomentSequence) -> Result<Rational> {
    let moments = ScaledMoments::new(&seq.moments_from_zero(f.degree() + g.degree() + 2)?);
    let (fi, fd) = f.scaled();
    let (gi, gd) = g.scaled();
    Ok(Rational::new(moments.pair(&fi, &gi, 2), fd * gd * &moments.denom))
}

/// `L(e_1 f) = sum_j f_j a_{j+1}`.
pub fn linear_form(f: &PolyCoeffs, seq: &MomentSequence) -> Result<Rational> {
    let moments = ScaledMoments::new(&seq.moments_from_zero(f.degree() + 1)?);
    let (fi, fd) = f.scaled();
    Ok(Rational::new(moments.linear(&fi), fd * &moments.denom))
}

/// Incremental state of the three-term recurrence
/// `q_{m+1} = (x - alpha_m) q_m - beta_m q_{m-1}` with
/// `alpha_m = L(e_2 x q_m^2) / t_m` and `beta_m = t_m / t_{m-1}`.
///
/// The recurrence runs fraction-free. Moments are scaled to integers
/// `b_i = c a_i` and each `q_m` is held as the integer polynomial
/// `Z_m = D_m q_m`, where `D_m = prod_{i<m} c t_i` is the leading
/// `m x m` minor of `(b_{i+j+2})`. Multiplying the recurrence through gives
///
/// ```text
/// Z_{m+1} = (D_{m+1} D_m x Z_m - (x Z_m, Z_m) Z_m - D_{m+1}^2 Z_{m-1}) / D_m^2
/// D_{m+2} = (Z_{m+1}, Z_{m+1}) / D_{m+1}
/// ```
///
/// with both divisions exact, so no gcd is taken on polynomial coefficients.
#[derive(Debug, Clone)]
pub struct OrthoState {
    m: usize,
    /// `Z_{m-1}`, `Z_m`.
    z_prev: Vec<BigInt>,
    z_curr: Vec<BigInt>,
    /// `D_m`, `D_{m+1}`; both positive.
    d_curr: BigInt,
    d_next: BigInt,
    moments: ScaledMoments,
    /// `t_i = L(e_2 q_i^2) = L(p_{i+1}^2)`.
    t: Vec<Rational>,
    /// `s_i = L(e_1 q_i) = L(p_{i+1})`.
    s: Vec<Rational>,
    /// `A_0..A_m`, the approximants so far.
    sums: Vec<Rational>,
    /// All `Z_i` when validating orthogonality.
    history: Option<Vec<Vec<BigInt>>>,
}

/// Start at `q_0 = 1`: `t_0 = a_2`, `s_0 = a_1`, `A_0 = a_1^2 / a_2`.
pub fn ortho_init(seq: &MomentSequence) -> Result<OrthoState> {
    let raw = seq.moments_from_zero(2)?;
    let (a1, a2) = (raw[1].clone(), raw[2].clone());
    if !a2.is_positive() {
        return Err(Error::PositivityViolation { index: 0, value: a2 });
    }
    let moments = ScaledMoments::new(&raw);
    let sum = &a1 * &a1 / &a2;
    Ok(OrthoState {
        m: 0,
        z_prev: Vec::new(),
        z_curr: vec![BigInt::one()],
        d_curr: BigInt::one(),
        d_next: moments.ints[2].clone(),
        moments,
        t: vec![a2],
        s: vec![a1],
        sums: vec![sum],
        history: None,
    })
}

/// `Z / lead(Z)`; every `Z_i` is a positive multiple of the monic `q_i`.
fn monic(z: &[BigInt]) -> PolyCoeffs {
    match z.last() {
        Some(lead) => PolyCoeffs::new(z.iter().map(|c| Rational::new(c.clone(), lead.clone())).collect()),
        None => PolyCoeffs::new(Vec::new()),
    }
}

impl OrthoState {
    /// Check `L(e_2 q_{m+1} q_j) = 0` for every earlier `j` on each step.
    pub fn with_validation(mut self) -> Self {
        if self.history.is_none() {
            assert_eq!(self.m, 0, "validation must be enabled before stepping");
            self.history = Some(vec![self.z_curr.clone()]);
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// `q_{m-1}` (the zero polynomial at degree 0).
    pub fn q_prev(&self) -> PolyCoeffs {
        monic(&self.z_prev)
    }

    /// `q_m`.
    pub fn q_curr(&self) -> PolyCoeffs {
        monic(&self.z_curr)
    }

    pub fn norms(&self) -> &[Rational] {
        &self.t
    }

    pub fn numerators(&self) -> &[Rational] {
        &self.s
    }

    /// `A_m = P_m / Q_m`.
    pub fn partial_sum(&self) -> &Rational {
        self.sums.last().expect("at least A_0")
    }

    /// `A_0..A_m`.
    pub fn partial_sums(&self) -> &[Rational] {
        &self.sums
    }

    /// `t_0 t_1 ... t_m`, which equals `Q_m`.
    pub fn norm_product(&self) -> Rational {
        Rational::new(
            self.d_next.clone(),
            self.moments.denom.pow(self.m as u32 + 1),
        )
    }

    /// Make moments through `a_{2 n_max + 2}` available up front, so a run
    /// to degree `n_max` scales the moments once.
    pub fn reserve(&mut self, seq: &MomentSequence, n_max: usize) -> Result<()> {
        self.rescale(seq, 2 * n_max + 2)
    }

    fn rescale(&mut self, seq: &MomentSequence, max_index: usize) -> Result<()> {
        if self.moments.max_index() >= max_index {
            return Ok(());
        }
        let moments = ScaledMoments::new(&seq.moments_from_zero(max_index)?);
        // The new common denominator is a multiple of the old one; Z_i and
        // D_i are homogeneous of degree i in the scaled moments.
        let r = &moments.denom / &self.moments.denom;
        if !r.is_one() {
            let m = self.m as u32;
            let r_m = r.pow(m);
            let r_prev = if m > 0 { r.pow(m - 1) } else { BigInt::one() };
            self.z_curr.iter_mut().for_each(|c| *c *= &r_m);
            self.z_prev.iter_mut().for_each(|c| *c *= &r_prev);
            self.d_curr *= &r_m;
            self.d_next *= &r_m * &r;
        }
        self.moments = moments;
        Ok(())
    }

    /// Advance from degree `m` to `m + 1`.
    ///
    /// On failure the state is left at degree `m`, so the approximants
    /// computed so far remain available.
    pub fn step(&mut self, seq: &MomentSequence) -> Result<()> {
        let m = self.m;
        self.rescale(seq, 2 * m + 4)?;
        let mom = &self.moments;

        let xz = mom.pair(&self.z_curr, &self.z_curr, 3);
        let lead = &self.d_next * &self.d_curr;
        let beta = &self.d_next * &self.d_next;
        let divisor = &self.d_curr * &self.d_curr;

        let mut z_next = vec![BigInt::zero(); m + 2];
        for (j, c) in self.z_curr.iter().enumerate() {
            z_next[j + 1] += &lead * c;
            z_next[j] -= &xz * c;
        }
        for (j, c) in self.z_prev.iter().enumerate() {
            z_next[j] -= &beta * c;
        }
        for c in &mut z_next {
            debug_assert!((&*c % &divisor).is_zero());
            *c /= &divisor;
        }

        if let Some(history) = &self.history {
            for (j, z) in history.iter().enumerate() {
                let value = mom.pair(&z_next, z, 2);
                if !value.is_zero() {
                    return Err(Error::OrthogonalityViolation {
                        i: m + 1,
                        j,
                        value: Rational::from_integer(value),
                    });
                }
            }
        }

        let norm = mom.pair(&z_next, &z_next, 2);
        debug_assert!((&norm % &self.d_next).is_zero());
        let d_after = norm / &self.d_next;
        let scale = &self.d_next * &mom.denom;
        if !d_after.is_positive() {
            return Err(Error::PositivityViolation {
                index: m + 1,
                value: Rational::new(d_after, scale),
            });
        }
        let lambda = mom.linear(&z_next);
        let t_next = Rational::new(d_after.clone(), scale.clone());
        let s_next = Rational::new(lambda.clone(), scale);
        let term = Rational::new(&lambda * &lambda, &self.d_next * &d_after * &mom.denom);
        let sum = self.partial_sum() + term;

        if let Some(history) = &mut self.history {
            history.push(z_next.clone());
        }
        self.z_prev = std::mem::replace(&mut self.z_curr, z_next);
        self.d_curr = std::mem::replace(&mut self.d_next, d_after);
        self.t.push(t_next);
        self.s.push(s_next);
        self.sums.push(sum);
        self.m = m + 1;
        Ok(())
    }
}

/// Functional form of [`OrthoState::step`].
pub fn ortho_step(mut state: OrthoState, seq: &MomentSequence) -> Result<OrthoState> {
    state.step(seq)?;
    Ok(state)
}

/// Run from `ortho_init` up to degree `n_max`, stopping at the first failure.
/// The returned state holds every approximant computed before the failure.
pub fn ortho_run(seq: &MomentSequence, n_max: usize) -> Result<(OrthoState, Option<Error>)> {
    let mut state = ortho_init(seq)?;
    // Custom sequences may not reach a_{2 n_max + 2}; let the step that
    // actually needs the missing moment report it.
    if seq.available().is_none_or(|have| have >= 2 * n_max + 2) {
        state.reserve(seq, n_max)?;
    }
    while state.degree() < n_max {
        if let Err(e) = state.step(seq) {
            return Ok((state, Some(e)));
        }
    }
    Ok((state, None))
}

/// `P_n / Q_n = sum_{i=1}^{n+1} L(p_i)^2 / L(p_i^2)`.
pub fn approximant_ortho(seq: &MomentSequence, n: usize) -> Result<Rational> {
    match ortho_run(seq, n)? {
        (state, None) => Ok(state.partial_sum().clone()),
        (_, Some(e)) => Err(e),
    }
}

/// `q_0..q_{count-1}`, checking orthogonality along the way.
pub fn orthogonal_polys(seq: &MomentSequence, count: usize) -> Result<Vec<PolyCoeffs>> {
    let mut state = ortho_init(seq)?.with_validation();
    while state.degree() + 1 < count {
        state.step(seq)?;
    }
    let history = state.history.take().expect("validation enabled");
    Ok(history.iter().take(count).map(|z| monic(z)).collect())
}
