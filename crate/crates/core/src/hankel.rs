//! Hankel matrices of a moment sequence and exact determinants.
//!
//! `P_n = -det(a_{i+j})_{i,j=0}^{n+1}` with `a_0 = 0`, and
//! `Q_n = det(a_{i+j+2})_{i,j=0}^{n}`. Determinants are evaluated by Bareiss
//! fraction-free elimination over the integers after clearing row denominators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::moments::MomentSequence;
use crate::numerics::{denominator_lcm, Rational};

/// Dense row-major square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<T = Rational> {
    order: usize,
    entries: Vec<T>,
}

pub type IntMatrix = SquareMatrix<BigInt>;

impl<T> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::invalid("matrix rows must all have length equal to the row count"));
        }
        Ok(Self {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        // chunks_exact(0) panics, and a 0x0 matrix has no rows anyway.
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> SquareMatrix<T> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }
}

impl<T: PartialEq> SquareMatrix<T> {
    /// Entries depend only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (1..n).all(|j| i + 1 >= n || self.get(i, j) == self.get(i + 1, j - 1)))
    }
}

impl SquareMatrix<Rational> {
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// The integer matrix, if every entry is an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.is_integral()
            .then(|| self.map(|e| e.to_integer()))
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetResult {
    pub value: BigInt,
    pub pivot_swaps: usize,
}

/// Bareiss one-step fraction-free elimination.
///
/// After step `k` every remaining entry is a `(k+2) x (k+2)` minor of the
/// input, so each division by the previous pivot is exact. A zero pivot is
/// replaced by the first nonzero entry below it; a zero column means det = 0.
pub fn det_fraction_free(m: &IntMatrix) -> DetResult {
    let n = m.order();
    if n == 0 {
        return DetResult {
            value: BigInt::one(),
            pivot_swaps: 0,
        };
    }
    let mut a: Vec<Vec<BigInt>> = m.rows().map(<[BigInt]>::to_vec).collect();
    let mut swaps = 0;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    swaps += 1;
                }
                None => {
                    return DetResult {
                        value: BigInt::zero(),
                        pivot_swaps: swaps,
                    }
                }
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }

    let mut value = a[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        value = -value;
    }
    DetResult {
        value,
        pivot_swaps: swaps,
    }
}

/// Exact determinant of a rational matrix: scale row `i` by the lcm `L_i` of
/// its denominators, take the integer determinant, divide by `prod L_i`.
pub fn det_rational(m: &SquareMatrix<Rational>) -> Rational {
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(m.order());
    for row in m.rows() {
        let l = denominator_lcm(row);
        rows.push(
            row.iter()
                .map(|e| e.numer() * (&l / e.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= l;
    }
    let ints = IntMatrix::from_rows(rows).expect("square by construction");
    Rational::new(det_fraction_free(&ints).value, scale)
}

/// Determinant of a matrix that is diagonal apart from its first row and column:
/// `(prod_{i>=1} a_ii) * (a_00 - sum_{i>=1} a_i0 a_0i / a_ii)`.
pub fn arrow_det(m: &SquareMatrix<Rational>) -> Result<Rational> {
    let n = m.order();
    if n == 0 {
        return Ok(Rational::one());
    }
    for i in 1..n {
        for j in 1..n {
            if i != j && !m.get(i, j).is_zero() {
                return Err(Error::ArrowShapeViolation { row: i, col: j });
            }
        }
        if m.get(i, i).is_zero() {
            return Err(Error::ZeroDiagonal(i));
        }
    }
    let mut product = Rational::one();
    let mut bracket = m.get(0, 0).clone();
    for i in 1..n {
        let d = m.get(i, i);
        product *= d;
        bracket -= m.get(i, 0) * m.get(0, i) / d;
    }
    Ok(product * bracket)
}

/// `(a_{i+j})_{i,j=0}^{n+1}` with `a_0 = 0`.
pub fn build_p_matrix(seq: &MomentSequence, n: usize) -> Result<SquareMatrix<Rational>> {
    let a = seq.moments_from_zero(2 * n + 2)?;
    Ok(SquareMatrix::from_fn(n + 2, |i, j| a[i + j].clone()))
}

/// `(a_{i+j+2})_{i,j=0}^{n}`.
pub fn build_q_matrix(seq: &MomentSequence, n: usize) -> Result<SquareMatrix<Rational>> {
    let a = seq.moments_from_zero(2 * n + 2)?;
    Ok(SquareMatrix::from_fn(n + 1, |i, j| a[i + j + 2].clone()))
}

/// `P_n = -det(a_{i+j})_{i,j=0}^{n+1}`.
pub fn hankel_p(seq: &MomentSequence, n: usize) -> Result<Rational> {
    Ok(-det_rational(&build_p_matrix(seq, n)?))
}

/// `Q_n = det(a_{i+j+2})_{i,j=0}^{n}`; fails with [`Error::NonPositiveQ`] if `Q_n <= 0`.
pub fn hankel_q(seq: &MomentSequence, n: usize) -> Result<Rational> {
    let q = det_rational(&build_q_matrix(seq, n)?);
    if !q.is_positive() {
        return Err(Error::NonPositiveQ { n, value: q });
    }
    Ok(q)
}

/// `(P_n, Q_n)` from one batch of moments.
pub fn hankel_pq(seq: &MomentSequence, n: usize) -> Result<(Rational, Rational)> {
    Ok((hankel_p(seq, n)?, hankel_q(seq, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integer, make_rational};

    fn rat(n: i64, d: i64) -> Rational {
        make_rational(n, d).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rats(rows: &[&[(i64, i64)]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn int_rats(rows: &[&[i64]]) -> SquareMatrix {
        ints(rows).map(|v| integer(v.clone()))
    }

    #[test]
    fn p_and_q_matrices() {
        let g = MomentSequence::gompertz();
        assert_eq!(build_p_matrix(&g, 0).unwrap(), int_rats(&[&[0, 1], &[1, 2]]));
        assert_eq!(
            build_p_matrix(&g, 1).unwrap(),
            int_rats(&[&[0, 1, 2], &[1, 2, 5], &[2, 5, 16]])
        );
        assert_eq!(
            build_p_matrix(&MomentSequence::factorial(), 0).unwrap(),
            int_rats(&[&[0, 1], &[1, 1]])
        );
        assert_eq!(build_q_matrix(&g, 0).unwrap(), int_rats(&[&[2]]));
        assert_eq!(build_q_matrix(&g, 1).unwrap(), int_rats(&[&[2, 5], &[5, 16]]));
        assert_eq!(
            build_q_matrix(&MomentSequence::zeta(2).unwrap(), 0).unwrap(),
            rats(&[&[(3, 4)]])
        );
        let p = build_p_matrix(&MomentSequence::gamma(), 6).unwrap();
        assert!(p.is_hankel());
        assert_eq!(p, p.transpose());
    }

    #[test]
    fn builders_propagate_missing_moments() {
        let seq = MomentSequence::custom("short", vec![rat(1, 1), rat(2, 1), rat(5, 1)], None);
        assert!(build_q_matrix(&seq, 0).is_ok());
        assert!(matches!(
            build_p_matrix(&seq, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn fraction_free_examples() {
        let id = ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(det_fraction_free(&id).value, BigInt::from(1));
        let p = det_fraction_free(&ints(&[&[0, 1, 2], &[1, 2, 5], &[2, 5, 16]]));
        assert_eq!(p.value, BigInt::from(-4));
        assert_eq!(p.pivot_swaps, 1);
        assert_eq!(det_fraction_free(&ints(&[&[2, 5], &[5, 16]])).value, BigInt::from(7));
    }

    #[test]
    fn fraction_free_singular_and_degenerate() {
        assert_eq!(det_fraction_free(&ints(&[&[0, 1], &[0, 2]])).value, BigInt::zero());
        assert_eq!(det_fraction_free(&ints(&[&[1, 2], &[2, 4]])).value, BigInt::zero());
        assert_eq!(det_fraction_free(&ints(&[&[-3]])).value, BigInt::from(-3));
        assert_eq!(det_fraction_free(&IntMatrix::from_fn(0, |_, _| BigInt::zero())).value, BigInt::one());
        // Zero pivot in a later column.
        let m = ints(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]);
        assert_eq!(det_fraction_free(&m).value, BigInt::from(-1));
    }

    #[test]
    fn rational_examples() {
        assert_eq!(det_rational(&rats(&[&[(3, 4)]])), rat(3, 4));
        assert_eq!(det_rational(&rats(&[&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]])), rat(1, 72));
        let p = build_p_matrix(&MomentSequence::gamma(), 0).unwrap();
        assert_eq!(p, rats(&[&[(0, 1), (1, 2)], &[(1, 2), (41, 36)]]));
        assert_eq!(det_rational(&p), rat(-1, 4));
    }

    #[test]
    fn integer_conversion() {
        assert!(rats(&[&[(1, 2)]]).to_integer().is_none());
        assert_eq!(
            int_rats(&[&[2, 5], &[5, 16]]).to_integer().unwrap(),
            ints(&[&[2, 5], &[5, 16]])
        );
    }

    #[test]
    fn hankel_values() {
        let g = MomentSequence::gompertz();
        assert_eq!(hankel_pq(&g, 1).unwrap(), (rat(4, 1), rat(7, 1)));
        let (p, q) = hankel_pq(&g, 3).unwrap();
        assert_eq!(p / q, rat(124, 209));
        let (p, q) = hankel_pq(&MomentSequence::zeta(2).unwrap(), 1).unwrap();
        assert_eq!(p / q, rat(135, 89));
    }

    #[test]
    fn hankel_q_rejects_non_positive() {
        let seq = MomentSequence::custom("alt", vec![rat(-1, 1), rat(1, 1), rat(-1, 1), rat(1, 1)], None);
        assert!(hankel_q(&seq, 0).is_ok());
        assert!(matches!(hankel_q(&seq, 1), Err(Error::NonPositiveQ { n: 1, .. })));
    }

    #[test]
    fn arrow_examples() {
        assert_eq!(arrow_det(&int_rats(&[&[5]])).unwrap(), rat(5, 1));
        assert_eq!(arrow_det(&int_rats(&[&[1, 2], &[3, 4]])).unwrap(), rat(-2, 1));
        assert_eq!(
            arrow_det(&int_rats(&[&[0, 1, 1], &[1, 2, 0], &[1, 0, 3]])).unwrap(),
            rat(-5, 1)
        );
        assert!(matches!(
            arrow_det(&int_rats(&[&[0, 1, 1], &[1, 2, 7], &[1, 0, 3]])),
            Err(Error::ArrowShapeViolation { row: 1, col: 2 })
        ));
        assert!(matches!(
            arrow_det(&int_rats(&[&[0, 1], &[1, 0]])),
            Err(Error::ZeroDiagonal(1))
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![BigInt::one()], vec![]]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(int_rats(&[&[0, 1], &[1, 2]]).to_string(), "[[0, 1], [1, 2]]");
    }
}
