#![allow(dead_code)]

pub mod golden;

use hankel_approx::{make_rational, IntMatrix, Rational, SquareMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

pub fn rat(n: i64, d: i64) -> Rational {
    make_rational(n, d).unwrap()
}

/// Laplace expansion along the first row. Exponential, but independent of
/// any elimination code.
pub fn cofactor_det<T>(m: &SquareMatrix<T>) -> T
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Neg<Output = T> + num_traits::One,
{
    let rows: Vec<Vec<T>> = m.rows().map(<[T]>::to_vec).collect();
    laplace(&rows)
}

fn laplace<T>(rows: &[Vec<T>]) -> T
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Neg<Output = T> + num_traits::One,
{
    let n = rows.len();
    if n == 0 {
        return T::one();
    }
    let mut total = T::zero();
    for col in 0..n {
        let minor: Vec<Vec<T>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][col].clone() * laplace(&minor);
        total = if col % 2 == 0 { total + term } else { total + (-term) };
    }
    total
}

pub fn random_int_matrix(rng: &mut impl Rng, order: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(order, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_nonzero_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Zero off the diagonal except in row 0 and column 0; diagonal entries nonzero.
#[allow(clippy::needless_range_loop)]
pub fn random_arrow_matrix(rng: &mut impl Rng, order: usize) -> SquareMatrix {
    let mut entries = vec![vec![Rational::zero(); order]; order];
    for i in 0..order {
        entries[0][i] = random_rational(rng, 9);
        entries[i][0] = random_rational(rng, 9);
        if i > 0 {
            entries[i][i] = random_nonzero_rational(rng, 9);
        }
    }
    SquareMatrix::from_rows(entries).unwrap()
}
