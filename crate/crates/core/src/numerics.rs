//! Exact integer and rational arithmetic helpers.
//!
//! Every value in the crate is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The text form
//! used by files and the CLI is `-?[0-9]+(/[0-9]+)?`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Build `num/den` in canonical lowest terms.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// A failure to read a rational string; `column` is 1-based within the string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for RationalParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for RationalParseError {}

fn digit_run(s: &str, start: usize) -> usize {
    s[start..]
        .bytes()
        .take_while(u8::is_ascii_digit)
        .count()
}

fn parse_error(column: usize, message: impl Into<String>) -> RationalParseError {
    RationalParseError {
        column,
        message: message.into(),
    }
}

/// Parse `-?digits(/digits)?`. The denominator must be positive.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let mut pos = 0;
    let negative = s.starts_with('-');
    if negative {
        pos = 1;
    }
    let num_len = digit_run(s, pos);
    if num_len == 0 {
        return Err(parse_error(pos + 1, "expected a digit"));
    }
    let num_digits = &s[pos..pos + num_len];
    pos += num_len;

    let den = if pos == s.len() {
        BigInt::one()
    } else if s[pos..].starts_with('/') {
        pos += 1;
        let den_len = digit_run(s, pos);
        if den_len == 0 {
            return Err(parse_error(pos + 1, "expected a denominator digit"));
        }
        let den: BigInt = s[pos..pos + den_len].parse().expect("digit run");
        if den.is_zero() {
            return Err(parse_error(pos + 1, "zero denominator"));
        }
        pos += den_len;
        if pos != s.len() {
            return Err(parse_error(pos + 1, "unexpected trailing character"));
        }
        den
    } else {
        return Err(parse_error(pos + 1, "unexpected character"));
    };

    let mut num: BigInt = num_digits.parse().expect("digit run");
    if negative {
        num = -num;
    }
    Ok(Rational::new(num, den))
}

/// Render in the text grammar: `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Exact binomial coefficient by a running product.
pub fn binomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::invalid(format!("binomial({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 1..=k {
        // c * (n - k + i) is divisible by i: it equals i * C(n - k + i, i).
        c = c * (n - k + i) / i;
    }
    Ok(c)
}

/// `sum_{i=1}^{n} 1/i`.
pub fn harmonic(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("harmonic(0) is undefined here; n must be >= 1"));
    }
    Ok((1..=n).fold(Rational::zero(), |acc, i| {
        acc + Rational::new(BigInt::one(), BigInt::from(i))
    }))
}

/// Least common multiple of the denominators of `values` (1 when empty).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RoundingMode {
    Truncate,
    #[default]
    RoundHalfAway,
}

/// Fixed-point decimal text with exactly `digits` fractional digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecimalString {
    text: String,
    digits: usize,
}

impl DecimalString {
    /// Wrap decimal text such as `0.5772156649`; the digit count is read off the text.
    pub fn parse(text: &str) -> Result<Self> {
        parse_decimal(text)?;
        let digits = text.split_once('.').map_or(0, |(_, frac)| frac.len());
        if digits == 0 {
            return Err(Error::invalid(format!(
                "decimal {text:?} has no fractional digits"
            )));
        }
        Ok(Self {
            text: text.to_owned(),
            digits,
        })
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    /// The decimal read as an exact rational.
    pub fn to_rational(&self) -> Rational {
        parse_decimal(&self.text).expect("validated on construction")
    }
}

impl fmt::Display for DecimalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Exact long division of `r` to `digits` fractional digits.
pub fn rat_to_decimal(r: &Rational, digits: usize, mode: RoundingMode) -> Result<DecimalString> {
    if digits == 0 {
        return Err(Error::invalid("decimal rendering needs at least one digit"));
    }
    let scale = BigInt::from(10u32).pow(digits as u32);
    let numer = r.numer().abs() * &scale;
    let denom = r.denom();
    let (mut scaled, rem) = numer.div_rem(denom);
    if mode == RoundingMode::RoundHalfAway && rem * 2 >= *denom {
        scaled += 1;
    }
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let negative = r.is_negative() && !scaled.is_zero();
    let text = format!(
        "{}{}.{:0>width$}",
        if negative { "-" } else { "" },
        int_part,
        frac_part.to_string(),
        width = digits
    );
    Ok(DecimalString { text, digits })
}

/// Read `-?digits(.digits)?` as an exact rational.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = |message: &str| Error::Parse {
        line: 1,
        column: 1,
        message: format!("{message}: {text:?}"),
    };
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_str, frac_str) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_str.is_empty() || !all_digits(int_str) || !all_digits(frac_str) {
        return Err(bad("malformed decimal"));
    }
    if body.ends_with('.') {
        return Err(bad("missing fractional digits"));
    }
    let mantissa: BigUint = format!("{int_str}{frac_str}").parse().expect("digits");
    let scale = BigInt::from(10u32).pow(frac_str.len() as u32);
    let sign = if negative { Sign::Minus } else { Sign::Plus };
    Ok(Rational::new(BigInt::from_biguint(sign, mantissa), scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn make_rational_canonicalizes() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        let z = rat(0, -7);
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::zero(), BigInt::one()));
        assert_eq!(format_rational(&rat(-9, -41)), "9/41");
        assert!(matches!(make_rational(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn parse_rational_grammar() {
        assert_eq!(parse_rational("9/41").unwrap(), rat(9, 41));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("0").unwrap(), rat(0, 1));
        assert_eq!(parse_rational("-10/4").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("1/0").unwrap_err().column, 3);
        assert_eq!(parse_rational("").unwrap_err().column, 1);
        assert_eq!(parse_rational("-").unwrap_err().column, 2);
        assert_eq!(parse_rational("+3").unwrap_err().column, 1);
        assert_eq!(parse_rational("3/").unwrap_err().column, 3);
        assert_eq!(parse_rational("3/-4").unwrap_err().column, 3);
        assert_eq!(parse_rational("1.5").unwrap_err().column, 2);
        assert_eq!(parse_rational("1/2x").unwrap_err().column, 4);
    }

    #[test]
    fn decimal_rendering_matches_tables() {
        let r = |n, d| rat_to_decimal(&rat(n, d), 10, RoundingMode::RoundHalfAway).unwrap();
        assert_eq!(r(9, 41).as_str(), "0.2195121951");
        assert_eq!(r(4, 7).as_str(), "0.5714285714");
        let z = rat_to_decimal(&rat(135, 89), 9, RoundingMode::RoundHalfAway).unwrap();
        assert_eq!(z.as_str(), "1.516853933");
        assert_eq!(z.digits(), 9);
        let t = rat_to_decimal(&rat(135, 89), 9, RoundingMode::Truncate).unwrap();
        assert_eq!(t.as_str(), "1.516853932");
    }

    #[test]
    fn decimal_rendering_edge_cases() {
        let d = |n, d, k| {
            rat_to_decimal(&rat(n, d), k, RoundingMode::RoundHalfAway)
                .unwrap()
                .to_string()
        };
        assert_eq!(d(1, 2, 1), "0.5");
        assert_eq!(d(-1, 2, 1), "-0.5");
        assert_eq!(d(1, 20, 1), "0.1");
        assert_eq!(d(-1, 20, 1), "-0.1");
        assert_eq!(d(-1, 1000, 2), "0.00");
        assert_eq!(d(999, 1000, 2), "1.00");
        assert_eq!(d(-7, 1, 3), "-7.000");
        assert!(rat_to_decimal(&rat(1, 3), 0, RoundingMode::Truncate).is_err());
    }

    #[test]
    fn parse_decimal_reads_exactly() {
        assert_eq!(parse_decimal("0.5772156649").unwrap(), rat(5772156649, 10_000_000_000));
        assert_eq!(parse_decimal("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_decimal("12").unwrap(), rat(12, 1));
        for bad in ["", ".5", "1.", "1.2.3", "a", "-", "1e3"] {
            assert!(parse_decimal(bad).is_err(), "{bad:?}");
        }
        let ds = DecimalString::parse("1.644934067").unwrap();
        assert_eq!(ds.digits(), 9);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        for n in 0..10 {
            assert_eq!(binomial(n, 0).unwrap(), BigInt::one());
        }
        assert!(binomial(3, 4).is_err());
    }

    #[test]
    fn binomial_52_26_matches_pascal_triangle() {
        let mut row = vec![BigInt::one()];
        for _ in 0..52 {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        assert_eq!(row[26], "495918532948104".parse::<BigInt>().unwrap());
        assert_eq!(binomial(52, 26).unwrap(), row[26]);
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 2..=60u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(1).unwrap(), rat(1, 1));
        assert_eq!(harmonic(3).unwrap(), rat(1, 1) + rat(1, 2) + rat(1, 3));
        assert_eq!(harmonic(3).unwrap(), rat(11, 6));
        assert!(harmonic(51).unwrap() > rat(9, 2));
        assert!(harmonic(0).is_err());
        for n in 1..=100u64 {
            assert_eq!(
                harmonic(n + 1).unwrap() - harmonic(n).unwrap(),
                rat(1, n as i64 + 1)
            );
        }
    }

    fn any_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1..i64::MAX).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in any_rational(), b in any_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn decimal_rendering_is_within_one_unit(a in any_rational(), digits in 1usize..30, truncate: bool) {
            let mode = if truncate { RoundingMode::Truncate } else { RoundingMode::RoundHalfAway };
            let text = rat_to_decimal(&a, digits, mode).unwrap();
            let back = parse_decimal(text.as_str()).unwrap();
            let ulp = Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits as u32));
            prop_assert!((back - &a).abs() < ulp);
        }

        #[test]
        fn text_form_round_trips(a in any_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
        }
    }
}
