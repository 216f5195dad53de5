//! Exact moment sequences `a_n = L(e_n)`, `n >= 1`.
//!
//! Index 0 is never produced here: the Hankel and orthogonal-polynomial
//! engines substitute `a_0 = 0` themselves.

use std::fmt;
use std::path::Path;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    binomial, factorial, format_rational, integer, parse_rational, DecimalString, Rational,
};

/// Which functional a sequence comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MomentKind {
    /// Euler-Mascheroni constant.
    Gamma,
    /// Euler-Gompertz constant.
    Gompertz,
    /// `zeta(k)`, `k >= 2`.
    Zeta(u32),
    /// `a_n = (n-1)!`; a positive functional whose `L(e_0) = -gamma` is not a norm.
    Factorial,
    Custom,
}

impl fmt::Display for MomentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentKind::Gamma => f.write_str("gamma"),
            MomentKind::Gompertz => f.write_str("gompertz"),
            MomentKind::Zeta(k) => write!(f, "zeta({k})"),
            MomentKind::Factorial => f.write_str("factorial"),
            MomentKind::Custom => f.write_str("custom"),
        }
    }
}

/// A named target constant `L(e_0)` given as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceConstant {
    pub name: String,
    pub decimal: DecimalString,
}

impl ReferenceConstant {
    pub fn new(name: impl Into<String>, decimal: &str) -> Result<Self> {
        Ok(Self {
            name: name.into(),
            decimal: DecimalString::parse(decimal)?,
        })
    }

    pub fn value(&self) -> Rational {
        self.decimal.to_rational()
    }

    /// Caption values for the built-in families. `None` for families the
    /// tables do not cover (the factorial family, `zeta(k)` with `k > 3`).
    pub fn builtin(kind: MomentKind) -> Option<Self> {
        let (name, text) = match kind {
            MomentKind::Gamma => ("gamma", "0.5772156649"),
            MomentKind::Gompertz => ("delta", "0.5963473623"),
            MomentKind::Zeta(2) => ("zeta(2)", "1.644934067"),
            MomentKind::Zeta(3) => ("zeta(3)", "1.202056903"),
            _ => return None,
        };
        Some(Self::new(name, text).expect("embedded constant"))
    }
}

/// `(n-1)! sum_{i=0}^{n} C(n,i) (-1)^i (n-2i-1) / (i+1)^(n+1)`.
pub fn gamma_moment(n: usize) -> Result<Rational> {
    require_index(n)?;
    let n64 = n as u64;
    let mut sum = Rational::zero();
    for i in 0..=n64 {
        let mut term = binomial(n64, i)? * (n64 as i64 - 2 * i as i64 - 1);
        if i % 2 == 1 {
            term = -term;
        }
        let den = BigInt::from(i + 1).pow(n as u32 + 1);
        sum += Rational::new(term, den);
    }
    Ok(sum * integer(factorial(n64 - 1)))
}

/// `sum_{i=0}^{n-1} (n-1)!/i!`, always an integer.
pub fn gompertz_moment(n: usize) -> Result<Rational> {
    require_index(n)?;
    // (n-1)!/i! for i = n-1, n-2, ..., 0 is the running product (n-1)(n-2)...(i+1).
    let mut term = BigInt::one();
    let mut sum = BigInt::one();
    for i in (1..n as u64).rev() {
        term *= i;
        sum += &term;
    }
    Ok(integer(sum))
}

/// `sum_{i=0}^{n-1} C(n-1,i) (-1)^i / (i+1)^k`.
pub fn zeta_moment(k: u32, n: usize) -> Result<Rational> {
    if k < 2 {
        return Err(Error::invalid(format!("zeta moments need k >= 2, got {k}")));
    }
    require_index(n)?;
    let m = n as u64 - 1;
    let mut sum = Rational::zero();
    for i in 0..=m {
        let mut num = binomial(m, i)?;
        if i % 2 == 1 {
            num = -num;
        }
        sum += Rational::new(num, BigInt::from(i + 1).pow(k));
    }
    Ok(sum)
}

/// `(n-1)!`.
pub fn factorial_moment(n: usize) -> Result<Rational> {
    require_index(n)?;
    Ok(integer(factorial(n as u64 - 1)))
}

fn require_index(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid(
            "moment index must be >= 1; a_0 is fixed to 0 by the Hankel construction",
        ));
    }
    Ok(())
}

/// A source of exact moments `a_1, a_2, ...`.
///
/// Generated values are memoized; the cache is filled in index order under a
/// lock, so concurrent readers always observe the same values.
#[derive(Debug)]
pub struct MomentSequence {
    name: String,
    kind: MomentKind,
    reference: Option<ReferenceConstant>,
    /// Holds `a_1..` at positions `0..`. For custom sequences this is the full list.
    cache: RwLock<Vec<Rational>>,
}

impl Clone for MomentSequence {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            kind: self.kind,
            reference: self.reference.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl MomentSequence {
    fn generated(name: &str, kind: MomentKind) -> Self {
        Self {
            name: name.to_owned(),
            kind,
            reference: ReferenceConstant::builtin(kind),
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn gamma() -> Self {
        Self::generated("gamma", MomentKind::Gamma)
    }

    pub fn gompertz() -> Self {
        Self::generated("gompertz", MomentKind::Gompertz)
    }

    pub fn zeta(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid(format!("zeta family needs k >= 2, got {k}")));
        }
        Ok(Self::generated(&format!("zeta{k}"), MomentKind::Zeta(k)))
    }

    pub fn factorial() -> Self {
        Self::generated("factorial", MomentKind::Factorial)
    }

    /// A fixed, user-supplied list; `moments[0]` is `a_1`.
    pub fn custom(
        name: impl Into<String>,
        moments: Vec<Rational>,
        reference: Option<ReferenceConstant>,
    ) -> Self {
        Self {
            name: name.into(),
            kind: MomentKind::Custom,
            reference,
            cache: RwLock::new(moments),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> MomentKind {
        self.kind
    }

    pub fn reference(&self) -> Option<&ReferenceConstant> {
        self.reference.as_ref()
    }

    /// Number of moments a custom sequence carries; `None` for generated ones.
    pub fn available(&self) -> Option<usize> {
        match self.kind {
            MomentKind::Custom => Some(self.cache.read().expect("cache lock").len()),
            _ => None,
        }
    }

    fn generate(&self, n: usize) -> Result<Rational> {
        match self.kind {
            MomentKind::Gamma => gamma_moment(n),
            MomentKind::Gompertz => gompertz_moment(n),
            MomentKind::Zeta(k) => zeta_moment(k, n),
            MomentKind::Factorial => factorial_moment(n),
            MomentKind::Custom => unreachable!("custom sequences are fully cached"),
        }
    }

    fn ensure(&self, upto: usize) -> Result<()> {
        let have = self.cache.read().expect("cache lock").len();
        if have >= upto {
            return Ok(());
        }
        if self.kind == MomentKind::Custom {
            return Err(Error::IndexOutOfRange {
                index: upto,
                available: have,
            });
        }
        let mut cache = self.cache.write().expect("cache lock");
        while cache.len() < upto {
            let next = self.generate(cache.len() + 1)?;
            cache.push(next);
        }
        Ok(())
    }

    /// `a_n` for `n >= 1`.
    pub fn moment(&self, n: usize) -> Result<Rational> {
        require_index(n)?;
        self.ensure(n)?;
        Ok(self.cache.read().expect("cache lock")[n - 1].clone())
    }

    /// `[a_1, ..., a_count]`.
    pub fn moments(&self, count: usize) -> Result<Vec<Rational>> {
        self.ensure(count)?;
        Ok(self.cache.read().expect("cache lock")[..count].to_vec())
    }

    /// `[a_0, a_1, ..., a_max]` with `a_0 = 0`.
    pub fn moments_from_zero(&self, max: usize) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(Rational::zero());
        out.extend(self.moments(max)?);
        Ok(out)
    }
}

/// Rational string inside a moment file, parsed eagerly so that serde_json
/// reports the line and column of a bad entry.
struct RationalText(Rational);

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text)
            .map(RationalText)
            .map_err(|e| serde::de::Error::custom(format!("bad rational {text:?}: {e}")))
    }
}

struct DecimalText(DecimalString);

impl<'de> Deserialize<'de> for DecimalText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        DecimalString::parse(&text)
            .map(DecimalText)
            .map_err(|e| serde::de::Error::custom(format!("bad reference {text:?}: {e}")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MomentFileIn {
    name: String,
    a: Vec<RationalText>,
    reference: Option<DecimalText>,
}

#[derive(Serialize)]
struct MomentFileOut<'a> {
    name: &'a str,
    a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<&'a str>,
}

fn json_parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parse moment-file text: `{"name": ..., "a": ["a_1", "a_2", ...], "reference": "0.59..."}`.
pub fn parse_moments(text: &str) -> Result<MomentSequence> {
    let file: MomentFileIn = serde_json::from_str(text).map_err(json_parse_error)?;
    let reference = file.reference.map(|DecimalText(decimal)| ReferenceConstant {
        name: file.name.clone(),
        decimal,
    });
    let moments = file.a.into_iter().map(|RationalText(r)| r).collect();
    Ok(MomentSequence::custom(file.name, moments, reference))
}

pub fn load_moments(path: impl AsRef<Path>) -> Result<MomentSequence> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_moments(&text)
}

/// Render `a_1..a_count` in the moment-file format, so it can be reloaded.
pub fn moments_to_json(seq: &MomentSequence, count: usize) -> Result<String> {
    let file = MomentFileOut {
        name: seq.name(),
        a: seq.moments(count)?.iter().map(format_rational).collect(),
        reference: seq.reference().map(|r| r.decimal.as_str()),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// `n,a` CSV of `a_1..a_count`.
pub fn moments_to_csv(seq: &MomentSequence, count: usize) -> Result<String> {
    let mut out = String::from("n,a\n");
    for (i, a) in seq.moments(count)?.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, format_rational(a)));
    }
    Ok(out)
}
