//! Exact integer domination polynomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// `D(G, x) = Σ d(G, i) xⁱ` for a graph of order `n`; `coeff[i] = d(G, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial", into = "RawPolynomial")]
pub struct DominationPolynomial {
    n: usize,
    coeff: Vec<BigUint>,
}

impl DominationPolynomial {
    /// Coefficients for degrees `0..=n`, `n = coeff.len() - 1`.
    ///
    /// # Panics
    /// If `coeff` is empty.
    pub fn new(coeff: Vec<BigUint>) -> Self {
        assert!(!coeff.is_empty(), "a polynomial needs the x^0 coefficient");
        DominationPolynomial {
            n: coeff.len() - 1,
            coeff,
        }
    }

    pub fn from_u64s(coeff: &[u64]) -> Self {
        Self::new(coeff.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The polynomial of the graph with no vertices: `1`.
    pub fn one() -> Self {
        Self::new(vec![BigUint::one()])
    }

    /// Order of the underlying graph, which is also the degree.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeff[i]
    }

    /// `d(G, i)` as `u64`; every coefficient of a graph on at most 62
    /// vertices fits.
    pub fn coeff_u64(&self, i: usize) -> u64 {
        self.coeff[i].to_u64().expect("coefficient exceeds u64")
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeff
    }

    pub fn to_u64s(&self) -> Vec<u64> {
        (0..=self.n).map(|i| self.coeff_u64(i)).collect()
    }

    /// Lowest degree with a non-zero coefficient, i.e. the domination number.
    pub fn gamma(&self) -> Option<usize> {
        self.coeff.iter().position(|c| !c.is_zero())
    }

    /// Coefficient-wise convolution. The polynomial of a disjoint union is
    /// the product of the polynomials of its parts.
    pub fn product(&self, other: &DominationPolynomial) -> DominationPolynomial {
        let mut out = vec![BigUint::zero(); self.n + other.n + 1];
        for (i, a) in self.coeff.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeff.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DominationPolynomial::new(out)
    }

    /// Value at an integer point.
    pub fn eval(&self, x: u64) -> BigUint {
        let x = BigUint::from(x);
        self.coeff
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * &x + c)
    }
}

/// Descending powers, zero terms omitted: `x^4 + 4x^3 + 6x^2 + 4x`.
impl fmt::Display for DominationPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeff.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON shape `{"n": int, "coeff": [int, ..]}`.
#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    n: usize,
    coeff: Coefficients,
}

/// Coefficients as plain JSON integers; values beyond `u64` fall back to
/// decimal strings.
struct Coefficients(Vec<BigUint>);

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            match c.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Coefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coefficient {
            Int(u64),
            Text(String),
        }
        let raw = Vec::<Coefficient>::deserialize(d)?;
        raw.into_iter()
            .map(|c| match c {
                Coefficient::Int(v) => Ok(BigUint::from(v)),
                Coefficient::Text(t) => t.parse().map_err(de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Coefficients)
    }
}

impl From<DominationPolynomial> for RawPolynomial {
    fn from(p: DominationPolynomial) -> Self {
        RawPolynomial {
            n: p.n,
            coeff: Coefficients(p.coeff),
        }
    }
}

impl TryFrom<RawPolynomial> for DominationPolynomial {
    type Error = String;

    fn try_from(raw: RawPolynomial) -> Result<Self, String> {
        if raw.coeff.0.len() != raw.n + 1 {
            return Err(format!(
                "polynomial of order {} needs {} coefficients, found {}",
                raw.n,
                raw.n + 1,
                raw.coeff.0.len()
            ));
        }
        Ok(DominationPolynomial::new(raw.coeff.0))
    }
}
