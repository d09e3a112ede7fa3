//! Exact one-variable polynomials in `q` with rational coefficients, the
//! target of point-count interpolation and the coefficient ring of the
//! arithmetic zeta series.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Finitely supported exact polynomial `Σ c_k q^k`. Negative powers are
/// permitted (Tate twists of traces can produce them); none of the counting
/// pipelines emit them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigRational::one())
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        QPoly::monomial(1, BigRational::one())
    }

    pub fn monomial(power: i64, coeff: BigRational) -> Self {
        let mut p = QPoly::zero();
        p.add_term(power, coeff);
        p
    }

    pub fn monomial_int(power: i64, coeff: i64) -> Self {
        QPoly::monomial(power, BigRational::from_integer(BigInt::from(coeff)))
    }

    pub fn from_int_coeffs(coeffs: &[(i64, i64)]) -> Self {
        let mut p = QPoly::zero();
        for &(k, c) in coeffs {
            p.add_term(k, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, power: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(power).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    pub fn coeff(&self, power: i64) -> BigRational {
        self.coeffs.get(&power).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending power order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> QPoly {
        if factor.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * factor)).collect(),
        }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (k, c) in self.terms() {
            assert!(k >= 0 || !q.is_zero(), "negative power at q = 0");
            let power = if k >= 0 {
                num::pow::pow(q.clone(), k as usize)
            } else {
                BigRational::one() / num::pow::pow(q.clone(), (-k) as usize)
            };
            total += c * power;
        }
        total
    }

    pub fn eval_u64(&self, q: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(q)))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{}", if show_coeff { "*" } else { "" }, k)?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            power: i64,
            coeff: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (power, coeff) in self.terms() {
            seq.serialize_element(&Term {
                power,
                coeff: coeff.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Exact Lagrange interpolation through distinct nodes.
pub fn lagrange(points: &[(BigRational, BigRational)]) -> QPoly {
    let mut out = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = QPoly::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QPoly::q().sub(&QPoly::monomial(0, xj.clone())));
            denom *= xi - xj;
        }
        out = out.add(&basis.scale(&(yi / denom)));
    }
    out
}
