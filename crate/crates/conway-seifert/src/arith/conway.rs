//! Polynomials in the Conway variable z, and conversion from Laurent
//! polynomials in s under the substitution z = s - 1/s.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::{ArithError, Int, LaurentPoly, Ring};

/// Polynomial in z with integer coefficients and nonnegative exponents.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConwayPoly {
    coeffs: BTreeMap<usize, Int>,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        ConwayPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_terms([(0, Int::from(1))])
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Int)>,
    {
        let mut coeffs: BTreeMap<usize, Int> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(Int::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        ConwayPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e, Int::from(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: usize) -> Int {
        self.coeffs.get(&e).cloned().unwrap_or_else(Int::zero)
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Int)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Evaluate at z = s - 1/s, producing a Laurent polynomial in s.
    pub fn eval_at_z(&self) -> LaurentPoly<'s'> {
        let z = z_in_s();
        let mut acc = LaurentPoly::zero();
        for (e, c) in self.terms() {
            acc = &acc + &z.pow(e).scale(c);
        }
        acc
    }
}

fn z_in_s() -> LaurentPoly<'s'> {
    LaurentPoly::from_terms([(1, Int::from(1)), (-1, Int::from(-1))])
}

/// Rewrite a Laurent polynomial f(s) as a polynomial g(z) with g(s - 1/s) = f(s).
///
/// Works by descending-degree elimination: the expansion of z^d has leading
/// term s^d with coefficient 1, so the top coefficient of f determines the
/// z^d coefficient of g exactly. Errors when the remainder fails to clear,
/// i.e. f is not in the image of the substitution.
pub fn to_conway_basis(f: &LaurentPoly<'s'>) -> Result<ConwayPoly, ArithError> {
    let z = z_in_s();
    let mut rem = f.clone();
    let mut out: Vec<(usize, Int)> = Vec::new();
    while !rem.is_zero() {
        let d = rem.max_exp().unwrap();
        if d < 0 {
            return Err(ArithError::NotInConwayImage {
                remainder: rem.to_string(),
            });
        }
        let c = rem.coeff(d);
        rem = &rem - &z.pow(d as usize).scale(&c);
        out.push((d as usize, c));
    }
    Ok(ConwayPoly::from_terms(out))
}

impl fmt::Display for ConwayPoly {
    /// Ascending powers with explicit coefficients: `1 + 1*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if e == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*z^{e}")?;
            }
        }
        Ok(())
    }
}
