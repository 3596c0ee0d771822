//! Quotients of Laurent polynomials in t.
//!
//! Values are kept unreduced; equality is decided by cross-multiplication,
//! which avoids polynomial gcds entirely. Display normalizes by a unit only:
//! the denominator is shifted to an ordinary polynomial with nonzero constant
//! term and positive leading coefficient, and the common integer content of
//! numerator and denominator is divided out.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{ArithError, ExactDiv, Int, LaurentPoly, Ring};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly<'t'>,
    den: LaurentPoly<'t'>,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly<'t'>, den: LaurentPoly<'t'>) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(num: LaurentPoly<'t'>) -> Self {
        RationalFunction { num, den: LaurentPoly::one() }
    }

    pub fn from_int(c: Int) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly<'t'> {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly<'t'> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RationalFunction {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        })
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        Self::one().try_div(self)
    }

    /// Unit-normalized (numerator, denominator) pair used for display: the
    /// denominator becomes an ordinary polynomial with nonzero constant term
    /// and positive leading coefficient, and the common integer content is
    /// divided out. The fraction's value is unchanged.
    pub fn normalized_parts(&self) -> (LaurentPoly<'t'>, LaurentPoly<'t'>) {
        if self.num.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::one());
        }
        let shift = -self.den.min_exp().unwrap();
        let mut num = self.num.shift(shift);
        let mut den = self.den.shift(shift);
        if den.coeff(den.max_exp().unwrap()).is_negative() {
            num = -num;
            den = -den;
        }
        let content = integer_content(&num, &den);
        if !content.is_one() {
            num = num.map_coeffs(|c| c.exact_div(&content));
            den = den.map_coeffs(|c| c.exact_div(&content));
        }
        (num, den)
    }
}

fn integer_content(a: &LaurentPoly<'t'>, b: &LaurentPoly<'t'>) -> Int {
    fn gcd(a: Int, b: Int) -> Int {
        if Ring::is_zero(&b) {
            a.abs()
        } else {
            let r = &a % &b;
            gcd(b, r)
        }
    }
    let mut g = Int::zero();
    for (_, c) in a.terms().chain(b.terms()) {
        g = gcd(g, c.clone());
        if g.is_one() {
            break;
        }
    }
    if Ring::is_zero(&g) {
        Int::one()
    } else {
        g
    }
}

/// Equality by cross-multiplication: a/b = c/d iff a*d = c*b.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        RationalFunction {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($op:ident, $method:ident) => {
        impl $op for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: Self) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl ExactDiv for RationalFunction {
    fn exact_div(&self, divisor: &Self) -> Self {
        self.try_div(divisor).expect("division by zero rational function")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.normalized_parts();
        write!(f, "({num}) / ({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(coeffs: &[i64]) -> LaurentPoly<'t'> {
        LaurentPoly::from_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(t(num), t(den)).unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(t(&[1]), LaurentPoly::zero()),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn cross_multiplied_equality() {
        // (t-1)/(t+1) == (t^2-t)/(t^2+t)
        assert_eq!(rf(&[-1, 1], &[1, 1]), rf(&[0, -1, 1], &[0, 1, 1]));
        assert_ne!(rf(&[-1, 1], &[1, 1]), rf(&[1, 1], &[-1, 1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rf(&[1], &[1]).try_div(&RationalFunction::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn display_normalizes_units() {
        // numerator (1-t)^2, denominator t^2-t+1
        let p = rf(&[1, -2, 1], &[1, -1, 1]);
        assert_eq!(p.to_string(), "(1 - 2*t^1 + 1*t^2) / (1 - 1*t^1 + 1*t^2)");
        // shifting both by t^k and scaling by -2 displays identically
        let q = RationalFunction::new(
            t(&[1, -2, 1]).shift(-3).scale(&Int::from(-2)),
            t(&[1, -1, 1]).shift(-3).scale(&Int::from(-2)),
        )
        .unwrap();
        assert_eq!(q.to_string(), p.to_string());
        assert_eq!(RationalFunction::zero().to_string(), "(0) / (1)");
    }

    fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly<'t'>> {
        proptest::collection::vec((-4i64..=4, -6i64..=6), 1..5)
            .prop_map(|v| {
                LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, Int::from(c))))
            })
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    fn arb_ratfunc() -> impl Strategy<Value = RationalFunction> {
        (arb_nonzero_poly(), arb_nonzero_poly())
            .prop_map(|(num, den)| RationalFunction::new(num, den).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RationalFunction::zero());
            let quot = a.try_div(&b).unwrap();
            prop_assert_eq!(&quot * &b, a);
        }

        #[test]
        fn unit_scaling_is_invisible(a in arb_ratfunc(), k in -4i64..=4, c in 1i64..=5) {
            // multiplying numerator and denominator by c*t^k changes nothing
            let unit = LaurentPoly::monomial(Int::from(c), k);
            let scaled = RationalFunction::new(
                a.numerator() * &unit,
                a.denominator() * &unit,
            ).unwrap();
            prop_assert_eq!(&scaled, &a);
            prop_assert_eq!(scaled.to_string(), a.to_string());
        }
    }
}
