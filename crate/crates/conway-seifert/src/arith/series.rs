//! Taylor expansions in u = t - 1, truncated at a fixed order, with exact
//! rational coefficients.
//!
//! Binary operations truncate to the smaller of the two orders. `zero()` and
//! `one()` carry the sentinel order `usize::MAX`, read as "exact constant";
//! combining with any finite-order series truncates to that order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{ArithError, Int, Rat, RationalFunction, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries {
    order: usize,
    /// Dense coefficients c_0 .. c_{min(order, len)-1}; trailing zeros may be
    /// omitted only at the sentinel order.
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn zero_of_order(order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        TruncatedSeries { order, coeffs: vec![Rat::zero(); order] }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let mut coeffs = coeffs;
        coeffs.resize(order, Rat::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero_of_order(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_int(c: Int, order: usize) -> Self {
        Self::constant(Rat::from_integer(c), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// True when every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1);
        let order = order.min(self.order);
        let mut coeffs: Vec<Rat> = self.coeffs.iter().take(order).cloned().collect();
        coeffs.resize(order, Rat::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by u^k, shifting coefficients up and truncating at the order.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.order == usize::MAX {
            let mut coeffs = vec![Rat::zero(); k];
            coeffs.extend(self.coeffs.iter().cloned());
            return TruncatedSeries { order: usize::MAX, coeffs };
        }
        let mut out = Self::zero_of_order(self.order);
        for i in 0..self.order.saturating_sub(k) {
            out.coeffs[i + k] = self.coeff(i);
        }
        out
    }

    /// Multiplicative inverse; errors when the constant term vanishes.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(ArithError::NonInvertibleSeries);
        }
        let order = self.order;
        assert!(order != usize::MAX, "inverting an untruncated constant");
        let inv0 = c0.recip();
        let mut out = Self::zero_of_order(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..order {
            // c0 * b_n = -(sum_{k=1..n} a_k b_{n-k})
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += self.coeff(k) * out.coeff(n - k);
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inverse()?)
    }
}

fn working_order(a: &TruncatedSeries, b: &TruncatedSeries) -> usize {
    a.order.min(b.order)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = working_order(self, rhs);
        let len = if order == usize::MAX {
            self.coeffs.len().max(rhs.coeffs.len())
        } else {
            order
        };
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        TruncatedSeries { order, coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = working_order(self, rhs);
        let len = if order == usize::MAX {
            (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1).max(1)
        } else {
            order
        };
        let mut coeffs = vec![Rat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($op:ident, $method:ident) => {
        impl $op for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: Self) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl Ring for TruncatedSeries {
    fn zero() -> Self {
        TruncatedSeries { order: usize::MAX, coeffs: Vec::new() }
    }
    fn one() -> Self {
        TruncatedSeries { order: usize::MAX, coeffs: vec![Rat::one()] }
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
}

impl fmt::Display for TruncatedSeries {
    /// `u^2 - u^3 + O(u^4)`; unit coefficients are left implicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "u^{k}")?;
            } else {
                write!(f, "{abs}*u^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != usize::MAX {
            write!(f, " + O(u^{})", self.order)?;
        }
        Ok(())
    }
}

/// Expand a rational function as a Taylor series around t = 1.
///
/// Both numerator and denominator are first shifted by a power of t (a unit
/// whose expansion is the binomial series of 1 + u) and then Taylor-expanded
/// exactly. The quotient exists whenever the numerator vanishes at t = 1 to
/// at least the order of the denominator; otherwise there is a pole.
pub fn series_of_ratfunc(
    r: &RationalFunction,
    order: usize,
) -> Result<TruncatedSeries, ArithError> {
    assert!(order >= 1, "series order must be at least 1");
    if r.numerator().is_zero() {
        return Ok(TruncatedSeries::zero_of_order(order));
    }
    let lo_n = r.numerator().min_exp().unwrap();
    let lo_d = r.denominator().min_exp().unwrap();
    let num_taylor = r.numerator().taylor_at_one_up_to_unit();
    let den_taylor = r.denominator().taylor_at_one_up_to_unit();
    let a = num_taylor.iter().position(|c| !Ring::is_zero(c)).unwrap();
    let b = den_taylor
        .iter()
        .position(|c| !Ring::is_zero(c))
        .expect("nonzero denominator has a nonzero Taylor coefficient");
    if a < b {
        return Err(ArithError::PoleAtOne);
    }
    let to_series = |coeffs: &[Int], skip: usize| {
        TruncatedSeries::from_coeffs(
            coeffs
                .iter()
                .skip(skip)
                .take(order)
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
            order,
        )
    };
    let num_part = to_series(&num_taylor, a);
    let den_part = to_series(&den_taylor, b);
    let quotient = num_part.try_div(&den_part)?.shift_up(a - b);
    // remaining unit: t^(lo_n - lo_d) = (1+u)^(lo_n - lo_d)
    Ok(&quotient * &binomial_series(lo_n - lo_d, order))
}

/// (1 + u)^e for any integer e, truncated at `order`.
fn binomial_series(e: i64, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order);
    let mut c = Rat::one();
    for k in 0..order {
        coeffs.push(c.clone());
        // C(e, k+1) = C(e, k) * (e - k) / (k + 1)
        c *= Rat::new(Int::from(e - k as i64), Int::from(k as i64 + 1));
    }
    TruncatedSeries::from_coeffs(coeffs, order)
}

#[cfg(test)]
mod tests {
    use super::super::LaurentPoly;
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(Int::from(n))
    }

    fn series(coeffs: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            LaurentPoly::from_coeffs(num),
            LaurentPoly::from_coeffs(den),
        )
        .unwrap()
    }

    #[test]
    fn geometric_inverse() {
        // (1 + u + u^2)^{-1} = 1 - u + 0u^2 + u^3 mod u^4
        let f = series(&[1, 1, 1], 4);
        let inv = f.inverse().unwrap();
        assert_eq!(inv, series(&[1, -1, 0, 1], 4));
        // long-division oracle: the product is 1 mod u^4
        assert_eq!(&f * &inv, series(&[1], 4));
    }

    #[test]
    fn inverse_requires_unit_constant_term() {
        let f = series(&[0, 1], 4);
        assert_eq!(f.inverse(), Err(ArithError::NonInvertibleSeries));
    }

    #[test]
    fn trefoil_pairing_series() {
        // (1-t)^2 / (t^2 - t + 1) = u^2 - u^3 mod u^4
        let r = rf(&[1, -2, 1], &[1, -1, 1]);
        let s = series_of_ratfunc(&r, 4).unwrap();
        assert_eq!(s, series(&[0, 0, 1, -1], 4));
        assert!(s.is_integral());
    }

    #[test]
    fn constants_and_linear_terms() {
        assert_eq!(series_of_ratfunc(&rf(&[5], &[1]), 3).unwrap(), series(&[5], 3));
        assert_eq!(
            series_of_ratfunc(&rf(&[-1, 1], &[1]), 3).unwrap(),
            series(&[0, 1], 3)
        );
    }

    #[test]
    fn pole_detected() {
        // 1 / (t - 1)
        assert_eq!(series_of_ratfunc(&rf(&[1], &[-1, 1]), 4), Err(ArithError::PoleAtOne));
        // but (t-1)^2 / (t-1) is fine: equals u
        let r = rf(&[1, -2, 1], &[-1, 1]);
        assert_eq!(series_of_ratfunc(&r, 3).unwrap(), series(&[0, 1], 3));
    }

    #[test]
    fn laurent_units_expand_via_binomials() {
        // 1/t = 1 - u + u^2 - ... ; t^-1 as a rational function
        let r = RationalFunction::new(LaurentPoly::one(), LaurentPoly::variable()).unwrap();
        assert_eq!(series_of_ratfunc(&r, 4).unwrap(), series(&[1, -1, 1, -1], 4));
    }

    #[test]
    fn display_format() {
        assert_eq!(series(&[0, 0, 1, -1], 4).to_string(), "u^2 - u^3 + O(u^4)");
        assert_eq!(series(&[5], 3).to_string(), "5 + O(u^3)");
        assert_eq!(series(&[], 4).to_string(), "0 + O(u^4)");
        assert_eq!(series(&[0, 2, 0, -3], 5).to_string(), "2*u^1 - 3*u^3 + O(u^5)");
        let half = TruncatedSeries::from_coeffs(vec![Rat::new(Int::from(1), Int::from(2))], 2);
        assert_eq!(half.to_string(), "1/2 + O(u^2)");
    }

    fn arb_ratfunc_regular_at_one() -> impl Strategy<Value = RationalFunction> {
        let poly = || {
            proptest::collection::vec((-3i64..=3, -5i64..=5), 1..5).prop_map(|v| {
                LaurentPoly::from_terms(v.into_iter().map(|(e, c)| (e, Int::from(c))))
            })
        };
        (poly(), poly())
            .prop_filter_map("denominator nonzero at t=1", |(num, den)| {
                if den.is_zero() || Ring::is_zero(&den.eval_at_one()) {
                    None
                } else {
                    Some(RationalFunction::new(num, den).unwrap())
                }
            })
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-9i64..=9, 1i64..=4), 0..6)
            .prop_map(|v| {
                TruncatedSeries::from_coeffs(
                    v.into_iter().map(|(n, d)| Rat::new(Int::from(n), Int::from(d))).collect(),
                    6,
                )
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, TruncatedSeries::zero_of_order(6));
        }

        #[test]
        fn inverse_is_two_sided(a in arb_series()) {
            prop_assume!(!a.coeff(0).is_zero());
            let inv = a.inverse().unwrap();
            let one = TruncatedSeries::constant(Rat::one(), 6);
            prop_assert_eq!(&a * &inv, one.clone());
            prop_assert_eq!(&inv * &a, one);
        }

        #[test]
        fn series_respects_reciprocals(r in arb_ratfunc_regular_at_one(), n in 1usize..=8) {
            prop_assume!(!Ring::is_zero(&r.numerator().eval_at_one()));
            let s = series_of_ratfunc(&r, n).unwrap();
            let inv = series_of_ratfunc(&r.inverse().unwrap(), n).unwrap();
            prop_assert_eq!(&s * &inv, TruncatedSeries::constant(Rat::one(), n));
        }

        #[test]
        fn series_is_multiplicative(
            a in arb_ratfunc_regular_at_one(),
            b in arb_ratfunc_regular_at_one(),
            n in 1usize..=8,
        ) {
            let sa = series_of_ratfunc(&a, n).unwrap();
            let sb = series_of_ratfunc(&b, n).unwrap();
            let sab = series_of_ratfunc(&(&a * &b), n).unwrap();
            prop_assert_eq!(&sa * &sb, sab);
        }

        #[test]
        fn unit_scaling_leaves_series_unchanged(
            r in arb_ratfunc_regular_at_one(),
            k in -4i64..=4,
            n in 1usize..=8,
        ) {
            let unit = LaurentPoly::monomial(Int::from(1), k);
            let scaled = RationalFunction::new(
                r.numerator() * &unit,
                r.denominator() * &unit,
            ).unwrap();
            prop_assert_eq!(
                series_of_ratfunc(&scaled, n).unwrap(),
                series_of_ratfunc(&r, n).unwrap()
            );
        }
    }
}
