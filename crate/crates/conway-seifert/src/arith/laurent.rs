//! Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! The variable is part of the type (`LaurentPoly<'s'>`, `LaurentPoly<'t'>`),
//! so operands in different variables cannot be mixed. Only nonzero
//! coefficients are stored, keyed by exponent in a `BTreeMap`, which makes the
//! representation canonical: equal polynomials compare equal structurally and
//! iteration is always in ascending exponent order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{ExactDiv, Int, Ring};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly<const X: char> {
    coeffs: BTreeMap<i64, Int>,
}

impl<const X: char> LaurentPoly<X> {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::from(1), 0)
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, 0)
    }

    /// c * x^e; the zero polynomial when c = 0.
    pub fn monomial(c: Int, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn variable() -> Self {
        Self::monomial(Int::from(1), 1)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Int)>,
    {
        let mut coeffs: BTreeMap<i64, Int> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(Int::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    /// Ordinary polynomial from i64 coefficients in ascending degree order.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, Int::from(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Int {
        self.coeffs.get(&e).cloned().unwrap_or_else(Int::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    /// Apply `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs<F>(&self, f: F) -> Self
    where
        F: Fn(&Int) -> Int,
    {
        Self::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute x = y^k, retagging the variable: f(x) -> f(y^k). k must be nonzero.
    pub fn subst_pow<const Y: char>(&self, k: i64) -> LaurentPoly<Y> {
        assert!(k != 0, "substituting a constant power");
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at x = 1.
    pub fn eval_at_one(&self) -> Int {
        self.coeffs.values().fold(Int::zero(), |acc, c| acc + c)
    }

    /// Coefficients of f(1+u) * (unit power of (1+u)), as an ordinary
    /// polynomial in u. The Laurent part x^{min_exp} is divided out first;
    /// since 1+u is invertible as a power series, this changes the result
    /// only by a unit and preserves the order of vanishing at x = 1.
    pub fn taylor_at_one_up_to_unit(&self) -> Vec<Int> {
        let lo = match self.min_exp() {
            Some(lo) => lo,
            None => return Vec::new(),
        };
        let deg = (self.max_exp().unwrap() - lo) as usize;
        let mut out = vec![Int::zero(); deg + 1];
        for (e, c) in self.terms() {
            // add c * (1+u)^(e-lo)
            let k = (e - lo) as usize;
            let mut binom = Int::one();
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                *slot += c * &binom;
                // C(k, j+1) = C(k, j) * (k-j) / (j+1)
                binom = (binom * Int::from(k - j)).exact_div(&Int::from(j + 1));
            }
        }
        out
    }

    /// Whether (x-1)^n divides this polynomial.
    pub fn vanishes_at_one_to_order(&self, n: usize) -> bool {
        if self.is_zero() {
            return true;
        }
        let taylor = self.taylor_at_one_up_to_unit();
        taylor.iter().take(n).all(|c| c.is_zero())
    }

    /// Exact division; panics when `divisor` does not divide `self`.
    ///
    /// Both operands are shifted to ordinary polynomials first, so the long
    /// division runs over nonnegative exponents and the quotient picks up the
    /// monomial difference.
    fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let lo_n = self.min_exp().unwrap();
        let lo_d = divisor.min_exp().unwrap();
        let mut rem = self.shift(-lo_n);
        let den = divisor.shift(-lo_d);
        let den_deg = den.max_exp().unwrap();
        let den_lead = den.coeff(den_deg);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            assert!(rem_deg >= den_deg, "inexact polynomial division");
            let c = rem.coeff(rem_deg).exact_div(&den_lead);
            let term = Self::monomial(c, rem_deg - den_deg);
            rem = &rem - &(&den * &term);
            quot = &quot + &term;
        }
        quot.shift(lo_n - lo_d)
    }
}

impl<const X: char> Add for &LaurentPoly<X> {
    type Output = LaurentPoly<X>;
    fn add(self, rhs: Self) -> LaurentPoly<X> {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Int::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl<const X: char> Sub for &LaurentPoly<X> {
    type Output = LaurentPoly<X>;
    fn sub(self, rhs: Self) -> LaurentPoly<X> {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Int::zero);
            *entry -= c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl<const X: char> Mul for &LaurentPoly<X> {
    type Output = LaurentPoly<X>;
    fn mul(self, rhs: Self) -> LaurentPoly<X> {
        let mut coeffs: BTreeMap<i64, Int> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                let entry = coeffs.entry(ea + eb).or_insert_with(Int::zero);
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl<const X: char> Neg for &LaurentPoly<X> {
    type Output = LaurentPoly<X>;
    fn neg(self) -> LaurentPoly<X> {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($op:ident, $method:ident, $ty:ident) => {
        impl<const X: char> $op for $ty<X> {
            type Output = $ty<X>;
            fn $method(self, rhs: Self) -> $ty<X> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add, LaurentPoly);
forward_owned_binop!(Sub, sub, LaurentPoly);
forward_owned_binop!(Mul, mul, LaurentPoly);

impl<const X: char> Neg for LaurentPoly<X> {
    type Output = LaurentPoly<X>;
    fn neg(self) -> LaurentPoly<X> {
        -&self
    }
}

impl<const X: char> Ring for LaurentPoly<X> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl<const X: char> ExactDiv for LaurentPoly<X> {
    fn exact_div(&self, divisor: &Self) -> Self {
        self.div_exact(divisor)
    }

    /// x^k with k the smallest exponent appearing in the row, so dividing the
    /// row by it leaves ordinary polynomial entries.
    fn common_row_unit(row: &[Self]) -> Self {
        let lo = row.iter().filter_map(|p| p.min_exp()).min();
        match lo {
            Some(k) if k != 0 => Self::monomial(Int::from(1), k),
            _ => Self::one(),
        }
    }
}

impl<const X: char> fmt::Display for LaurentPoly<X> {
    /// Ascending powers with explicit coefficients: `1 - 2*t^1 + 1*t^2`.
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
                write!(f, "{abs}*{X}^{e}")?;
            }
        }
        Ok(())
    }
}
