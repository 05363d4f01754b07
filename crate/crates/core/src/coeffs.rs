//! Exact coefficient arithmetic.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms. The
//! deformation parameter `q` and the family `λ` are specialized to such
//! rationals through [`make_params`], which also enforces the standing
//! hypotheses `q^(2 d_i) ≠ 1`, `λ_ij ≠ 0`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_big(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(&self.0 / &other.0))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow_u(exp as u64))
        } else {
            Ok(self.inv()?.pow_u(exp.unsigned_abs()))
        }
    }

    fn pow_u(&self, mut exp: u64) -> Self {
        let mut base = self.0.clone();
        let mut acc = BigRational::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Scalar(acc)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `n` or `n/m` with optional leading sign.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("not a rational literal: '{s}'"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Scalar::from_big(n, d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on division by zero, like the primitive types; use
/// [`Scalar::checked_div`] when the divisor is data-dependent.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

/// Specialized parameters: `q`, the full `λ` table and the symmetrizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSet {
    q: Scalar,
    lambda: Vec<Vec<Scalar>>,
    d: Vec<i64>,
}

/// Builds a [`ParamSet`] from `q` and the upper-triangular part of `λ`
/// (0-based pairs `(i, j)` with `i < j`; missing pairs default to 1).
pub fn make_params(
    q: Scalar,
    lambda_upper: &[((usize, usize), Scalar)],
    cartan: &CartanDatum,
) -> Result<ParamSet> {
    if q.is_zero() {
        return Err(Error::ZeroParameter("q".into()));
    }
    let t = cartan.rank();
    for (index, &d) in cartan.d().iter().enumerate() {
        if q.pow(2 * d)?.is_one() {
            return Err(Error::RootOfUnityViolation { index, d });
        }
    }
    let mut lambda = vec![vec![Scalar::one(); t]; t];
    for ((i, j), value) in lambda_upper {
        let (i, j) = (*i, *j);
        if i >= j || j >= t {
            return Err(Error::IndexError(format!(
                "lambda pair ({}, {}) must satisfy 1 <= i < j <= {t}",
                i + 1,
                j + 1
            )));
        }
        if value.is_zero() {
            return Err(Error::ZeroParameter(format!("lambda_{}{}", i + 1, j + 1)));
        }
        lambda[j][i] = value.inv()?;
        lambda[i][j] = value.clone();
    }
    Ok(ParamSet {
        q,
        lambda,
        d: cartan.d().to_vec(),
    })
}

impl ParamSet {
    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn lambda(&self, i: usize, j: usize) -> &Scalar {
        &self.lambda[i][j]
    }

    pub fn lambda_table(&self) -> &[Vec<Scalar>] {
        &self.lambda
    }

    /// `q^n`; `q` is nonzero by construction.
    pub fn q_pow(&self, n: i64) -> Scalar {
        self.q.pow(n).expect("q is nonzero")
    }

    /// `λ_ij^n`.
    pub fn lambda_pow(&self, i: usize, j: usize, n: i64) -> Scalar {
        self.lambda[i][j].pow(n).expect("lambda is nonzero")
    }

    /// `q^(d_i) - q^(-d_i)`, nonzero under the standing hypothesis.
    pub fn qd_difference(&self, i: usize) -> Scalar {
        let d = self.d[i];
        self.q_pow(d) - self.q_pow(-d)
    }

    /// Same `q` with the family `λ` replaced by `λ^{-1}`.
    pub fn inverse_lambda(&self) -> ParamSet {
        let lambda = self
            .lambda
            .iter()
            .map(|row| row.iter().map(|l| l.inv().expect("lambda is nonzero")).collect())
            .collect();
        ParamSet {
            q: self.q.clone(),
            lambda,
            d: self.d.clone(),
        }
    }

    /// Same `q` and `d` with `λ ≡ 1`.
    pub fn trivial_lambda(&self) -> ParamSet {
        let t = self.rank();
        ParamSet {
            q: self.q.clone(),
            lambda: vec![vec![Scalar::one(); t]; t],
            d: self.d.clone(),
        }
    }
}

fn check_base(v: &Scalar) -> Result<()> {
    if v.is_zero() {
        return Err(Error::DegenerateParameter("q-integer base v = 0".into()));
    }
    if (v * v).is_one() {
        return Err(Error::DegenerateParameter(format!(
            "q-integer base v = {v} satisfies v^2 = 1"
        )));
    }
    Ok(())
}

/// Balanced q-integer `[n]_v = (v^n - v^{-n}) / (v - v^{-1})`.
pub fn q_int(n: i64, v: &Scalar) -> Result<Scalar> {
    check_base(v)?;
    let num = v.pow(n)? - v.pow(-n)?;
    let den = v - &v.inv()?;
    num.checked_div(&den)
}

/// `[n]_v! = [1]_v [2]_v ... [n]_v`.
pub fn q_factorial(n: i64, v: &Scalar) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::IndexError(format!("q-factorial of negative {n}")));
    }
    check_base(v)?;
    (1..=n).try_fold(Scalar::one(), |acc, m| Ok(acc * q_int(m, v)?))
}

/// Balanced Gaussian binomial `[n; r]_v = [n]_v! / ([r]_v! [n-r]_v!)`.
pub fn q_binomial(n: i64, r: i64, v: &Scalar) -> Result<Scalar> {
    if r < 0 || r > n {
        return Err(Error::IndexError(format!("q-binomial needs 0 <= r <= n, got n={n}, r={r}")));
    }
    check_base(v)?;
    let den = q_factorial(r, v)? * q_factorial(n - r, v)?;
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!("vanishing q-factorial at v = {v}")));
    }
    q_factorial(n, v)?.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{preset, Family};

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn scalars_are_reduced() {
        let x = s(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(Scalar::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!("  -9/6 ".parse::<Scalar>().unwrap(), s(-3, 2));
    }

    #[test]
    fn make_params_completes_lambda() {
        let a2 = preset(Family::A, 2).unwrap();
        let p = make_params(s(2, 1), &[((0, 1), s(3, 1))], &a2).unwrap();
        assert_eq!(p.lambda(1, 0), &s(1, 3));
        assert_eq!(p.lambda(0, 0), &Scalar::one());
        assert_eq!(p.lambda(1, 1), &Scalar::one());
    }

    #[test]
    fn make_params_rejects_roots_of_unity_and_zeros() {
        let a1 = preset(Family::A, 1).unwrap();
        assert!(matches!(
            make_params(Scalar::one(), &[], &a1),
            Err(Error::RootOfUnityViolation { .. })
        ));
        assert!(matches!(
            make_params(s(-1, 1), &[], &a1),
            Err(Error::RootOfUnityViolation { .. })
        ));
        assert!(matches!(make_params(Scalar::zero(), &[], &a1), Err(Error::ZeroParameter(_))));
        let a2 = preset(Family::A, 2).unwrap();
        assert!(matches!(
            make_params(s(2, 1), &[((0, 1), Scalar::zero())], &a2),
            Err(Error::ZeroParameter(_))
        ));
    }

    #[test]
    fn g2_accepts_three_halves() {
        let g2 = preset(Family::G2, 2).unwrap();
        let q = s(3, 2);
        // q^2 = 9/4 and q^6 = 729/64, neither is 1
        assert_eq!(q.pow(2).unwrap(), s(9, 4));
        assert_eq!(q.pow(6).unwrap(), s(729, 64));
        assert!(make_params(q, &[((0, 1), Scalar::one())], &g2).is_ok());
    }

    #[test]
    fn q_binomial_edges() {
        let v = s(5, 3);
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0, &v).unwrap(), Scalar::one());
            assert_eq!(q_binomial(n, n, &v).unwrap(), Scalar::one());
        }
        assert_eq!(q_binomial(2, 1, &v).unwrap(), &v + &v.inv().unwrap());
        assert!(matches!(q_binomial(3, 1, &Scalar::one()), Err(Error::DegenerateParameter(_))));
        assert!(matches!(q_binomial(3, 1, &s(-1, 1)), Err(Error::DegenerateParameter(_))));
        assert!(matches!(q_binomial(3, 4, &v), Err(Error::IndexError(_))));
    }

    #[test]
    fn q_int_is_symmetric_laurent_polynomial() {
        let v = s(2, 1);
        // [3]_2 = 4 + 1 + 1/4
        assert_eq!(q_int(3, &v).unwrap(), s(21, 4));
        assert_eq!(q_int(-3, &v).unwrap(), -s(21, 4));
        assert_eq!(q_int(0, &v).unwrap(), Scalar::zero());
    }
}
