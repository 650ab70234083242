//! Truncated formal power series over the exact rationals.
//!
//! A [`TruncatedSeries`] represents an element of Q[[t]] modulo t^N, where
//! N is the *order* of the truncation. Every coefficient is an arbitrary
//! precision rational, so all arithmetic here is exact: two series are equal
//! iff they agree coefficient by coefficient.
//!
//! Invariants maintained by this module:
//!
//! * `coeffs` always holds exactly `order` entries (coefficients of
//!   t^0 .. t^{order-1}); `order >= 1`.
//! * Arithmetic between two series requires equal orders. Mixing orders is
//!   an [`Error::OrderMismatch`], never a silent coercion; use
//!   [`TruncatedSeries::truncated`] to shrink a series explicitly.
//! * Operations that need a unit (inversion, negative powers) or a special
//!   constant term (exp, log, sqrt) check the precondition and report a
//!   dedicated error.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shorthand for the exact rational `num / den`.
///
/// Panics if `den == 0`; intended for literals in code and tests.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the exact rational `n / 1`.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of Q[[t]] / (t^order) with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        TruncatedSeries {
            order,
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The constant series `c`.
    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c * t^power`. A power at or beyond the truncation
    /// order yields the zero series.
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Build a series from explicit coefficients (t^0 first). Fewer than
    /// `order` entries are padded with zeros; more than `order` is an error.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigRational>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("truncation order must be at least 1".into()));
        }
        if coeffs.len() > order {
            return Err(Error::Domain(format!(
                "{} coefficients exceed truncation order {order}",
                coeffs.len()
            )));
        }
        coeffs.resize(order, BigRational::zero());
        Ok(TruncatedSeries { order, coeffs })
    }

    /// Truncation order N: coefficients of t^0 .. t^{N-1} are stored.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of t^i. Panics if `i >= order`.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// All stored coefficients, lowest power first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of t^0.
    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    /// True iff every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True iff the series is invertible, i.e. its constant term is nonzero.
    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Index of the lowest nonzero coefficient, or `None` for the zero
    /// series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The same series truncated to a lower order. Truncation is always
    /// explicit; arithmetic never shrinks an order behind the caller's back.
    ///
    /// Panics if `new_order` is 0 or exceeds the current order.
    pub fn truncated(&self, new_order: usize) -> Self {
        assert!(
            (1..=self.order).contains(&new_order),
            "cannot truncate order {} to {}",
            self.order,
            new_order
        );
        TruncatedSeries {
            order: new_order,
            coeffs: self.coeffs[..new_order].to_vec(),
        }
    }

    /// The same coefficients viewed at a higher order, with zeros above the
    /// old truncation. Only correct when the caller knows the dropped tail
    /// is genuinely zero; used for embedding exact polynomials.
    pub fn padded(&self, new_order: usize) -> Self {
        assert!(
            new_order >= self.order,
            "cannot pad order {} down to {}",
            self.order,
            new_order
        );
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(new_order, BigRational::zero());
        TruncatedSeries {
            order: new_order,
            coeffs,
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    /// Coefficient-wise sum. Errors when the orders differ.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Coefficient-wise difference. Errors when the orders differ.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Cauchy product modulo t^order. Errors when the orders differ.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { order: n, coeffs })
    }

    /// The series scaled by a rational constant.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse modulo t^order.
    ///
    /// Uses the standard recurrence: with a_0 invertible, c_0 = 1/a_0 and
    /// c_n = -(1/a_0) * sum_{k=1..n} a_k c_{n-k}. Errors with
    /// [`Error::NotAUnit`] when the constant term vanishes.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let n = self.order;
        let a0_inv = self.coeffs[0].recip();
        let mut c = vec![BigRational::zero(); n];
        c[0] = a0_inv.clone();
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !c[m - k].is_zero() {
                    acc += &self.coeffs[k] * &c[m - k];
                }
            }
            c[m] = -(&a0_inv * acc);
        }
        Ok(TruncatedSeries { order: n, coeffs: c })
    }

    /// Integer power by square-and-multiply. `k = 0` gives 1; negative `k`
    /// inverts first and therefore requires a unit.
    pub fn int_pow(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one(self.order));
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut base = base;
        let mut acc = Self::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exponential of a series with zero constant term.
    ///
    /// Sums a^k / k!; since a has positive valuation the sum terminates
    /// after `order` terms.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp requires a zero constant term".into(),
            ));
        }
        let mut result = Self::one(self.order);
        let mut term = Self::one(self.order);
        for k in 1..self.order as i64 {
            term = term.checked_mul(self)?.scale(&rat(1, k));
            if term.is_zero() {
                break;
            }
            result = result.checked_add(&term)?;
        }
        Ok(result)
    }

    /// Logarithm of a series with constant term 1.
    ///
    /// Sums -(-x)^k / k for x = a - 1, which has positive valuation.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(
                "log requires a constant term equal to 1".into(),
            ));
        }
        let x = self.checked_sub(&Self::one(self.order))?;
        let mut result = Self::zero(self.order);
        let mut power = Self::one(self.order);
        for k in 1..self.order as i64 {
            power = power.checked_mul(&x)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.checked_add(&power.scale(&rat(sign, k)))?;
        }
        Ok(result)
    }

    /// Square root with the positive branch of the constant term.
    ///
    /// The constant term must be the square of a rational (so in particular
    /// nonzero for a nonzero series); otherwise [`Error::NoSquareRoot`] is
    /// returned. Newton iteration b -> (b + a/b)/2 doubles the matched
    /// precision each step.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NoSquareRoot(
                "constant term is zero but the series is not".into(),
            ));
        }
        let root0 = rational_sqrt(c0)
            .ok_or_else(|| Error::NoSquareRoot(format!("constant term {c0} is not a square")))?;
        let mut b = Self::constant(root0, self.order);
        let half = rat(1, 2);
        for _ in 0..=self.order.next_power_of_two().trailing_zeros() {
            let quotient = self.checked_mul(&b.invert()?)?;
            b = b.checked_add(&quotient)?.scale(&half);
        }
        debug_assert_eq!(&b.checked_mul(&b).unwrap(), self);
        Ok(b)
    }

    /// Exact division by t^power: shifts coefficients down and re-pads the
    /// top with zeros. Errors with [`Error::NotDivisible`] if any of the
    /// bottom `power` coefficients is nonzero.
    ///
    /// The re-padded top coefficients are only trustworthy when the caller
    /// knows them to vanish; computations that need full-order exactness
    /// build their input at a higher order and truncate afterwards.
    pub fn divide_by_t_power(&self, power: usize) -> Result<Self> {
        if power > self.order {
            return Err(Error::Domain(format!(
                "cannot divide an order-{} series by t^{power}",
                self.order
            )));
        }
        if let Some(index) = self.coeffs[..power].iter().position(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { power, index });
        }
        let mut coeffs = self.coeffs[power..].to_vec();
        coeffs.resize(self.order, BigRational::zero());
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplication by t^power: shifts coefficients up, dropping anything
    /// at or above the truncation order. Exact as a statement mod t^order.
    pub fn mul_by_t_power(&self, power: usize) -> Self {
        let n = self.order;
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + power < n {
                coeffs[i + power] = c.clone();
            }
        }
        TruncatedSeries { order: n, coeffs }
    }
}

/// The series 2 sin(m t / 2) truncated at the given order.
///
/// Expanded directly from the sine Taylor series: the coefficient of
/// t^{2k+1} is (-1)^k m^{2k+1} / (4^k (2k+1)!). This is the single sine
/// kernel from which the closed formulas assemble their sine factors.
pub fn two_sin_half(m: u32, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    if order <= 1 {
        return s;
    }
    let m_big = rat_int(i64::from(m));
    // c_{2k+1} = c_{2k-1} * (-m^2/4) / ((2k)(2k+1))
    let step = -(&m_big * &m_big) / rat_int(4);
    let mut c = m_big;
    let mut k = 1usize;
    loop {
        s.coeffs[2 * k - 1] = c.clone();
        if 2 * k + 1 >= order {
            break;
        }
        c = c * &step / rat_int((2 * k * (2 * k + 1)) as i64);
        k += 1;
    }
    s
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let num = c.numer();
    let den = c.denom();
    let num_root = num.sqrt();
    let den_root = den.sqrt();
    if &(&num_root * &num_root) == num && &(&den_root * &den_root) == den {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.$checked(rhs).expect("series order mismatch")
            }
        }
        impl std::ops::$trait for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&rat_int(-1))
    }
}

impl std::ops::Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order)
    }
}

/// Interchange form of a series: the truncation order plus one lowest-terms
/// fraction string per coefficient, e.g. `{"order": 4, "coeffs": ["1",
/// "-1/2", "0", "1/6"]}`.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> SeriesRepr {
        SeriesRepr {
            order: s.order,
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = Error;

    fn try_from(repr: SeriesRepr) -> Result<TruncatedSeries> {
        let coeffs = repr
            .coeffs
            .iter()
            .map(|text| {
                BigRational::from_str(text.trim())
                    .map_err(|e| Error::Domain(format!("bad coefficient {text:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::from_coeffs(repr.order, coeffs)
    }
}
