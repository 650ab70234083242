//! Closed-form reference series for low-degree invariants.
//!
//! Everything here is an explicit trigonometric expression evaluated
//! exactly in Q[[t]] / (t^N): the normalized sine s = sin(t/2) / (t/2),
//! the genus-zero cap series attached to a boundary partition, the
//! genus-zero free-point series, and the degree-one and degree-two
//! theories in closed form. These serve as independent oracles for the
//! algebraic TQFT evaluations elsewhere in the crate.
//!
//! Shifted quotients such as sin(mt/2) / t are computed by building
//! 2 sin(mt/2) to one order higher and dividing by t, so every returned
//! coefficient is exact despite the truncation.

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::series::{rat, rat_int, two_sin_half, TruncatedSeries};

/// 2 sin(m t / 2) / t, exact to the requested order.
fn two_sin_half_over_t(m: u32, order: usize) -> TruncatedSeries {
    two_sin_half(m, order + 1)
        .divide_by_t_power(1)
        .expect("sin(mt/2) is divisible by t")
        .truncated(order)
}

/// The normalized sine s = sin(t/2) / (t/2) = 1 - t^2/24 + ...
pub fn sine_quotient(order: usize) -> TruncatedSeries {
    two_sin_half_over_t(1, order)
}

/// The genus-zero cap series of a boundary partition alpha of d:
///
///   cap(alpha) = (-1)^(d - l) / z(alpha) * t^(d - l)
///                * prod_i t / (2 sin(alpha_i t / 2)),
///
/// where l is the number of parts. For alpha = (1) this is 1/s.
pub fn cap(alpha: &Partition, order: usize) -> TruncatedSeries {
    let d = alpha.size();
    let l = alpha.len();
    let mut acc = TruncatedSeries::one(order);
    for &part in alpha.parts() {
        let factor = two_sin_half_over_t(part as u32, order)
            .invert()
            .expect("2 sin(mt/2)/t has constant term m");
        acc = &acc * &factor;
    }
    let sign = if (d - l).is_multiple_of(2) { 1 } else { -1 };
    acc.scale(&rat(sign, alpha.centralizer_order() as i64))
        .mul_by_t_power(d - l)
}

/// The genus-zero series of the theory with no boundary:
///
///   fp0(d) = sum_{alpha |- d} 1 / z(alpha) * t^(2(d - l))
///            * prod_i (t / (2 sin(alpha_i t / 2)))^2,
///
/// which also equals sum_alpha z(alpha) cap(alpha)^2.
pub fn fp_genus0(d: usize, order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for alpha in enumerate(d) {
        let mut term = TruncatedSeries::one(order);
        for &part in alpha.parts() {
            let factor = two_sin_half_over_t(part as u32, order)
                .invert()
                .expect("2 sin(mt/2)/t has constant term m");
            term = &term * &(&factor * &factor);
        }
        let shift = 2 * (d - alpha.len());
        total = &total
            + &term
                .scale(&rat(1, alpha.centralizer_order() as i64))
                .mul_by_t_power(shift);
    }
    total
}

/// The degree-one invariant of a genus-g surface with r boundary circles:
/// s^(2g - 2 + r) with s the normalized sine.
pub fn d1_relative(genus: usize, boundaries: usize, order: usize) -> TruncatedSeries {
    let exponent = 2 * genus as i64 - 2 + boundaries as i64;
    sine_quotient(order)
        .int_pow(exponent)
        .expect("the normalized sine is a unit")
}

/// The two eigenvalues of the degree-two theory:
/// lambda_+- = 4 s^4 (1 -+ sin(t/2)), returned as (lambda_+, lambda_-).
pub fn d2_eigenvalues(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let s4 = sine_quotient(order)
        .int_pow(4)
        .expect("the normalized sine is a unit");
    let sin_half = two_sin_half(1, order).scale(&rat(1, 2));
    let common = s4.scale(&rat_int(4));
    let swing = &common * &sin_half;
    (&common - &swing, &common + &swing)
}

/// The degree-two invariant of a closed genus-g surface:
/// lambda_+^(g-1) + lambda_-^(g-1).
pub fn d2_closed(genus: usize, order: usize) -> TruncatedSeries {
    let (plus, minus) = d2_eigenvalues(order);
    let exponent = genus as i64 - 1;
    let a = plus
        .int_pow(exponent)
        .expect("degree-two eigenvalues are units");
    let b = minus
        .int_pow(exponent)
        .expect("degree-two eigenvalues are units");
    &a + &b
}

/// Convenience validation used by callers taking a (d, alpha) pair: alpha
/// must be a partition of d.
pub fn check_boundary(d: usize, alpha: &Partition) -> Result<()> {
    if alpha.size() != d {
        return Err(Error::InvalidPartition(format!(
            "{alpha} is a partition of {}, not of {d}",
            alpha.size()
        )));
    }
    Ok(())
}
