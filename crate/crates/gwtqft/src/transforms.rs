//! Connected / disconnected generating functions over the degree
//! variable.
//!
//! Invariants are collected into sums over the degree d with a formal
//! weight q^d, with coefficients in the truncated series ring:
//! F = sum_{d>=1} F_d q^d for connected counts and Z = sum_{d>=1} Z_d q^d
//! for disconnected ones. The two are related by Z = exp(F) - 1, exactly
//! as polynomials in q up to the stored degree. Only q^1 .. q^D are
//! stored; the q^0 coefficients (0 for F, 0 for Z after dropping the
//! empty cover) are structural.
//!
//! All arithmetic is exact: since F and Z have no constant term in q, the
//! exponential and logarithm are finite sums up to the q-degree cutoff.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::series::{rat, rat_int, TruncatedSeries};

/// A polynomial in q with truncated-series coefficients, storing
/// q^1 .. q^D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<TruncatedSeries>,
}

impl BivariateSeries {
    /// Wrap the coefficients of q^1 .. q^D; all must share one order.
    pub fn new(coeffs: Vec<TruncatedSeries>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Domain("need at least the q^1 coefficient".into()))?;
        let order = first.order();
        for c in &coeffs {
            if c.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: c.order(),
                });
            }
        }
        Ok(BivariateSeries { order, coeffs })
    }

    /// Highest stored q-degree D.
    pub fn qdeg(&self) -> usize {
        self.coeffs.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of q^d for 1 <= d <= D.
    pub fn coeff(&self, d: usize) -> &TruncatedSeries {
        assert!(
            (1..=self.qdeg()).contains(&d),
            "q-degree {d} outside the stored range 1..={}",
            self.qdeg()
        );
        &self.coeffs[d - 1]
    }

    /// All stored coefficients, q^1 first.
    pub fn coeffs(&self) -> &[TruncatedSeries] {
        &self.coeffs
    }
}

/// Product of two polynomials in q (coefficients q^0 .. q^D), truncated
/// at the common length.
fn poly_mul(a: &[TruncatedSeries], b: &[TruncatedSeries], order: usize) -> Vec<TruncatedSeries> {
    let n = a.len();
    let mut out = vec![TruncatedSeries::zero(order); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Lift stored q^1.. coefficients to a full q^0.. polynomial vector.
fn with_zero_head(f: &BivariateSeries) -> Vec<TruncatedSeries> {
    let mut v = Vec::with_capacity(f.qdeg() + 1);
    v.push(TruncatedSeries::zero(f.order));
    v.extend(f.coeffs.iter().cloned());
    v
}

/// The disconnected generating function Z = exp(F) - 1 of a connected
/// one, exact up to the stored q-degree.
pub fn disconnected_from_connected(f: &BivariateSeries) -> BivariateSeries {
    let order = f.order;
    let dmax = f.qdeg();
    let fv = with_zero_head(f);
    let mut acc = vec![TruncatedSeries::zero(order); dmax + 1];
    acc[0] = TruncatedSeries::one(order);
    let mut term = acc.clone();
    for k in 1..=dmax {
        // term becomes F^k / k!.
        term = poly_mul(&term, &fv, order);
        let inv_k = rat(1, k as i64);
        for t in term.iter_mut() {
            if !t.is_zero() {
                *t = t.scale(&inv_k);
            }
        }
        for (a, t) in acc.iter_mut().zip(&term) {
            if !t.is_zero() {
                *a = &*a + t;
            }
        }
    }
    BivariateSeries {
        order,
        coeffs: acc[1..].to_vec(),
    }
}

/// The connected generating function F = log(1 + Z) of a disconnected
/// one, exact up to the stored q-degree.
pub fn connected_from_disconnected(z: &BivariateSeries) -> BivariateSeries {
    let order = z.order;
    let dmax = z.qdeg();
    let zv = with_zero_head(z);
    let mut acc = vec![TruncatedSeries::zero(order); dmax + 1];
    let mut power = vec![TruncatedSeries::zero(order); dmax + 1];
    power[0] = TruncatedSeries::one(order);
    for k in 1..=dmax {
        power = poly_mul(&power, &zv, order);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let weight = rat(sign, k as i64);
        for (a, p) in acc.iter_mut().zip(&power) {
            if !p.is_zero() {
                *a = &*a + &p.scale(&weight);
            }
        }
    }
    BivariateSeries {
        order,
        coeffs: acc[1..].to_vec(),
    }
}

/// Genus of the domain curve of a connected degree-d cover of a genus-g
/// curve with total branching b, from the Euler-characteristic count
/// 2g' - 2 = d(2g - 2) + b. Can be negative or half-integral for
/// branching data that no connected cover realizes.
pub fn domain_genus(d: usize, genus: usize, branching: usize) -> BigRational {
    let doubled = (2 * genus as i64 - 2) * d as i64 + branching as i64 + 2;
    rat_int(doubled) / rat_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count;

    #[test]
    fn exponential_of_a_single_degree() {
        // F = s q with s = 1 + t: Z_d = s^d / d!.
        let order = 5;
        let s = TruncatedSeries::from_coeffs(order, vec![rat_int(1), rat_int(1)]).unwrap();
        let mut coeffs = vec![TruncatedSeries::zero(order); 4];
        coeffs[0] = s.clone();
        let f = BivariateSeries::new(coeffs).unwrap();
        let z = disconnected_from_connected(&f);
        assert_eq!(z.qdeg(), 4);
        for d in 1..=4 {
            let mut expected = s.int_pow(d as i64).unwrap();
            expected = expected.scale(&rat(1, (1..=d as i64).product()));
            assert_eq!(z.coeff(d), &expected, "degree {d}");
        }
    }

    #[test]
    fn torus_counts_log_to_harmonic_divisor_sums() {
        // Z_d(torus) = p(d); the connected counts are N_d = sum_{k|d} 1/k.
        let order = 3;
        let z = BivariateSeries::new(
            (1..=6)
                .map(|d| TruncatedSeries::constant(rat_int(count(d) as i64), order))
                .collect(),
        )
        .unwrap();
        let f = connected_from_disconnected(&z);
        let expected = [
            rat_int(1),
            rat(3, 2),
            rat(4, 3),
            rat(7, 4),
            rat(6, 5),
            rat_int(2),
        ];
        for (d, want) in expected.iter().enumerate() {
            assert_eq!(
                f.coeff(d + 1),
                &TruncatedSeries::constant(want.clone(), order),
                "degree {}",
                d + 1
            );
        }
    }

    #[test]
    fn transforms_are_mutually_inverse() {
        let order = 6;
        let series = |coeffs: &[(i64, i64)]| {
            TruncatedSeries::from_coeffs(order, coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
                .unwrap()
        };
        let f = BivariateSeries::new(vec![
            series(&[(1, 1), (-1, 2), (0, 1), (3, 7)]),
            series(&[(0, 1), (2, 3)]),
            series(&[(5, 1)]),
            series(&[(-1, 4), (1, 6), (1, 1)]),
        ])
        .unwrap();
        let z = disconnected_from_connected(&f);
        assert_eq!(connected_from_disconnected(&z), f);
        let back = disconnected_from_connected(&connected_from_disconnected(&z));
        assert_eq!(back, z);
    }

    #[test]
    fn bivariate_series_validates_orders() {
        assert!(BivariateSeries::new(vec![]).is_err());
        assert!(BivariateSeries::new(vec![
            TruncatedSeries::one(3),
            TruncatedSeries::one(4),
        ])
        .is_err());
    }

    #[test]
    fn domain_genus_examples() {
        // Unbranched degree-1 cover of the sphere: the sphere itself.
        assert_eq!(domain_genus(1, 0, 0), rat_int(0));
        // Two simple branch points in degree 2 over the sphere.
        assert_eq!(domain_genus(2, 0, 2), rat_int(0));
        // Odd total branching gives a half-integer (no such cover).
        assert_eq!(domain_genus(2, 0, 1), rat(-1, 2));
        // Degree-3 torus cover with four simple branch points.
        assert_eq!(domain_genus(3, 1, 4), rat_int(3));
        // Unbranched covers of a genus-2 curve in degree 2.
        assert_eq!(domain_genus(2, 2, 0), rat_int(3));
    }
}
