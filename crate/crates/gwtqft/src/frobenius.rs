//! Commutative Frobenius algebras over the truncated series ring.
//!
//! An algebra is stored by structure constants: a basis b_1 .. b_n, the
//! multiplication tensor m_{ij}^k with b_i b_j = sum_k m_{ij}^k b_k, the
//! coordinates of the unit, and the counit values mu(b_i). The
//! comultiplication is never stored; where needed it is derived from the
//! multiplication and the pairing eta_{ij} = mu(b_i b_j), which must be
//! nondegenerate over the series ring (equivalently, nondegenerate at
//! t = 0).
//!
//! Two distinguished constructions are provided: the class algebra of a
//! symmetric group (the degree-d TQFT's algebra at t = 0) and direct sums
//! of rank-one algebras with prescribed eigenvalues, which back the
//! semisimple structure theory. Central idempotents of the class algebra
//! lift t-adically to an idempotent basis by the Newton-style iteration
//! e -> e + (e^2 - e)(1 - 2e)^{-1}, which at least doubles the residual
//! valuation each pass.

// Multi-index contractions keep explicit indices; iterator forms would
// obscure which of the several arrays each index addresses.
#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::series::{rat, rat_int, TruncatedSeries};
use crate::symchar::{class_product_constants, CharacterTable};

/// An element of a Frobenius algebra, as coordinates in the algebra basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: Vec<TruncatedSeries>,
}

impl AlgebraElement {
    /// Wrap coordinates; they must be nonempty and share one order.
    pub fn new(coords: Vec<TruncatedSeries>) -> Result<Self> {
        let first = coords
            .first()
            .ok_or_else(|| Error::Domain("an algebra element needs coordinates".into()))?;
        let order = first.order();
        for c in &coords {
            if c.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: c.order(),
                });
            }
        }
        Ok(AlgebraElement { coords })
    }

    pub fn coords(&self) -> &[TruncatedSeries] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn order(&self) -> usize {
        self.coords[0].order()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(TruncatedSeries::is_zero)
    }

    /// Minimum valuation over all coordinates; `None` for the zero element.
    pub fn valuation(&self) -> Option<usize> {
        self.coords.iter().filter_map(TruncatedSeries::valuation).min()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|s| s.scale(c)).collect(),
        }
    }

    fn truncated(&self, order: usize) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|s| s.truncated(order)).collect(),
        }
    }

    fn padded(&self, order: usize) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|s| s.padded(order)).collect(),
        }
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &AlgebraElement {
            type Output = AlgebraElement;
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                assert_eq!(self.rank(), rhs.rank(), "element rank mismatch");
                AlgebraElement {
                    coords: self
                        .coords
                        .iter()
                        .zip(&rhs.coords)
                        .map(|(a, b)| std::ops::$trait::$method(a, b))
                        .collect(),
                }
            }
        }
    };
}

element_binop!(Add, add);
element_binop!(Sub, sub);

/// One failed Frobenius-algebra axiom, reported by basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
    Unit { j: usize },
    Counit { k: usize },
    FrobeniusRelation { i: usize, j: usize },
    DegeneratePairing,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Commutativity { i, j } => {
                write!(f, "multiplication is not commutative at basis pair ({i}, {j})")
            }
            AxiomViolation::Associativity { i, j, k } => {
                write!(f, "associativity fails at basis triple ({i}, {j}, {k})")
            }
            AxiomViolation::Unit { j } => write!(f, "unit axiom fails at basis element {j}"),
            AxiomViolation::Counit { k } => {
                write!(f, "counit axiom fails at basis element {k}")
            }
            AxiomViolation::FrobeniusRelation { i, j } => {
                write!(f, "Frobenius relation fails at basis pair ({i}, {j})")
            }
            AxiomViolation::DegeneratePairing => {
                write!(f, "the pairing mu(b_i b_j) is degenerate")
            }
        }
    }
}

/// Result of a traced idempotent lifting run.
#[derive(Debug, Clone)]
pub struct LiftReport {
    /// The lifted idempotents, in seed order.
    pub idempotents: Vec<AlgebraElement>,
    /// `residual_valuations[step][seed]`: valuation of e^2 - e after each
    /// iteration, measured at full order; `None` when the residual
    /// vanishes identically mod t^N.
    pub residual_valuations: Vec<Vec<Option<usize>>>,
}

/// A commutative Frobenius algebra over Q[[t]] / (t^N), presented by
/// structure constants in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct FrobeniusAlgebra {
    labels: Vec<String>,
    order: usize,
    /// mult[i][j][k] = coefficient of b_k in b_i b_j.
    mult: Vec<Vec<Vec<TruncatedSeries>>>,
    unit: Vec<TruncatedSeries>,
    counit: Vec<TruncatedSeries>,
}

impl FrobeniusAlgebra {
    /// Assemble an algebra from its structure constants, checking that all
    /// dimensions and truncation orders agree. Axioms are *not* verified
    /// here; see [`FrobeniusAlgebra::check_axioms`].
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Vec<Vec<TruncatedSeries>>>,
        unit: Vec<TruncatedSeries>,
        counit: Vec<TruncatedSeries>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Domain("an algebra needs at least one basis element".into()));
        }
        let order = unit
            .first()
            .ok_or_else(|| Error::Domain("unit coordinates are empty".into()))?
            .order();
        if mult.len() != n || unit.len() != n || counit.len() != n {
            return Err(Error::Domain(format!(
                "structure constants do not match rank {n}"
            )));
        }
        for row in &mult {
            if row.len() != n {
                return Err(Error::Domain("multiplication tensor is not cubical".into()));
            }
            for fiber in row {
                if fiber.len() != n {
                    return Err(Error::Domain("multiplication tensor is not cubical".into()));
                }
                for s in fiber {
                    if s.order() != order {
                        return Err(Error::OrderMismatch {
                            left: order,
                            right: s.order(),
                        });
                    }
                }
            }
        }
        for s in unit.iter().chain(&counit) {
            if s.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: s.order(),
                });
            }
        }
        Ok(FrobeniusAlgebra {
            labels,
            order,
            mult,
            unit,
            counit,
        })
    }

    /// The class algebra of S_d over the series ring: basis e_alpha indexed
    /// by partitions of d in canonical order, multiplication given by the
    /// integer class-product constants, unit e_(1^d), and counit
    /// mu(e_alpha) = [alpha = (1^d)] / d!.
    ///
    /// Its pairing is eta(e_alpha, e_beta) = delta_alphabeta / z(alpha).
    pub fn class_algebra(d: usize, order: usize) -> Result<FrobeniusAlgebra> {
        if d == 0 {
            return Err(Error::Domain("class algebra needs degree d >= 1".into()));
        }
        let tensor = class_product_constants(d);
        let parts = tensor.partitions();
        let n = parts.len();
        let labels = parts.iter().map(Partition::to_string).collect();
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                TruncatedSeries::constant(
                                    rat_int(tensor.value(i, j, k) as i64),
                                    order,
                                )
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let id = n - 1; // (1,...,1) is last in canonical order
        let mut unit = vec![TruncatedSeries::zero(order); n];
        unit[id] = TruncatedSeries::one(order);
        let mut counit = vec![TruncatedSeries::zero(order); n];
        counit[id] = TruncatedSeries::constant(rat(1, factorial(d) as i64), order);
        FrobeniusAlgebra::new(labels, mult, unit, counit)
    }

    /// A direct sum of rank-one algebras R_lambda in its idempotent basis:
    /// e_i e_j = delta_ij e_i, unit = sum e_i, mu(e_i) = 1 / lambda_i.
    /// Each eigenvalue must be a unit series.
    pub fn semisimple(lambdas: &[TruncatedSeries]) -> Result<FrobeniusAlgebra> {
        let n = lambdas.len();
        if n == 0 {
            return Err(Error::Domain("a semisimple sum needs at least one summand".into()));
        }
        let order = lambdas[0].order();
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let mut mult = vec![vec![vec![TruncatedSeries::zero(order); n]; n]; n];
        for (i, item) in mult.iter_mut().enumerate() {
            item[i][i] = TruncatedSeries::one(order);
        }
        let unit = vec![TruncatedSeries::one(order); n];
        let counit = lambdas
            .iter()
            .map(TruncatedSeries::invert)
            .collect::<Result<Vec<_>>>()?;
        FrobeniusAlgebra::new(labels, mult, unit, counit)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coefficient of b_k in b_i b_j.
    pub fn mult_entry(&self, i: usize, j: usize, k: usize) -> &TruncatedSeries {
        &self.mult[i][j][k]
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement {
            coords: self.unit.clone(),
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![TruncatedSeries::zero(self.order); self.rank()];
        coords[i] = TruncatedSeries::one(self.order);
        AlgebraElement { coords }
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement {
            coords: vec![TruncatedSeries::zero(self.order); self.rank()],
        }
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::Domain(format!(
                "element has {} coordinates, algebra has rank {}",
                x.rank(),
                self.rank()
            )));
        }
        if x.order() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: x.order(),
            });
        }
        Ok(())
    }

    /// Product of two elements through the structure constants.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let n = self.rank();
        let mut coords = vec![TruncatedSeries::zero(self.order); n];
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let s = &x.coords[i] * &y.coords[j];
                if s.is_zero() {
                    continue;
                }
                for (k, target) in coords.iter_mut().enumerate() {
                    let m = &self.mult[i][j][k];
                    if !m.is_zero() {
                        *target = &*target + &(&s * m);
                    }
                }
            }
        }
        Ok(AlgebraElement { coords })
    }

    /// mu(x) = sum_i x_i mu(b_i).
    pub fn counit_of(&self, x: &AlgebraElement) -> Result<TruncatedSeries> {
        self.check_element(x)?;
        let mut acc = TruncatedSeries::zero(self.order);
        for (xi, mui) in x.coords.iter().zip(&self.counit) {
            if !xi.is_zero() && !mui.is_zero() {
                acc = &acc + &(xi * mui);
            }
        }
        Ok(acc)
    }

    /// The pairing matrix eta_{ij} = mu(b_i b_j).
    pub fn pairing(&self) -> Result<Vec<Vec<TruncatedSeries>>> {
        let n = self.rank();
        let mut eta = vec![vec![TruncatedSeries::zero(self.order); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = TruncatedSeries::zero(self.order);
                for k in 0..n {
                    let m = &self.mult[i][j][k];
                    if !m.is_zero() && !self.counit[k].is_zero() {
                        acc = &acc + &(m * &self.counit[k]);
                    }
                }
                eta[i][j] = acc;
            }
        }
        Ok(eta)
    }

    /// Check every Frobenius-algebra axiom exactly and report all
    /// violations found. An empty report means the axioms hold mod t^N.
    ///
    /// Checked: commutativity, associativity, the unit and counit axioms,
    /// nondegeneracy of the pairing, and the Frobenius compatibility of
    /// multiplication with the comultiplication derived from the pairing.
    pub fn check_axioms(&self) -> Vec<AxiomViolation> {
        let n = self.rank();
        let mut report = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.mult[i][j] != self.mult[j][i] {
                    report.push(AxiomViolation::Commutativity { i, j });
                }
            }
        }
        let basis: Vec<AlgebraElement> = (0..n).map(|i| self.basis_element(i)).collect();
        let products: Vec<Vec<AlgebraElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.multiply(&basis[i], &basis[j]).expect("validated"))
                    .collect()
            })
            .collect();
        for (i, j, k) in triples(n) {
            let left = self.multiply(&products[i][j], &basis[k]).expect("validated");
            let right = self.multiply(&basis[i], &products[j][k]).expect("validated");
            if left != right {
                report.push(AxiomViolation::Associativity { i, j, k });
            }
        }
        let unit = self.unit();
        for (j, b) in basis.iter().enumerate() {
            if &self.multiply(&unit, b).expect("validated") != b {
                report.push(AxiomViolation::Unit { j });
            }
        }
        let eta = self.pairing().expect("rank checked");
        let eta_inv = match invert_series_matrix(&eta) {
            Ok(inv) => inv,
            Err(_) => {
                report.push(AxiomViolation::DegeneratePairing);
                return report;
            }
        };
        // Derived comultiplication: Delta(b_k) = sum_{w,v} D[k][w][v]
        // b_w (x) b_v with D[k] = M_k eta^{-1}, (M_k)_{wu} = m_{ku}^w.
        let delta: Vec<Vec<Vec<TruncatedSeries>>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|w| {
                        (0..n)
                            .map(|v| {
                                let mut acc = TruncatedSeries::zero(self.order);
                                for u in 0..n {
                                    let m = &self.mult[k][u][w];
                                    if !m.is_zero() && !eta_inv[u][v].is_zero() {
                                        acc = &acc + &(m * &eta_inv[u][v]);
                                    }
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        // Counit axiom: (id (x) mu) Delta(b_k) = b_k.
        for k in 0..n {
            let mut ok = true;
            for w in 0..n {
                let mut acc = TruncatedSeries::zero(self.order);
                for v in 0..n {
                    if !delta[k][w][v].is_zero() && !self.counit[v].is_zero() {
                        acc = &acc + &(&delta[k][w][v] * &self.counit[v]);
                    }
                }
                let expected = if w == k {
                    TruncatedSeries::one(self.order)
                } else {
                    TruncatedSeries::zero(self.order)
                };
                if acc != expected {
                    ok = false;
                }
            }
            if !ok {
                report.push(AxiomViolation::Counit { k });
            }
        }
        // Frobenius relation: (m (x) id)(b_i (x) Delta(b_j)) = Delta(b_i b_j).
        for i in 0..n {
            for j in 0..n {
                let mut ok = true;
                'components: for u in 0..n {
                    for v in 0..n {
                        let mut lhs = TruncatedSeries::zero(self.order);
                        for w in 0..n {
                            let m = &self.mult[i][w][u];
                            if !m.is_zero() && !delta[j][w][v].is_zero() {
                                lhs = &lhs + &(&delta[j][w][v] * m);
                            }
                        }
                        let mut rhs = TruncatedSeries::zero(self.order);
                        for k in 0..n {
                            let m = &self.mult[i][j][k];
                            if !m.is_zero() && !delta[k][u][v].is_zero() {
                                rhs = &rhs + &(m * &delta[k][u][v]);
                            }
                        }
                        if lhs != rhs {
                            ok = false;
                            break 'components;
                        }
                    }
                }
                if !ok {
                    report.push(AxiomViolation::FrobeniusRelation { i, j });
                }
            }
        }
        report
    }

    /// Cheap subset of the axioms used as a guard by evaluators:
    /// commutativity, the unit axiom, and nondegeneracy of the pairing.
    pub(crate) fn check_axioms_quick(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            for j in i + 1..n {
                if self.mult[i][j] != self.mult[j][i] {
                    return Err(Error::InvalidAlgebra(
                        AxiomViolation::Commutativity { i, j }.to_string(),
                    ));
                }
            }
        }
        let unit = self.unit();
        for j in 0..n {
            let b = self.basis_element(j);
            if self.multiply(&unit, &b)? != b {
                return Err(Error::InvalidAlgebra(AxiomViolation::Unit { j }.to_string()));
            }
        }
        let eta = self.pairing()?;
        invert_series_matrix(&eta)
            .map_err(|_| Error::InvalidAlgebra(AxiomViolation::DegeneratePairing.to_string()))?;
        Ok(())
    }

    /// The same algebra truncated to a lower order.
    pub fn truncated(&self, order: usize) -> FrobeniusAlgebra {
        FrobeniusAlgebra {
            labels: self.labels.clone(),
            order,
            mult: self
                .mult
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|fiber| fiber.iter().map(|s| s.truncated(order)).collect())
                        .collect()
                })
                .collect(),
            unit: self.unit.iter().map(|s| s.truncated(order)).collect(),
            counit: self.counit.iter().map(|s| s.truncated(order)).collect(),
        }
    }

    /// Re-express the algebra in the basis b'_j = sum_i M_{ij} b_i.
    ///
    /// M must be congruent to the identity modulo t — the intended use is
    /// manufacturing lifting fixtures whose basis stays idempotent mod t —
    /// and invertible over the series ring. The new basis is labelled
    /// b1 .. bn.
    pub fn conjugate_basis(&self, m: &[Vec<TruncatedSeries>]) -> Result<FrobeniusAlgebra> {
        let n = self.rank();
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::Domain(format!(
                "change-of-basis matrix must be {n} x {n}"
            )));
        }
        for row in m {
            for s in row {
                if s.order() != self.order {
                    return Err(Error::OrderMismatch {
                        left: self.order,
                        right: s.order(),
                    });
                }
            }
        }
        let m_inv = invert_series_matrix(m).map_err(|_| Error::SingularChangeOfBasis)?;
        for (i, row) in m.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if s.constant_term() != &expected {
                    return Err(Error::Domain(
                        "change-of-basis matrix must be the identity at t = 0".into(),
                    ));
                }
            }
        }
        // w[a][b] = M^{-1} (b_a b_b): the product of two old basis vectors
        // re-expressed in the new basis.
        let mut w = vec![vec![vec![TruncatedSeries::zero(self.order); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    let mut acc = TruncatedSeries::zero(self.order);
                    for c in 0..n {
                        let s = &self.mult[a][b][c];
                        if !s.is_zero() && !m_inv[k][c].is_zero() {
                            acc = &acc + &(s * &m_inv[k][c]);
                        }
                    }
                    w[a][b][k] = acc;
                }
            }
        }
        let mut mult = vec![vec![vec![TruncatedSeries::zero(self.order); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for a in 0..n {
                    if m[a][i].is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        if m[b][j].is_zero() {
                            continue;
                        }
                        let scale = &m[a][i] * &m[b][j];
                        for k in 0..n {
                            if !w[a][b][k].is_zero() {
                                mult[i][j][k] = &mult[i][j][k] + &(&scale * &w[a][b][k]);
                            }
                        }
                    }
                }
            }
        }
        let unit = matrix_times_vector(&m_inv, &self.unit);
        let counit = (0..n)
            .map(|i| {
                let mut acc = TruncatedSeries::zero(self.order);
                for a in 0..n {
                    if !m[a][i].is_zero() && !self.counit[a].is_zero() {
                        acc = &acc + &(&m[a][i] * &self.counit[a]);
                    }
                }
                acc
            })
            .collect();
        FrobeniusAlgebra::new(
            (1..=n).map(|i| format!("b{i}")).collect(),
            mult,
            unit,
            counit,
        )
    }

    /// Lift seeds that are idempotent and pairwise orthogonal modulo t to
    /// exact idempotents mod t^N. Convenience wrapper that drops the
    /// residual trace of [`FrobeniusAlgebra::lift_idempotents_traced`].
    pub fn lift_idempotents(&self, seeds: &[AlgebraElement]) -> Result<Vec<AlgebraElement>> {
        Ok(self.lift_idempotents_traced(seeds)?.idempotents)
    }

    /// Idempotent lifting with a per-step residual trace.
    ///
    /// Runs exactly ceil(log2 N) + 1 Newton steps e -> e + b (1 - 2e)^{-1}
    /// with b = e^2 - e, instead of testing residuals for convergence;
    /// each step at least doubles the residual valuation, so the last pass
    /// is exact mod t^N. Step k only needs the algebra mod t^min(2^k, N),
    /// and is computed there.
    pub fn lift_idempotents_traced(&self, seeds: &[AlgebraElement]) -> Result<LiftReport> {
        let n = self.rank();
        if seeds.len() != n {
            return Err(Error::Seed(format!(
                "{} seeds cannot be a basis of a rank-{n} algebra",
                seeds.len()
            )));
        }
        for seed in seeds {
            self.check_element(seed)?;
        }
        // Basis check at t = 0.
        let columns: Vec<Vec<BigRational>> = seeds
            .iter()
            .map(|s| s.coords.iter().map(|c| c.constant_term().clone()).collect())
            .collect();
        if !rational_columns_invertible(&columns) {
            return Err(Error::Seed("seeds are not a basis modulo t".into()));
        }
        // Idempotence and orthogonality at t = 0, through the mod-t algebra.
        let fiber = self.truncated(1);
        let seeds0: Vec<AlgebraElement> = seeds.iter().map(|s| s.truncated(1)).collect();
        for (i, si) in seeds0.iter().enumerate() {
            for (j, sj) in seeds0.iter().enumerate() {
                let product = fiber.multiply(si, sj)?;
                let expected = if i == j { si.clone() } else { fiber.zero_element() };
                if product != expected {
                    return Err(Error::Seed(if i == j {
                        format!("seed {i} is not idempotent modulo t")
                    } else {
                        format!("seeds {i} and {j} are not orthogonal modulo t")
                    }));
                }
            }
        }

        let full = self.order;
        let steps = ceil_log2(full) + 1;
        let mut current: Vec<AlgebraElement> = seeds.to_vec();
        // residual_valuations[k - 1] records the state after step k; the
        // residual computed at entry to step k describes step k - 1, and
        // the final step's slot is measured after the loop.
        let mut residual_valuations: Vec<Vec<Option<usize>>> = vec![Vec::with_capacity(n); steps];
        let mut working = self.clone();
        let mut working_order = full;
        for step in 1..=steps {
            let w = (1usize << step.min(63)).min(full);
            if w != working_order {
                working = self.truncated(w);
                working_order = w;
            }
            for e in current.iter_mut() {
                // Residual at full order, both for the trace and so the
                // final steps converge exactly.
                let residual = &self.multiply(e, e)? - &*e;
                if step > 1 {
                    residual_valuations[step - 2].push(residual.valuation());
                }
                if residual.is_zero() {
                    continue;
                }
                let b = residual.truncated(w);
                let e_w = e.truncated(w);
                let one_minus_2e = &working.unit() - &e_w.scale(&rat_int(2));
                let inverse = invert_algebra_element(&working, &one_minus_2e)?;
                let delta = working.multiply(&b, &inverse)?;
                *e = (&e_w + &delta).padded(full);
            }
        }
        for e in &current {
            let residual = &self.multiply(e, e)? - e;
            residual_valuations[steps - 1].push(residual.valuation());
        }
        Ok(LiftReport {
            idempotents: current,
            residual_valuations,
        })
    }

    /// Eigenvalues of the TQFT structure theory: lift the seeds to an
    /// idempotent basis e~_i and return lambda_i = mu(e~_i)^{-1}, in seed
    /// order.
    pub fn eigenvalues(&self, seeds: &[AlgebraElement]) -> Result<Vec<TruncatedSeries>> {
        let lifted = self.lift_idempotents(seeds)?;
        lifted
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mu = self.counit_of(e)?;
                mu.invert().map_err(|_| {
                    Error::NotSemisimple(format!(
                        "counit of lifted idempotent {i} is not a unit"
                    ))
                })
            })
            .collect()
    }
}

/// Value of the closed genus-g surface in a theory with the given
/// eigenvalues: sum_i lambda_i^{g-1}. Genus 0 needs every eigenvalue to be
/// a unit.
pub fn closed_value(lambdas: &[TruncatedSeries], genus: usize) -> Result<TruncatedSeries> {
    let first = lambdas
        .first()
        .ok_or_else(|| Error::Domain("need at least one eigenvalue".into()))?;
    let order = first.order();
    let exponent = genus as i64 - 1;
    let mut acc = TruncatedSeries::zero(order);
    for lambda in lambdas {
        acc = acc.checked_add(&lambda.int_pow(exponent)?)?;
    }
    Ok(acc)
}

/// The central idempotents of the class algebra of S_d at t = 0, indexed
/// by representation partitions in canonical order: E_R = (dim R / d!)
/// sum_alpha chi_R(alpha) e_alpha, with mu(E_R) = (dim R / d!)^2.
pub fn central_idempotents(d: usize, order: usize) -> Result<Vec<AlgebraElement>> {
    if d == 0 {
        return Err(Error::Domain("central idempotents need degree d >= 1".into()));
    }
    let table = CharacterTable::get(d);
    let n = table.partitions().len();
    let d_fact = rat_int(factorial(d) as i64);
    (0..n)
        .map(|r| {
            let scale = rat_int(table.dimension(r) as i64) / &d_fact;
            let coords = (0..n)
                .map(|a| TruncatedSeries::constant(&scale * rat_int(table.value(r, a)), order))
                .collect();
            AlgebraElement::new(coords)
        })
        .collect()
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

fn ceil_log2(n: usize) -> usize {
    n.next_power_of_two().trailing_zeros() as usize
}

fn matrix_times_vector(
    m: &[Vec<TruncatedSeries>],
    v: &[TruncatedSeries],
) -> Vec<TruncatedSeries> {
    m.iter()
        .map(|row| {
            let order = row[0].order();
            let mut acc = TruncatedSeries::zero(order);
            for (entry, x) in row.iter().zip(v) {
                if !entry.is_zero() && !x.is_zero() {
                    acc = &acc + &(entry * x);
                }
            }
            acc
        })
        .collect()
}

/// Invert x in the algebra by solving the linear system (multiplication by
/// x) v = unit over the series ring.
fn invert_algebra_element(
    algebra: &FrobeniusAlgebra,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    let n = algebra.rank();
    // system[k][j] = sum_i x_i m_{ij}^k: the matrix of left multiplication.
    let system: Vec<Vec<TruncatedSeries>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    let mut acc = TruncatedSeries::zero(algebra.order);
                    for i in 0..n {
                        let m = &algebra.mult[i][j][k];
                        if !x.coords[i].is_zero() && !m.is_zero() {
                            acc = &acc + &(&x.coords[i] * m);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let coords = solve_series_system(&system, &algebra.unit)?;
    Ok(AlgebraElement { coords })
}

/// Gauss-Jordan elimination over the series ring. Succeeds iff the matrix
/// of constant terms is invertible; pivots are chosen among entries whose
/// constant term is nonzero, which always exists in that case.
fn gauss_jordan(aug: &mut [Vec<TruncatedSeries>], n: usize) -> Result<()> {
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| aug[r][col].is_unit())
            .ok_or(Error::NotAUnit)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].invert()?;
        for entry in aug[col].iter_mut() {
            if !entry.is_zero() {
                *entry = &*entry * &inv;
            }
        }
        for row in 0..n {
            if row == col || aug[row][col].is_zero() {
                continue;
            }
            let factor = aug[row][col].clone();
            let (source, target) = if row < col {
                let (a, b) = aug.split_at_mut(col);
                (&b[0], &mut a[row])
            } else {
                let (a, b) = aug.split_at_mut(row);
                (&a[col], &mut b[0])
            };
            for (t, s) in target.iter_mut().zip(source.iter()) {
                if !s.is_zero() {
                    *t = &*t - &(&factor * s);
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn invert_series_matrix(
    m: &[Vec<TruncatedSeries>],
) -> Result<Vec<Vec<TruncatedSeries>>> {
    let n = m.len();
    let order = m[0][0].order();
    let mut aug: Vec<Vec<TruncatedSeries>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut extended = row.clone();
            extended.extend((0..n).map(|j| {
                if i == j {
                    TruncatedSeries::one(order)
                } else {
                    TruncatedSeries::zero(order)
                }
            }));
            extended
        })
        .collect();
    gauss_jordan(&mut aug, n)?;
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn solve_series_system(m: &[Vec<TruncatedSeries>], rhs: &[TruncatedSeries]) -> Result<Vec<TruncatedSeries>> {
    let n = m.len();
    let mut aug: Vec<Vec<TruncatedSeries>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut extended = row.clone();
            extended.push(b.clone());
            extended
        })
        .collect();
    gauss_jordan(&mut aug, n)?;
    Ok(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Invertibility of a rational matrix given by columns, by elimination.
fn rational_columns_invertible(columns: &[Vec<BigRational>]) -> bool {
    let n = columns.len();
    if columns.iter().any(|c| c.len() != n) {
        return false;
    }
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|r| (0..n).map(|c| columns[c][r].clone()).collect())
        .collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return false;
        };
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..n {
            let scaled = &m[col][c] * &inv;
            m[col][c] = scaled;
        }
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone();
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[row][c] -= delta;
            }
        }
    }
    true
}

/// Interchange form of an algebra: rank, order, labels and nested series
/// in the series JSON form.
#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    rank: usize,
    order: usize,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<TruncatedSeries>>>,
    unit: Vec<TruncatedSeries>,
    counit: Vec<TruncatedSeries>,
}

impl From<FrobeniusAlgebra> for AlgebraRepr {
    fn from(a: FrobeniusAlgebra) -> AlgebraRepr {
        AlgebraRepr {
            rank: a.labels.len(),
            order: a.order,
            labels: a.labels,
            mult: a.mult,
            unit: a.unit,
            counit: a.counit,
        }
    }
}

impl TryFrom<AlgebraRepr> for FrobeniusAlgebra {
    type Error = Error;

    fn try_from(repr: AlgebraRepr) -> Result<FrobeniusAlgebra> {
        if repr.labels.len() != repr.rank {
            return Err(Error::Domain(format!(
                "declared rank {} but {} labels",
                repr.rank,
                repr.labels.len()
            )));
        }
        let algebra = FrobeniusAlgebra::new(repr.labels, repr.mult, repr.unit, repr.counit)?;
        if algebra.order != repr.order {
            return Err(Error::OrderMismatch {
                left: repr.order,
                right: algebra.order,
            });
        }
        Ok(algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn constant_element(values: &[(i64, i64)], order: usize) -> AlgebraElement {
        AlgebraElement::new(
            values
                .iter()
                .map(|&(n, d)| TruncatedSeries::constant(rat(n, d), order))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn class_algebra_of_s2() {
        let a = FrobeniusAlgebra::class_algebra(2, 4).unwrap();
        assert_eq!(a.labels(), &["(2)", "(1,1)"]);
        // e_(2) e_(2) = e_(1,1)
        let e2 = a.basis_element(0);
        let product = a.multiply(&e2, &e2).unwrap();
        assert_eq!(product, a.basis_element(1));
        // unit is e_(1,1)
        assert_eq!(a.multiply(&a.unit(), &e2).unwrap(), e2);
        // mu(e_(1,1)) = 1/2, mu(e_(2)) = 0
        assert_eq!(
            a.counit_of(&a.basis_element(1)).unwrap(),
            TruncatedSeries::constant(rat(1, 2), 4)
        );
        assert!(a.counit_of(&e2).unwrap().is_zero());
    }

    #[test]
    fn class_algebra_pairing_is_inverse_centralizer_orders() {
        for d in 1..=5 {
            let a = FrobeniusAlgebra::class_algebra(d, 3).unwrap();
            let eta = a.pairing().unwrap();
            let parts = enumerate(d);
            for (i, alpha) in parts.iter().enumerate() {
                for j in 0..parts.len() {
                    let expected = if i == j {
                        TruncatedSeries::constant(
                            rat(1, alpha.centralizer_order() as i64),
                            3,
                        )
                    } else {
                        TruncatedSeries::zero(3)
                    };
                    assert_eq!(eta[i][j], expected, "d={d} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn class_algebra_passes_all_axioms() {
        for d in 1..=5 {
            let a = FrobeniusAlgebra::class_algebra(d, 3).unwrap();
            assert!(a.check_axioms().is_empty(), "d={d}");
        }
    }

    #[test]
    fn perturbed_structure_constant_is_flagged() {
        let a = FrobeniusAlgebra::class_algebra(3, 3).unwrap();
        let mut mult = a.mult.clone();
        // Perturb one structure constant symmetrically so commutativity
        // still holds; associativity must catch it.
        let bump = TruncatedSeries::constant(rat(1, 7), 3);
        mult[0][1][2] = &mult[0][1][2] + &bump;
        mult[1][0][2] = &mult[1][0][2] + &bump;
        let broken =
            FrobeniusAlgebra::new(a.labels.clone(), mult, a.unit.clone(), a.counit.clone())
                .unwrap();
        let report = broken.check_axioms();
        assert!(!report.is_empty());
        assert!(
            report
                .iter()
                .any(|v| matches!(v, AxiomViolation::Associativity { .. })),
            "expected an associativity violation, got {report:?}"
        );
    }

    #[test]
    fn central_idempotents_of_s2() {
        let e = central_idempotents(2, 4).unwrap();
        assert_eq!(e.len(), 2);
        // E_triv = (e_(1,1) + e_(2))/2, E_sign = (e_(1,1) - e_(2))/2,
        // in coordinates over the basis [(2), (1,1)].
        assert_eq!(e[0], constant_element(&[(1, 2), (1, 2)], 4));
        assert_eq!(e[1], constant_element(&[(-1, 2), (1, 2)], 4));
    }

    #[test]
    fn central_idempotents_are_an_orthogonal_decomposition() {
        for d in 1..=5 {
            let order = 3;
            let a = FrobeniusAlgebra::class_algebra(d, order).unwrap();
            let es = central_idempotents(d, order).unwrap();
            let mut sum = a.zero_element();
            for (r, e) in es.iter().enumerate() {
                for (s, f) in es.iter().enumerate() {
                    let product = a.multiply(e, f).unwrap();
                    let expected = if r == s { e.clone() } else { a.zero_element() };
                    assert_eq!(product, expected, "d={d} E_{r} E_{s}");
                }
                sum = &sum + e;
            }
            assert_eq!(sum, a.unit(), "d={d} sum of idempotents");
            // mu(E_R) = (dim R / d!)^2
            let table = CharacterTable::get(d);
            for (r, e) in es.iter().enumerate() {
                let expected = rat(table.dimension(r) as i64, factorial(d) as i64);
                assert_eq!(
                    a.counit_of(e).unwrap(),
                    TruncatedSeries::constant(&expected * &expected, order),
                    "d={d} mu(E_{r})"
                );
            }
        }
    }

    #[test]
    fn semisimple_algebra_axioms_and_counit() {
        let order = 8;
        let lambdas = [
            TruncatedSeries::one(order),
            TruncatedSeries::from_coeffs(order, vec![rat_int(1), rat_int(1)]).unwrap(),
        ];
        let a = FrobeniusAlgebra::semisimple(&lambdas).unwrap();
        assert!(a.check_axioms().is_empty());
        let mu1 = a.counit_of(&a.basis_element(1)).unwrap();
        assert_eq!(mu1, lambdas[1].invert().unwrap());
        // non-unit eigenvalue is rejected
        assert!(FrobeniusAlgebra::semisimple(&[TruncatedSeries::zero(4)]).is_err());
    }

    #[test]
    fn lifting_fixed_points_and_the_rank_two_fixture() {
        let order = 16;
        let one = TruncatedSeries::one(order);
        let one_plus_t =
            TruncatedSeries::from_coeffs(order, vec![rat_int(1), rat_int(1)]).unwrap();
        let a = FrobeniusAlgebra::semisimple(&[one.clone(), one_plus_t.clone()]).unwrap();
        // Exact idempotents are fixed points.
        let exact = vec![a.basis_element(0), a.basis_element(1)];
        assert_eq!(a.lift_idempotents(&exact).unwrap(), exact);
        // Perturbed seeds b1 = e1 + t e2, b2 = e2 recover {e1, e2}.
        let t = TruncatedSeries::monomial(rat_int(1), 1, order);
        let seeds = vec![
            AlgebraElement::new(vec![one.clone(), t]).unwrap(),
            a.basis_element(1),
        ];
        let report = a.lift_idempotents_traced(&seeds).unwrap();
        assert_eq!(report.idempotents, exact);
        // Residual valuations at least double: >= min(2^k, N) after step k.
        for (step, vals) in report.residual_valuations.iter().enumerate() {
            let bound = (1usize << (step + 1)).min(order);
            for v in vals.iter().flatten() {
                assert!(*v >= bound, "step {} valuation {v} < {bound}", step + 1);
            }
        }
        let lambdas = a.eigenvalues(&seeds).unwrap();
        assert_eq!(lambdas, vec![one, one_plus_t]);
    }

    #[test]
    fn lifting_rejects_bad_seeds() {
        let order = 8;
        let a = FrobeniusAlgebra::semisimple(&[
            TruncatedSeries::one(order),
            TruncatedSeries::one(order),
        ])
        .unwrap();
        // Wrong count.
        assert!(matches!(
            a.lift_idempotents(&[a.basis_element(0)]),
            Err(Error::Seed(_))
        ));
        // Not idempotent mod t: 2 e_1.
        let double = a.basis_element(0).scale(&rat_int(2));
        assert!(matches!(
            a.lift_idempotents(&[double, a.basis_element(1)]),
            Err(Error::Seed(_))
        ));
        // Not a basis mod t: e1 and e1 + t e2.
        let t = TruncatedSeries::monomial(rat_int(1), 1, order);
        let shifted =
            AlgebraElement::new(vec![TruncatedSeries::one(order), t]).unwrap();
        assert!(matches!(
            a.lift_idempotents(&[a.basis_element(0), shifted]),
            Err(Error::Seed(_))
        ));
    }

    #[test]
    fn class_algebra_eigenvalues_are_group_order_over_dimension_squared() {
        for d in 1..=4 {
            let order = 6;
            let a = FrobeniusAlgebra::class_algebra(d, order).unwrap();
            let seeds = central_idempotents(d, order).unwrap();
            let lambdas = a.eigenvalues(&seeds).unwrap();
            let table = CharacterTable::get(d);
            for (r, lambda) in lambdas.iter().enumerate() {
                let ratio = rat(factorial(d) as i64, table.dimension(r) as i64);
                assert_eq!(
                    lambda,
                    &TruncatedSeries::constant(&ratio * &ratio, order),
                    "d={d} R index {r}"
                );
            }
        }
    }

    #[test]
    fn closed_values_of_the_class_algebra() {
        let order = 4;
        let a = FrobeniusAlgebra::class_algebra(3, order).unwrap();
        let seeds = central_idempotents(3, order).unwrap();
        let lambdas = a.eigenvalues(&seeds).unwrap();
        // Genus 1 counts the basis: sum lambda^0 = rank.
        assert_eq!(
            closed_value(&lambdas, 1).unwrap(),
            TruncatedSeries::constant(rat_int(3), order)
        );
        // Genus 2: sum (d!/dim)^2 = 36 + 9 + 36 = 81.
        assert_eq!(
            closed_value(&lambdas, 2).unwrap(),
            TruncatedSeries::constant(rat_int(81), order)
        );
        // Genus 0: sum (dim/d!)^2 = 1/d!.
        assert_eq!(
            closed_value(&lambdas, 0).unwrap(),
            TruncatedSeries::constant(rat(1, 6), order)
        );
    }

    #[test]
    fn conjugate_basis_preserves_eigenvalues() {
        let order = 16;
        let lambdas = [
            TruncatedSeries::from_coeffs(order, vec![rat_int(2), rat_int(-1)]).unwrap(),
            TruncatedSeries::from_coeffs(order, vec![rat_int(1), rat_int(0), rat_int(3)])
                .unwrap(),
            TruncatedSeries::one(order),
        ];
        let a = FrobeniusAlgebra::semisimple(&lambdas).unwrap();
        // M = I + t E for a dense integer E.
        let t = |v: i64| TruncatedSeries::monomial(rat_int(v), 1, order);
        let m = vec![
            vec![&TruncatedSeries::one(order) + &t(2), t(1), t(-1)],
            vec![t(-3), &TruncatedSeries::one(order) + &t(1), t(2)],
            vec![t(5), t(0), &TruncatedSeries::one(order) + &t(-2)],
        ];
        let b = a.conjugate_basis(&m).unwrap();
        assert!(b.check_axioms().is_empty());
        let seeds: Vec<_> = (0..3).map(|i| b.basis_element(i)).collect();
        let recovered = b.eigenvalues(&seeds).unwrap();
        assert_eq!(recovered, lambdas.to_vec());
    }

    #[test]
    fn conjugate_basis_validates_its_matrix() {
        let order = 4;
        let a = FrobeniusAlgebra::semisimple(&[
            TruncatedSeries::one(order),
            TruncatedSeries::one(order),
        ])
        .unwrap();
        // Identity works and reproduces the algebra up to labels.
        let id = vec![
            vec![TruncatedSeries::one(order), TruncatedSeries::zero(order)],
            vec![TruncatedSeries::zero(order), TruncatedSeries::one(order)],
        ];
        let same = a.conjugate_basis(&id).unwrap();
        assert_eq!(same.mult, a.mult);
        assert_eq!(same.unit, a.unit);
        assert_eq!(same.counit, a.counit);
        // Not the identity at t = 0.
        let off = vec![
            vec![TruncatedSeries::one(order), TruncatedSeries::one(order)],
            vec![TruncatedSeries::zero(order), TruncatedSeries::one(order)],
        ];
        assert!(a.conjugate_basis(&off).is_err());
        // Singular at t = 0 (zero row).
        let singular = vec![
            vec![TruncatedSeries::zero(order), TruncatedSeries::zero(order)],
            vec![TruncatedSeries::zero(order), TruncatedSeries::one(order)],
        ];
        assert_eq!(
            a.conjugate_basis(&singular),
            Err(Error::SingularChangeOfBasis)
        );
    }

    #[test]
    fn multiply_is_bilinear() {
        let order = 6;
        let a = FrobeniusAlgebra::class_algebra(3, order).unwrap();
        let x = constant_element(&[(1, 2), (2, 1), (-1, 3)], order);
        let y = constant_element(&[(0, 1), (1, 1), (5, 1)], order);
        let z = constant_element(&[(3, 1), (-2, 1), (1, 7)], order);
        let lhs = a.multiply(&x, &(&y + &z)).unwrap();
        let rhs = &a.multiply(&x, &y).unwrap() + &a.multiply(&x, &z).unwrap();
        assert_eq!(lhs, rhs);
        let scaled = a.multiply(&x.scale(&rat(2, 5)), &y).unwrap();
        assert_eq!(scaled, a.multiply(&x, &y).unwrap().scale(&rat(2, 5)));
    }

    #[test]
    fn algebra_json_roundtrip() {
        let a = FrobeniusAlgebra::class_algebra(2, 3).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains(r#""rank":2"#));
        assert!(json.contains(r#""labels":["(2)","(1,1)"]"#));
        let back: FrobeniusAlgebra = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        // Inconsistent declared rank is rejected.
        let bad = json.replacen(r#""rank":2"#, r#""rank":3"#, 1);
        assert!(serde_json::from_str::<FrobeniusAlgebra>(&bad).is_err());
    }

    #[test]
    fn partition_labels_resolve_indices() {
        let a = FrobeniusAlgebra::class_algebra(4, 2).unwrap();
        assert_eq!(a.label_index(&pt(&[2, 1, 1]).to_string()), Some(3));
        assert_eq!(a.label_index("(9)"), None);
    }
}
