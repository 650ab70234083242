//! Surface invariants: models, relative tensors, gluing, and the
//! permutation-counting oracle.
//!
//! A surface is a genus g with an ordered list of boundary circles, each
//! labelled by a partition of the degree d. Three models evaluate it:
//!
//! * [`TqftModel::Dw`] — the character sum
//!   sum_R (d!/dim R)^(2g-2) prod_i chi_R(alpha_i) d! / (z(alpha_i) dim R),
//!   a rational constant equal (by Burnside-style counting) to the
//!   weighted number of permutation tuples counted by
//!   [`hurwitz_brute_force`];
//! * [`TqftModel::Algebra`] — state-sum evaluation mu(H^g e_alpha1 ...)
//!   inside an explicit Frobenius algebra whose basis is labelled by
//!   partition strings, with H the handle element sum eta^{ij} b_i b_j;
//! * [`TqftModel::D1`] — the deformed degree-one theory in closed form.
//!
//! [`RelativeTensor`] tabulates an invariant over all boundary labels at
//! once, with raised or lowered slots; gluing boundary circles contracts
//! slots with the weight z(gamma) carried by the pairing. Indices are
//! dense and row-major over partitions in canonical order, so tensors
//! compare exactly.

// Multi-index contractions keep explicit indices; iterator forms would
// obscure which of the several arrays each index addresses.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::closedforms::d1_relative;
use crate::error::{Error, Result};
use crate::frobenius::{invert_series_matrix, AlgebraElement, FrobeniusAlgebra};
use crate::partitions::{enumerate, factorial, Partition};
use crate::perm::Perm;
use crate::series::{rat_int, TruncatedSeries};
use crate::symchar::CharacterTable;

/// Default ceiling on the number of permutation tuples the brute-force
/// counter will enumerate. Override per call, or through `GWTQFT_BUDGET`
/// in the command-line tool.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A genus-g surface with ordered boundary circles labelled by
/// partitions of a fixed degree d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    d: usize,
    genus: usize,
    boundaries: Vec<Partition>,
}

impl SurfaceSpec {
    /// Validate that every boundary label is a partition of d.
    pub fn new(d: usize, genus: usize, boundaries: Vec<Partition>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("surface degree must be at least 1".into()));
        }
        for alpha in &boundaries {
            if alpha.size() != d {
                return Err(Error::InvalidPartition(format!(
                    "boundary label {alpha} is not a partition of {d}"
                )));
            }
        }
        Ok(SurfaceSpec {
            d,
            genus,
            boundaries,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundaries(&self) -> &[Partition] {
        &self.boundaries
    }
}

/// Which evaluation to use for surface invariants.
#[derive(Debug, Clone)]
pub enum TqftModel {
    /// The character-sum model; every invariant is a rational constant.
    Dw,
    /// State-sum evaluation in an explicit Frobenius algebra whose basis
    /// labels are partition strings, e.g. a class algebra.
    Algebra(FrobeniusAlgebra),
    /// The deformed degree-one theory s^(2g - 2 + r); only valid for d = 1.
    D1,
}

/// The deformed degree-one Frobenius algebra: rank one with basis e
/// labelled "(1)", e * e = s e, unit s^{-1} e and mu(e) = s^{-1}, where s
/// is the normalized sine. Its eigenvalue is s^2.
pub fn d1_algebra(order: usize) -> FrobeniusAlgebra {
    let s = crate::closedforms::sine_quotient(order);
    let s_inv = s.invert().expect("the normalized sine is a unit");
    FrobeniusAlgebra::new(
        vec![Partition::new(vec![1]).expect("valid partition").to_string()],
        vec![vec![vec![s]]],
        vec![s_inv.clone()],
        vec![s_inv],
    )
    .expect("well-formed rank-one algebra")
}

/// The character-sum invariant of a surface: an exact rational number.
pub fn dw_invariant(d: usize, genus: usize, boundaries: &[Partition]) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::Domain("surface degree must be at least 1".into()));
    }
    let table = CharacterTable::get(d);
    let indices: Vec<usize> = boundaries
        .iter()
        .map(|alpha| {
            table.index_of(alpha).ok_or_else(|| {
                Error::InvalidPartition(format!("{alpha} is not a partition of {d}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let d_fact = rat_int(factorial(d) as i64);
    let euler = (2 * genus as i64 - 2) as i32;
    let mut total = BigRational::zero();
    for r in 0..table.partitions().len() {
        let dim = rat_int(table.dimension(r) as i64);
        let base = &d_fact / &dim;
        let mut term = Pow::pow(&base, euler);
        for (&a, alpha) in indices.iter().zip(boundaries) {
            let weight = rat_int(table.value(r, a)) * &d_fact
                / (rat_int(alpha.centralizer_order() as i64) * &dim);
            term *= weight;
        }
        total += term;
    }
    Ok(total)
}

/// Evaluates surfaces in a fixed Frobenius algebra, hoisting the handle
/// element H = sum eta^{ij} b_i b_j and a quick structural check
/// (commutativity, unit, nondegenerate pairing) out of the per-surface
/// work. Run [`FrobeniusAlgebra::check_axioms`] separately for a full
/// audit of an untrusted algebra.
pub struct SurfaceEvaluator<'a> {
    algebra: &'a FrobeniusAlgebra,
    handle: AlgebraElement,
}

impl<'a> SurfaceEvaluator<'a> {
    pub fn new(algebra: &'a FrobeniusAlgebra) -> Result<Self> {
        algebra.check_axioms_quick()?;
        let eta = algebra.pairing()?;
        let eta_inv = invert_series_matrix(&eta)
            .map_err(|_| Error::InvalidAlgebra("the pairing mu(b_i b_j) is degenerate".into()))?;
        let n = algebra.rank();
        let order = algebra.order();
        let mut coords = vec![TruncatedSeries::zero(order); n];
        for i in 0..n {
            for j in 0..n {
                if eta_inv[i][j].is_zero() {
                    continue;
                }
                for (k, target) in coords.iter_mut().enumerate() {
                    let m = algebra.mult_entry(i, j, k);
                    if !m.is_zero() {
                        *target = &*target + &(&eta_inv[i][j] * m);
                    }
                }
            }
        }
        let handle = AlgebraElement::new(coords)?;
        Ok(SurfaceEvaluator { algebra, handle })
    }

    /// The handle element H.
    pub fn handle(&self) -> &AlgebraElement {
        &self.handle
    }

    /// mu(H^genus * prod boundaries).
    pub fn evaluate(
        &self,
        genus: usize,
        boundaries: &[AlgebraElement],
    ) -> Result<TruncatedSeries> {
        let mut acc = self.algebra.unit();
        for _ in 0..genus {
            acc = self.algebra.multiply(&acc, &self.handle)?;
        }
        for b in boundaries {
            acc = self.algebra.multiply(&acc, b)?;
        }
        self.algebra.counit_of(&acc)
    }
}

/// Basis element of an algebra whose labels are partition strings.
fn partition_basis(algebra: &FrobeniusAlgebra, alpha: &Partition) -> Result<AlgebraElement> {
    let label = alpha.to_string();
    let index = algebra.label_index(&label).ok_or_else(|| {
        Error::Domain(format!("algebra has no basis element labelled {label}"))
    })?;
    Ok(algebra.basis_element(index))
}

/// Evaluate one surface in the chosen model, as a series of the given
/// order (a constant series for the character-sum model).
pub fn evaluate_relative(
    model: &TqftModel,
    spec: &SurfaceSpec,
    order: usize,
) -> Result<TruncatedSeries> {
    match model {
        TqftModel::Dw => Ok(TruncatedSeries::constant(
            dw_invariant(spec.d, spec.genus, &spec.boundaries)?,
            order,
        )),
        TqftModel::D1 => {
            if spec.d != 1 {
                return Err(Error::Domain(format!(
                    "the degree-one model cannot evaluate degree {}",
                    spec.d
                )));
            }
            Ok(d1_relative(spec.genus, spec.boundaries.len(), order))
        }
        TqftModel::Algebra(algebra) => {
            if algebra.order() != order {
                return Err(Error::OrderMismatch {
                    left: algebra.order(),
                    right: order,
                });
            }
            let evaluator = SurfaceEvaluator::new(algebra)?;
            let elements = spec
                .boundaries
                .iter()
                .map(|alpha| partition_basis(algebra, alpha))
                .collect::<Result<Vec<_>>>()?;
            evaluator.evaluate(spec.genus, &elements)
        }
    }
}

/// The invariant of a genus-g surface tabulated over every assignment of
/// partition labels to its boundary slots.
///
/// Entries are stored densely, row-major over partitions of d in
/// canonical order. Each slot is lowered (the plain invariant) or raised
/// (multiplied by z(gamma), the inverse pairing weight); gluing two
/// lowered slots carries the weight z(gamma), while composing a raised
/// slot against a lowered one is a plain sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeTensor {
    d: usize,
    genus: usize,
    order: usize,
    partitions: Vec<Partition>,
    raised: Vec<bool>,
    entries: Vec<TruncatedSeries>,
}

impl RelativeTensor {
    /// Tabulate the genus-g surface with `arity` boundary slots, all
    /// lowered. `order` must match the algebra's order for the algebra
    /// model.
    pub fn build(
        model: &TqftModel,
        d: usize,
        genus: usize,
        arity: usize,
        order: usize,
    ) -> Result<RelativeTensor> {
        if d == 0 {
            return Err(Error::Domain("surface degree must be at least 1".into()));
        }
        let partitions = enumerate(d);
        let np = partitions.len();
        let total = np.pow(arity as u32);
        let mut entries = Vec::with_capacity(total);
        match model {
            TqftModel::Dw => {
                let mut labels = Vec::with_capacity(arity);
                for idx in MultiIndex::new(np, arity) {
                    labels.clear();
                    labels.extend(idx.iter().map(|&i| partitions[i].clone()));
                    entries.push(TruncatedSeries::constant(
                        dw_invariant(d, genus, &labels)?,
                        order,
                    ));
                }
            }
            TqftModel::D1 => {
                if d != 1 {
                    return Err(Error::Domain(format!(
                        "the degree-one model cannot evaluate degree {d}"
                    )));
                }
                let value = d1_relative(genus, arity, order);
                entries.resize(total, value);
            }
            TqftModel::Algebra(algebra) => {
                if algebra.order() != order {
                    return Err(Error::OrderMismatch {
                        left: algebra.order(),
                        right: order,
                    });
                }
                let evaluator = SurfaceEvaluator::new(algebra)?;
                let basis = partitions
                    .iter()
                    .map(|alpha| partition_basis(algebra, alpha))
                    .collect::<Result<Vec<_>>>()?;
                let mut start = algebra.unit();
                for _ in 0..genus {
                    start = algebra.multiply(&start, evaluator.handle())?;
                }
                // Depth-first over slots so products of index prefixes are
                // shared across the table.
                fill_products(algebra, &basis, &start, arity, &mut entries)?;
            }
        }
        Ok(RelativeTensor {
            d,
            genus,
            order,
            partitions,
            raised: vec![false; arity],
            entries,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.raised.len()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn raised(&self) -> &[bool] {
        &self.raised
    }

    /// Entry at a full multi-index (one partition index per slot).
    pub fn entry(&self, index: &[usize]) -> Result<&TruncatedSeries> {
        if index.len() != self.arity() {
            return Err(Error::Domain(format!(
                "index has {} slots, tensor has {}",
                index.len(),
                self.arity()
            )));
        }
        let np = self.partitions.len();
        let mut flat = 0;
        for &i in index {
            if i >= np {
                return Err(Error::Domain(format!(
                    "partition index {i} out of range (only {np} partitions)"
                )));
            }
            flat = flat * np + i;
        }
        Ok(&self.entries[flat])
    }

    /// The value of an arity-zero tensor.
    pub fn scalar(&self) -> Result<TruncatedSeries> {
        if self.arity() != 0 {
            return Err(Error::Domain(format!(
                "tensor still has {} open slots",
                self.arity()
            )));
        }
        Ok(self.entries[0].clone())
    }

    /// Multiply the slot's entries by z(gamma), marking it raised.
    pub fn raise_index(&self, slot: usize) -> Result<RelativeTensor> {
        self.reweight(slot, true)
    }

    /// Divide the slot's entries by z(gamma), marking it lowered.
    pub fn lower_index(&self, slot: usize) -> Result<RelativeTensor> {
        self.reweight(slot, false)
    }

    fn reweight(&self, slot: usize, raise: bool) -> Result<RelativeTensor> {
        if slot >= self.arity() {
            return Err(Error::Domain(format!(
                "slot {slot} out of range for arity {}",
                self.arity()
            )));
        }
        if self.raised[slot] == raise {
            return Err(Error::Domain(format!(
                "slot {slot} is already {}",
                if raise { "raised" } else { "lowered" }
            )));
        }
        let np = self.partitions.len();
        let stride = np.pow((self.arity() - 1 - slot) as u32);
        let weights: Vec<BigRational> = self
            .partitions
            .iter()
            .map(|p| {
                let z = rat_int(p.centralizer_order() as i64);
                if raise {
                    z
                } else {
                    z.recip()
                }
            })
            .collect();
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(flat, s)| s.scale(&weights[(flat / stride) % np]))
            .collect();
        let mut raised = self.raised.clone();
        raised[slot] = raise;
        Ok(RelativeTensor {
            d: self.d,
            genus: self.genus,
            order: self.order,
            partitions: self.partitions.clone(),
            raised,
            entries,
        })
    }

    fn check_compatible(&self, other: &RelativeTensor) -> Result<()> {
        if self.d != other.d {
            return Err(Error::Domain(format!(
                "cannot glue degree {} against degree {}",
                self.d, other.d
            )));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Glue the last slot of each tensor together (both lowered):
    /// sum_gamma z(gamma) T1[.., gamma] T2[.., gamma]. The result has
    /// genus g1 + g2 and the remaining slots of T1 then T2.
    pub fn glue_separating(t1: &RelativeTensor, t2: &RelativeTensor) -> Result<RelativeTensor> {
        t1.check_compatible(t2)?;
        if t1.arity() == 0 || t2.arity() == 0 {
            return Err(Error::Domain("gluing needs a boundary slot on each side".into()));
        }
        if *t1.raised.last().unwrap() || *t2.raised.last().unwrap() {
            return Err(Error::Domain(
                "separating gluing expects both glued slots lowered".into(),
            ));
        }
        let np = t1.partitions.len();
        let weights = centralizer_weights(&t1.partitions);
        let blocks1 = t1.entries.len() / np;
        let blocks2 = t2.entries.len() / np;
        let mut entries = Vec::with_capacity(blocks1 * blocks2);
        for p1 in 0..blocks1 {
            for p2 in 0..blocks2 {
                let mut acc = TruncatedSeries::zero(t1.order);
                for g in 0..np {
                    let a = &t1.entries[p1 * np + g];
                    let b = &t2.entries[p2 * np + g];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b).scale(&weights[g]);
                    }
                }
                entries.push(acc);
            }
        }
        let mut raised = t1.raised[..t1.arity() - 1].to_vec();
        raised.extend_from_slice(&t2.raised[..t2.arity() - 1]);
        Ok(RelativeTensor {
            d: t1.d,
            genus: t1.genus + t2.genus,
            order: t1.order,
            partitions: t1.partitions.clone(),
            raised,
            entries,
        })
    }

    /// Glue the last two slots of one tensor together (both lowered):
    /// sum_gamma z(gamma) T[.., gamma, gamma]. The result has genus g + 1.
    pub fn glue_nonseparating(t: &RelativeTensor) -> Result<RelativeTensor> {
        let arity = t.arity();
        if arity < 2 {
            return Err(Error::Domain(
                "self-gluing needs two boundary slots".into(),
            ));
        }
        if t.raised[arity - 1] || t.raised[arity - 2] {
            return Err(Error::Domain(
                "self-gluing expects both glued slots lowered".into(),
            ));
        }
        let np = t.partitions.len();
        let weights = centralizer_weights(&t.partitions);
        let blocks = t.entries.len() / (np * np);
        let mut entries = Vec::with_capacity(blocks);
        for p in 0..blocks {
            let mut acc = TruncatedSeries::zero(t.order);
            for g in 0..np {
                let v = &t.entries[p * np * np + g * np + g];
                if !v.is_zero() {
                    acc = &acc + &v.scale(&weights[g]);
                }
            }
            entries.push(acc);
        }
        Ok(RelativeTensor {
            d: t.d,
            genus: t.genus + 1,
            order: t.order,
            partitions: t.partitions.clone(),
            raised: t.raised[..arity - 2].to_vec(),
            entries,
        })
    }

    /// Contract the last s slots of T1 (raised) against the first s slots
    /// of T2 (lowered) by a plain sum over labels. The result has genus
    /// g1 + g2 + s - 1: one gluing connects the surfaces, each further
    /// one adds a handle.
    pub fn compose(t1: &RelativeTensor, t2: &RelativeTensor, s: usize) -> Result<RelativeTensor> {
        t1.check_compatible(t2)?;
        if s == 0 {
            return Err(Error::Domain(
                "composition must glue at least one circle".into(),
            ));
        }
        if s > t1.arity() || s > t2.arity() {
            return Err(Error::Domain(format!(
                "cannot glue {s} circles between arities {} and {}",
                t1.arity(),
                t2.arity()
            )));
        }
        let a1 = t1.arity();
        if !t1.raised[a1 - s..].iter().all(|&r| r) {
            return Err(Error::Domain(
                "composition expects the contracted slots of the left tensor raised".into(),
            ));
        }
        if t2.raised[..s].iter().any(|&r| r) {
            return Err(Error::Domain(
                "composition expects the contracted slots of the right tensor lowered".into(),
            ));
        }
        let np = t1.partitions.len();
        let middle = np.pow(s as u32);
        let blocks1 = t1.entries.len() / middle;
        let blocks2 = t2.entries.len() / middle;
        let mut entries = Vec::with_capacity(blocks1 * blocks2);
        for p1 in 0..blocks1 {
            for p2 in 0..blocks2 {
                let mut acc = TruncatedSeries::zero(t1.order);
                for g in 0..middle {
                    let a = &t1.entries[p1 * middle + g];
                    let b = &t2.entries[g * blocks2 + p2];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        let mut raised = t1.raised[..a1 - s].to_vec();
        raised.extend_from_slice(&t2.raised[s..]);
        Ok(RelativeTensor {
            d: t1.d,
            genus: t1.genus + t2.genus + s - 1,
            order: t1.order,
            partitions: t1.partitions.clone(),
            raised,
            entries,
        })
    }
}

fn centralizer_weights(partitions: &[Partition]) -> Vec<BigRational> {
    partitions
        .iter()
        .map(|p| rat_int(p.centralizer_order() as i64))
        .collect()
}

/// Depth-first accumulation of mu(prefix * e_{i1} ... e_{ik}) over all
/// index suffixes, pushing entries in row-major order.
fn fill_products(
    algebra: &FrobeniusAlgebra,
    basis: &[AlgebraElement],
    prefix: &AlgebraElement,
    slots: usize,
    entries: &mut Vec<TruncatedSeries>,
) -> Result<()> {
    if slots == 0 {
        entries.push(algebra.counit_of(prefix)?);
        return Ok(());
    }
    for b in basis {
        let next = algebra.multiply(prefix, b)?;
        fill_products(algebra, basis, &next, slots - 1, entries)?;
    }
    Ok(())
}

/// Row-major odometer over `arity` digits in 0..np.
struct MultiIndex {
    np: usize,
    current: Vec<usize>,
    done: bool,
}

impl MultiIndex {
    fn new(np: usize, arity: usize) -> Self {
        MultiIndex {
            np,
            current: vec![0; arity],
            done: np == 0 && arity > 0,
        }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.current.clone();
        let mut carry = true;
        for digit in self.current.iter_mut().rev() {
            *digit += 1;
            if *digit < self.np {
                carry = false;
                break;
            }
            *digit = 0;
        }
        if carry {
            self.done = true;
        }
        Some(item)
    }
}

/// Count (a_1, b_1, .., a_g, b_g, c_1, .., c_r) with each c_j in the
/// conjugacy class of alpha_j and prod [a_i, b_i] prod c_j = id, weighted
/// by 1/d!. Refuses to start when the tuple count would exceed `budget`.
///
/// This is a deliberately naive enumeration kept independent of the
/// character theory, for use as an oracle.
pub fn hurwitz_brute_force(
    d: usize,
    genus: usize,
    boundaries: &[Partition],
    budget: u64,
) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::Domain("surface degree must be at least 1".into()));
    }
    for alpha in boundaries {
        if alpha.size() != d {
            return Err(Error::InvalidPartition(format!(
                "boundary label {alpha} is not a partition of {d}"
            )));
        }
    }
    let required = tuple_count_estimate(d, genus, boundaries);
    if required > u128::from(budget) {
        return Err(Error::TooLarge {
            required,
            budget,
        });
    }
    let identity = Perm::identity(d);
    let count = if genus == 0 && boundaries.is_empty() {
        // The empty tuple multiplies to the identity.
        1
    } else {
        let group = Perm::all(d);
        let classes: Vec<Vec<Perm>> = boundaries.iter().map(Perm::class).collect();
        count_identity_products(&group, genus, &classes, &identity, &identity)
    };
    Ok(BigRational::new(count.into(), big_factorial(d)))
}

fn big_factorial(d: usize) -> BigInt {
    let mut f = BigInt::from(1u32);
    for k in 2..=d {
        f *= k as u64;
    }
    f
}

/// Work estimate: d! for listing the group, plus (d!)^(2g) * prod
/// |class(alpha_j)| tuples, saturating at u128::MAX. The closed genus-0
/// surface enumerates only the empty tuple.
fn tuple_count_estimate(d: usize, genus: usize, boundaries: &[Partition]) -> u128 {
    if genus == 0 && boundaries.is_empty() {
        return 1;
    }
    let mut fact: u128 = 1;
    for k in 2..=d {
        match fact.checked_mul(k as u128) {
            Some(v) => fact = v,
            None => return u128::MAX,
        }
    }
    if fact > u128::from(u64::MAX) {
        // Larger than any budget; bail before computing class sizes,
        // whose u64 arithmetic only covers d <= 20.
        return u128::MAX;
    }
    let mut tuples: u128 = 1;
    let mut grow = |factor: u128| -> bool {
        match tuples.checked_mul(factor) {
            Some(v) => {
                tuples = v;
                true
            }
            None => false,
        }
    };
    for _ in 0..2 * genus {
        if !grow(fact) {
            return u128::MAX;
        }
    }
    for alpha in boundaries {
        let class = fact / u128::from(alpha.centralizer_order());
        if !grow(class) {
            return u128::MAX;
        }
    }
    fact.saturating_add(tuples)
}

fn count_identity_products(
    group: &[Perm],
    handles_left: usize,
    classes: &[Vec<Perm>],
    prefix: &Perm,
    identity: &Perm,
) -> u64 {
    if handles_left > 0 {
        let mut total = 0;
        for a in group {
            for b in group {
                let next = prefix.compose(&a.commutator(b));
                total += count_identity_products(group, handles_left - 1, classes, &next, identity);
            }
        }
        total
    } else if let Some((first, rest)) = classes.split_first() {
        let mut total = 0;
        for c in first {
            let next = prefix.compose(c);
            total += count_identity_products(group, 0, rest, &next, identity);
        }
        total
    } else {
        u64::from(prefix == identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{d2_closed, fp_genus0};
    use crate::series::rat;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spec(d: usize, genus: usize, boundaries: &[&[usize]]) -> SurfaceSpec {
        SurfaceSpec::new(
            d,
            genus,
            boundaries.iter().map(|b| pt(b)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn character_sum_torus_counts_partitions() {
        for (d, p) in [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7)] {
            assert_eq!(dw_invariant(d, 1, &[]).unwrap(), rat_int(p));
        }
    }

    #[test]
    fn character_sum_genus_two_values() {
        assert_eq!(dw_invariant(2, 2, &[]).unwrap(), rat_int(8));
        assert_eq!(dw_invariant(3, 2, &[]).unwrap(), rat_int(81));
        assert_eq!(dw_invariant(4, 2, &[]).unwrap(), rat_int(1424));
    }

    #[test]
    fn character_sum_annulus_is_the_inverse_pairing() {
        for d in 1..=4 {
            let parts = enumerate(d);
            for a in &parts {
                for b in &parts {
                    let value = dw_invariant(d, 0, &[a.clone(), b.clone()]).unwrap();
                    let expected = if a == b {
                        rat(1, a.centralizer_order() as i64)
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(value, expected, "d={d} alpha={a} beta={b}");
                }
            }
        }
    }

    #[test]
    fn class_algebra_model_matches_character_sums() {
        let d = 3;
        let order = 4;
        let algebra = FrobeniusAlgebra::class_algebra(d, order).unwrap();
        let model = TqftModel::Algebra(algebra);
        let cases: &[(usize, &[&[usize]])] = &[
            (0, &[]),
            (0, &[&[2, 1]]),
            (0, &[&[3], &[3]]),
            (1, &[]),
            (1, &[&[3]]),
            (2, &[]),
            (1, &[&[2, 1], &[2, 1]]),
        ];
        for &(genus, boundaries) in cases {
            let s = spec(d, genus, boundaries);
            let via_algebra = evaluate_relative(&model, &s, order).unwrap();
            let via_characters = evaluate_relative(&TqftModel::Dw, &s, order).unwrap();
            assert_eq!(via_algebra, via_characters, "g={genus} {boundaries:?}");
        }
    }

    #[test]
    fn degree_one_model_through_its_algebra() {
        let order = 12;
        let algebra = d1_algebra(order);
        assert!(algebra.check_axioms().is_empty());
        let model = TqftModel::Algebra(algebra);
        for genus in 0..=3 {
            for r in 0..=3 {
                let s = spec(1, genus, &vec![[1].as_slice(); r]);
                let via_algebra = evaluate_relative(&model, &s, order).unwrap();
                let closed_form = evaluate_relative(&TqftModel::D1, &s, order).unwrap();
                assert_eq!(via_algebra, closed_form, "g={genus} r={r}");
            }
        }
    }

    #[test]
    fn degree_one_eigenvalue_is_s_squared() {
        let order = 10;
        let algebra = d1_algebra(order);
        let seeds = vec![algebra.unit()];
        let lambdas = algebra.eigenvalues(&seeds).unwrap();
        let s = crate::closedforms::sine_quotient(order);
        assert_eq!(lambdas, vec![&s * &s]);
    }

    #[test]
    fn relative_tensor_entries_and_indexing() {
        let t = RelativeTensor::build(&TqftModel::Dw, 2, 0, 2, 3).unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.genus(), 0);
        // Partitions of 2 in canonical order: (2), (1,1); both have z = 2.
        let half = TruncatedSeries::constant(rat(1, 2), 3);
        assert_eq!(t.entry(&[0, 0]).unwrap(), &half);
        assert_eq!(t.entry(&[1, 1]).unwrap(), &half);
        assert!(t.entry(&[0, 1]).unwrap().is_zero());
        assert!(t.entry(&[0]).is_err());
        assert!(t.entry(&[2, 0]).is_err());
        assert!(t.scalar().is_err());
    }

    #[test]
    fn gluing_an_annulus_acts_as_identity() {
        for d in 1..=3 {
            let order = 3;
            let annulus = RelativeTensor::build(&TqftModel::Dw, d, 0, 2, order).unwrap();
            let pants = RelativeTensor::build(&TqftModel::Dw, d, 1, 3, order).unwrap();
            let glued = RelativeTensor::glue_separating(&pants, &annulus).unwrap();
            assert_eq!(glued, pants, "d={d}");
        }
    }

    #[test]
    fn self_gluing_an_annulus_gives_the_torus() {
        for d in 1..=4 {
            let order = 2;
            let annulus = RelativeTensor::build(&TqftModel::Dw, d, 0, 2, order).unwrap();
            let torus = RelativeTensor::glue_nonseparating(&annulus).unwrap();
            assert_eq!(torus.genus(), 1);
            assert_eq!(
                torus.scalar().unwrap(),
                TruncatedSeries::constant(rat_int(enumerate(d).len() as i64), order),
                "d={d}"
            );
        }
    }

    #[test]
    fn composition_with_raised_annulus_is_identity() {
        let d = 3;
        let order = 2;
        let annulus = RelativeTensor::build(&TqftModel::Dw, d, 0, 2, order).unwrap();
        let raised = annulus.raise_index(1).unwrap();
        let cap = RelativeTensor::build(&TqftModel::Dw, d, 1, 1, order).unwrap();
        let composed = RelativeTensor::compose(&raised, &cap, 1).unwrap();
        assert_eq!(composed, cap);
    }

    #[test]
    fn raise_and_lower_are_inverse_and_validated() {
        let t = RelativeTensor::build(&TqftModel::Dw, 3, 1, 2, 2).unwrap();
        let up = t.raise_index(0).unwrap();
        assert!(up.raised()[0]);
        assert!(up.raise_index(0).is_err());
        let down = up.lower_index(0).unwrap();
        assert_eq!(down, t);
        assert!(t.lower_index(0).is_err());
        assert!(t.raise_index(5).is_err());
    }

    #[test]
    fn separating_gluing_checks_slot_state() {
        let t = RelativeTensor::build(&TqftModel::Dw, 2, 0, 2, 2).unwrap();
        let raised = t.raise_index(1).unwrap();
        assert!(RelativeTensor::glue_separating(&raised, &t).is_err());
        let other_degree = RelativeTensor::build(&TqftModel::Dw, 3, 0, 2, 2).unwrap();
        assert!(RelativeTensor::glue_separating(&t, &other_degree).is_err());
        let scalar = RelativeTensor::build(&TqftModel::Dw, 2, 1, 0, 2).unwrap();
        assert!(RelativeTensor::glue_separating(&t, &scalar).is_err());
    }

    #[test]
    fn degree_two_closed_surfaces_from_gluing_match_the_closed_form() {
        // Genus 2 from two one-holed tori, in the character-sum model.
        let order = 2;
        let torus_hole = RelativeTensor::build(&TqftModel::Dw, 2, 1, 1, order).unwrap();
        let genus2 = RelativeTensor::glue_separating(&torus_hole, &torus_hole).unwrap();
        assert_eq!(genus2.genus(), 2);
        assert_eq!(
            genus2.scalar().unwrap(),
            TruncatedSeries::constant(rat_int(8), order)
        );
        // The closed form agrees at t = 0.
        assert_eq!(d2_closed(2, 1).constant_term(), &rat_int(8));
    }

    #[test]
    fn brute_force_matches_character_sums() {
        let budget = DEFAULT_BUDGET;
        // Closed surfaces.
        for d in 1..=3 {
            for genus in 0..=2 {
                let counted = hurwitz_brute_force(d, genus, &[], budget).unwrap();
                let predicted = dw_invariant(d, genus, &[]).unwrap();
                assert_eq!(counted, predicted, "closed d={d} g={genus}");
            }
        }
        // With boundaries.
        let cases: &[(usize, usize, &[&[usize]])] = &[
            (2, 0, &[&[2], &[2]]),
            (2, 1, &[&[2]]),
            (3, 0, &[&[3], &[3]]),
            (3, 0, &[&[2, 1], &[2, 1], &[3]]),
            (3, 1, &[&[3]]),
        ];
        for &(d, genus, boundaries) in cases {
            let labels: Vec<Partition> = boundaries.iter().map(|b| pt(b)).collect();
            let counted = hurwitz_brute_force(d, genus, &labels, budget).unwrap();
            let predicted = dw_invariant(d, genus, &labels).unwrap();
            assert_eq!(counted, predicted, "d={d} g={genus} {boundaries:?}");
        }
    }

    #[test]
    fn brute_force_reference_values() {
        // Two-sheeted genus-zero cover with two simple branch points.
        assert_eq!(
            hurwitz_brute_force(2, 0, &[pt(&[2]), pt(&[2])], DEFAULT_BUDGET).unwrap(),
            rat(1, 2)
        );
        // Torus with one full-cycle boundary in degree 3.
        assert_eq!(
            hurwitz_brute_force(3, 1, &[pt(&[3])], DEFAULT_BUDGET).unwrap(),
            rat_int(3)
        );
        // Genus zero closed is 1/d!.
        assert_eq!(
            hurwitz_brute_force(4, 0, &[], DEFAULT_BUDGET).unwrap(),
            rat(1, 24)
        );
    }

    #[test]
    fn brute_force_respects_its_budget() {
        let err = hurwitz_brute_force(3, 1, &[], 10).unwrap_err();
        match err {
            // 6 to list S_3, then 6^2 pairs (a, b).
            Error::TooLarge { required, budget } => {
                assert_eq!(required, 42);
                assert_eq!(budget, 10);
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
        // Degree large enough to overflow the estimate still errors cleanly.
        assert!(matches!(
            hurwitz_brute_force(40, 3, &[], u64::MAX),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn surface_spec_validates_boundaries() {
        assert!(SurfaceSpec::new(3, 0, vec![pt(&[2, 1])]).is_ok());
        assert!(matches!(
            SurfaceSpec::new(3, 0, vec![pt(&[2, 2])]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(SurfaceSpec::new(0, 0, vec![]).is_err());
    }

    #[test]
    fn degree_one_tensor_genus_zero_matches_free_point_series() {
        let order = 17;
        let sphere = RelativeTensor::build(&TqftModel::D1, 1, 0, 0, order).unwrap();
        assert_eq!(sphere.scalar().unwrap(), fp_genus0(1, order));
    }

    #[test]
    fn evaluator_handle_of_the_class_algebra() {
        // For d = 2 the handle is sum_gamma z(gamma) e_gamma e_gamma
        // = 2 e_(1,1) + 2 e_(1,1) = ... computed through eta^{-1}.
        let algebra = FrobeniusAlgebra::class_algebra(2, 2).unwrap();
        let evaluator = SurfaceEvaluator::new(&algebra).unwrap();
        // e_(2) e_(2) = e_(1,1) and e_(1,1)^2 = e_(1,1), with z = 2 each:
        // H = 2 e_(1,1) + 2 e_(1,1) = 4 e_(1,1)... in coordinates:
        let coords = evaluator.handle().coords();
        assert!(coords[0].is_zero());
        assert_eq!(coords[1], TruncatedSeries::constant(rat_int(4), 2));
    }
}
