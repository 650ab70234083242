//! Irreducible characters of symmetric groups and the structure constants
//! of their class algebras.
//!
//! Characters are computed by the Murnaghan-Nakayama rule: to evaluate
//! chi_lambda on a class, peel one cycle at a time (largest first) as a
//! border strip of the diagram, with sign (-1)^(strip height). Strips are
//! manipulated through first-column hook lengths (beta numbers), where
//! removing a strip of length k means lowering one beta number by k.
//!
//! Character tables are validated against row orthogonality and the hook
//! length formula before use; a failure there is an internal bug and
//! panics. Tables are cached per degree for the lifetime of the process.

// Multi-index contractions keep explicit indices; iterator forms would
// obscure which of the several arrays each index addresses.
#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, factorial, Partition};
use crate::perm::Perm;
use crate::series::rat_int;

/// chi_lambda(mu): the character of the irreducible representation
/// labelled by `rep`, evaluated on the class of cycle type `class`. Both
/// partitions must have the same size.
pub fn character(rep: &Partition, class: &Partition) -> Result<i64> {
    if rep.size() != class.size() {
        return Err(Error::Domain(format!(
            "character of a partition of {} on a class of {}",
            rep.size(),
            class.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn(rep.parts().to_vec(), class.parts(), &mut memo))
}

/// Murnaghan-Nakayama recursion. `cycles` is consumed front to back; the
/// memo key uses the remaining-cycle count because the list itself is
/// fixed for the duration of one top-level evaluation.
fn mn(
    shape: Vec<usize>,
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if cycles.is_empty() {
        debug_assert!(shape.is_empty());
        return 1;
    }
    let key = (shape, cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let shape = key.0.clone();
    let mut total = 0;
    for (sub, sign) in strip_removals(&shape, cycles[0]) {
        total += sign * mn(sub, &cycles[1..], memo);
    }
    memo.insert((shape, cycles.len()), total);
    total
}

/// All ways to remove a border strip of length k, as (new shape, sign).
///
/// In beta-number form (beta_i = shape_i + rows - 1 - i) a strip removal
/// replaces one beta value b by b - k, provided b - k is not already
/// present; the height of the strip is the number of beta values strictly
/// between the two, so the sign is (-1)^height.
fn strip_removals(shape: &[usize], k: usize) -> Vec<(Vec<usize>, i64)> {
    let rows = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + rows - 1 - i)
        .collect();
    let mut out = Vec::new();
    for i in 0..rows {
        if beta[i] < k {
            continue;
        }
        let target = beta[i] - k;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (rows - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((new_shape, sign));
    }
    out
}

/// The full character table of S_d, rows and columns both indexed by the
/// canonical partition order.
#[derive(Debug)]
pub struct CharacterTable {
    d: usize,
    partitions: Vec<Partition>,
    /// values[rep][class]
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// The cached table for S_d; computed on first use.
    pub fn get(d: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(table) = cache.lock().unwrap().get(&d) {
            return Arc::clone(table);
        }
        // Build outside the lock; degrees are small and a duplicated build
        // is cheaper than holding the mutex through the recursion.
        let table = Arc::new(CharacterTable::build(d));
        cache
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(table.clone())
            .clone()
    }

    /// Compute and validate the table. Panics on an internal inconsistency
    /// (orthogonality or dimension failure), which would poison every
    /// downstream tensor.
    fn build(d: usize) -> CharacterTable {
        let partitions = enumerate(d);
        let values: Vec<Vec<i64>> = partitions
            .iter()
            .map(|rep| {
                partitions
                    .iter()
                    .map(|class| character(rep, class).expect("sizes match"))
                    .collect()
            })
            .collect();
        let table = CharacterTable {
            d,
            partitions,
            values,
        };
        table.validate();
        table
    }

    fn validate(&self) {
        let n = self.partitions.len();
        // Row orthogonality: sum_alpha chi(alpha) chi'(alpha) / z(alpha)
        // is 1 on the diagonal and 0 off it.
        for a in 0..n {
            for b in a..n {
                let mut acc = BigRational::zero();
                for (c, class) in self.partitions.iter().enumerate() {
                    let prod = rat_int(self.values[a][c]) * rat_int(self.values[b][c]);
                    acc += prod / rat_int(class.centralizer_order() as i64);
                }
                let expected = rat_int(i64::from(a == b));
                assert_eq!(
                    acc, expected,
                    "character table of S_{} fails row orthogonality at ({a}, {b})",
                    self.d
                );
            }
        }
        // The identity column must reproduce the hook length dimensions.
        if n > 0 {
            let id_col = n - 1; // (1,...,1) is last in canonical order
            for (r, rep) in self.partitions.iter().enumerate() {
                assert_eq!(
                    self.values[r][id_col] as u64,
                    rep.hook_dimension(),
                    "character table of S_{} has a wrong dimension for {rep}",
                    self.d
                );
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// The canonical partition list indexing both axes.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// chi_(rep index)(class index).
    pub fn value(&self, rep: usize, class: usize) -> i64 {
        self.values[rep][class]
    }

    /// Position of a partition in the canonical order.
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    /// dim R for the rep at the given index.
    pub fn dimension(&self, rep: usize) -> u64 {
        self.partitions[rep].hook_dimension()
    }
}

/// Structure constants of the class algebra of S_d: with K_alpha the sum
/// of the class of cycle type alpha inside the group algebra,
/// K_alpha K_beta = sum_gamma a[alpha][beta][gamma] K_gamma.
#[derive(Debug)]
pub struct ClassProductTensor {
    partitions: Vec<Partition>,
    /// a[alpha][beta][gamma], all nonnegative integers.
    a: Vec<Vec<Vec<u64>>>,
}

impl ClassProductTensor {
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, alpha: usize, beta: usize, gamma: usize) -> u64 {
        self.a[alpha][beta][gamma]
    }
}

/// Compute the class-algebra structure constants of S_d.
///
/// Main route: the character expansion a_{ab}^c = |c_a| |c_b| / d! *
/// sum_R chi_R(a) chi_R(b) chi_R(c) / dim R (classes of S_d are
/// self-inverse, so no dualization is needed). For d <= 4 the result is
/// recomputed by direct convolution over the group and the two must agree;
/// a disagreement is an internal bug and panics.
pub fn class_product_constants(d: usize) -> ClassProductTensor {
    let table = CharacterTable::get(d);
    let parts = table.partitions().to_vec();
    let n = parts.len();
    let group_order = rat_int(factorial(d) as i64);
    let dims: Vec<BigRational> = (0..n).map(|r| rat_int(table.dimension(r) as i64)).collect();
    let mut a = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        let ci = rat_int(parts[i].class_size() as i64);
        for j in i..n {
            let cj = rat_int(parts[j].class_size() as i64);
            let scale = &ci * &cj / &group_order;
            for k in 0..n {
                let mut sum = BigRational::zero();
                for r in 0..n {
                    let prod = rat_int(table.value(r, i))
                        * rat_int(table.value(r, j))
                        * rat_int(table.value(r, k));
                    sum += prod / &dims[r];
                }
                let value = &scale * sum;
                assert!(
                    value.is_integer() && !value.is_negative(),
                    "class product constant a[{i}][{j}][{k}] of S_{d} is not a \
                     nonnegative integer: {value}"
                );
                let value = big_to_u64(&value.to_integer());
                a[i][j][k] = value;
                a[j][i][k] = value;
            }
        }
    }
    let tensor = ClassProductTensor {
        partitions: parts,
        a,
    };
    if d <= 4 {
        let brute = class_products_by_convolution(d);
        assert_eq!(
            tensor.a, brute,
            "class product constants of S_{d}: character formula disagrees \
             with direct convolution"
        );
    }
    tensor
}

fn big_to_u64(n: &BigInt) -> u64 {
    let (_, digits) = n.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => panic!("class product constant overflows u64"),
    }
}

/// Brute-force structure constants: multiply out the class sums inside the
/// group algebra and read off the coefficient of one representative per
/// class.
fn class_products_by_convolution(d: usize) -> Vec<Vec<Vec<u64>>> {
    let parts = enumerate(d);
    let n = parts.len();
    let classes: Vec<Vec<Perm>> = parts.iter().map(Perm::class).collect();
    let reps: Vec<Perm> = parts.iter().map(Perm::with_cycle_type).collect();
    let mut a = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, rep) in reps.iter().enumerate() {
                // Count pairs (x, y) in c_i x c_j with x y = rep.
                let count = classes[i]
                    .iter()
                    .filter(|x| {
                        let y = x.inverse().compose(rep);
                        y.cycle_type() == parts[j]
                    })
                    .count();
                a[i][j][k] = count as u64;
            }
        }
    }
    a
}
