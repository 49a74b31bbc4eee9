//! Integer partitions, multipartitions, and symmetric group characters.
//!
//! Characters of `S_n` are computed by the Murnaghan-Nakayama rule over
//! beta-sets (first-column hook lengths), memoized on the (shape, cycle
//! type) pair. Standard Young tableaux are counted by the hook length
//! formula; tests cross-check against direct enumeration.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed and canonical (no zero parts are stored).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p != 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate (transposed) shape.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    fn hook(&self, conj: &Partition, i: usize, j: usize) -> u32 {
        self.parts[i] - j as u32 + conj.parts[j] - i as u32 - 1
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut numer: u128 = 1;
        for k in 1..=n as u128 {
            numer *= k;
        }
        let mut denom: u128 = 1;
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                denom *= self.hook(&conj, i, j) as u128;
            }
        }
        debug_assert_eq!(numer % denom, 0);
        numer / denom
    }
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// `n! / (sizes_1! .. sizes_k!)`; the `sizes` need not exhaust `n`.
pub fn multinomial(n: u32, sizes: &[u32]) -> u128 {
    debug_assert!(sizes.iter().sum::<u32>() <= n);
    let mut result: u128 = 1;
    for k in 1..=n as u128 {
        result *= k;
    }
    for &s in sizes {
        for k in 1..=s as u128 {
            result /= k;
        }
    }
    result
}

/// Centralizer order of the class with cycle type `mu` in the symmetric
/// group: `prod_i i^(m_i) m_i!` over multiplicities.
pub fn cycle_type_centralizer(mu: &Partition) -> u128 {
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &part in mu.parts() {
        *mult.entry(part).or_insert(0) += 1;
    }
    let mut z: u128 = 1;
    for (i, m) in mult {
        for _ in 0..m {
            z *= i as u128;
        }
        for k in 1..=m as u128 {
            z *= k;
        }
    }
    z
}

/// Irreducible character of the symmetric group: shape `lambda`, class
/// cycle type `mu`, by the Murnaghan-Nakayama rule. Memoized globally.
pub fn sym_char_value(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        // Distinct sizes never pair up in this crate; treat as a hard bug.
        panic!("shape size {} != cycle type size {}", lambda.size(), mu.size());
    }
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    fn go(
        lambda: &[u32],
        mu: &[u32],
        cache: &Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>,
    ) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&hit) = cache.lock().unwrap().get(&key) {
            return hit;
        }
        let k = mu[0];
        let rest = &mu[1..];
        // Beta-set formulation: border strips of size k are moves
        // b -> b - k landing outside the set.
        let len = lambda.len();
        let betas: Vec<i64> =
            (0..len).map(|i| lambda[i] as i64 + (len - 1 - i) as i64).collect();
        let mut total = 0i64;
        for (i, &b) in betas.iter().enumerate() {
            let target = b - k as i64;
            if target < 0 || betas.contains(&target) {
                continue;
            }
            let height = betas.iter().filter(|&&x| target < x && x < b).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut new_betas: Vec<i64> = betas.clone();
            new_betas[i] = target;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let new_lambda: Vec<u32> = new_betas
                .iter()
                .enumerate()
                .map(|(j, &nb)| (nb - (len - 1 - j) as i64) as u32)
                .filter(|&p| p != 0)
                .collect();
            total += sign * go(&new_lambda, rest, cache);
        }
        cache.lock().unwrap().insert(key, total);
        total
    }
    go(lambda.parts(), mu.parts(), cache)
}

/// An r-tuple of partitions; the labels of wreath product characters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn total(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// Cyclic index shift: component `x` of the result is component
    /// `x - step mod r` of the input.
    pub fn shift(&self, step: usize) -> Multipartition {
        let r = self.components.len();
        let components =
            (0..r).map(|x| self.components[(x + r - step % r) % r].clone()).collect();
        Multipartition { components }
    }
}

impl std::fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

/// All r-tuples of partitions with total size `n`, in a fixed deterministic
/// order (component sizes chosen left to right, shapes in `partitions_of`
/// order).
pub fn multipartitions(r: u32, n: u32) -> Vec<Multipartition> {
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::new();
    fn rec(
        slots: u32,
        remaining: u32,
        current: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Multipartition { components: current.clone() });
            }
            return;
        }
        let max_here = if slots == 1 { remaining..=remaining } else { 0..=remaining };
        for m in max_here {
            for shape in partitions_of(m) {
                current.push(shape);
                rec(slots - 1, remaining - m, current, out);
                current.pop();
            }
        }
    }
    rec(r, n, &mut current, &mut out);
    out
}
