//! The reflection groups `G(r, p, n)`: the subgroup of `Z_r wr S_n` whose
//! phase sum lies in the subgroup of `Z_r` generated by `p`, where `p`
//! divides `r`. Enumeration, conjugacy classes, center, generators, and the
//! JSON cache format live here.

use std::collections::{HashMap, HashSet, VecDeque};

use num::integer::gcd;
use serde::{Deserialize, Serialize};

use crate::element::{PhaseVector, WreathElement};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Parameters `(r, p, n)` with `p | r`; `G(r, p, n)` has order `n! r^n / p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupKey {
    pub r: u32,
    pub p: u32,
    pub n: usize,
}

impl GroupKey {
    pub fn new(r: u32, p: u32, n: usize) -> Result<Self> {
        if r == 0 || p == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "key parameters must be positive, got ({r}, {p}, {n})"
            )));
        }
        if r % p != 0 {
            return Err(Error::InvalidParameter(format!("p = {p} must divide r = {r}")));
        }
        Ok(GroupKey { r, p, n })
    }

    /// `n! r^n / p`, saturating at `u128::MAX` for absurd parameters.
    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for k in 1..=self.n as u128 {
            o = o.saturating_mul(k);
        }
        for _ in 0..self.n {
            o = o.saturating_mul(self.r as u128);
        }
        o / self.p as u128
    }

    /// The ambient full wreath product `G(r, 1, n)`.
    pub fn ambient(&self) -> GroupKey {
        GroupKey { r: self.r, p: 1, n: self.n }
    }

    /// True for the two keys where the group is abelian but `n > 1`:
    /// `G(1,1,2)` and `G(2,2,2)`.
    pub fn is_abelian_exception(&self) -> bool {
        (self.r, self.p, self.n) == (1, 1, 2) || (self.r, self.p, self.n) == (2, 2, 2)
    }

    /// Membership test: the phase sum must be a multiple of `gcd(r, p) = p`.
    pub fn contains(&self, g: &WreathElement) -> bool {
        g.rank() == self.n
            && g.modulus() == self.r
            && g.delta() % gcd(self.r, self.p) == 0
    }
}

impl std::fmt::Debug for GroupKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G({},{},{})", self.r, self.p, self.n)
    }
}

impl std::fmt::Display for GroupKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G({},{},{})", self.r, self.p, self.n)
    }
}

/// Hard caps for exhaustive computations. Exceeding a cap is an error, never
/// a silent truncation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum group order that may be enumerated.
    pub max_elements: u64,
    /// Maximum number of assignment combinations a brute-force model search
    /// may visit.
    pub max_search: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_elements: 1_000_000, max_search: 1_000_000 }
    }
}

/// Named generators of the ambient wreath product, following the usual
/// presentation:
/// * `s[i]` (1-based `i < n`): the plain transposition `(i, i+1)`;
/// * `s_prime[i]`: the reflection `(e_i - e_{i+1}, (i, i+1))`;
/// * `refl`: `s = (e_1 - e_2, 1)`, so `s_1' = s_1 * s`;
/// * `t = (e_1, 1)` and the central `c = (e_1 + .. + e_n, 1)`.
pub struct StandardGenerators {
    pub s: Vec<WreathElement>,
    pub s_prime: Vec<WreathElement>,
    pub refl: Option<WreathElement>,
    pub t: WreathElement,
    pub c: WreathElement,
}

impl StandardGenerators {
    pub fn new(r: u32, n: usize) -> Self {
        let mut s = Vec::new();
        let mut s_prime = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let swap = Perm::transposition(n, i, i + 1);
            s.push(WreathElement::new(PhaseVector::zero(n, r), swap.clone()).unwrap());
            let mut phase = vec![0i64; n];
            phase[i] = 1;
            phase[i + 1] = -1;
            s_prime
                .push(WreathElement::new(PhaseVector::from_ints(&phase, r), swap).unwrap());
        }
        let refl = (n >= 2).then(|| {
            let mut phase = vec![0i64; n];
            phase[0] = 1;
            phase[1] = -1;
            WreathElement::new(PhaseVector::from_ints(&phase, r), Perm::identity(n)).unwrap()
        });
        let mut t_phase = vec![0i64; n];
        t_phase[0] = 1;
        let t = WreathElement::new(PhaseVector::from_ints(&t_phase, r), Perm::identity(n))
            .unwrap();
        let c = WreathElement::new(PhaseVector::from_ints(&vec![1; n], r), Perm::identity(n))
            .unwrap();
        StandardGenerators { s, s_prime, refl, t, c }
    }

    /// 1-based accessors matching the presentation's subscripts.
    pub fn s_i(&self, i: usize) -> &WreathElement {
        &self.s[i - 1]
    }

    pub fn s_prime_i(&self, i: usize) -> &WreathElement {
        &self.s_prime[i - 1]
    }
}

/// A generating set for `G(r, p, n)`: the transpositions, plus `s` when
/// `p > 1`, plus `t^p` when `p < r`. Identity elements are dropped.
pub fn generating_set(key: GroupKey) -> Vec<WreathElement> {
    let gens = StandardGenerators::new(key.r, key.n);
    let mut out: Vec<WreathElement> = gens.s.clone();
    if key.p > 1 {
        if let Some(refl) = &gens.refl {
            out.push(refl.clone());
        }
    }
    if key.p < key.r {
        out.push(gens.t.pow(key.p as i64));
    }
    out.retain(|g| !g.is_identity());
    out
}

/// The subgroup `(Z_r)^n intersect Z(G(r, p, n))`, always equal to
/// `{c^(j p / d) : 0 <= j < d r / p}` with `d = gcd(p, n)`. This is the full
/// center except at the two abelian exception keys.
pub fn central_phase_subgroup(key: GroupKey) -> Vec<WreathElement> {
    let d = gcd(key.p as u64, key.n as u64) as u32;
    let step = key.p / d;
    let count = (d as u64 * key.r as u64 / key.p as u64) as u32;
    let gens = StandardGenerators::new(key.r, key.n);
    let mut out: Vec<WreathElement> =
        (0..count).map(|j| gens.c.pow((j * step) as i64)).collect();
    out.sort();
    out
}

/// A fully enumerated `G(r, p, n)` with its conjugacy structure.
///
/// Elements are stored in the canonical order (lexicographic on permutation
/// images, then phases) and referred to by index everywhere downstream.
pub struct GroupData {
    key: GroupKey,
    elements: Vec<WreathElement>,
    index: HashMap<WreathElement, u32>,
    inverse: Vec<u32>,
    transpose: Vec<u32>,
    bar: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<Vec<u32>>,
    center: Vec<u32>,
}

impl GroupData {
    /// Enumerates the group, within budget, and computes classes and center.
    pub fn enumerate(key: GroupKey, budget: &Budget) -> Result<GroupData> {
        let order = key.order();
        if order > budget.max_elements as u128 {
            return Err(Error::SizeExceeded { required: order, budget: budget.max_elements });
        }
        let elements = enumerate_elements(key);
        debug_assert_eq!(elements.len() as u128, order);
        let index: HashMap<WreathElement, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let mut data = GroupData {
            key,
            inverse: Vec::new(),
            transpose: Vec::new(),
            bar: Vec::new(),
            class_of: Vec::new(),
            classes: Vec::new(),
            center: Vec::new(),
            elements,
            index,
        };
        data.fill_unary_tables()?;
        data.fill_classes()?;
        data.fill_center()?;
        Ok(data)
    }

    fn fill_unary_tables(&mut self) -> Result<()> {
        for e in &self.elements {
            self.inverse.push(lookup(&self.index, &e.inverse())?);
            self.transpose.push(lookup(&self.index, &e.transpose())?);
            self.bar.push(lookup(&self.index, &e.bar())?);
        }
        Ok(())
    }

    fn fill_classes(&mut self) -> Result<()> {
        let m = self.elements.len();
        let gens: Vec<u32> = generating_set(self.key)
            .iter()
            .map(|g| lookup(&self.index, g))
            .collect::<Result<_>>()?;
        let mut class_of = vec![u32::MAX; m];
        let mut classes = Vec::new();
        for start in 0..m as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let ci = classes.len() as u32;
            let mut members = vec![start];
            class_of[start as usize] = ci;
            let mut queue = VecDeque::from([start]);
            while let Some(h) = queue.pop_front() {
                for &g in &gens {
                    let conj = self.mult(self.mult(g, h), self.inverse[g as usize]);
                    if class_of[conj as usize] == u32::MAX {
                        class_of[conj as usize] = ci;
                        members.push(conj);
                        queue.push_back(conj);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.class_of = class_of;
        self.classes = classes;
        Ok(())
    }

    fn fill_center(&mut self) -> Result<()> {
        let gens: Vec<u32> = generating_set(self.key)
            .iter()
            .map(|g| lookup(&self.index, g))
            .collect::<Result<_>>()?;
        self.center = (0..self.elements.len() as u32)
            .filter(|&z| gens.iter().all(|&g| self.mult(z, g) == self.mult(g, z)))
            .collect();
        Ok(())
    }

    pub fn key(&self) -> GroupKey {
        self.key
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WreathElement] {
        &self.elements
    }

    pub fn elem(&self, i: u32) -> &WreathElement {
        &self.elements[i as usize]
    }

    pub fn identity_idx(&self) -> u32 {
        self.idx(&WreathElement::identity(self.key.n, self.key.r))
            .expect("identity is always a member")
    }

    pub fn idx(&self, e: &WreathElement) -> Result<u32> {
        lookup(&self.index, e)
    }

    pub fn contains(&self, e: &WreathElement) -> bool {
        self.index.contains_key(e)
    }

    /// Product by index; both operands must be valid indices.
    pub fn mult(&self, a: u32, b: u32) -> u32 {
        let prod = self.elements[a as usize].multiply(&self.elements[b as usize]).unwrap();
        *self.index.get(&prod).expect("group is closed under multiplication")
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn transpose_idx(&self, a: u32) -> u32 {
        self.transpose[a as usize]
    }

    pub fn bar_idx(&self, a: u32) -> u32 {
        self.bar[a as usize]
    }

    /// `g h g^{-1}` by index.
    pub fn conj(&self, g: u32, h: u32) -> u32 {
        self.mult(self.mult(g, h), self.inverse[g as usize])
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_of(&self, i: u32) -> u32 {
        self.class_of[i as usize]
    }

    /// Canonical (minimal-index) representative of class `ci`.
    pub fn class_rep(&self, ci: u32) -> u32 {
        self.classes[ci as usize][0]
    }

    pub fn center(&self) -> &[u32] {
        &self.center
    }

    /// Closure of a seed set under multiplication; returns sorted indices.
    pub fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut members: HashSet<u32> = HashSet::from([self.identity_idx()]);
        let mut queue: VecDeque<u32> = seed.iter().copied().collect();
        for &s in seed {
            members.insert(s);
        }
        while let Some(h) = queue.pop_front() {
            for &g in seed {
                let prod = self.mult(h, g);
                if members.insert(prod) {
                    queue.push_back(prod);
                }
            }
        }
        let mut out: Vec<u32> = members.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Derived subgroup of the subgroup with the given members: closure of
    /// all commutators `[g, h] = g h g^{-1} h^{-1}`.
    pub fn derived_subgroup(&self, members: &[u32]) -> Vec<u32> {
        let mut commutators = HashSet::new();
        for &g in members {
            for &h in members {
                commutators
                    .insert(self.mult(self.mult(g, h), self.mult(self.inv(g), self.inv(h))));
            }
        }
        let seed: Vec<u32> = commutators.into_iter().collect();
        self.subgroup_closure(&seed)
    }

    pub fn to_cache(&self) -> CacheFile {
        CacheFile {
            schema: CACHE_SCHEMA.to_string(),
            key: self.key,
            order: self.order() as u64,
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(|&i| ExternalElement::from(self.elem(i))).collect())
                .collect(),
            center: self.center.iter().map(|&i| ExternalElement::from(self.elem(i))).collect(),
        }
    }

    /// Rebuilds group data from a cache file, re-deriving the element list
    /// and validating the stored structure against it.
    pub fn from_cache(cache: &CacheFile, budget: &Budget) -> Result<GroupData> {
        if cache.schema != CACHE_SCHEMA {
            return Err(Error::ParameterMismatch(format!(
                "cache schema {} != {}",
                cache.schema, CACHE_SCHEMA
            )));
        }
        let key = GroupKey::new(cache.key.r, cache.key.p, cache.key.n)?;
        let order = key.order();
        if order > budget.max_elements as u128 {
            return Err(Error::SizeExceeded { required: order, budget: budget.max_elements });
        }
        if cache.order as u128 != order {
            return Err(Error::Consistency(format!(
                "cached order {} != computed {order}",
                cache.order
            )));
        }
        let elements = enumerate_elements(key);
        let index: HashMap<WreathElement, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let m = elements.len();
        let mut class_of = vec![u32::MAX; m];
        let mut classes = Vec::new();
        for stored in &cache.classes {
            let ci = classes.len() as u32;
            let mut members = Vec::with_capacity(stored.len());
            for ext in stored {
                let i = lookup(&index, &ext.to_internal(key.r)?)?;
                if class_of[i as usize] != u32::MAX {
                    return Err(Error::Consistency(
                        "cached classes are not a partition".into(),
                    ));
                }
                class_of[i as usize] = ci;
                members.push(i);
            }
            members.sort_unstable();
            classes.push(members);
        }
        if class_of.iter().any(|&c| c == u32::MAX) {
            return Err(Error::Consistency("cached classes do not cover the group".into()));
        }
        let mut center = Vec::with_capacity(cache.center.len());
        for ext in &cache.center {
            center.push(lookup(&index, &ext.to_internal(key.r)?)?);
        }
        center.sort_unstable();
        let mut data = GroupData {
            key,
            inverse: Vec::new(),
            transpose: Vec::new(),
            bar: Vec::new(),
            class_of,
            classes,
            center,
            elements,
            index,
        };
        data.fill_unary_tables()?;
        Ok(data)
    }
}

fn lookup(index: &HashMap<WreathElement, u32>, e: &WreathElement) -> Result<u32> {
    index
        .get(e)
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("element {e:?} is not in the group")))
}

/// All members in canonical order: permutation-major, phases lexicographic.
fn enumerate_elements(key: GroupKey) -> Vec<WreathElement> {
    let d = gcd(key.r, key.p);
    let mut out = Vec::new();
    for perm in Perm::all(key.n) {
        let mut phases = vec![0u32; key.n];
        loop {
            if phases.iter().map(|&a| a as u64).sum::<u64>() % d as u64 == 0 {
                let pv = PhaseVector::from_ints(
                    &phases.iter().map(|&a| a as i64).collect::<Vec<_>>(),
                    key.r,
                );
                out.push(WreathElement::new(pv, perm.clone()).unwrap());
            }
            // Odometer with the rightmost digit fastest keeps lex order.
            let mut pos = key.n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                phases[pos] += 1;
                if phases[pos] < key.r {
                    break;
                }
                phases[pos] = 0;
            }
            if phases.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
    out
}

pub const CACHE_SCHEMA: &str = "reflekt-cache/1";

/// Wire form of an element: phases as residues, permutation 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExternalElement {
    pub phases: Vec<u32>,
    pub perm: Vec<u32>,
}

impl ExternalElement {
    pub fn from(e: &WreathElement) -> Self {
        ExternalElement {
            phases: e.phases.entries().to_vec(),
            perm: e.perm.images().iter().map(|&i| i + 1).collect(),
        }
    }

    pub fn to_internal(&self, r: u32) -> Result<WreathElement> {
        if self.perm.iter().any(|&i| i == 0) {
            return Err(Error::InvalidParameter("external permutations are 1-based".into()));
        }
        WreathElement::new(
            PhaseVector::from_ints(
                &self.phases.iter().map(|&a| a as i64).collect::<Vec<_>>(),
                r,
            ),
            Perm::from_images(self.perm.iter().map(|&i| i - 1).collect())?,
        )
    }
}

/// On-disk cache payload for one group.
#[derive(Serialize, Deserialize)]
pub struct CacheFile {
    pub schema: String,
    pub key: GroupKey,
    pub order: u64,
    pub classes: Vec<Vec<ExternalElement>>,
    pub center: Vec<ExternalElement>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(r: u32, p: u32, n: usize) -> GroupData {
        GroupData::enumerate(GroupKey::new(r, p, n).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn key_validation() {
        assert!(GroupKey::new(6, 4, 2).is_err());
        assert!(GroupKey::new(0, 1, 2).is_err());
        assert!(GroupKey::new(6, 2, 3).is_ok());
    }

    #[test]
    fn orders_match_formula() {
        for (r, p, n, expect) in
            [(1, 1, 3, 6), (2, 1, 2, 8), (4, 2, 2, 16), (6, 2, 3, 648), (3, 3, 2, 6)]
        {
            let g = group(r, p, n);
            assert_eq!(g.order(), expect, "order of G({r},{p},{n})");
            assert_eq!(g.key().order(), expect as u128);
        }
    }

    #[test]
    fn enumeration_is_canonical_and_closed() {
        let g = group(3, 3, 2);
        for w in g.elements().windows(2) {
            assert!(w[0] < w[1], "elements must be strictly increasing");
        }
        for a in 0..g.order() as u32 {
            for b in 0..g.order() as u32 {
                let _ = g.mult(a, b); // panics if the product escapes
            }
            assert_eq!(g.mult(a, g.inv(a)), g.identity_idx());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let key = GroupKey::new(6, 1, 3).unwrap();
        let tiny = Budget { max_elements: 100, ..Default::default() };
        match GroupData::enumerate(key, &tiny) {
            Err(Error::SizeExceeded { required, budget }) => {
                assert_eq!(required, 1296);
                assert_eq!(budget, 100);
            }
            other => panic!("expected SizeExceeded, got {:?}", other.map(|g| g.order())),
        }
    }

    /// Independent oracle: conjugacy classes by conjugating with every group
    /// element, no generator shortcuts.
    fn brute_classes(g: &GroupData) -> Vec<Vec<u32>> {
        let m = g.order() as u32;
        let mut assigned = vec![false; m as usize];
        let mut classes = Vec::new();
        for start in 0..m {
            if assigned[start as usize] {
                continue;
            }
            let mut members: Vec<u32> = (0..m).map(|h| g.conj(h, start)).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                assigned[x as usize] = true;
            }
            classes.push(members);
        }
        classes
    }

    #[test]
    fn classes_match_brute_force() {
        for (r, p, n) in [(2, 1, 2), (3, 1, 2), (4, 2, 2), (2, 2, 3), (3, 3, 2)] {
            let g = group(r, p, n);
            let mut computed = g.classes().to_vec();
            let mut brute = brute_classes(&g);
            computed.sort();
            brute.sort();
            assert_eq!(computed, brute, "classes of G({r},{p},{n})");
        }
        // Hyperoctahedral group B_2 has exactly 5 classes.
        assert_eq!(group(2, 1, 2).num_classes(), 5);
    }

    #[test]
    fn center_matches_formula_subgroup() {
        for (r, p, n) in [(2, 1, 2), (4, 2, 3), (6, 2, 2), (3, 3, 3), (6, 3, 2), (1, 1, 3)] {
            let g = group(r, p, n);
            let formula = central_phase_subgroup(g.key());
            let computed: Vec<&WreathElement> =
                g.center().iter().map(|&i| g.elem(i)).collect();
            let key = GroupKey::new(r, p, n).unwrap();
            if key.is_abelian_exception() {
                continue;
            }
            assert_eq!(
                computed.len(),
                formula.len(),
                "center size of G({r},{p},{n})"
            );
            for (a, b) in computed.iter().zip(formula.iter()) {
                assert_eq!(**a, *b);
            }
        }
        // |Z(G(4,2,3))| = 2 and |Z(G(6,2,2))| = 6.
        assert_eq!(group(4, 2, 3).center().len(), 2);
        assert_eq!(group(6, 2, 2).center().len(), 6);
    }

    #[test]
    fn abelian_exceptions_have_full_center() {
        for (r, p, n) in [(1, 1, 2), (2, 2, 2)] {
            let g = group(r, p, n);
            assert_eq!(g.center().len(), g.order());
            // The phase part of the center still matches the formula.
            let formula = central_phase_subgroup(g.key());
            let phase_central: Vec<&WreathElement> = g
                .center()
                .iter()
                .map(|&i| g.elem(i))
                .filter(|e| e.perm.is_identity())
                .collect();
            assert_eq!(phase_central.len(), formula.len());
        }
    }

    #[test]
    fn generating_set_generates() {
        for (r, p, n) in [(4, 2, 2), (6, 3, 2), (3, 1, 3), (2, 2, 4), (6, 6, 2), (1, 1, 4)] {
            let g = group(r, p, n);
            let gens: Vec<u32> =
                generating_set(g.key()).iter().map(|e| g.idx(e).unwrap()).collect();
            assert_eq!(
                g.subgroup_closure(&gens).len(),
                g.order(),
                "generators of G({r},{p},{n})"
            );
        }
    }

    #[test]
    fn central_element_identity() {
        // c^j = t^j * prod_i (s_i .. s_1 t^j s_1 .. s_i), and c is central.
        for (r, p, n) in [(4, 1, 3), (3, 1, 2), (6, 2, 3)] {
            let key = GroupKey::new(r, p, n).unwrap();
            let gens = StandardGenerators::new(r, n);
            for j in 0..r as i64 {
                let mut rhs = gens.t.pow(j);
                for i in 1..n {
                    // The factor s_i .. s_1 t^j s_1 .. s_i, built inside out.
                    let mut word = gens.t.pow(j);
                    for k in 1..=i {
                        word = gens.s_i(k).multiply(&word).unwrap();
                        word = word.multiply(gens.s_i(k)).unwrap();
                    }
                    rhs = rhs.multiply(&word).unwrap();
                }
                assert_eq!(gens.c.pow(j), rhs, "c^{j} in G({r},{p},{n})");
            }
            // c is central in the ambient wreath product (it may fall
            // outside G(r,p,n) itself when p does not divide n).
            let g = GroupData::enumerate(key.ambient(), &Budget::default()).unwrap();
            let c = g.idx(&gens.c).unwrap();
            for a in 0..g.order() as u32 {
                assert_eq!(g.mult(c, a), g.mult(a, c));
            }
        }
    }

    #[test]
    fn generator_orders() {
        let gens = StandardGenerators::new(6, 3);
        assert_eq!(gens.s_i(1).order(), 2);
        assert_eq!(gens.s_prime_i(1).order(), 2);
        assert_eq!(gens.refl.as_ref().unwrap().order(), 6);
        assert_eq!(gens.t.order(), 6);
        assert_eq!(gens.c.order(), 6);
        // s_1' = s_1 * s.
        assert_eq!(
            *gens.s_prime_i(1),
            gens.s_i(1).multiply(gens.refl.as_ref().unwrap()).unwrap()
        );
    }

    #[test]
    fn transpose_tables() {
        let g = group(4, 2, 2);
        for i in 0..g.order() as u32 {
            assert_eq!(g.elem(g.transpose_idx(i)), &g.elem(i).transpose());
            assert_eq!(g.elem(g.bar_idx(i)), &g.elem(i).bar());
            assert_eq!(g.bar_idx(g.inv(i)), g.transpose_idx(i));
        }
    }

    #[test]
    fn cache_roundtrip_preserves_structure() {
        let g = group(4, 2, 2);
        let json = serde_json::to_string(&g.to_cache()).unwrap();
        let cache: CacheFile = serde_json::from_str(&json).unwrap();
        let restored = GroupData::from_cache(&cache, &Budget::default()).unwrap();
        assert_eq!(restored.order(), g.order());
        assert_eq!(restored.classes(), g.classes());
        assert_eq!(restored.center(), g.center());
        // External permutations are 1-based on the wire.
        assert!(json.contains("\"perm\":[1,2]") || json.contains("\"perm\": [1, 2]"));
    }

    #[test]
    fn stale_cache_is_rejected() {
        let g = group(2, 1, 2);
        let mut cache = g.to_cache();
        cache.schema = "reflekt-cache/0".into();
        assert!(matches!(
            GroupData::from_cache(&cache, &Budget::default()),
            Err(Error::ParameterMismatch(_))
        ));
    }
}
