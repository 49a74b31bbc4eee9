//! Twisted conjugation with respect to an involutive automorphism tau:
//! the action `omega -> g * omega * tau(g)^-1` on the twisted involutions
//! `{omega : omega * tau(omega) = 1}`, the counting character
//! `g -> |{u : u * tau(u) = g}|`, and linear characters of subgroups with
//! their induction back to the group.
//!
//! For tau = inverse transpose the twisted involutions are exactly the
//! symmetric elements, and a generalized involution model is a choice of one
//! linear character per twisted class whose induced sum is the counting
//! character.

use std::collections::HashMap;

use num::{BigInt, BigRational};

use crate::chars::ClassFunction;
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::group::GroupData;
use crate::map::GroupMap;

/// Orbit decomposition of the twisted involutions under twisted conjugation.
pub struct TwistedDecomposition {
    tau: GroupMap,
    involutions: Vec<u32>,
    orbits: Vec<Vec<u32>>,
    reps: Vec<u32>,
    centralizers: Vec<Vec<u32>>,
    orbit_index: HashMap<u32, usize>,
}

impl TwistedDecomposition {
    pub fn tau(&self) -> &GroupMap {
        &self.tau
    }

    /// Elements with `omega * tau(omega) = 1`, ascending.
    pub fn involutions(&self) -> &[u32] {
        &self.involutions
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    /// Orbit members, ascending; orbits ordered by their minimal member.
    pub fn orbits(&self) -> &[Vec<u32>] {
        &self.orbits
    }

    /// Minimal member of each orbit.
    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// Twisted centralizer `{g : g * rep * tau(g)^-1 = rep}` of each orbit's
    /// representative, ascending.
    pub fn centralizers(&self) -> &[Vec<u32>] {
        &self.centralizers
    }

    /// Which orbit an element belongs to; `None` off the twisted involutions.
    pub fn orbit_of(&self, elem: u32) -> Option<usize> {
        self.orbit_index.get(&elem).copied()
    }

    /// Image of `omega` under twisted conjugation by `g`.
    pub fn act(&self, group: &GroupData, g: u32, omega: u32) -> u32 {
        group.mult(group.mult(g, omega), group.inv(self.tau.apply_idx(g)))
    }
}

/// Decomposes the twisted involutions of an enumerated group into orbits.
///
/// `tau` must be an involutive automorphism; involutivity is checked here,
/// multiplicativity is the caller's contract (`GroupMap::verify_automorphism`
/// runs the full audit).
pub fn twisted_decomposition(group: &GroupData, tau: &GroupMap) -> Result<TwistedDecomposition> {
    if tau.key() != group.key() {
        return Err(Error::ParameterMismatch("twist built over a different group".into()));
    }
    if !tau.is_involution() {
        return Err(Error::InvalidParameter("the twist must be an involution".into()));
    }
    let m = group.order() as u32;
    // tau(g)^-1, reused across all orbit scans.
    let tg_inv: Vec<u32> = (0..m).map(|g| group.inv(tau.apply_idx(g))).collect();
    let involutions: Vec<u32> =
        (0..m).filter(|&w| tau.apply_idx(w) == group.inv(w)).collect();
    let mut orbit_index: HashMap<u32, usize> = HashMap::new();
    let mut orbits = Vec::new();
    let mut reps = Vec::new();
    let mut centralizers = Vec::new();
    for &omega in &involutions {
        if orbit_index.contains_key(&omega) {
            continue;
        }
        let idx = orbits.len();
        let mut members = Vec::new();
        let mut centralizer = Vec::new();
        for g in 0..m {
            let image = group.mult(group.mult(g, omega), tg_inv[g as usize]);
            if image == omega {
                centralizer.push(g);
            }
            if !orbit_index.contains_key(&image) {
                orbit_index.insert(image, idx);
                members.push(image);
            }
        }
        members.sort_unstable();
        if members.len() * centralizer.len() != group.order() {
            return Err(Error::Consistency(format!(
                "orbit-stabilizer mismatch at {:?}: {} * {} != {}",
                group.elem(omega),
                members.len(),
                centralizer.len(),
                group.order()
            )));
        }
        debug_assert_eq!(members[0], omega);
        orbits.push(members);
        reps.push(omega);
        centralizers.push(centralizer);
    }
    Ok(TwistedDecomposition {
        tau: tau.clone(),
        involutions,
        orbits,
        reps,
        centralizers,
        orbit_index,
    })
}

/// The counting character `g -> |{u : u * tau(u) = g}|`, verified constant
/// on conjugacy classes during construction.
pub fn counting_char(group: &GroupData, tau: &GroupMap) -> Result<ClassFunction> {
    if tau.key() != group.key() {
        return Err(Error::ParameterMismatch("twist built over a different group".into()));
    }
    let m = group.order() as u32;
    let mut counts = vec![0i64; group.order()];
    for u in 0..m {
        counts[group.mult(u, tau.apply_idx(u)) as usize] += 1;
    }
    let r = group.key().r;
    ClassFunction::from_element_fn(group, |i| {
        Ok(CycloNumber::from_integer(r, counts[i as usize]))
    })
}

/// Linear character of a subgroup, stored on the subgroup's element indices.
#[derive(Clone)]
pub struct LinearChar {
    domain: Vec<u32>,
    values: Vec<CycloNumber>,
}

impl LinearChar {
    pub fn new(domain: Vec<u32>, values: Vec<CycloNumber>) -> Result<Self> {
        if domain.len() != values.len() {
            return Err(Error::ParameterMismatch("domain and value lengths differ".into()));
        }
        if domain.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("domain must be sorted and duplicate-free".into()));
        }
        Ok(LinearChar { domain, values })
    }

    pub fn domain(&self) -> &[u32] {
        &self.domain
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn value_of(&self, elem: u32) -> Option<&CycloNumber> {
        self.domain.binary_search(&elem).ok().map(|pos| &self.values[pos])
    }

    /// Checks lambda(1) = 1 and multiplicativity over every pair; the domain
    /// must be closed under the group product.
    pub fn verify_multiplicative(&self, group: &GroupData) -> Result<()> {
        match self.value_of(group.identity_idx()) {
            Some(v) if v.equals(&CycloNumber::one(v.modulus())) => {}
            _ => return Err(Error::Consistency("lambda(1) != 1".into())),
        }
        for (i, &g) in self.domain.iter().enumerate() {
            for (j, &h) in self.domain.iter().enumerate() {
                let gh = group.mult(g, h);
                let expected = self.values[i].mul(&self.values[j]);
                match self.value_of(gh) {
                    Some(v) if v.equals(&expected) => {}
                    Some(_) => {
                        return Err(Error::Consistency(format!(
                            "lambda not multiplicative at ({:?}, {:?})",
                            group.elem(g),
                            group.elem(h)
                        )))
                    }
                    None => {
                        return Err(Error::InvalidParameter(format!(
                            "domain not closed: {:?} * {:?} escapes",
                            group.elem(g),
                            group.elem(h)
                        )))
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LinearChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearChar({} elements)", self.domain.len())
    }
}

/// All linear characters of a subgroup, through its abelianization.
///
/// The derived subgroup is computed by commutator closure, the quotient's
/// characters by extending exponent assignments on a greedy generating set:
/// candidate tuples that contradict a relation are discarded, leaving
/// exactly `|subgroup / derived|` characters, in a deterministic order.
pub fn linear_characters(group: &GroupData, subgroup: &[u32]) -> Result<Vec<LinearChar>> {
    let derived = group.derived_subgroup(subgroup);
    // Coset id = minimal member; coset_of maps subgroup elements to cosets.
    let mut coset_of: HashMap<u32, u32> = HashMap::new();
    let mut coset_reps: Vec<u32> = Vec::new();
    for &h in subgroup {
        if coset_of.contains_key(&h) {
            continue;
        }
        let mut coset: Vec<u32> = derived.iter().map(|&d| group.mult(h, d)).collect();
        coset.sort_unstable();
        let rep = coset[0];
        coset_reps.push(rep);
        for member in coset {
            coset_of.insert(member, rep);
        }
    }
    coset_reps.sort_unstable();
    let q = coset_reps.len();
    let rep_pos: HashMap<u32, usize> =
        coset_reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    // Quotient multiplication on coset positions.
    let qmult = |a: usize, b: usize| -> usize {
        rep_pos[&coset_of[&group.mult(coset_reps[a], coset_reps[b])]]
    };
    let identity_pos = rep_pos[&coset_of[&group.identity_idx()]];
    let qorder = |a: usize| -> u32 {
        let mut k = 1;
        let mut acc = a;
        while acc != identity_pos {
            acc = qmult(acc, a);
            k += 1;
        }
        k
    };
    // Greedy generators: largest quotient order first, then smallest rep.
    let mut generated = vec![false; q];
    generated[identity_pos] = true;
    let mut gens: Vec<usize> = Vec::new();
    let mut gen_orders: Vec<u32> = Vec::new();
    loop {
        let next = (0..q)
            .filter(|&a| !generated[a])
            .max_by_key(|&a| (qorder(a), std::cmp::Reverse(coset_reps[a])));
        let Some(g) = next else { break };
        gens.push(g);
        gen_orders.push(qorder(g));
        // Extend the generated set by closure.
        let current: Vec<usize> = (0..q).filter(|&a| generated[a]).collect();
        for base in current {
            let mut acc = base;
            loop {
                acc = qmult(acc, g);
                if acc == base {
                    break;
                }
                generated[acc] = true;
            }
        }
        generated[g] = true;
    }
    let exponent = gen_orders.iter().fold(1u32, |acc, &m| num::integer::lcm(acc, m));
    let modulus = exponent.max(1);

    // Enumerate exponent tuples in lexicographic order and keep the
    // assignments that extend consistently to the whole quotient.
    let mut chars: Vec<LinearChar> = Vec::new();
    let mut tuple = vec![0u32; gens.len()];
    loop {
        if let Some(values) = extend_assignment(
            q,
            identity_pos,
            &gens,
            &gen_orders,
            &tuple,
            modulus,
            &qmult,
        ) {
            let full_values: Vec<CycloNumber> = subgroup
                .iter()
                .map(|h| values[rep_pos[&coset_of[h]]].clone())
                .collect();
            chars.push(LinearChar::new(subgroup.to_vec(), full_values)?);
        }
        // Odometer over tuples, rightmost fastest.
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < gen_orders[pos] {
                break;
            }
            tuple[pos] = 0;
        }
        if tuple.iter().all(|&a| a == 0) {
            break;
        }
        if gens.is_empty() {
            break;
        }
    }
    if chars.len() != q {
        return Err(Error::Consistency(format!(
            "found {} linear characters for an abelianization of order {}",
            chars.len(),
            q
        )));
    }
    Ok(chars)
}

/// Extends `lambda(gen_i) = zeta^(tuple_i * modulus / order_i)` to all coset
/// positions by multiplicative closure; `None` on any inconsistency.
fn extend_assignment(
    q: usize,
    identity_pos: usize,
    gens: &[usize],
    gen_orders: &[u32],
    tuple: &[u32],
    modulus: u32,
    qmult: &impl Fn(usize, usize) -> usize,
) -> Option<Vec<CycloNumber>> {
    let mut values: Vec<Option<CycloNumber>> = vec![None; q];
    values[identity_pos] = Some(CycloNumber::one(modulus));
    let mut frontier = vec![identity_pos];
    while let Some(base) = frontier.pop() {
        let base_val = values[base].clone().unwrap();
        for (i, &g) in gens.iter().enumerate() {
            let step = CycloNumber::root_of_unity(
                modulus,
                (tuple[i] as u64 * (modulus / gen_orders[i]) as u64) as i64,
            );
            let target = qmult(base, g);
            let val = base_val.mul(&step);
            match &values[target] {
                None => {
                    values[target] = Some(val);
                    frontier.push(target);
                }
                Some(existing) => {
                    if !existing.equals(&val) {
                        return None;
                    }
                }
            }
        }
    }
    // The generators reach everything, so every slot is filled.
    Some(values.into_iter().map(|v| v.unwrap()).collect())
}

/// Induced character `Ind(lambda)` as a class function, by the Frobenius
/// sum collapsed over conjugacy classes (the map `t -> t^-1 g t` covers the
/// class of g with multiplicity `|centralizer of g|`).
pub fn induce_linear(group: &GroupData, lambda: &LinearChar) -> Result<ClassFunction> {
    let h_order = lambda.domain().len();
    if h_order == 0 {
        return Err(Error::InvalidParameter("empty domain".into()));
    }
    let mut values = Vec::with_capacity(group.num_classes());
    for class in group.classes() {
        let centralizer = group.order() / class.len();
        let mut acc = CycloNumber::zero(group.key().r);
        for &member in class {
            if let Some(v) = lambda.value_of(member) {
                acc = acc.add(v);
            }
        }
        let weight = BigRational::new(BigInt::from(centralizer), BigInt::from(h_order));
        values.push(acc.scale(&weight));
    }
    ClassFunction::from_class_values(group, values)
}
