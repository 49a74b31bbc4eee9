//! Existence decisions for generalized involution models on small groups:
//! an exhaustive backtracking search over one linear character per twisted
//! class, and the commutator obstruction that rules models out wholesale.

use num::integer::gcd;

use crate::chars::{irr_degree_list, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{Budget, GroupData};
use crate::map::GroupMap;
use crate::model::{verify_gim, ModelCandidate};
use crate::twisted::{
    counting_char, induce_linear, linear_characters, twisted_decomposition, LinearChar,
};

/// Whether the central element with every phase r/2 lies in the derived
/// subgroup of every twisted centralizer. When it does, no choice of linear
/// characters can separate it from the identity, so no generalized
/// involution model exists. Requires gcd(p,n) = 2 and r/p even.
pub fn commutator_obstruction(group: &GroupData) -> Result<bool> {
    let key = group.key();
    if gcd(key.p, key.n as u32) != 2 || (key.r / key.p) % 2 != 0 {
        return Err(Error::UnsupportedKey(format!(
            "obstruction applies when gcd(p,n) = 2 and r/p is even, got {:?}",
            key
        )));
    }
    let half_phases = vec![(key.r / 2) as i64; key.n];
    let perm: Vec<u32> = (0..key.n as u32).collect();
    let z_elem = crate::element::WreathElement::from_parts(&half_phases, &perm, key.r)?;
    let z = group.idx(&z_elem)?;
    if z == group.identity_idx() {
        return Err(Error::Consistency("the obstruction element is trivial".into()));
    }
    if !group.center().contains(&z) {
        return Err(Error::Consistency("the obstruction element is not central".into()));
    }
    let tau = GroupMap::inverse_transpose(group);
    let dec = twisted_decomposition(group, &tau)?;
    for centralizer in dec.centralizers() {
        if !group.derived_subgroup(centralizer).contains(&z) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive search for a generalized involution model with respect to tau.
///
/// One linear character is chosen per twisted class, classes visited in
/// descending centralizer order. The irreducible degrees must add up to the
/// twisted involution count before any assignment can work: a model's
/// character equals the counting character, and both sides evaluate at the
/// identity to those two numbers. Within the search, inductions from
/// different classes must be orthogonal, since a repeated constituent would
/// break multiplicity-freeness. A surviving assignment is confirmed against
/// the counting character and re-verified structurally before being
/// returned.
pub fn brute_gim_search(
    group: &GroupData,
    tau: &GroupMap,
    budget: &Budget,
) -> Result<Option<ModelCandidate>> {
    let dec = twisted_decomposition(group, tau)?;
    let k = dec.num_orbits();
    let irr_degree_sum: u128 = irr_degree_list(group.key())?.iter().sum();
    if irr_degree_sum != dec.involutions().len() as u128 {
        return Ok(None);
    }
    // All candidate characters and their inductions, per orbit.
    let mut choices: Vec<Vec<(LinearChar, ClassFunction)>> = Vec::with_capacity(k);
    let mut combinations: u128 = 1;
    for centralizer in dec.centralizers() {
        let chars = linear_characters(group, centralizer)?;
        combinations = combinations.saturating_mul(chars.len() as u128);
        let mut with_induced = Vec::with_capacity(chars.len());
        for lambda in chars {
            let ind = induce_linear(group, &lambda)?;
            with_induced.push((lambda, ind));
        }
        choices.push(with_induced);
    }
    if combinations > budget.max_search as u128 {
        return Err(Error::SizeExceeded {
            required: combinations,
            budget: budget.max_search,
        });
    }
    // Visit large centralizers (small inductions) first.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (group.order() / dec.centralizers()[i].len(), i));
    let counting = counting_char(group, tau)?;

    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    if search(group, &choices, &order, &counting, &mut chosen)? {
        let mut entries: Vec<(u32, LinearChar)> = Vec::with_capacity(k);
        for (pos, &orbit) in order.iter().enumerate() {
            entries.push((dec.reps()[orbit], choices[orbit][chosen[pos]].0.clone()));
        }
        entries.sort_by_key(|&(rep, _)| rep);
        let candidate = ModelCandidate::new(entries);
        if !verify_gim(group, &candidate, tau)? {
            return Err(Error::Consistency(
                "search accepted a candidate that fails verification".into(),
            ));
        }
        return Ok(Some(candidate));
    }
    Ok(None)
}

/// Depth-first over `order`; `chosen` carries the per-level choice indices.
fn search(
    group: &GroupData,
    choices: &[Vec<(LinearChar, ClassFunction)>],
    order: &[usize],
    counting: &ClassFunction,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    let level = chosen.len();
    if level == order.len() {
        // Leaf: the induced sum must be the counting character.
        let mut acc: Option<ClassFunction> = None;
        for (pos, &orbit) in order.iter().enumerate() {
            let ind = &choices[orbit][chosen[pos]].1;
            acc = Some(match acc {
                None => ind.clone(),
                Some(prev) => {
                    let values = prev
                        .values()
                        .iter()
                        .zip(ind.values())
                        .map(|(a, b)| a.add(b))
                        .collect();
                    ClassFunction::from_class_values(group, values)?
                }
            });
        }
        return Ok(acc.expect("at least one twisted class") == *counting);
    }
    let orbit = order[level];
    'candidates: for (idx, (_, ind)) in choices[orbit].iter().enumerate() {
        // Inductions from different classes must share no constituent.
        for (pos, &prev_orbit) in order[..level].iter().enumerate() {
            let prev = &choices[prev_orbit][chosen[pos]].1;
            let overlap = ind.inner_product(group, prev)?.as_rational().map_err(|_| {
                Error::Consistency("induced characters with irrational inner product".into())
            })?;
            if overlap != crate::cyclo::rational(0) {
                continue 'candidates;
            }
        }
        chosen.push(idx);
        if search(group, choices, order, counting, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}
