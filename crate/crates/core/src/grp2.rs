//! The explicit rank-2 generalized involution model for G(r,p,2) with r, p
//! even and r/p odd.
//!
//! Four twisted classes are represented by fixed elements omega_1..omega_4
//! whose twisted centralizers are small enough to list outright; the model
//! pairs each with a concrete linear character. Everything listed here is
//! re-verified against the computed orbit decomposition before the
//! candidate is returned, and the closed-form counting-character values
//! provide an independent cross-check.

use crate::cyclo::CycloNumber;
use crate::element::WreathElement;
use crate::error::{Error, Result};
use crate::group::{GroupData, GroupKey};
use crate::model::ModelCandidate;
use crate::twisted::{twisted_decomposition, LinearChar};
use crate::map::GroupMap;

fn check_params(key: GroupKey) -> Result<()> {
    if key.n != 2 || key.r % 2 != 0 || key.p % 2 != 0 || (key.r / key.p) % 2 == 0 {
        return Err(Error::UnsupportedKey(format!(
            "rank-2 model needs n = 2, r and p even, r/p odd; got {:?}",
            key
        )));
    }
    Ok(())
}

fn elem(group: &GroupData, phases: [i64; 2], swap: bool) -> Result<u32> {
    let images: [u32; 2] = if swap { [1, 0] } else { [0, 1] };
    group.idx(&WreathElement::from_parts(&phases, &images, group.key().r)?)
}

/// Builds the four-class model. The listed centralizers, the coset
/// representatives, and the distinctness of the four twisted classes are all
/// recomputed and enforced here.
pub fn gim_grp2(group: &GroupData) -> Result<ModelCandidate> {
    let key = group.key();
    check_params(key)?;
    let (r, p) = (key.r as i64, key.p as i64);
    let omegas = [
        elem(group, [0, 0], false)?,
        elem(group, [1, -1], false)?,
        elem(group, [0, 0], true)?,
        elem(group, [p / 2, p / 2], true)?,
    ];
    // The four elements represent the four distinct twisted classes.
    let tau = GroupMap::inverse_transpose(group);
    let dec = twisted_decomposition(group, &tau)?;
    if dec.num_orbits() != 4 {
        return Err(Error::Consistency(format!(
            "{:?} has {} twisted classes, expected 4",
            key,
            dec.num_orbits()
        )));
    }
    let mut seen = [false; 4];
    for &omega in &omegas {
        let orbit = dec.orbit_of(omega).ok_or_else(|| {
            Error::Consistency("listed representative is not a twisted involution".into())
        })?;
        if seen[orbit] {
            return Err(Error::Consistency("two representatives share a twisted class".into()));
        }
        seen[orbit] = true;
    }
    // Twisted centralizers as listed: two four-element groups and twice the
    // Delta = 0 subgroup.
    let c1 = vec![
        elem(group, [0, 0], false)?,
        elem(group, [r / 2, r / 2], false)?,
        elem(group, [0, 0], true)?,
        elem(group, [r / 2, r / 2], true)?,
    ];
    let c2 = vec![
        elem(group, [0, 0], false)?,
        elem(group, [r / 2, r / 2], false)?,
        elem(group, [-1, 1], true)?,
        elem(group, [r / 2 - 1, r / 2 + 1], true)?,
    ];
    let c34: Vec<u32> = (0..group.order() as u32)
        .filter(|&i| group.elem(i).delta() % key.r == 0)
        .collect();
    let listed = [c1.clone(), c2.clone(), c34.clone(), c34.clone()];
    for (omega, listed_c) in omegas.iter().zip(&listed) {
        let mut sorted = listed_c.clone();
        sorted.sort_unstable();
        let computed: Vec<u32> = (0..group.order() as u32)
            .filter(|&g| dec.act(group, g, *omega) == *omega)
            .collect();
        if sorted != computed {
            return Err(Error::Consistency(format!(
                "listed centralizer of {:?} differs from the computed one",
                group.elem(*omega)
            )));
        }
    }
    // Left coset representatives h_ij = ((ip + j, -j), 1): j < r/2 for the
    // two small centralizers, j = 0 for the two large ones. Each family must
    // tile the group against its centralizer.
    let mut small_cosets = Vec::new();
    for i in 0..r / p {
        for j in 0..r / 2 {
            small_cosets.push(elem(group, [i * p + j, -j], false)?);
        }
    }
    let mut large_cosets = Vec::new();
    for i in 0..r / p {
        large_cosets.push(elem(group, [i * p, 0], false)?);
    }
    for (reps, centralizer) in [(&small_cosets, &c1), (&large_cosets, &c34)] {
        let mut covered: Vec<u32> = reps
            .iter()
            .flat_map(|&h| centralizer.iter().map(move |&c| (h, c)))
            .map(|(h, c)| group.mult(h, c))
            .collect();
        covered.sort_unstable();
        let all: Vec<u32> = (0..group.order() as u32).collect();
        if covered != all {
            return Err(Error::Consistency(
                "coset representatives do not tile the group".into(),
            ));
        }
    }

    // The four characters: trivial; the (1,-1,-1,1) table; sgn of the
    // underlying permutation; sgn times the parity of the first phase.
    let lambda1 = char_from_pairs(
        group,
        c1.iter().map(|&g| (g, 1)).collect(),
    )?;
    let lambda2 = char_from_pairs(
        group,
        c2.iter().zip([1i64, -1, -1, 1]).map(|(&g, v)| (g, v)).collect(),
    )?;
    let lambda3 = char_from_pairs(
        group,
        c34.iter().map(|&g| (g, group.elem(g).perm.sign())).collect(),
    )?;
    let lambda4 = char_from_pairs(
        group,
        c34.iter()
            .map(|&g| {
                let e = group.elem(g);
                let parity = if e.phase(0) % 2 == 0 { 1 } else { -1 };
                (g, e.perm.sign() * parity)
            })
            .collect(),
    )?;
    let entries = vec![
        (omegas[0], lambda1),
        (omegas[1], lambda2),
        (omegas[2], lambda3),
        (omegas[3], lambda4),
    ];
    for (_, lambda) in &entries {
        lambda.verify_multiplicative(group)?;
    }
    Ok(ModelCandidate::new(entries))
}

fn char_from_pairs(group: &GroupData, mut pairs: Vec<(u32, i64)>) -> Result<LinearChar> {
    pairs.sort_unstable_by_key(|&(g, _)| g);
    let r = group.key().r;
    let domain: Vec<u32> = pairs.iter().map(|&(g, _)| g).collect();
    let values: Vec<CycloNumber> =
        pairs.iter().map(|&(_, v)| CycloNumber::from_integer(r, v)).collect();
    LinearChar::new(domain, values)
}

/// Closed form for the rank-2 counting character: `(r^2 + 2r)/p` at the
/// identity, `2r/p` on diagonal-free phase pairs `(a, -a)` with a even and
/// nonzero, and 0 everywhere else.
pub fn model_char_grp2(key: GroupKey, g: &WreathElement) -> Result<i64> {
    check_params(key)?;
    if g.rank() != 2 || g.modulus() != key.r || g.delta() % key.p != 0 {
        return Err(Error::ParameterMismatch(format!(
            "{:?} is not an element of {:?}",
            g, key
        )));
    }
    let r = key.r as i64;
    let p = key.p as i64;
    if !g.perm.is_identity() {
        return Ok(0);
    }
    let (a, b) = (g.phase(0) as i64, g.phase(1) as i64);
    if a == 0 && b == 0 {
        return Ok((r * r + 2 * r) / p);
    }
    if a % 2 == 0 && a != 0 && (a + b) % r == 0 {
        return Ok(2 * r / p);
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Budget;
    use crate::model::verify_gim;
    use crate::twisted::counting_char;

    fn group(r: u32, p: u32) -> GroupData {
        GroupData::enumerate(GroupKey::new(r, p, 2).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn builds_and_verifies_on_the_required_pairs() {
        for (r, p) in [(2u32, 2u32), (6, 2), (10, 2), (6, 6)] {
            let g = group(r, p);
            let candidate = gim_grp2(&g).unwrap();
            let tau = GroupMap::inverse_transpose(&g);
            assert!(verify_gim(&g, &candidate, &tau).unwrap(), "G({r},{p},2)");
        }
    }

    #[test]
    fn listed_data_instantiates() {
        // p = 2 halves: omega_4 = ((1,1), swap).
        let g = group(2, 2);
        let candidate = gim_grp2(&g).unwrap();
        let omega4 = candidate.entries()[3].0;
        assert_eq!(
            g.elem(omega4),
            &WreathElement::from_parts(&[1, 1], &[1, 0], 2).unwrap()
        );
        // The large centralizer has order 2r.
        let g = group(6, 2);
        let candidate = gim_grp2(&g).unwrap();
        assert_eq!(candidate.entries()[2].1.domain().len(), 12);
        assert_eq!(candidate.entries()[3].1.domain().len(), 12);
        // lambda_2 on its table order (1, -1, -1, 1): recover by evaluating
        // at the listed elements.
        let lambda2 = &candidate.entries()[1].1;
        let listed = [
            ([0i64, 0], false, 1i64),
            ([3, 3], false, -1),
            ([-1, 1], true, -1),
            ([2, 4], true, 1),
        ];
        for (phases, swap, expected) in listed {
            let idx = elem(&g, phases, swap).unwrap();
            assert!(lambda2
                .value_of(idx)
                .unwrap()
                .equals(&CycloNumber::from_integer(6, expected)));
        }
    }

    #[test]
    fn closed_form_examples_and_cross_check() {
        let key = GroupKey::new(6, 2, 2).unwrap();
        let id = WreathElement::identity(2, 6);
        assert_eq!(model_char_grp2(key, &id).unwrap(), 24);
        let diag = WreathElement::from_parts(&[2, 4], &[0, 1], 6).unwrap();
        assert_eq!(model_char_grp2(key, &diag).unwrap(), 6);
        let off = WreathElement::from_parts(&[1, 1], &[0, 1], 6).unwrap();
        assert_eq!(model_char_grp2(key, &off).unwrap(), 0);
        // The closed form is the counting character, everywhere, for all
        // four required parameter pairs.
        for (r, p) in [(2u32, 2u32), (6, 2), (10, 2), (6, 6)] {
            let g = group(r, p);
            let tau = GroupMap::inverse_transpose(&g);
            let chi = counting_char(&g, &tau).unwrap();
            for i in 0..g.order() as u32 {
                let expected = model_char_grp2(g.key(), g.elem(i)).unwrap();
                assert!(
                    chi.value_on(&g, i).equals(&CycloNumber::from_integer(r, expected)),
                    "element {:?} of G({r},{p},2)",
                    g.elem(i)
                );
            }
        }
    }

    #[test]
    fn parameter_gates() {
        // r/p even is refused.
        let g = group(4, 2);
        assert!(matches!(gim_grp2(&g), Err(Error::UnsupportedKey(_))));
        // Odd r is refused by the closed form too.
        let key = GroupKey::new(3, 1, 2).unwrap();
        let id = WreathElement::identity(2, 3);
        assert!(matches!(model_char_grp2(key, &id), Err(Error::UnsupportedKey(_))));
    }
}
