//! Gelfand-model representations on the span of symmetric elements.
//!
//! The group acts on basis vectors indexed by symmetric omega through
//! `rho(g) C_omega = sign(g, omega) * C_(g omega g^T)`. Three variants share
//! this shape: the ambient model on G(r,1,n), its restriction to G(r,p,n),
//! and a twisted model that corrects the sign on one phase-parity branch
//! when p and r/p are both even. Each built representation is audited as a
//! homomorphism before use. From a model that realizes the counting
//! character, one linear character per twisted class is read off the
//! diagonal, giving a generalized involution model.

use std::collections::HashMap;

use crate::chars::{gamma_class_function, irr_degree_list, symmetric_count_check, ClassFunction};
use crate::cyclo::CycloNumber;
use crate::element::WreathElement;
use crate::error::{Error, Result};
use crate::group::{GroupData, GroupKey};
use crate::map::GroupMap;
use crate::twisted::{counting_char, induce_linear, twisted_decomposition, LinearChar};

/// `(-1)^|B(g,omega)| * (-1)^|Inv(|g|) cap Pair(|omega|)|` for symmetric
/// omega. B is empty for odd r; for even r it collects the fixed points i of
/// |omega| where z_omega(i) = 2k+1 is odd and z_g(i) + k lands in
/// [r/2, r-1].
pub fn sign_plain(g: &WreathElement, omega: &WreathElement) -> Result<i64> {
    if g.rank() != omega.rank() || g.modulus() != omega.modulus() {
        return Err(Error::ParameterMismatch("sign arguments from different groups".into()));
    }
    if !omega.is_symmetric() {
        return Err(Error::InvalidParameter(format!(
            "{:?} is not symmetric",
            omega
        )));
    }
    let r = g.modulus();
    let mut b_size = 0u32;
    if r % 2 == 0 {
        for i in omega.perm.fixed_points() {
            let z = omega.phase(i);
            if z % 2 == 1 {
                let k = (z - 1) / 2;
                let shifted = g.phase(i) + k;
                if (r / 2..r).contains(&shifted) {
                    b_size += 1;
                }
            }
        }
    }
    let inv = g.perm.inversions();
    let pair = omega.perm.pairs();
    let overlap = inv.iter().filter(|ij| pair.contains(ij)).count() as u32;
    Ok(if (b_size + overlap) % 2 == 0 { 1 } else { -1 })
}

/// Sign of the twisted model: on the branch `Delta(omega) = 0 mod 2p` it is
/// the plain sign; on the branch `Delta(omega) = p mod 2p` it is the plain
/// sign at `omega * c`, where c adds one to every phase. The branch is
/// invariant under the action since `Delta(g omega g^T) - Delta(omega) =
/// 2 Delta(g)` is a multiple of 2p.
pub fn sign_twisted(g: &WreathElement, omega: &WreathElement, key: GroupKey) -> Result<i64> {
    let (r, p) = (key.r, key.p);
    if p % 2 != 0 || (r / p) % 2 != 0 {
        return Err(Error::UnsupportedKey(format!(
            "twisted sign needs p and r/p even, got {:?}",
            key
        )));
    }
    if num::integer::gcd(p, key.n as u32) != 1 {
        return Err(Error::UnsupportedKey(format!(
            "twisted sign needs gcd(p,n) = 1, got {:?}",
            key
        )));
    }
    if omega.delta() % p != 0 {
        return Err(Error::InvalidParameter("omega outside the subgroup".into()));
    }
    if omega.delta() % (2 * p) == 0 {
        sign_plain(g, omega)
    } else {
        let shifted_phases: Vec<i64> =
            (0..omega.rank()).map(|i| omega.phase(i) as i64 + 1).collect();
        let omega_c =
            WreathElement::new(crate::element::PhaseVector::from_ints(&shifted_phases, r), omega.perm.clone())?;
        sign_plain(g, &omega_c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelVariant {
    /// Ambient model on G(r,1,n).
    Plain,
    /// The ambient action restricted to G(r,p,n).
    Restricted,
    /// Sign corrected on the odd-phase branch; needs p, r/p even and
    /// gcd(p,n) = 1.
    Twisted,
}

/// A signed permutation representation on the symmetric elements.
pub struct ModelRep {
    variant: ModelVariant,
    key: GroupKey,
    basis: Vec<u32>,
    rows: Vec<Vec<(u32, i8)>>,
}

impl ModelRep {
    pub fn variant(&self) -> ModelVariant {
        self.variant
    }

    pub fn key(&self) -> GroupKey {
        self.key
    }

    /// Symmetric element indices, ascending.
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Image of basis vector `b` under group element `g`: (target basis
    /// position, sign).
    pub fn image(&self, g: u32, b: usize) -> (u32, i8) {
        self.rows[g as usize][b]
    }

    /// Trace of the action of `g`.
    pub fn trace(&self, g: u32) -> i64 {
        self.rows[g as usize]
            .iter()
            .enumerate()
            .filter(|(b, (target, _))| *target as usize == *b)
            .map(|(_, (_, sign))| *sign as i64)
            .sum()
    }
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// Builds the signed action and audits that it is a homomorphism: all pairs
/// when the group has at most 2000 elements, generator pairs plus 10^4
/// seeded random pairs otherwise.
pub fn build_model_rep(group: &GroupData, variant: ModelVariant) -> Result<ModelRep> {
    let key = group.key();
    match variant {
        ModelVariant::Plain => {
            if key.p != 1 {
                return Err(Error::UnsupportedKey(format!(
                    "the ambient model lives on p = 1, got {:?}",
                    key
                )));
            }
        }
        ModelVariant::Restricted => {}
        ModelVariant::Twisted => {
            if key.p % 2 != 0 || (key.r / key.p) % 2 != 0 {
                return Err(Error::UnsupportedKey(format!(
                    "twisted model needs p and r/p even, got {:?}",
                    key
                )));
            }
            if num::integer::gcd(key.p, key.n as u32) != 1 {
                return Err(Error::UnsupportedKey(format!(
                    "twisted model needs gcd(p,n) = 1, got {:?}",
                    key
                )));
            }
        }
    }
    let basis: Vec<u32> =
        (0..group.order() as u32).filter(|&i| group.elem(i).is_symmetric()).collect();
    let basis_pos: HashMap<u32, u32> =
        basis.iter().enumerate().map(|(pos, &i)| (i, pos as u32)).collect();
    let mut rows = Vec::with_capacity(group.order());
    for g in 0..group.order() as u32 {
        let g_elem = group.elem(g);
        let mut row = Vec::with_capacity(basis.len());
        for &omega in &basis {
            let target = group.mult(group.mult(g, omega), group.transpose_idx(g));
            let Some(&target_pos) = basis_pos.get(&target) else {
                return Err(Error::Consistency(format!(
                    "action of {:?} leaves the symmetric set",
                    g_elem
                )));
            };
            let sign = match variant {
                ModelVariant::Plain | ModelVariant::Restricted => {
                    sign_plain(g_elem, group.elem(omega))?
                }
                ModelVariant::Twisted => sign_twisted(g_elem, group.elem(omega), key)?,
            };
            row.push((target_pos, sign as i8));
        }
        rows.push(row);
    }
    let rep = ModelRep { variant, key, basis, rows };
    audit_homomorphism(group, &rep)?;
    Ok(rep)
}

fn compose_rows(a: &[(u32, i8)], b: &[(u32, i8)]) -> Vec<(u32, i8)> {
    b.iter().map(|&(t1, s1)| {
        let (t2, s2) = a[t1 as usize];
        (t2, s1 * s2)
    }).collect()
}

fn audit_homomorphism(group: &GroupData, rep: &ModelRep) -> Result<()> {
    let m = group.order() as u32;
    let check_pair = |a: u32, b: u32| -> Result<()> {
        let composed = compose_rows(&rep.rows[a as usize], &rep.rows[b as usize]);
        if composed != rep.rows[group.mult(a, b) as usize] {
            return Err(Error::Consistency(format!(
                "model action is not multiplicative at ({:?}, {:?})",
                group.elem(a),
                group.elem(b)
            )));
        }
        Ok(())
    };
    if group.order() <= 2000 {
        for a in 0..m {
            for b in 0..m {
                check_pair(a, b)?;
            }
        }
    } else {
        let gens: Vec<u32> = crate::group::generating_set(group.key())
            .iter()
            .map(|e| group.idx(e))
            .collect::<Result<_>>()?;
        for &a in &gens {
            for b in 0..m {
                check_pair(a, b)?;
                check_pair(b, a)?;
            }
        }
        let mut state = 0x9e3779b97f4a7c15u64
            ^ ((group.key().r as u64) << 32 | (group.key().p as u64) << 16 | group.key().n as u64);
        for _ in 0..10_000 {
            let a = (xorshift(&mut state) % m as u64) as u32;
            let b = (xorshift(&mut state) % m as u64) as u32;
            check_pair(a, b)?;
        }
    }
    Ok(())
}

/// Trace of the model at every element, checked constant on classes.
pub fn rep_character(group: &GroupData, rep: &ModelRep) -> Result<ClassFunction> {
    if rep.key() != group.key() {
        return Err(Error::ParameterMismatch("representation of a different group".into()));
    }
    let r = group.key().r;
    ClassFunction::from_element_fn(group, |g| Ok(CycloNumber::from_integer(r, rep.trace(g))))
}

/// Whether the chosen model realizes the counting character of the inverse
/// transpose, i.e. is a Gelfand model. Requires gcd(p,n) <= 2 so that the
/// symmetric count agrees with the degree sum and the counting character is
/// the full character sum.
pub fn gelfand_check(group: &GroupData, variant: ModelVariant) -> Result<bool> {
    let key = group.key();
    if num::integer::gcd(key.p, key.n as u32) > 2 {
        return Err(Error::UnsupportedKey(format!(
            "counting-character criterion needs gcd(p,n) <= 2, got {:?}",
            key
        )));
    }
    let rep = build_model_rep(group, variant)?;
    let tau = GroupMap::inverse_transpose(group);
    let counting = counting_char(group, &tau)?;
    // A trace that is not constant on classes cannot equal a class function.
    let chi = match rep_character(group, &rep) {
        Ok(chi) => chi,
        Err(Error::Consistency(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let counts = symmetric_count_check(group)?;
    Ok(chi == counting && counts.equal)
}

/// One linear character per twisted conjugacy class.
pub struct ModelCandidate {
    entries: Vec<(u32, LinearChar)>,
}

impl ModelCandidate {
    pub fn new(entries: Vec<(u32, LinearChar)>) -> Self {
        ModelCandidate { entries }
    }

    pub fn entries(&self) -> &[(u32, LinearChar)] {
        &self.entries
    }
}

/// Reads the model's diagonal signs off each twisted centralizer: for the
/// class representative omega, `lambda(g) = sign(g, omega)` on
/// `{g : g omega g^T = omega}`. Each extracted character is verified
/// multiplicative. Meaningful when the model passed `gelfand_check`.
pub fn extract_gim(group: &GroupData, rep: &ModelRep) -> Result<ModelCandidate> {
    if rep.key() != group.key() {
        return Err(Error::ParameterMismatch("representation of a different group".into()));
    }
    let tau = GroupMap::inverse_transpose(group);
    let dec = twisted_decomposition(group, &tau)?;
    let basis_pos: HashMap<u32, u32> = rep
        .basis()
        .iter()
        .enumerate()
        .map(|(pos, &i)| (i, pos as u32))
        .collect();
    let mut entries = Vec::with_capacity(dec.num_orbits());
    for (orbit, &omega) in dec.reps().iter().enumerate() {
        let pos = basis_pos[&omega] as usize;
        let centralizer = &dec.centralizers()[orbit];
        let mut values = Vec::with_capacity(centralizer.len());
        for &g in centralizer {
            let (target, sign) = rep.image(g, pos);
            debug_assert_eq!(target as usize, pos);
            values.push(CycloNumber::from_integer(group.key().r, sign as i64));
        }
        let lambda = LinearChar::new(centralizer.clone(), values)?;
        lambda.verify_multiplicative(group)?;
        entries.push((omega, lambda));
    }
    Ok(ModelCandidate { entries })
}

/// Decides whether the candidate is a generalized involution model: its
/// entries must hit each twisted class exactly once with characters on the
/// right centralizers, the induced degrees must sum to the twisted
/// involution count, and the induced sum must equal the counting character
/// classwise.
pub fn verify_gim(group: &GroupData, candidate: &ModelCandidate, tau: &GroupMap) -> Result<bool> {
    let dec = twisted_decomposition(group, tau)?;
    if candidate.entries.len() != dec.num_orbits() {
        return Err(Error::ParameterMismatch(format!(
            "{} entries for {} twisted classes",
            candidate.entries.len(),
            dec.num_orbits()
        )));
    }
    let mut hit = vec![false; dec.num_orbits()];
    for (omega, lambda) in &candidate.entries {
        let Some(orbit) = dec.orbit_of(*omega) else {
            return Err(Error::ParameterMismatch(format!(
                "{:?} is not a twisted involution",
                group.elem(*omega)
            )));
        };
        if hit[orbit] {
            return Err(Error::ParameterMismatch("two entries in one twisted class".into()));
        }
        hit[orbit] = true;
        let centralizer: Vec<u32> = (0..group.order() as u32)
            .filter(|&g| dec.act(group, g, *omega) == *omega)
            .collect();
        if lambda.domain() != centralizer.as_slice() {
            return Err(Error::ParameterMismatch(format!(
                "character domain differs from the twisted centralizer of {:?}",
                group.elem(*omega)
            )));
        }
        lambda.verify_multiplicative(group)?;
    }
    // Degree precheck: the counting character is the full multiplicity-free
    // sum exactly when the irreducible degrees add up to the twisted
    // involution count; otherwise no candidate can qualify and the counting
    // comparison below would test the wrong target.
    let irr_degree_sum: u128 = irr_degree_list(group.key())?.iter().sum();
    if irr_degree_sum != dec.involutions().len() as u128 {
        return Ok(false);
    }
    let mut induced_sum: Option<ClassFunction> = None;
    for (_, lambda) in &candidate.entries {
        let ind = induce_linear(group, lambda)?;
        induced_sum = Some(match induced_sum {
            None => ind,
            Some(acc) => {
                let values = acc
                    .values()
                    .iter()
                    .zip(ind.values())
                    .map(|(a, b)| a.add(b))
                    .collect();
                ClassFunction::from_class_values(group, values)?
            }
        });
    }
    let counting = counting_char(group, tau)?;
    Ok(induced_sum.expect("at least one twisted class") == counting)
}

pub struct ChiPmOutcome {
    /// Predicted branch: true when tensoring with gamma swaps the halves.
    pub swap: bool,
    /// The predicted branch holds classwise and the half dimensions add to
    /// the symmetric count.
    pub verified: bool,
    pub plus_degree: i64,
    pub minus_degree: i64,
}

/// Splits the ambient model by the parity of Delta(omega) and tests how
/// tensoring with gamma acts on the two half characters: it swaps them
/// exactly when n and r/p are both odd, and fixes both otherwise.
pub fn chi_pm_check(ambient: &GroupData, key: GroupKey) -> Result<ChiPmOutcome> {
    if key.r % 2 != 0 {
        return Err(Error::UnsupportedKey(format!(
            "the parity split needs even r, got {:?}",
            key
        )));
    }
    if ambient.key() != key.ambient() {
        return Err(Error::ParameterMismatch(format!(
            "{:?} is not the ambient group of {:?}",
            ambient.key(),
            key
        )));
    }
    let rep = build_model_rep(ambient, ModelVariant::Plain)?;
    let r = key.r;
    // Half-trace over the sub-basis with the given Delta parity.
    let half_char = |parity: u32| -> Result<ClassFunction> {
        ClassFunction::from_element_fn(ambient, |g| {
            let mut trace = 0i64;
            for (b, &omega) in rep.basis().iter().enumerate() {
                if ambient.elem(omega).delta() % 2 != parity {
                    continue;
                }
                let (target, sign) = rep.image(g, b);
                if target as usize == b {
                    trace += sign as i64;
                }
            }
            Ok(CycloNumber::from_integer(r, trace))
        })
    };
    let plus = half_char(0)?;
    let minus = half_char(1)?;
    let gamma = gamma_class_function(ambient, key)?;
    let swap = key.n % 2 == 1 && (key.r / key.p) % 2 == 1;
    let branch_holds = if swap {
        gamma.tensor(&plus)? == minus && gamma.tensor(&minus)? == plus
    } else {
        gamma.tensor(&plus)? == plus && gamma.tensor(&minus)? == minus
    };
    let plus_degree = rep
        .basis()
        .iter()
        .filter(|&&omega| ambient.elem(omega).delta() % 2 == 0)
        .count() as i64;
    let minus_degree = rep.dimension() as i64 - plus_degree;
    let dims_add = plus_degree + minus_degree == rep.dimension() as i64;
    Ok(ChiPmOutcome {
        swap,
        verified: branch_holds && dims_add,
        plus_degree,
        minus_degree,
    })
}
