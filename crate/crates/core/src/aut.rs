//! Automorphisms of G(r,p,n): the three-parameter family alpha, inner maps,
//! the exceptional generator permutations eta, full enumeration, and the
//! closed order formula.
//!
//! Every automorphism factors as eta^i1 . eta'^i2 . Ad(g) . alpha_(j,k,z)
//! with g ranging over the ambient wreath product, so enumeration walks
//! exactly that product grid and deduplicates by action table. The closed
//! formula for |Aut| carries a handful of exceptional constants; both
//! computations must agree, which is one of the crate's main verification
//! targets.

use std::collections::HashSet;

use num::integer::gcd;
use num::{BigRational, BigInt, ToPrimitive};

use crate::cyclo::phi;
use crate::element::{PhaseVector, WreathElement};
use crate::error::{Error, Result};
use crate::group::{Budget, GroupData, GroupKey, StandardGenerators};
use crate::map::GroupMap;
use crate::perm::Perm;

/// Parameters of the map `(x, pi) -> z^length(pi) * c^(k Delta(x)) * (jx, pi)`.
/// `z` must be a power of the all-ones central element c.
#[derive(Clone, Debug)]
pub struct AlphaParams {
    pub j: i64,
    pub k: i64,
    pub z: WreathElement,
}

impl AlphaParams {
    pub fn new(j: i64, k: i64, z: WreathElement) -> Result<Self> {
        if !z.perm.is_identity() {
            return Err(Error::InvalidParameter("z must have trivial permutation part".into()));
        }
        let m = z.phase(0);
        if (0..z.rank()).any(|i| z.phase(i) != m) {
            return Err(Error::InvalidParameter("z must be a power of the diagonal element".into()));
        }
        Ok(AlphaParams { j, k, z })
    }

    /// Common phase of z.
    fn z_power(&self) -> u32 {
        if self.z.rank() == 0 { 0 } else { self.z.phase(0) }
    }
}

/// The alpha formula applied to one element; total on the ambient group.
pub fn alpha_image(params: &AlphaParams, e: &WreathElement) -> WreathElement {
    let ell = e.perm.length() as i64;
    let delta = e.delta() as i64;
    let m = params.z_power() as i64;
    let shift = m * ell + params.k * delta;
    let phases: Vec<i64> =
        (0..e.rank()).map(|i| shift + params.j * e.phase(i) as i64).collect();
    WreathElement::new(PhaseVector::from_ints(&phases, e.modulus()), e.perm.clone())
        .expect("rank is preserved")
}

/// Checks the validity conditions and materializes alpha on the enumerated
/// group. The failed condition is named in the error.
pub fn alpha_map(group: &GroupData, params: &AlphaParams) -> Result<GroupMap> {
    let key = group.key();
    let (r, p, n) = (key.r, key.p, key.n as i64);
    if params.z.rank() != key.n || params.z.modulus() != r {
        return Err(Error::ParameterMismatch("z sized for a different group".into()));
    }
    if gcd(params.j.rem_euclid(r as i64) as u32, r) != 1 {
        return Err(Error::NotAnAutomorphism(format!(
            "gcd(j, r) != 1 for j = {}, r = {}",
            params.j, r
        )));
    }
    let jnk = (params.j + n * params.k).rem_euclid((r / p) as i64) as u32;
    if gcd(jnk, r / p) != 1 {
        return Err(Error::NotAnAutomorphism(format!(
            "gcd(j + nk, r/p) != 1 for j = {}, k = {}",
            params.j, params.k
        )));
    }
    let m = params.z_power();
    let d = gcd(p, key.n as u32);
    if m % (p / d) != 0 {
        return Err(Error::NotAnAutomorphism(
            "z is not central in the subgroup's ambient closure".into(),
        ));
    }
    if (2 * m) % r != 0 {
        return Err(Error::NotAnAutomorphism("z is not an involution".into()));
    }
    let map = GroupMap::from_fn(group, |e| alpha_image(params, e))?;
    map.inverse_map()?; // bijectivity
    Ok(map)
}

/// Every valid parameter triple, in lexicographic (j, k, z-power) order.
pub fn valid_alpha_params(key: GroupKey) -> Vec<AlphaParams> {
    let (r, p, n) = (key.r, key.p, key.n);
    let d = gcd(p, n as u32);
    let mut out = Vec::new();
    for j in 0..r as i64 {
        if gcd(j as u32, r) != 1 {
            continue;
        }
        for k in 0..r as i64 {
            let jnk = (j + n as i64 * k).rem_euclid((r / p) as i64) as u32;
            if gcd(jnk, r / p) != 1 {
                continue;
            }
            for m in (0..r).step_by((p / d) as usize) {
                if (2 * m) % r != 0 {
                    continue;
                }
                let z = WreathElement::from_parts(
                    &vec![m as i64; n],
                    &(0..n as u32).collect::<Vec<_>>(),
                    r,
                )
                .expect("diagonal element");
                out.push(AlphaParams { j, k, z });
            }
        }
    }
    out
}

/// Conjugation by an ambient element, restricted to the enumerated group.
/// Normality makes the restriction total.
pub fn ad_map(group: &GroupData, g: &WreathElement) -> Result<GroupMap> {
    let key = group.key();
    if g.rank() != key.n || g.modulus() != key.r {
        return Err(Error::ParameterMismatch("conjugator sized for a different group".into()));
    }
    let g_inv = g.inverse();
    GroupMap::from_fn(group, |x| {
        g.multiply(x).expect("same rank").multiply(&g_inv).expect("same rank")
    })
}

/// Inner-ness of Ad(g) on the subgroup, decided by the phase-sum criterion:
/// Delta(g) must be a multiple of gcd(gcd(p,n), r).
pub fn is_inner_element(key: GroupKey, g: &WreathElement) -> bool {
    let d = gcd(key.p, key.n as u32);
    g.delta() % gcd(d, key.r) == 0
}

/// Inner-ness of an arbitrary map, by direct comparison with every
/// conjugation from inside the group.
pub fn is_inner_map(group: &GroupData, map: &GroupMap) -> Result<bool> {
    if map.key() != group.key() {
        return Err(Error::ParameterMismatch("map over a different group".into()));
    }
    for h in 0..group.order() as u32 {
        if (0..group.order() as u32).all(|x| map.apply_idx(x) == group.conj(h, x)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The exceptional generator permutations. Exactly six keys carry one
/// (two for (3,3,3)); every other key returns an empty list.
pub fn eta_maps(group: &GroupData) -> Result<Vec<GroupMap>> {
    let key = group.key();
    let gens = StandardGenerators::new(key.r, key.n);
    let pair = |a: &WreathElement, b: &WreathElement| -> Result<(u32, u32)> {
        Ok((group.idx(a)?, group.idx(b)?))
    };
    let tables: Vec<Vec<(u32, u32)>> = match (key.r, key.p, key.n) {
        (2, 1, 2) => vec![vec![
            pair(gens.s_i(1), &gens.t)?,
            pair(&gens.t, gens.s_i(1))?,
        ]],
        (2, 2, 2) => {
            let s = gens.refl.as_ref().expect("p > 1");
            vec![vec![
                pair(gens.s_i(1), s)?,
                pair(gens.s_prime_i(1), gens.s_i(1))?,
                pair(s, gens.s_prime_i(1))?,
            ]]
        }
        (4, 2, 2) => {
            let t2 = gens.t.pow(2);
            vec![vec![
                pair(gens.s_i(1), &t2)?,
                pair(gens.s_prime_i(1), gens.s_i(1))?,
                pair(&t2, gens.s_prime_i(1))?,
            ]]
        }
        (3, 3, 3) => vec![
            vec![
                pair(gens.s_i(1), gens.s_i(2))?,
                pair(gens.s_i(2), gens.s_prime_i(1))?,
                pair(gens.s_prime_i(1), gens.s_i(1))?,
            ],
            vec![
                pair(gens.s_i(1), gens.s_i(1))?,
                pair(gens.s_i(2), gens.s_i(2))?,
                pair(gens.s_prime_i(1), gens.s_prime_i(2))?,
            ],
        ],
        (2, 2, 4) => vec![vec![
            pair(gens.s_i(1), gens.s_prime_i(1))?,
            pair(gens.s_i(2), gens.s_i(2))?,
            pair(gens.s_i(3), gens.s_i(1))?,
            pair(gens.s_prime_i(1), gens.s_i(3))?,
        ]],
        (1, 1, 6) => {
            let image = |images: [u32; 6]| -> Result<WreathElement> {
                WreathElement::new(
                    PhaseVector::zero(6, 1),
                    Perm::from_images(images.to_vec())?,
                )
            };
            let targets = [
                image([1, 0, 3, 2, 5, 4])?,
                image([4, 2, 1, 5, 0, 3])?,
                image([1, 0, 5, 4, 3, 2])?,
                image([4, 5, 3, 2, 0, 1])?,
                image([1, 0, 4, 5, 2, 3])?,
            ];
            vec![(1..=5)
                .map(|i| pair(gens.s_i(i), &targets[i - 1]))
                .collect::<Result<_>>()?]
        }
        _ => Vec::new(),
    };
    tables
        .into_iter()
        .map(|table| GroupMap::extend_from_generators(group, &table))
        .collect()
}

/// All automorphisms, deduplicated by action table, in a canonical order.
///
/// The grid walked is the complete factorization: exceptional-map powers,
/// conjugations by ambient elements (taken modulo the central diagonal
/// subgroup, which acts trivially), and every valid alpha.
pub fn enumerate_aut(group: &GroupData, budget: &Budget) -> Result<Vec<GroupMap>> {
    let key = group.key();
    let ambient = GroupData::enumerate(key.ambient(), budget)?;
    // Powers of the exceptional maps.
    let mut x_composites = vec![GroupMap::identity(group)];
    for eta in eta_maps(group)? {
        let order = eta.order()?;
        let mut extended = Vec::with_capacity(x_composites.len() * order as usize);
        for base in &x_composites {
            let mut acc = base.clone();
            extended.push(acc.clone());
            for _ in 1..order {
                acc = acc.compose(&eta)?;
                extended.push(acc.clone());
            }
        }
        x_composites = extended;
    }
    // Ambient conjugators modulo the diagonal center.
    let c_elem = StandardGenerators::new(key.r, key.n).c;
    let c_idx = ambient.idx(&c_elem)?;
    let mut ad_reps = Vec::new();
    'conjugators: for g in 0..ambient.order() as u32 {
        let mut cm = g;
        for _ in 1..key.r {
            cm = ambient.mult(cm, c_idx);
            if cm < g {
                continue 'conjugators;
            }
        }
        ad_reps.push(g);
    }
    let alphas = valid_alpha_params(key);
    let combinations =
        x_composites.len() as u128 * ad_reps.len() as u128 * alphas.len() as u128;
    if combinations > budget.max_search as u128 {
        return Err(Error::SizeExceeded { required: combinations, budget: budget.max_search });
    }
    let alpha_tables: Vec<GroupMap> =
        alphas.iter().map(|p| alpha_map(group, p)).collect::<Result<_>>()?;
    let ad_tables: Vec<GroupMap> = ad_reps
        .iter()
        .map(|&g| ad_map(group, ambient.elem(g)))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for x in &x_composites {
        for ad in &ad_tables {
            let xa = x.compose(ad)?;
            for alpha in &alpha_tables {
                let table: Vec<u32> = alpha
                    .table()
                    .iter()
                    .map(|&i| xa.apply_idx(i))
                    .collect();
                seen.insert(table);
            }
        }
    }
    let mut tables: Vec<Vec<u32>> = seen.into_iter().collect();
    tables.sort_unstable();
    tables
        .into_iter()
        .map(|t| GroupMap::from_table(key, t))
        .collect()
}

/// Closed-form orders, with the exceptional constants spelled out.
pub struct AutOrders {
    pub aut: u128,
    pub out: u128,
    pub center: u128,
    /// Constant c as a reduced fraction.
    pub c: (u64, u64),
    /// Constant c'.
    pub c_prime: u64,
    /// Greatest divisor of r/p coprime to n.
    pub e: u32,
}

/// |Aut|, |Out|, |Z| by the closed formula. For n = 1 the group is cyclic of
/// order r/p and everything reduces to the totient.
pub fn aut_order_formula(key: GroupKey) -> Result<AutOrders> {
    let (r, p, n) = (key.r, key.p, key.n as u32);
    if n == 1 {
        let q = r / p;
        return Ok(AutOrders {
            aut: phi(q) as u128,
            out: phi(q) as u128,
            center: q as u128,
            c: (1, 1),
            c_prime: 1,
            e: 1,
        });
    }
    let e = (1..=r / p)
        .filter(|&e| (r / p) % e == 0 && gcd(e, n) == 1)
        .max()
        .expect("1 always qualifies");
    let (c, c_prime): ((u64, u64), u64) = match (r, p, n) {
        (1, 1, 2) => ((1, 1), 2),
        (2, 2, 2) => ((3, 1), 2),
        (2, 1, 2) => ((1, 1), 1),
        (4, 2, 2) => ((3, 2), 1),
        (3, 3, 3) => ((4, 1), 1),
        (2, 2, 4) => ((6, 1), 1),
        (1, 1, 6) => ((2, 1), 1),
        _ => {
            let c = if n == 2 {
                (1, 2)
            } else if r % 2 == 1 || (p % 2 == 0 && (r / p) % 2 == 1 && n % 2 == 1) {
                (1, 1)
            } else {
                (2, 1)
            };
            (c, 1)
        }
    };
    let big = |x: u64| BigInt::from(x);
    let ratio = |num: u64, den: u64| BigRational::new(big(num), big(den));
    let group_order = key.order();
    let base = ratio(phi(r) as u64, 1)
        * ratio(phi(e) as u64, e as u64)
        * BigRational::from(BigInt::from(group_order));
    let aut_rat = ratio(c.0, c.1) / ratio(c_prime, 1) * base.clone();
    let out_rat = ratio(c.0, c.1)
        * ratio(phi(r) as u64, 1)
        * ratio(phi(e) as u64, e as u64)
        * ratio((r / p) as u64 * gcd(p, n) as u64, 1);
    let center = c_prime as u128 * (r / p) as u128 * gcd(p, n) as u128;
    let to_int = |x: BigRational, what: &str| -> Result<u128> {
        if !x.is_integer() {
            return Err(Error::Consistency(format!("{} formula is not integral on {:?}", what, key)));
        }
        x.to_integer().to_u128().ok_or_else(|| Error::Consistency("order overflow".into()))
    };
    Ok(AutOrders {
        aut: to_int(aut_rat, "automorphism-order")?,
        out: to_int(out_rat, "outer-order")?,
        center,
        c,
        c_prime,
        e,
    })
}

/// Which rule decides the existence of a generalized involution model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GimReason {
    /// gcd(p,n) = 1: the restricted or twisted model applies.
    CoprimeCase,
    /// n = 2 with r/p odd: the explicit four-class rank-2 model.
    RankTwoOddQuotient,
    /// gcd(p,n) > 2: fewer symmetric elements than the degree sum.
    CountInequality,
    /// gcd(p,n) = 2 with r/p even: a central element is trapped in every
    /// twisted centralizer's derived subgroup.
    CentralObstruction,
    /// gcd(p,n) = 2, r/p odd, n > 2: ruled out beyond rank two.
    HigherRankEvenGcd,
}

impl GimReason {
    pub fn as_str(self) -> &'static str {
        match self {
            GimReason::CoprimeCase => "coprime-case",
            GimReason::RankTwoOddQuotient => "rank-two-odd-quotient",
            GimReason::CountInequality => "count-inequality",
            GimReason::CentralObstruction => "central-commutator-obstruction",
            GimReason::HigherRankEvenGcd => "higher-rank-even-gcd",
        }
    }
}

/// Existence of a generalized involution model with respect to the inverse
/// transpose: true iff gcd(p,n) = 1, or n = 2 and r/p odd.
pub fn gim_exists(key: GroupKey) -> (bool, GimReason) {
    let d = gcd(key.p, key.n as u32);
    if d == 1 {
        return (true, GimReason::CoprimeCase);
    }
    if key.n == 2 && (key.r / key.p) % 2 == 1 {
        return (true, GimReason::RankTwoOddQuotient);
    }
    if d > 2 {
        return (false, GimReason::CountInequality);
    }
    if (key.r / key.p) % 2 == 0 {
        return (false, GimReason::CentralObstruction);
    }
    (false, GimReason::HigherRankEvenGcd)
}

/// Table-equality checks for the composition laws of the alpha family, over
/// every valid parameter choice of the key: beta_j . beta_j' = beta_(jj'),
/// gamma absorbs with the twisted addition k'' = k + k' + nkk', and the two
/// families commute into alpha_(j, jk, z).
pub fn composition_laws_check(group: &GroupData) -> Result<bool> {
    let key = group.key();
    let (r, n) = (key.r as i64, key.n as i64);
    let identity_z = WreathElement::identity(key.n, key.r);
    let params = valid_alpha_params(key);
    let betas: Vec<&AlphaParams> =
        params.iter().filter(|p| p.k == 0 && p.z_power() == 0).collect();
    let gammas: Vec<&AlphaParams> = params.iter().filter(|p| p.j == 1).collect();
    for a in &betas {
        for b in &betas {
            let lhs = alpha_map(group, a)?.compose(&alpha_map(group, b)?)?;
            let jj = (a.j * b.j).rem_euclid(r);
            let rhs = alpha_map(group, &AlphaParams::new(jj, 0, identity_z.clone())?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    for a in &gammas {
        for b in &gammas {
            let lhs = alpha_map(group, a)?.compose(&alpha_map(group, b)?)?;
            let k2 = (a.k + b.k + n * a.k * b.k).rem_euclid(r);
            let zz = a.z.multiply(&b.z)?;
            let rhs = alpha_map(group, &AlphaParams::new(1, k2, zz)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    for beta in &betas {
        for gamma in &gammas {
            let bg = alpha_map(group, beta)?.compose(&alpha_map(group, gamma)?)?;
            let gb = alpha_map(group, gamma)?.compose(&alpha_map(group, beta)?)?;
            let mixed = alpha_map(
                group,
                &AlphaParams::new(
                    beta.j,
                    (beta.j * gamma.k).rem_euclid(r),
                    gamma.z.clone(),
                )?,
            )?;
            if bg != mixed || gb != mixed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The displayed generator images of alpha, checked in the ambient group:
/// transpositions pick up z, the primed reflections pick up z and a power of
/// the braid product, s goes to its j-th power, t to c^k t^j, and the
/// diagonal c to c^(j + nk).
pub fn alpha_generator_images_check(key: GroupKey, params: &AlphaParams) -> Result<bool> {
    let gens = StandardGenerators::new(key.r, key.n);
    let n = key.n;
    let z = &params.z;
    let jr = params.j.rem_euclid(key.r as i64) as u32;
    for i in 1..n {
        let s_i = gens.s_i(i);
        if alpha_image(params, s_i) != z.multiply(s_i)? {
            return Ok(false);
        }
        let sp = gens.s_prime_i(i);
        // z * s_i' * (s_i s_i')^(j-1), exponent taken mod r.
        let braid = s_i.multiply(sp)?;
        let mut expected = z.multiply(sp)?;
        expected = expected.multiply(&braid.pow(jr as i64 - 1))?;
        if alpha_image(params, sp) != expected {
            return Ok(false);
        }
    }
    if n >= 2 {
        let s = WreathElement::from_parts(
            &{
                let mut v = vec![0i64; n];
                v[0] = 1;
                v[1] = -1;
                v
            },
            &(0..n as u32).collect::<Vec<_>>(),
            key.r,
        )?;
        if alpha_image(params, &s) != s.pow(params.j) {
            return Ok(false);
        }
    }
    let c = &gens.c;
    if alpha_image(params, &gens.t) != c.pow(params.k).multiply(&gens.t.pow(params.j))? {
        return Ok(false);
    }
    if alpha_image(params, c) != c.pow(params.j + n as i64 * params.k) {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(r: u32, p: u32, n: usize) -> GroupData {
        GroupData::enumerate(GroupKey::new(r, p, n).unwrap(), &Budget::default()).unwrap()
    }

    fn diag(r: u32, n: usize, m: i64) -> WreathElement {
        WreathElement::from_parts(&vec![m; n], &(0..n as u32).collect::<Vec<_>>(), r).unwrap()
    }

    #[test]
    fn alpha_special_values() {
        let g = group(4, 2, 2);
        let one = diag(4, 2, 0);
        let id = alpha_map(&g, &AlphaParams::new(1, 0, one.clone()).unwrap()).unwrap();
        assert!(id.is_identity());
        let inv_t = alpha_map(&g, &AlphaParams::new(-1, 0, one.clone()).unwrap()).unwrap();
        assert!(inv_t == GroupMap::inverse_transpose(&g));
        // j = 2 shares a factor with r = 4.
        let rejected = alpha_map(&g, &AlphaParams::new(2, 0, one).unwrap());
        assert!(matches!(rejected, Err(Error::NotAnAutomorphism(_))));
        // Every valid parameter triple produces a full-audit automorphism.
        for params in valid_alpha_params(g.key()) {
            alpha_map(&g, &params).unwrap().verify_automorphism(&g).unwrap();
        }
    }

    #[test]
    fn alpha_generator_images() {
        for key in [
            GroupKey::new(6, 2, 3).unwrap(),
            GroupKey::new(4, 2, 2).unwrap(),
            GroupKey::new(3, 1, 3).unwrap(),
        ] {
            for params in valid_alpha_params(key) {
                assert!(
                    alpha_generator_images_check(key, &params).unwrap(),
                    "{key:?} j={} k={}",
                    params.j,
                    params.k
                );
            }
        }
    }

    #[test]
    fn composition_laws_small() {
        let g = group(4, 2, 2);
        assert!(composition_laws_check(&g).unwrap());
    }

    #[test]
    fn conjugation_maps() {
        let g = group(4, 2, 2);
        let gens = StandardGenerators::new(4, 2);
        // Central elements act trivially.
        let central = ad_map(&g, &gens.c).unwrap();
        assert!(central.is_identity());
        // Functoriality.
        let a = gens.t.clone();
        let b = gens.s_i(1).clone();
        let ab = a.multiply(&b).unwrap();
        assert!(
            ad_map(&g, &ab).unwrap()
                == ad_map(&g, &a).unwrap().compose(&ad_map(&g, &b).unwrap()).unwrap()
        );
        // t moves s_1 even though t is outside the subgroup.
        let ad_t = ad_map(&g, &gens.t).unwrap();
        let s1 = g.idx(gens.s_i(1)).unwrap();
        assert_ne!(ad_t.apply_idx(s1), s1);
        ad_t.verify_automorphism(&g).unwrap();
    }

    #[test]
    fn inner_criterion_matches_exhaustive_search() {
        for (r, p, n) in [(4u32, 2u32, 2usize), (6, 2, 2), (4, 2, 3)] {
            let key = GroupKey::new(r, p, n).unwrap();
            let g = group(r, p, n);
            let ambient = group(r, 1, n);
            for idx in 0..ambient.order() as u32 {
                let conjugator = ambient.elem(idx);
                let map = ad_map(&g, conjugator).unwrap();
                assert_eq!(
                    is_inner_element(key, conjugator),
                    is_inner_map(&g, &map).unwrap(),
                    "conjugator {:?} on {:?}",
                    conjugator,
                    key
                );
            }
        }
        // Subgroup members are honestly inner; t is not when d = 2.
        let key = GroupKey::new(4, 2, 2).unwrap();
        let gens = StandardGenerators::new(4, 2);
        assert!(!is_inner_element(key, &gens.t));
        assert!(is_inner_element(key, gens.s_i(1)));
    }

    #[test]
    fn eta_tables() {
        // Empty away from the six exceptional keys.
        assert!(eta_maps(&group(5, 1, 3)).unwrap().is_empty());
        assert!(eta_maps(&group(3, 1, 2)).unwrap().is_empty());
        // The swap map on the rank-2 hyperoctahedral group.
        let g = group(2, 1, 2);
        let etas = eta_maps(&g).unwrap();
        assert_eq!(etas.len(), 1);
        etas[0].verify_automorphism(&g).unwrap();
        assert_eq!(etas[0].order().unwrap(), 2);
        let gens = StandardGenerators::new(2, 2);
        assert_eq!(
            etas[0].apply(&g, gens.s_i(1)).unwrap(),
            gens.t
        );
        // Two maps on (3,3,3); one everywhere else in the list.
        let g333 = group(3, 3, 3);
        let etas = eta_maps(&g333).unwrap();
        assert_eq!(etas.len(), 2);
        for eta in &etas {
            eta.verify_automorphism(&g333).unwrap();
        }
        for (r, p, n) in [(2u32, 2u32, 2usize), (4, 2, 2), (2, 2, 4)] {
            let g = group(r, p, n);
            let etas = eta_maps(&g).unwrap();
            assert_eq!(etas.len(), 1, "G({r},{p},{n})");
            etas[0].verify_automorphism(&g).unwrap();
        }
        // The degree-6 symmetric group's exceptional map sends neighbor
        // transpositions to triple transpositions.
        let s6 = group(1, 1, 6);
        let etas = eta_maps(&s6).unwrap();
        assert_eq!(etas.len(), 1);
        let gens = StandardGenerators::new(1, 6);
        let image = etas[0].apply(&s6, gens.s_i(1)).unwrap();
        assert_eq!(image.perm.images(), &[1, 0, 3, 2, 5, 4]);
        etas[0].verify_automorphism(&s6).unwrap();
    }

    #[test]
    fn enumeration_matches_formula_on_small_keys() {
        for ((r, p, n), expected) in [
            ((2u32, 1u32, 2usize), 8u128),
            ((2, 2, 2), 6),
            ((3, 1, 3), 324),
            ((6, 3, 1), 1),
            ((1, 1, 2), 1),
        ] {
            let g = group(r, p, n);
            let auts = enumerate_aut(&g, &Budget::default()).unwrap();
            assert_eq!(auts.len() as u128, expected, "G({r},{p},{n})");
            let formula = aut_order_formula(g.key()).unwrap();
            assert_eq!(formula.aut, expected, "formula on G({r},{p},{n})");
            assert_eq!(formula.center, g.center().len() as u128);
            // Closure under composition, spot pairs.
            if auts.len() > 1 {
                let tables: HashSet<&[u32]> =
                    auts.iter().map(|m| m.table()).collect();
                let step = auts.len() / 3 + 1;
                for (i, a) in auts.iter().step_by(step).enumerate() {
                    let b = &auts[(i * 7 + 3) % auts.len()];
                    let c = a.compose(b).unwrap();
                    assert!(tables.contains(c.table()));
                }
            }
        }
    }

    #[test]
    fn formula_exceptional_values() {
        for ((r, p, n), aut) in [
            ((2u32, 1u32, 2usize), 8u128),
            ((2, 2, 2), 6),
            ((4, 2, 2), 48),
            ((3, 3, 3), 432),
            ((2, 2, 4), 1152),
            ((1, 1, 6), 1440),
            ((1, 1, 2), 1),
            ((8, 2, 3), 6144),
            ((4, 2, 4), 12288),
            ((6, 1, 3), 2592),
            ((3, 1, 3), 324),
            ((6, 3, 2), 24),
        ] {
            let orders = aut_order_formula(GroupKey::new(r, p, n).unwrap()).unwrap();
            assert_eq!(orders.aut, aut, "G({r},{p},{n})");
        }
        // Rank 1: the cyclic group's totient.
        for (r, p) in [(4u32, 1u32), (6, 2), (9, 3)] {
            let orders = aut_order_formula(GroupKey::new(r, p, 1).unwrap()).unwrap();
            assert_eq!(orders.aut, phi(r / p) as u128);
            assert_eq!(orders.center, (r / p) as u128);
        }
    }

    #[test]
    fn classification_predicate() {
        let case = |r, p, n| gim_exists(GroupKey::new(r, p, n).unwrap());
        assert_eq!(case(6, 2, 2), (true, GimReason::RankTwoOddQuotient));
        assert_eq!(case(4, 2, 2), (false, GimReason::CentralObstruction));
        assert_eq!(case(6, 6, 3), (false, GimReason::CountInequality));
        assert_eq!(case(6, 2, 3), (true, GimReason::CoprimeCase));
        assert_eq!(case(2, 2, 6), (false, GimReason::HigherRankEvenGcd));
        assert_eq!(case(3, 1, 3), (true, GimReason::CoprimeCase));
    }
}
