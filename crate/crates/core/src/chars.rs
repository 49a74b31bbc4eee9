//! Irreducible characters of G(r,1,n) and their Clifford descent to G(r,p,n).
//!
//! The ambient irreducibles chi_theta are indexed by r-tuples of partitions
//! with total size n and are computed by inducing a product of wreath
//! characters from a block subgroup. Restriction to G(r,p,n) is controlled
//! by the orbit of theta under a cyclic index shift: free orbits restrict
//! irreducibly, an orbit with stabilizer of order k splits into k pieces of
//! equal degree. Value tables are produced only for the free case; split
//! restrictions are tracked by degree alone.

use num::{BigInt, BigRational};

use crate::cyclo::{rational, CycloNumber};
use crate::element::WreathElement;
use crate::error::{Error, Result};
use crate::group::{GroupData, GroupKey};
use crate::map::GroupMap;
use crate::partition::{multinomial, multipartitions, sym_char_value, Multipartition, Partition};

/// Exact class function on an enumerated group, stored by class index in
/// the group's canonical class order.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    key: GroupKey,
    values: Vec<CycloNumber>,
}

impl ClassFunction {
    pub fn from_class_values(group: &GroupData, values: Vec<CycloNumber>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::ParameterMismatch(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(ClassFunction { key: group.key(), values })
    }

    /// Evaluates `f` on every element and checks the results are constant on
    /// conjugacy classes; a class-constancy failure is reported, not
    /// silently dropped.
    pub fn from_element_fn(
        group: &GroupData,
        mut f: impl FnMut(u32) -> Result<CycloNumber>,
    ) -> Result<Self> {
        let mut values: Vec<Option<CycloNumber>> = vec![None; group.num_classes()];
        for i in 0..group.order() as u32 {
            let v = f(i)?;
            let c = group.class_of(i) as usize;
            match &values[c] {
                None => values[c] = Some(v),
                Some(prev) => {
                    if !prev.equals(&v) {
                        return Err(Error::Consistency(format!(
                            "values not constant on the class of {:?}",
                            group.elem(i)
                        )));
                    }
                }
            }
        }
        Ok(ClassFunction { key: group.key(), values: values.into_iter().map(|v| v.unwrap()).collect() })
    }

    pub fn trivial(group: &GroupData) -> Self {
        let one = CycloNumber::one(group.key().r);
        ClassFunction { key: group.key(), values: vec![one; group.num_classes()] }
    }

    pub fn key(&self) -> GroupKey {
        self.key
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycloNumber {
        &self.values[class]
    }

    pub fn value_on(&self, group: &GroupData, elem: u32) -> &CycloNumber {
        &self.values[group.class_of(elem) as usize]
    }

    /// Value at the identity.
    pub fn degree(&self, group: &GroupData) -> &CycloNumber {
        self.value_on(group, group.identity_idx())
    }

    /// Pointwise product.
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.key != other.key {
            return Err(Error::ParameterMismatch("tensor over different groups".into()));
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect();
        Ok(ClassFunction { key: self.key, values })
    }

    pub fn conjugate(&self) -> ClassFunction {
        ClassFunction {
            key: self.key,
            values: self.values.iter().map(|v| v.conjugate()).collect(),
        }
    }

    /// `(1/|G|) sum |class| * self(class) * conjugate(other(class))`.
    pub fn inner_product(&self, group: &GroupData, other: &ClassFunction) -> Result<CycloNumber> {
        if self.key != other.key || self.key != group.key() {
            return Err(Error::ParameterMismatch("inner product over different groups".into()));
        }
        let mut acc = CycloNumber::zero(self.key.r);
        for (c, members) in group.classes().iter().enumerate() {
            let term = self.values[c].mul(&other.values[c].conjugate());
            acc = acc.add(&term.scale(&rational(members.len() as i64)));
        }
        let order = BigRational::new(BigInt::from(1), BigInt::from(group.order() as u64));
        Ok(acc.scale(&order))
    }
}

impl std::fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ClassFunction({:?}, {} classes)", self.key, self.values.len())
    }
}

/// `psi_i wr chi^lambda` at g: the symmetric-group character at the cycle
/// type of |g|, times `zeta_r^(i * Delta(g))`.
pub fn wreath_linear_value(i: u32, lambda: &Partition, g: &WreathElement) -> Result<CycloNumber> {
    if g.rank() as u32 != lambda.size() {
        return Err(Error::ParameterMismatch(format!(
            "element of rank {} against a partition of {}",
            g.rank(),
            lambda.size()
        )));
    }
    let cycle_type = Partition::new(g.perm.cycle_type())?;
    let chi = sym_char_value(lambda, &cycle_type);
    let zeta = CycloNumber::root_of_unity(g.modulus(), i as i64 * g.delta() as i64);
    Ok(zeta.scale(&rational(chi)))
}

/// Block layout for the subgroup the induction starts from: component b of
/// theta owns the next `|theta_b|` coordinates, component 0 first.
fn block_layout(theta: &Multipartition) -> (Vec<usize>, Vec<usize>) {
    let mut starts = Vec::with_capacity(theta.arity());
    let mut block_of = Vec::new();
    let mut pos = 0usize;
    for (b, part) in theta.components().iter().enumerate() {
        starts.push(pos);
        for _ in 0..part.size() {
            block_of.push(b);
            pos += 1;
        }
    }
    (starts, block_of)
}

/// Inner character of the block subgroup at h, split into an integer factor
/// and a power of zeta_r; `None` when |h| does not preserve the blocks.
fn block_character(
    h: &WreathElement,
    theta: &Multipartition,
    starts: &[usize],
    block_of: &[usize],
) -> Option<(i64, u32)> {
    let r = h.modulus();
    for i in 0..h.rank() {
        if block_of[h.perm.apply(i)] != block_of[i] {
            return None;
        }
    }
    let mut intval = 1i64;
    let mut exponent = 0u64;
    for (b, part) in theta.components().iter().enumerate() {
        let m = part.size() as usize;
        if m == 0 {
            continue;
        }
        let start = starts[b];
        // Cycle type of |h| restricted to this block.
        let mut seen = vec![false; m];
        let mut lengths = Vec::new();
        for i in 0..m {
            if seen[i] {
                continue;
            }
            let mut len = 0u32;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = h.perm.apply(start + j) - start;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(lengths).expect("sorted cycle lengths");
        intval *= sym_char_value(part, &mu);
        let delta_b: u64 = (start..start + m).map(|i| h.phase(i) as u64).sum();
        exponent += b as u64 * delta_b;
    }
    Some((intval, (exponent % r as u64) as u32))
}

fn s_theta_order(r: u32, theta: &Multipartition) -> u128 {
    let mut order = 1u128;
    for part in theta.components() {
        order *= (r as u128).pow(part.size());
        for k in 1..=part.size() as u128 {
            order *= k;
        }
    }
    order
}

/// Induced-character value at g, computed over the conjugacy class of g.
///
/// The defining Frobenius sum runs over all t in the group, but the map
/// `t -> t^-1 g t` covers the class of g with constant multiplicity equal to
/// the centralizer order, so the sum collapses to a centralizer-weighted sum
/// over class members. The unit tests compare this against the literal sum.
pub fn chi_theta_value(
    group: &GroupData,
    theta: &Multipartition,
    g: &WreathElement,
) -> Result<CycloNumber> {
    let key = group.key();
    if key.p != 1 {
        return Err(Error::ParameterMismatch(format!(
            "induction lives in the ambient wreath product, got {:?}",
            key
        )));
    }
    if theta.arity() != key.r as usize || theta.total() != key.n as u32 {
        return Err(Error::ParameterMismatch(format!(
            "index {:?} does not fit {:?}",
            theta, key
        )));
    }
    let g_idx = group.idx(g)?;
    let class = &group.classes()[group.class_of(g_idx) as usize];
    let centralizer = group.order() as u128 / class.len() as u128;
    let r = key.r as usize;
    let (starts, block_of) = block_layout(theta);
    let mut acc = vec![0i64; r];
    for &h_idx in class {
        if let Some((v, e)) = block_character(group.elem(h_idx), theta, &starts, &block_of) {
            acc[e as usize] += v;
        }
    }
    let denom = BigInt::from(s_theta_order(key.r, theta));
    let weights: Vec<BigRational> = acc
        .into_iter()
        .map(|a| BigRational::new(BigInt::from(a) * BigInt::from(centralizer), denom.clone()))
        .collect();
    Ok(CycloNumber::from_zeta_powers(key.r, &weights))
}

/// Degree of chi_theta by the product formula; agrees with the identity
/// evaluation (asserted in tests).
pub fn chi_theta_degree(theta: &Multipartition) -> u128 {
    let sizes: Vec<u32> = theta.components().iter().map(|p| p.size()).collect();
    let mut deg = multinomial(theta.total(), &sizes);
    for part in theta.components() {
        deg *= part.syt_count();
    }
    deg
}

pub fn chi_theta_class_function(
    group: &GroupData,
    theta: &Multipartition,
) -> Result<ClassFunction> {
    let mut values = Vec::with_capacity(group.num_classes());
    for c in 0..group.num_classes() {
        let rep = group.elem(group.class_rep(c as u32));
        values.push(chi_theta_value(group, theta, rep)?);
    }
    ClassFunction::from_class_values(group, values)
}

/// Every ambient irreducible, paired with its index, in the deterministic
/// `multipartitions` order.
pub fn chi_theta_table(group: &GroupData) -> Result<Vec<(Multipartition, ClassFunction)>> {
    let key = group.key();
    multipartitions(key.r, key.n as u32)
        .into_iter()
        .map(|theta| {
            let cf = chi_theta_class_function(group, &theta)?;
            Ok((theta, cf))
        })
        .collect()
}

/// The distinguished linear character whose kernel contains G(r,p,n):
/// `zeta_r^((r/p) * Delta(g))`. Has order p in the ambient character group.
pub fn gamma_value(key: GroupKey, g: &WreathElement) -> Result<CycloNumber> {
    if g.modulus() != key.r || g.rank() != key.n {
        return Err(Error::ParameterMismatch(format!(
            "element of G(r={},n={}) against {:?}",
            g.modulus(),
            g.rank(),
            key
        )));
    }
    Ok(CycloNumber::root_of_unity(key.r, (key.r / key.p) as i64 * g.delta() as i64))
}

/// `gamma` as a class function on the ambient group of `key`.
pub fn gamma_class_function(ambient: &GroupData, key: GroupKey) -> Result<ClassFunction> {
    if ambient.key() != key.ambient() {
        return Err(Error::ParameterMismatch(format!(
            "{:?} is not the ambient group of {:?}",
            ambient.key(),
            key
        )));
    }
    let mut values = Vec::with_capacity(ambient.num_classes());
    for c in 0..ambient.num_classes() {
        values.push(gamma_value(key, ambient.elem(ambient.class_rep(c as u32)))?);
    }
    ClassFunction::from_class_values(ambient, values)
}

/// Index shift implementing the tensor action of `gamma`: component x of the
/// result is component x - r/p (mod r) of the input.
pub fn shift_theta(theta: &Multipartition, key: GroupKey) -> Multipartition {
    theta.shift((key.r / key.p) as usize)
}

/// Orbit of theta under the index shift, and the stabilizer order
/// k = p / |orbit|. The orbit starts at theta and follows repeated shifts.
pub fn orbit_and_stabilizer(
    theta: &Multipartition,
    key: GroupKey,
) -> (Vec<Multipartition>, u32) {
    let mut orbit = vec![theta.clone()];
    let mut current = shift_theta(theta, key);
    while current != *theta {
        orbit.push(current.clone());
        current = shift_theta(&current, key);
    }
    let k = key.p / orbit.len() as u32;
    (orbit, k)
}

/// Degrees of the irreducible characters of G(r,p,n), as a sorted multiset.
///
/// Each shift orbit with stabilizer order k contributes k equal pieces of
/// degree `chi_theta_degree / k`. The sum-of-squares identity against the
/// group order is checked before returning.
pub fn irr_degree_list(key: GroupKey) -> Result<Vec<u128>> {
    let mut degrees = Vec::new();
    for theta in multipartitions(key.r, key.n as u32) {
        let (orbit, k) = orbit_and_stabilizer(&theta, key);
        if orbit.iter().min() != Some(&theta) {
            continue; // one representative per orbit
        }
        let deg = chi_theta_degree(&theta);
        if deg % k as u128 != 0 {
            return Err(Error::Consistency(format!(
                "degree {} of {:?} not divisible by stabilizer order {}",
                deg, theta, k
            )));
        }
        for _ in 0..k {
            degrees.push(deg / k as u128);
        }
    }
    let square_sum: u128 = degrees.iter().map(|d| d * d).sum();
    if square_sum != key.order() {
        return Err(Error::Consistency(format!(
            "sum of squared degrees {} != |{:?}| = {}",
            square_sum,
            key,
            key.order()
        )));
    }
    degrees.sort_unstable();
    Ok(degrees)
}

/// Restriction of the ambient irreducible chi_theta to the subgroup, as a
/// value table. Only valid when the shift orbit of theta is free (stabilizer
/// 1), so that the restriction stays irreducible.
pub fn restricted_character(
    ambient: &GroupData,
    sub: &GroupData,
    theta: &Multipartition,
) -> Result<ClassFunction> {
    if sub.key().ambient() != ambient.key() {
        return Err(Error::ParameterMismatch(format!(
            "{:?} is not the ambient group of {:?}",
            ambient.key(),
            sub.key()
        )));
    }
    let (_, k) = orbit_and_stabilizer(theta, sub.key());
    if k != 1 {
        return Err(Error::UnsupportedKey(format!(
            "restriction of {:?} to {:?} splits (stabilizer order {}); only degrees are defined",
            theta,
            sub.key(),
            k
        )));
    }
    let mut values = Vec::with_capacity(sub.num_classes());
    for c in 0..sub.num_classes() {
        values.push(chi_theta_value(ambient, theta, sub.elem(sub.class_rep(c as u32)))?);
    }
    ClassFunction::from_class_values(sub, values)
}

pub struct SymmetricCount {
    pub symmetric_count: u64,
    pub degree_sum: u128,
    pub equal: bool,
}

/// Counts elements fixed by the transpose against the sum of irreducible
/// degrees. Equality characterizes gcd(p,n) <= 2; the count never exceeds
/// the sum (both facts asserted by callers, reported here).
pub fn symmetric_count_check(group: &GroupData) -> Result<SymmetricCount> {
    let symmetric_count =
        group.elements().iter().filter(|e| e.is_symmetric()).count() as u64;
    let degree_sum: u128 = irr_degree_list(group.key())?.iter().sum();
    Ok(SymmetricCount {
        symmetric_count,
        degree_sum,
        equal: symmetric_count as u128 == degree_sum,
    })
}

/// Twisted Frobenius-Schur indicator `(1/|G|) sum chi(g * tau(g))`, which
/// must come out in {-1, 0, 1}.
pub fn epsilon_tau(group: &GroupData, chi: &ClassFunction, tau: &GroupMap) -> Result<i64> {
    if chi.key() != group.key() || tau.key() != group.key() {
        return Err(Error::ParameterMismatch("indicator over mismatched groups".into()));
    }
    if !tau.is_involution() {
        return Err(Error::InvalidParameter("the twist must be an involution".into()));
    }
    let mut class_counts = vec![0i64; group.num_classes()];
    for g in 0..group.order() as u32 {
        let m = group.mult(g, tau.apply_idx(g));
        class_counts[group.class_of(m) as usize] += 1;
    }
    let mut acc = CycloNumber::zero(group.key().r);
    for (c, count) in class_counts.iter().enumerate() {
        acc = acc.add(&chi.value(c).scale(&rational(*count)));
    }
    let value = acc.scale(&BigRational::new(
        BigInt::from(1),
        BigInt::from(group.order() as u64),
    ));
    let rat = value.as_rational().map_err(|_| {
        Error::Consistency("indicator is not rational".into())
    })?;
    if !rat.is_integer() {
        return Err(Error::Consistency(format!("indicator {} is not an integer", rat)));
    }
    let int: i64 = rat
        .to_integer()
        .try_into()
        .map_err(|_| Error::Consistency("indicator out of range".into()))?;
    if !(-1..=1).contains(&int) {
        return Err(Error::Consistency(format!("indicator {} outside {{-1,0,1}}", int)));
    }
    Ok(int)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Budget;
    use crate::partition::partitions_of;

    fn group(r: u32, p: u32, n: usize) -> GroupData {
        GroupData::enumerate(GroupKey::new(r, p, n).unwrap(), &Budget::default()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn multi(components: &[&[u32]]) -> Multipartition {
        Multipartition::new(components.iter().map(|c| part(c)).collect())
    }

    /// Literal Frobenius sum over every t in the group; the production
    /// evaluator collapses this to a class sum and must agree.
    fn chi_theta_literal(
        group: &GroupData,
        theta: &Multipartition,
        g: &WreathElement,
    ) -> CycloNumber {
        let r = group.key().r;
        let (starts, block_of) = block_layout(theta);
        let mut acc = vec![0i64; r as usize];
        for t in group.elements() {
            let h = t.inverse().multiply(g).unwrap().multiply(t).unwrap();
            if let Some((v, e)) = block_character(&h, theta, &starts, &block_of) {
                acc[e as usize] += v;
            }
        }
        let denom = BigInt::from(s_theta_order(r, theta));
        let weights: Vec<BigRational> = acc
            .into_iter()
            .map(|a| BigRational::new(BigInt::from(a), denom.clone()))
            .collect();
        CycloNumber::from_zeta_powers(r, &weights)
    }

    #[test]
    fn wreath_linear_examples() {
        // Trivial component: 1 everywhere.
        let g22 = group(2, 1, 2);
        for e in g22.elements() {
            assert!(wreath_linear_value(0, &part(&[2]), e).unwrap().equals(&CycloNumber::one(2)));
        }
        // r=2: psi_1 at ((1), id) is -1.
        let e = WreathElement::from_parts(&[1], &[0], 2).unwrap();
        assert!(wreath_linear_value(1, &part(&[1]), &e)
            .unwrap()
            .equals(&CycloNumber::from_integer(2, -1)));
        // r=3: sign character times zeta_3^3 = -1.
        let e = WreathElement::from_parts(&[1, 2], &[1, 0], 3).unwrap();
        assert!(wreath_linear_value(1, &part(&[1, 1]), &e)
            .unwrap()
            .equals(&CycloNumber::from_integer(3, -1)));
        // Rank mismatch is refused.
        assert!(wreath_linear_value(0, &part(&[3]), &e).is_err());
    }

    #[test]
    fn trivial_index_gives_trivial_character() {
        for (r, n) in [(2u32, 2usize), (3, 2)] {
            let g = group(r, 1, n);
            let mut components = vec![part(&[n as u32])];
            components.extend(std::iter::repeat(Partition::empty()).take(r as usize - 1));
            let theta = Multipartition::new(components);
            let cf = chi_theta_class_function(&g, &theta).unwrap();
            assert_eq!(cf, ClassFunction::trivial(&g));
        }
    }

    #[test]
    fn class_sum_matches_literal_frobenius_sum() {
        for (r, n) in [(2u32, 2usize), (3, 2)] {
            let g = group(r, 1, n);
            for theta in multipartitions(r, n as u32) {
                for c in 0..g.num_classes() {
                    let rep = g.elem(g.class_rep(c as u32));
                    let fast = chi_theta_value(&g, &theta, rep).unwrap();
                    assert!(
                        fast.equals(&chi_theta_literal(&g, &theta, rep)),
                        "theta={theta:?} class={c} in G({r},1,{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn degrees_match_identity_evaluation() {
        let g = group(2, 1, 2);
        let theta = multi(&[&[1], &[1]]);
        assert_eq!(chi_theta_degree(&theta), 2);
        let id = WreathElement::identity(2, 2);
        assert!(chi_theta_value(&g, &theta, &id)
            .unwrap()
            .equals(&CycloNumber::from_integer(2, 2)));
        // Identity evaluation agrees with the product formula for every
        // index of G(3,1,2), and the Burnside identities hold.
        let g = group(3, 1, 2);
        let id = WreathElement::identity(2, 3);
        let mut square_sum = 0u128;
        for theta in multipartitions(3, 2) {
            let deg = chi_theta_degree(&theta);
            let at_id = chi_theta_value(&g, &theta, &id).unwrap();
            assert!(at_id.equals(&CycloNumber::from_integer(3, deg as i64)));
            square_sum += deg * deg;
        }
        assert_eq!(square_sum, 18);
        let degs: u128 =
            multipartitions(2, 2).iter().map(chi_theta_degree).sum();
        assert_eq!(degs, 6);
        let sq: u128 =
            multipartitions(2, 2).iter().map(|t| chi_theta_degree(t).pow(2)).sum();
        assert_eq!(sq, 8);
    }

    #[test]
    fn orthogonality() {
        for (r, n) in [(2u32, 2usize), (3, 2)] {
            let g = group(r, 1, n);
            let table = chi_theta_table(&g).unwrap();
            assert_eq!(table.len(), g.num_classes());
            // Rows: <chi, chi'> = delta, exactly rational.
            for (i, (_, a)) in table.iter().enumerate() {
                for (j, (_, b)) in table.iter().enumerate() {
                    let ip = a.inner_product(&g, b).unwrap().as_rational().unwrap();
                    let expected = if i == j { 1 } else { 0 };
                    assert_eq!(ip, rational(expected), "<{i},{j}> in G({r},1,{n})");
                }
            }
            // Columns: sum over irreducibles is 0 off the diagonal and the
            // centralizer order on it.
            for c in 0..g.num_classes() {
                for d in 0..g.num_classes() {
                    let mut acc = CycloNumber::zero(r);
                    for (_, chi) in &table {
                        acc = acc.add(&chi.value(c).mul(&chi.value(d).conjugate()));
                    }
                    let expected = if c == d {
                        rational((g.order() / g.classes()[c].len()) as i64)
                    } else {
                        rational(0)
                    };
                    assert_eq!(acc.as_rational().unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn gamma_values_and_order() {
        let key = GroupKey::new(4, 2, 2).unwrap();
        let t = WreathElement::from_parts(&[1, 0], &[0, 1], 4).unwrap();
        assert!(gamma_value(key, &t).unwrap().equals(&CycloNumber::from_integer(4, -1)));
        // Trivial on the subgroup itself.
        for key in [GroupKey::new(4, 2, 2).unwrap(), GroupKey::new(6, 3, 2).unwrap()] {
            let sub = GroupData::enumerate(key, &Budget::default()).unwrap();
            for e in sub.elements() {
                assert!(gamma_value(key, e).unwrap().equals(&CycloNumber::one(key.r)));
            }
            // Order p under tensoring.
            let ambient = GroupData::enumerate(key.ambient(), &Budget::default()).unwrap();
            let gamma = gamma_class_function(&ambient, key).unwrap();
            let trivial = ClassFunction::trivial(&ambient);
            let mut power = gamma.clone();
            let mut order = 1;
            while power != trivial {
                power = power.tensor(&gamma).unwrap();
                order += 1;
                assert!(order <= key.p, "gamma order exceeds p on {key:?}");
            }
            assert_eq!(order, key.p);
        }
    }

    #[test]
    fn shift_and_orbits() {
        let key22 = GroupKey::new(2, 2, 2).unwrap();
        let fixed = multi(&[&[1], &[1]]);
        assert_eq!(shift_theta(&fixed, key22), fixed);
        let moved = multi(&[&[2], &[]]);
        assert_eq!(shift_theta(&moved, key22), multi(&[&[], &[2]]));
        // p applications return to the start.
        let key63 = GroupKey::new(6, 3, 2).unwrap();
        for theta in multipartitions(6, 2) {
            let mut current = theta.clone();
            for _ in 0..key63.p {
                current = shift_theta(&current, key63);
            }
            assert_eq!(current, theta);
        }
        // Orbits: coprime case is always free.
        let key223 = GroupKey::new(2, 2, 3).unwrap();
        for theta in multipartitions(2, 3) {
            assert_eq!(orbit_and_stabilizer(&theta, key223).1, 1);
        }
        let (orbit, k) = orbit_and_stabilizer(&fixed, key22);
        assert_eq!((orbit.len(), k), (1, 2));
        let (orbit, k) = orbit_and_stabilizer(&moved, key22);
        assert_eq!((orbit.len(), k), (2, 1));
    }

    #[test]
    fn degree_lists() {
        assert_eq!(
            irr_degree_list(GroupKey::new(2, 1, 2).unwrap()).unwrap(),
            vec![1, 1, 1, 1, 2]
        );
        assert_eq!(
            irr_degree_list(GroupKey::new(2, 2, 2).unwrap()).unwrap(),
            vec![1, 1, 1, 1]
        );
        // The square-sum identity is enforced internally; sweep a small grid.
        for r in 1..=6u32 {
            for p in (1..=r).filter(|p| r % p == 0) {
                for n in 1..=3usize {
                    irr_degree_list(GroupKey::new(r, p, n).unwrap()).unwrap();
                }
            }
        }
    }

    #[test]
    fn symmetric_counts() {
        let check = symmetric_count_check(&group(2, 1, 2)).unwrap();
        assert_eq!(
            (check.symmetric_count, check.degree_sum, check.equal),
            (6, 6, true)
        );
        let check = symmetric_count_check(&group(4, 2, 2)).unwrap();
        assert!(check.equal);
        let check = symmetric_count_check(&group(3, 3, 3)).unwrap();
        assert!(!check.equal);
        assert!((check.symmetric_count as u128) < check.degree_sum);
    }

    #[test]
    fn tensor_identity_small_keys() {
        for (r, p, n) in [(2u32, 2u32, 2usize), (4, 2, 2)] {
            let key = GroupKey::new(r, p, n).unwrap();
            let ambient = GroupData::enumerate(key.ambient(), &Budget::default()).unwrap();
            let gamma = gamma_class_function(&ambient, key).unwrap();
            for theta in multipartitions(r, n as u32) {
                let lhs =
                    chi_theta_class_function(&ambient, &shift_theta(&theta, key)).unwrap();
                let rhs = gamma
                    .tensor(&chi_theta_class_function(&ambient, &theta).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "theta={theta:?} on {key:?}");
            }
        }
    }

    #[test]
    fn restriction_in_the_free_case() {
        let key = GroupKey::new(6, 3, 2).unwrap();
        let ambient = GroupData::enumerate(key.ambient(), &Budget::default()).unwrap();
        let sub = GroupData::enumerate(key, &Budget::default()).unwrap();
        let mut square_sum = rational(0);
        let mut count = 0;
        for theta in multipartitions(6, 2) {
            let (orbit, k) = orbit_and_stabilizer(&theta, key);
            assert_eq!(k, 1);
            if orbit.iter().min() != Some(&theta) {
                continue;
            }
            let chi = restricted_character(&ambient, &sub, &theta).unwrap();
            let norm = chi.inner_product(&sub, &chi).unwrap().as_rational().unwrap();
            assert_eq!(norm, rational(1), "restriction of {theta:?} is irreducible");
            let deg = chi.degree(&sub).as_rational().unwrap();
            square_sum += deg.clone() * deg;
            count += 1;
        }
        assert_eq!(square_sum, rational(sub.order() as i64));
        assert_eq!(count, sub.num_classes());
        // A split restriction refuses to produce values.
        let key22 = GroupKey::new(2, 2, 2).unwrap();
        let amb22 = GroupData::enumerate(key22.ambient(), &Budget::default()).unwrap();
        let sub22 = GroupData::enumerate(key22, &Budget::default()).unwrap();
        let split = multi(&[&[1], &[1]]);
        assert!(matches!(
            restricted_character(&amb22, &sub22, &split),
            Err(Error::UnsupportedKey(_))
        ));
    }

    #[test]
    fn twisted_indicators() {
        // The trivial character has indicator 1 for any involutive twist.
        let g = group(3, 1, 2);
        let tau = GroupMap::inverse_transpose(&g);
        let id_map = GroupMap::identity(&g);
        let trivial = ClassFunction::trivial(&g);
        assert_eq!(epsilon_tau(&g, &trivial, &tau).unwrap(), 1);
        assert_eq!(epsilon_tau(&g, &trivial, &id_map).unwrap(), 1);
        // Cyclic of order 3: a nontrivial linear character has classical
        // indicator 0.
        let z3 = group(3, 1, 1);
        let psi1 = chi_theta_class_function(&z3, &multi(&[&[], &[1], &[]])).unwrap();
        assert_eq!(
            epsilon_tau(&z3, &psi1, &GroupMap::identity(&z3)).unwrap(),
            0
        );
        // Against the transpose twist, every ambient irreducible of G(3,1,2)
        // has indicator 1.
        for (theta, chi) in chi_theta_table(&g).unwrap() {
            assert_eq!(epsilon_tau(&g, &chi, &tau).unwrap(), 1, "theta={theta:?}");
        }
        // Sanity: partitions_of is the outer enumeration behind the table.
        assert_eq!(partitions_of(2).len(), 2);
    }
}
