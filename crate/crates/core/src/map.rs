//! Total maps on an enumerated group, stored as dense index tables.
//!
//! A `GroupMap` backs every twist and automorphism in the crate: the
//! inverse-transpose involution, conjugations, the parametric maps on
//! wreath products, and the exceptional generator permutations. The table
//! representation makes composition and deduplication cheap, and lets a
//! full multiplicativity audit run as pure index arithmetic.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{GroupData, GroupKey};
use crate::element::WreathElement;

/// A map `G -> G` given by `table[i] = image of element i` in the canonical
/// element order of the group it was built on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    key: GroupKey,
    table: Vec<u32>,
}

impl GroupMap {
    pub fn identity(group: &GroupData) -> Self {
        GroupMap { key: group.key(), table: (0..group.order() as u32).collect() }
    }

    /// The twist `g -> bar(g) = (transpose of g)^{-1}`, entrywise complex
    /// conjugation in the matrix model. An involutive automorphism.
    pub fn inverse_transpose(group: &GroupData) -> Self {
        GroupMap {
            key: group.key(),
            table: (0..group.order() as u32).map(|i| group.bar_idx(i)).collect(),
        }
    }

    /// Builds from an explicit table; validates length only. Callers that
    /// need an automorphism must run `verify_automorphism`.
    pub fn from_table(key: GroupKey, table: Vec<u32>) -> Result<Self> {
        if table.len() as u128 != key.order() {
            return Err(Error::ParameterMismatch(format!(
                "table length {} != group order {}",
                table.len(),
                key.order()
            )));
        }
        Ok(GroupMap { key, table })
    }

    /// Builds by evaluating `f` on every element.
    pub fn from_fn(
        group: &GroupData,
        mut f: impl FnMut(&WreathElement) -> WreathElement,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(group.order());
        for e in group.elements() {
            table.push(group.idx(&f(e))?);
        }
        Ok(GroupMap { key: group.key(), table })
    }

    /// Extends generator images to the whole group along the Cayley graph.
    ///
    /// Every edge `(w, w * gen)` is checked for consistency, which makes the
    /// extension multiplicative by induction on word length; bijectivity and
    /// completeness are verified afterwards. `images` pairs generator
    /// indices with their image indices.
    pub fn extend_from_generators(group: &GroupData, images: &[(u32, u32)]) -> Result<Self> {
        let m = group.order();
        let mut table = vec![u32::MAX; m];
        let id = group.identity_idx();
        table[id as usize] = id;
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for &(gen, image) in images {
                let next = group.mult(w, gen);
                let next_image = group.mult(table[w as usize], image);
                let slot = &mut table[next as usize];
                if *slot == u32::MAX {
                    *slot = next_image;
                    queue.push_back(next);
                } else if *slot != next_image {
                    return Err(Error::NotAnAutomorphism(format!(
                        "inconsistent images at element {:?}",
                        group.elem(next)
                    )));
                }
            }
        }
        if table.contains(&u32::MAX) {
            return Err(Error::NotAnAutomorphism(
                "the given generators do not generate the group".into(),
            ));
        }
        // Closure of the discovered edges covered each (element, generator)
        // pair exactly once; re-walk them all to also catch disagreements on
        // non-tree edges, then check bijectivity.
        for w in 0..m as u32 {
            for &(gen, image) in images {
                if table[group.mult(w, gen) as usize]
                    != group.mult(table[w as usize], image)
                {
                    return Err(Error::NotAnAutomorphism(format!(
                        "edge consistency fails at {:?}",
                        group.elem(w)
                    )));
                }
            }
        }
        let map = GroupMap { key: group.key(), table };
        map.check_bijective(group)?;
        Ok(map)
    }

    pub fn key(&self) -> GroupKey {
        self.key
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply_idx(&self, i: u32) -> u32 {
        self.table[i as usize]
    }

    pub fn apply(&self, group: &GroupData, e: &WreathElement) -> Result<WreathElement> {
        Ok(group.elem(self.apply_idx(group.idx(e)?)).clone())
    }

    /// `self` after `other`: `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &GroupMap) -> Result<GroupMap> {
        if self.key != other.key {
            return Err(Error::ParameterMismatch(format!(
                "composing maps over {:?} and {:?}",
                self.key, other.key
            )));
        }
        Ok(GroupMap {
            key: self.key,
            table: other.table.iter().map(|&i| self.table[i as usize]).collect(),
        })
    }

    /// Inverse of a bijective table.
    pub fn inverse_map(&self) -> Result<GroupMap> {
        let mut table = vec![u32::MAX; self.table.len()];
        for (i, &im) in self.table.iter().enumerate() {
            if table[im as usize] != u32::MAX {
                return Err(Error::NotAnAutomorphism("table is not a bijection".into()));
            }
            table[im as usize] = i as u32;
        }
        Ok(GroupMap { key: self.key, table })
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    pub fn is_involution(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &im)| self.table[im as usize] == i as u32)
    }

    /// Order under composition; errors if not a bijection.
    pub fn order(&self) -> Result<u64> {
        self.inverse_map()?; // bijectivity
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self)?;
            k += 1;
        }
        Ok(k)
    }

    fn check_bijective(&self, group: &GroupData) -> Result<()> {
        debug_assert_eq!(group.key(), self.key);
        let mut seen = vec![false; self.table.len()];
        for &im in &self.table {
            if seen[im as usize] {
                return Err(Error::NotAnAutomorphism("table is not a bijection".into()));
            }
            seen[im as usize] = true;
        }
        Ok(())
    }

    /// Full automorphism audit: bijectivity plus `f(ab) = f(a) f(b)` over
    /// every pair. Quadratic in the group order; intended for verification
    /// passes, not construction hot paths.
    pub fn verify_automorphism(&self, group: &GroupData) -> Result<()> {
        if group.key() != self.key {
            return Err(Error::ParameterMismatch("map and group key differ".into()));
        }
        self.check_bijective(group)?;
        let m = group.order() as u32;
        for a in 0..m {
            for b in 0..m {
                if self.table[group.mult(a, b) as usize]
                    != group.mult(self.table[a as usize], self.table[b as usize])
                {
                    return Err(Error::NotAnAutomorphism(format!(
                        "multiplicativity fails at ({:?}, {:?})",
                        group.elem(a),
                        group.elem(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupMap({:?}, {} entries)", self.key, self.table.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generating_set, Budget, StandardGenerators};

    fn group(r: u32, p: u32, n: usize) -> GroupData {
        GroupData::enumerate(GroupKey::new(r, p, n).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn inverse_transpose_is_involutive_automorphism() {
        for (r, p, n) in [(3, 1, 2), (4, 2, 2), (2, 1, 3), (6, 3, 2)] {
            let g = group(r, p, n);
            let tau = GroupMap::inverse_transpose(&g);
            tau.verify_automorphism(&g).unwrap();
            assert!(tau.is_involution(), "twist on G({r},{p},{n})");
            // r <= 2 collapses the twist to the identity.
            assert_eq!(tau.is_identity(), r <= 2);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let g = group(3, 1, 2);
        let tau = GroupMap::inverse_transpose(&g);
        assert!(tau.compose(&tau).unwrap().is_identity());
        assert!(tau.inverse_map().unwrap() == tau);
        assert_eq!(tau.order().unwrap(), 2);
        let id = GroupMap::identity(&g);
        assert!(tau.compose(&id).unwrap() == tau);
        assert!(id.compose(&tau).unwrap() == tau);
    }

    #[test]
    fn extension_recovers_identity_and_conjugation() {
        let g = group(4, 2, 2);
        let gens: Vec<u32> =
            generating_set(g.key()).iter().map(|e| g.idx(e).unwrap()).collect();
        let trivial: Vec<(u32, u32)> = gens.iter().map(|&i| (i, i)).collect();
        assert!(GroupMap::extend_from_generators(&g, &trivial).unwrap().is_identity());
        // Conjugation by a fixed element, specified only on generators.
        let h = g.idx(&StandardGenerators::new(4, 2).t.pow(2)).unwrap();
        let conj: Vec<(u32, u32)> = gens.iter().map(|&i| (i, g.conj(h, i))).collect();
        let map = GroupMap::extend_from_generators(&g, &conj).unwrap();
        map.verify_automorphism(&g).unwrap();
        for i in 0..g.order() as u32 {
            assert_eq!(map.apply_idx(i), g.conj(h, i));
        }
    }

    #[test]
    fn extension_rejects_bad_images() {
        // G(3,1,2): sending t (order 3) to s_1 (order 2) is inconsistent.
        let g = group(3, 1, 2);
        let gens = StandardGenerators::new(3, 2);
        let s1 = g.idx(gens.s_i(1)).unwrap();
        let t = g.idx(&gens.t).unwrap();
        let err = GroupMap::extend_from_generators(&g, &[(s1, s1), (t, s1)]);
        assert!(matches!(err, Err(Error::NotAnAutomorphism(_))));
        // G(2,1,2): s_1 -> s_1, t -> s_1 is a homomorphism onto a proper
        // subgroup; the bijectivity check must refuse it.
        let g = group(2, 1, 2);
        let gens = StandardGenerators::new(2, 2);
        let s1 = g.idx(gens.s_i(1)).unwrap();
        let t = g.idx(&gens.t).unwrap();
        let err = GroupMap::extend_from_generators(&g, &[(s1, s1), (t, s1)]);
        assert!(matches!(err, Err(Error::NotAnAutomorphism(_))));
    }
}
