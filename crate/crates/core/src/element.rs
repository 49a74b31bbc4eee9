//! Elements of the wreath product `Z_r wr S_n` in (phase vector, permutation)
//! form, together with the involutions `bar` and `transpose` used throughout
//! the involution-model computations.
//!
//! Conventions, fixed once and used everywhere:
//! * a permutation acts on a phase vector by `(pi . x)[i] = x[pi^{-1}(i)]`;
//! * multiplication is `(x, pi)(y, sigma) = (sigma^{-1} . x + y, pi sigma)`,
//!   which matches the monomial-matrix model placing `zeta^{x_i}` in row
//!   `pi(i)`, column `i`;
//! * phases are residues in `[0, r)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// An element of `(Z_r)^n`: residues mod `r`, componentwise addition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    entries: Vec<u32>,
    modulus: u32,
}

impl PhaseVector {
    pub fn zero(n: usize, modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        PhaseVector { entries: vec![0; n], modulus }
    }

    /// Reduces arbitrary integer entries mod `modulus`.
    pub fn from_ints(entries: &[i64], modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let m = modulus as i64;
        PhaseVector {
            entries: entries.iter().map(|&e| (e.rem_euclid(m)) as u32).collect(),
            modulus,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn add(&self, other: &PhaseVector) -> Result<PhaseVector> {
        self.check_compatible(other)?;
        Ok(PhaseVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + b) % self.modulus)
                .collect(),
            modulus: self.modulus,
        })
    }

    pub fn negate(&self) -> PhaseVector {
        PhaseVector {
            entries: self.entries.iter().map(|&a| (self.modulus - a) % self.modulus).collect(),
            modulus: self.modulus,
        }
    }

    pub fn scale(&self, k: i64) -> PhaseVector {
        let m = self.modulus as i64;
        let k = k.rem_euclid(m);
        PhaseVector {
            entries: self.entries.iter().map(|&a| ((a as i64 * k) % m) as u32).collect(),
            modulus: self.modulus,
        }
    }

    /// The permutation action `(pi . x)[i] = x[pi^{-1}(i)]`.
    pub fn permute(&self, pi: &Perm) -> PhaseVector {
        debug_assert_eq!(pi.degree(), self.len());
        let mut entries = vec![0u32; self.len()];
        for i in 0..self.len() {
            entries[pi.apply(i)] = self.entries[i];
        }
        PhaseVector { entries, modulus: self.modulus }
    }

    /// Sum of entries mod `modulus`.
    pub fn total(&self) -> u32 {
        let m = self.modulus as u64;
        (self.entries.iter().map(|&a| a as u64).sum::<u64>() % m) as u32
    }

    fn check_compatible(&self, other: &PhaseVector) -> Result<()> {
        if self.modulus != other.modulus || self.len() != other.len() {
            return Err(Error::ParameterMismatch(format!(
                "phase vectors differ: len {} mod {} vs len {} mod {}",
                self.len(),
                self.modulus,
                other.len(),
                other.modulus
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// A wreath product element `(x, pi)` with `x` in `(Z_r)^n`, `pi` in `S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub phases: PhaseVector,
    pub perm: Perm,
}

impl WreathElement {
    pub fn identity(n: usize, r: u32) -> Self {
        WreathElement { phases: PhaseVector::zero(n, r), perm: Perm::identity(n) }
    }

    pub fn new(phases: PhaseVector, perm: Perm) -> Result<Self> {
        if phases.len() != perm.degree() {
            return Err(Error::ParameterMismatch(format!(
                "phase length {} != permutation degree {}",
                phases.len(),
                perm.degree()
            )));
        }
        Ok(WreathElement { phases, perm })
    }

    /// Convenience constructor from raw integers, reducing phases mod `r`.
    pub fn from_parts(phases: &[i64], images: &[u32], r: u32) -> Result<Self> {
        WreathElement::new(PhaseVector::from_ints(phases, r), Perm::from_images(images.to_vec())?)
    }

    pub fn rank(&self) -> usize {
        self.perm.degree()
    }

    pub fn modulus(&self) -> u32 {
        self.phases.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.phases.entries().iter().all(|&a| a == 0)
    }

    /// `(x, pi)(y, sigma) = (sigma^{-1} . x + y, pi sigma)`.
    pub fn multiply(&self, other: &WreathElement) -> Result<WreathElement> {
        if self.rank() != other.rank() {
            return Err(Error::ParameterMismatch(format!(
                "rank {} vs {}",
                self.rank(),
                other.rank()
            )));
        }
        let moved = self.phases.permute(&other.perm.inverse());
        Ok(WreathElement {
            phases: moved.add(&other.phases)?,
            perm: self.perm.compose(&other.perm),
        })
    }

    /// `(x, pi)^{-1} = (-(pi . x), pi^{-1})`.
    pub fn inverse(&self) -> WreathElement {
        WreathElement {
            phases: self.phases.permute(&self.perm).negate(),
            perm: self.perm.inverse(),
        }
    }

    /// Entrywise phase negation `(x, pi) -> (-x, pi)`; matrix-wise, complex
    /// conjugation of every entry.
    pub fn bar(&self) -> WreathElement {
        WreathElement { phases: self.phases.negate(), perm: self.perm.clone() }
    }

    /// Matrix transpose `(x, pi) -> (pi . x, pi^{-1})`; equals `bar(inverse)`.
    pub fn transpose(&self) -> WreathElement {
        WreathElement { phases: self.phases.permute(&self.perm), perm: self.perm.inverse() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Phase sum `Delta(x, pi) = sum_i x_i mod r`; a homomorphism to `Z_r`.
    pub fn delta(&self) -> u32 {
        self.phases.total()
    }

    /// The i-th phase `x_i`, i.e. the exponent of the matrix entry in
    /// column `i`.
    pub fn phase(&self, i: usize) -> u32 {
        self.phases.entry(i)
    }

    pub fn pow(&self, k: i64) -> WreathElement {
        let n = self.rank();
        let r = self.modulus();
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = WreathElement::identity(n, r);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base).unwrap();
            }
            base = base.multiply(&base).unwrap();
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut g = self.clone();
        let mut k = 1u64;
        while !g.is_identity() {
            g = g.multiply(self).unwrap();
            k += 1;
        }
        k
    }

    pub fn conjugate_by(&self, g: &WreathElement) -> WreathElement {
        g.multiply(self).unwrap().multiply(&g.inverse()).unwrap()
    }

    /// Nonzero matrix entries as `(row, col, phase)` with rows/cols 0-based:
    /// `zeta^{x_i}` sits at `(pi(i), i)`.
    pub fn matrix_entries(&self) -> Vec<(usize, usize, u32)> {
        (0..self.rank()).map(|i| (self.perm.apply(i), i, self.phases.entry(i))).collect()
    }
}

impl PartialOrd for WreathElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WreathElement {
    /// Lexicographic on (permutation images, phase entries); this is the
    /// canonical element order used for representatives and enumeration.
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm
            .images()
            .cmp(other.perm.images())
            .then_with(|| self.phases.entries().cmp(other.phases.entries()))
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.phases, self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(phases: &[i64], images: &[u32], r: u32) -> WreathElement {
        WreathElement::from_parts(phases, images, r).unwrap()
    }

    /// Multiplies two elements through their monomial matrices; independent
    /// oracle for the algebraic product formula.
    fn matrix_multiply(a: &WreathElement, b: &WreathElement) -> WreathElement {
        let n = a.rank();
        let r = a.modulus();
        let mut entries = vec![None; n];
        for (ra, ca, pa) in a.matrix_entries() {
            for (rb, cb, pb) in b.matrix_entries() {
                if ca == rb {
                    assert!(entries[cb].is_none());
                    entries[cb] = Some((ra, (pa + pb) % r));
                }
            }
        }
        let mut images = vec![0u32; n];
        let mut phases = vec![0i64; n];
        for (col, e) in entries.iter().enumerate() {
            let (row, p) = e.unwrap();
            images[col] = row as u32;
            phases[col] = p as i64;
        }
        elem(&phases, &images, r)
    }

    #[test]
    fn product_matches_matrix_model() {
        // r = 3, n = 2: t * s_1 = ((0,1), (1 2)).
        let t = elem(&[1, 0], &[0, 1], 3);
        let s1 = elem(&[0, 0], &[1, 0], 3);
        let prod = t.multiply(&s1).unwrap();
        assert_eq!(prod, elem(&[0, 1], &[1, 0], 3));
        assert_eq!(prod, matrix_multiply(&t, &s1));
    }

    #[test]
    fn product_matches_matrix_model_exhaustively() {
        // All pairs in Z_3 wr S_2 (36 elements, 1296 pairs).
        let mut all = Vec::new();
        for pi in Perm::all(2) {
            for a in 0..3i64 {
                for b in 0..3i64 {
                    all.push(elem(&[a, b], pi.images(), 3));
                }
            }
        }
        for x in &all {
            for y in &all {
                assert_eq!(x.multiply(y).unwrap(), matrix_multiply(x, y));
            }
        }
    }

    #[test]
    fn transpose_and_bar() {
        // g = ((1,0), (1 2)) over r = 3.
        let g = elem(&[1, 0], &[1, 0], 3);
        assert_eq!(g.transpose(), elem(&[0, 1], &[1, 0], 3));
        assert_eq!(g.bar(), elem(&[2, 0], &[1, 0], 3));
        // transpose = bar . inverse, and both are involutions.
        assert_eq!(g.transpose(), g.inverse().bar());
        assert_eq!(g.transpose().transpose(), g);
        assert_eq!(g.bar().bar(), g);
    }

    #[test]
    fn inverse_and_delta_laws() {
        let gens = [
            elem(&[1, 0, 2], &[2, 0, 1], 4),
            elem(&[3, 3, 1], &[1, 0, 2], 4),
            elem(&[0, 2, 1], &[0, 2, 1], 4),
        ];
        for g in &gens {
            assert!(g.multiply(&g.inverse()).unwrap().is_identity());
            assert_eq!(g.bar().delta(), (4 - g.delta()) % 4);
            assert_eq!(g.transpose().delta(), g.delta());
            for h in &gens {
                let gh = g.multiply(h).unwrap();
                assert_eq!(gh.delta(), (g.delta() + h.delta()) % 4);
                // (gh)^T = h^T g^T.
                assert_eq!(gh.transpose(), h.transpose().multiply(&g.transpose()).unwrap());
            }
        }
    }

    #[test]
    fn canonical_order_is_perm_major() {
        let a = elem(&[2, 2], &[0, 1], 3);
        let b = elem(&[0, 0], &[1, 0], 3);
        assert!(a < b);
    }

    #[test]
    fn pow_and_order() {
        let t = elem(&[1, 0], &[0, 1], 6);
        assert_eq!(t.order(), 6);
        assert_eq!(t.pow(7), t);
        assert_eq!(t.pow(-1), t.inverse());
        assert!(t.pow(0).is_identity());
    }
}
