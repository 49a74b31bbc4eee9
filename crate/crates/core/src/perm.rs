//! Permutations in one-line notation, 0-based internally.
//!
//! The statistics `inversions`, `pairs`, and `fixed_points` drive the sign
//! computations of the involution models, so they are kept as explicit sets
//! rather than cardinalities.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its one-line image vector:
/// `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Identity permutation on n points.
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds from a one-line image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            let im = im as usize;
            if im >= n || seen[im] {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation of 0..{n}: {images:?}"
                )));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    /// Transposition swapping `i` and `j` (0-based) on n points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// Composition applying `other` first: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Perm { images }
    }

    /// Inversion set `{(i, j) : i < j, images[i] > images[j]}`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Coxeter length: number of inversions.
    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// Sign of the permutation: `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 2-cycle support: `{(i, j) : i < j, images[i] = j, images[j] = i}`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut out = Vec::new();
        for i in 0..n {
            let j = self.images[i] as usize;
            if i < j && self.images[j] as usize == i {
                out.push((i, j));
            }
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] as usize == i).collect()
    }

    /// Cycle type as a weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// All permutations of n points in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut current: Vec<u32> = (0..n as u32).collect();
        let mut out = vec![Perm { images: current.clone() }];
        // Classic next-permutation loop keeps the output lexicographic.
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
            out.push(Perm { images: current.clone() });
        }
        out
    }
}

impl fmt::Debug for Perm {
    /// One-based one-line notation, e.g. `[2,1,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, im) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", im + 1)?;
        }
        write!(f, "]")
    }
}
