//! Permutations of `{1, …, N}` and the groups they generate.
//!
//! Points are 1-based in every public signature. Composition is right to
//! left: `a.compose(&b)` applies `b` first, then `a`.

mod centralizer;
mod fingerprint;
mod group;
mod subgroups;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

pub use centralizer::{centralizer_of_pi, make_pi};
pub use fingerprint::{iso_fingerprint, Fingerprint, StructureTag};
pub use group::PermGroup;
pub use subgroups::{subgroup_conjugacy_classes, SubgroupClass, CLASS_ENUMERATION_BOUND};

/// A bijection of `{1, …, N}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            let i = x as usize;
            if i == 0 || i > n {
                return Err(Error::PointOutOfRange {
                    point: i,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidArgument(format!("point {i} repeated")));
            }
        }
        Ok(Self {
            images: images.iter().map(|&x| x - 1).collect(),
        })
    }

    pub(crate) fn from_images0(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| x as usize == i)
        });
        Self { images }
    }

    /// From disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidArgument(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
                let q = cycle[(k + 1) % cycle.len()];
                images[p - 1] = q - 1;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1,4,2,5,3)(6,9,7,10,8)`; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let err = |offset: usize, message: &str| Error::Parse {
            offset,
            message: message.to_string(),
        };
        let bytes = s.as_bytes();
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(err(i, "empty permutation"));
        }
        while i < bytes.len() {
            if bytes[i] != b'(' {
                return Err(err(i, "expected `(`"));
            }
            i += 1;
            let mut cycle = Vec::new();
            loop {
                skip_ws(&mut i);
                if i < bytes.len() && bytes[i] == b')' && cycle.is_empty() {
                    i += 1;
                    break;
                }
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(i, "expected a point"));
                }
                let p: u32 = s[start..i]
                    .parse()
                    .map_err(|_| err(start, "point out of range"))?;
                cycle.push(p);
                skip_ws(&mut i);
                match bytes.get(i) {
                    Some(b',') => i += 1,
                    Some(b')') => {
                        i += 1;
                        break;
                    }
                    _ => return Err(err(i, "expected `,` or `)`")),
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            skip_ws(&mut i);
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize - 1] + 1
    }

    /// 1-based image vector.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub(crate) fn images0(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, point: u32) -> bool {
        self.apply(point) == point
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv }
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.mul(other) == other.mul(self)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32 + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// Order as a machine integer; only for small groups' elements.
    pub(crate) fn order_u64(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]({self})", self.degree())
    }
}
