use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::Perm;
use crate::error::{Error, Result};

/// Largest group whose elements [`PermGroup::elements`] will list.
pub const ELEMENT_LIST_BOUND: u64 = 1_000_000;

/// One level of a stabilizer chain.
#[derive(Clone)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn extend_orbit(&mut self) {
        let mut idx = 0;
        while idx < self.orbit.len() {
            let p = self.orbit[idx];
            for s in &self.gens {
                let q = s.image0(p);
                if self.transversal[q].is_none() {
                    let u = s.mul(self.transversal[p].as_ref().unwrap());
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            idx += 1;
        }
    }
}

/// A permutation group given by generators, with a stabilizer chain built by
/// the deterministic Schreier–Sims algorithm.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: Vec<Level>,
}

fn first_moved(g: &Perm) -> Option<usize> {
    (0..g.degree()).find(|&i| g.image0(i) != i)
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut group = Self {
            degree,
            generators,
            chain: Vec::new(),
        };
        group.schreier_sims();
        Ok(group)
    }

    /// Parses one generator per entry in cycle notation.
    pub fn from_cycle_strings<S: AsRef<str>>(degree: usize, gens: &[S]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Perm::parse(s.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, perms)
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
        }
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<u32> = (1..=degree as u32).collect();
            gens.push(Perm::from_cycles(degree, &[vec![1, 2]]).unwrap());
            if degree >= 3 {
                gens.push(Perm::from_cycles(degree, &[cycle]).unwrap());
            }
        }
        Self::new(degree, gens).unwrap()
    }

    fn schreier_sims(&mut self) {
        let n = self.degree;
        let mut strong: Vec<Perm> = Vec::new();
        for g in &self.generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut levels: Vec<Level> = Vec::new();
        for g in &strong {
            if levels.iter().all(|l| g.image0(l.base) == l.base) {
                levels.push(Level::new(first_moved(g).unwrap(), n));
            }
        }
        for g in &strong {
            for l in levels.iter_mut() {
                l.gens.push(g.clone());
                if g.image0(l.base) != l.base {
                    break;
                }
            }
        }
        for l in levels.iter_mut() {
            l.extend_orbit();
        }
        let mut tested: Vec<HashSet<(usize, usize)>> = vec![HashSet::new(); levels.len()];

        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match Self::find_failing_schreier(&levels, &mut tested[iu], iu) {
                Some((h, j)) => {
                    if j == levels.len() {
                        levels.push(Level::new(first_moved(&h).unwrap(), n));
                        tested.push(HashSet::new());
                    }
                    for l in levels.iter_mut().take(j + 1).skip(iu + 1) {
                        l.gens.push(h.clone());
                        l.extend_orbit();
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        self.chain = levels;
    }

    /// First Schreier generator of level `i` that does not sift through the
    /// deeper levels, with its residue and the level where sifting stopped.
    fn find_failing_schreier(
        levels: &[Level],
        tested: &mut HashSet<(usize, usize)>,
        i: usize,
    ) -> Option<(Perm, usize)> {
        let level = &levels[i];
        for &p in &level.orbit {
            let up = level.transversal[p].as_ref().unwrap();
            for (si, s) in level.gens.iter().enumerate() {
                if tested.contains(&(p, si)) {
                    continue;
                }
                let q = s.image0(p);
                let uq = level.transversal[q].as_ref().unwrap();
                let y = uq.inverse().mul(&s.mul(up));
                let (h, j) = sift(levels, y, i + 1);
                if j < levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
                tested.insert((p, si));
            }
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Base points of the stabilizer chain, 1-based.
    pub fn base(&self) -> Vec<u32> {
        self.chain.iter().map(|l| l.base as u32 + 1).collect()
    }

    /// Number of strong generators over all levels of the chain.
    pub fn strong_generator_count(&self) -> usize {
        let mut all: Vec<&Perm> = self.chain.iter().flat_map(|l| l.gens.iter()).collect();
        all.sort();
        all.dedup();
        all.len()
    }

    pub fn order(&self) -> BigUint {
        self.chain
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, x: &Perm) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, x.degree()));
        }
        let (h, j) = sift(&self.chain, x.clone(), 0);
        Ok(j == self.chain.len() && h.is_identity())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    fn check_point(&self, point: u32) -> Result<usize> {
        let p = point as usize;
        if p == 0 || p > self.degree {
            return Err(Error::PointOutOfRange {
                point: p,
                degree: self.degree,
            });
        }
        Ok(p - 1)
    }

    /// Orbit of a 1-based point, sorted.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        let start = self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[start] = true;
        let mut queue = vec![start];
        let mut idx = 0;
        while idx < queue.len() {
            let p = queue[idx];
            for g in &self.generators {
                let q = g.image0(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push(q);
                }
            }
            idx += 1;
        }
        let mut out: Vec<u32> = queue.into_iter().map(|p| p as u32 + 1).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `|G : Stab_G(point)|`, which equals the orbit length.
    pub fn stabilizer_index(&self, point: u32) -> Result<usize> {
        Ok(self.orbit(point)?.len())
    }

    /// All elements, as products of transversal elements down the chain.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let order = self.order();
        match order.to_u64() {
            Some(o) if o <= ELEMENT_LIST_BOUND => {}
            _ => {
                return Err(Error::OrderBound {
                    order: order.to_string(),
                    bound: ELEMENT_LIST_BOUND,
                })
            }
        }
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &p in &level.orbit {
                let u = level.transversal[p].as_ref().unwrap();
                for e in &out {
                    next.push(u.mul(e));
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// Strips `g` through `levels[from..]`; returns the residue and the index of
/// the level where the image of the base point fell outside the orbit
/// (`levels.len()` if every level was passed).
fn sift(levels: &[Level], mut g: Perm, from: usize) -> (Perm, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let b = g.image0(level.base);
        match &level.transversal[b] {
            Some(u) => g = u.inverse().mul(&g),
            None => return (g, j),
        }
    }
    (g, levels.len())
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, <", self.degree, self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        let mut f = 1u64;
        for n in 1..=8 {
            f *= n as u64;
            assert_eq!(PermGroup::symmetric(n).order_u64(), Some(f));
        }
    }

    #[test]
    fn cyclic_membership() {
        let g = PermGroup::from_cycle_strings(3, &["(1,2)"]).unwrap();
        assert_eq!(g.order_u64(), Some(2));
        assert!(g.contains(&Perm::parse("(1,2)", 3).unwrap()).unwrap());
        assert!(!g.contains(&Perm::parse("(1,3)", 3).unwrap()).unwrap());
        assert!(g.contains(&Perm::identity(4)).is_err());
    }

    #[test]
    fn elements_match_order() {
        let g = PermGroup::from_cycle_strings(6, &["(1,2,3)", "(1,2)(4,5,6)"]).unwrap();
        let elems = g.elements().unwrap();
        assert_eq!(elems.len() as u64, g.order_u64().unwrap());
        let set: HashSet<_> = elems.iter().collect();
        assert_eq!(set.len(), elems.len());
        assert!(elems.iter().all(|e| g.contains(e).unwrap()));
    }

    #[test]
    fn orbits_and_range() {
        let g = PermGroup::from_cycle_strings(5, &["(1,2)", "(2,3)"]).unwrap();
        assert_eq!(g.orbit(1).unwrap(), vec![1, 2, 3]);
        assert_eq!(g.stabilizer_index(5).unwrap(), 1);
        assert!(g.orbit(6).is_err());
        assert!(g.orbit(0).is_err());
        assert_eq!(PermGroup::trivial(4).stabilizer_index(2).unwrap(), 1);
    }
}
