use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// Largest ambient order accepted by [`subgroup_conjugacy_classes`].
pub const CLASS_ENUMERATION_BOUND: u64 = 1000;

/// One conjugacy class of subgroups of an ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The conjugate whose element list is lexicographically least.
    pub representative: PermGroup,
    /// Elements of the representative in ascending order.
    pub elements: Vec<Perm>,
    /// Sorted positions of the representative's elements in the ambient
    /// element list; least over all conjugates, so equal keys mean equal classes.
    pub canonical_key: Vec<u32>,
    pub order: usize,
    /// Number of distinct conjugates.
    pub class_size: usize,
    pub normalizer_order: usize,
}

type Bits = Vec<u64>;

/// An explicitly enumerated small group with its multiplication table.
pub(crate) struct FiniteGroup {
    pub elems: Vec<Perm>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl FiniteGroup {
    /// `elems` must be closed under multiplication.
    pub fn new(mut elems: Vec<Perm>) -> Self {
        elems.sort();
        let m = elems.len();
        let index: HashMap<&[u32], u16> = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e.images0(), i as u16))
            .collect();
        let mut mul = vec![0u16; m * m];
        let mut buf = vec![0u32; elems.first().map_or(0, |e| e.degree())];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                for (slot, &x) in buf.iter_mut().zip(eb.images0()) {
                    *slot = ea.images0()[x as usize];
                }
                mul[a * m + b] = index[buf.as_slice()];
            }
        }
        let inv = (0..m)
            .map(|a| (0..m).find(|&b| mul[a * m + b] == 0).unwrap() as u16)
            .collect();
        Self { elems, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, g: usize, k: usize) -> usize {
        self.mul(self.mul(g, k), self.inv(g))
    }

    fn empty_bits(&self) -> Bits {
        vec![0; self.elems.len().div_ceil(64)]
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut bits = self.empty_bits();
        set(&mut bits, 0);
        let mut list = vec![0usize];
        let mut idx = 0;
        while idx < list.len() {
            let e = list[idx];
            for &s in gens {
                let p = self.mul(e, s);
                if !get(&bits, p) {
                    set(&mut bits, p);
                    list.push(p);
                }
            }
            idx += 1;
        }
        list.sort_unstable();
        list
    }
}

fn get(bits: &Bits, i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

struct ClassData {
    key: Vec<usize>,
    gens: Vec<usize>,
    size: usize,
}

struct Search<'a> {
    g: &'a FiniteGroup,
    lookup: HashMap<Bits, usize>,
    classes: Vec<ClassData>,
}

impl Search<'_> {
    fn to_bits(&self, elems: &[usize]) -> Bits {
        let mut b = self.g.empty_bits();
        for &e in elems {
            set(&mut b, e);
        }
        b
    }

    /// Records the class of `⟨gens⟩` (with element list `elems`) if new.
    fn register(&mut self, elems: &[usize], gens: &[usize]) {
        if self.lookup.contains_key(&self.to_bits(elems)) {
            return;
        }
        let id = self.classes.len();
        let mut best: Option<(Vec<usize>, usize)> = None;
        let mut size = 0;
        for x in 0..self.g.order() {
            let mut conj: Vec<usize> = elems.iter().map(|&k| self.g.conj(x, k)).collect();
            conj.sort_unstable();
            let bits = self.to_bits(&conj);
            if self.lookup.insert(bits, id).is_none() {
                size += 1;
                if best.as_ref().is_none_or(|(b, _)| conj < *b) {
                    best = Some((conj, x));
                }
            }
        }
        let (key, x) = best.unwrap();
        let gens = gens.iter().map(|&s| self.g.conj(x, s)).collect();
        self.classes.push(ClassData { key, gens, size });
    }
}

/// All conjugacy classes of subgroups of `group`, sorted by order then key.
///
/// Seeds with the cyclic subgroups and extends each class representative `H`
/// by one element from every right coset `Hx ≠ H`, registering `⟨H, x⟩`.
/// Every subgroup arises this way from one of its maximal subgroups.
pub fn subgroup_conjugacy_classes(group: &PermGroup) -> Result<Vec<SubgroupClass>> {
    let order = group.order();
    if order.to_u64().is_none_or(|o| o > CLASS_ENUMERATION_BOUND) {
        return Err(Error::OrderBound {
            order: order.to_string(),
            bound: CLASS_ENUMERATION_BOUND,
        });
    }
    let g = FiniteGroup::new(group.elements()?);
    let m = g.order();
    let mut search = Search {
        g: &g,
        lookup: HashMap::new(),
        classes: Vec::new(),
    };
    search.register(&[0], &[]);
    for x in 1..m {
        let elems = g.closure(&[x]);
        search.register(&elems, &[x]);
    }
    let mut next = 0;
    while next < search.classes.len() {
        let h_gens = search.classes[next].gens.clone();
        let h = search.classes[next].key.clone();
        let mut covered = g.empty_bits();
        for &e in &h {
            set(&mut covered, e);
        }
        for x in 0..m {
            if get(&covered, x) {
                continue;
            }
            for &e in &h {
                set(&mut covered, g.mul(e, x));
            }
            let mut gens = h_gens.clone();
            gens.push(x);
            let elems = g.closure(&gens);
            search.register(&elems, &gens);
        }
        next += 1;
    }

    let mut out: Vec<SubgroupClass> = search
        .classes
        .into_iter()
        .map(|c| {
            let gens: Vec<Perm> = c.gens.iter().map(|&i| g.elems[i].clone()).collect();
            let representative = PermGroup::new(group.degree(), gens).unwrap();
            SubgroupClass {
                representative,
                elements: c.key.iter().map(|&i| g.elems[i].clone()).collect(),
                canonical_key: c.key.iter().map(|&i| i as u32).collect(),
                order: c.key.len(),
                class_size: c.size,
                normalizer_order: m / c.size,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.order, &a.canonical_key).cmp(&(b.order, &b.canonical_key)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::centralizer_of_pi;

    #[test]
    fn symmetric_group_class_counts() {
        assert_eq!(subgroup_conjugacy_classes(&PermGroup::symmetric(2)).unwrap().len(), 2);
        assert_eq!(subgroup_conjugacy_classes(&PermGroup::symmetric(3)).unwrap().len(), 4);
        assert_eq!(subgroup_conjugacy_classes(&PermGroup::symmetric(4)).unwrap().len(), 11);
    }

    #[test]
    fn classes_are_sorted_and_consistent() {
        let w = centralizer_of_pi(3, 2);
        let classes = subgroup_conjugacy_classes(&w).unwrap();
        assert_eq!(classes.len(), 9);
        assert_eq!(classes[0].order, 1);
        assert_eq!(classes.last().unwrap().order, 18);
        for c in &classes {
            assert_eq!(c.representative.order_u64(), Some(c.order as u64));
            assert_eq!(c.class_size * c.normalizer_order, 18);
        }
    }

    #[test]
    fn rejects_large_groups() {
        let err = subgroup_conjugacy_classes(&PermGroup::symmetric(7)).unwrap_err();
        assert!(err.to_string().contains("extended mode required"));
    }
}
