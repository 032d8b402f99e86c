use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use super::PermGroup;
use crate::error::{Error, Result};

/// Largest group order [`iso_fingerprint`] will enumerate.
pub const FINGERPRINT_BOUND: u64 = 10_000;

/// Coarse isomorphism invariants of a small group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u64,
    pub abelian: bool,
    pub exponent: u64,
    /// Element order to number of elements of that order.
    pub element_orders: BTreeMap<u64, u64>,
    pub center_order: u64,
}

/// Named isomorphism types recognised from a [`Fingerprint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureTag {
    Z2xZ2,
    Z5xZ5,
    S3xZ5,
    Undecided,
}

impl Fingerprint {
    /// Only fingerprints that pin down the type are named.
    pub fn tag(&self) -> StructureTag {
        match (self.order, self.abelian) {
            (4, true) if self.exponent == 2 => StructureTag::Z2xZ2,
            (25, true) if self.exponent == 5 => StructureTag::Z5xZ5,
            // a nonabelian group of order 30 with center of order 5 is S3 x C5
            (30, false) if self.center_order == 5 => StructureTag::S3xZ5,
            _ => StructureTag::Undecided,
        }
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureTag::Z2xZ2 => "Z/2xZ/2",
            StructureTag::Z5xZ5 => "Z/5xZ/5",
            StructureTag::S3xZ5 => "S3xZ/5",
            StructureTag::Undecided => "undecided",
        })
    }
}

impl FromStr for StructureTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "Z/2xZ/2" => Ok(StructureTag::Z2xZ2),
            "Z/5xZ/5" => Ok(StructureTag::Z5xZ5),
            "S3xZ/5" => Ok(StructureTag::S3xZ5),
            "undecided" => Ok(StructureTag::Undecided),
            _ => Err(Error::InvalidArgument(format!("unknown structure tag `{s}`"))),
        }
    }
}

pub fn iso_fingerprint(h: &PermGroup) -> Result<Fingerprint> {
    let order = h.order();
    let Some(order) = order.to_u64().filter(|&o| o <= FINGERPRINT_BOUND) else {
        return Err(Error::OrderBound {
            order: order.to_string(),
            bound: FINGERPRINT_BOUND,
        });
    };
    let elems = h.elements()?;
    let mut element_orders = BTreeMap::new();
    let mut exponent = 1u64;
    let mut center_order = 0;
    for e in &elems {
        let o = e.order_u64();
        *element_orders.entry(o).or_insert(0) += 1;
        exponent = num_integer::lcm(exponent, o);
        if h.generators().iter().all(|g| g.commutes_with(e)) {
            center_order += 1;
        }
    }
    Ok(Fingerprint {
        order,
        abelian: center_order == order,
        exponent,
        element_orders,
        center_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_and_cyclic_four() {
        let v4 = PermGroup::from_cycle_strings(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).unwrap();
        assert_eq!(iso_fingerprint(&v4).unwrap().tag(), StructureTag::Z2xZ2);
        let c4 = PermGroup::from_cycle_strings(4, &["(1,2,3,4)"]).unwrap();
        let fp = iso_fingerprint(&c4).unwrap();
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.tag(), StructureTag::Undecided);
    }

    #[test]
    fn s3_times_c5() {
        let g = PermGroup::from_cycle_strings(8, &["(1,2,3)", "(1,2)", "(4,5,6,7,8)"]).unwrap();
        let fp = iso_fingerprint(&g).unwrap();
        assert_eq!((fp.order, fp.center_order), (30, 5));
        assert_eq!(fp.tag(), StructureTag::S3xZ5);
        assert_eq!(fp.element_orders.values().sum::<u64>(), 30);
    }

    #[test]
    fn tags_round_trip() {
        for t in [
            StructureTag::Z2xZ2,
            StructureTag::Z5xZ5,
            StructureTag::S3xZ5,
            StructureTag::Undecided,
        ] {
            assert_eq!(t.to_string().parse::<StructureTag>().unwrap(), t);
        }
        assert!("Z/3".parse::<StructureTag>().is_err());
    }
}
