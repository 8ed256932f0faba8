//! Maps between finite spaces and their structural profile.

use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::space::FiniteSpace;
use serde::Serialize;

/// A total function between the carriers of two finite spaces, given as the
/// table `table[x] = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMap {
    pub domain: FiniteSpace,
    pub codomain: FiniteSpace,
    pub table: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapProfile {
    pub continuous: bool,
    pub open: bool,
    /// Every nonempty open set has an image with nonempty interior.
    pub almost_open: bool,
    pub surjective: bool,
}

impl PointMap {
    pub fn new(domain: FiniteSpace, codomain: FiniteSpace, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain.n() {
            return Err(Error::InvalidMap(format!(
                "table has {} entries for a domain of {} points",
                table.len(),
                domain.n()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= codomain.n()) {
            return Err(Error::InvalidMap(format!(
                "value {bad} escapes the codomain 0..{}",
                codomain.n()
            )));
        }
        Ok(PointMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn image_of(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.table[x]).collect()
    }

    pub fn preimage_of(&self, s: PointSet) -> PointSet {
        (0..self.domain.n())
            .filter(|&x| s.contains(self.table[x]))
            .collect()
    }

    pub fn is_continuous(&self) -> bool {
        self.codomain
            .opens()
            .iter()
            .all(|&v| self.domain.is_open(self.preimage_of(v)))
    }

    pub fn is_open_map(&self) -> bool {
        self.domain
            .opens()
            .iter()
            .all(|&u| self.codomain.is_open(self.image_of(u)))
    }

    pub fn is_almost_open(&self) -> bool {
        self.domain.opens().iter().all(|&u| {
            u.is_empty() || {
                let img = self.image_of(u);
                !self
                    .codomain
                    .interior(img)
                    .expect("image stays in codomain")
                    .is_empty()
            }
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.image_of(self.domain.carrier()) == self.codomain.carrier()
    }

    pub fn profile(&self) -> MapProfile {
        MapProfile {
            continuous: self.is_continuous(),
            open: self.is_open_map(),
            almost_open: self.is_almost_open(),
            surjective: self.is_surjective(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_map_profile() {
        // Constant map from discrete two-point space onto the open point of
        // the Sierpinski space: continuous, open, almost open, not onto.
        let m = PointMap::new(
            FiniteSpace::discrete(2),
            FiniteSpace::sierpinski(),
            vec![1, 1],
        )
        .unwrap();
        let p = m.profile();
        assert!(p.continuous && p.open && p.almost_open && !p.surjective);
    }

    #[test]
    fn swap_on_sierpinski_is_not_continuous() {
        let s = FiniteSpace::sierpinski();
        let m = PointMap::new(s.clone(), s, vec![1, 0]).unwrap();
        let p = m.profile();
        assert!(!p.continuous);
        assert!(!p.open);
        assert!(p.surjective);
    }

    #[test]
    fn almost_open_without_open() {
        // Collapse the Sierpinski square onto the Sierpinski space by first
        // coordinate: image of the open {(1,1)} is {1}, open; image of
        // {(0,1),(1,1)} is {0,1} whose interior is nonempty but which is the
        // whole space, so this one is open too. Use a map into the
        // three-point chain instead to get a strict case.
        let chain = FiniteSpace::validate(
            3,
            vec![
                PointSet::EMPTY,
                PointSet::singleton(2),
                [1, 2].into_iter().collect(),
                PointSet::full(3),
            ],
        )
        .unwrap();
        let m = PointMap::new(FiniteSpace::sierpinski(), chain, vec![1, 2]).unwrap();
        let p = m.profile();
        // {1} maps to {2} (open); X maps to {1,2} (open): open map here.
        assert!(p.open && p.almost_open && !p.surjective);

        let m2 = PointMap::new(
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete(2),
            vec![0, 1],
        )
        .unwrap();
        let p2 = m2.profile();
        // {0,1} maps onto {0,1}; {1} to {1}: open; preimage of {0} is {0},
        // not open, so not continuous.
        assert!(!p2.continuous && p2.open && p2.almost_open && p2.surjective);
    }

    #[test]
    fn validation_errors() {
        let s = FiniteSpace::sierpinski();
        assert!(PointMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(PointMap::new(s.clone(), s, vec![0, 2]).is_err());
    }
}
