//! Binary relations and the lower/upper approximations they induce.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::set::{bits, write_mask, ElementId, GroundSet, Subset};

/// A binary relation on a ground set, stored as successor neighborhoods.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    ground: GroundSet,
    // successors[x] = RN(x) = {y : x R y}
    successors: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProperties {
    pub serial: bool,
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

impl BinaryRelation {
    pub fn empty(ground: &GroundSet) -> Self {
        Self {
            ground: ground.clone(),
            successors: vec![0; ground.len()],
        }
    }

    pub fn identity(ground: &GroundSet) -> Self {
        Self {
            ground: ground.clone(),
            successors: (0..ground.len()).map(|i| 1 << i).collect(),
        }
    }

    pub fn from_pairs<I>(ground: &GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let mut r = Self::empty(ground);
        for (x, y) in pairs {
            ground.check_element(x)?;
            ground.check_element(y)?;
            r.successors[x] |= 1 << y;
        }
        Ok(r)
    }

    pub fn from_label_pairs<S: AsRef<str>>(ground: &GroundSet, pairs: &[(S, S)]) -> Result<Self> {
        let mut idx = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            idx.push((ground.index_of(x.as_ref())?, ground.index_of(y.as_ref())?));
        }
        Self::from_pairs(ground, idx)
    }

    pub(crate) fn from_successor_masks(ground: &GroundSet, successors: Vec<u32>) -> Self {
        debug_assert_eq!(successors.len(), ground.len());
        Self {
            ground: ground.clone(),
            successors,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn contains(&self, x: ElementId, y: ElementId) -> bool {
        x < self.successors.len() && y < 32 && self.successors[x] & (1 << y) != 0
    }

    /// Ordered pairs, sorted by first then second element.
    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(x, &s)| bits(s).map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.successors
            .iter()
            .map(|s| s.count_ones() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.successors.iter().all(|&s| s == 0)
    }

    pub fn successor_neighborhood(&self, x: ElementId) -> Result<Subset> {
        self.ground.check_element(x)?;
        Ok(self.ground.subset_unchecked(self.successors[x]))
    }

    pub(crate) fn successor_mask(&self, x: ElementId) -> u32 {
        self.successors[x]
    }

    /// `{x : RN(x) is inside X}`.
    pub fn lower_approx(&self, x: &Subset) -> Result<Subset> {
        self.ground.check_same(x.ground())?;
        Ok(self.ground.subset_unchecked(self.lower_mask(x.mask())))
    }

    /// `{x : RN(x) meets X}`.
    pub fn upper_approx(&self, x: &Subset) -> Result<Subset> {
        self.ground.check_same(x.ground())?;
        Ok(self.ground.subset_unchecked(self.upper_mask(x.mask())))
    }

    pub(crate) fn lower_mask(&self, x: u32) -> u32 {
        self.successors
            .iter()
            .enumerate()
            .filter(|(_, &s)| s & !x == 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub(crate) fn upper_mask(&self, x: u32) -> u32 {
        self.successors
            .iter()
            .enumerate()
            .filter(|(_, &s)| s & x != 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_serial(&self) -> bool {
        self.successors.iter().all(|&s| s != 0)
    }

    pub fn is_reflexive(&self) -> bool {
        self.successors
            .iter()
            .enumerate()
            .all(|(i, &s)| s & (1 << i) != 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        // x R y and y R z  =>  x R z, i.e. RN(y) within RN(x) whenever x R y.
        self.pairs()
            .all(|(x, y)| self.successors[y] & !self.successors[x] == 0)
    }

    pub fn properties(&self) -> RelationProperties {
        RelationProperties {
            serial: self.is_serial(),
            reflexive: self.is_reflexive(),
            symmetric: self.is_symmetric(),
            transitive: self.is_transitive(),
        }
    }
}

impl fmt::Display for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, y)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "({},{})",
                self.ground.labels()[x],
                self.ground.labels()[y]
            )?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BinaryRelation ")?;
        let mut s = String::new();
        for (i, &n) in self.successors.iter().enumerate() {
            s.push_str(&self.ground.labels()[i]);
            s.push_str("->");
            write_mask(&mut s, &self.ground, n)?;
            s.push(' ');
        }
        f.write_str(s.trim_end())
    }
}
