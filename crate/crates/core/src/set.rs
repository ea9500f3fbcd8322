//! Ground sets, subsets as bit masks, and families of subsets.
//!
//! Every subset is a mask over a [`GroundSet`] of at most
//! [`ENUMERATION_BOUND`] elements. Families are kept in canonical order:
//! by cardinality first, then by the mask read as an unsigned integer.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest ground set accepted anywhere in the crate.
pub const ENUMERATION_BOUND: usize = 24;

/// Index of an element in its ground set.
pub type ElementId = usize;

/// Iterates the set bits of `mask` from least to most significant.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = ElementId> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Sort key for the canonical order.
#[inline]
pub(crate) fn canonical_key(mask: u32) -> (u32, u32) {
    (mask.count_ones(), mask)
}

/// All masks over `n` elements in canonical order.
pub fn canonical_masks(n: usize) -> impl Iterator<Item = u32> {
    let full = full_mask(n);
    (0..=n as u32).flat_map(move |k| {
        let mut next = if k == 0 {
            Some(0u32)
        } else {
            Some(full_mask(k as usize))
        };
        std::iter::from_fn(move || {
            let cur = next?;
            if cur & !full != 0 {
                return None;
            }
            next = if cur == 0 {
                None
            } else {
                // Gosper's hack: next larger mask with the same popcount.
                let c = cur & cur.wrapping_neg();
                let r = cur.wrapping_add(c);
                if r == 0 {
                    None
                } else {
                    Some((((r ^ cur) >> 2) / c) | r)
                }
            };
            Some(cur)
        })
    })
}

/// A non-empty finite universe with stable element indices.
#[derive(Clone)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.len() > ENUMERATION_BOUND {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                max: ENUMERATION_BOUND,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// Ground set labelled `{prefix}1 .. {prefix}n`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: ElementId) -> Option<&str> {
        self.labels.get(i).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Result<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.len())
    }

    pub(crate) fn check_element(&self, i: ElementId) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement {
                index: i,
                size: self.len(),
            })
        }
    }

    pub(crate) fn check_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ForeignGround)
        }
    }

    pub fn empty_set(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: 0,
        }
    }

    pub fn full_set(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: self.full_mask(),
        }
    }

    pub fn subset_from_mask(&self, mask: u32) -> Result<Subset> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::MaskOutOfRange {
                mask,
                size: self.len(),
            });
        }
        Ok(Subset {
            ground: self.clone(),
            mask,
        })
    }

    /// Subset from a mask already known to lie inside the ground set.
    pub(crate) fn subset_unchecked(&self, mask: u32) -> Subset {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        Subset {
            ground: self.clone(),
            mask,
        }
    }

    pub fn singleton(&self, i: ElementId) -> Result<Subset> {
        self.check_element(i)?;
        Ok(self.subset_unchecked(1 << i))
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0;
        for l in labels {
            mask |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(self.subset_unchecked(mask))
    }

    /// Parses `a1,a4` or `{a1,a4}`; an empty string or `{}` is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<Subset> {
        let inner = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if inner.is_empty() {
            return Ok(self.empty_set());
        }
        self.subset(inner.split(',').map(str::trim))
    }

    /// Every subset of the ground set, in canonical order.
    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        canonical_masks(self.len()).map(move |m| self.subset_unchecked(m))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A subset of a ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct Subset {
    ground: GroundSet,
    mask: u32,
}

impl Subset {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: ElementId) -> bool {
        i < 32 && self.mask & (1 << i) != 0
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        bits(self.mask)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.elements()
            .map(|i| self.ground.labels[i].as_str())
            .collect()
    }

    pub fn complement(&self) -> Subset {
        self.ground
            .subset_unchecked(!self.mask & self.ground.full_mask())
    }

    fn combine(&self, other: &Subset, op: impl Fn(u32, u32) -> u32) -> Result<Subset> {
        self.ground.check_same(&other.ground)?;
        Ok(self.ground.subset_unchecked(op(self.mask, other.mask)))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.combine(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.combine(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.combine(other, |a, b| a & !b)
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.ground.check_same(&other.ground)?;
        Ok(self.mask & !other.mask == 0)
    }

    pub fn with(&self, i: ElementId) -> Result<Subset> {
        self.ground.check_element(i)?;
        Ok(self.ground.subset_unchecked(self.mask | 1 << i))
    }

    pub fn without(&self, i: ElementId) -> Result<Subset> {
        self.ground.check_element(i)?;
        Ok(self.ground.subset_unchecked(self.mask & !(1 << i)))
    }
}

/// Writes `{a1,a2}` for a mask over `ground`.
pub(crate) fn write_mask(f: &mut impl fmt::Write, ground: &GroundSet, mask: u32) -> fmt::Result {
    f.write_char('{')?;
    for (k, i) in bits(mask).enumerate() {
        if k > 0 {
            f.write_char(',')?;
        }
        f.write_str(&ground.labels[i])?;
    }
    f.write_char('}')
}

pub(crate) fn mask_to_string(ground: &GroundSet, mask: u32) -> String {
    let mut s = String::new();
    write_mask(&mut s, ground, mask).expect("writing to a String");
    s
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_mask(f, &self.ground, self.mask)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A duplicate-free family of subsets in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<u32>,
}

impl SetFamily {
    pub fn empty(ground: &GroundSet) -> Self {
        Self {
            ground: ground.clone(),
            members: Vec::new(),
        }
    }

    pub fn new<'a, I>(ground: &GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Subset>,
    {
        let mut masks = Vec::new();
        for s in members {
            ground.check_same(&s.ground)?;
            masks.push(s.mask);
        }
        Ok(Self::from_trusted_masks(ground, masks))
    }

    pub fn from_masks<I: IntoIterator<Item = u32>>(ground: &GroundSet, masks: I) -> Result<Self> {
        let full = ground.full_mask();
        let masks: Vec<u32> = masks.into_iter().collect();
        if let Some(&bad) = masks.iter().find(|&&m| m & !full != 0) {
            return Err(Error::MaskOutOfRange {
                mask: bad,
                size: ground.len(),
            });
        }
        Ok(Self::from_trusted_masks(ground, masks))
    }

    pub(crate) fn from_trusted_masks(ground: &GroundSet, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable_by_key(|&m| canonical_key(m));
        masks.dedup();
        Self {
            ground: ground.clone(),
            members: masks,
        }
    }

    /// Family from label lists, e.g. `&[&["a5"], &["a1", "a2", "a3"]]`.
    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, sets: &[&[S]]) -> Result<Self> {
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            masks.push(ground.subset(set.iter())?.mask);
        }
        Ok(Self::from_trusted_masks(ground, masks))
    }

    pub fn power_set(ground: &GroundSet) -> Self {
        Self {
            ground: ground.clone(),
            members: canonical_masks(ground.len()).collect(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members
            .iter()
            .map(move |&m| self.ground.subset_unchecked(m))
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        self.members
            .binary_search_by_key(&canonical_key(mask), |&m| canonical_key(m))
            .is_ok()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        s.ground == self.ground && self.contains_mask(s.mask)
    }

    /// Union of all members.
    pub fn union(&self) -> Subset {
        self.ground
            .subset_unchecked(self.members.iter().fold(0, |acc, &m| acc | m))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (k, &m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write_mask(f, &self.ground, m)?;
        }
        f.write_char('}')
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Inclusion-maximal members.
pub fn max_of(fam: &SetFamily) -> SetFamily {
    // Any strict superset comes later in canonical order, so walking
    // backwards only has to compare against maxima already kept.
    let mut kept: Vec<u32> = Vec::new();
    for &m in fam.members.iter().rev() {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    SetFamily::from_trusted_masks(&fam.ground, kept)
}

/// Inclusion-minimal members.
pub fn min_of(fam: &SetFamily) -> SetFamily {
    let mut kept: Vec<u32> = Vec::new();
    for &m in &fam.members {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    SetFamily::from_trusted_masks(&fam.ground, kept)
}

/// Every subset of the ground set that is not a member.
pub fn opp_of(fam: &SetFamily) -> Result<SetFamily> {
    let n = fam.ground.len();
    if n > ENUMERATION_BOUND {
        return Err(Error::GroundTooLarge {
            size: n,
            max: ENUMERATION_BOUND,
        });
    }
    let mut present = vec![false; 1usize << n];
    for &m in &fam.members {
        present[m as usize] = true;
    }
    let members = canonical_masks(n)
        .filter(|&m| !present[m as usize])
        .collect();
    Ok(SetFamily {
        ground: fam.ground.clone(),
        members,
    })
}

/// Complements of the members.
pub fn com_of(fam: &SetFamily) -> SetFamily {
    let full = fam.ground.full_mask();
    SetFamily::from_trusted_masks(
        &fam.ground,
        fam.members.iter().map(|&m| !m & full).collect(),
    )
}
