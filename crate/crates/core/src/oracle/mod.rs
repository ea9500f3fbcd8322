//! Brute-force reference implementations, matroid generators and the
//! proposition battery.
//!
//! The reference side works from the raw list of independent sets only and
//! unrolls each definition literally: no rank table, no cached circuits, no
//! union-find. It is slow on purpose and only meant for small ground sets.

mod battery;
mod generate;

pub use battery::{
    is_known_erratum, proposition_battery, Battery, BatteryRow, RowStatus, KNOWN_ERRATA, ROW_IDS,
};
pub use generate::{corpus, direct_sum, generate, GeneratorKind, GeneratorSpec, EXHAUSTIVE_MAX};

use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Reference values computed from a matroid's independent sets alone.
#[derive(Debug, Clone)]
pub struct BruteForce {
    ground: GroundSet,
    n: usize,
    independents: Vec<u32>,
    circuits: Vec<u32>,
    // pairs (x, y) with some circuit containing both
    related: Vec<(usize, usize)>,
}

impl BruteForce {
    pub fn new(m: &Matroid) -> Self {
        let n = m.ground().len();
        let independents = m.independents().masks().to_vec();
        let is_indep = |x: u32| independents.contains(&x);
        // Opp: every subset that is not independent.
        let dependent: Vec<u32> = (0..1u32 << n).filter(|&x| !is_indep(x)).collect();
        // Min: dependent sets with no proper dependent subset.
        let circuits: Vec<u32> = dependent
            .iter()
            .copied()
            .filter(|&d| !dependent.iter().any(|&e| e != d && e & !d == 0))
            .collect();
        let mut related = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let pair = (1u32 << x) | (1u32 << y);
                if circuits.iter().any(|&c| c & pair == pair) {
                    related.push((x, y));
                }
            }
        }
        Self {
            ground: m.ground().clone(),
            n,
            independents,
            circuits,
            related,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Circuits as masks, sorted numerically.
    pub fn circuit_masks(&self) -> Vec<u32> {
        let mut c = self.circuits.clone();
        c.sort_unstable();
        c
    }

    /// Largest independent subset of `x`, by scanning every independent set.
    pub fn rank_mask(&self, x: u32) -> usize {
        self.independents
            .iter()
            .filter(|&&i| i & !x == 0)
            .map(|i| i.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// `X` plus every `x` lying in a circuit inside `X + x`.
    pub fn closure_mask(&self, x: u32) -> u32 {
        let mut out = x;
        for e in 0..self.n {
            let with = x | 1 << e;
            if self
                .circuits
                .iter()
                .any(|&c| c & (1 << e) != 0 && c & !with == 0)
            {
                out |= 1 << e;
            }
        }
        out
    }

    /// `{x : some y in X is related to x}` over the explicit pair list.
    pub fn upper_mask(&self, x: u32) -> u32 {
        self.related
            .iter()
            .filter(|&&(_, y)| x & (1 << y) != 0)
            .fold(0, |acc, &(a, _)| acc | 1 << a)
    }

    /// Classes of the reflexive-transitive closure of circuit co-membership,
    /// by Warshall's algorithm, ordered by smallest element.
    pub fn component_masks(&self) -> Vec<u32> {
        let n = self.n;
        let mut reach = vec![vec![false; n]; n];
        for (x, row) in reach.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in &self.related {
            reach[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        let mut blocks: Vec<u32> = Vec::new();
        for row in &reach {
            let b = row
                .iter()
                .enumerate()
                .filter(|(_, &r)| r)
                .fold(0u32, |acc, (j, _)| acc | 1 << j);
            if !blocks.contains(&b) {
                blocks.push(b);
            }
        }
        blocks
    }
}

pub fn brute_rank(m: &Matroid, x: &Subset) -> usize {
    BruteForce::new(m).rank_mask(x.mask())
}

pub fn brute_closure(m: &Matroid, x: &Subset) -> Subset {
    let b = BruteForce::new(m);
    m.ground()
        .subset_from_mask(b.closure_mask(x.mask()))
        .expect("same ground")
}

pub fn brute_components(m: &Matroid) -> Vec<Subset> {
    BruteForce::new(m)
        .component_masks()
        .into_iter()
        .map(|b| m.ground().subset_from_mask(b).expect("same ground"))
        .collect()
}

/// I1-I3 checked literally: the empty set is in, every subset of a member is
/// in, and every pair of members of different sizes satisfies the exchange
/// property. `member[x]` says whether mask `x` is in the family.
pub fn satisfies_independence_axioms(n: usize, member: &[bool]) -> bool {
    if !member[0] {
        return false;
    }
    let members: Vec<u32> = (0..1u32 << n).filter(|&x| member[x as usize]).collect();
    for &i in &members {
        for e in 0..n {
            if i & (1 << e) != 0 && !member[(i & !(1 << e)) as usize] {
                return false;
            }
        }
    }
    for &a in &members {
        for &b in &members {
            if a.count_ones() < b.count_ones() {
                let ok = (0..n).any(|e| {
                    b & (1 << e) != 0 && a & (1 << e) == 0 && member[(a | 1 << e) as usize]
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reference_values_on_fixtures() {
        let v = fixtures::vector_seven();
        assert_eq!(brute_rank(&v, &v.ground().full_set()), 3);
        for (_, m) in fixtures::all() {
            assert_eq!(
                brute_closure(&m, &m.ground().full_set()),
                m.ground().full_set()
            );
            let b = BruteForce::new(&m);
            let mut primary = m.circuits().masks().to_vec();
            primary.sort_unstable();
            assert_eq!(b.circuit_masks(), primary);
        }
        let d = fixtures::parallel_triangle_loop();
        let blocks = brute_components(&d);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[1].to_string(), "{a3}");
    }

    #[test]
    fn axiom_filter() {
        // {}, {a}, {b}, {a,b} minus {a}: not downward closed.
        assert!(!satisfies_independence_axioms(
            2,
            &[true, false, true, true]
        ));
        // {}, {a}, {b,c} plus its subsets: {a} cannot grow from {b,c}.
        let mut member = vec![false; 8];
        for x in [0b000, 0b001, 0b010, 0b100, 0b110] {
            member[x] = true;
        }
        assert!(!satisfies_independence_axioms(3, &member));
        member[0b011] = true;
        member[0b101] = true;
        assert!(satisfies_independence_axioms(3, &member));
    }
}
