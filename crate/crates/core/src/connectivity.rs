//! Matroid components and the deciders for "is this matroid connected".
//!
//! The reference verdict is the number of equivalence classes of circuit
//! co-membership, computed by union-find. Every other decider is an
//! independent check that must agree with it.

use crate::dsu::DisjointSets;
use crate::error::Result;
use crate::induced::{
    induced_graph, induced_relation, induced_relation_allow_free, ComponentDecomposition,
};
use crate::matroid::Matroid;
use crate::set::{canonical_masks, mask_to_string, ElementId, GroundSet, Subset};

/// Default largest ground set on which `for all X` scans run.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 16;

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Pair(ElementId, ElementId),
    Set(Subset),
    Element(ElementId),
}

impl Witness {
    pub fn describe(&self, ground: &GroundSet) -> String {
        let l = ground.labels();
        match self {
            Witness::Pair(x, y) => format!("({},{})", l[*x], l[*y]),
            Witness::Set(s) => mask_to_string(ground, s.mask()),
            Witness::Element(x) => l[*x].clone(),
        }
    }
}

/// A connectivity verdict with the first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

/// Classes of `e1 ~ e2 iff e1 = e2 or some circuit contains both`.
pub fn matroid_components(m: &Matroid) -> ComponentDecomposition {
    let mut dsu = DisjointSets::new(m.ground().len());
    for &c in m.circuits().masks() {
        let first = c.trailing_zeros() as usize;
        for x in crate::set::bits(c) {
            dsu.union(first, x);
        }
    }
    ComponentDecomposition::from_blocks(m.ground(), dsu.block_masks())
}

pub fn is_connected(m: &Matroid) -> bool {
    matroid_components(m).count() == 1
}

/// Every pair of distinct elements lies in a common circuit.
pub fn is_connected_pairwise_circuit(m: &Matroid) -> Decision {
    let n = m.ground().len();
    let cs = m.circuits().masks();
    let witness = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let pair = 1u32 << x | 1 << y;
            !cs.iter().any(|&c| c & pair == pair)
        });
    Decision {
        verdict: witness.is_none(),
        witness: witness.map(|(x, y)| Witness::Pair(x, y)),
    }
}

/// Every element lies in the neighborhood of every other element.
pub fn is_connected_neighborhood(m: &Matroid) -> Result<Decision> {
    let r = induced_relation(m)?;
    let n = m.ground().len();
    let witness = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| x != y && !r.contains(x, y));
    Ok(Decision {
        verdict: witness.is_none(),
        witness: witness.map(|(x, y)| Witness::Pair(x, y)),
    })
}

/// How [`disconnection_witness`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMode {
    /// First proper non-empty `X` in canonical order with `upper(X) ⊆ X`.
    Exhaustive,
    /// The first component, when there is more than one.
    Component,
}

fn proper_nonempty(n: usize) -> impl Iterator<Item = u32> {
    let full = crate::set::full_mask(n);
    canonical_masks(n).filter(move |&x| x != 0 && x != full)
}

/// A proper non-empty `X` whose upper approximation stays inside `X`.
pub fn disconnection_witness(m: &Matroid, mode: WitnessMode) -> Option<Subset> {
    let g = m.ground();
    match mode {
        WitnessMode::Exhaustive => {
            let r = induced_relation_allow_free(m);
            proper_nonempty(g.len())
                .find(|&x| r.upper_mask(x) & !x == 0)
                .map(|x| g.subset_unchecked(x))
        }
        WitnessMode::Component => {
            let comps = matroid_components(m);
            (comps.count() > 1).then(|| g.subset_unchecked(comps.block_masks()[0]))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryEvidence {
    pub connected: bool,
    /// For every proper non-empty `X`, `upper(X)` leaves `X`.
    pub upper_escapes: bool,
    /// First `X` where `upper(X)` stays inside `X`.
    pub witness: Option<Subset>,
    /// connected iff upper always escapes.
    pub escape_agrees: bool,
    /// Not connected iff upper always escapes, taken literally.
    pub escape_literal_agrees: bool,
    /// The literal form with connected and not-connected swapped.
    pub escape_repaired_agrees: bool,
}

/// Tests the upper-escape characterisation and its negated literal form.
pub fn check_corollaries(m: &Matroid) -> Result<CorollaryEvidence> {
    let r = induced_relation(m)?;
    let g = m.ground();
    let witness = proper_nonempty(g.len()).find(|&x| r.upper_mask(x) & !x == 0);
    let connected = is_connected(m);
    let upper_escapes = witness.is_none();
    Ok(CorollaryEvidence {
        connected,
        upper_escapes,
        witness: witness.map(|x| g.subset_unchecked(x)),
        escape_agrees: connected == upper_escapes,
        escape_literal_agrees: !connected == upper_escapes,
        escape_repaired_agrees: connected == upper_escapes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringDecision {
    pub applicable: bool,
    pub verdict: Option<bool>,
    pub witness: Option<Subset>,
}

/// For covering matroids: connected iff no proper non-empty `X` is a fixed
/// point of the upper approximation.
pub fn is_connected_covering(m: &Matroid) -> Result<CoveringDecision> {
    let r = induced_relation(m)?;
    if !m.circuits_cover() {
        return Ok(CoveringDecision {
            applicable: false,
            verdict: None,
            witness: None,
        });
    }
    let g = m.ground();
    let witness = proper_nonempty(g.len()).find(|&x| r.upper_mask(x) == x);
    Ok(CoveringDecision {
        applicable: true,
        verdict: Some(witness.is_none()),
        witness: witness.map(|x| g.subset_unchecked(x)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEquivalenceEvidence {
    pub applicable: bool,
    pub matroid_connected: Option<bool>,
    pub graph_connected: Option<bool>,
    pub agree: Option<bool>,
}

/// For covering matroids: matroid connectivity against connectivity of the
/// induced graph.
pub fn check_matroid_graph_equivalence(m: &Matroid) -> Result<GraphEquivalenceEvidence> {
    let graph = induced_graph(m)?;
    if !m.circuits_cover() {
        return Ok(GraphEquivalenceEvidence {
            applicable: false,
            matroid_connected: None,
            graph_connected: None,
            agree: None,
        });
    }
    let mc = is_connected(m);
    let gc = graph.is_connected();
    Ok(GraphEquivalenceEvidence {
        applicable: true,
        matroid_connected: Some(mc),
        graph_connected: Some(gc),
        agree: Some(mc == gc),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreciseNeighborhoodEvidence {
    pub applicable: bool,
    pub all_fixed: Option<bool>,
    /// First element whose neighborhood is moved by the upper approximation.
    pub witness: Option<ElementId>,
}

/// For covering matroids: every neighborhood is a fixed point of the upper
/// approximation.
pub fn check_precise_neighborhoods(m: &Matroid) -> Result<PreciseNeighborhoodEvidence> {
    let r = induced_relation(m)?;
    if !m.circuits_cover() {
        return Ok(PreciseNeighborhoodEvidence {
            applicable: false,
            all_fixed: None,
            witness: None,
        });
    }
    let witness = (0..m.ground().len()).find(|&x| {
        let nx = r.successor_mask(x);
        r.upper_mask(nx) != nx
    });
    Ok(PreciseNeighborhoodEvidence {
        applicable: true,
        all_fixed: Some(witness.is_none()),
        witness,
    })
}

/// Whether a criterion ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionStatus {
    Applied,
    /// Its precondition does not hold on this matroid.
    Inapplicable,
    /// The ground set exceeds the exhaustive-scan bound.
    Skipped,
}

impl CriterionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CriterionStatus::Applied => "applied",
            CriterionStatus::Inapplicable => "inapplicable",
            CriterionStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub name: &'static str,
    pub status: CriterionStatus,
    pub verdict: Option<bool>,
    pub witness: Option<Witness>,
}

impl CriterionOutcome {
    fn applied(name: &'static str, verdict: bool, witness: Option<Witness>) -> Self {
        Self {
            name,
            status: CriterionStatus::Applied,
            verdict: Some(verdict),
            witness,
        }
    }

    fn not_run(name: &'static str, status: CriterionStatus) -> Self {
        Self {
            name,
            status,
            verdict: None,
            witness: None,
        }
    }
}

/// Names of the criteria in [`ConnectivityReport::criteria`], in order.
pub const CRITERIA: [&str; 6] = [
    "components",
    "pairwise-circuit",
    "neighborhood",
    "upper-subset",
    "covering-upper-fixed",
    "induced-graph",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub components: ComponentDecomposition,
    pub connected: bool,
    pub criteria: Vec<CriterionOutcome>,
    pub agreement: bool,
}

impl ConnectivityReport {
    pub fn criterion(&self, name: &str) -> Option<&CriterionOutcome> {
        self.criteria.iter().find(|c| c.name == name)
    }

    /// The disconnection witness from the upper-subset criterion, falling
    /// back to the first component.
    pub fn witness_set(&self) -> Option<Subset> {
        match self
            .criterion("upper-subset")
            .and_then(|c| c.witness.as_ref())
        {
            Some(Witness::Set(s)) => Some(s.clone()),
            _ if !self.connected => Some(
                self.components
                    .ground()
                    .subset_unchecked(self.components.block_masks()[0]),
            ),
            _ => None,
        }
    }
}

/// Runs every applicable decider and compares it with the component count.
///
/// Free matroids are accepted; criteria defined through the induced
/// relation are then inapplicable. Scans over all subsets are skipped when
/// the ground set is larger than `exhaustive_bound`.
pub fn connectivity_report(m: &Matroid, exhaustive_bound: usize) -> ConnectivityReport {
    use CriterionStatus::*;
    let components = matroid_components(m);
    let connected = components.count() == 1;
    let general = !m.is_free();
    let covering = general && m.circuits_cover();
    let within = m.ground().len() <= exhaustive_bound;

    let mut criteria = vec![CriterionOutcome::applied("components", connected, None)];
    let pc = is_connected_pairwise_circuit(m);
    criteria.push(CriterionOutcome::applied(
        "pairwise-circuit",
        pc.verdict,
        pc.witness,
    ));

    if general {
        let nb = is_connected_neighborhood(m).expect("general matroid");
        criteria.push(CriterionOutcome::applied(
            "neighborhood",
            nb.verdict,
            nb.witness,
        ));
        let mode = if within {
            WitnessMode::Exhaustive
        } else {
            WitnessMode::Component
        };
        let w = disconnection_witness(m, mode);
        criteria.push(CriterionOutcome::applied(
            "upper-subset",
            w.is_none(),
            w.map(Witness::Set),
        ));
    } else {
        criteria.push(CriterionOutcome::not_run("neighborhood", Inapplicable));
        criteria.push(CriterionOutcome::not_run("upper-subset", Inapplicable));
    }

    if !covering {
        criteria.push(CriterionOutcome::not_run(
            "covering-upper-fixed",
            Inapplicable,
        ));
        criteria.push(CriterionOutcome::not_run("induced-graph", Inapplicable));
    } else {
        if within {
            let c = is_connected_covering(m).expect("general matroid");
            criteria.push(CriterionOutcome::applied(
                "covering-upper-fixed",
                c.verdict.expect("covering"),
                c.witness.map(Witness::Set),
            ));
        } else {
            criteria.push(CriterionOutcome::not_run("covering-upper-fixed", Skipped));
        }
        let g = induced_graph(m).expect("general matroid");
        criteria.push(CriterionOutcome::applied(
            "induced-graph",
            g.is_connected(),
            None,
        ));
    }

    let agreement = criteria
        .iter()
        .filter_map(|c| c.verdict)
        .all(|v| v == connected);
    ConnectivityReport {
        components,
        connected,
        criteria,
        agreement,
    }
}
