//! The relation and the graph a matroid's circuits induce on its elements.
//!
//! Two elements are related when some circuit contains both. The relation
//! is only defined for general matroids (at least one circuit); free
//! matroids are rejected with [`Error::FreeMatroid`] unless the caller
//! explicitly opts into the empty relation.

use std::fmt;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rough::BinaryRelation;
use crate::set::{bits, canonical_masks, write_mask, ElementId, GroundSet, Subset};

/// A partition of a ground set into blocks, ordered by smallest element.
#[derive(Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    ground: GroundSet,
    blocks: Vec<u32>,
}

impl ComponentDecomposition {
    pub(crate) fn from_blocks(ground: &GroundSet, mut blocks: Vec<u32>) -> Self {
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        debug_assert_eq!(blocks.iter().fold(0, |a, b| a | b), ground.full_mask());
        Self {
            ground: ground.clone(),
            blocks,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_masks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Subset> {
        self.blocks
            .iter()
            .map(|&b| self.ground.subset_unchecked(b))
            .collect()
    }

    pub fn block_of(&self, x: ElementId) -> Option<Subset> {
        self.blocks
            .iter()
            .find(|&&b| b & (1 << x) != 0)
            .map(|&b| self.ground.subset_unchecked(b))
    }
}

impl fmt::Display for ComponentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write_mask(f, &self.ground, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ComponentDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A simple undirected graph on the elements of a ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertices: GroundSet,
    adjacency: Vec<u32>,
}

impl UndirectedGraph {
    pub fn new<I>(vertices: &GroundSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let mut adjacency = vec![0u32; vertices.len()];
        for (x, y) in edges {
            vertices.check_element(x)?;
            vertices.check_element(y)?;
            if x == y {
                return Err(Error::Precondition(format!(
                    "self-loop at {}",
                    vertices.labels()[x]
                )));
            }
            adjacency[x] |= 1 << y;
            adjacency[y] |= 1 << x;
        }
        Ok(Self {
            vertices: vertices.clone(),
            adjacency,
        })
    }

    pub fn vertices(&self) -> &GroundSet {
        &self.vertices
    }

    pub fn neighbors(&self, x: ElementId) -> Subset {
        self.vertices.subset_unchecked(self.adjacency[x])
    }

    pub fn has_edge(&self, x: ElementId, y: ElementId) -> bool {
        x < self.adjacency.len() && y < 32 && self.adjacency[x] & (1 << y) != 0
    }

    /// Edges `(x, y)` with `x < y`, in lexicographic order.
    pub fn edges(&self) -> Vec<(ElementId, ElementId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(x, &adj)| bits(adj).filter(move |&y| y > x).map(move |y| (x, y)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn components(&self) -> ComponentDecomposition {
        graph_components(self)
    }

    pub fn is_connected(&self) -> bool {
        is_graph_connected(self)
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.vertices.labels();
        f.debug_struct("UndirectedGraph")
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges()
                    .into_iter()
                    .map(|(x, y)| format!("{}-{}", labels[x], labels[y]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Maximal connected blocks, by union-find over the edges.
pub fn graph_components(g: &UndirectedGraph) -> ComponentDecomposition {
    let mut dsu = DisjointSets::new(g.vertices.len());
    for (x, y) in g.edges() {
        dsu.union(x, y);
    }
    ComponentDecomposition::from_blocks(&g.vertices, dsu.block_masks())
}

/// One component; a single vertex counts as connected.
pub fn is_graph_connected(g: &UndirectedGraph) -> bool {
    graph_components(g).count() == 1
}

fn require_general(m: &Matroid) -> Result<()> {
    if m.is_free() {
        Err(Error::FreeMatroid)
    } else {
        Ok(())
    }
}

fn require_covering(m: &Matroid) -> Result<()> {
    require_general(m)?;
    if m.circuits_cover() {
        Ok(())
    } else {
        Err(Error::NotCovering)
    }
}

/// `x R y` iff some circuit contains both `x` and `y`.
pub fn induced_relation(m: &Matroid) -> Result<BinaryRelation> {
    require_general(m)?;
    Ok(induced_relation_allow_free(m))
}

/// As [`induced_relation`], but a free matroid yields the empty relation.
pub fn induced_relation_allow_free(m: &Matroid) -> BinaryRelation {
    let n = m.ground().len();
    let mut successors = vec![0u32; n];
    for &c in m.circuits().masks() {
        for x in bits(c) {
            successors[x] |= c;
        }
    }
    BinaryRelation::from_successor_masks(m.ground(), successors)
}

pub(crate) fn upper_via_circuits_mask(m: &Matroid, x: u32) -> u32 {
    m.circuits()
        .masks()
        .iter()
        .filter(|&&c| c & x != 0)
        .fold(0, |acc, &c| acc | c)
}

/// Union of the circuits that meet `X`.
pub fn upper_via_circuits(m: &Matroid, x: &Subset) -> Result<Subset> {
    m.ground().check_same(x.ground())?;
    Ok(m.ground()
        .subset_unchecked(upper_via_circuits_mask(m, x.mask())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReflexiveCoverEvidence {
    pub reflexive: bool,
    pub covers: bool,
    pub agree: bool,
}

/// Reflexivity of the induced relation against the circuits covering the
/// ground set, each evaluated on its own.
pub fn check_reflexive_iff_cover(m: &Matroid) -> Result<ReflexiveCoverEvidence> {
    let reflexive = induced_relation(m)?.is_reflexive();
    let covers = m.circuits().union().mask() == m.ground().full_mask();
    Ok(ReflexiveCoverEvidence {
        reflexive,
        covers,
        agree: reflexive == covers,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SerialReflexiveEvidence {
    pub serial: bool,
    pub reflexive: bool,
    pub agree: bool,
}

pub fn check_serial_iff_reflexive(m: &Matroid) -> Result<SerialReflexiveEvidence> {
    let r = induced_relation(m)?;
    let (serial, reflexive) = (r.is_serial(), r.is_reflexive());
    Ok(SerialReflexiveEvidence {
        serial,
        reflexive,
        agree: serial == reflexive,
    })
}

/// A set on which the upper approximation and the closure differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureMismatch {
    pub set: Subset,
    pub upper: Subset,
    pub closure: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperClosureEvidence {
    pub covers: bool,
    pub equal_for_all: bool,
    pub counterexample: Option<ClosureMismatch>,
}

impl UpperClosureEvidence {
    /// Whether "upper equals closure everywhere iff the circuits cover"
    /// holds on this matroid.
    pub fn biconditional_holds(&self) -> bool {
        self.equal_for_all == self.covers
    }
}

/// Compares the upper approximation with the closure on every subset and
/// keeps the first mismatch in canonical order.
pub fn check_upper_equals_closure(m: &Matroid) -> Result<UpperClosureEvidence> {
    require_general(m)?;
    let g = m.ground();
    let counterexample = canonical_masks(g.len()).find_map(|x| {
        let upper = upper_via_circuits_mask(m, x);
        let closure = m.closure_mask(x);
        (upper != closure).then(|| ClosureMismatch {
            set: g.subset_unchecked(x),
            upper: g.subset_unchecked(upper),
            closure: g.subset_unchecked(closure),
        })
    });
    Ok(UpperClosureEvidence {
        covers: m.circuits_cover(),
        equal_for_all: counterexample.is_none(),
        counterexample,
    })
}

/// The graph with an edge between distinct related elements.
pub fn induced_graph(m: &Matroid) -> Result<UndirectedGraph> {
    let r = induced_relation(m)?;
    UndirectedGraph::new(m.ground(), r.pairs().filter(|(x, y)| x != y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectingCircuitsEvidence {
    pub hypothesis_holds: bool,
    pub graph_connected: bool,
}

impl IntersectingCircuitsEvidence {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis_holds || self.graph_connected
    }
}

/// Pairwise-intersecting circuits against connectivity of the induced graph.
/// Requires the circuits to cover the ground set.
pub fn check_intersecting_circuits_connect(m: &Matroid) -> Result<IntersectingCircuitsEvidence> {
    require_covering(m)?;
    let cs = m.circuits().masks();
    let hypothesis_holds = cs
        .iter()
        .enumerate()
        .all(|(i, &a)| cs[i + 1..].iter().all(|&b| a & b != 0));
    Ok(IntersectingCircuitsEvidence {
        hypothesis_holds,
        graph_connected: is_graph_connected(&induced_graph(m)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCriterionEvidence {
    pub graph_connected: bool,
    pub criterion_holds: bool,
    pub witness: Option<Subset>,
}

impl GraphCriterionEvidence {
    pub fn biconditional_holds(&self) -> bool {
        self.graph_connected == self.criterion_holds
    }
}

/// Graph connectivity against "no proper non-empty `X` equals the union of
/// the circuits meeting it". Requires the circuits to cover the ground set.
pub fn check_graph_connectivity_criterion(m: &Matroid) -> Result<GraphCriterionEvidence> {
    require_covering(m)?;
    let g = m.ground();
    let full = g.full_mask();
    let witness = canonical_masks(g.len())
        .filter(|&x| x != 0 && x != full)
        .find(|&x| upper_via_circuits_mask(m, x) == x)
        .map(|x| g.subset_unchecked(x));
    Ok(GraphCriterionEvidence {
        graph_connected: is_graph_connected(&induced_graph(m)?),
        criterion_holds: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rough::RelationProperties;
    use crate::set::SetFamily;

    fn set(m: &Matroid, labels: &[&str]) -> Subset {
        m.ground().subset(labels).unwrap()
    }

    #[test]
    fn relation_of_graph_with_loop() {
        let m = fixtures::loop_triangle_pendant();
        let r = induced_relation(&m).unwrap();
        assert_eq!(
            r.to_string(),
            "{(a1,a1), (a1,a2), (a1,a3), (a2,a1), (a2,a2), (a2,a3), (a3,a1), (a3,a2), (a3,a3), (a5,a5)}"
        );
        assert_eq!(
            r.properties(),
            RelationProperties {
                serial: false,
                reflexive: false,
                symmetric: true,
                transitive: true
            }
        );
        assert_eq!(r.successor_neighborhood(3).unwrap().to_string(), "{}");
    }

    #[test]
    fn relation_of_vector_matroid() {
        let m = fixtures::vector_seven();
        let r = induced_relation(&m).unwrap();
        let mut expected = vec![(6, 6)];
        for x in 0..6 {
            for y in 0..6 {
                expected.push((x, y));
            }
        }
        expected.sort();
        assert_eq!(r.pairs().collect::<Vec<_>>(), expected);
        assert_eq!(r.successor_neighborhood(6).unwrap().to_string(), "{a7}");
    }

    #[test]
    fn full_relations() {
        for m in [fixtures::parallel_triangle(), fixtures::theta()] {
            let r = induced_relation(&m).unwrap();
            assert_eq!(r.len(), m.ground().len().pow(2));
        }
        let r = induced_relation(&fixtures::graphic_eight()).unwrap();
        assert!(r.properties().reflexive && r.is_symmetric() && r.is_transitive());
    }

    #[test]
    fn free_matroids_need_override() {
        let u = GroundSet::new(["a", "b"]).unwrap();
        let free = Matroid::from_circuits(&u, &SetFamily::empty(&u)).unwrap();
        assert_eq!(induced_relation(&free), Err(Error::FreeMatroid));
        assert!(induced_relation_allow_free(&free).is_empty());
        assert_eq!(induced_graph(&free).unwrap_err(), Error::FreeMatroid);
        // Under the override, upper is always empty while closure is the identity.
        let r = induced_relation_allow_free(&free);
        let x = u.subset(["a"]).unwrap();
        assert_eq!(r.upper_approx(&x).unwrap(), u.empty_set());
        assert_eq!(free.closure(&x).unwrap(), x);
    }

    #[test]
    fn upper_via_circuits_examples() {
        let m = fixtures::loop_triangle_pendant();
        assert_eq!(
            upper_via_circuits(&m, &set(&m, &["a1", "a4"]))
                .unwrap()
                .to_string(),
            "{a1,a2,a3}"
        );
        assert_eq!(
            upper_via_circuits(&m, &m.ground().empty_set()).unwrap(),
            m.ground().empty_set()
        );
        let d = fixtures::parallel_triangle_loop();
        assert_eq!(
            upper_via_circuits(&d, &set(&d, &["a3"]))
                .unwrap()
                .to_string(),
            "{a3}"
        );
    }

    #[test]
    fn reflexive_and_serial_checks() {
        let g = fixtures::loop_triangle_pendant();
        assert_eq!(
            check_reflexive_iff_cover(&g).unwrap(),
            ReflexiveCoverEvidence {
                reflexive: false,
                covers: false,
                agree: true
            }
        );
        for m in [fixtures::graphic_eight(), fixtures::vector_seven()] {
            assert_eq!(
                check_reflexive_iff_cover(&m).unwrap(),
                ReflexiveCoverEvidence {
                    reflexive: true,
                    covers: true,
                    agree: true
                }
            );
        }
        assert_eq!(
            check_serial_iff_reflexive(&g).unwrap(),
            SerialReflexiveEvidence {
                serial: false,
                reflexive: false,
                agree: true
            }
        );
        assert_eq!(
            check_serial_iff_reflexive(&fixtures::parallel_triangle()).unwrap(),
            SerialReflexiveEvidence {
                serial: true,
                reflexive: true,
                agree: true
            }
        );
        let u = GroundSet::new(["a", "b"]).unwrap();
        let one_loop =
            Matroid::from_circuits(&u, &SetFamily::from_labels(&u, &[&["a"][..]]).unwrap())
                .unwrap();
        assert_eq!(
            check_serial_iff_reflexive(&one_loop).unwrap(),
            SerialReflexiveEvidence {
                serial: false,
                reflexive: false,
                agree: true
            }
        );
    }

    #[test]
    fn upper_and_closure_mismatches() {
        // Non-covering: the loop is in every closure, including the closure
        // of the empty set, which is the first subset scanned.
        let g = fixtures::loop_triangle_pendant();
        let e = check_upper_equals_closure(&g).unwrap();
        assert!(!e.covers && !e.equal_for_all && e.biconditional_holds());
        let c = e.counterexample.unwrap();
        assert_eq!(
            (
                c.set.to_string(),
                c.upper.to_string(),
                c.closure.to_string()
            ),
            ("{}".into(), "{}".into(), "{a5}".into())
        );
        let a4 = set(&g, &["a4"]);
        assert_eq!(upper_via_circuits(&g, &a4).unwrap().to_string(), "{}");
        assert_eq!(g.closure(&a4).unwrap().to_string(), "{a4,a5}");

        // Covering, yet the closure of {a1} adds nothing.
        let t = fixtures::theta();
        let e = check_upper_equals_closure(&t).unwrap();
        assert!(e.covers && !e.equal_for_all && !e.biconditional_holds());
        let c = e.counterexample.unwrap();
        assert_eq!(c.set.to_string(), "{a1}");
        assert_eq!(c.upper, t.ground().full_set());
        assert_eq!(c.closure.to_string(), "{a1}");
    }

    #[test]
    fn induced_graphs() {
        let g = induced_graph(&fixtures::loop_triangle_pendant()).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.components().to_string(), "{a1,a2,a3} | {a4} | {a5}");
        assert_eq!(g.components().count(), 3);
        assert!(!g.is_connected());

        let k4 = induced_graph(&fixtures::parallel_triangle()).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_connected());
        assert_eq!(k4.components().count(), 1);

        let u = GroundSet::indexed("a", 3).unwrap();
        let loops = Matroid::from_circuits(
            &u,
            &SetFamily::from_labels(&u, &[&["a1"][..], &["a2"], &["a3"]]).unwrap(),
        )
        .unwrap();
        let edgeless = induced_graph(&loops).unwrap();
        assert_eq!(edgeless.edge_count(), 0);
        assert_eq!(edgeless.components().count(), 3);

        let single = UndirectedGraph::new(&GroundSet::new(["v"]).unwrap(), []).unwrap();
        assert!(single.is_connected());
        assert!(UndirectedGraph::new(&u, [(1, 1)]).is_err());
    }

    #[test]
    fn intersecting_circuits() {
        for m in [fixtures::parallel_triangle(), fixtures::theta()] {
            let e = check_intersecting_circuits_connect(&m).unwrap();
            assert!(e.hypothesis_holds && e.graph_connected);
        }
        let e = check_intersecting_circuits_connect(&fixtures::graphic_eight()).unwrap();
        assert!(!e.hypothesis_holds && e.implication_holds());
        assert_eq!(
            check_intersecting_circuits_connect(&fixtures::loop_triangle_pendant()),
            Err(Error::NotCovering)
        );
    }

    #[test]
    fn graph_connectivity_criterion() {
        let e = check_graph_connectivity_criterion(&fixtures::parallel_triangle()).unwrap();
        assert_eq!(
            e,
            GraphCriterionEvidence {
                graph_connected: true,
                criterion_holds: true,
                witness: None
            }
        );
        let e = check_graph_connectivity_criterion(&fixtures::graphic_eight()).unwrap();
        assert!(!e.graph_connected && !e.criterion_holds);
        assert_eq!(e.witness.unwrap().to_string(), "{a1}");
        let e = check_graph_connectivity_criterion(&fixtures::parallel_triangle_loop()).unwrap();
        assert!(!e.graph_connected && !e.criterion_holds);
        assert_eq!(e.witness.unwrap().to_string(), "{a3}");
    }
}
