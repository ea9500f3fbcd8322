//! Matroids over explicit independence families.
//!
//! A [`Matroid`] keeps its full independence family, its circuit family and
//! a rank table indexed by mask. All of these are built eagerly, so queries
//! are table lookups or a single pass over the circuits.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::set::{
    bits, canonical_masks, mask_to_string, min_of, ElementId, GroundSet, SetFamily, Subset,
    ENUMERATION_BOUND,
};

/// Matroid axioms and rank-function properties that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    I1,
    I2,
    I3,
    C1,
    C2,
    C3,
    CL1,
    CL2,
    CL3,
    CL4,
    RankEmpty,
    RankMonotone,
    RankUnitIncrement,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::I1 => "I1",
            Axiom::I2 => "I2",
            Axiom::I3 => "I3",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
            Axiom::CL1 => "CL1",
            Axiom::CL2 => "CL2",
            Axiom::CL3 => "CL3",
            Axiom::CL4 => "CL4",
            Axiom::RankEmpty => "rank-empty",
            Axiom::RankMonotone => "rank-monotone",
            Axiom::RankUnitIncrement => "rank-unit-increment",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The first witness found against one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        Self { violations }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, ground: &GroundSet, masks: &[u32]) {
        self.violations.push(Violation {
            axiom,
            witness: masks.iter().map(|&m| ground.subset_unchecked(m)).collect(),
        });
    }

    fn merge(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all axioms hold");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} fails at", v.axiom)?;
            for w in &v.witness {
                write!(f, " {w}")?;
            }
        }
        Ok(())
    }
}

/// An edge of a multigraph; its label becomes a matroid element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub label: String,
    pub ends: (String, String),
}

impl GraphEdge {
    pub fn new(label: impl Into<String>, u: impl Into<String>, v: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            ends: (u.into(), v.into()),
        }
    }
}

/// The four ways a matroid can be described.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSource {
    IndependenceFamily(SetFamily),
    CircuitFamily(SetFamily),
    GraphEdges {
        vertices: Vec<String>,
        edges: Vec<GraphEdge>,
    },
    MatrixColumns {
        labels: Vec<String>,
        matrix: RationalMatrix,
    },
}

impl MatroidSource {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSource::IndependenceFamily(f) => Matroid::from_independents(f.ground(), f),
            MatroidSource::CircuitFamily(f) => Matroid::from_circuits(f.ground(), f),
            MatroidSource::GraphEdges { vertices, edges } => Matroid::from_graph(vertices, edges),
            MatroidSource::MatrixColumns { labels, matrix } => {
                Matroid::from_matrix(&GroundSet::new(labels.iter().cloned())?, matrix)
            }
        }
    }
}

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    independents: SetFamily,
    circuits: SetFamily,
    rank: Vec<u8>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.independents == other.independents
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("circuits", &self.circuits)
            .finish()
    }
}

impl Matroid {
    /// Validates I1-I3 and builds the matroid.
    pub fn from_independents(ground: &GroundSet, fam: &SetFamily) -> Result<Self> {
        ground.check_same(fam.ground())?;
        let report = check_independence_axioms(fam);
        if !report.passed() {
            return Err(Error::Axiom(report));
        }
        let mut flags = vec![false; 1usize << ground.len()];
        for &m in fam.masks() {
            flags[m as usize] = true;
        }
        Ok(Self::from_flags(ground, flags))
    }

    /// Validates C1-C3 and builds the matroid whose circuits are `fam`.
    pub fn from_circuits(ground: &GroundSet, fam: &SetFamily) -> Result<Self> {
        ground.check_same(fam.ground())?;
        let report = check_circuit_axioms(fam);
        if !report.passed() {
            return Err(Error::Axiom(report));
        }
        let m = Self::from_circuits_unchecked(ground, fam.masks());
        debug_assert_eq!(&m.circuits, fam);
        Ok(m)
    }

    /// Builds from a circuit family that is known to satisfy C1-C3.
    pub(crate) fn from_circuits_unchecked(ground: &GroundSet, circuits: &[u32]) -> Self {
        let n = ground.len();
        let mut dependent = vec![false; 1usize << n];
        for &c in circuits {
            dependent[c as usize] = true;
        }
        // Propagate upward: a set is dependent iff it contains a circuit.
        for i in 0..n {
            let bit = 1usize << i;
            for x in 0..dependent.len() {
                if x & bit != 0 && dependent[x ^ bit] {
                    dependent[x] = true;
                }
            }
        }
        Self::from_flags(ground, dependent.into_iter().map(|d| !d).collect())
    }

    /// Cycle matroid of a multigraph: independent sets are the forests.
    ///
    /// Loops are singleton circuits and parallel edges form 2-circuits.
    pub fn from_graph<S: AsRef<str>>(vertices: &[S], edges: &[GraphEdge]) -> Result<Self> {
        let vertex_names: Vec<&str> = vertices.iter().map(AsRef::as_ref).collect();
        for (i, v) in vertex_names.iter().enumerate() {
            if vertex_names[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.to_string()));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if edges[..i].iter().any(|f| f.label == e.label) {
                return Err(Error::DuplicateEdgeLabel(e.label.clone()));
            }
        }
        let ground = GroundSet::new(edges.iter().map(|e| e.label.clone()))?;
        let vertex = |name: &str| {
            vertex_names
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut ends = Vec::with_capacity(edges.len());
        for e in edges {
            ends.push((vertex(&e.ends.0)?, vertex(&e.ends.1)?));
        }
        let circuits = min_of(&SetFamily::from_trusted_masks(
            &ground,
            simple_cycles(vertex_names.len(), &ends),
        ));
        Self::from_circuits(&ground, &circuits)
    }

    /// Vector matroid on the columns of `matrix`, labelled by `ground`.
    pub fn from_matrix(ground: &GroundSet, matrix: &RationalMatrix) -> Result<Self> {
        if matrix.cols() != ground.len() {
            return Err(Error::Precondition(format!(
                "matrix has {} columns for {} labels",
                matrix.cols(),
                ground.len()
            )));
        }
        let size = 1usize << ground.len();
        let mut flags = vec![false; size];
        flags[0] = true;
        for x in 1..size {
            let low = x & x.wrapping_neg();
            flags[x] =
                flags[x ^ low] && matrix.column_rank(bits(x as u32)) == x.count_ones() as usize;
        }
        Ok(Self::from_flags(ground, flags))
    }

    pub fn from_source(source: &MatroidSource) -> Result<Self> {
        source.build()
    }

    /// `flags[x]` says whether mask `x` is independent; the caller
    /// guarantees the flags describe a matroid.
    fn from_flags(ground: &GroundSet, flags: Vec<bool>) -> Self {
        let rank = rank_table(&flags);
        let n = ground.len();
        let independents = canonical_masks(n).filter(|&m| flags[m as usize]).collect();
        let circuits = canonical_masks(n)
            .filter(|&m| !flags[m as usize] && bits(m).all(|e| flags[(m & !(1 << e)) as usize]))
            .collect();
        Self {
            ground: ground.clone(),
            independents: SetFamily::from_trusted_masks(ground, independents),
            circuits: SetFamily::from_trusted_masks(ground, circuits),
            rank,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn independents(&self) -> &SetFamily {
        &self.independents
    }

    pub fn circuits(&self) -> &SetFamily {
        &self.circuits
    }

    pub fn rank_full(&self) -> usize {
        self.rank[self.ground.full_mask() as usize] as usize
    }

    fn check(&self, x: &Subset) -> Result<u32> {
        self.ground.check_same(x.ground())?;
        Ok(x.mask())
    }

    pub fn is_independent(&self, x: &Subset) -> Result<bool> {
        Ok(self.is_independent_mask(self.check(x)?))
    }

    pub fn rank(&self, x: &Subset) -> Result<usize> {
        Ok(self.rank_mask(self.check(x)?))
    }

    /// `X` plus every element that completes a circuit inside `X`.
    pub fn closure(&self, x: &Subset) -> Result<Subset> {
        Ok(self
            .ground
            .subset_unchecked(self.closure_mask(self.check(x)?)))
    }

    /// `{e : r(X + e) = r(X)}`.
    pub fn closure_via_rank(&self, x: &Subset) -> Result<Subset> {
        Ok(self
            .ground
            .subset_unchecked(self.closure_via_rank_mask(self.check(x)?)))
    }

    pub(crate) fn is_independent_mask(&self, x: u32) -> bool {
        self.rank[x as usize] as u32 == x.count_ones()
    }

    pub(crate) fn rank_mask(&self, x: u32) -> usize {
        self.rank[x as usize] as usize
    }

    pub(crate) fn closure_mask(&self, x: u32) -> u32 {
        // x in C and C within X + x  <=>  C has at most one element outside X.
        self.circuits
            .masks()
            .iter()
            .filter(|&&c| (c & !x).count_ones() <= 1)
            .fold(x, |acc, &c| acc | c)
    }

    pub(crate) fn closure_via_rank_mask(&self, x: u32) -> u32 {
        let r = self.rank[x as usize];
        (0..self.ground.len())
            .filter(|&e| self.rank[(x | 1 << e) as usize] == r)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn is_free(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Whether every element lies in some circuit.
    pub fn circuits_cover(&self) -> bool {
        self.circuits.union().mask() == self.ground.full_mask()
    }

    pub fn check_closure_axioms(&self) -> AxiomReport {
        check_closure_operator(&self.ground, |x| self.closure_mask(x))
    }

    pub fn check_circuit_axioms(&self) -> AxiomReport {
        check_circuit_axioms(&self.circuits)
    }

    /// r(empty) = 0, monotonicity and unit increments, checked one element
    /// at a time over every subset.
    pub fn check_rank_properties(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let g = &self.ground;
        if self.rank[0] != 0 {
            report.push(Axiom::RankEmpty, g, &[0]);
        }
        let mut mono = None;
        let mut unit = None;
        'scan: for x in canonical_masks(g.len()) {
            for e in 0..g.len() {
                let y = x | 1 << e;
                if y == x {
                    continue;
                }
                let (rx, ry) = (self.rank[x as usize], self.rank[y as usize]);
                if mono.is_none() && ry < rx {
                    mono = Some([x, y]);
                }
                if unit.is_none() && ry > rx + 1 {
                    unit = Some([x, y]);
                }
                if mono.is_some() && unit.is_some() {
                    break 'scan;
                }
            }
        }
        if let Some(w) = mono {
            report.push(Axiom::RankMonotone, g, &w);
        }
        if let Some(w) = unit {
            report.push(Axiom::RankUnitIncrement, g, &w);
        }
        report
    }

    /// Some circuit `C3` with `e1, e2 in C3` and `C3` inside `C1 u C2`;
    /// the canonically first one is returned.
    pub fn elimination_witness(
        &self,
        c1: &Subset,
        c2: &Subset,
        e1: ElementId,
        e2: ElementId,
    ) -> Result<Subset> {
        let (a, b) = (self.check(c1)?, self.check(c2)?);
        self.ground.check_element(e1)?;
        self.ground.check_element(e2)?;
        if !self.circuits.contains_mask(a) || !self.circuits.contains_mask(b) {
            return Err(Error::Precondition("both sets must be circuits".into()));
        }
        if a & b == 0 {
            return Err(Error::Precondition("circuits must intersect".into()));
        }
        let (m1, m2) = (1u32 << e1, 1u32 << e2);
        if a & m1 == 0 || b & m1 != 0 || b & m2 == 0 || a & m2 != 0 {
            return Err(Error::Precondition(
                "need e1 in C1 - C2 and e2 in C2 - C1".into(),
            ));
        }
        let within = a | b;
        self.circuits
            .masks()
            .iter()
            .find(|&&c| c & !within == 0 && c & m1 != 0 && c & m2 != 0)
            .map(|&c| self.ground.subset_unchecked(c))
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "no eliminating circuit inside {}",
                    mask_to_string(&self.ground, within)
                ))
            })
    }
}

fn rank_table(flags: &[bool]) -> Vec<u8> {
    let mut rank = vec![0u8; flags.len()];
    for x in 1..flags.len() {
        rank[x] = if flags[x] {
            x.count_ones() as u8
        } else {
            bits(x as u32)
                .map(|e| rank[x & !(1 << e)])
                .max()
                .unwrap_or(0)
        };
    }
    rank
}

/// Edge sets of all simple cycles of a multigraph (self-loops included).
fn simple_cycles(vertex_count: usize, ends: &[(usize, usize)]) -> Vec<u32> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    let mut cycles = Vec::new();
    for (e, &(u, v)) in ends.iter().enumerate() {
        if u == v {
            cycles.push(1u32 << e);
        } else {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }

    struct Search<'a> {
        adj: &'a [Vec<(usize, usize)>],
        start: usize,
        on_path: Vec<bool>,
        out: &'a mut Vec<u32>,
    }

    impl Search<'_> {
        fn walk(&mut self, at: usize, used: u32) {
            for &(w, e) in &self.adj[at] {
                if used & (1 << e) != 0 {
                    continue;
                }
                if w == self.start {
                    self.out.push(used | 1 << e);
                } else if w > self.start && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.walk(w, used | 1 << e);
                    self.on_path[w] = false;
                }
            }
        }
    }

    // Each cycle is rooted at its smallest vertex and found once per direction.
    for start in 0..vertex_count {
        let mut search = Search {
            adj: &adj,
            start,
            on_path: vec![false; vertex_count],
            out: &mut cycles,
        };
        search.on_path[start] = true;
        search.walk(start, 0);
    }
    cycles.sort_unstable();
    cycles.dedup();
    cycles
}

/// Checks I1-I3. I3 is only examined when I1 and I2 hold.
///
/// For a downward-closed family, I3 holds iff the largest-independent-subset
/// function `r` satisfies `r(X+e) + r(X+f) >= r(X+e+f) + r(X)` everywhere.
/// A failure at `(X, e, f)` gives an I3 witness: a maximal independent
/// subset of `X` against one of `X+e+f`, one element larger.
pub fn check_independence_axioms(fam: &SetFamily) -> AxiomReport {
    let g = fam.ground();
    let n = g.len();
    let mut report = AxiomReport::default();
    if !fam.contains_mask(0) {
        report.push(Axiom::I1, g, &[0]);
    }
    let mut member = vec![false; 1usize << n];
    for &m in fam.masks() {
        member[m as usize] = true;
    }
    'i2: for &m in fam.masks() {
        for e in bits(m) {
            let sub = m & !(1 << e);
            if !member[sub as usize] {
                report.push(Axiom::I2, g, &[m, sub]);
                break 'i2;
            }
        }
    }
    if !report.passed() {
        return report;
    }

    // best[x]: first maximum-size member inside x.
    let mut best = vec![0u32; member.len()];
    for x in 1..member.len() {
        best[x] = if member[x] {
            x as u32
        } else {
            let mut b = 0u32;
            for e in bits(x as u32) {
                let cand = best[x & !(1 << e)];
                if cand.count_ones() > b.count_ones() {
                    b = cand;
                }
            }
            b
        };
    }
    let r = |x: u32| best[x as usize].count_ones();
    for x in canonical_masks(n) {
        for e in 0..n {
            if x & (1 << e) != 0 {
                continue;
            }
            for f in e + 1..n {
                if x & (1 << f) != 0 {
                    continue;
                }
                let xef = x | 1 << e | 1 << f;
                if r(x | 1 << e) + r(x | 1 << f) < r(xef) + r(x) {
                    report.push(Axiom::I3, g, &[best[x as usize], best[xef as usize]]);
                    return report;
                }
            }
        }
    }
    report
}

/// Checks C1-C3 over every pair of members and every shared element.
pub fn check_circuit_axioms(fam: &SetFamily) -> AxiomReport {
    let g = fam.ground();
    let cs = fam.masks();
    let mut report = AxiomReport::default();
    if fam.contains_mask(0) {
        report.push(Axiom::C1, g, &[0]);
    }
    'c2: for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            // canonical order puts any proper subset first
            if a & !b == 0 {
                report.push(Axiom::C2, g, &[a, b]);
                break 'c2;
            }
        }
    }
    'c3: for (i, &a) in cs.iter().enumerate() {
        for &b in &cs[i + 1..] {
            for x in bits(a & b) {
                let room = (a | b) & !(1 << x);
                if !cs.iter().any(|&c| c & !room == 0) {
                    report.push(Axiom::C3, g, &[a, b, 1 << x]);
                    break 'c3;
                }
            }
        }
    }
    report
}

/// Checks CL1-CL4 for an arbitrary operator on the subsets of `ground`.
pub fn check_closure_operator(ground: &GroundSet, cl: impl Fn(u32) -> u32) -> AxiomReport {
    let n = ground.len();
    debug_assert!(n <= ENUMERATION_BOUND);
    let table: Vec<u32> = (0..1u32 << n).map(&cl).collect();
    let t = |x: u32| table[x as usize];
    let mut report = AxiomReport::default();

    if let Some(x) = canonical_masks(n).find(|&x| x & !t(x) != 0) {
        report.push(Axiom::CL1, ground, &[x]);
    }
    let monotone_failure = canonical_masks(n).find_map(|x| {
        (0..n)
            .map(|e| x | 1 << e)
            .find(|&y| y != x && t(x) & !t(y) != 0)
            .map(|y| [x, y])
    });
    if let Some(w) = monotone_failure {
        report.push(Axiom::CL2, ground, &w);
    }
    if let Some(x) = canonical_masks(n).find(|&x| t(t(x) & ground.full_mask()) != t(x)) {
        report.push(Axiom::CL3, ground, &[x]);
    }
    let mut exchange = None;
    'cl4: for x in canonical_masks(n) {
        for a in 0..n {
            let gained = t(x | 1 << a) & !t(x);
            for b in bits(gained) {
                if t(x | 1 << b) & (1 << a) == 0 {
                    exchange = Some([x, 1 << a, 1 << b]);
                    break 'cl4;
                }
            }
        }
    }
    if let Some(w) = exchange {
        report.push(Axiom::CL4, ground, &w);
    }
    report
}

/// All independence, circuit, closure and rank checks for one matroid.
pub fn check_all_axioms(m: &Matroid) -> AxiomReport {
    let mut report = check_independence_axioms(m.independents());
    report.merge(m.check_circuit_axioms());
    report.merge(m.check_closure_axioms());
    report.merge(m.check_rank_properties());
    report
}
