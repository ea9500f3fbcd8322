//! Browser-independent core of the demo. Every entry point takes a matroid
//! document and returns JSON, so it can be tested natively.

use matroid_rough::connectivity::connectivity_report;
use matroid_rough::io::MatroidDocument;
use matroid_rough::{induced_relation_allow_free, Matroid, RelationProperties, Subset};
use serde::Serialize;

/// Connectivity scans on the page never exceed this many elements.
const PAGE_BOUND: usize = 12;

pub const PRESETS: [(&str, &str); 8] = [
    (
        "loop-triangle-pendant",
        include_str!("../../../docs/examples/loop-triangle-pendant-graph.txt"),
    ),
    (
        "vector-seven",
        include_str!("../../../docs/examples/vector-seven.txt"),
    ),
    (
        "graphic-eight",
        include_str!("../../../docs/examples/graphic-eight.txt"),
    ),
    (
        "parallel-triangle",
        include_str!("../../../docs/examples/parallel-triangle.txt"),
    ),
    (
        "uniform-2-4",
        include_str!("../../../docs/examples/uniform-2-4.txt"),
    ),
    ("theta", include_str!("../../../docs/examples/theta.txt")),
    (
        "parallel-triangle-loop",
        include_str!("../../../docs/examples/parallel-triangle-loop.txt"),
    ),
    (
        "free-pair",
        include_str!("../../../docs/examples/free-pair.txt"),
    ),
];

#[derive(Serialize)]
struct Preset<'a> {
    name: &'a str,
    text: &'a str,
}

#[derive(Serialize)]
pub struct Analysis {
    pub labels: Vec<String>,
    pub circuits: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    /// Component index of each element.
    pub component_of: Vec<usize>,
    pub components: usize,
    pub connected: bool,
    pub witness: Option<Vec<usize>>,
    pub properties: RelationProperties,
}

#[derive(Serialize)]
pub struct Approximation {
    pub set: Vec<usize>,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
    pub closure: Vec<usize>,
    pub rank: usize,
    pub precise: bool,
}

fn build(text: &str) -> Result<Matroid, String> {
    MatroidDocument::parse(text)
        .and_then(|d| d.build())
        .map_err(|e| e.to_string())
}

fn indices(s: &Subset) -> Vec<usize> {
    s.elements().collect()
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

pub fn presets() -> String {
    let list: Vec<Preset> = PRESETS
        .iter()
        .map(|&(name, text)| Preset { name, text })
        .collect();
    json(&list)
}

pub fn analyze(text: &str) -> Result<String, String> {
    let m = build(text)?;
    let r = induced_relation_allow_free(&m);
    let report = connectivity_report(&m, PAGE_BOUND);
    let n = m.ground().len();
    let mut component_of = vec![0; n];
    for (k, block) in report.components.blocks().iter().enumerate() {
        for x in block.elements() {
            component_of[x] = k;
        }
    }
    Ok(json(&Analysis {
        labels: m.ground().labels().to_vec(),
        circuits: m.circuits().iter().map(|c| indices(&c)).collect(),
        edges: r
            .pairs()
            .filter(|(x, y)| x < y)
            .map(|(x, y)| [x, y])
            .collect(),
        component_of,
        components: report.components.count(),
        connected: report.connected,
        witness: report.witness_set().map(|w| indices(&w)),
        properties: r.properties(),
    }))
}

/// Approximations of the set holding the given element indices.
pub fn approximate(text: &str, selected: &[usize]) -> Result<String, String> {
    let m = build(text)?;
    let g = m.ground();
    let mut x = g.empty_set();
    for &i in selected {
        x = x.with(i).map_err(|e| e.to_string())?;
    }
    let r = induced_relation_allow_free(&m);
    let upper = r.upper_approx(&x).map_err(|e| e.to_string())?;
    Ok(json(&Approximation {
        set: indices(&x),
        lower: indices(&r.lower_approx(&x).map_err(|e| e.to_string())?),
        precise: upper == x,
        upper: indices(&upper),
        closure: indices(&m.closure(&x).map_err(|e| e.to_string())?),
        rank: m.rank(&x).map_err(|e| e.to_string())?,
    }))
}
