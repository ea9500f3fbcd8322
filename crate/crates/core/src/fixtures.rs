//! Small reference matroids used throughout the tests, the CLI docs and the
//! browser demo.

use crate::linalg::RationalMatrix;
use crate::matroid::{GraphEdge, Matroid};
use crate::set::{GroundSet, SetFamily};

fn from_circuits(ground: GroundSet, circuits: &[&[&str]]) -> Matroid {
    let fam = SetFamily::from_labels(&ground, circuits).expect("fixture labels");
    Matroid::from_circuits(&ground, &fam).expect("fixture circuits")
}

/// Triangle `a1 a2 a3`, pendant edge `a4`, loop `a5`, given by its forests.
pub fn loop_triangle_pendant() -> Matroid {
    let u = GroundSet::indexed("a", 5).unwrap();
    let fam = SetFamily::from_labels(
        &u,
        &[
            &[][..],
            &["a1"],
            &["a2"],
            &["a3"],
            &["a4"],
            &["a1", "a2"],
            &["a1", "a3"],
            &["a1", "a4"],
            &["a2", "a3"],
            &["a2", "a4"],
            &["a3", "a4"],
            &["a1", "a2", "a4"],
            &["a1", "a3", "a4"],
            &["a2", "a3", "a4"],
        ],
    )
    .unwrap();
    Matroid::from_independents(&u, &fam).expect("fixture independents")
}

/// The same matroid as [`loop_triangle_pendant`], built from the graph itself.
pub fn loop_triangle_pendant_graph() -> Matroid {
    Matroid::from_graph(&GRAPH_VERTICES, &loop_triangle_pendant_edges()).unwrap()
}

pub const GRAPH_VERTICES: [&str; 4] = ["v1", "v2", "v3", "v4"];

pub fn loop_triangle_pendant_edges() -> Vec<GraphEdge> {
    vec![
        GraphEdge::new("a1", "v1", "v2"),
        GraphEdge::new("a2", "v2", "v3"),
        GraphEdge::new("a3", "v3", "v1"),
        GraphEdge::new("a4", "v3", "v4"),
        GraphEdge::new("a5", "v4", "v4"),
    ]
}

pub const VECTOR_SEVEN_COLUMNS: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
    [0, 1, 1],
    [0, 0, 0],
];

/// Seven vectors in three-space: two equal columns and a zero column.
pub fn vector_seven() -> Matroid {
    let u = GroundSet::indexed("a", 7).unwrap();
    let m = RationalMatrix::from_integer_columns(&VECTOR_SEVEN_COLUMNS).unwrap();
    Matroid::from_matrix(&u, &m).unwrap()
}

/// Eight-edge graphic matroid with two loops; the circuits cover everything.
pub fn graphic_eight() -> Matroid {
    from_circuits(
        GroundSet::indexed("a", 8).unwrap(),
        &[
            &["a1"],
            &["a2"],
            &["a5", "a8"],
            &["a3", "a4", "a5"],
            &["a3", "a4", "a8"],
            &["a5", "a6", "a7"],
            &["a6", "a7", "a8"],
            &["a3", "a4", "a6", "a7"],
        ],
    )
}

/// A parallel pair `a1 a2` closing two triangles with `a3 a4`.
pub fn parallel_triangle() -> Matroid {
    from_circuits(
        GroundSet::indexed("a", 4).unwrap(),
        &[&["a1", "a2"], &["a1", "a3", "a4"], &["a2", "a3", "a4"]],
    )
}

/// Uniform matroid of rank 2 on `{a, b, c, d}`.
pub fn uniform_2_4() -> Matroid {
    let u = GroundSet::new(["a", "b", "c", "d"]).unwrap();
    let fam = SetFamily::from_masks(&u, (0u32..16).filter(|m| m.count_ones() <= 2)).unwrap();
    Matroid::from_independents(&u, &fam).unwrap()
}

/// Cycle matroid of a theta graph: two triangles sharing edge `a5`.
pub fn theta() -> Matroid {
    from_circuits(
        GroundSet::indexed("a", 5).unwrap(),
        &[
            &["a1", "a2", "a5"],
            &["a3", "a4", "a5"],
            &["a1", "a2", "a3", "a4"],
        ],
    )
}

/// A parallel pair and a triangle sharing an edge, plus a separate loop `a3`.
pub fn parallel_triangle_loop() -> Matroid {
    from_circuits(
        GroundSet::indexed("a", 5).unwrap(),
        &[
            &["a1", "a4"],
            &["a1", "a2", "a5"],
            &["a2", "a4", "a5"],
            &["a3"],
        ],
    )
}

/// Every named fixture with a short identifier.
pub fn all() -> Vec<(&'static str, Matroid)> {
    vec![
        ("loop-triangle-pendant", loop_triangle_pendant()),
        ("vector-seven", vector_seven()),
        ("graphic-eight", graphic_eight()),
        ("parallel-triangle", parallel_triangle()),
        ("uniform-2-4", uniform_2_4()),
        ("theta", theta()),
        ("parallel-triangle-loop", parallel_triangle_loop()),
    ]
}
