//! Reference matroids read from the documents in `docs/examples`, checked
//! against hand-derived values.

use std::path::PathBuf;

use matroid_rough::connectivity::{
    connectivity_report, disconnection_witness, is_connected, matroid_components, WitnessMode,
    DEFAULT_EXHAUSTIVE_BOUND,
};
use matroid_rough::io::{emit_dot, MatroidDocument};
use matroid_rough::{
    fixtures, induced_graph, induced_relation, Matroid, RelationProperties, SetFamily,
};

fn load(name: &str) -> Matroid {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "..",
        "docs",
        "examples",
        name,
    ]
    .iter()
    .collect();
    let text = std::fs::read_to_string(&path).unwrap();
    MatroidDocument::parse(&text).unwrap().build().unwrap()
}

fn set_string(m: &Matroid, labels: &[&str]) -> String {
    m.ground().subset(labels).unwrap().to_string()
}

#[test]
fn documents_match_fixtures() {
    let pairs = [
        (
            "loop-triangle-pendant.txt",
            fixtures::loop_triangle_pendant(),
        ),
        (
            "loop-triangle-pendant-graph.txt",
            fixtures::loop_triangle_pendant(),
        ),
        ("vector-seven.txt", fixtures::vector_seven()),
        ("graphic-eight.txt", fixtures::graphic_eight()),
        ("parallel-triangle.txt", fixtures::parallel_triangle()),
        ("theta.txt", fixtures::theta()),
        (
            "parallel-triangle-loop.txt",
            fixtures::parallel_triangle_loop(),
        ),
    ];
    for (file, m) in pairs {
        assert_eq!(load(file), m, "{file}");
    }
    let u = load("uniform-2-4.txt");
    assert_eq!(
        u.independents().masks(),
        fixtures::uniform_2_4().independents().masks()
    );
}

#[test]
fn circuits_from_forests() {
    let m = load("loop-triangle-pendant.txt");
    assert_eq!(m.circuits().to_string(), "{{a5}, {a1,a2,a3}}");
}

#[test]
fn vector_circuits_and_relation() {
    let m = load("vector-seven.txt");
    assert_eq!(
        m.circuits().to_string(),
        "{{a7}, {a5,a6}, {a1,a2,a4}, {a2,a3,a5}, {a2,a3,a6}, {a1,a3,a4,a5}, {a1,a3,a4,a6}}"
    );
    let r = induced_relation(&m).unwrap();
    for x in 0..7 {
        for y in 0..7 {
            assert_eq!(r.contains(x, y), (x < 6 && y < 6) || (x == 6 && y == 6));
        }
    }
}

#[test]
fn relation_graph_and_approximations_of_loop_triangle() {
    let m = load("loop-triangle-pendant-graph.txt");
    let r = induced_relation(&m).unwrap();
    assert_eq!(
        r.to_string(),
        "{(a1,a1), (a1,a2), (a1,a3), (a2,a1), (a2,a2), (a2,a3), (a3,a1), (a3,a2), (a3,a3), (a5,a5)}"
    );
    let g = induced_graph(&m).unwrap();
    assert_eq!(g.edge_count(), 3);
    assert_eq!(g.components().to_string(), "{a1,a2,a3} | {a4} | {a5}");
    assert!(!g.is_connected());

    let x = m.ground().subset(["a1", "a4"]).unwrap();
    let y = m.ground().subset(["a2", "a4", "a5"]).unwrap();
    assert_eq!(r.upper_approx(&x).unwrap().to_string(), "{a1,a2,a3}");
    assert_eq!(r.upper_approx(&y).unwrap().to_string(), "{a1,a2,a3,a5}");
    assert_eq!(
        emit_dot(&g),
        "graph G {\n  \"a1\";\n  \"a2\";\n  \"a3\";\n  \"a4\";\n  \"a5\";\n  \
         \"a1\" -- \"a2\";\n  \"a1\" -- \"a3\";\n  \"a2\" -- \"a3\";\n}\n"
    );
}

#[test]
fn equivalence_relation_flags() {
    let r = induced_relation(&load("graphic-eight.txt")).unwrap();
    assert_eq!(
        r.properties(),
        RelationProperties {
            serial: true,
            reflexive: true,
            symmetric: true,
            transitive: true
        }
    );
}

#[test]
fn graph_connectivity_verdicts() {
    let k4 = induced_graph(&load("parallel-triangle.txt")).unwrap();
    assert_eq!(k4.edge_count(), 6);
    assert!(k4.is_connected());
    assert!(!induced_graph(&load("loop-triangle-pendant.txt"))
        .unwrap()
        .is_connected());
}

#[test]
fn connectedness() {
    let u = load("uniform-2-4.txt");
    assert!(is_connected(&u));
    assert_eq!(matroid_components(&u).to_string(), "{a,b,c,d}");

    let t = load("theta.txt");
    assert!(is_connected(&t));
    assert_eq!(induced_relation(&t).unwrap().len(), 25);
    assert_eq!(
        emit_dot(&induced_graph(&t).unwrap())
            .matches(" -- ")
            .count(),
        10
    );

    let d = load("parallel-triangle-loop.txt");
    assert!(!is_connected(&d));
    assert_eq!(
        disconnection_witness(&d, WitnessMode::Exhaustive)
            .unwrap()
            .to_string(),
        set_string(&d, &["a3"])
    );
    let report = connectivity_report(&d, DEFAULT_EXHAUSTIVE_BOUND);
    assert!(report.agreement);
    assert_eq!(report.components.count(), 2);
}

#[test]
fn free_document() {
    let m = load("free-pair.txt");
    assert!(m.is_free());
    assert_eq!(m.circuits(), &SetFamily::empty(m.ground()));
    assert!(induced_relation(&m).is_err());
    let report = connectivity_report(&m, DEFAULT_EXHAUSTIVE_BOUND);
    assert!(!report.connected && report.agreement);
}
