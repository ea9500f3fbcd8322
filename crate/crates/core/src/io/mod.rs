//! Matroid documents, report serialization and DOT output.

mod document;
mod dot;
mod report;
mod text;

pub use document::{
    emit_text_stream, parse_matroid, ColumnLine, DocumentSource, EdgeLine, MatroidDocument,
    FORMAT_VERSION,
};
pub use dot::emit_dot;
pub use report::{
    from_json, to_json, AxiomDocument, ConnectivityDocument, CriterionEntry, RowEntry, VerifyEntry,
    VerifyReport, VerifySummary, ViolationEntry,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::induced::{induced_graph, induced_relation};
    use crate::matroid::MatroidSource;
    use proptest::prelude::*;

    const THETA: &str = "format: 1
ground: a1, a2, a3, a4, a5
source: circuits
{a1,a2,a5}
{a3,a4,a5}
{a1,a2,a3,a4}
";

    fn syntax_at(input: &str) -> (usize, usize) {
        match MatroidDocument::parse(input) {
            Err(Error::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn circuits_document() {
        let m = MatroidDocument::parse(THETA).unwrap().build().unwrap();
        assert_eq!(m, fixtures::theta());
        assert_eq!(induced_relation(&m).unwrap().len(), 25);
        assert!(matches!(
            parse_matroid(THETA).unwrap(),
            MatroidSource::CircuitFamily(_)
        ));
    }

    #[test]
    fn matrix_and_graph_documents() {
        let matrix = "format: 1\nground: a1, a2, a3, a4, a5, a6, a7\nsource: matrix\n\
            a1 = 1 0 0\na2 = 0 1 0\na3 = 0 0 1\na4 = 1 1 0\na5 = 0 1 1\na6 = 0 2/2 1\na7 = 0 0 0\n";
        let m = MatroidDocument::parse(matrix).unwrap().build().unwrap();
        assert_eq!(m.circuits(), fixtures::vector_seven().circuits());

        // Edge lines may come in any order.
        let graph =
            "format: 1\nground: a1, a2, a3, a4, a5\nsource: graph\nvertices: v1, v2, v3, v4\n\
            a5 = v4 v4\na1 = v1 v2\na2 = v2 v3\na3 = v3 v1\na4 = v3 v4\n";
        let m = MatroidDocument::parse(graph).unwrap().build().unwrap();
        assert_eq!(m, fixtures::loop_triangle_pendant());
    }

    #[test]
    fn rejected_documents() {
        let empty = "format: 1\nground:\nsource: circuits\n";
        assert_eq!(
            MatroidDocument::parse(empty).unwrap_err(),
            Error::EmptyGround
        );
        let v2 = THETA.replace("format: 1", "format: 2");
        assert_eq!(
            MatroidDocument::parse(&v2).unwrap_err(),
            Error::UnknownVersion("2".into())
        );
        let unknown = THETA.replace("{a3,a4,a5}", "{a3,a9}");
        assert_eq!(
            MatroidDocument::parse(&unknown).unwrap_err(),
            Error::UnknownLabel("a9".into())
        );
        assert_eq!(
            syntax_at(&THETA.replace("{a3,a4,a5}", "{a3,a4,a5")),
            (5, 10)
        );
        assert_eq!(syntax_at(&THETA.replace("{a3,a4,a5}", "{a3,,a5}")), (5, 5));
        assert_eq!(
            syntax_at(&THETA.replace("source: circuits", "source: cycles")),
            (3, 9)
        );
        assert_eq!(syntax_at(&THETA.replace("ground:", "grund:")), (2, 1));
        assert_eq!(syntax_at("format: 1\n{a}\n"), (2, 1));
        assert_eq!(syntax_at("format: 1\nsource: circuits\n{a}\n"), (3, 1));
        let bad_entry = "format: 1\nground: a\nsource: matrix\na = 1 x/2\n";
        assert_eq!(syntax_at(bad_entry), (4, 7));
        let json =
            "{\"format\": \"1\",\n \"ground\": [\"a\"],\n \"source\": {\"kind\": \"circuits\" }\n}";
        // A missing field is reported where the object ends.
        assert_eq!(syntax_at(json), (4, 1));
        let missing = "format: 1\nground: a, b\nsource: graph\nvertices: u, v\na = u v\n";
        assert!(matches!(
            MatroidDocument::parse(missing),
            Err(Error::Document(_))
        ));
    }

    #[test]
    fn json_documents() {
        let doc = MatroidDocument::parse(THETA).unwrap();
        let json = doc.emit_json();
        assert!(json.starts_with("{\n  \"format\": \"1\",\n  \"ground\""));
        assert_eq!(MatroidDocument::parse(&json).unwrap(), doc);
        let both = format!("[{json}, {json}]");
        assert_eq!(MatroidDocument::parse_all(&both).unwrap().len(), 2);
    }

    #[test]
    fn streams() {
        let stream = format!("{THETA}---\n# second\n{THETA}---\n");
        let docs = MatroidDocument::parse_all(&stream).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(emit_text_stream(&docs), format!("{THETA}---\n{THETA}"));
        assert!(MatroidDocument::parse(&stream).is_err());
        assert!(MatroidDocument::parse_all("# nothing\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = induced_graph(&fixtures::loop_triangle_pendant()).unwrap();
        assert_eq!(
            emit_dot(&g),
            "graph G {\n  \"a1\";\n  \"a2\";\n  \"a3\";\n  \"a4\";\n  \"a5\";\n  \
             \"a1\" -- \"a2\";\n  \"a1\" -- \"a3\";\n  \"a2\" -- \"a3\";\n}\n"
        );
        let k5 = emit_dot(&induced_graph(&fixtures::theta()).unwrap());
        assert_eq!(k5.matches(" -- ").count(), 10);
        assert_eq!(k5, emit_dot(&induced_graph(&fixtures::theta()).unwrap()));
        let u = crate::set::GroundSet::new(["x\"y"]).unwrap();
        let lone = crate::induced::UndirectedGraph::new(&u, []).unwrap();
        assert_eq!(emit_dot(&lone), "graph G {\n  \"x\\\"y\";\n}\n");
    }

    #[test]
    fn reports_round_trip() {
        let entry = VerifyEntry::new("theta", &fixtures::theta(), 16);
        let report = VerifyReport::new(16, vec![entry]);
        let json = to_json(&report);
        assert_eq!(from_json::<VerifyReport>(&json).unwrap(), report);
        assert_eq!(report.summary.known_errata, 2);
        assert_eq!(report.summary.fails, 0);
    }

    fn label() -> impl Strategy<Value = String> {
        "[a-z][a-z0-9_]{0,3}"
    }

    fn document() -> impl Strategy<Value = MatroidDocument> {
        prop::collection::btree_set(label(), 1..6).prop_flat_map(|labels| {
            let ground: Vec<String> = labels.into_iter().collect();
            let n = ground.len();
            let g1 = ground.clone();
            let sets = prop::collection::vec(prop::collection::vec(0..n, 0..n), 0..5).prop_map(
                move |ss| {
                    ss.into_iter()
                        .map(|s| s.into_iter().map(|i| g1[i].clone()).collect())
                        .collect::<Vec<Vec<String>>>()
                },
            );
            let g2 = ground.clone();
            let graph = (
                prop::collection::vec(label(), 1..4),
                prop::collection::vec((0..4usize, 0..4usize), n),
            )
                .prop_map(move |(vs, ends)| DocumentSource::Graph {
                    edges: g2
                        .iter()
                        .zip(&ends)
                        .map(|(l, &(u, v))| EdgeLine {
                            label: l.clone(),
                            ends: [vs[u % vs.len()].clone(), vs[v % vs.len()].clone()],
                        })
                        .collect(),
                    vertices: vs,
                });
            let g3 = ground.clone();
            let matrix = (0..3usize)
                .prop_flat_map(move |rows| {
                    prop::collection::vec(prop::collection::vec(-5i64..5, rows), n)
                })
                .prop_map(move |cols| DocumentSource::Matrix {
                    columns: g3
                        .iter()
                        .zip(cols)
                        .map(|(l, c)| ColumnLine {
                            label: l.clone(),
                            entries: c.iter().map(|v| format!("{v}/3")).collect(),
                        })
                        .collect(),
                });
            let source = prop_oneof![
                sets.clone()
                    .prop_map(|sets| DocumentSource::Independents { sets }),
                sets.prop_map(|sets| DocumentSource::Circuits { sets }),
                graph,
                matrix,
            ];
            source.prop_map(move |source| MatroidDocument {
                format_version: FORMAT_VERSION.into(),
                ground: ground.clone(),
                source,
            })
        })
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(doc in document()) {
            let text = doc.emit_text();
            let parsed = text::parse_stream(&text).unwrap();
            prop_assert_eq!(&parsed, &vec![doc.clone()]);
            let json: MatroidDocument = from_json(&doc.emit_json()).unwrap();
            prop_assert_eq!(json, doc);
        }
    }
}
