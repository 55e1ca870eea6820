use std::path::PathBuf;
use std::process::{Command, Output};

use pcube::chem::{build_benzenoid, build_c4c8, BenzenoidSpec, C4C8Spec};
use pcube::generators::{cycle, hypercube};
use pcube_cli::format::{GraphFile, InputFile};
use proptest::prelude::*;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn pcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcube"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = pcube(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn index(file: &str, extra: &[&str]) -> String {
    let path = data(file);
    let mut args = vec!["index", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run_ok(&args)
}

#[test]
fn c4_brute() {
    assert_eq!(
        index("c4.graph", &["--method", "brute"]),
        "wiener=8\nszeged=16\n"
    );
}

#[test]
fn c5_cut_is_rejected_with_odd_cycle() {
    let out = pcube(&[
        "index",
        data("c5.graph").to_str().unwrap(),
        "--method",
        "cut",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd_cycle"));
    // brute force does not need a partial cube
    assert_eq!(
        index("c5.graph", &["--method", "brute"]),
        "wiener=15\nszeged=20\n"
    );
}

#[test]
fn fixture_trees() {
    let expected = [(499, 1497), (288, 960), (467, 1561), (388, 972)];
    for (i, (w, sz)) in expected.into_iter().enumerate() {
        let path = data(&format!("fixture_f{}.graph", i + 1));
        let out = run_ok(&["tree-index", path.to_str().unwrap()]);
        assert_eq!(
            out,
            format!("wiener={w}\nszeged={sz}\n"),
            "fixture {}",
            i + 1
        );
        // weighted brute force and the cut method agree with the tree sweep
        for method in ["brute", "cut", "partition"] {
            assert_eq!(
                index(&format!("fixture_f{}.graph", i + 1), &["--method", method]),
                out
            );
        }
    }
}

#[test]
fn single_vertex_tree() {
    assert_eq!(
        run_ok(&["tree-index", data("single_vertex.graph").to_str().unwrap()]),
        "wiener=0\nszeged=0\n"
    );
}

#[test]
fn tree_index_rejects_cycles() {
    let out = pcube(&["tree-index", data("c4.graph").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn recognize_files() {
    let q3 = run_ok(&["recognize", data("q3.graph").to_str().unwrap()]);
    assert_eq!(q3, "partial_cube=true\nclasses=3\nclass_sizes=4,4,4\n");
    let k23 = run_ok(&["recognize", data("k23.graph").to_str().unwrap()]);
    assert!(
        k23.starts_with("partial_cube=false\nwitness=class_components\n"),
        "{k23}"
    );
    let k2 = run_ok(&["recognize", data("k2.graph").to_str().unwrap()]);
    assert_eq!(k2, "partial_cube=true\nclasses=1\nclass_sizes=1\n");
    let c5 = run_ok(&["recognize", data("c5.graph").to_str().unwrap()]);
    assert!(c5.contains("witness=odd_cycle"));
}

#[test]
fn recognize_json() {
    let out = run_ok(&["recognize", "--json", data("q3.graph").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["partial_cube"], true);
    assert_eq!(v["classes"], 3);
    assert_eq!(v["class_sizes"], serde_json::json!([4, 4, 4]));
}

#[test]
fn methods_agree() {
    for file in [
        "c4.graph",
        "q3.graph",
        "k2.graph",
        "octagon.cells",
        "two_octagons.cells",
        "phenalene.cells",
    ] {
        let brute = index(file, &["--method", "brute"]);
        assert_eq!(index(file, &["--method", "cut"]), brute, "{file}");
        for p in ["finest", "coarsest"] {
            assert_eq!(
                index(file, &["--method", "partition", "--partition", p]),
                brute,
                "{file} {p}"
            );
        }
    }
    assert_eq!(
        index(
            "q3.graph",
            &["--method", "partition", "--partition", "0,2;1"]
        ),
        "wiener=48\nszeged=192\n"
    );
    let brute = index("two_octagons.cells", &["--method", "brute"]);
    assert_eq!(
        index("two_octagons.cells", &["--method", "partition"]),
        brute
    );
    assert_eq!(
        index(
            "phenalene.cells",
            &["--method", "partition", "--partition", "direction"]
        ),
        index("phenalene.cells", &["--method", "brute"])
    );
}

#[test]
fn verbose_tables() {
    let out = index("c4.graph", &["--method", "cut", "--verbose"]);
    assert_eq!(
        out,
        "wiener=8\nszeged=16\n\
         class=0 size=2 n1=2 n2=2 wiener=4 szeged=8\n\
         class=1 size=2 n1=2 n2=2 wiener=4 szeged=8\n"
    );
    let out = index("hexagon.cells", &["--method", "partition", "--verbose"]);
    let groups: Vec<&str> = out.lines().filter(|l| l.starts_with("group=")).collect();
    assert_eq!(groups.len(), 3);
    assert!(
        groups
            .iter()
            .all(|g| g.contains("direction=") && g.ends_with("wiener=9 szeged=18")),
        "{out}"
    );
}

#[test]
fn index_json_is_one_object() {
    let out = index(
        "q3.graph",
        &[
            "--json",
            "--method",
            "partition",
            "--partition",
            "coarsest",
            "--verbose",
        ],
    );
    assert_eq!(out.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["wiener"], 48);
    assert_eq!(v["szeged"], 192);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["groups"][0]["classes"], serde_json::json!([0, 1, 2]));
    let plain: serde_json::Value = serde_json::from_str(&index("c4.graph", &["--json"])).unwrap();
    assert_eq!(plain, serde_json::json!({"wiener": 8, "szeged": 16}));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| pcube(args).status.code();
    let bad = data("bad_vertex.graph");
    let out = pcube(&["index", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(
        code(&["index", data("missing.graph").to_str().unwrap()]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "index",
            data("c4.graph").to_str().unwrap(),
            "--method",
            "partition",
            "--partition",
            "direction"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "index",
            data("c4.graph").to_str().unwrap(),
            "--method",
            "partition",
            "--partition",
            "0;5"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "index",
            data("overflow.graph").to_str().unwrap(),
            "--method",
            "brute"
        ]),
        Some(4)
    );
    assert_eq!(
        code(&["index", data("overflow.graph").to_str().unwrap()]),
        Some(4)
    );
    assert_eq!(
        code(&[
            "index",
            data("k23.graph").to_str().unwrap(),
            "--method",
            "partition"
        ]),
        Some(3)
    );
    assert_eq!(
        code(&[
            "index",
            data("k23.graph").to_str().unwrap(),
            "--method",
            "brute"
        ]),
        Some(0)
    );
}

fn generate(cells: &str) -> (String, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("system.graph");
    run_ok(&[
        "generate",
        data(cells).to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    let graph = std::fs::read_to_string(&out).unwrap();
    let embed = std::fs::read_to_string(dir.path().join("system.graph.embed")).unwrap();
    (graph, embed)
}

#[test]
fn generate_headers() {
    for (cells, header) in [
        ("octagon.cells", "p 8 8"),
        ("hexagon.cells", "p 6 6"),
        ("two_octagons.cells", "p 14 15"),
    ] {
        let (graph, embed) = generate(cells);
        assert_eq!(graph.lines().next(), Some(header), "{cells}");
        let n: usize = header.split(' ').nth(1).unwrap().parse().unwrap();
        let m: usize = header.split(' ').nth(2).unwrap().parse().unwrap();
        assert_eq!(embed.lines().filter(|l| l.starts_with("v ")).count(), n);
        assert_eq!(embed.lines().filter(|l| l.starts_with("d ")).count(), m);
    }
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let (a, ea) = generate("phenalene.cells");
    let (b, eb) = generate("phenalene.cells");
    assert_eq!((&a, &ea), (&b, &eb));
    let sys = build_benzenoid(&BenzenoidSpec::new([(0, 0), (1, 0), (0, 1)])).unwrap();
    assert_eq!(GraphFile::parse(&a).unwrap().graph, sys.graph);

    let (c, _) = generate("two_octagons.cells");
    let sys = build_c4c8(&C4C8Spec::new([(0, 0), (1, 0)])).unwrap();
    assert_eq!(GraphFile::parse(&c).unwrap().graph, sys.graph);
}

#[test]
fn generate_rejects_disconnected_cells() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.graph");
    let res = pcube(&[
        "generate",
        data("split.cells").to_str().unwrap(),
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn written_graphs_parse_back() {
    for g in [hypercube(4), cycle(10)] {
        let f = GraphFile::unweighted(g.clone());
        match InputFile::parse(&f.write()).unwrap() {
            InputFile::Graph(back) => assert_eq!(back.graph, g),
            InputFile::Cells(_) => panic!("graph file read as cells"),
        }
    }
}

proptest! {
    #[test]
    fn weighted_round_trip(n in 1usize..20, seed in any::<u64>()) {
        // a path with pseudo-random weights
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        let g = pcube::Graph::new(n, &edges).unwrap();
        let vw: Vec<u64> = (0..n as u64).map(|i| seed.rotate_left(i as u32) % 50).collect();
        let ew: Vec<u64> = (0..edges.len() as u64).map(|i| seed.rotate_right(i as u32) % 7).collect();
        let f = GraphFile { graph: g, vertex_weights: Some(vw), edge_weights: Some(ew) };
        let back = GraphFile::parse(&f.write()).unwrap();
        prop_assert_eq!(&back.graph, &f.graph);
        prop_assert_eq!(back.vertex_weights.unwrap_or_else(|| vec![1; n]), f.vertex_weights.unwrap());
        prop_assert_eq!(back.edge_weights.unwrap_or_else(|| vec![1; n - 1]), f.edge_weights.unwrap());
    }
}
