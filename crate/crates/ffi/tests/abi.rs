use gridfary_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn last_error() -> String {
    let p = gf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn path_graph(n: usize) -> *mut GfGraph {
    let edges: Vec<usize> = (1..n).flat_map(|v| [v - 1, v]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gf_graph_new(n, edges.as_ptr(), n - 1, &mut g) }, GfStatus::Ok);
    g
}

#[test]
fn draw_path_and_read_back() {
    unsafe {
        let g = path_graph(12);
        let mut d = ptr::null_mut();
        assert_eq!(gf_draw(g, GfAlgorithm::Auto, &mut d), GfStatus::Ok);
        assert_eq!(gf_drawing_vertex_count(d), 12);
        assert_eq!(gf_drawing_edge_count(d), 11);

        let mut xy = vec![0i64; 24];
        assert_eq!(gf_drawing_positions(d, xy.as_mut_ptr(), xy.len()), GfStatus::Ok);
        let root = xy.chunks(2).position(|p| p == [0, 0]).unwrap();
        assert!(root < 12);

        let mut edges = vec![GfEdge { u: 0, v: 0, dx: 0, dy: 0, length: 0 }; 11];
        assert_eq!(gf_drawing_edges(d, edges.as_mut_ptr(), edges.len()), GfStatus::Ok);
        for e in &edges {
            assert_eq!((e.dx * e.dx + e.dy * e.dy) as u64, e.length * e.length);
            assert_eq!([xy[2 * e.u] + e.dx, xy[2 * e.u + 1] + e.dy], [xy[2 * e.v], xy[2 * e.v + 1]]);
        }

        let (mut passed, mut violations) = (0, usize::MAX);
        assert_eq!(gf_verify(d, g, &mut passed, &mut violations), GfStatus::Ok);
        assert_eq!((passed, violations), (1, 0));

        let mut json = ptr::null_mut();
        assert_eq!(gf_drawing_to_json(d, &mut json), GfStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(gf_drawing_from_json(json, &mut back), GfStatus::Ok);
        assert_eq!(gf_verify(back, ptr::null(), &mut passed, ptr::null_mut()), GfStatus::Ok);
        assert_eq!(passed, 1);

        gf_string_free(json);
        gf_drawing_free(back);
        gf_drawing_free(d);
        gf_graph_free(g);
    }
}

#[test]
fn json_graph_with_root_and_rotation() {
    let text = CString::new(r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#).unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(gf_graph_from_json(text.as_ptr(), &mut g), GfStatus::Ok);
        let offsets = [0usize, 4, 5, 6, 7, 8];
        let neighbors = [4usize, 3, 2, 1, 0, 0, 0, 0];
        assert_eq!(gf_graph_set_rotation(g, offsets.as_ptr(), neighbors.as_ptr()), GfStatus::Ok);
        assert_eq!(gf_graph_set_root(g, 0), GfStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(gf_draw(g, GfAlgorithm::Star, &mut d), GfStatus::Ok);
        let mut xy = [0i64; 10];
        assert_eq!(gf_drawing_positions(d, xy.as_mut_ptr(), 10), GfStatus::Ok);
        assert_eq!(&xy[..2], &[0, 0]);
        gf_drawing_free(d);

        assert_eq!(gf_graph_set_root(g, 9), GfStatus::InvalidInput);
        let bad_offsets = [0usize, 4, 3, 6, 7, 8];
        assert_eq!(gf_graph_set_rotation(g, bad_offsets.as_ptr(), neighbors.as_ptr()), GfStatus::InvalidInput);
        gf_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let k4 = [0usize, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3];
        let mut g = ptr::null_mut();
        assert_eq!(gf_graph_new(4, k4.as_ptr(), 6, &mut g), GfStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(gf_draw(g, GfAlgorithm::Auto, &mut d), GfStatus::Unsupported);
        assert!(d.is_null());
        assert!(!last_error().is_empty());
        gf_graph_free(g);

        let out_of_range = [0usize, 5];
        assert_eq!(gf_graph_new(2, out_of_range.as_ptr(), 1, &mut g), GfStatus::InvalidInput);
        assert_eq!(gf_graph_new(2, ptr::null(), 1, &mut g), GfStatus::NullPointer);
        assert!(last_error().contains("edges"));

        let bad = CString::new("{not json").unwrap();
        assert_eq!(gf_graph_from_json(bad.as_ptr(), &mut g), GfStatus::InvalidInput);

        let p = path_graph(4);
        assert_eq!(gf_draw(p, GfAlgorithm::Auto, &mut d), GfStatus::Ok);
        assert!(gf_last_error().is_null());
        let mut small = [0i64; 3];
        assert_eq!(gf_drawing_positions(d, small.as_mut_ptr(), 3), GfStatus::BufferTooSmall);
        gf_drawing_free(d);
        gf_graph_free(p);

        gf_graph_free(ptr::null_mut());
        gf_drawing_free(ptr::null_mut());
        gf_string_free(ptr::null_mut());
        assert_eq!(gf_drawing_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn triples_export() {
    let mut out = [0u64; 12];
    unsafe {
        assert_eq!(gf_triples(4, 0, out.as_mut_ptr(), 12), GfStatus::Ok);
        assert_eq!(out, [3, 4, 5, 4, 3, 5, 5, 12, 13, 12, 5, 13]);
        assert_eq!(gf_triples(4, 1, out.as_mut_ptr(), 12), GfStatus::Ok);
        assert_eq!(out, [12, 5, 13, 4, 3, 5, 3, 4, 5, 5, 12, 13]);
        assert_eq!(gf_triples(5, 0, out.as_mut_ptr(), 12), GfStatus::BufferTooSmall);
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/gridfary.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }

    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
    else {
        return;
    };
    let tmp = tempfile::tempdir().unwrap();
    let c = tmp.path().join("use.c");
    std::fs::write(
        &c,
        "#include \"gridfary.h\"\nint main(void) { GfGraph *g = 0; GfStatus s = gf_graph_new(1, 0, 0, &g); gf_graph_free(g); return s == GF_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&c)
        .status()
        .unwrap();
    assert!(status.success());
}
