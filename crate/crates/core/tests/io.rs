use std::fs;
use std::path::PathBuf;

use kansets::chain::*;
use kansets::covers::FiniteGroup;
use kansets::io::*;

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/conformance")
}

#[test]
fn valid_corpus_round_trips() {
    let dir = corpus().join("valid");
    let mut seen = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "sset") {
            continue;
        }
        let text = fs::read_to_string(&path).unwrap();
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(doc.space.is_valid().is_ok());
        let canon = path.with_extension("canon");
        let want = if canon.exists() { fs::read_to_string(canon).unwrap() } else { text };
        assert_eq!(print_document(&doc), want, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 10);
}

#[test]
fn invalid_corpus_errors_exactly() {
    let dir = corpus().join("invalid");
    let expected = fs::read_to_string(dir.join("EXPECTED")).unwrap();
    let mut listed = 0;
    for line in expected.lines() {
        let (file, msg) = line.split_once('\t').unwrap();
        let text = fs::read_to_string(dir.join(file)).unwrap();
        assert_eq!(parse_document(&text).unwrap_err().to_string(), msg, "{file}");
        listed += 1;
    }
    let on_disk = fs::read_dir(&dir).unwrap().filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "sset")).count();
    assert_eq!(listed, on_disk);
}

#[test]
fn catalog_round_trips() {
    for name in CATALOG_EXAMPLES {
        let k = catalog(name).unwrap();
        assert!(k.is_valid().is_ok(), "{name}");
        let text = print_space(&k);
        let back = parse_space(&text).unwrap();
        assert_eq!(back, k, "{name}");
        assert_eq!(print_space(&back), text);
    }
}

#[test]
fn catalog_models() {
    assert_eq!(catalog("circle").unwrap().counts(), vec![1, 1]);
    assert_eq!(catalog("torus").unwrap().counts(), vec![1, 3, 2]);
    let rp2 = catalog("rp2").unwrap();
    assert_eq!(rp2.counts(), vec![6, 15, 10]);
    assert_eq!(space_homology(&rp2).unwrap()[1].to_string(), "Z/2");
    let klein = catalog("klein").unwrap();
    assert_eq!(klein.counts(), vec![1, 3, 2]);
    let h: Vec<String> = space_homology(&klein).unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(h, ["Z", "Z + Z/2", "0"]);
    for bad in ["delta", "delta:x", "delta:01", "sphere:-1", "horn:2:3", "moebius", "delta:99"] {
        assert!(catalog(bad).is_err(), "{bad}");
    }
}

#[test]
fn delta1_document() {
    let text = "kansets-space 1\ndim 0:\n  {id: 0, faces: []}\n  {id: 1, faces: []}\ndim 1:\n  {id: 0, faces: [[1, []], [0, []]]}\n";
    let k = parse_space(text).unwrap();
    assert_eq!(k.counts(), vec![2, 1]);
    assert_eq!(print_space(&k), text);
}

#[test]
fn matrix_and_group_text() {
    let m = IntegerMatrix::from_rows(&[vec![1, 0, -1], vec![0, 2, 5]]);
    assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    assert!(parse_matrix("kansets-matrix 1\n2 2\n1 0\n").is_err());
    let g = FiniteGroup::symmetric3();
    let text = print_group(&g);
    assert_eq!(parse_group(&text).unwrap(), g);
    assert!(parse_group("kansets-group 1\nelements: e a\ne a\na a\n").is_err());
}
