//! Schema-level tests driven through the library: parse/serialize round
//! trips and the documented error cases.

use leibniz_ly::{catalog, leibniz_to_ly, adjoint_rep, induce_ly_rep};
use leibniz_ly_cli::files::{
    algebra_from_doc, algebra_to_doc, leibniz_rep_to_doc, ly_rep_to_doc, ly_to_doc, rep_from_doc,
    to_canonical_json, AlgebraDoc, ParsedAlgebra, ParsedRep, RepDoc,
};

#[test]
fn minimal_abelian_file_parses() {
    let doc: AlgebraDoc =
        serde_json::from_str(r#"{"kind":"leibniz","dim":1,"product":[],"name":"abelian:1"}"#)
            .unwrap();
    let ParsedAlgebra::Leibniz(a) = algebra_from_doc(&doc).unwrap() else {
        panic!("expected a leibniz algebra");
    };
    assert_eq!(a.dim(), 1);
    assert!(a.product().is_zero());
    assert_eq!(a.name(), Some("abelian:1"));
}

#[test]
fn leibniz2_file_matches_catalog() {
    let doc: AlgebraDoc =
        serde_json::from_str(r#"{"kind":"leibniz","dim":2,"product":[[0,0,1,"1"]]}"#).unwrap();
    let ParsedAlgebra::Leibniz(a) = algebra_from_doc(&doc).unwrap() else {
        panic!("expected a leibniz algebra");
    };
    assert!(a.same_structure(&catalog("leibniz2").unwrap()));
}

#[test]
fn out_of_range_index_is_rejected() {
    let doc: AlgebraDoc =
        serde_json::from_str(r#"{"kind":"leibniz","dim":2,"product":[[0,0,5,"1"]]}"#).unwrap();
    let err = algebra_from_doc(&doc).unwrap_err();
    assert!(err.to_string().contains("out of range"), "{err}");
}

#[test]
fn algebra_doc_roundtrip_is_byte_identical() {
    for name in ["abelian:3", "leibniz2", "sl2", "heisenberg"] {
        let a = catalog(name).unwrap();
        let doc = algebra_to_doc(&a);
        let text = to_canonical_json(&doc);
        let reparsed: AlgebraDoc = serde_json::from_str(&text).unwrap();
        let ParsedAlgebra::Leibniz(back) = algebra_from_doc(&reparsed).unwrap() else {
            panic!("kind changed");
        };
        assert!(back.same_structure(&a), "{name}: structure changed");
        assert_eq!(to_canonical_json(&algebra_to_doc(&back)), text, "{name}");
    }
}

#[test]
fn ly_doc_roundtrip_is_byte_identical() {
    let ly = leibniz_to_ly(&catalog("sl2").unwrap()).unwrap();
    let text = to_canonical_json(&ly_to_doc(&ly));
    let reparsed: AlgebraDoc = serde_json::from_str(&text).unwrap();
    let ParsedAlgebra::Ly(back) = algebra_from_doc(&reparsed).unwrap() else {
        panic!("kind changed");
    };
    assert!(back.same_structure(&ly));
    assert_eq!(to_canonical_json(&ly_to_doc(&back)), text);
}

#[test]
fn rep_doc_roundtrip_is_byte_identical() {
    let rep = adjoint_rep(&catalog("sl2").unwrap()).unwrap();
    let text = to_canonical_json(&leibniz_rep_to_doc(&rep));
    let reparsed: RepDoc = serde_json::from_str(&text).unwrap();
    let ParsedRep::Leibniz(back) = rep_from_doc(&reparsed, std::path::Path::new(".")).unwrap()
    else {
        panic!("kind changed");
    };
    assert!(back.same_rep(&rep));
    assert_eq!(to_canonical_json(&leibniz_rep_to_doc(&back)), text);

    let ind = induce_ly_rep(&rep).unwrap();
    let text = to_canonical_json(&ly_rep_to_doc(&ind));
    let reparsed: RepDoc = serde_json::from_str(&text).unwrap();
    let ParsedRep::Ly(back) = rep_from_doc(&reparsed, std::path::Path::new(".")).unwrap() else {
        panic!("kind changed");
    };
    assert!(back.same_rep(&ind));
    assert_eq!(to_canonical_json(&ly_rep_to_doc(&back)), text);
}

#[test]
fn rep_with_wrong_matrix_shape_is_rejected() {
    let text = r#"{
        "kind": "leibniz-rep",
        "algebra": {"kind":"leibniz","dim":2,"product":[[0,0,1,"1"]]},
        "dim_v": 2,
        "l": [[["0","0"],["1","0"]]],
        "r": [[["0","0"],["1","0"]],[["0","0"],["0","0"]]]
    }"#;
    let doc: RepDoc = serde_json::from_str(text).unwrap();
    let err = rep_from_doc(&doc, std::path::Path::new(".")).unwrap_err();
    assert!(err.to_string().contains("expected 2 matrices"), "{err}");
}
