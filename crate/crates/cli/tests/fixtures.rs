//! The JSON fixtures are the serialized catalog. Set `PRELIE_BLESS=1` to
//! rewrite them after an intentional catalog change.

use std::collections::BTreeSet;
use std::fs;

use prelie_cli::document::{document_to_value, render};
use prelie_cli::fixtures::{catalog_documents, fixtures_dir};
use prelie_cli::{parse_document, serialize_document, Document, DocumentError};
use prelie_core::algebra::{PreLieAlgebra, Representation};
use prelie_core::catalog;
use prelie_core::cochain::Cochain;
use prelie_core::{Field, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CATALOG_DIRS: [&str; 8] = [
    "prelie",
    "lie",
    "representation",
    "crossed_module",
    "extension",
    "rblie_xmod",
    "dendriform_xmod",
    "cochain",
];

#[test]
fn fixture_files_are_the_serialized_catalog() {
    let bless = std::env::var_os("PRELIE_BLESS").is_some();
    let dir = fixtures_dir();
    let docs = catalog_documents();
    for (rel, doc) in &docs {
        let path = dir.join(rel);
        let expected = serialize_document(doc);
        if bless {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &expected).unwrap();
        }
        let found = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{rel}: {e}"));
        assert_eq!(found, expected, "{rel} is stale");
        assert_eq!(&parse_document(&found).unwrap(), doc, "{rel}");
    }
    let listed: BTreeSet<String> = docs.iter().map(|(p, _)| p.clone()).collect();
    for sub in CATALOG_DIRS {
        for entry in fs::read_dir(dir.join(sub)).unwrap() {
            let name = format!("{sub}/{}", entry.unwrap().file_name().to_string_lossy());
            assert!(listed.contains(&name), "{name} is not part of the catalog");
        }
    }
}

#[test]
fn serialize_then_parse_is_the_identity() {
    for (rel, doc) in catalog_documents() {
        let text = serialize_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc, "{rel}");
        assert_eq!(serialize_document(&back), text, "{rel}");
    }
}

fn input(name: &str) -> String {
    fs::read_to_string(fixtures_dir().join("input").join(name)).unwrap()
}

#[test]
fn documented_inputs() {
    assert_eq!(
        parse_document(&input("idem.json")).unwrap(),
        Document::PreLie(catalog::idem())
    );
    assert_eq!(
        parse_document(&input("abelian2_unversioned.json")).unwrap(),
        Document::PreLie(catalog::abelian(2))
    );
    assert_eq!(
        parse_document(&input("zero_denominator.json")).unwrap_err(),
        DocumentError::Value {
            pointer: "/product/0/3".into(),
            message: "zero denominator in \"1/0\"".into()
        }
    );
    assert!(matches!(
        parse_document(&input("malformed.json")).unwrap_err(),
        DocumentError::Parse(_)
    ));
    match parse_document(&input("index_out_of_range.json")).unwrap_err() {
        DocumentError::Schema { pointer, .. } => assert_eq!(pointer, "/product/1/2"),
        other => panic!("{other}"),
    }
    match parse_document(&input("unknown_version.json")).unwrap_err() {
        DocumentError::Schema { pointer, .. } => assert_eq!(pointer, "/format_version"),
        other => panic!("{other}"),
    }
}

#[test]
fn schema_errors_point_at_the_offending_value() {
    let cases = [
        (r#"[1, 2]"#, ""),
        (r#"{"dim": 1}"#, ""),
        (r#"{"kind": "group", "dim": 1}"#, "/kind"),
        (r#"{"kind": "prelie", "dim": -1}"#, "/dim"),
        (r#"{"kind": "prelie", "dim": 1, "extra": 0}"#, "/extra"),
        (r#"{"kind": "prelie", "dim": 1, "product": [[1, 1, "1"]]}"#, "/product/0"),
        (r#"{"kind": "prelie", "dim": 1, "product": [[1, 1, 1, 0.5]]}"#, "/product/0/3"),
        (r#"{"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "x/2"]]}"#, "/product/0/3"),
        (r#"{"kind": "representation", "algebra": {"dim": 1}, "dim": 1, "left": [[1, 2, 1, "1"]]}"#, "/left/0/1"),
        (r#"{"kind": "crossed_module", "m": {"dim": 1}, "n": {"dim": 1}, "mu": [], "action": {"up": []}}"#, "/action/up"),
        (r#"{"kind": "cochain", "arity": 3, "algebra_dim": 2, "module_dim": 1, "values": [[1, 1, 2, 1, "1"]]}"#, "/values/0"),
        (r#"{"kind": "cochain", "arity": 0, "algebra_dim": 2, "module_dim": 1}"#, "/arity"),
    ];
    for (text, pointer) in cases {
        match parse_document(text) {
            Err(DocumentError::Schema { pointer: p, .. }) => assert_eq!(p, pointer, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn cochain_values_follow_the_alternating_convention() {
    let doc = parse_document(
        r#"{"kind": "cochain", "arity": 3, "algebra_dim": 3, "module_dim": 1,
            "values": [[2, 1, 3, 1, "2"]]}"#,
    )
    .unwrap();
    let Document::Cochain(f) = doc else { panic!() };
    assert_eq!(f.eval_basis(&[0, 1, 2]), vec![Q::from_int(-2)]);
    assert_eq!(f.eval_basis(&[1, 0, 2]), vec![Q::from_int(2)]);
    let text = render(&document_to_value(&Document::Cochain(f)));
    assert!(text.contains(r#"[1, 2, 3, 1, "-2"]"#), "{text}");
}

fn small_tensor(len: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-3i64..=3, 1i64..=3), len)
        .prop_map(|v| v.into_iter().map(|(p, q)| Q::from_int(p) / Q::from_int(q)).collect())
}

proptest! {
    #[test]
    fn random_tensors_round_trip(
        (g, v, product, left, right) in (1usize..4, 1usize..3).prop_flat_map(|(g, v)| {
            (Just(g), Just(v), small_tensor(g * g * g), small_tensor(g * v * v), small_tensor(g * v * v))
        })
    ) {
        let algebra = PreLieAlgebra::from_tensor_unchecked(g, product).unwrap();
        let rep = Representation::new(g, v, left, right).unwrap();
        let doc = Document::Representation { algebra, rep };
        prop_assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
    }

    #[test]
    fn random_cochains_round_trip(arity in 1usize..5, g in 1usize..4, v in 1usize..3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let doc = Document::Cochain(Cochain::<Q>::random(arity, g, v, &mut rng));
        prop_assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
    }
}
