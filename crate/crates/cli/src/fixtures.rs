//! The fixture catalog as documents, keyed by their path under `fixtures/`.
//! The JSON files in that directory are the serialized form of this list.

use std::path::PathBuf;

use prelie_core::algebra::{PreLieAlgebra, Representation};
use prelie_core::catalog;
use prelie_core::cochain::{coboundary, Cochain};
use prelie_core::linalg::unit;
use prelie_core::{Field, Q};

use crate::document::Document;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

fn file_name(name: &str) -> String {
    name.replace('/', "_")
}

/// Cochains on `affine` with its regular module: a coboundary, zero, and the
/// unit cochain `f(e1, e1) = v1`, which is not a coboundary.
pub fn cochains() -> Vec<(&'static str, Cochain<Q>)> {
    let a = catalog::affine();
    let rep = Representation::regular(&a);
    let beta = Cochain::from_coordinates(
        1,
        2,
        2,
        [1, 2, 0, -1].into_iter().map(Q::from_int).collect(),
    )
    .expect("sized");
    vec![
        ("affine_regular_coboundary", coboundary(&a, &rep, &beta).expect("shapes")),
        ("affine_regular_zero", Cochain::zero(2, 2, 2)),
        (
            "affine_regular_unit",
            Cochain::from_coordinates(2, 2, 2, unit(8, 0)).expect("sized"),
        ),
    ]
}

pub fn catalog_documents() -> Vec<(String, Document)> {
    let mut out = Vec::new();
    let mut push = |dir: &str, name: &str, doc: Document| {
        out.push((format!("{dir}/{}.json", file_name(name)), doc));
    };
    for (name, a) in catalog::algebras() {
        push("prelie", name, Document::PreLie(a));
    }
    let (dim, tensor) = catalog::negative_prelie_tensor();
    push(
        "prelie",
        "negative",
        Document::PreLie(PreLieAlgebra::from_tensor_unchecked(dim, tensor).expect("sized")),
    );
    push("lie", "affine", Document::Lie(catalog::affine_lie()));
    for p in catalog::module_pairs() {
        push(
            "representation",
            &p.name,
            Document::Representation {
                algebra: p.algebra,
                rep: p.rep,
            },
        );
    }
    for (name, x) in catalog::crossed_modules() {
        push("crossed_module", name, Document::CrossedModule(x));
    }
    push("crossed_module", "negative", Document::CrossedModule(catalog::negative_crossed_module()));
    for (name, e) in catalog::extensions() {
        push("extension", name, Document::Extension(e));
    }
    push("extension", "negative", Document::Extension(catalog::negative_extension()));
    for (name, x) in catalog::rb_fixtures() {
        push("rblie_xmod", name, Document::RbLieXmod(x));
    }
    push("rblie_xmod", "negative_input", Document::RbLieXmod(catalog::negative_rb_input()));
    push("rblie_xmod", "negative_output", Document::RbLieXmod(catalog::negative_rb_output()));
    for (name, x) in catalog::dendriform_fixtures() {
        push("dendriform_xmod", name, Document::DendriformXmod(x));
    }
    push(
        "dendriform_xmod",
        "negative_input",
        Document::DendriformXmod(catalog::negative_dendriform_input()),
    );
    push(
        "dendriform_xmod",
        "negative_output",
        Document::DendriformXmod(catalog::negative_dendriform_output()),
    );
    for (name, f) in cochains() {
        push("cochain", name, Document::Cochain(f));
    }
    out
}
