use prelie_core::algebra::{check_morphism, check_representation, Representation};
use prelie_core::catalog;
use prelie_core::cochain::{are_cohomologous, coboundary, Cochain};
use prelie_core::linalg::{is_zero_vec, rank_kernel_image, unit, Matrix};
use prelie_core::xmod::{
    abelian_extension_from_2cocycle, canonical_extension, check_crossed_module,
    check_equivalence_witness, check_extension, induced_representation_with, random_rho,
    random_sections, t_map, t_map_with_sections, Extension,
};
use prelie_core::{Error, Field, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Q {
    Q::from_int(n)
}

#[test]
fn t_map_is_sound_on_every_extension() {
    for (name, e) in catalog::extensions() {
        let r = t_map(&e).unwrap_or_else(|err| panic!("{name}: {err}"));
        assert!(coboundary(&e.g, &e.v_rep, &r.theta).unwrap().is_zero(), "{name}");
        assert_eq!(r.theta.arity(), 3);
    }
    for e in [catalog::e_triv(), catalog::e_dbl()] {
        let r = t_map(&e).unwrap();
        assert!(r.theta.is_zero());
        assert!(r.is_trivial_class());
    }
}

#[test]
fn connecting_extension_has_the_hand_computed_cocycle() {
    let r = t_map(&catalog::e_conn()).unwrap();
    // θ(e1, e2, e2) = m1, and zero on the other canonical basis tuple
    assert_eq!(r.theta.eval_basis(&[0, 1, 1]), vec![q(1)]);
    assert_eq!(r.theta.eval_basis(&[1, 0, 1]), vec![q(-1)]);
    assert_eq!(r.theta.eval_basis(&[0, 1, 0]), vec![q(0)]);
    assert!(!r.is_trivial_class());
    let canonical = t_map(&canonical_extension(&catalog::e_conn().crossed_module()).unwrap()).unwrap();
    assert!(!canonical.is_trivial_class());
}

#[test]
fn sections_do_not_change_the_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (name, e) in catalog::extensions() {
        let base = t_map(&e).unwrap();
        let mut thetas = vec![base.theta.clone()];
        for _ in 0..20 {
            let (rho, sigma) = random_sections(&e, &mut rng);
            let r = t_map_with_sections(&e, rho, sigma).unwrap();
            assert_eq!(r.class_coordinates, base.class_coordinates, "{name}");
            thetas.push(r.theta);
        }
        for pair in thetas.windows(2) {
            assert!(
                are_cohomologous(&e.g, &e.v_rep, &pair[0], &pair[1]).unwrap().is_some(),
                "{name}"
            );
        }
    }
}

#[test]
fn equivalent_extensions_share_their_class() {
    for (name, w) in catalog::witnesses() {
        let a = t_map(&w.source).unwrap();
        let b = t_map(&w.target).unwrap();
        assert_eq!(a.class_coordinates, b.class_coordinates, "{name}");
    }
    let v = check_equivalence_witness(&catalog::negative_witness()).unwrap().unwrap_err();
    assert_eq!(v.axiom, "r ∘ i = i'");
}

#[test]
fn induced_representation_ignores_the_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for (name, e) in catalog::extensions() {
        let expected = e.v_rep.clone();
        let mut sections = vec![e.default_rho()];
        // a second deterministic section: shift by μ applied to the first basis vector of m
        if e.m.dim() > 0 && e.g.dim() > 0 {
            let mut h = Matrix::zeros(e.m.dim(), e.g.dim());
            h.set(0, 0, q(1));
            sections.push(e.default_rho().add(&e.mu.mul(&h)));
        }
        for _ in 0..10 {
            sections.push(random_rho(&e, &mut rng));
        }
        for rho in sections {
            let rep = induced_representation_with(&e, &rho).unwrap();
            assert_eq!(rep, expected, "{name}");
            assert_eq!(check_representation(&e.g, &rep).unwrap(), Ok(()));
        }
    }
}

#[test]
fn constructions_pass_their_verifiers() {
    for (name, x) in catalog::crossed_modules() {
        assert_eq!(check_crossed_module(&x).unwrap(), Ok(()), "{name}");
        let e = canonical_extension(&x).unwrap();
        assert_eq!(check_extension(&e).unwrap(), Ok(()), "{name}");
        // i(V) = ker μ is central: its elements square to zero
        for k in rank_kernel_image(&x.mu).kernel.vectors() {
            assert!(is_zero_vec(&x.m.mul(k, k)), "{name}");
        }
    }
    let bad = catalog::negative_crossed_module();
    assert!(check_crossed_module(&bad).unwrap().is_err());
    assert!(matches!(canonical_extension(&bad), Err(Error::InvalidInput(_))));
}

#[test]
fn extension_violations_are_named() {
    let v = check_extension(&catalog::negative_extension()).unwrap().unwrap_err();
    assert_eq!(v.axiom, "π is surjective");

    let mut e: Extension<Q> = catalog::e_dbl();
    e.v_rep = Representation::trivial(2, 2);
    let v = check_extension(&e).unwrap().unwrap_err();
    assert!(v.axiom.starts_with("induced"), "{}", v.axiom);

    // a nonzero product on i(V) is rejected before the crossed module axioms
    let mut e = catalog::trivial_extension(&catalog::idem(), &Representation::trivial(1, 1));
    e.m = catalog::idem();
    let v = check_extension(&e).unwrap().unwrap_err();
    assert_eq!(v.axiom, "i(V) has zero product");
}

#[test]
fn abelian_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for p in catalog::module_pairs().into_iter().filter(|p| p.algebra.dim() <= 2) {
        let (g, v) = (p.algebra.dim(), p.rep.carrier_dim());
        let plain = abelian_extension_from_2cocycle(&p.algebra, &p.rep, &Cochain::zero(2, g, v)).unwrap();
        let eta = Cochain::random(1, g, v, &mut rng);
        let omega = coboundary(&p.algebra, &p.rep, &eta).unwrap();
        let twisted = abelian_extension_from_2cocycle(&p.algebra, &p.rep, &omega).unwrap();
        let mut iso = Matrix::identity(g + v);
        for x in 0..g {
            for (b, c) in eta.eval_basis(&[x]).into_iter().enumerate() {
                iso.set(g + b, x, c);
            }
        }
        assert_eq!(check_morphism(&twisted.algebra, &plain.algebra, &iso).unwrap(), Ok(()), "{}", p.name);
        assert_eq!(
            check_morphism(&twisted.algebra, &p.algebra, &twisted.projection).unwrap(),
            Ok(())
        );
    }
    let a = catalog::affine();
    let rep = Representation::regular(&a);
    let non_cocycle = (0..8)
        .map(|c| Cochain::from_coordinates(2, 2, 2, unit(8, c)).unwrap())
        .find(|w| !coboundary(&a, &rep, w).unwrap().is_zero())
        .unwrap();
    assert!(matches!(
        abelian_extension_from_2cocycle(&a, &rep, &non_cocycle),
        Err(Error::NotACocycle(_))
    ));
}

#[test]
fn non_sections_are_rejected() {
    let e = catalog::e_dbl();
    let bad_rho = Matrix::zeros(e.n.dim(), e.g.dim());
    assert!(matches!(
        t_map_with_sections(&e, bad_rho, e.default_sigma()),
        Err(Error::InvalidInput(_))
    ));
}
