//! Named fixtures over `Q`. Every structure here is checked by its own
//! verifier when it is built; a fixture that fails its verifier panics.
//!
//! Negative fixtures (deliberately invalid inputs) live in the `negative_*`
//! functions and are not checked.

use crate::algebra::{check_representation, LieAlgebra, LieModule, PreLieAlgebra, Representation};
use crate::functors::{
    check_dendriform_xmod, check_rb_lie_xmod, DendriformAlgebra, DendriformCrossedModule,
    RotaBaxterLieCrossedModule,
};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Field;
use crate::xmod::{
    abelian_extension_from_2cocycle, canonical_extension, check_crossed_module,
    check_equivalence_witness, check_extension, ideal_inclusion_xmod, kernel_xmod, stabilize,
    CrossedModule, EquivalenceWitness, Extension,
};
use crate::cochain::Cochain;
use crate::Q;

fn q(n: i64) -> Q {
    Q::from_int(n)
}

fn admit<E: std::fmt::Display>(name: &str, verdict: std::result::Result<(), E>) {
    if let Err(v) = verdict {
        panic!("catalog fixture {name} fails its verifier: {v}");
    }
}

fn prelie(name: &str, dim: usize, entries: &[(usize, usize, usize, i64)]) -> PreLieAlgebra<Q> {
    let entries: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, q(c))).collect();
    PreLieAlgebra::from_entries(dim, &entries)
        .unwrap_or_else(|e| panic!("catalog algebra {name}: {e}"))
}

pub fn abelian(dim: usize) -> PreLieAlgebra<Q> {
    PreLieAlgebra::abelian(dim)
}

/// `e ∘ e = e`.
pub fn idem() -> PreLieAlgebra<Q> {
    prelie("idem", 1, &[(0, 0, 0, 1)])
}

/// `e1 ∘ e2 = e2`.
pub fn affine() -> PreLieAlgebra<Q> {
    prelie("affine", 2, &[(0, 1, 1, 1)])
}

/// `e1 ∘ e1 = e1`, `e1 ∘ e2 = e2`.
pub fn unital() -> PreLieAlgebra<Q> {
    prelie("unital", 2, &[(0, 0, 0, 1), (0, 1, 1, 1)])
}

/// `e1 ∘ e1 = e2`.
pub fn nil2() -> PreLieAlgebra<Q> {
    prelie("nil2", 2, &[(0, 0, 1, 1)])
}

/// `e1 ∘ e2 = e2`, `e1 ∘ e3 = 2 e3`.
pub fn diag3() -> PreLieAlgebra<Q> {
    prelie("diag3", 3, &[(0, 1, 1, 1), (0, 2, 2, 2)])
}

/// `e1 ∘ e1 = e2`, `e2 ∘ e1 = e1`: not pre-Lie.
pub fn negative_prelie_tensor() -> (usize, Vec<Q>) {
    let mut t = vec![q(0); 8];
    t[1] = q(1);
    t[4] = q(1);
    (2, t)
}

pub fn algebras() -> Vec<(&'static str, PreLieAlgebra<Q>)> {
    vec![
        ("abelian1", abelian(1)),
        ("abelian2", abelian(2)),
        ("abelian3", abelian(3)),
        ("idem", idem()),
        ("affine", affine()),
        ("unital", unital()),
        ("nil2", nil2()),
        ("diag3", diag3()),
    ]
}

/// A named algebra with a module over it.
#[derive(Debug, Clone)]
pub struct ModulePair {
    pub name: String,
    pub algebra: PreLieAlgebra<Q>,
    pub rep: Representation<Q>,
}

fn rep1(name: &str, a: &PreLieAlgebra<Q>, left: &[i64], right: &[i64]) -> Representation<Q> {
    let rep = Representation::new(
        a.dim(),
        1,
        left.iter().map(|&c| q(c)).collect(),
        right.iter().map(|&c| q(c)).collect(),
    )
    .unwrap_or_else(|e| panic!("catalog representation {name}: {e}"));
    admit(name, check_representation(a, &rep).expect("shape"));
    rep
}

/// All pairs with `dim g ≤ 3` and `dim V ≤ 2`.
pub fn module_pairs() -> Vec<ModulePair> {
    let mut out = Vec::new();
    for (name, a) in algebras() {
        for v in 1..=2 {
            out.push(ModulePair {
                name: format!("{name}/trivial{v}"),
                rep: Representation::trivial(a.dim(), v),
                algebra: a.clone(),
            });
        }
        if a.dim() <= 2 {
            let rep = Representation::regular(&a);
            admit(name, check_representation(&a, &rep).expect("shape"));
            out.push(ModulePair {
                name: format!("{name}/regular"),
                rep,
                algebra: a,
            });
        }
    }
    let a = idem();
    out.push(ModulePair {
        name: "idem/l2r0".into(),
        rep: rep1("idem/l2r0", &a, &[2], &[0]),
        algebra: a.clone(),
    });
    out.push(ModulePair {
        name: "idem/l-1r1".into(),
        rep: rep1("idem/l-1r1", &a, &[-1], &[1]),
        algebra: a,
    });
    let a = affine();
    out.push(ModulePair {
        name: "affine/l1".into(),
        rep: rep1("affine/l1", &a, &[1, 0], &[0, 0]),
        algebra: a,
    });
    out
}

pub fn module_pair(name: &str) -> ModulePair {
    module_pairs()
        .into_iter()
        .find(|p| p.name == name)
        .unwrap_or_else(|| panic!("no catalog module pair {name}"))
}

fn admit_xmod(name: &str, x: CrossedModule<Q>) -> CrossedModule<Q> {
    admit(name, check_crossed_module(&x).expect("shape"));
    x
}

/// Pre-Lie crossed modules.
pub fn crossed_modules() -> Vec<(&'static str, CrossedModule<Q>)> {
    let a = affine();
    let e2 = Subspace::new(2, vec![vec![q(0), q(1)]]).expect("independent");
    let projection = Matrix::from_rows(&[vec![q(1), q(0)]]).expect("rows");
    let list = vec![
        ("identity_affine", CrossedModule::identity(a.clone())),
        ("identity_abelian2", CrossedModule::identity(abelian(2))),
        ("identity_idem", CrossedModule::identity(idem())),
        (
            "module_affine_regular",
            CrossedModule::from_representation(a.clone(), Representation::regular(&a))
                .expect("shapes"),
        ),
        (
            "module_idem_l2r0",
            CrossedModule::from_representation(idem(), module_pair("idem/l2r0").rep)
                .expect("shapes"),
        ),
        ("ideal_affine_e2", ideal_inclusion_xmod(&a, &e2).expect("ideal")),
        (
            "kernel_affine_projection",
            kernel_xmod(&a, &abelian(1), &projection).expect("morphism"),
        ),
        ("connecting", e_conn().crossed_module()),
    ];
    list.into_iter().map(|(n, x)| (n, admit_xmod(n, x))).collect()
}

/// The identity crossed module on `affine` with one action entry changed.
pub fn negative_crossed_module() -> CrossedModule<Q> {
    let mut x = CrossedModule::identity(affine());
    x.action.left_tensor_mut()[0] = q(1);
    x
}

fn admit_ext(name: &str, e: Extension<Q>) -> Extension<Q> {
    admit(name, check_extension(&e).expect("shape"));
    e
}

/// `0 → V → V →0 g →id g → 0`.
pub fn trivial_extension<T: Field>(g: &PreLieAlgebra<T>, rep: &Representation<T>) -> Extension<T> {
    let (dg, v) = (g.dim(), rep.carrier_dim());
    Extension {
        g: g.clone(),
        v_rep: rep.clone(),
        m: PreLieAlgebra::abelian(v),
        n: g.clone(),
        i: Matrix::identity(v),
        mu: Matrix::zeros(dg, v),
        pi: Matrix::identity(dg),
        action: rep.clone(),
    }
}

/// `m = V ⊕ V` (zero product), `n = g ⋉ V`, `μ(v1, v2) = (0, v1)`,
/// `i(v) = (0, v)`, `π(x, u) = x`, `n` acting diagonally through `g`.
pub fn doubled_extension<T: Field>(g: &PreLieAlgebra<T>, rep: &Representation<T>) -> Extension<T> {
    let (dg, v) = (g.dim(), rep.carrier_dim());
    let zero = Cochain::zero(2, dg, v);
    let n = abelian_extension_from_2cocycle(g, rep, &zero)
        .expect("semidirect product")
        .algebra;
    let (dm, dn) = (2 * v, dg + v);
    let mut mu = Matrix::zeros(dn, dm);
    let mut i = Matrix::zeros(dm, v);
    let mut pi = Matrix::zeros(dg, dn);
    for b in 0..v {
        mu.set(dg + b, b, T::one());
        i.set(v + b, b, T::one());
    }
    for x in 0..dg {
        pi.set(x, x, T::one());
    }
    let mut left = vec![T::zero(); dn * dm * dm];
    let mut right = vec![T::zero(); dm * dn * dm];
    for x in 0..dg {
        for copy in 0..2 {
            for a in 0..v {
                let (src, off) = (copy * v + a, copy * v);
                let start = (x * dm + src) * dm + off;
                left[start..start + v].clone_from_slice(rep.left_basis(x, a));
                let start = (src * dn + x) * dm + off;
                right[start..start + v].clone_from_slice(rep.right_basis(a, x));
            }
        }
    }
    Extension {
        g: g.clone(),
        v_rep: rep.clone(),
        m: PreLieAlgebra::abelian(dm),
        n,
        i,
        mu,
        pi,
        action: Representation::new(dn, dm, left, right).expect("sized"),
    }
}

/// `r(v1, v2) = v2`, `s(x, u) = x`.
pub fn doubled_to_trivial<T: Field>(
    g: &PreLieAlgebra<T>,
    rep: &Representation<T>,
) -> EquivalenceWitness<T> {
    let (dg, v) = (g.dim(), rep.carrier_dim());
    let mut r = Matrix::zeros(v, 2 * v);
    for b in 0..v {
        r.set(b, v + b, T::one());
    }
    let mut s = Matrix::zeros(dg, dg + v);
    for x in 0..dg {
        s.set(x, x, T::one());
    }
    EquivalenceWitness {
        source: doubled_extension(g, rep),
        target: trivial_extension(g, rep),
        r,
        s,
    }
}

/// An extension of the 2-dim abelian algebra by the trivial 1-dim module
/// whose class is nonzero: `m = span(m1, m2)` with `e1 ∘_l m2 = m1`,
/// `n = span(e1, e2, w)` with `e2 ∘ e2 = w`, `μ(m2) = w`.
pub fn e_conn() -> Extension<Q> {
    let g = abelian(2);
    let n = prelie("e_conn/n", 3, &[(1, 1, 2, 1)]);
    let action = Representation::from_entries(3, 2, &[(0, 1, 0, q(1))], &[]).expect("sized");
    let e = Extension {
        v_rep: Representation::trivial(2, 1),
        m: abelian(2),
        n,
        i: Matrix::from_rows(&[vec![q(1)], vec![q(0)]]).expect("rows"),
        mu: Matrix::from_rows(&[vec![q(0), q(0)], vec![q(0), q(0)], vec![q(0), q(1)]])
            .expect("rows"),
        pi: Matrix::from_rows(&[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]).expect("rows"),
        action,
        g,
    };
    admit_ext("e_conn", e)
}

pub fn e_triv() -> Extension<Q> {
    let p = module_pair("affine/regular");
    admit_ext("e_triv", trivial_extension(&p.algebra, &p.rep))
}

pub fn e_dbl() -> Extension<Q> {
    let p = module_pair("affine/regular");
    admit_ext("e_dbl", doubled_extension(&p.algebra, &p.rep))
}

pub fn extensions() -> Vec<(&'static str, Extension<Q>)> {
    let idem_pair = module_pair("idem/l-1r1");
    let ab = module_pair("abelian2/trivial1");
    let list = vec![
        ("e_triv", e_triv()),
        ("e_dbl", e_dbl()),
        ("e_triv_idem", trivial_extension(&idem_pair.algebra, &idem_pair.rep)),
        ("e_dbl_idem", doubled_extension(&idem_pair.algebra, &idem_pair.rep)),
        ("e_dbl_abelian2", doubled_extension(&ab.algebra, &ab.rep)),
        ("e_conn", e_conn()),
        (
            "e_conn_stabilized",
            stabilize(&e_conn(), &Representation::trivial(2, 1)).expect("valid").0,
        ),
        (
            "canonical_connecting",
            canonical_extension(&e_conn().crossed_module()).expect("crossed module"),
        ),
        (
            "canonical_module_idem",
            canonical_extension(
                &CrossedModule::from_representation(idem(), module_pair("idem/l2r0").rep)
                    .expect("shapes"),
            )
            .expect("crossed module"),
        ),
    ];
    list.into_iter().map(|(n, e)| (n, admit_ext(n, e))).collect()
}

pub fn witnesses() -> Vec<(&'static str, EquivalenceWitness<Q>)> {
    let p = module_pair("affine/regular");
    let idem_pair = module_pair("idem/l-1r1");
    let list = vec![
        (
            "identity_e_dbl",
            EquivalenceWitness {
                source: e_dbl(),
                target: e_dbl(),
                r: Matrix::identity(4),
                s: Matrix::identity(4),
            },
        ),
        ("e_dbl_to_e_triv", doubled_to_trivial(&p.algebra, &p.rep)),
        ("e_dbl_idem_to_e_triv_idem", doubled_to_trivial(&idem_pair.algebra, &idem_pair.rep)),
        (
            "e_conn_stabilized_to_e_conn",
            stabilize(&e_conn(), &Representation::trivial(2, 1)).expect("valid").1,
        ),
        (
            "e_dbl_stabilized_to_e_dbl",
            stabilize(&e_dbl(), &p.rep).expect("valid").1,
        ),
    ];
    list.into_iter()
        .map(|(n, w)| {
            admit(n, check_equivalence_witness(&w).expect("shape"));
            (n, w)
        })
        .collect()
}

/// `E_dbl → E_dbl` swapping the two copies of `V`; breaks `r ∘ i = i'`.
pub fn negative_witness() -> EquivalenceWitness<Q> {
    let mut r = Matrix::zeros(4, 4);
    for b in 0..2 {
        r.set(b, 2 + b, q(1));
        r.set(2 + b, b, q(1));
    }
    EquivalenceWitness {
        source: e_dbl(),
        target: e_dbl(),
        r,
        s: Matrix::identity(4),
    }
}

/// `E_triv` with `π` replaced by zero.
pub fn negative_extension() -> Extension<Q> {
    let mut e = e_triv();
    e.pi = Matrix::zeros(2, 2);
    e
}

fn lie(dim: usize, entries: &[(usize, usize, usize, i64)]) -> LieAlgebra<Q> {
    let entries: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, q(c))).collect();
    LieAlgebra::from_entries(dim, &entries).expect("Lie algebra")
}

/// `[e1, e2] = e2`.
pub fn affine_lie() -> LieAlgebra<Q> {
    lie(2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

fn adjoint(l: &LieAlgebra<Q>) -> LieModule<Q> {
    LieModule::new(l.dim(), l.dim(), l.tensor().to_vec()).expect("sized")
}

fn projection_e1() -> Matrix<Q> {
    Matrix::from_rows(&[vec![q(1), q(0)], vec![q(0), q(0)]]).expect("rows")
}

fn rb_one_dim(t_m: i64) -> RotaBaxterLieCrossedModule<Q> {
    RotaBaxterLieCrossedModule {
        m: LieAlgebra::abelian(1),
        n: affine_lie(),
        t_m: Matrix::from_rows(&[vec![q(t_m)]]).expect("rows"),
        t_n: projection_e1(),
        mu: Matrix::zeros(2, 1),
        rho: LieModule::new(2, 1, vec![q(1), q(0)]).expect("sized"),
    }
}

pub fn rb_fixtures() -> Vec<(&'static str, RotaBaxterLieCrossedModule<Q>)> {
    let l = affine_lie();
    let list = vec![
        (
            "rb_zero",
            RotaBaxterLieCrossedModule {
                m: l.clone(),
                n: l.clone(),
                t_m: Matrix::zeros(2, 2),
                t_n: Matrix::zeros(2, 2),
                mu: Matrix::identity(2),
                rho: adjoint(&l),
            },
        ),
        (
            "rb_abelian",
            RotaBaxterLieCrossedModule {
                m: LieAlgebra::abelian(2),
                n: LieAlgebra::abelian(2),
                t_m: Matrix::from_rows(&[vec![q(1), q(2)], vec![q(3), q(4)]]).expect("rows"),
                t_n: Matrix::from_rows(&[vec![q(1), q(2)], vec![q(3), q(4)]]).expect("rows"),
                mu: Matrix::identity(2),
                rho: LieModule::new(2, 2, vec![q(0); 8]).expect("sized"),
            },
        ),
        (
            "rb_projection",
            RotaBaxterLieCrossedModule {
                m: l.clone(),
                n: l.clone(),
                t_m: projection_e1(),
                t_n: projection_e1(),
                mu: Matrix::identity(2),
                rho: adjoint(&l),
            },
        ),
        ("rb_module", rb_one_dim(0)),
    ];
    list.into_iter()
        .map(|(n, x)| {
            admit(n, check_rb_lie_xmod(&x).expect("shape"));
            (n, x)
        })
        .collect()
}

/// `T = id` on `[e1, e2] = e2`: fails the Rota-Baxter identity.
pub fn negative_rb_input() -> RotaBaxterLieCrossedModule<Q> {
    let l = affine_lie();
    RotaBaxterLieCrossedModule {
        m: l.clone(),
        n: l.clone(),
        t_m: Matrix::identity(2),
        t_n: Matrix::identity(2),
        mu: Matrix::identity(2),
        rho: adjoint(&l),
    }
}

/// Passes every encoded axiom, but the converted action is not a
/// representation.
pub fn negative_rb_output() -> RotaBaxterLieCrossedModule<Q> {
    rb_one_dim(1)
}

fn dend(dim: usize, succ: &[(usize, usize, usize, i64)], prec: &[(usize, usize, usize, i64)]) -> DendriformAlgebra<Q> {
    let build = |entries: &[(usize, usize, usize, i64)]| {
        let mut t = vec![q(0); dim * dim * dim];
        for &(i, j, k, c) in entries {
            t[(i * dim + j) * dim + k] = q(c);
        }
        t
    };
    DendriformAlgebra::new(dim, build(succ), build(prec)).expect("sized")
}

fn dend_one() -> DendriformCrossedModule<Q> {
    DendriformCrossedModule {
        m: dend(1, &[(0, 0, 0, 1)], &[]),
        n: dend(1, &[(0, 0, 0, 1)], &[]),
        mu: Matrix::identity(1),
        succ: Representation::new(1, 1, vec![q(1)], vec![q(1)]).expect("sized"),
        prec: Representation::trivial(1, 1),
    }
}

pub fn dendriform_fixtures() -> Vec<(&'static str, DendriformCrossedModule<Q>)> {
    let list = vec![
        (
            "dend_zero",
            DendriformCrossedModule {
                m: DendriformAlgebra::zero(2),
                n: DendriformAlgebra::zero(2),
                mu: Matrix::identity(2),
                succ: Representation::trivial(2, 2),
                prec: Representation::trivial(2, 2),
            },
        ),
        ("dend_one", dend_one()),
        (
            "dend_ideal",
            DendriformCrossedModule {
                m: DendriformAlgebra::zero(1),
                n: dend(2, &[(0, 0, 0, 1), (0, 1, 1, 1)], &[]),
                mu: Matrix::from_rows(&[vec![q(0)], vec![q(1)]]).expect("rows"),
                succ: Representation::new(2, 1, vec![q(1), q(0)], vec![q(0), q(0)]).expect("sized"),
                prec: Representation::trivial(2, 1),
            },
        ),
    ];
    list.into_iter()
        .map(|(n, x)| {
            admit(n, check_dendriform_xmod(&x).expect("shape"));
            (n, x)
        })
        .collect()
}

/// `N` with `e1 ≻ e2 = e2` only, which is not dendriform.
pub fn negative_dendriform_input() -> DendriformCrossedModule<Q> {
    DendriformCrossedModule {
        m: DendriformAlgebra::zero(1),
        n: dend(2, &[(0, 1, 1, 1)], &[]),
        mu: Matrix::from_rows(&[vec![q(0)], vec![q(1)]]).expect("rows"),
        succ: Representation::new(2, 1, vec![q(1), q(0)], vec![q(0), q(0)]).expect("sized"),
        prec: Representation::trivial(2, 1),
    }
}

/// `dend_one` with `x ≻ u` doubled: the algebras are fine, the Peiffer
/// identity of the output is not.
pub fn negative_dendriform_output() -> DendriformCrossedModule<Q> {
    let mut x = dend_one();
    x.succ.left_tensor_mut()[0] = q(2);
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_admit() {
        assert!(module_pairs().len() >= 20);
        assert_eq!(crossed_modules().len(), 8);
        assert_eq!(extensions().len(), 9);
        assert_eq!(witnesses().len(), 5);
        assert_eq!(rb_fixtures().len(), 4);
        assert_eq!(dendriform_fixtures().len(), 3);
    }

    #[test]
    fn negatives_fail() {
        let (dim, t) = negative_prelie_tensor();
        assert!(crate::algebra::check_prelie(dim, &t).unwrap().is_err());
        assert!(check_crossed_module(&negative_crossed_module()).unwrap().is_err());
        assert!(check_extension(&negative_extension()).unwrap().is_err());
        assert!(check_equivalence_witness(&negative_witness()).unwrap().is_err());
        assert!(check_rb_lie_xmod(&negative_rb_input()).unwrap().is_err());
        assert!(check_dendriform_xmod(&negative_dendriform_input()).unwrap().is_err());
    }
}
