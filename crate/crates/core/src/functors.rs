//! Conversions between flavors of crossed modules: pre-Lie to Lie,
//! Rota-Baxter Lie to pre-Lie, and dendriform to pre-Lie.
//!
//! Inputs are validated against the axioms encoded here; every output is
//! certified by the target verifier before it is returned. An input that
//! passes validation but yields an invalid output is reported as
//! [`Error::OutputCheckFailed`].

use crate::algebra::{
    check_lie_module, check_prelie, expect_eq, subadjacent_lie, LieAlgebra, LieModule,
    PreLieAlgebra, Representation, Verdict,
};
use crate::error::{Error, Result};
use crate::linalg::{add, sub, unit, Matrix};
use crate::scalar::Field;
use crate::xmod::{check_crossed_module, CrossedModule};

#[derive(Debug, Clone, PartialEq)]
pub struct LieCrossedModule<T> {
    pub m: LieAlgebra<T>,
    pub n: LieAlgebra<T>,
    pub mu: Matrix<T>,
    /// `n` acting on the space of `m`.
    pub action: LieModule<T>,
}

fn lie_shape<T: Field>(
    m: &LieAlgebra<T>,
    n: &LieAlgebra<T>,
    mu: &Matrix<T>,
    action: &LieModule<T>,
) -> Result<()> {
    if mu.rows() != n.dim() || mu.cols() != m.dim() {
        return Err(Error::Shape("mu does not map m to n".into()));
    }
    if action.algebra_dim() != n.dim() || action.carrier_dim() != m.dim() {
        return Err(Error::Shape("action does not match (n, m)".into()));
    }
    Ok(())
}

/// Lie axioms of `m` and `n`, `μ` a morphism, `▷` a module action by
/// derivations, `μ(x ▷ u) = [x, μu]` and `μ(u) ▷ v = [u, v]`.
pub fn check_lie_crossed_module<T: Field>(x: &LieCrossedModule<T>) -> Result<Verdict<T>> {
    lie_shape(&x.m, &x.n, &x.mu, &x.action)?;
    Ok(lie_crossed_axioms(x))
}

fn lie_crossed_axioms<T: Field>(x: &LieCrossedModule<T>) -> Verdict<T> {
    x.m.check()?;
    x.n.check()?;
    check_lie_module(&x.n, &x.action).expect("shape checked")?;
    let (dm, dn) = (x.m.dim(), x.n.dim());
    for a in 0..dm {
        for b in 0..dm {
            let (u, v) = (unit(dm, a), unit(dm, b));
            let uv = x.m.bracket(&u, &v);
            expect_eq(
                "μ[u, v] = [μu, μv]",
                &[a, b],
                x.mu.apply(&uv),
                x.n.bracket(&x.mu.apply(&u), &x.mu.apply(&v)),
            )?;
            expect_eq(
                "μ(u) ▷ v = [u, v]",
                &[a, b],
                x.action.act(&x.mu.apply(&u), &v),
                uv.clone(),
            )?;
            for i in 0..dn {
                let y = unit(dn, i);
                expect_eq(
                    "x ▷ [u, v] = [x ▷ u, v] + [u, x ▷ v]",
                    &[i, a, b],
                    x.action.act(&y, &uv),
                    add(
                        &x.m.bracket(&x.action.act(&y, &u), &v),
                        &x.m.bracket(&u, &x.action.act(&y, &v)),
                    ),
                )?;
            }
        }
    }
    for i in 0..dn {
        for a in 0..dm {
            let (y, u) = (unit(dn, i), unit(dm, a));
            expect_eq(
                "μ(x ▷ u) = [x, μu]",
                &[i, a],
                x.mu.apply(&x.action.act(&y, &u)),
                x.n.bracket(&y, &x.mu.apply(&u)),
            )?;
        }
    }
    Ok(())
}

fn require<T: Field>(verdict: Result<Verdict<T>>, what: &str) -> Result<()> {
    match verdict? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::InvalidInput(format!("{what}: {v}"))),
    }
}

fn certify<T: Field>(verdict: Result<Verdict<T>>, what: &str) -> Result<()> {
    match verdict? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::OutputCheckFailed(format!("{what}: {v}"))),
    }
}

/// Commutator Lie algebras, the same `μ`, and `x ▷ u = x ∘_l u − u ∘_r x`.
pub fn prelie_to_lie_xmod<T: Field>(x: &CrossedModule<T>) -> Result<LieCrossedModule<T>> {
    require(Ok(x.m.check()), "m is not pre-Lie")?;
    require(Ok(x.n.check()), "n is not pre-Lie")?;
    require(check_crossed_module(x), "not a crossed module")?;
    let (dm, dn) = (x.m.dim(), x.n.dim());
    let mut tensor = Vec::with_capacity(dn * dm * dm);
    for i in 0..dn {
        for a in 0..dm {
            tensor.extend(sub(x.action.left_basis(i, a), x.action.right_basis(a, i)));
        }
    }
    let out = LieCrossedModule {
        m: subadjacent_lie(&x.m),
        n: subadjacent_lie(&x.n),
        mu: x.mu.clone(),
        action: LieModule::new(dn, dm, tensor)?,
    };
    certify(check_lie_crossed_module(&out), "Lie crossed module")?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RotaBaxterLieCrossedModule<T> {
    pub m: LieAlgebra<T>,
    pub n: LieAlgebra<T>,
    pub t_m: Matrix<T>,
    pub t_n: Matrix<T>,
    pub mu: Matrix<T>,
    /// `ρ`: `n` acting on the space of `m`.
    pub rho: LieModule<T>,
}

/// Weight-zero Rota-Baxter identity `[Tx, Ty] = T([Tx, y] + [x, Ty])`.
pub fn check_rota_baxter<T: Field>(l: &LieAlgebra<T>, t: &Matrix<T>) -> Result<Verdict<T>> {
    let d = l.dim();
    if t.rows() != d || t.cols() != d {
        return Err(Error::Shape("Rota-Baxter operator must be square of the algebra's size".into()));
    }
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit(d, i), unit(d, j));
            let (tx, ty) = (t.apply(&x), t.apply(&y));
            let lhs = l.bracket(&tx, &ty);
            let rhs = t.apply(&add(&l.bracket(&tx, &y), &l.bracket(&x, &ty)));
            if let Err(v) = expect_eq("[Tx, Ty] = T([Tx, y] + [x, Ty])", &[i, j], lhs, rhs) {
                return Ok(Err(v));
            }
        }
    }
    Ok(Ok(()))
}

/// The encoded input axioms: Rota-Baxter identities on `m` and `n`,
/// `μ T_m = T_n μ`, and the underlying Lie crossed module.
pub fn check_rb_lie_xmod<T: Field>(x: &RotaBaxterLieCrossedModule<T>) -> Result<Verdict<T>> {
    lie_shape(&x.m, &x.n, &x.mu, &x.rho)?;
    if let Err(v) = check_rota_baxter(&x.m, &x.t_m)? {
        return Ok(Err(v));
    }
    if let Err(v) = check_rota_baxter(&x.n, &x.t_n)? {
        return Ok(Err(v));
    }
    let lhs = x.mu.mul(&x.t_m);
    let rhs = x.t_n.mul(&x.mu);
    for c in 0..lhs.cols() {
        if let Err(v) = expect_eq("μ T_m = T_n μ", &[c], lhs.column(c), rhs.column(c)) {
            return Ok(Err(v));
        }
    }
    check_lie_crossed_module(&LieCrossedModule {
        m: x.m.clone(),
        n: x.n.clone(),
        mu: x.mu.clone(),
        action: x.rho.clone(),
    })
}

/// `x ∘ y = [T x, y]` on both algebras, `x ∘_l u = ρ(T_n x) u`,
/// `u ∘_r x = −ρ(x)(T_m u)`.
pub fn rblie_to_prelie_xmod<T: Field>(x: &RotaBaxterLieCrossedModule<T>) -> Result<CrossedModule<T>> {
    require(check_rb_lie_xmod(x), "not a Rota-Baxter Lie crossed module")?;
    let (dm, dn) = (x.m.dim(), x.n.dim());
    let rb_product = |l: &LieAlgebra<T>, t: &Matrix<T>| {
        let d = l.dim();
        let mut out = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                out.extend(l.bracket(&t.column(i), &unit(d, j)));
            }
        }
        out
    };
    let m = PreLieAlgebra::from_tensor_unchecked(dm, rb_product(&x.m, &x.t_m))?;
    let n = PreLieAlgebra::from_tensor_unchecked(dn, rb_product(&x.n, &x.t_n))?;
    let mut left = Vec::with_capacity(dn * dm * dm);
    for i in 0..dn {
        let tx = x.t_n.column(i);
        for a in 0..dm {
            left.extend(x.rho.act(&tx, &unit(dm, a)));
        }
    }
    let mut right = Vec::with_capacity(dm * dn * dm);
    for a in 0..dm {
        let tu = x.t_m.column(a);
        for i in 0..dn {
            right.extend(x.rho.act(&unit(dn, i), &tu).into_iter().map(|c| -c));
        }
    }
    let out = CrossedModule::new(m, n, x.mu.clone(), Representation::new(dn, dm, left, right)?)?;
    certify_prelie_xmod(&out)?;
    Ok(out)
}

fn certify_prelie_xmod<T: Field>(x: &CrossedModule<T>) -> Result<()> {
    certify(check_prelie(x.m.dim(), x.m.tensor()), "m is not pre-Lie")?;
    certify(check_prelie(x.n.dim(), x.n.tensor()), "n is not pre-Lie")?;
    certify(check_crossed_module(x), "pre-Lie crossed module")
}

/// Two products `≻`, `≺` with tensors laid out like a pre-Lie product.
#[derive(Debug, Clone, PartialEq)]
pub struct DendriformAlgebra<T> {
    dim: usize,
    succ: Vec<T>,
    prec: Vec<T>,
}

impl<T: Field> DendriformAlgebra<T> {
    pub fn new(dim: usize, succ: Vec<T>, prec: Vec<T>) -> Result<Self> {
        let size = dim * dim * dim;
        if succ.len() != size || prec.len() != size {
            return Err(Error::Shape(format!("dendriform tensors need {size} entries")));
        }
        Ok(Self { dim, succ, prec })
    }

    pub fn zero(dim: usize) -> Self {
        let size = dim * dim * dim;
        Self {
            dim,
            succ: vec![T::zero(); size],
            prec: vec![T::zero(); size],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn succ_tensor(&self) -> &[T] {
        &self.succ
    }

    pub fn prec_tensor(&self) -> &[T] {
        &self.prec
    }

    fn as_algebras(&self) -> (PreLieAlgebra<T>, PreLieAlgebra<T>) {
        (
            PreLieAlgebra::from_tensor_unchecked(self.dim, self.succ.clone()).expect("sized"),
            PreLieAlgebra::from_tensor_unchecked(self.dim, self.prec.clone()).expect("sized"),
        )
    }

    pub fn succ(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.as_algebras().0.mul(x, y)
    }

    pub fn prec(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.as_algebras().1.mul(x, y)
    }

    /// `x ∘ y = x ≻ y − y ≺ x`.
    pub fn prelie(&self) -> PreLieAlgebra<T> {
        let (s, p) = self.as_algebras();
        let d = self.dim;
        let mut out = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                out.extend(sub(s.mul_basis(i, j), p.mul_basis(j, i)));
            }
        }
        PreLieAlgebra::from_tensor_unchecked(d, out).expect("sized")
    }

    /// `(x≺y)≺z = x≺(y≺z + y≻z)`, `(x≻y)≺z = x≻(y≺z)`,
    /// `(x≺y + x≻y)≻z = x≻(y≻z)`.
    pub fn check(&self) -> Verdict<T> {
        let (s, p) = self.as_algebras();
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (unit(d, i), unit(d, j), unit(d, k));
                    expect_eq(
                        "(x≺y)≺z = x≺(y≺z + y≻z)",
                        &[i, j, k],
                        p.mul(&p.mul(&x, &y), &z),
                        p.mul(&x, &add(&p.mul(&y, &z), &s.mul(&y, &z))),
                    )?;
                    expect_eq(
                        "(x≻y)≺z = x≻(y≺z)",
                        &[i, j, k],
                        p.mul(&s.mul(&x, &y), &z),
                        s.mul(&x, &p.mul(&y, &z)),
                    )?;
                    expect_eq(
                        "(x≺y + x≻y)≻z = x≻(y≻z)",
                        &[i, j, k],
                        s.mul(&add(&p.mul(&x, &y), &s.mul(&x, &y)), &z),
                        s.mul(&x, &s.mul(&y, &z)),
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// Dendriform algebras `m`, `n`, a map `μ` and the four mixed products,
/// stored as two representations of `n` on `m`: `succ` holds `x ≻ u` (left)
/// and `u ≻ x` (right), `prec` holds `x ≺ u` and `u ≺ x`.
#[derive(Debug, Clone, PartialEq)]
pub struct DendriformCrossedModule<T> {
    pub m: DendriformAlgebra<T>,
    pub n: DendriformAlgebra<T>,
    pub mu: Matrix<T>,
    pub succ: Representation<T>,
    pub prec: Representation<T>,
}

/// Dendriform axioms on `m` and `n` and `μ` preserving both products.
pub fn check_dendriform_xmod<T: Field>(x: &DendriformCrossedModule<T>) -> Result<Verdict<T>> {
    let (dm, dn) = (x.m.dim(), x.n.dim());
    if x.mu.rows() != dn || x.mu.cols() != dm {
        return Err(Error::Shape("mu does not map m to n".into()));
    }
    for rep in [&x.succ, &x.prec] {
        if rep.algebra_dim() != dn || rep.carrier_dim() != dm {
            return Err(Error::Shape("mixed products do not match (n, m)".into()));
        }
    }
    Ok(dendriform_axioms(x))
}

fn dendriform_axioms<T: Field>(x: &DendriformCrossedModule<T>) -> Verdict<T> {
    x.m.check()?;
    x.n.check()?;
    let dm = x.m.dim();
    for a in 0..dm {
        for b in 0..dm {
            let (u, v) = (unit(dm, a), unit(dm, b));
            let (mu_u, mu_v) = (x.mu.apply(&u), x.mu.apply(&v));
            expect_eq(
                "μ(u ≻ v) = μu ≻ μv",
                &[a, b],
                x.mu.apply(&x.m.succ(&u, &v)),
                x.n.succ(&mu_u, &mu_v),
            )?;
            expect_eq(
                "μ(u ≺ v) = μu ≺ μv",
                &[a, b],
                x.mu.apply(&x.m.prec(&u, &v)),
                x.n.prec(&mu_u, &mu_v),
            )?;
        }
    }
    Ok(())
}

/// `x ∘ y = x ≻ y − y ≺ x` on both algebras, `x ∘_l u = x ≻ u − u ≺ x`,
/// `u ∘_r x = u ≻ x − x ≺ u`.
pub fn dendriform_to_prelie_xmod<T: Field>(x: &DendriformCrossedModule<T>) -> Result<CrossedModule<T>> {
    require(check_dendriform_xmod(x), "not a dendriform crossed module")?;
    let (dm, dn) = (x.m.dim(), x.n.dim());
    let mut left = Vec::with_capacity(dn * dm * dm);
    for i in 0..dn {
        for a in 0..dm {
            left.extend(sub(x.succ.left_basis(i, a), x.prec.right_basis(a, i)));
        }
    }
    let mut right = Vec::with_capacity(dm * dn * dm);
    for a in 0..dm {
        for i in 0..dn {
            right.extend(sub(x.succ.right_basis(a, i), x.prec.left_basis(i, a)));
        }
    }
    let out = CrossedModule::new(
        x.m.prelie(),
        x.n.prelie(),
        x.mu.clone(),
        Representation::new(dn, dm, left, right)?,
    )?;
    certify_prelie_xmod(&out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn affine_lie() -> LieAlgebra<Q> {
        LieAlgebra::from_entries(2, &[(0, 1, 1, q(1)), (1, 0, 1, q(-1))]).unwrap()
    }

    fn adjoint(l: &LieAlgebra<Q>) -> LieModule<Q> {
        LieModule::new(l.dim(), l.dim(), l.tensor().to_vec()).unwrap()
    }

    #[test]
    fn prelie_to_lie_on_affine_identity() {
        let a = PreLieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap();
        let out = prelie_to_lie_xmod(&CrossedModule::identity(a)).unwrap();
        assert_eq!(out.m, affine_lie());
        assert_eq!(out.mu, Matrix::identity(2));
        // e1 ▷ e2 = e2
        assert_eq!(out.action.act_basis(0, 1), &[q(0), q(1)]);
    }

    #[test]
    fn rota_baxter_projection() {
        let l = affine_lie();
        let t = Matrix::from_rows(&[vec![q(1), q(0)], vec![q(0), q(0)]]).unwrap();
        assert_eq!(check_rota_baxter(&l, &t).unwrap(), Ok(()));
        let x = RotaBaxterLieCrossedModule {
            m: l.clone(),
            n: l.clone(),
            t_m: t.clone(),
            t_n: t,
            mu: Matrix::identity(2),
            rho: adjoint(&l),
        };
        let out = rblie_to_prelie_xmod(&x).unwrap();
        let affine = PreLieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap();
        assert_eq!(out, CrossedModule::identity(affine));

        let mut bad = x.clone();
        bad.t_n = Matrix::identity(2);
        bad.t_m = Matrix::identity(2);
        assert!(matches!(rblie_to_prelie_xmod(&bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rota_baxter_output_failure_is_reported() {
        let n = affine_lie();
        let m = LieAlgebra::<Q>::abelian(1);
        let x = RotaBaxterLieCrossedModule {
            m,
            n,
            t_m: Matrix::identity(1),
            t_n: Matrix::from_rows(&[vec![q(1), q(0)], vec![q(0), q(0)]]).unwrap(),
            mu: Matrix::zeros(2, 1),
            rho: LieModule::new(2, 1, vec![q(1), q(0)]).unwrap(),
        };
        assert_eq!(check_rb_lie_xmod(&x).unwrap(), Ok(()));
        assert!(matches!(rblie_to_prelie_xmod(&x), Err(Error::OutputCheckFailed(_))));
        let mut fixed = x;
        fixed.t_m = Matrix::zeros(1, 1);
        assert!(rblie_to_prelie_xmod(&fixed).is_ok());
    }

    #[test]
    fn dendriform_examples() {
        let one = DendriformAlgebra::new(1, vec![q(1)], vec![q(0)]).unwrap();
        assert_eq!(one.check(), Ok(()));
        let x = DendriformCrossedModule {
            m: one.clone(),
            n: one.clone(),
            mu: Matrix::identity(1),
            succ: Representation::new(1, 1, vec![q(1)], vec![q(1)]).unwrap(),
            prec: Representation::new(1, 1, vec![q(0)], vec![q(0)]).unwrap(),
        };
        let out = dendriform_to_prelie_xmod(&x).unwrap();
        let idem = PreLieAlgebra::new(1, vec![q(1)]).unwrap();
        assert_eq!(out, CrossedModule::identity(idem));

        let mut perturbed = x;
        perturbed.succ.left_tensor_mut()[0] = q(2);
        assert!(matches!(
            dendriform_to_prelie_xmod(&perturbed),
            Err(Error::OutputCheckFailed(_))
        ));

        // e1 ≻ e2 = e2 alone is not dendriform: (e1≻e1)≻e2 = 0 ≠ e1≻(e1≻e2)
        let mut succ = vec![q(0); 8];
        succ[3] = q(1);
        let lone = DendriformAlgebra::new(2, succ, vec![q(0); 8]).unwrap();
        let v = lone.check().unwrap_err();
        assert_eq!(v.axiom, "(x≺y + x≻y)≻z = x≻(y≻z)");
        assert_eq!(v.indices, vec![0, 0, 1]);
    }
}
