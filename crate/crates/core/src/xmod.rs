//! Crossed modules, crossed module extensions and the 3-cocycle an extension
//! determines.
//!
//! Maps are plain matrices (`target_dim x source_dim`). An action of `n` on
//! `m` is a [`Representation`] with algebra `n` and carrier the space of `m`.

use rand::Rng;

use crate::algebra::{
    action_axioms, check_morphism, check_two_sided_ideal, expect_eq, PreLieAlgebra,
    Representation, Verdict, Violation,
};
use crate::cochain::{coboundary, cohomology, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{
    is_zero_vec, rank_kernel_image, right_inverse_on_image, sub, unit, Complement, Matrix,
    Subspace,
};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct CrossedModule<T> {
    pub m: PreLieAlgebra<T>,
    pub n: PreLieAlgebra<T>,
    pub mu: Matrix<T>,
    pub action: Representation<T>,
}

impl<T: Field> CrossedModule<T> {
    pub fn new(
        m: PreLieAlgebra<T>,
        n: PreLieAlgebra<T>,
        mu: Matrix<T>,
        action: Representation<T>,
    ) -> Result<Self> {
        let x = Self { m, n, mu, action };
        x.check_shape()?;
        Ok(x)
    }

    /// `n` acting on itself through `id`.
    pub fn identity(n: PreLieAlgebra<T>) -> Self {
        let d = n.dim();
        Self {
            m: n.clone(),
            action: Representation::regular(&n),
            n,
            mu: Matrix::identity(d),
        }
    }

    /// A module `V` with zero product mapped to `g` by zero.
    pub fn from_representation(g: PreLieAlgebra<T>, rep: Representation<T>) -> Result<Self> {
        let v = rep.carrier_dim();
        Self::new(PreLieAlgebra::abelian(v), g.clone(), Matrix::zeros(g.dim(), v), rep)
    }

    fn check_shape(&self) -> Result<()> {
        let (dm, dn) = (self.m.dim(), self.n.dim());
        if self.mu.rows() != dn || self.mu.cols() != dm {
            return Err(Error::Shape(format!(
                "mu is {}x{}, expected {dn}x{dm}",
                self.mu.rows(),
                self.mu.cols()
            )));
        }
        if self.action.algebra_dim() != dn || self.action.carrier_dim() != dm {
            return Err(Error::Shape("action does not match (n, m)".into()));
        }
        Ok(())
    }

    pub fn check(&self) -> Result<Verdict<T>> {
        check_crossed_module(self)
    }
}

/// `μ` is a morphism, the action is an action, `μ` is equivariant and the
/// Peiffer identities `μ(u) ∘_l v = u ∘_m v = u ∘_r μ(v)` hold.
pub fn check_crossed_module<T: Field>(x: &CrossedModule<T>) -> Result<Verdict<T>> {
    x.check_shape()?;
    if let Err(v) = check_morphism(&x.m, &x.n, &x.mu)? {
        return Ok(Err(v));
    }
    if let Err(v) = action_axioms(&x.n, &x.m, &x.action) {
        return Ok(Err(v));
    }
    Ok(crossed_identities(x))
}

fn crossed_identities<T: Field>(x: &CrossedModule<T>) -> Verdict<T> {
    let (dm, dn) = (x.m.dim(), x.n.dim());
    for a in 0..dm {
        for i in 0..dn {
            let (u, y) = (unit(dm, a), unit(dn, i));
            let mu_u = x.mu.apply(&u);
            expect_eq(
                "μ(u ∘_r x) = μ(u) ∘ x",
                &[a, i],
                x.mu.apply(&x.action.act_right(&u, &y)),
                x.n.mul(&mu_u, &y),
            )?;
            expect_eq(
                "μ(x ∘_l u) = x ∘ μ(u)",
                &[i, a],
                x.mu.apply(&x.action.act_left(&y, &u)),
                x.n.mul(&y, &mu_u),
            )?;
        }
    }
    for a in 0..dm {
        for b in 0..dm {
            let (u, v) = (unit(dm, a), unit(dm, b));
            let prod = x.m.mul(&u, &v);
            expect_eq(
                "μ(u) ∘_l v = u ∘ v",
                &[a, b],
                x.action.act_left(&x.mu.apply(&u), &v),
                prod.clone(),
            )?;
            expect_eq(
                "u ∘ v = u ∘_r μ(v)",
                &[a, b],
                prod,
                x.action.act_right(&u, &x.mu.apply(&v)),
            )?;
        }
    }
    Ok(())
}

fn certify<T: Field>(what: &str, verdict: Result<Verdict<T>>) -> Result<()> {
    match verdict? {
        Ok(()) => Ok(()),
        Err(v) => Err(Error::InternalAssertion(format!("{what}: {v}"))),
    }
}

/// The inclusion of a two-sided ideal, with `n` acting by multiplication.
/// The ideal's basis vectors become the basis of `m`.
pub fn ideal_inclusion_xmod<T: Field>(
    n: &PreLieAlgebra<T>,
    ideal: &Subspace<T>,
) -> Result<CrossedModule<T>> {
    if let Err(v) = check_two_sided_ideal(n, ideal)? {
        return Err(Error::NotAnIdeal(v.to_string()));
    }
    let (dn, r) = (n.dim(), ideal.dim());
    let basis = ideal.vectors();
    let coords = |w: Vec<T>| ideal.coordinates(&w).expect("closed under the product");
    let mut product = Vec::with_capacity(r * r * r);
    for a in 0..r {
        for b in 0..r {
            product.extend(coords(n.mul(&basis[a], &basis[b])));
        }
    }
    let mut left = Vec::with_capacity(dn * r * r);
    for i in 0..dn {
        for b in basis {
            left.extend(coords(n.mul(&unit(dn, i), b)));
        }
    }
    let mut right = Vec::with_capacity(r * dn * r);
    for b in basis {
        for i in 0..dn {
            right.extend(coords(n.mul(b, &unit(dn, i))));
        }
    }
    let x = CrossedModule::new(
        PreLieAlgebra::from_tensor_unchecked(r, product)?,
        n.clone(),
        Matrix::from_columns(dn, basis)?,
        Representation::new(dn, r, left, right)?,
    )?;
    certify("ideal inclusion", check_crossed_module(&x))?;
    Ok(x)
}

/// `ker f ↪ source`, for a morphism `f: source → target`.
pub fn kernel_xmod<T: Field>(
    source: &PreLieAlgebra<T>,
    target: &PreLieAlgebra<T>,
    f: &Matrix<T>,
) -> Result<CrossedModule<T>> {
    if let Err(v) = check_morphism(source, target, f)? {
        return Err(Error::InvalidInput(format!("not a morphism: {v}")));
    }
    ideal_inclusion_xmod(source, &rank_kernel_image(f).kernel)
}

/// `0 → V →i m →μ n →π g → 0` together with the action of `n` on `m` and
/// the representation of `g` on `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct Extension<T> {
    pub g: PreLieAlgebra<T>,
    pub v_rep: Representation<T>,
    pub m: PreLieAlgebra<T>,
    pub n: PreLieAlgebra<T>,
    pub i: Matrix<T>,
    pub mu: Matrix<T>,
    pub pi: Matrix<T>,
    pub action: Representation<T>,
}

impl<T: Field> Extension<T> {
    pub fn v_dim(&self) -> usize {
        self.v_rep.carrier_dim()
    }

    pub fn crossed_module(&self) -> CrossedModule<T> {
        CrossedModule {
            m: self.m.clone(),
            n: self.n.clone(),
            mu: self.mu.clone(),
            action: self.action.clone(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let (v, dm, dn, dg) = (self.v_dim(), self.m.dim(), self.n.dim(), self.g.dim());
        let want = [
            ("i", &self.i, dm, v),
            ("mu", &self.mu, dn, dm),
            ("pi", &self.pi, dg, dn),
        ];
        for (name, mat, rows, cols) in want {
            if mat.rows() != rows || mat.cols() != cols {
                return Err(Error::Shape(format!(
                    "{name} is {}x{}, expected {rows}x{cols}",
                    mat.rows(),
                    mat.cols()
                )));
            }
        }
        if self.v_rep.algebra_dim() != dg {
            return Err(Error::Shape("V_rep is not a representation of g".into()));
        }
        if self.action.algebra_dim() != dn || self.action.carrier_dim() != dm {
            return Err(Error::Shape("action does not match (n, m)".into()));
        }
        Ok(())
    }

    /// The deterministic section of `π`.
    pub fn default_rho(&self) -> Matrix<T> {
        right_inverse_on_image(&self.pi)
    }

    /// The deterministic right inverse of `μ` on its image.
    pub fn default_sigma(&self) -> Matrix<T> {
        right_inverse_on_image(&self.mu)
    }
}

fn count<T: Field>(n: usize) -> Vec<T> {
    vec![T::from_int(n as i64)]
}

fn rank_violation<T: Field>(axiom: &str, found: usize, expected: usize) -> Verdict<T> {
    if found == expected {
        Ok(())
    } else {
        Err(Violation::new(axiom, vec![], count(found), count(expected)))
    }
}

fn zero_map<T: Field>(axiom: &str, m: &Matrix<T>) -> Verdict<T> {
    for c in 0..m.cols() {
        let col = m.column(c);
        if !is_zero_vec(&col) {
            return Err(Violation::new(axiom, vec![c], col, vec![T::zero(); m.rows()]));
        }
    }
    Ok(())
}

/// Exactness (by ranks), the zero product on `i(V)`, the crossed module
/// axioms, morphism property of `π`, and agreement of the induced
/// representation with `V_rep`.
pub fn check_extension<T: Field>(e: &Extension<T>) -> Result<Verdict<T>> {
    e.check_shape()?;
    Ok(extension_axioms(e))
}

fn extension_axioms<T: Field>(e: &Extension<T>) -> Verdict<T> {
    let (v, dm, dn, dg) = (e.v_dim(), e.m.dim(), e.n.dim(), e.g.dim());
    let rank_i = e.i.rank();
    let rank_mu = e.mu.rank();
    let rank_pi = e.pi.rank();
    rank_violation("i is injective", rank_i, v)?;
    rank_violation("π is surjective", rank_pi, dg)?;
    zero_map("μ ∘ i = 0", &e.mu.mul(&e.i))?;
    rank_violation("im i = ker μ", rank_i, dm - rank_mu)?;
    zero_map("π ∘ μ = 0", &e.pi.mul(&e.mu))?;
    rank_violation("im μ = ker π", rank_mu, dn - rank_pi)?;
    let cols: Vec<Vec<T>> = (0..v).map(|a| e.i.column(a)).collect();
    for a in 0..v {
        for b in 0..v {
            expect_eq(
                "i(V) has zero product",
                &[a, b],
                e.m.mul(&cols[a], &cols[b]),
                vec![T::zero(); dm],
            )?;
        }
    }
    check_morphism(&e.n, &e.g, &e.pi).expect("shape checked")?;
    let x = e.crossed_module();
    check_crossed_module(&x).expect("shape checked")?;
    let induced = match induced_representation_with(e, &e.default_rho()) {
        Ok(r) => r,
        Err(err) => {
            return Err(Violation::new(
                format!("induced representation exists ({err})"),
                vec![],
                vec![],
                vec![],
            ))
        }
    };
    compare_representations(&induced, &e.v_rep)
}

fn compare_representations<T: Field>(
    induced: &Representation<T>,
    expected: &Representation<T>,
) -> Verdict<T> {
    let (g, v) = (expected.algebra_dim(), expected.carrier_dim());
    for i in 0..g {
        for a in 0..v {
            expect_eq(
                "induced left action equals V_rep",
                &[i, a],
                induced.left_basis(i, a).to_vec(),
                expected.left_basis(i, a).to_vec(),
            )?;
            expect_eq(
                "induced right action equals V_rep",
                &[a, i],
                induced.right_basis(a, i).to_vec(),
                expected.right_basis(a, i).to_vec(),
            )?;
        }
    }
    Ok(())
}

/// `x ∘_l u = i⁻¹(ρ(x) ∘̄_l i(u))`, `u ∘_r x = i⁻¹(i(u) ∘̄_r ρ(x))` for the
/// deterministic section `ρ`.
pub fn induced_representation<T: Field>(e: &Extension<T>) -> Result<Representation<T>> {
    e.check_shape()?;
    induced_representation_with(e, &e.default_rho())
}

/// As [`induced_representation`], with a caller-supplied section of `π`.
pub fn induced_representation_with<T: Field>(
    e: &Extension<T>,
    rho: &Matrix<T>,
) -> Result<Representation<T>> {
    e.check_shape()?;
    check_section(&e.pi, rho, "rho")?;
    let (v, dg, dm) = (e.v_dim(), e.g.dim(), e.m.dim());
    let image = Subspace::new(dm, (0..v).map(|a| e.i.column(a)).collect())
        .map_err(|_| Error::InvalidExtension("i is not injective".into()))?;
    let pull = |w: Vec<T>, what: &str| {
        image
            .coordinates(&w)
            .ok_or_else(|| Error::ActionEscapesKernel(format!("{what} leaves i(V)")))
    };
    let mut left = Vec::with_capacity(dg * v * v);
    for x in 0..dg {
        for a in 0..v {
            let w = e.action.act_left(&rho.column(x), &e.i.column(a));
            left.extend(pull(w, &format!("ρ(e_{}) ∘_l i(v_{})", x + 1, a + 1))?);
        }
    }
    let mut right = Vec::with_capacity(v * dg * v);
    for a in 0..v {
        for x in 0..dg {
            let w = e.action.act_right(&e.i.column(a), &rho.column(x));
            right.extend(pull(w, &format!("i(v_{}) ∘_r ρ(e_{})", a + 1, x + 1))?);
        }
    }
    Representation::new(dg, v, left, right)
}

/// `π ∘ ρ = id`.
fn check_section<T: Field>(pi: &Matrix<T>, rho: &Matrix<T>, name: &str) -> Result<()> {
    if rho.rows() != pi.cols() || rho.cols() != pi.rows() {
        return Err(Error::Shape(format!("{name} has the wrong shape")));
    }
    if pi.mul(rho) != Matrix::identity(pi.rows()) {
        return Err(Error::InvalidInput(format!("{name} is not a section")));
    }
    Ok(())
}

/// `V = ker μ`, `g = coker μ` with the quotient product and the induced
/// representation.
pub fn canonical_extension<T: Field>(x: &CrossedModule<T>) -> Result<Extension<T>> {
    if let Err(v) = check_crossed_module(x)? {
        return Err(Error::InvalidInput(format!("not a crossed module: {v}")));
    }
    let dn = x.n.dim();
    let ki = rank_kernel_image(&x.mu);
    let complement = Complement::new(&ki.image)?;
    let dg = complement.dim();
    let lifts: Vec<Vec<T>> = (0..dg).map(|a| complement.lift(&unit(dg, a))).collect();
    let mut product = Vec::with_capacity(dg * dg * dg);
    for a in 0..dg {
        for b in 0..dg {
            product.extend(complement.reduce(&x.n.mul(&lifts[a], &lifts[b])));
        }
    }
    let g = PreLieAlgebra::new(dg, product)
        .map_err(|e| Error::InternalAssertion(format!("quotient product: {e}")))?;
    let pi = Matrix::from_columns(
        dg,
        &(0..dn).map(|j| complement.reduce(&unit(dn, j))).collect::<Vec<_>>(),
    )?;
    let rho = Matrix::from_columns(dn, &lifts)?;
    let i = Matrix::from_columns(x.m.dim(), ki.kernel.vectors())?;
    let mut e = Extension {
        v_rep: Representation::trivial(dg, ki.kernel.dim()),
        g,
        m: x.m.clone(),
        n: x.n.clone(),
        i,
        mu: x.mu.clone(),
        pi,
        action: x.action.clone(),
    };
    e.v_rep = induced_representation_with(&e, &rho)?;
    certify("canonical extension", check_extension(&e))?;
    Ok(e)
}

/// `θ` with its class against the `H^3` representatives and the sections
/// that produced it.
#[derive(Debug, Clone)]
pub struct ThreeCocycleResult<T> {
    pub theta: Cochain<T>,
    pub class_coordinates: Vec<T>,
    pub rho: Matrix<T>,
    pub sigma: Matrix<T>,
}

impl<T: Field> ThreeCocycleResult<T> {
    pub fn is_trivial_class(&self) -> bool {
        is_zero_vec(&self.class_coordinates)
    }
}

pub fn t_map<T: Field>(e: &Extension<T>) -> Result<ThreeCocycleResult<T>> {
    validate_extension(e)?;
    t_map_unchecked(e, e.default_rho(), e.default_sigma())
}

/// `t_map` with given sections: `π ρ = id` and `μ σ = id` on `im μ`.
pub fn t_map_with_sections<T: Field>(
    e: &Extension<T>,
    rho: Matrix<T>,
    sigma: Matrix<T>,
) -> Result<ThreeCocycleResult<T>> {
    validate_extension(e)?;
    check_section(&e.pi, &rho, "rho")?;
    if sigma.rows() != e.m.dim() || sigma.cols() != e.n.dim() {
        return Err(Error::Shape("sigma has the wrong shape".into()));
    }
    for y in rank_kernel_image(&e.mu).image.vectors() {
        if e.mu.apply(&sigma.apply(y)) != *y {
            return Err(Error::InvalidInput("sigma is not a section on im μ".into()));
        }
    }
    t_map_unchecked(e, rho, sigma)
}

fn validate_extension<T: Field>(e: &Extension<T>) -> Result<()> {
    match check_extension(e) {
        Ok(Ok(())) => Ok(()),
        Ok(Err(v)) => Err(Error::InvalidExtension(v.to_string())),
        Err(err) => Err(Error::InvalidExtension(err.to_string())),
    }
}

fn t_map_unchecked<T: Field>(
    e: &Extension<T>,
    rho: Matrix<T>,
    sigma: Matrix<T>,
) -> Result<ThreeCocycleResult<T>> {
    let (dg, dm, v) = (e.g.dim(), e.m.dim(), e.v_dim());
    let rho_of = |x: &[T]| rho.apply(x);

    // α(e_a, e_b) = ρ(e_a) ∘ ρ(e_b) − ρ(e_a ∘ e_b), then β = σ α
    let mut beta_basis = Vec::with_capacity(dg * dg);
    for a in 0..dg {
        for b in 0..dg {
            let alpha = sub(
                &e.n.mul(&rho.column(a), &rho.column(b)),
                &rho_of(e.g.mul_basis(a, b)),
            );
            if !is_zero_vec(&e.pi.apply(&alpha)) {
                return Err(Error::InternalAssertion(format!(
                    "π α(e_{}, e_{}) ≠ 0",
                    a + 1,
                    b + 1
                )));
            }
            beta_basis.push(sigma.apply(&alpha));
        }
    }
    let beta = |x: &[T], y: &[T]| {
        let mut out = vec![T::zero(); dm];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                crate::linalg::axpy(&mut out, &(xa.clone() * yb.clone()), &beta_basis[a * dg + b]);
            }
        }
        out
    };

    let image = Subspace::new(dm, (0..v).map(|a| e.i.column(a)).collect())?;
    let mut values = Vec::new();
    for x in 0..dg {
        for y in x + 1..dg {
            for z in 0..dg {
                let (ex, ey, ez) = (unit(dg, x), unit(dg, y), unit(dg, z));
                let (rx, ry, rz) = (rho.column(x), rho.column(y), rho.column(z));
                let mut th = e.action.act_left(&rx, &beta(&ey, &ez));
                let terms: [(T, Vec<T>); 6] = [
                    (-T::one(), e.action.act_left(&ry, &beta(&ex, &ez))),
                    (T::one(), e.action.act_right(&beta(&ey, &ex), &rz)),
                    (-T::one(), e.action.act_right(&beta(&ex, &ey), &rz)),
                    (-T::one(), beta(&ey, &e.g.mul(&ex, &ez))),
                    (T::one(), beta(&ex, &e.g.mul(&ey, &ez))),
                    (-T::one(), beta(&e.g.commutator(&ex, &ey), &ez)),
                ];
                for (s, t) in &terms {
                    crate::linalg::axpy(&mut th, s, t);
                }
                if !is_zero_vec(&e.mu.apply(&th)) {
                    return Err(Error::InternalAssertion(format!(
                        "μ θ(e_{}, e_{}, e_{}) ≠ 0",
                        x + 1,
                        y + 1,
                        z + 1
                    )));
                }
                let pulled = image.coordinates(&th).ok_or_else(|| {
                    Error::InternalAssertion("θ does not take values in i(V)".into())
                })?;
                values.extend(pulled);
            }
        }
    }
    let theta = Cochain::from_coordinates(3, dg, v, values)?;
    if !coboundary(&e.g, &e.v_rep, &theta)?.is_zero() {
        return Err(Error::InternalAssertion("d θ ≠ 0".into()));
    }
    let h3 = cohomology(&e.g, &e.v_rep, 3)?;
    let class_coordinates = h3.class_coordinates(&theta)?;
    Ok(ThreeCocycleResult {
        theta,
        class_coordinates,
        rho,
        sigma,
    })
}

fn random_matrix<T: Field, R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Matrix<T> {
    let data = (0..rows * cols)
        .map(|_| T::from_int(rng.gen_range(-3..=3)))
        .collect();
    Matrix::new(rows, cols, data).expect("sized")
}

/// `ρ + μ h` and `σ + i k` for random integer matrices `h`, `k`.
pub fn random_sections<T: Field, R: Rng>(e: &Extension<T>, rng: &mut R) -> (Matrix<T>, Matrix<T>) {
    let h = random_matrix(e.m.dim(), e.g.dim(), rng);
    let k = random_matrix(e.v_dim(), e.n.dim(), rng);
    (
        e.default_rho().add(&e.mu.mul(&h)),
        e.default_sigma().add(&e.i.mul(&k)),
    )
}

/// Another section of `π`: `ρ + μ h`.
pub fn random_rho<T: Field, R: Rng>(e: &Extension<T>, rng: &mut R) -> Matrix<T> {
    let h = random_matrix(e.m.dim(), e.g.dim(), rng);
    e.default_rho().add(&e.mu.mul(&h))
}

/// A morphism of extensions `E → E'` over the same `g` and `V`.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness<T> {
    pub source: Extension<T>,
    pub target: Extension<T>,
    pub r: Matrix<T>,
    pub s: Matrix<T>,
}

fn matrices_agree<T: Field>(axiom: &str, lhs: &Matrix<T>, rhs: &Matrix<T>) -> Verdict<T> {
    for c in 0..lhs.cols() {
        expect_eq(axiom, &[c], lhs.column(c), rhs.column(c))?;
    }
    Ok(())
}

/// The ladder commutes (`r i = i'`, `μ' r = s μ`, `π' s = π`), `r` and `s`
/// are morphisms and respect the actions.
pub fn check_equivalence_witness<T: Field>(w: &EquivalenceWitness<T>) -> Result<Verdict<T>> {
    let (e, f) = (&w.source, &w.target);
    e.check_shape()?;
    f.check_shape()?;
    if e.g != f.g || e.v_rep != f.v_rep {
        return Err(Error::Shape("extensions are over different (g, V)".into()));
    }
    if w.r.rows() != f.m.dim() || w.r.cols() != e.m.dim() {
        return Err(Error::Shape("r has the wrong shape".into()));
    }
    if w.s.rows() != f.n.dim() || w.s.cols() != e.n.dim() {
        return Err(Error::Shape("s has the wrong shape".into()));
    }
    Ok(witness_axioms(w))
}

fn witness_axioms<T: Field>(w: &EquivalenceWitness<T>) -> Verdict<T> {
    let (e, f) = (&w.source, &w.target);
    matrices_agree("r ∘ i = i'", &w.r.mul(&e.i), &f.i)?;
    matrices_agree("μ' ∘ r = s ∘ μ", &f.mu.mul(&w.r), &w.s.mul(&e.mu))?;
    matrices_agree("π' ∘ s = π", &f.pi.mul(&w.s), &e.pi)?;
    check_morphism(&e.m, &f.m, &w.r).expect("shape checked")?;
    check_morphism(&e.n, &f.n, &w.s).expect("shape checked")?;
    let (dm, dn) = (e.m.dim(), e.n.dim());
    for a in 0..dm {
        for i in 0..dn {
            let (u, x) = (unit(dm, a), unit(dn, i));
            let (ru, sx) = (w.r.apply(&u), w.s.apply(&x));
            expect_eq(
                "r(u ∘_r x) = r(u) ∘_r s(x)",
                &[a, i],
                w.r.apply(&e.action.act_right(&u, &x)),
                f.action.act_right(&ru, &sx),
            )?;
            expect_eq(
                "r(x ∘_l u) = s(x) ∘_l r(u)",
                &[i, a],
                w.r.apply(&e.action.act_left(&x, &u)),
                f.action.act_left(&sx, &ru),
            )?;
        }
    }
    Ok(())
}

/// The algebra `g ⊕ V` built from a 2-cocycle, with its structure maps.
/// Basis: the basis of `g` followed by the basis of `V`.
#[derive(Debug, Clone)]
pub struct AbelianExtension<T> {
    pub algebra: PreLieAlgebra<T>,
    /// `g ⊕ V → g`
    pub projection: Matrix<T>,
    /// `V → g ⊕ V`
    pub inclusion: Matrix<T>,
}

/// `(x, u) ∘ (y, v) = (x ∘ y, x ∘_l v + u ∘_r y + ω(x, y))`.
pub fn abelian_extension_from_2cocycle<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    omega: &Cochain<T>,
) -> Result<AbelianExtension<T>> {
    if omega.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: omega.arity(),
        });
    }
    let d_omega = coboundary(a, rep, omega)?;
    if !d_omega.is_zero() {
        return Err(Error::NotACocycle("d ω ≠ 0".into()));
    }
    let (g, v) = (a.dim(), rep.carrier_dim());
    let dim = g + v;
    let mut product = vec![T::zero(); dim * dim * dim];
    let mut put = |i: usize, j: usize, out: Vec<T>| {
        product[(i * dim + j) * dim..(i * dim + j + 1) * dim].clone_from_slice(&out);
    };
    for x in 0..g {
        for y in 0..g {
            let mut out = a.mul_basis(x, y).to_vec();
            out.extend(omega.eval_basis(&[x, y]));
            put(x, y, out);
        }
        for b in 0..v {
            let mut out = vec![T::zero(); g];
            out.extend_from_slice(rep.left_basis(x, b));
            put(x, g + b, out);
            let mut out = vec![T::zero(); g];
            out.extend_from_slice(rep.right_basis(b, x));
            put(g + b, x, out);
        }
    }
    let algebra = PreLieAlgebra::new(dim, product)
        .map_err(|e| Error::InternalAssertion(format!("abelian extension: {e}")))?;
    let mut projection = Matrix::zeros(g, dim);
    for x in 0..g {
        projection.set(x, x, T::one());
    }
    let mut inclusion = Matrix::zeros(dim, v);
    for b in 0..v {
        inclusion.set(g + b, b, T::one());
    }
    certify("projection", check_morphism(&algebra, a, &projection))?;
    let kernel = Subspace::new(dim, (0..v).map(|b| inclusion.column(b)).collect())?;
    certify("kernel of the projection", check_two_sided_ideal(&algebra, &kernel))?;
    Ok(AbelianExtension {
        algebra,
        projection,
        inclusion,
    })
}

/// Semidirect sum `n ⊕ U` with `(n, u) ∘ (n', u') = (n ∘ n', π(n) ∘_l u' + u ∘_r π(n'))`.
fn pulled_back_semidirect<T: Field>(
    n: &PreLieAlgebra<T>,
    pi: &Matrix<T>,
    u_rep: &Representation<T>,
) -> Result<PreLieAlgebra<T>> {
    let (dn, du) = (n.dim(), u_rep.carrier_dim());
    let dim = dn + du;
    let mut product = vec![T::zero(); dim * dim * dim];
    for x in 0..dn {
        for y in 0..dn {
            let start = (x * dim + y) * dim;
            product[start..start + dn].clone_from_slice(n.mul_basis(x, y));
        }
        let px = pi.column(x);
        for b in 0..du {
            let start = (x * dim + dn + b) * dim + dn;
            product[start..start + du].clone_from_slice(&u_rep.act_left(&px, &unit(du, b)));
            let start = ((dn + b) * dim + x) * dim + dn;
            product[start..start + du].clone_from_slice(&u_rep.act_right(&unit(du, b), &px));
        }
    }
    PreLieAlgebra::new(dim, product)
}

/// `E⁺`: `m ⊕ U → n ⊕ U` with `μ⁺(m, u) = (μ m, u)`, where `U` is a
/// `g`-module acted on through `π`. Returns `E⁺` and the witness `E⁺ → E`
/// given by the two projections.
pub fn stabilize<T: Field>(
    e: &Extension<T>,
    u_rep: &Representation<T>,
) -> Result<(Extension<T>, EquivalenceWitness<T>)> {
    validate_extension(e)?;
    if u_rep.algebra_dim() != e.g.dim() {
        return Err(Error::Shape("U is not a g-module".into()));
    }
    let (v, dm, dn, dg, du) = (e.v_dim(), e.m.dim(), e.n.dim(), e.g.dim(), u_rep.carrier_dim());
    let (pm, pn) = (dm + du, dn + du);

    let mut m_product = vec![T::zero(); pm * pm * pm];
    for a in 0..dm {
        for b in 0..dm {
            let start = (a * pm + b) * pm;
            m_product[start..start + dm].clone_from_slice(e.m.mul_basis(a, b));
        }
    }
    let m_plus = PreLieAlgebra::new(pm, m_product)?;
    let n_plus = pulled_back_semidirect(&e.n, &e.pi, u_rep)?;

    let mut left = vec![T::zero(); pn * pm * pm];
    let mut right = vec![T::zero(); pm * pn * pm];
    for x in 0..dn {
        let px = e.pi.column(x);
        for a in 0..dm {
            let start = (x * pm + a) * pm;
            left[start..start + dm].clone_from_slice(e.action.left_basis(x, a));
            let start = (a * pn + x) * pm;
            right[start..start + dm].clone_from_slice(e.action.right_basis(a, x));
        }
        for b in 0..du {
            let start = (x * pm + dm + b) * pm + dm;
            left[start..start + du].clone_from_slice(&u_rep.act_left(&px, &unit(du, b)));
            let start = ((dm + b) * pn + x) * pm + dm;
            right[start..start + du].clone_from_slice(&u_rep.act_right(&unit(du, b), &px));
        }
    }
    let action = Representation::new(pn, pm, left, right)?;

    let mut mu = Matrix::zeros(pn, pm);
    let mut i = Matrix::zeros(pm, v);
    let mut pi = Matrix::zeros(dg, pn);
    let mut r = Matrix::zeros(dm, pm);
    let mut s = Matrix::zeros(dn, pn);
    for a in 0..dm {
        for x in 0..dn {
            mu.set(x, a, e.mu.get(x, a).clone());
        }
        r.set(a, a, T::one());
    }
    for b in 0..du {
        mu.set(dn + b, dm + b, T::one());
    }
    for c in 0..v {
        for a in 0..dm {
            i.set(a, c, e.i.get(a, c).clone());
        }
    }
    for x in 0..dn {
        for k in 0..dg {
            pi.set(k, x, e.pi.get(k, x).clone());
        }
        s.set(x, x, T::one());
    }
    let plus = Extension {
        g: e.g.clone(),
        v_rep: e.v_rep.clone(),
        m: m_plus,
        n: n_plus,
        i,
        mu,
        pi,
        action,
    };
    certify("stabilized extension", check_extension(&plus))?;
    let witness = EquivalenceWitness {
        source: plus.clone(),
        target: e.clone(),
        r,
        s,
    };
    certify("stabilization witness", check_equivalence_witness(&witness))?;
    Ok((plus, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn affine() -> PreLieAlgebra<Q> {
        PreLieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap()
    }

    fn e_triv(g: PreLieAlgebra<Q>, rep: Representation<Q>) -> Extension<Q> {
        let (dg, v) = (g.dim(), rep.carrier_dim());
        Extension {
            m: PreLieAlgebra::abelian(v),
            n: g.clone(),
            i: Matrix::identity(v),
            mu: Matrix::zeros(dg, v),
            pi: Matrix::identity(dg),
            action: rep.clone(),
            g,
            v_rep: rep,
        }
    }

    #[test]
    fn identity_and_module_crossed_modules() {
        let x = CrossedModule::identity(affine());
        assert_eq!(check_crossed_module(&x).unwrap(), Ok(()));
        let a = affine();
        let y = CrossedModule::from_representation(a.clone(), Representation::regular(&a)).unwrap();
        assert_eq!(check_crossed_module(&y).unwrap(), Ok(()));
        let mut bad = CrossedModule::identity(affine());
        bad.action.left_tensor_mut()[0] = q(1);
        assert!(check_crossed_module(&bad).unwrap().is_err());
    }

    #[test]
    fn ideal_examples() {
        let a = affine();
        let e2 = Subspace::new(2, vec![vec![q(0), q(1)]]).unwrap();
        let x = ideal_inclusion_xmod(&a, &e2).unwrap();
        assert_eq!(x.m.dim(), 1);
        assert!(x.m.is_abelian());
        // e1 ∘ e2 = e2 restricts to e1 ∘_l m = m
        assert_eq!(x.action.left_basis(0, 0), &[q(1)]);
        assert_eq!(x.action.right_basis(0, 0), &[q(0)]);
        let e1 = Subspace::new(2, vec![vec![q(1), q(0)]]).unwrap();
        assert!(matches!(ideal_inclusion_xmod(&a, &e1), Err(Error::NotAnIdeal(_))));
        let whole = ideal_inclusion_xmod(&a, &Subspace::whole(2)).unwrap();
        assert_eq!(whole, CrossedModule::identity(a.clone()));
        assert_eq!(ideal_inclusion_xmod(&a, &Subspace::zero(2)).unwrap().m.dim(), 0);
    }

    #[test]
    fn kernel_examples() {
        let a = affine();
        let g1 = PreLieAlgebra::<Q>::abelian(1);
        let proj = Matrix::from_rows(&[vec![q(1), q(0)]]).unwrap();
        let x = kernel_xmod(&a, &g1, &proj).unwrap();
        assert_eq!(x.mu, Matrix::from_rows(&[vec![q(0)], vec![q(1)]]).unwrap());
        let zero = kernel_xmod(&a, &g1, &Matrix::zeros(1, 2)).unwrap();
        assert_eq!(zero.m.dim(), 2);
        let inj = kernel_xmod(&a, &a, &Matrix::identity(2)).unwrap();
        assert_eq!(inj.m.dim(), 0);
        let e = canonical_extension(&x).unwrap();
        assert_eq!((e.v_dim(), e.g.dim()), (0, 1));
    }

    #[test]
    fn trivial_extension_and_induced_rep() {
        let a = affine();
        let rep = Representation::regular(&a);
        let e = e_triv(a.clone(), rep.clone());
        assert_eq!(check_extension(&e).unwrap(), Ok(()));
        assert_eq!(induced_representation(&e).unwrap(), rep);
        let r = t_map(&e).unwrap();
        assert!(r.theta.is_zero() && r.is_trivial_class());

        let mut bad = e.clone();
        bad.pi = Matrix::zeros(2, 2);
        let v = check_extension(&bad).unwrap().unwrap_err();
        assert_eq!(v.axiom, "π is surjective");
        assert!(matches!(t_map(&bad), Err(Error::InvalidExtension(_))));
    }

    #[test]
    fn canonical_of_module_crossed_module_is_trivial_extension() {
        let a = affine();
        let rep = Representation::regular(&a);
        let x = CrossedModule::from_representation(a.clone(), rep.clone()).unwrap();
        let e = canonical_extension(&x).unwrap();
        assert_eq!(e, e_triv(a, rep));
        let id = canonical_extension(&CrossedModule::identity(affine())).unwrap();
        assert_eq!((id.v_dim(), id.g.dim()), (0, 0));
    }

    #[test]
    fn stabilization_is_a_witness() {
        let a = affine();
        let rep = Representation::regular(&a);
        let e = e_triv(a.clone(), rep.clone());
        let (plus, w) = stabilize(&e, &rep).unwrap();
        assert_eq!(plus.m.dim(), 4);
        assert_eq!(check_equivalence_witness(&w).unwrap(), Ok(()));
        let mut rng = rand::thread_rng();
        for _ in 0..5 {
            let (rho, sigma) = random_sections(&plus, &mut rng);
            let r = t_map_with_sections(&plus, rho, sigma).unwrap();
            assert!(r.is_trivial_class());
        }
    }

    #[test]
    fn abelian_extension_of_coboundary_is_isomorphic_to_semidirect() {
        let a = affine();
        let rep = Representation::regular(&a);
        let mut rng = rand::thread_rng();
        let eta = Cochain::random(1, 2, 2, &mut rng);
        let omega = coboundary(&a, &rep, &eta).unwrap();
        let twisted = abelian_extension_from_2cocycle(&a, &rep, &omega).unwrap();
        let plain = abelian_extension_from_2cocycle(&a, &rep, &Cochain::zero(2, 2, 2)).unwrap();
        // (x, u) ↦ (x, u + η(x))
        let mut iso = Matrix::identity(4);
        for x in 0..2 {
            let val = eta.eval_basis(&[x]);
            for b in 0..2 {
                iso.set(2 + b, x, val[b].clone());
            }
        }
        assert_eq!(check_morphism(&twisted.algebra, &plain.algebra, &iso).unwrap(), Ok(()));

        let bad = (0..8)
            .map(|c| Cochain::from_coordinates(2, 2, 2, unit(8, c)).unwrap())
            .find(|w| !coboundary(&a, &rep, w).unwrap().is_zero())
            .unwrap();
        assert!(matches!(
            abelian_extension_from_2cocycle(&a, &rep, &bad),
            Err(Error::NotACocycle(_))
        ));
    }
}
