//! Pre-Lie algebras, Lie algebras, representations, actions and morphisms as
//! structure-constant tensors, with exhaustive axiom checks over basis tuples.
//!
//! Tensor layouts (all 0-based, row-major):
//! * pre-Lie product `c[i][j][k]`: `e_i ∘ e_j = Σ_k c[i][j][k] e_k`
//! * left action `L[i][a][b]`: `e_i ∘_l v_a = Σ_b L[i][a][b] v_b`
//! * right action `R[a][i][b]`: `v_a ∘_r e_i = Σ_b R[a][i][b] v_b`

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{add, axpy, is_zero_vec, sub, unit, Matrix, Subspace};
use crate::scalar::Field;

/// The first failing instance of an axiom. Indices are 0-based; `Display`
/// prints them 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<T>,
    pub rhs: Vec<T>,
}

impl<T: Field> Violation<T> {
    pub fn new(axiom: impl Into<String>, indices: Vec<usize>, lhs: Vec<T>, rhs: Vec<T>) -> Self {
        Self {
            axiom: axiom.into(),
            indices,
            lhs,
            rhs,
        }
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

impl<T: Field> fmt::Display for Violation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.one_based().iter().map(ToString::to_string).collect();
        let show = |v: &[T]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{} fails at ({}): lhs = [{}], rhs = [{}]",
            self.axiom,
            idx.join(","),
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

pub type Verdict<T> = std::result::Result<(), Violation<T>>;

/// Compares two vectors, producing a violation when they differ.
pub(crate) fn expect_eq<T: Field>(
    axiom: &str,
    indices: &[usize],
    lhs: Vec<T>,
    rhs: Vec<T>,
) -> Verdict<T> {
    if is_zero_vec(&sub(&lhs, &rhs)) {
        Ok(())
    } else {
        Err(Violation::new(axiom, indices.to_vec(), lhs, rhs))
    }
}

fn check_len<T>(what: &str, data: &[T], expected: usize) -> Result<()> {
    if data.len() == expected {
        Ok(())
    } else {
        Err(Error::Shape(format!(
            "{what}: expected {expected} entries, found {}",
            data.len()
        )))
    }
}

/// Bilinear extension of a basis-level product given as a callback.
fn bilinear<T: Field, F>(x: &[T], y: &[T], out_dim: usize, basis: F) -> Vec<T>
where
    F: Fn(usize, usize) -> Vec<T>,
{
    let mut out = vec![T::zero(); out_dim];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            axpy(&mut out, &(xi.clone() * yj.clone()), &basis(i, j));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct PreLieAlgebra<T> {
    dim: usize,
    product: Vec<T>,
    labels: Option<Vec<String>>,
}

impl<T: Field> PreLieAlgebra<T> {
    /// Builds an algebra after checking the tensor shape and left-symmetry.
    pub fn new(dim: usize, product: Vec<T>) -> Result<Self> {
        match check_prelie(dim, &product)? {
            Ok(()) => Ok(Self {
                dim,
                product,
                labels: None,
            }),
            Err(v) => Err(Error::InvalidInput(v.to_string())),
        }
    }

    /// Builds a product tensor without checking left-symmetry.
    pub fn from_tensor_unchecked(dim: usize, product: Vec<T>) -> Result<Self> {
        check_len("product tensor", &product, dim * dim * dim)?;
        Ok(Self {
            dim,
            product,
            labels: None,
        })
    }

    /// Sparse 0-based entries `(i, j, k, c)` meaning `e_i ∘ e_j += c e_k`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, T)]) -> Result<Self> {
        Self::new(dim, sparse_tensor(&[dim, dim, dim], entries)?)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            product: vec![T::zero(); dim * dim * dim],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &[T] {
        &self.product
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &T {
        &self.product[(i * self.dim + j) * self.dim + k]
    }

    /// `e_i ∘ e_j` as a coordinate slice.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.product[start..start + self.dim]
    }

    pub fn mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        bilinear(x, y, self.dim, |i, j| self.mul_basis(i, j).to_vec())
    }

    pub fn commutator(&self, x: &[T], y: &[T]) -> Vec<T> {
        sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vec(&self.product)
    }

    pub fn check(&self) -> Verdict<T> {
        check_prelie(self.dim, &self.product).expect("shape validated at construction")
    }

    /// Left multiplication `y ↦ e_i ∘ y` as a matrix.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix<T> {
        let cols: Vec<Vec<T>> = (0..self.dim).map(|j| self.mul_basis(i, j).to_vec()).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }
}

/// Builds a dense tensor of the given shape from sparse 0-based entries.
/// Repeated positions accumulate.
pub fn sparse_tensor<T: Field>(shape: &[usize], entries: &[(usize, usize, usize, T)]) -> Result<Vec<T>> {
    let [a, b, c] = shape else {
        return Err(Error::Shape("tensors have three indices".into()));
    };
    let mut t = vec![T::zero(); a * b * c];
    for (i, j, k, v) in entries {
        if i >= a || j >= b || k >= c {
            return Err(Error::Shape(format!(
                "entry ({},{},{}) outside {}x{}x{}",
                i + 1,
                j + 1,
                k + 1,
                a,
                b,
                c
            )));
        }
        let idx = (i * b + j) * c + k;
        t[idx] = t[idx].clone() + v.clone();
    }
    Ok(t)
}

/// Left-symmetry of the associator on every basis triple, in lexicographic order.
pub fn check_prelie<T: Field>(dim: usize, product: &[T]) -> Result<Verdict<T>> {
    check_len("product tensor", product, dim * dim * dim)?;
    let a = PreLieAlgebra {
        dim,
        product: product.to_vec(),
        labels: None,
    };
    let assoc = |x: usize, y: usize, z: usize| {
        let ez = unit(dim, z);
        let xy_z = a.mul(a.mul_basis(x, y), &ez);
        let x_yz = a.mul(&unit(dim, x), a.mul_basis(y, z));
        sub(&xy_z, &x_yz)
    };
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let v = expect_eq("pre-Lie identity", &[i, j, k], assoc(i, j, k), assoc(j, i, k));
                if v.is_err() {
                    return Ok(v);
                }
            }
        }
    }
    Ok(Ok(()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra<T> {
    dim: usize,
    bracket: Vec<T>,
}

impl<T: Field> LieAlgebra<T> {
    /// Builds a Lie algebra after checking shape, antisymmetry and Jacobi.
    pub fn new(dim: usize, bracket: Vec<T>) -> Result<Self> {
        let l = Self::from_tensor_unchecked(dim, bracket)?;
        l.check().map_err(|v| Error::InvalidInput(v.to_string()))?;
        Ok(l)
    }

    pub fn from_tensor_unchecked(dim: usize, bracket: Vec<T>) -> Result<Self> {
        check_len("bracket tensor", &bracket, dim * dim * dim)?;
        Ok(Self { dim, bracket })
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, T)]) -> Result<Self> {
        Self::new(dim, sparse_tensor(&[dim, dim, dim], entries)?)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            bracket: vec![T::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &[T] {
        &self.bracket
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.bracket[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vec<T> {
        bilinear(x, y, self.dim, |i, j| self.bracket_basis(i, j).to_vec())
    }

    /// Antisymmetry on pairs, then Jacobi on triples.
    pub fn check(&self) -> Verdict<T> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let neg: Vec<T> = self.bracket_basis(j, i).iter().map(|x| -x.clone()).collect();
                expect_eq("antisymmetry", &[i, j], self.bracket_basis(i, j).to_vec(), neg)?;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                    let s = add(
                        &add(
                            &self.bracket(&x, &self.bracket(&y, &z)),
                            &self.bracket(&y, &self.bracket(&z, &x)),
                        ),
                        &self.bracket(&z, &self.bracket(&x, &y)),
                    );
                    expect_eq("Jacobi identity", &[i, j, k], s, vec![T::zero(); n])?;
                }
            }
        }
        Ok(())
    }
}

/// The commutator Lie algebra `[x, y] = x∘y − y∘x`.
pub fn subadjacent_lie<T: Field>(a: &PreLieAlgebra<T>) -> LieAlgebra<T> {
    let n = a.dim();
    let mut bracket = vec![T::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                bracket[(i * n + j) * n + k] = a.coeff(i, j, k).clone() - a.coeff(j, i, k).clone();
            }
        }
    }
    LieAlgebra { dim: n, bracket }
}

/// A pair of actions `(∘_l, ∘_r)` of an algebra of dimension `algebra_dim`
/// on a space of dimension `carrier_dim`. Used both for modules and for
/// actions of one pre-Lie algebra on another.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<T> {
    algebra_dim: usize,
    carrier_dim: usize,
    left: Vec<T>,
    right: Vec<T>,
}

impl<T: Field> Representation<T> {
    pub fn new(algebra_dim: usize, carrier_dim: usize, left: Vec<T>, right: Vec<T>) -> Result<Self> {
        let size = algebra_dim * carrier_dim * carrier_dim;
        check_len("left action tensor", &left, size)?;
        check_len("right action tensor", &right, size)?;
        Ok(Self {
            algebra_dim,
            carrier_dim,
            left,
            right,
        })
    }

    /// Sparse 0-based entries: left `(i, a, b, c)`, right `(a, i, b, c)`.
    pub fn from_entries(
        algebra_dim: usize,
        carrier_dim: usize,
        left: &[(usize, usize, usize, T)],
        right: &[(usize, usize, usize, T)],
    ) -> Result<Self> {
        Self::new(
            algebra_dim,
            carrier_dim,
            sparse_tensor(&[algebra_dim, carrier_dim, carrier_dim], left)?,
            sparse_tensor(&[carrier_dim, algebra_dim, carrier_dim], right)?,
        )
    }

    pub fn trivial(algebra_dim: usize, carrier_dim: usize) -> Self {
        let size = algebra_dim * carrier_dim * carrier_dim;
        Self {
            algebra_dim,
            carrier_dim,
            left: vec![T::zero(); size],
            right: vec![T::zero(); size],
        }
    }

    /// The algebra acting on itself by left and right multiplication.
    pub fn regular(a: &PreLieAlgebra<T>) -> Self {
        let n = a.dim();
        let mut right = vec![T::zero(); n * n * n];
        for u in 0..n {
            for i in 0..n {
                for k in 0..n {
                    right[(u * n + i) * n + k] = a.coeff(u, i, k).clone();
                }
            }
        }
        Self {
            algebra_dim: n,
            carrier_dim: n,
            left: a.tensor().to_vec(),
            right,
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn left_tensor(&self) -> &[T] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[T] {
        &self.right
    }

    /// `e_i ∘_l v_a`
    pub fn left_basis(&self, i: usize, a: usize) -> &[T] {
        let v = self.carrier_dim;
        let start = (i * v + a) * v;
        &self.left[start..start + v]
    }

    /// `v_a ∘_r e_i`
    pub fn right_basis(&self, a: usize, i: usize) -> &[T] {
        let v = self.carrier_dim;
        let start = (a * self.algebra_dim + i) * v;
        &self.right[start..start + v]
    }

    pub fn act_left(&self, x: &[T], u: &[T]) -> Vec<T> {
        bilinear(x, u, self.carrier_dim, |i, a| self.left_basis(i, a).to_vec())
    }

    pub fn act_right(&self, u: &[T], x: &[T]) -> Vec<T> {
        bilinear(u, x, self.carrier_dim, |a, i| self.right_basis(a, i).to_vec())
    }

    pub fn is_trivial(&self) -> bool {
        is_zero_vec(&self.left) && is_zero_vec(&self.right)
    }

    /// Mutable access for building perturbed fixtures.
    pub fn left_tensor_mut(&mut self) -> &mut [T] {
        &mut self.left
    }

    pub fn right_tensor_mut(&mut self) -> &mut [T] {
        &mut self.right
    }

    fn check_shape(&self, algebra_dim: usize, carrier_dim: usize) -> Result<()> {
        if self.algebra_dim != algebra_dim || self.carrier_dim != carrier_dim {
            return Err(Error::Shape(format!(
                "representation is {}x{}, expected algebra dim {} and carrier dim {}",
                self.algebra_dim, self.carrier_dim, algebra_dim, carrier_dim
            )));
        }
        Ok(())
    }
}

/// Both representation axioms: `∘_l` is a representation of the commutator
/// Lie algebra, and the mixed associator identity couples `∘_l` with `∘_r`.
pub fn check_representation<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
) -> Result<Verdict<T>> {
    rep.check_shape(a.dim(), rep.carrier_dim())?;
    Ok(representation_axioms(a, rep))
}

fn representation_axioms<T: Field>(a: &PreLieAlgebra<T>, rep: &Representation<T>) -> Verdict<T> {
    let (n, v) = (a.dim(), rep.carrier_dim());
    for i in 0..n {
        for j in 0..n {
            for k in 0..v {
                let (x, y, u) = (unit(n, i), unit(n, j), unit(v, k));
                let lhs = rep.act_left(&a.commutator(&x, &y), &u);
                let rhs = sub(
                    &rep.act_left(&x, &rep.act_left(&y, &u)),
                    &rep.act_left(&y, &rep.act_left(&x, &u)),
                );
                expect_eq("left action is a Lie representation", &[i, j, k], lhs, rhs)?;
            }
        }
    }
    for i in 0..n {
        for k in 0..v {
            for j in 0..n {
                let (x, u, y) = (unit(n, i), unit(v, k), unit(n, j));
                let lhs = sub(
                    &rep.act_right(&rep.act_left(&x, &u), &y),
                    &rep.act_left(&x, &rep.act_right(&u, &y)),
                );
                let rhs = sub(
                    &rep.act_right(&rep.act_right(&u, &x), &y),
                    &rep.act_right(&u, &a.mul(&x, &y)),
                );
                expect_eq("mixed representation identity", &[i, k, j], lhs, rhs)?;
            }
        }
    }
    Ok(())
}

/// An action of `n` on `m`: a representation of `n` on the space of `m`
/// plus the two identities tying in the product of `m`.
pub fn check_action<T: Field>(
    n: &PreLieAlgebra<T>,
    m: &PreLieAlgebra<T>,
    action: &Representation<T>,
) -> Result<Verdict<T>> {
    action.check_shape(n.dim(), m.dim())?;
    Ok(action_axioms(n, m, action))
}

pub(crate) fn action_axioms<T: Field>(
    n: &PreLieAlgebra<T>,
    m: &PreLieAlgebra<T>,
    action: &Representation<T>,
) -> Verdict<T> {
    representation_axioms(n, action)?;
    let (dn, dm) = (n.dim(), m.dim());
    for i in 0..dn {
        for a in 0..dm {
            for b in 0..dm {
                let (x, u, v) = (unit(dn, i), unit(dm, a), unit(dm, b));
                let lhs = sub(
                    &m.mul(&action.act_left(&x, &u), &v),
                    &action.act_left(&x, &m.mul(&u, &v)),
                );
                let rhs = sub(
                    &m.mul(&action.act_right(&u, &x), &v),
                    &m.mul(&u, &action.act_left(&x, &v)),
                );
                expect_eq("action identity (x,u,v)", &[i, a, b], lhs, rhs)?;
            }
        }
    }
    for a in 0..dm {
        for b in 0..dm {
            for i in 0..dn {
                let (u, v, x) = (unit(dm, a), unit(dm, b), unit(dn, i));
                let lhs = sub(
                    &action.act_right(&m.mul(&u, &v), &x),
                    &m.mul(&u, &action.act_right(&v, &x)),
                );
                let rhs = sub(
                    &action.act_right(&m.mul(&v, &u), &x),
                    &m.mul(&v, &action.act_right(&u, &x)),
                );
                expect_eq("action identity (u,v,x)", &[a, b, i], lhs, rhs)?;
            }
        }
    }
    Ok(())
}

/// A linear map between two pre-Lie algebras, `target_dim x source_dim`.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism<'a, T> {
    pub source: &'a PreLieAlgebra<T>,
    pub target: &'a PreLieAlgebra<T>,
    pub matrix: Matrix<T>,
}

impl<'a, T: Field> AlgebraMorphism<'a, T> {
    pub fn new(source: &'a PreLieAlgebra<T>, target: &'a PreLieAlgebra<T>, matrix: Matrix<T>) -> Self {
        Self {
            source,
            target,
            matrix,
        }
    }

    pub fn check(&self) -> Result<Verdict<T>> {
        check_morphism(self.source, self.target, &self.matrix)
    }
}

/// `f(e_i ∘ e_j) = f(e_i) ∘ f(e_j)` for every basis pair.
pub fn check_morphism<T: Field>(
    source: &PreLieAlgebra<T>,
    target: &PreLieAlgebra<T>,
    f: &Matrix<T>,
) -> Result<Verdict<T>> {
    if f.rows() != target.dim() || f.cols() != source.dim() {
        return Err(Error::Shape(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let n = source.dim();
    let images: Vec<Vec<T>> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(source.mul_basis(i, j));
            let rhs = target.mul(&images[i], &images[j]);
            if let Err(v) = expect_eq("homomorphism", &[i, j], lhs, rhs) {
                return Ok(Err(v));
            }
        }
    }
    Ok(Ok(()))
}

/// `R ∘ A ⊂ R` and `A ∘ R ⊂ R`, tested on basis elements against each
/// basis vector of `R` (indices are `(i, a)` with `a` indexing `R`'s basis).
pub fn check_two_sided_ideal<T: Field>(
    a: &PreLieAlgebra<T>,
    ideal: &Subspace<T>,
) -> Result<Verdict<T>> {
    if ideal.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: ideal.ambient_dim(),
        });
    }
    let n = a.dim();
    for i in 0..n {
        for (k, r) in ideal.vectors().iter().enumerate() {
            let x = unit(n, i);
            let left = a.mul(&x, r);
            if !ideal.contains(&left) {
                return Ok(Err(Violation::new("A ∘ R ⊂ R", vec![i, k], left, vec![])));
            }
            let right = a.mul(r, &x);
            if !ideal.contains(&right) {
                return Ok(Err(Violation::new("R ∘ A ⊂ R", vec![i, k], right, vec![])));
            }
        }
    }
    Ok(Ok(()))
}

/// A Lie algebra module `x ▷ w`, tensor `A[i][a][b]`: `e_i ▷ w_a = Σ_b A[i][a][b] w_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieModule<T> {
    algebra_dim: usize,
    carrier_dim: usize,
    action: Vec<T>,
}

impl<T: Field> LieModule<T> {
    pub fn new(algebra_dim: usize, carrier_dim: usize, action: Vec<T>) -> Result<Self> {
        check_len("Lie action tensor", &action, algebra_dim * carrier_dim * carrier_dim)?;
        Ok(Self {
            algebra_dim,
            carrier_dim,
            action,
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn tensor(&self) -> &[T] {
        &self.action
    }

    pub fn act_basis(&self, i: usize, a: usize) -> &[T] {
        let w = self.carrier_dim;
        let start = (i * w + a) * w;
        &self.action[start..start + w]
    }

    pub fn act(&self, x: &[T], u: &[T]) -> Vec<T> {
        bilinear(x, u, self.carrier_dim, |i, a| self.act_basis(i, a).to_vec())
    }
}

/// `[x, y] ▷ w = x ▷ (y ▷ w) − y ▷ (x ▷ w)` on every basis triple.
pub fn check_lie_module<T: Field>(l: &LieAlgebra<T>, w: &LieModule<T>) -> Result<Verdict<T>> {
    if w.algebra_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: w.algebra_dim(),
        });
    }
    let (n, d) = (l.dim(), w.carrier_dim());
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                let (x, y, u) = (unit(n, i), unit(n, j), unit(d, a));
                let lhs = w.act(&l.bracket(&x, &y), &u);
                let rhs = sub(&w.act(&x, &w.act(&y, &u)), &w.act(&y, &w.act(&x, &u)));
                if let Err(v) = expect_eq("Lie module", &[i, j, a], lhs, rhs) {
                    return Ok(Err(v));
                }
            }
        }
    }
    Ok(Ok(()))
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

    #[test]
    fn abelian_and_idempotent_are_prelie() {
        for n in 1..=4 {
            assert_eq!(check_prelie(n, PreLieAlgebra::<Q>::abelian(n).tensor()).unwrap(), Ok(()));
        }
        assert_eq!(check_prelie(1, &[q(1)]).unwrap(), Ok(()));
    }

    #[test]
    fn non_prelie_tensor_reports_first_triple() {
        let t = sparse_tensor(&[2, 2, 2], &[(0, 0, 1, q(1)), (1, 0, 0, q(1))]).unwrap();
        let v = check_prelie(2, &t).unwrap().unwrap_err();
        // triples with i = j always pass; (e1,e2,e1) has associators −e2 and e2
        assert_eq!(v.one_based(), vec![1, 2, 1]);
        assert_eq!(v.lhs, vec![q(0), q(-1)]);
        assert_eq!(v.rhs, vec![q(0), q(1)]);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(check_prelie(2, &[q(1)]), Err(Error::Shape(_))));
        let rep = Representation::<Q>::trivial(3, 1);
        assert!(matches!(check_representation(&affine(), &rep), Err(Error::Shape(_))));
    }

    #[test]
    fn subadjacent_examples() {
        assert!(is_zero_vec(subadjacent_lie(&PreLieAlgebra::<Q>::abelian(3)).tensor()));
        let idem = PreLieAlgebra::new(1, vec![q(1)]).unwrap();
        assert!(is_zero_vec(subadjacent_lie(&idem).tensor()));
        let l = subadjacent_lie(&affine());
        assert_eq!(l.bracket_basis(0, 1), &[q(0), q(1)]);
        assert_eq!(l.bracket_basis(1, 0), &[q(0), q(-1)]);
        assert_eq!(l.check(), Ok(()));
    }

    #[test]
    fn representations() {
        let a = affine();
        assert_eq!(check_representation(&a, &Representation::trivial(2, 3)).unwrap(), Ok(()));
        assert_eq!(check_representation(&a, &Representation::regular(&a)).unwrap(), Ok(()));
        let bad = Representation::from_entries(2, 1, &[(1, 0, 0, q(1))], &[]).unwrap();
        assert!(check_representation(&a, &bad).unwrap().is_err());
    }

    #[test]
    fn actions() {
        let a = affine();
        let v = Representation::from_entries(2, 1, &[(0, 0, 0, q(1))], &[]).unwrap();
        assert_eq!(check_representation(&a, &v).unwrap(), Ok(()));
        assert_eq!(check_action(&a, &PreLieAlgebra::abelian(1), &v).unwrap(), Ok(()));
        assert_eq!(check_action(&a, &a, &Representation::regular(&a)).unwrap(), Ok(()));
        // a valid representation of the zero algebra on (e∘e = e) that breaks the
        // first action identity: (x∘_l u)∘v − x∘_l(u∘v) = 0 but (u∘_r x)∘v − u∘(x∘_l v) = −e
        let idem = PreLieAlgebra::new(1, vec![q(1)]).unwrap();
        let zero = PreLieAlgebra::abelian(1);
        let act = Representation::new(1, 1, vec![q(1)], vec![q(0)]).unwrap();
        assert_eq!(check_representation(&zero, &act).unwrap(), Ok(()));
        let v = check_action(&zero, &idem, &act).unwrap().unwrap_err();
        assert_eq!(v.axiom, "action identity (x,u,v)");
        assert_eq!((v.lhs, v.rhs), (vec![q(0)], vec![q(-1)]));
    }

    #[test]
    fn morphisms() {
        let idem = PreLieAlgebra::new(1, vec![q(1)]).unwrap();
        assert_eq!(check_morphism(&idem, &idem, &Matrix::identity(1)).unwrap(), Ok(()));
        assert_eq!(check_morphism(&idem, &idem, &Matrix::zeros(1, 1)).unwrap(), Ok(()));
        let v = check_morphism(&idem, &idem, &Matrix::from_rows(&[vec![q(2)]]).unwrap())
            .unwrap()
            .unwrap_err();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (vec![q(2)], vec![q(4)]));
    }

    #[test]
    fn ideals() {
        let a = affine();
        assert_eq!(check_two_sided_ideal(&a, &Subspace::whole(2)).unwrap(), Ok(()));
        assert_eq!(check_two_sided_ideal(&a, &Subspace::zero(2)).unwrap(), Ok(()));
        let e2 = Subspace::new(2, vec![vec![q(0), q(1)]]).unwrap();
        assert_eq!(check_two_sided_ideal(&a, &e2).unwrap(), Ok(()));
        let e1 = Subspace::new(2, vec![vec![q(1), q(0)]]).unwrap();
        assert!(check_two_sided_ideal(&a, &e1).unwrap().is_err());
    }
}
