//! The pre-Lie cochain complex `C^n(g, V) = Hom(∧^{n−1} g ⊗ g, V)`, its
//! cohomology, the Chevalley–Eilenberg complex of the commutator Lie algebra
//! with coefficients in `Hom(g, V)`, and the cochain isomorphism `φ` between
//! the two.
//!
//! Coordinates: a basis element of `C^n` is a pair `(I, j)` with `I` a strictly
//! increasing `(n−1)`-tuple and `j` unrestricted, enumerated lexicographically;
//! each pair carries `dim V` coordinates. A Lie `k`-cochain with values in
//! `W = Hom(g, V)` uses `I` of length `k` and the `W` coordinate `(j, b)`
//! flattened as `j * dim V + b`, so `φ` is coordinate-preserving.

use std::collections::HashMap;

use rand::Rng;

use crate::algebra::{LieAlgebra, LieModule, PreLieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, is_zero_vec, rank_kernel_image, rref, solve_particular, sub, unit, Complement, Matrix,
    Subspace,
};
use crate::scalar::Field;

/// Strictly increasing `k`-tuples from `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts a tuple of indices, returning the permutation sign, or `None` when
/// an index repeats.
fn sort_with_sign(args: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = args.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

#[derive(Debug, Clone)]
struct TupleIndex {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleIndex {
    fn new(n: usize, k: usize) -> Self {
        let tuples = combinations(n, k);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Self { tuples, index }
    }
}

/// The canonical basis of `∧^{n−1} g ⊗ g`.
#[derive(Debug, Clone)]
pub struct CochainBasis {
    arity: usize,
    algebra_dim: usize,
    wedge: TupleIndex,
}

impl CochainBasis {
    pub fn new(arity: usize, algebra_dim: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self {
            arity,
            algebra_dim,
            wedge: TupleIndex::new(algebra_dim, arity - 1),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.wedge.tuples.len() * self.algebra_dim
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs `(I, j)` in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = (&[usize], usize)> + '_ {
        self.wedge
            .tuples
            .iter()
            .flat_map(move |t| (0..self.algebra_dim).map(move |j| (t.as_slice(), j)))
    }

    /// Position of `(I, j)`; `I` must be strictly increasing.
    pub fn position(&self, wedge: &[usize], last: usize) -> Option<usize> {
        self.wedge
            .index
            .get(wedge)
            .map(|w| w * self.algebra_dim + last)
    }
}

/// A pre-Lie cochain with values in a module of dimension `module_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<T> {
    arity: usize,
    algebra_dim: usize,
    module_dim: usize,
    coeffs: Vec<T>,
}

pub(crate) fn cochain_len(arity: usize, algebra_dim: usize, module_dim: usize) -> usize {
    binomial(algebra_dim, arity - 1) * algebra_dim * module_dim
}

impl<T: Field> Cochain<T> {
    pub fn zero(arity: usize, algebra_dim: usize, module_dim: usize) -> Self {
        assert!(arity >= 1, "cochains start in arity 1");
        Self {
            arity,
            algebra_dim,
            module_dim,
            coeffs: vec![T::zero(); cochain_len(arity, algebra_dim, module_dim)],
        }
    }

    pub fn from_coordinates(
        arity: usize,
        algebra_dim: usize,
        module_dim: usize,
        coeffs: Vec<T>,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        let expected = cochain_len(arity, algebra_dim, module_dim);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self {
            arity,
            algebra_dim,
            module_dim,
            coeffs,
        })
    }

    /// Builds a cochain from values on arbitrary basis tuples (length `arity`),
    /// storing `value` at the canonically sorted position with the permutation
    /// sign. Tuples with a repeated index among the first `arity − 1` slots
    /// are rejected.
    pub fn from_values(
        arity: usize,
        algebra_dim: usize,
        module_dim: usize,
        values: &[(Vec<usize>, Vec<T>)],
    ) -> Result<Self> {
        let mut f = Self::zero(arity, algebra_dim, module_dim);
        let basis = CochainBasis::new(arity, algebra_dim)?;
        for (args, value) in values {
            if args.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: args.len(),
                });
            }
            if value.len() != module_dim || args.iter().any(|&a| a >= algebra_dim) {
                return Err(Error::Shape(format!("cochain value at {args:?}")));
            }
            let (sorted, odd) = sort_with_sign(&args[..arity - 1])
                .ok_or_else(|| Error::Shape(format!("repeated wedge index in {args:?}")))?;
            let pos = basis.position(&sorted, args[arity - 1]).expect("valid tuple");
            let sign = if odd { -T::one() } else { T::one() };
            let slot = &mut f.coeffs[pos * module_dim..(pos + 1) * module_dim];
            axpy(slot, &sign, value);
        }
        Ok(f)
    }

    pub fn random<R: Rng>(arity: usize, algebra_dim: usize, module_dim: usize, rng: &mut R) -> Self {
        let len = cochain_len(arity, algebra_dim, module_dim);
        Self {
            arity,
            algebra_dim,
            module_dim,
            coeffs: (0..len).map(|_| T::from_int(rng.gen_range(-3..=3))).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn coordinates(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    pub fn sub(&self, other: &Cochain<T>) -> Result<Cochain<T>> {
        self.same_space(other)?;
        Ok(Self {
            coeffs: sub(&self.coeffs, &other.coeffs),
            ..self.clone()
        })
    }

    pub fn add(&self, other: &Cochain<T>) -> Result<Cochain<T>> {
        self.same_space(other)?;
        Ok(Self {
            coeffs: crate::linalg::add(&self.coeffs, &other.coeffs),
            ..self.clone()
        })
    }

    fn same_space(&self, other: &Cochain<T>) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        if (self.algebra_dim, self.module_dim) != (other.algebra_dim, other.module_dim) {
            return Err(Error::Shape("cochains live over different spaces".into()));
        }
        Ok(())
    }

    /// Value on basis elements `e_{args[0]}, …, e_{args[n−1]}`: alternating in
    /// the first `n − 1` slots, zero on a repeated wedge index.
    pub fn eval_basis(&self, args: &[usize]) -> Vec<T> {
        assert_eq!(args.len(), self.arity, "argument count");
        let n = self.arity;
        let Some((sorted, odd)) = sort_with_sign(&args[..n - 1]) else {
            return vec![T::zero(); self.module_dim];
        };
        let pos = binomial_position(&sorted, self.algebra_dim) * self.algebra_dim + args[n - 1];
        let slice = &self.coeffs[pos * self.module_dim..(pos + 1) * self.module_dim];
        if odd {
            slice.iter().map(|x| -x.clone()).collect()
        } else {
            slice.to_vec()
        }
    }

    /// Multilinear evaluation on arbitrary coordinate vectors.
    pub fn eval(&self, args: &[Vec<T>]) -> Vec<T> {
        assert_eq!(args.len(), self.arity, "argument count");
        let mut out = vec![T::zero(); self.module_dim];
        let mut idx = Vec::with_capacity(args.len());
        expand(args, &mut idx, T::one(), &mut |ids, c| {
            axpy(&mut out, &c, &self.eval_basis(ids));
        });
        out
    }
}

/// Position of a strictly increasing tuple in the lexicographic enumeration
/// of `combinations(n, tuple.len())`.
fn binomial_position(tuple: &[usize], n: usize) -> usize {
    let k = tuple.len();
    let mut pos = 0;
    let mut prev = 0;
    for (slot, &t) in tuple.iter().enumerate() {
        for skipped in prev..t {
            pos += binomial(n - skipped - 1, k - slot - 1);
        }
        prev = t + 1;
    }
    pos
}

/// Expands a multilinear call over the nonzero coordinates of each argument.
fn expand<T: Field, F: FnMut(&[usize], T)>(
    args: &[Vec<T>],
    idx: &mut Vec<usize>,
    coeff: T,
    f: &mut F,
) {
    if idx.len() == args.len() {
        f(idx, coeff);
        return;
    }
    let slot = idx.len();
    for (i, c) in args[slot].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        idx.push(i);
        expand(args, idx, coeff.clone() * c.clone(), f);
        idx.pop();
    }
}

fn sign<T: Field>(odd: bool) -> T {
    if odd {
        -T::one()
    } else {
        T::one()
    }
}

fn without<T: Clone>(xs: &[T], skip: &[usize]) -> Vec<T> {
    xs.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, x)| x.clone())
        .collect()
}

fn check_cochain_shape<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    f: &Cochain<T>,
) -> Result<()> {
    if rep.algebra_dim() != a.dim() {
        return Err(Error::Shape("representation is over a different algebra".into()));
    }
    if f.algebra_dim != a.dim() || f.module_dim != rep.carrier_dim() {
        return Err(Error::Shape(format!(
            "cochain over ({}, {}) used with algebra dim {} and module dim {}",
            f.algebra_dim,
            f.module_dim,
            a.dim(),
            rep.carrier_dim()
        )));
    }
    Ok(())
}

/// `(df)(x_1, …, x_{n+1})` on arbitrary coordinate vectors, `f` of arity `n`.
///
/// ```text
/// Σ_i (−1)^{i+1} x_i ∘_l f(x_1..x̂_i..x_{n+1})
/// + Σ_i (−1)^{i+1} f(x_1..x̂_i..x_n, x_i) ∘_r x_{n+1}
/// − Σ_i (−1)^{i+1} f(x_1..x̂_i..x_n, x_i ∘ x_{n+1})
/// + Σ_{i<j≤n} (−1)^{i+j} f([x_i, x_j], x_1..x̂_i..x̂_j..x_{n+1})
/// ```
pub fn eval_coboundary<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    f: &Cochain<T>,
    xs: &[Vec<T>],
) -> Vec<T> {
    let n = f.arity;
    assert_eq!(xs.len(), n + 1, "coboundary takes arity + 1 arguments");
    let last = &xs[n];
    let head = &xs[..n];
    let mut out = vec![T::zero(); rep.carrier_dim()];
    for i in 0..n {
        // (−1)^{i+1} with 1-based i is + for the 0-based index 0
        let s: T = sign(i % 2 == 1);
        let term1 = rep.act_left(&xs[i], &f.eval(&without(xs, &[i])));
        axpy(&mut out, &s, &term1);

        let mut args = without(head, &[i]);
        args.push(xs[i].clone());
        let term2 = rep.act_right(&f.eval(&args), last);
        axpy(&mut out, &s, &term2);

        let mut args = without(head, &[i]);
        args.push(a.mul(&xs[i], last));
        let term3 = f.eval(&args);
        axpy(&mut out, &-s, &term3);
    }
    for i in 0..n {
        for j in i + 1..n {
            // (−1)^{i+j} with 1-based indices has the same parity for 0-based ones
            let s: T = sign((i + j) % 2 == 1);
            let mut args = vec![a.commutator(&xs[i], &xs[j])];
            args.extend(without(xs, &[i, j]));
            axpy(&mut out, &s, &f.eval(&args));
        }
    }
    out
}

pub fn coboundary<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    f: &Cochain<T>,
) -> Result<Cochain<T>> {
    check_cochain_shape(a, rep, f)?;
    let (g, v) = (a.dim(), rep.carrier_dim());
    let basis = CochainBasis::new(f.arity + 1, g)?;
    let mut coeffs = Vec::with_capacity(basis.len() * v);
    for (wedge, last) in basis.elements() {
        let mut xs: Vec<Vec<T>> = wedge.iter().map(|&i| unit(g, i)).collect();
        xs.push(unit(g, last));
        coeffs.extend(eval_coboundary(a, rep, f, &xs));
    }
    Cochain::from_coordinates(f.arity + 1, g, v, coeffs)
}

/// The matrix of `d: C^n → C^{n+1}` in canonical coordinates.
pub fn coboundary_matrix<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    n: usize,
) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    }
    let (g, v) = (a.dim(), rep.carrier_dim());
    let cols = cochain_len(n, g, v);
    let rows = cochain_len(n + 1, g, v);
    let mut columns = Vec::with_capacity(cols);
    for c in 0..cols {
        let f = Cochain::from_coordinates(n, g, v, unit(cols, c))?;
        columns.push(coboundary(a, rep, &f)?.coeffs);
    }
    Matrix::from_columns(rows, &columns)
}

/// `H^n(g, V)` with deterministic representatives.
#[derive(Debug, Clone)]
pub struct CohomologySpace<T> {
    pub arity: usize,
    pub dimension: usize,
    pub representatives: Vec<Cochain<T>>,
    algebra_dim: usize,
    module_dim: usize,
    differential: Matrix<T>,
    boundaries: Complement<T>,
    reduced_reps: Matrix<T>,
}

impl<T: Field> CohomologySpace<T> {
    /// Coordinates of `[f]` against `representatives`.
    pub fn class_coordinates(&self, f: &Cochain<T>) -> Result<Vec<T>> {
        if f.arity != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: f.arity,
            });
        }
        if (f.algebra_dim, f.module_dim) != (self.algebra_dim, self.module_dim) {
            return Err(Error::Shape("cochain over a different space".into()));
        }
        if !is_zero_vec(&self.differential.apply(&f.coeffs)) {
            return Err(Error::NotACocycle("class coordinates need d f = 0".into()));
        }
        let reduced = self.boundaries.reduce(&f.coeffs);
        solve_particular(&self.reduced_reps, &reduced)?
            .ok_or_else(|| Error::InternalAssertion("cocycle outside span of representatives".into()))
    }
}

/// `H^1 = ker d_1`; for `n ≥ 2`, `H^n = ker d_n / im d_{n−1}`.
pub fn cohomology<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    n: usize,
) -> Result<CohomologySpace<T>> {
    let (g, v) = (a.dim(), rep.carrier_dim());
    let d_n = coboundary_matrix(a, rep, n)?;
    let cocycles = rank_kernel_image(&d_n).kernel;
    let boundaries = if n == 1 {
        Subspace::zero(d_n.cols())
    } else {
        rank_kernel_image(&coboundary_matrix(a, rep, n - 1)?).image
    };
    let complement = Complement::new(&boundaries)?;
    let reduced: Vec<Vec<T>> = cocycles
        .vectors()
        .iter()
        .map(|z| complement.reduce(z))
        .collect();
    let reduced_matrix = Matrix::from_columns(complement.dim(), &reduced)?;
    let (_, pivots) = rref(&reduced_matrix);
    let representatives = pivots
        .iter()
        .map(|&p| Cochain::from_coordinates(n, g, v, complement.lift(&reduced[p])))
        .collect::<Result<Vec<_>>>()?;
    let reduced_reps = Matrix::from_columns(
        complement.dim(),
        &pivots.iter().map(|&p| reduced[p].clone()).collect::<Vec<_>>(),
    )?;
    Ok(CohomologySpace {
        arity: n,
        dimension: pivots.len(),
        representatives,
        algebra_dim: g,
        module_dim: v,
        differential: d_n,
        boundaries: complement,
        reduced_reps,
    })
}

/// A primitive `β` with `dβ = f1 − f2`, or `None` when the classes differ.
pub fn are_cohomologous<T: Field>(
    a: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    f1: &Cochain<T>,
    f2: &Cochain<T>,
) -> Result<Option<Cochain<T>>> {
    if f1.arity != f2.arity {
        return Err(Error::ArityMismatch {
            expected: f1.arity,
            found: f2.arity,
        });
    }
    if f1.arity < 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: f1.arity,
        });
    }
    check_cochain_shape(a, rep, f1)?;
    let diff = f1.sub(f2)?;
    let d = coboundary_matrix(a, rep, f1.arity - 1)?;
    solve_particular(&d, &diff.coeffs)?
        .map(|beta| Cochain::from_coordinates(f1.arity - 1, a.dim(), rep.carrier_dim(), beta))
        .transpose()
}

/// An alternating `k`-cochain on a Lie algebra with values in a module.
#[derive(Debug, Clone, PartialEq)]
pub struct LieCochain<T> {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    coeffs: Vec<T>,
}

impl<T: Field> LieCochain<T> {
    pub fn zero(degree: usize, algebra_dim: usize, module_dim: usize) -> Self {
        Self {
            degree,
            algebra_dim,
            module_dim,
            coeffs: vec![T::zero(); binomial(algebra_dim, degree) * module_dim],
        }
    }

    pub fn from_coordinates(
        degree: usize,
        algebra_dim: usize,
        module_dim: usize,
        coeffs: Vec<T>,
    ) -> Result<Self> {
        let expected = binomial(algebra_dim, degree) * module_dim;
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self {
            degree,
            algebra_dim,
            module_dim,
            coeffs,
        })
    }

    pub fn random<R: Rng>(degree: usize, algebra_dim: usize, module_dim: usize, rng: &mut R) -> Self {
        let len = binomial(algebra_dim, degree) * module_dim;
        Self {
            degree,
            algebra_dim,
            module_dim,
            coeffs: (0..len).map(|_| T::from_int(rng.gen_range(-3..=3))).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coordinates(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    pub fn eval_basis(&self, args: &[usize]) -> Vec<T> {
        assert_eq!(args.len(), self.degree, "argument count");
        let Some((sorted, odd)) = sort_with_sign(args) else {
            return vec![T::zero(); self.module_dim];
        };
        let pos = binomial_position(&sorted, self.algebra_dim);
        let slice = &self.coeffs[pos * self.module_dim..(pos + 1) * self.module_dim];
        if odd {
            slice.iter().map(|x| -x.clone()).collect()
        } else {
            slice.to_vec()
        }
    }

    pub fn eval(&self, args: &[Vec<T>]) -> Vec<T> {
        assert_eq!(args.len(), self.degree, "argument count");
        let mut out = vec![T::zero(); self.module_dim];
        let mut idx = Vec::with_capacity(args.len());
        expand(args, &mut idx, T::one(), &mut |ids, c| {
            axpy(&mut out, &c, &self.eval_basis(ids));
        });
        out
    }
}

/// `Hom(g, V)` as a module over the commutator Lie algebra:
/// `(x ▷ f)(y) = x ∘_l f(y) + f(x) ∘_r y − f(x ∘ y)`.
pub fn hom_module<T: Field>(a: &PreLieAlgebra<T>, rep: &Representation<T>) -> LieModule<T> {
    let (g, v) = (a.dim(), rep.carrier_dim());
    let w = g * v;
    let mut tensor = vec![T::zero(); g * w * w];
    for x in 0..g {
        for j in 0..g {
            for b in 0..v {
                // f = the map e_j ↦ v_b, zero on other basis vectors
                let src = j * v + b;
                let mut image = vec![T::zero(); w];
                for y in 0..g {
                    let mut val = vec![T::zero(); v];
                    if y == j {
                        axpy(&mut val, &T::one(), rep.left_basis(x, b));
                    }
                    if x == j {
                        axpy(&mut val, &T::one(), rep.right_basis(b, y));
                    }
                    let c = a.coeff(x, y, j).clone();
                    val[b] = val[b].clone() - c;
                    image[y * v..(y + 1) * v].clone_from_slice(&val);
                }
                let start = (x * w + src) * w;
                tensor[start..start + w].clone_from_slice(&image);
            }
        }
    }
    LieModule::new(g, w, tensor).expect("shape by construction")
}

/// Chevalley–Eilenberg differential:
/// `(dF)(x_1..x_{k+1}) = Σ_i (−1)^{i+1} x_i ▷ F(..x̂_i..) + Σ_{i<j} (−1)^{i+j} F([x_i,x_j], ..x̂_i..x̂_j..)`.
pub fn lie_coboundary<T: Field>(
    l: &LieAlgebra<T>,
    w: &LieModule<T>,
    f: &LieCochain<T>,
) -> Result<LieCochain<T>> {
    if w.algebra_dim() != l.dim() || f.algebra_dim != l.dim() || f.module_dim != w.carrier_dim() {
        return Err(Error::Shape("Lie cochain, algebra and module do not match".into()));
    }
    let (g, k) = (l.dim(), f.degree);
    let mut coeffs = Vec::new();
    for tuple in combinations(g, k + 1) {
        let xs: Vec<Vec<T>> = tuple.iter().map(|&i| unit(g, i)).collect();
        let mut out = vec![T::zero(); w.carrier_dim()];
        for i in 0..=k {
            let s: T = sign(i % 2 == 1);
            let term = w.act(&xs[i], &f.eval(&without(&xs, &[i])));
            axpy(&mut out, &s, &term);
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let s: T = sign((i + j) % 2 == 1);
                let mut args = vec![l.bracket(&xs[i], &xs[j])];
                args.extend(without(&xs, &[i, j]));
                axpy(&mut out, &s, &f.eval(&args));
            }
        }
        coeffs.extend(out);
    }
    LieCochain::from_coordinates(k + 1, g, w.carrier_dim(), coeffs)
}

pub fn lie_coboundary_matrix<T: Field>(
    l: &LieAlgebra<T>,
    w: &LieModule<T>,
    k: usize,
) -> Result<Matrix<T>> {
    let (g, d) = (l.dim(), w.carrier_dim());
    let cols = binomial(g, k) * d;
    let rows = binomial(g, k + 1) * d;
    let mut columns = Vec::with_capacity(cols);
    for c in 0..cols {
        let f = LieCochain::from_coordinates(k, g, d, unit(cols, c))?;
        columns.push(lie_coboundary(l, w, &f)?.coeffs);
    }
    Matrix::from_columns(rows, &columns)
}

/// `dim H^k_Lie(l, W)`, with `H^0 = ker d_0`.
pub fn lie_cohomology_dim<T: Field>(l: &LieAlgebra<T>, w: &LieModule<T>, k: usize) -> Result<usize> {
    let d_k = lie_coboundary_matrix(l, w, k)?;
    let cocycles = d_k.cols() - d_k.rank();
    let boundaries = if k == 0 {
        0
    } else {
        lie_coboundary_matrix(l, w, k - 1)?.rank()
    };
    Ok(cocycles - boundaries)
}

/// `(φf)(x_1, …, x_{n−1})(x_n) = f(x_1, …, x_n)`.
pub fn phi_map<T: Field>(f: &Cochain<T>) -> LieCochain<T> {
    let (n, g, v) = (f.arity, f.algebra_dim, f.module_dim);
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for tuple in combinations(g, n - 1) {
        for last in 0..g {
            let mut args = tuple.clone();
            args.push(last);
            coeffs.extend(f.eval_basis(&args));
        }
    }
    LieCochain::from_coordinates(n - 1, g, g * v, coeffs).expect("same dimension")
}

/// Inverse of [`phi_map`]; `module_dim` is `dim V` (the Lie module is `g * dim V`).
pub fn phi_inverse<T: Field>(f: &LieCochain<T>, module_dim: usize) -> Result<Cochain<T>> {
    let g = f.algebra_dim;
    if f.module_dim != g * module_dim {
        return Err(Error::DimensionMismatch {
            expected: g * module_dim,
            found: f.module_dim,
        });
    }
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for tuple in combinations(g, f.degree) {
        let value = f.eval_basis(&tuple);
        coeffs.extend(value);
    }
    Cochain::from_coordinates(f.degree + 1, g, module_dim, coeffs)
}

/// Matrix of `φ` on `C^n`, columns indexed by `C^n` coordinates.
pub fn phi_matrix<T: Field>(n: usize, algebra_dim: usize, module_dim: usize) -> Result<Matrix<T>> {
    let len = cochain_len(n, algebra_dim, module_dim);
    let columns = (0..len)
        .map(|c| {
            Cochain::from_coordinates(n, algebra_dim, module_dim, unit(len, c))
                .map(|f| phi_map(&f).coeffs)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(len, &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn idem() -> PreLieAlgebra<Q> {
        PreLieAlgebra::new(1, vec![q(1)]).unwrap()
    }

    #[test]
    fn basis_enumeration() {
        let b = CochainBasis::new(3, 3).unwrap();
        assert_eq!(b.len(), binomial(3, 2) * 3);
        let els: Vec<(Vec<usize>, usize)> = b.elements().map(|(i, j)| (i.to_vec(), j)).collect();
        assert_eq!(els[0], (vec![0, 1], 0));
        assert_eq!(els[3], (vec![0, 2], 0));
        for (pos, (w, j)) in els.iter().enumerate() {
            assert_eq!(b.position(w, *j), Some(pos));
            assert_eq!(binomial_position(w, 3) * 3 + j, pos);
        }
        assert!(CochainBasis::new(4, 2).unwrap().is_empty());
    }

    #[test]
    fn alternation_in_wedge_slots() {
        let mut rng = rand::thread_rng();
        let f = Cochain::<Q>::random(3, 3, 2, &mut rng);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let a = f.eval_basis(&[i, j, k]);
                    let b = f.eval_basis(&[j, i, k]);
                    assert_eq!(a, b.iter().map(|x| -x.clone()).collect::<Vec<_>>());
                }
                assert!(is_zero_vec(&f.eval_basis(&[i, i, j])));
            }
        }
    }

    #[test]
    fn abelian_trivial_coboundary_vanishes() {
        let a = PreLieAlgebra::<Q>::abelian(3);
        let rep = Representation::trivial(3, 2);
        let f = Cochain::random(2, 3, 2, &mut rand::thread_rng());
        assert!(coboundary(&a, &rep, &f).unwrap().is_zero());
        assert!(coboundary_matrix(&a, &rep, 2).unwrap().is_zero());
    }

    #[test]
    fn idempotent_identity_cochain() {
        let a = idem();
        let rep = Representation::regular(&a);
        let f = Cochain::from_coordinates(1, 1, 1, vec![q(1)]).unwrap();
        // e∘e + e∘e − e = e
        assert_eq!(coboundary(&a, &rep, &f).unwrap().coordinates(), &[q(1)]);
        assert_eq!(coboundary_matrix(&a, &rep, 1).unwrap(), Matrix::from_rows(&[vec![q(1)]]).unwrap());
        assert_eq!(cohomology(&a, &rep, 1).unwrap().dimension, 0);
    }

    #[test]
    fn degenerate_arity_is_zero_space() {
        let a = PreLieAlgebra::<Q>::abelian(1);
        let rep = Representation::trivial(1, 1);
        let h = cohomology(&a, &rep, 4).unwrap();
        assert_eq!(h.dimension, 0);
        assert!(h.representatives.is_empty());
    }

    #[test]
    fn cohomologous_examples() {
        let a = PreLieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap();
        let rep = Representation::regular(&a);
        let mut rng = rand::thread_rng();
        let f = coboundary(&a, &rep, &Cochain::random(1, 2, 2, &mut rng)).unwrap();
        let beta = are_cohomologous(&a, &rep, &f, &f).unwrap().unwrap();
        assert!(beta.is_zero());
        let b0 = Cochain::random(1, 2, 2, &mut rng);
        let g = f.add(&coboundary(&a, &rep, &b0).unwrap()).unwrap();
        let beta = are_cohomologous(&a, &rep, &g, &f).unwrap().unwrap();
        assert_eq!(coboundary(&a, &rep, &beta).unwrap(), g.sub(&f).unwrap());
        assert!(matches!(
            are_cohomologous(&a, &rep, &b0, &b0),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn representative_is_not_a_coboundary() {
        let a = PreLieAlgebra::<Q>::abelian(2);
        let rep = Representation::trivial(2, 1);
        let h = cohomology(&a, &rep, 2).unwrap();
        assert_eq!(h.dimension, 4);
        let zero = Cochain::zero(2, 2, 1);
        for r in &h.representatives {
            assert!(are_cohomologous(&a, &rep, r, &zero).unwrap().is_none());
        }
    }

    #[test]
    fn phi_round_trip() {
        let f = Cochain::<Q>::random(3, 3, 2, &mut rand::thread_rng());
        let lf = phi_map(&f);
        assert_eq!(lf.degree(), 2);
        assert_eq!(phi_inverse(&lf, 2).unwrap(), f);
        let h1 = Cochain::<Q>::from_coordinates(1, 2, 1, vec![q(3), q(-1)]).unwrap();
        assert_eq!(phi_map(&h1).coordinates(), &[q(3), q(-1)]);
    }

    #[test]
    fn lie_degree_zero_is_the_action() {
        let a = PreLieAlgebra::from_entries(2, &[(0, 1, 1, q(1))]).unwrap();
        let rep = Representation::regular(&a);
        let w = hom_module(&a, &rep);
        let l = crate::algebra::subadjacent_lie(&a);
        let f = LieCochain::<Q>::random(0, 2, 4, &mut rand::thread_rng());
        let df = lie_coboundary(&l, &w, &f).unwrap();
        for x in 0..2 {
            assert_eq!(df.eval_basis(&[x]), w.act(&unit(2, x), f.coordinates()));
        }
    }
}
