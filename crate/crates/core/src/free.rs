//! The free pre-Lie algebra on labeled rooted trees, truncated by vertex
//! count.
//!
//! `s ∘ t` grafts `s` as a new child onto each vertex of `t` in turn. Trees
//! are kept in canonical form: children sorted in descending canonical order,
//! where trees compare by degree, then root label, then child sequence.
//! Labels print as `a`, `b`, `c`, …; a tree prints as `label(child,child,…)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{PreLieAlgebra, Representation, Verdict, Violation};
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, sub};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    label: usize,
    children: Vec<Tree>,
    degree: usize,
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.label.cmp(&other.label))
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Tree {
    pub fn leaf(label: usize) -> Self {
        Self {
            label,
            children: Vec::new(),
            degree: 1,
        }
    }

    /// Canonicalizes the child multiset.
    pub fn new(label: usize, mut children: Vec<Tree>) -> Self {
        children.sort_by(|a, b| b.cmp(a));
        let degree = 1 + children.iter().map(|c| c.degree).sum::<usize>();
        Self {
            label,
            children,
            degree,
        }
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Every tree obtained by attaching `s` as a new child of one vertex of
    /// `self`, one entry per vertex.
    pub fn graft(&self, s: &Tree) -> Vec<Tree> {
        let mut out = Vec::with_capacity(self.degree);
        let mut at_root = self.children.clone();
        at_root.push(s.clone());
        out.push(Tree::new(self.label, at_root));
        for (i, child) in self.children.iter().enumerate() {
            for grafted in child.graft(s) {
                let mut children = self.children.clone();
                children[i] = grafted;
                out.push(Tree::new(self.label, children));
            }
        }
        out
    }

    /// Largest label used, plus one.
    pub fn label_bound(&self) -> usize {
        self.children
            .iter()
            .map(Tree::label_bound)
            .max()
            .unwrap_or(0)
            .max(self.label + 1)
    }

    pub fn parse(s: &str) -> Result<Tree> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::InvalidInput(format!("trailing input in tree {s:?}")));
        }
        Ok(t)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree> {
    let label = match chars.get(*pos) {
        Some(c) if c.is_ascii_lowercase() => *c as usize - 'a' as usize,
        other => {
            return Err(Error::InvalidInput(format!(
                "expected a label at position {pos}, found {other:?}"
            )))
        }
    };
    *pos += 1;
    let mut children = Vec::new();
    if chars.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            children.push(parse_tree(chars, pos)?);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "expected ',' or ')' at position {pos}, found {other:?}"
                    )))
                }
            }
        }
    }
    Ok(Tree::new(label, children))
}

pub fn label_name(label: usize) -> String {
    if label < 26 {
        ((b'a' + label as u8) as char).to_string()
    } else {
        format!("x{label}")
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", label_name(self.label))?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All canonical trees with exactly `degree` vertices and labels below
/// `num_labels`, in ascending canonical order.
pub fn enumerate_trees(num_labels: usize, degree: usize) -> Vec<Tree> {
    let mut by_degree: Vec<Vec<Tree>> = vec![Vec::new()];
    for d in 1..=degree {
        // all trees of degree < d, ascending, as candidate children
        let smaller: Vec<Tree> = by_degree.iter().flatten().cloned().collect();
        let mut trees = Vec::new();
        for label in 0..num_labels {
            let mut forest = Vec::new();
            forests(&smaller, d - 1, smaller.len(), &mut forest, &mut |children| {
                trees.push(Tree::new(label, children.to_vec()));
            });
        }
        trees.sort();
        by_degree.push(trees);
    }
    by_degree.pop().unwrap_or_default()
}

/// Non-increasing sequences of candidates (by index, `< bound`) whose
/// degrees sum to `remaining`.
fn forests<F: FnMut(&[Tree])>(
    candidates: &[Tree],
    remaining: usize,
    bound: usize,
    cur: &mut Vec<Tree>,
    emit: &mut F,
) {
    if remaining == 0 {
        emit(cur);
        return;
    }
    for idx in (0..bound).rev() {
        let t = &candidates[idx];
        if t.degree > remaining {
            continue;
        }
        cur.push(t.clone());
        forests(candidates, remaining - t.degree, idx + 1, cur, emit);
        cur.pop();
    }
}

/// A finite combination of trees of degree at most `truncation`.
#[derive(Clone, PartialEq)]
pub struct TreePoly<T> {
    terms: BTreeMap<Tree, T>,
    truncation: usize,
    truncated: bool,
}

impl<T: Field> TreePoly<T> {
    pub fn zero(truncation: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            truncation,
            truncated: false,
        }
    }

    pub fn from_tree(tree: Tree, truncation: usize) -> Self {
        let mut p = Self::zero(truncation);
        p.add_term(tree, T::one());
        p
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Whether some term was dropped for exceeding the truncation degree.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, tree: &Tree) -> T {
        self.terms.get(tree).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tree: Tree, c: T) {
        if tree.degree > self.truncation {
            self.truncated = true;
            return;
        }
        let entry = self.terms.entry(tree).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn same_truncation(&self, other: &Self) -> Result<()> {
        if self.truncation == other.truncation {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.truncation, other.truncation))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_truncation(other)?;
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.truncation);
        out.truncated = self.truncated;
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c.clone() * s.clone());
        }
        out
    }
}

/// Bilinear grafting product, dropping (and flagging) terms above the
/// truncation degree.
pub fn graft_product<T: Field>(s: &TreePoly<T>, t: &TreePoly<T>) -> Result<TreePoly<T>> {
    s.same_truncation(t)?;
    let mut out = TreePoly::zero(s.truncation);
    out.truncated = s.truncated || t.truncated;
    for (ts, cs) in &s.terms {
        for (tt, ct) in &t.terms {
            let c = cs.clone() * ct.clone();
            if ts.degree + tt.degree > s.truncation {
                out.truncated = true;
                continue;
            }
            for grafted in tt.graft(ts) {
                out.add_term(grafted, c.clone());
            }
        }
    }
    Ok(out)
}

pub fn commutator<T: Field>(s: &TreePoly<T>, t: &TreePoly<T>) -> Result<TreePoly<T>> {
    graft_product(s, t)?.sub(&graft_product(t, s)?)
}

impl<T: Field> fmt::Display for TreePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (tree, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude != "1" {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for TreePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreePoly[D={}{}]({self})", self.truncation, if self.truncated { ", truncated" } else { "" })
    }
}

/// Memoized evaluation of trees in a pre-Lie algebra under a label
/// assignment: the unique homomorphism extending `label ↦ assign[label]`.
pub struct Evaluator<'a, T> {
    algebra: &'a PreLieAlgebra<T>,
    assign: &'a [Vec<T>],
    memo: HashMap<Tree, Vec<T>>,
}

impl<'a, T: Field> Evaluator<'a, T> {
    pub fn new(algebra: &'a PreLieAlgebra<T>, assign: &'a [Vec<T>]) -> Result<Self> {
        if assign.iter().any(|v| v.len() != algebra.dim()) {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: assign.iter().map(Vec::len).find(|&l| l != algebra.dim()).unwrap_or(0),
            });
        }
        Ok(Self {
            algebra,
            assign,
            memo: HashMap::new(),
        })
    }

    /// With `τ₁` the first root branch and `τ'` the rest,
    /// `τ₁ ∘ τ' = τ + Σ_{v ≠ root} (τ₁ grafted at v)`; the correction trees
    /// have the same degree and fewer root children.
    pub fn tree(&mut self, t: &Tree) -> Result<Vec<T>> {
        if let Some(v) = self.memo.get(t) {
            return Ok(v.clone());
        }
        let value = if t.children.is_empty() {
            self.assign
                .get(t.label)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("no value for label {}", label_name(t.label))))?
        } else {
            let first = t.children[0].clone();
            let rest = Tree::new(t.label, t.children[1..].to_vec());
            let mut value = self.algebra.mul(&self.tree(&first)?, &self.tree(&rest)?);
            for grafted in rest.graft(&first).into_iter().skip(1) {
                let correction = self.tree(&grafted)?;
                value = sub(&value, &correction);
            }
            value
        };
        self.memo.insert(t.clone(), value.clone());
        Ok(value)
    }

    pub fn poly(&mut self, p: &TreePoly<T>) -> Result<Vec<T>> {
        if p.truncated {
            return Err(Error::NeedsHigherTruncation(p.truncation));
        }
        let mut out = vec![T::zero(); self.algebra.dim()];
        for (t, c) in &p.terms {
            axpy(&mut out, c, &self.tree(t)?);
        }
        Ok(out)
    }
}

pub fn evaluate<T: Field>(
    p: &TreePoly<T>,
    algebra: &PreLieAlgebra<T>,
    assign: &[Vec<T>],
) -> Result<Vec<T>> {
    Evaluator::new(algebra, assign)?.poly(p)
}

/// Checks `d(π*θ) = 0` on every quadruple of basis trees of total degree at
/// most `truncation`, where `π` evaluates trees under `assign` and the free
/// algebra acts on `V` through `π`.
pub fn check_cocycle_pullback<T: Field>(
    theta: &Cochain<T>,
    algebra: &PreLieAlgebra<T>,
    rep: &Representation<T>,
    assign: &[Vec<T>],
    truncation: usize,
) -> Result<Verdict<T>> {
    if theta.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: theta.arity(),
        });
    }
    if theta.algebra_dim() != algebra.dim() || theta.module_dim() != rep.carrier_dim() {
        return Err(Error::Shape("θ does not match the algebra and module".into()));
    }
    if truncation < 4 {
        return Ok(Ok(()));
    }
    let mut eval = Evaluator::new(algebra, assign)?;
    let k = assign.len();
    let max_single = truncation - 3;
    let trees: Vec<Tree> = (1..=max_single).flat_map(|d| enumerate_trees(k, d)).collect();
    let polys: Vec<TreePoly<T>> = trees
        .iter()
        .map(|t| TreePoly::from_tree(t.clone(), truncation))
        .collect();
    let values: Vec<Vec<T>> = trees.iter().map(|t| eval.tree(t)).collect::<Result<_>>()?;

    let count = trees.len();
    for a in 0..count {
        for b in 0..count {
            for c in 0..count {
                for d in 0..count {
                    let idx = [a, b, c, d];
                    let total: usize = idx.iter().map(|&i| trees[i].degree).sum();
                    if total > truncation {
                        continue;
                    }
                    let xs: Vec<&TreePoly<T>> = idx.iter().map(|&i| &polys[i]).collect();
                    let pis: Vec<Vec<T>> = idx.iter().map(|&i| values[i].clone()).collect();
                    let out = pulled_back_coboundary(theta, rep, &mut eval, &xs, &pis)?;
                    if !is_zero_vec(&out) {
                        let names: Vec<String> = idx.iter().map(|&i| trees[i].to_string()).collect();
                        return Ok(Err(Violation::new(
                            format!("d(π*θ) = 0 at ({})", names.join(", ")),
                            idx.to_vec(),
                            out,
                            vec![T::zero(); rep.carrier_dim()],
                        )));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// `(d π*θ)(X_1, X_2, X_3, X_4)` with products and brackets taken in the
/// free algebra and pushed through `π`.
fn pulled_back_coboundary<T: Field>(
    theta: &Cochain<T>,
    rep: &Representation<T>,
    eval: &mut Evaluator<'_, T>,
    xs: &[&TreePoly<T>],
    pis: &[Vec<T>],
) -> Result<Vec<T>> {
    let n = 3;
    let others = |skip: &[usize]| -> Vec<Vec<T>> {
        (0..=n)
            .filter(|i| !skip.contains(i))
            .map(|i| pis[i].clone())
            .collect()
    };
    let mut out = vec![T::zero(); rep.carrier_dim()];
    for i in 0..n {
        let s = if i % 2 == 0 { T::one() } else { -T::one() };
        axpy(&mut out, &s, &rep.act_left(&pis[i], &theta.eval(&others(&[i]))));

        let mut head: Vec<Vec<T>> = (0..n).filter(|&j| j != i).map(|j| pis[j].clone()).collect();
        head.push(pis[i].clone());
        axpy(&mut out, &s, &rep.act_right(&theta.eval(&head), &pis[n]));

        let product = eval.poly(&graft_product(xs[i], xs[n])?)?;
        let mut head: Vec<Vec<T>> = (0..n).filter(|&j| j != i).map(|j| pis[j].clone()).collect();
        head.push(product);
        axpy(&mut out, &-s, &theta.eval(&head));
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = if (i + j) % 2 == 0 { T::one() } else { -T::one() };
            let mut args = vec![eval.poly(&commutator(xs[i], xs[j])?)?];
            args.extend(others(&[i, j]));
            axpy(&mut out, &s, &theta.eval(&args));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    fn p(s: &str, d: usize) -> TreePoly<Q> {
        TreePoly::from_tree(t(s), d)
    }

    #[test]
    fn parse_and_print_canonically() {
        assert_eq!(t("c(a,b)").to_string(), "c(b,a)");
        assert_eq!(t("b( c , a )"), t("b(a,c)"));
        assert_eq!(t("a(b(c),b)").to_string(), "a(b(c),b)");
        assert!(Tree::parse("a(").is_err());
        assert!(Tree::parse("A").is_err());
        assert!(Tree::parse("ab").is_err());
    }

    #[test]
    fn grafting_examples() {
        let ab = graft_product(&p("a", 5), &p("b", 5)).unwrap();
        assert_eq!(ab.to_string(), "b(a)");
        let prod = graft_product(&p("a", 5), &p("b(c)", 5)).unwrap();
        assert_eq!(prod.to_string(), "b(c,a) + b(c(a))");
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn left_symmetry_on_generators() {
        let (a, b, c) = (p("a", 5), p("b", 5), p("c", 5));
        let assoc = |x: &TreePoly<Q>, y: &TreePoly<Q>, z: &TreePoly<Q>| {
            graft_product(&graft_product(x, y).unwrap(), z)
                .unwrap()
                .sub(&graft_product(x, &graft_product(y, z).unwrap()).unwrap())
                .unwrap()
        };
        let lhs = assoc(&a, &b, &c);
        assert_eq!(lhs, assoc(&b, &a, &c));
        assert_eq!(lhs.to_string(), "-c(b,a)");
    }

    #[test]
    fn truncation_is_flagged() {
        let prod = graft_product(&p("a(b)", 3), &p("b(c)", 3)).unwrap();
        assert!(prod.is_truncated() && prod.is_zero());
        assert!(matches!(
            graft_product(&p("a", 3), &p("a", 4)),
            Err(Error::TruncationMismatch(3, 4))
        ));
        let a = PreLieAlgebra::<Q>::abelian(1);
        assert!(matches!(
            evaluate(&prod, &a, &[vec![Q::from_int(1)]]),
            Err(Error::NeedsHigherTruncation(3))
        ));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(2, 1), vec![t("a"), t("b")]);
        let two: Vec<String> = enumerate_trees(2, 2).iter().map(ToString::to_string).collect();
        assert_eq!(two, ["a(a)", "a(b)", "b(a)", "b(b)"]);
        let three: Vec<String> = enumerate_trees(1, 3).iter().map(ToString::to_string).collect();
        assert_eq!(three, ["a(a,a)", "a(a(a))"]);
    }

    #[test]
    fn evaluation_examples() {
        // e1 ∘ e2 = e2 on the 2-dim algebra
        let alg = PreLieAlgebra::from_entries(2, &[(0, 1, 1, Q::from_int(1))]).unwrap();
        let assign = vec![
            vec![Q::from_int(1), Q::from_int(0)],
            vec![Q::from_int(1), Q::from_int(1)],
            vec![Q::from_int(2), Q::from_int(-1)],
        ];
        let mut ev = Evaluator::new(&alg, &assign).unwrap();
        assert_eq!(ev.tree(&t("a")).unwrap(), assign[0]);
        assert_eq!(ev.tree(&t("b(a)")).unwrap(), alg.mul(&assign[0], &assign[1]));
        let (x, y, z) = (&assign[0], &assign[1], &assign[2]);
        let expected = sub(&alg.mul(x, &alg.mul(y, z)), &alg.mul(&alg.mul(x, y), z));
        assert_eq!(ev.tree(&t("c(a,b)")).unwrap(), expected);
    }
}
