//! JSON documents: parsing with JSON-pointer diagnostics and a stable
//! serializer.
//!
//! Every document is an object with a `kind`, an optional `format_version`
//! (which must be `"1"` when present) and kind-specific fields. Tensors and
//! matrices are sparse entry lists with 1-based indices, e.g. `[i, j, k, "p/q"]`
//! for a product `e_i ∘ e_j = ... + p/q e_k`. Unlisted entries are zero and
//! repeated positions accumulate.

use std::fmt;
use std::path::Path;

use prelie_core::algebra::{LieAlgebra, LieModule, PreLieAlgebra, Representation};
use prelie_core::cochain::{Cochain, CochainBasis};
use prelie_core::functors::{
    DendriformAlgebra, DendriformCrossedModule, LieCrossedModule, RotaBaxterLieCrossedModule,
};
use prelie_core::linalg::Matrix;
use prelie_core::scalar::{format_rational, parse_rational, RationalParseError};
use prelie_core::xmod::{CrossedModule, Extension};
use prelie_core::Q;
use num_traits::Zero;
use serde_json::{Map, Value};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    PreLie(PreLieAlgebra<Q>),
    Lie(LieAlgebra<Q>),
    Representation {
        algebra: PreLieAlgebra<Q>,
        rep: Representation<Q>,
    },
    CrossedModule(CrossedModule<Q>),
    Extension(Extension<Q>),
    RbLieXmod(RotaBaxterLieCrossedModule<Q>),
    DendriformXmod(DendriformCrossedModule<Q>),
    Cochain(Cochain<Q>),
    LieXmod(LieCrossedModule<Q>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::PreLie(_) => "prelie",
            Document::Lie(_) => "lie",
            Document::Representation { .. } => "representation",
            Document::CrossedModule(_) => "crossed_module",
            Document::Extension(_) => "extension",
            Document::RbLieXmod(_) => "rblie_xmod",
            Document::DendriformXmod(_) => "dendriform_xmod",
            Document::Cochain(_) => "cochain",
            Document::LieXmod(_) => "lie_xmod",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    Io { path: String, message: String },
    Parse(String),
    Schema { pointer: String, message: String },
    Value { pointer: String, message: String },
}

fn show_pointer(p: &str) -> &str {
    if p.is_empty() {
        "document root"
    } else {
        p
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Io { path, message } => write!(f, "cannot read {path}: {message}"),
            DocumentError::Parse(m) => write!(f, "parse error: {m}"),
            DocumentError::Schema { pointer, message } => {
                write!(f, "schema error at {}: {message}", show_pointer(pointer))
            }
            DocumentError::Value { pointer, message } => {
                write!(f, "value error at {}: {message}", show_pointer(pointer))
            }
        }
    }
}

impl std::error::Error for DocumentError {}

type Result<T> = std::result::Result<T, DocumentError>;

pub fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| DocumentError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document(&text)
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;
    document_from_value(&value)
}

#[derive(Clone)]
struct Node<'a> {
    value: &'a Value,
    pointer: String,
}

struct Obj<'a> {
    node: Node<'a>,
    map: &'a Map<String, Value>,
}

impl<'a> Node<'a> {
    fn schema<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(DocumentError::Schema {
            pointer: self.pointer.clone(),
            message: message.into(),
        })
    }

    fn child(&self, value: &'a Value, token: &str) -> Node<'a> {
        let token = token.replace('~', "~0").replace('/', "~1");
        Node {
            value,
            pointer: format!("{}/{}", self.pointer, token),
        }
    }

    fn object(&self, allowed: &[&str]) -> Result<Obj<'a>> {
        let Some(map) = self.value.as_object() else {
            return self.schema("expected an object");
        };
        for key in map.keys() {
            if !allowed.contains(&key.as_str()) {
                return self.child(&map[key], key).schema(format!("unknown field {key:?}"));
            }
        }
        Ok(Obj {
            node: self.clone(),
            map,
        })
    }

    fn array(&self) -> Result<Vec<Node<'a>>> {
        match self.value.as_array() {
            Some(items) => Ok(items
                .iter()
                .enumerate()
                .map(|(i, v)| self.child(v, &i.to_string()))
                .collect()),
            None => self.schema("expected an array"),
        }
    }

    fn usize(&self) -> Result<usize> {
        match self.value.as_u64() {
            Some(n) => Ok(n as usize),
            None => self.schema("expected a non-negative integer"),
        }
    }

    fn string(&self) -> Result<&'a str> {
        match self.value.as_str() {
            Some(s) => Ok(s),
            None => self.schema("expected a string"),
        }
    }

    fn rational(&self) -> Result<Q> {
        let text = match self.value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return self.schema("expected an integer or a \"p/q\" string"),
        };
        parse_rational(&text).map_err(|e| match e {
            RationalParseError::ZeroDenominator(_) => DocumentError::Value {
                pointer: self.pointer.clone(),
                message: format!("zero denominator in {text:?}"),
            },
            RationalParseError::Malformed(_) => DocumentError::Schema {
                pointer: self.pointer.clone(),
                message: format!("malformed rational {text:?}"),
            },
        })
    }
}

impl<'a> Obj<'a> {
    fn req(&self, key: &str) -> Result<Node<'a>> {
        match self.map.get(key) {
            Some(v) => Ok(self.node.child(v, key)),
            None => self.node.schema(format!("missing field {key:?}")),
        }
    }

    fn opt(&self, key: &str) -> Option<Node<'a>> {
        self.map.get(key).map(|v| self.node.child(v, key))
    }
}

/// One sparse entry `[i_1, ..., i_r, c]`, returned with 0-based indices.
fn entry(node: &Node<'_>, shape: &[usize]) -> Result<(Vec<usize>, Q)> {
    let items = node.array()?;
    if items.len() != shape.len() + 1 {
        return node.schema(format!("expected {} indices and a coefficient", shape.len()));
    }
    let mut idx = Vec::with_capacity(shape.len());
    for (item, &bound) in items.iter().zip(shape) {
        let i = item.usize()?;
        if i == 0 || i > bound {
            return item.schema(format!("index {i} outside 1..={bound}"));
        }
        idx.push(i - 1);
    }
    Ok((idx, items[shape.len()].rational()?))
}

/// Sparse entries into a dense row-major tensor of `shape`.
fn dense(node: Option<Node<'_>>, shape: &[usize]) -> Result<Vec<Q>> {
    let mut out = vec![Q::zero(); shape.iter().product()];
    let Some(node) = node else {
        return Ok(out);
    };
    for item in node.array()? {
        let (idx, c) = entry(&item, shape)?;
        let flat = idx.iter().zip(shape).fold(0, |acc, (i, b)| acc * b + i);
        out[flat] = out[flat].clone() + c;
    }
    Ok(out)
}

fn check_version(obj: &Obj<'_>) -> Result<()> {
    if let Some(v) = obj.opt("format_version") {
        let s = v.string()?;
        if s != FORMAT_VERSION {
            return v.schema(format!("unsupported format_version {s:?}"));
        }
    }
    Ok(())
}

fn with_header<'k>(fields: &[&'k str]) -> Vec<&'k str> {
    let mut all = vec!["kind", "format_version"];
    all.extend_from_slice(fields);
    all
}

pub fn document_from_value(value: &Value) -> Result<Document> {
    let root = Node {
        value,
        pointer: String::new(),
    };
    let Some(map) = value.as_object() else {
        return root.schema("expected an object");
    };
    let kind_node = match map.get("kind") {
        Some(k) => root.child(k, "kind"),
        None => return root.schema("missing field \"kind\""),
    };
    let kind = kind_node.string()?;
    let fields: &[&str] = match kind {
        "prelie" => &["dim", "product", "labels"],
        "lie" => &["dim", "bracket"],
        "representation" => &["algebra", "dim", "left", "right"],
        "crossed_module" => &["m", "n", "mu", "action"],
        "extension" => &["g", "v", "m", "n", "i", "mu", "pi", "action"],
        "rblie_xmod" => &["m", "n", "t_m", "t_n", "mu", "rho"],
        "dendriform_xmod" => &["m", "n", "mu", "succ", "prec"],
        "cochain" => &["arity", "algebra_dim", "module_dim", "values"],
        "lie_xmod" => &["m", "n", "mu", "action"],
        other => return kind_node.schema(format!("unknown kind {other:?}")),
    };
    let obj = root.object(&with_header(fields))?;
    check_version(&obj)?;
    Ok(match kind {
        "prelie" => Document::PreLie(prelie_fields(&obj)?),
        "lie" => Document::Lie(lie_fields(&obj)?),
        "representation" => {
            let algebra = prelie_object(&obj.req("algebra")?)?;
            let v = obj.req("dim")?.usize()?;
            let rep = action_fields(&obj, algebra.dim(), v)?;
            Document::Representation { algebra, rep }
        }
        "crossed_module" => Document::CrossedModule(crossed_module_fields(&obj)?),
        "extension" => Document::Extension(extension_fields(&obj)?),
        "rblie_xmod" => Document::RbLieXmod(rblie_fields(&obj)?),
        "dendriform_xmod" => Document::DendriformXmod(dendriform_fields(&obj)?),
        "cochain" => Document::Cochain(cochain_fields(&obj)?),
        "lie_xmod" => Document::LieXmod(lie_xmod_fields(&obj)?),
        _ => unreachable!("kind matched above"),
    })
}

fn shape_error<T>(node: &Node<'_>, e: prelie_core::Error) -> Result<T> {
    node.schema(e.to_string())
}

fn prelie_fields(obj: &Obj<'_>) -> Result<PreLieAlgebra<Q>> {
    let d = obj.req("dim")?.usize()?;
    let product = dense(obj.opt("product"), &[d, d, d])?;
    let mut a = PreLieAlgebra::from_tensor_unchecked(d, product).or_else(|e| shape_error(&obj.node, e))?;
    if let Some(node) = obj.opt("labels") {
        let labels = node
            .array()?
            .iter()
            .map(|l| l.string().map(str::to_string))
            .collect::<Result<Vec<_>>>()?;
        a = a.with_labels(labels).or_else(|e| shape_error(&node, e))?;
    }
    Ok(a)
}

fn prelie_object(node: &Node<'_>) -> Result<PreLieAlgebra<Q>> {
    prelie_fields(&node.object(&["dim", "product", "labels"])?)
}

fn lie_fields(obj: &Obj<'_>) -> Result<LieAlgebra<Q>> {
    let d = obj.req("dim")?.usize()?;
    let bracket = dense(obj.opt("bracket"), &[d, d, d])?;
    LieAlgebra::from_tensor_unchecked(d, bracket).or_else(|e| shape_error(&obj.node, e))
}

fn lie_object(node: &Node<'_>) -> Result<LieAlgebra<Q>> {
    lie_fields(&node.object(&["dim", "bracket"])?)
}

/// `left` entries `[i, a, b, c]` and `right` entries `[a, i, b, c]`.
fn action_fields(obj: &Obj<'_>, g: usize, v: usize) -> Result<Representation<Q>> {
    let left = dense(obj.opt("left"), &[g, v, v])?;
    let right = dense(obj.opt("right"), &[v, g, v])?;
    Representation::new(g, v, left, right).or_else(|e| shape_error(&obj.node, e))
}

fn action_object(node: &Node<'_>, g: usize, v: usize) -> Result<Representation<Q>> {
    action_fields(&node.object(&["left", "right"])?, g, v)
}

fn matrix(node: &Node<'_>, rows: usize, cols: usize) -> Result<Matrix<Q>> {
    Matrix::new(rows, cols, dense(Some(node.clone()), &[rows, cols])?).or_else(|e| shape_error(node, e))
}

fn lie_module(node: &Node<'_>, n: usize, w: usize) -> Result<LieModule<Q>> {
    LieModule::new(n, w, dense(Some(node.clone()), &[n, w, w])?).or_else(|e| shape_error(node, e))
}

fn crossed_module_fields(obj: &Obj<'_>) -> Result<CrossedModule<Q>> {
    let m = prelie_object(&obj.req("m")?)?;
    let n = prelie_object(&obj.req("n")?)?;
    let mu = matrix(&obj.req("mu")?, n.dim(), m.dim())?;
    let action = action_object(&obj.req("action")?, n.dim(), m.dim())?;
    CrossedModule::new(m, n, mu, action).or_else(|e| shape_error(&obj.node, e))
}

fn extension_fields(obj: &Obj<'_>) -> Result<Extension<Q>> {
    let g = prelie_object(&obj.req("g")?)?;
    let v_node = obj.req("v")?;
    let v_obj = v_node.object(&["dim", "left", "right"])?;
    let v = v_obj.req("dim")?.usize()?;
    let v_rep = action_fields(&v_obj, g.dim(), v)?;
    let m = prelie_object(&obj.req("m")?)?;
    let n = prelie_object(&obj.req("n")?)?;
    let i = matrix(&obj.req("i")?, m.dim(), v)?;
    let mu = matrix(&obj.req("mu")?, n.dim(), m.dim())?;
    let pi = matrix(&obj.req("pi")?, g.dim(), n.dim())?;
    let action = action_object(&obj.req("action")?, n.dim(), m.dim())?;
    Ok(Extension {
        g,
        v_rep,
        m,
        n,
        i,
        mu,
        pi,
        action,
    })
}

fn rblie_fields(obj: &Obj<'_>) -> Result<RotaBaxterLieCrossedModule<Q>> {
    let m = lie_object(&obj.req("m")?)?;
    let n = lie_object(&obj.req("n")?)?;
    let (dm, dn) = (m.dim(), n.dim());
    Ok(RotaBaxterLieCrossedModule {
        t_m: matrix(&obj.req("t_m")?, dm, dm)?,
        t_n: matrix(&obj.req("t_n")?, dn, dn)?,
        mu: matrix(&obj.req("mu")?, dn, dm)?,
        rho: lie_module(&obj.req("rho")?, dn, dm)?,
        m,
        n,
    })
}

fn dendriform_object(node: &Node<'_>) -> Result<DendriformAlgebra<Q>> {
    let obj = node.object(&["dim", "succ", "prec"])?;
    let d = obj.req("dim")?.usize()?;
    let succ = dense(obj.opt("succ"), &[d, d, d])?;
    let prec = dense(obj.opt("prec"), &[d, d, d])?;
    DendriformAlgebra::new(d, succ, prec).or_else(|e| shape_error(node, e))
}

fn dendriform_fields(obj: &Obj<'_>) -> Result<DendriformCrossedModule<Q>> {
    let m = dendriform_object(&obj.req("m")?)?;
    let n = dendriform_object(&obj.req("n")?)?;
    let (dm, dn) = (m.dim(), n.dim());
    Ok(DendriformCrossedModule {
        mu: matrix(&obj.req("mu")?, dn, dm)?,
        succ: action_object(&obj.req("succ")?, dn, dm)?,
        prec: action_object(&obj.req("prec")?, dn, dm)?,
        m,
        n,
    })
}

/// `values` entries `[x_1, ..., x_n, a, c]`: `f(e_{x_1}, ..., e_{x_n})` has
/// coefficient `c` on `v_a`. The first `n − 1` slots are alternating.
fn cochain_fields(obj: &Obj<'_>) -> Result<Cochain<Q>> {
    let arity_node = obj.req("arity")?;
    let arity = arity_node.usize()?;
    if arity == 0 {
        return arity_node.schema("cochains start in arity 1");
    }
    let g = obj.req("algebra_dim")?.usize()?;
    let v = obj.req("module_dim")?.usize()?;
    let mut shape = vec![g; arity];
    shape.push(v);
    let mut values = Vec::new();
    if let Some(node) = obj.opt("values") {
        for item in node.array()? {
            let (idx, c) = entry(&item, &shape)?;
            let mut wedge = idx[..arity - 1].to_vec();
            wedge.sort_unstable();
            if wedge.windows(2).any(|w| w[0] == w[1]) {
                return item.schema("repeated index in the alternating slots");
            }
            let mut value = vec![Q::zero(); v];
            value[idx[arity]] = c;
            values.push((idx[..arity].to_vec(), value));
        }
    }
    Cochain::from_values(arity, g, v, &values).or_else(|e| shape_error(&obj.node, e))
}

fn lie_xmod_fields(obj: &Obj<'_>) -> Result<LieCrossedModule<Q>> {
    let m = lie_object(&obj.req("m")?)?;
    let n = lie_object(&obj.req("n")?)?;
    let (dm, dn) = (m.dim(), n.dim());
    Ok(LieCrossedModule {
        mu: matrix(&obj.req("mu")?, dn, dm)?,
        action: lie_module(&obj.req("action")?, dn, dm)?,
        m,
        n,
    })
}

fn rational(q: &Q) -> Value {
    Value::String(format_rational(q))
}

fn sparse(data: &[Q], shape: &[usize]) -> Value {
    let mut out = Vec::new();
    for (flat, c) in data.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut idx = vec![0; shape.len()];
        let mut rest = flat;
        for (slot, &bound) in idx.iter_mut().zip(shape).rev() {
            *slot = rest % bound + 1;
            rest /= bound;
        }
        let mut entry: Vec<Value> = idx.into_iter().map(Value::from).collect();
        entry.push(rational(c));
        out.push(Value::Array(entry));
    }
    Value::Array(out)
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn prelie_pairs(a: &PreLieAlgebra<Q>) -> Vec<(&'static str, Value)> {
    let d = a.dim();
    let mut pairs = vec![("dim", Value::from(d)), ("product", sparse(a.tensor(), &[d, d, d]))];
    if let Some(labels) = a.labels() {
        pairs.push(("labels", Value::from(labels.to_vec())));
    }
    pairs
}

fn lie_value(l: &LieAlgebra<Q>) -> Value {
    let d = l.dim();
    object(vec![("dim", Value::from(d)), ("bracket", sparse(l.tensor(), &[d, d, d]))])
}

fn action_pairs(rep: &Representation<Q>) -> Vec<(&'static str, Value)> {
    let (g, v) = (rep.algebra_dim(), rep.carrier_dim());
    vec![
        ("left", sparse(rep.left_tensor(), &[g, v, v])),
        ("right", sparse(rep.right_tensor(), &[v, g, v])),
    ]
}

fn matrix_value(m: &Matrix<Q>) -> Value {
    sparse(m.data(), &[m.rows(), m.cols()])
}

fn lie_module_value(w: &LieModule<Q>) -> Value {
    let (n, d) = (w.algebra_dim(), w.carrier_dim());
    sparse(w.tensor(), &[n, d, d])
}

fn dendriform_value(d: &DendriformAlgebra<Q>) -> Value {
    let n = d.dim();
    object(vec![
        ("dim", Value::from(n)),
        ("succ", sparse(d.succ_tensor(), &[n, n, n])),
        ("prec", sparse(d.prec_tensor(), &[n, n, n])),
    ])
}

/// One entry per nonzero coordinate, wedge slots in increasing order.
pub fn cochain_entries(f: &Cochain<Q>) -> Value {
    let v = f.module_dim();
    let basis = CochainBasis::new(f.arity(), f.algebra_dim()).expect("arity at least 1");
    let mut out = Vec::new();
    for (pos, (wedge, last)) in basis.elements().enumerate() {
        for a in 0..v {
            let c = &f.coordinates()[pos * v + a];
            if c.is_zero() {
                continue;
            }
            let mut entry: Vec<Value> = wedge.iter().map(|&x| Value::from(x + 1)).collect();
            entry.push(Value::from(last + 1));
            entry.push(Value::from(a + 1));
            entry.push(rational(c));
            out.push(Value::Array(entry));
        }
    }
    Value::Array(out)
}

pub fn document_to_value(doc: &Document) -> Value {
    let mut pairs = vec![
        ("kind", Value::from(doc.kind())),
        ("format_version", Value::from(FORMAT_VERSION)),
    ];
    match doc {
        Document::PreLie(a) => pairs.extend(prelie_pairs(a)),
        Document::Lie(l) => {
            let d = l.dim();
            pairs.push(("dim", Value::from(d)));
            pairs.push(("bracket", sparse(l.tensor(), &[d, d, d])));
        }
        Document::Representation { algebra, rep } => {
            pairs.push(("algebra", object(prelie_pairs(algebra))));
            pairs.push(("dim", Value::from(rep.carrier_dim())));
            pairs.extend(action_pairs(rep));
        }
        Document::CrossedModule(x) => {
            pairs.push(("m", object(prelie_pairs(&x.m))));
            pairs.push(("n", object(prelie_pairs(&x.n))));
            pairs.push(("mu", matrix_value(&x.mu)));
            pairs.push(("action", object(action_pairs(&x.action))));
        }
        Document::Extension(e) => {
            pairs.push(("g", object(prelie_pairs(&e.g))));
            let mut v = vec![("dim", Value::from(e.v_dim()))];
            v.extend(action_pairs(&e.v_rep));
            pairs.push(("v", object(v)));
            pairs.push(("m", object(prelie_pairs(&e.m))));
            pairs.push(("n", object(prelie_pairs(&e.n))));
            pairs.push(("i", matrix_value(&e.i)));
            pairs.push(("mu", matrix_value(&e.mu)));
            pairs.push(("pi", matrix_value(&e.pi)));
            pairs.push(("action", object(action_pairs(&e.action))));
        }
        Document::RbLieXmod(x) => {
            pairs.push(("m", lie_value(&x.m)));
            pairs.push(("n", lie_value(&x.n)));
            pairs.push(("t_m", matrix_value(&x.t_m)));
            pairs.push(("t_n", matrix_value(&x.t_n)));
            pairs.push(("mu", matrix_value(&x.mu)));
            pairs.push(("rho", lie_module_value(&x.rho)));
        }
        Document::DendriformXmod(x) => {
            pairs.push(("m", dendriform_value(&x.m)));
            pairs.push(("n", dendriform_value(&x.n)));
            pairs.push(("mu", matrix_value(&x.mu)));
            pairs.push(("succ", object(action_pairs(&x.succ))));
            pairs.push(("prec", object(action_pairs(&x.prec))));
        }
        Document::Cochain(f) => {
            pairs.push(("arity", Value::from(f.arity())));
            pairs.push(("algebra_dim", Value::from(f.algebra_dim())));
            pairs.push(("module_dim", Value::from(f.module_dim())));
            pairs.push(("values", cochain_entries(f)));
        }
        Document::LieXmod(x) => {
            pairs.push(("m", lie_value(&x.m)));
            pairs.push(("n", lie_value(&x.n)));
            pairs.push(("mu", matrix_value(&x.mu)));
            pairs.push(("action", lie_module_value(&x.action)));
        }
    }
    object(pairs)
}

/// Pretty JSON with arrays of scalars kept on one line.
pub fn render(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out.push('\n');
    out
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad);
                render_into(item, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                render_into(item, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn serialize_document(doc: &Document) -> String {
    render(&document_to_value(doc))
}
