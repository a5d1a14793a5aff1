//! Versioned JSON documents.
//!
//! Every document is `{"version": "1", "kind": ..., "payload": ...}`. Scalars are `"p/q"`
//! strings, matrices nested arrays of rows, subspaces `{"ambient_dim", "basis"}`. Subspaces
//! are canonicalized on parse. Output is pretty-printed with sorted keys and a final newline.

use serde_json::{json, Map, Value};

use crate::correspondence::{LagrangianData, A1};
use crate::epw::{LineCertificate, LineKind};
use crate::error::{Error, Result};
use crate::exterior::{basis, MultiVector};
use crate::gm::{GmData, GmType};
use crate::lagrangian_quadric::QuadricOnSubspace;
use crate::matrix::RatMatrix;
use crate::poly::{Poly, RealRoot};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::subspace::Subspace;

pub const VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Gm(GmData),
    Lagrangian(LagrangianData),
    Quadric(QuadricOnSubspace),
    Certificate(LineCertificate),
    /// Free-form object.
    Report(Value),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Gm(_) => "gm_data",
            Document::Lagrangian(_) => "lagrangian_data",
            Document::Quadric(_) => "quadric",
            Document::Certificate(_) => "certificate",
            Document::Report(_) => "report",
        }
    }
}

fn perr<T>(path: &str, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { path: path.to_string(), msg: msg.into() })
}

pub fn parse(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse { path: format!("line {} column {}", e.line(), e.column()), msg: e.to_string() })?;
    let obj = as_object(&v, "$")?;
    match obj.get("version") {
        Some(Value::String(s)) if s == VERSION => {}
        Some(Value::String(s)) => return perr("$.version", format!("unsupported version '{s}'")),
        _ => return perr("$.version", "missing version string"),
    }
    let kind = match obj.get("kind") {
        Some(Value::String(s)) => s.as_str(),
        _ => return perr("$.kind", "missing kind"),
    };
    let payload = obj.get("payload").ok_or_else(|| Error::Parse { path: "$.payload".into(), msg: "missing payload".into() })?;
    let p = "$.payload";
    Ok(match kind {
        "gm_data" => Document::Gm(gm_from_json(payload, p)?),
        "lagrangian_data" => Document::Lagrangian(lagrangian_from_json(payload, p)?),
        "quadric" => Document::Quadric(quadric_from_json(payload, p)?),
        "certificate" => Document::Certificate(certificate_from_json(payload, p)?),
        "report" => {
            as_object(payload, p)?;
            Document::Report(payload.clone())
        }
        other => return perr("$.kind", format!("unknown kind '{other}'")),
    })
}

pub fn emit(doc: &Document) -> String {
    let payload = match doc {
        Document::Gm(d) => gm_to_json(d),
        Document::Lagrangian(l) => lagrangian_to_json(l),
        Document::Quadric(q) => quadric_to_json(q),
        Document::Certificate(c) => certificate_to_json(c),
        Document::Report(v) => v.clone(),
    };
    let v = json!({ "version": VERSION, "kind": doc.kind(), "payload": payload });
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

pub fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

pub fn vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_json(m.row(i))).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({ "ambient_dim": s.ambient_dim(), "basis": matrix_json(s.basis()) })
}

pub fn poly_json(p: &Poly) -> Value {
    vec_json(p.coeffs())
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Parse { path: path.into(), msg: "expected an object".into() })
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| Error::Parse { path: format!("{path}.{key}"), msg: "missing field".into() })
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse { path: path.into(), msg: "expected an array".into() })
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse { path: path.into(), msg: "expected a non-negative integer".into() })
}

/// Accepts `"p/q"` strings and JSON integers.
pub fn rat_from_json(v: &Value, path: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| Error::Parse { path: path.into(), msg: e.to_string() }),
        Value::Number(n) if n.is_i64() => Ok(crate::rat::rat(n.as_i64().unwrap())),
        _ => perr(path, "expected a rational string \"p/q\""),
    }
}

pub fn vec_from_json(v: &Value, path: &str) -> Result<Vec<Rat>> {
    as_array(v, path)?.iter().enumerate().map(|(i, x)| rat_from_json(x, &format!("{path}[{i}]"))).collect()
}

/// `cols` is checked when given; otherwise taken from the first row.
pub fn matrix_from_json(v: &Value, path: &str, rows: Option<usize>, cols: Option<usize>) -> Result<RatMatrix> {
    let a = as_array(v, path)?;
    if let Some(r) = rows {
        if a.len() != r {
            return perr(path, format!("expected {r} rows, found {}", a.len()));
        }
    }
    let mut out = Vec::with_capacity(a.len());
    let mut width = cols;
    for (i, row) in a.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let r = vec_from_json(row, &rp)?;
        match width {
            Some(c) if r.len() != c => return perr(&rp, format!("expected {c} entries, found {}", r.len())),
            None => width = Some(r.len()),
            _ => {}
        }
        out.push(r);
    }
    Ok(RatMatrix::from_rows(out, width.unwrap_or(0)))
}

pub fn subspace_from_json(v: &Value, path: &str) -> Result<Subspace> {
    let o = as_object(v, path)?;
    let n = as_usize(field(o, "ambient_dim", path)?, &format!("{path}.ambient_dim"))?;
    let m = matrix_from_json(field(o, "basis", path)?, &format!("{path}.basis"), None, Some(n))?;
    Ok(Subspace::row_space(&m))
}

fn gm_to_json(d: &GmData) -> Value {
    json!({
        "n": d.n(),
        "mu": matrix_json(&d.mu),
        "q": Value::Array(d.q.iter().map(matrix_json).collect()),
        "type_hint": d.classify().name(),
    })
}

fn gm_from_json(v: &Value, path: &str) -> Result<GmData> {
    let o = as_object(v, path)?;
    let mu = matrix_from_json(field(o, "mu", path)?, &format!("{path}.mu"), Some(10), None)?;
    let w = mu.cols();
    let qs = as_array(field(o, "q", path)?, &format!("{path}.q"))?;
    if qs.len() != 6 {
        return perr(&format!("{path}.q"), format!("expected 6 matrices q(e1)..q(e6), found {}", qs.len()));
    }
    let q = qs
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_json(m, &format!("{path}.q[{i}]"), Some(w), Some(w)))
        .collect::<Result<Vec<_>>>()?;
    let d = GmData::new(mu, q).map_err(|e| Error::Parse { path: path.into(), msg: e.to_string() })?;
    if let Some(n) = o.get("n") {
        if n.as_i64() != Some(d.n()) {
            return perr(&format!("{path}.n"), format!("n = {n} but dim W - 5 = {}", d.n()));
        }
    }
    if let Some(t) = o.get("type_hint") {
        let hint = t.as_str().and_then(GmType::from_name);
        if hint.is_none() {
            return perr(&format!("{path}.type_hint"), "expected ordinary, special or non_lci");
        }
    }
    Ok(d)
}

fn lagrangian_to_json(l: &LagrangianData) -> Value {
    let mut m = Map::new();
    m.insert("A".into(), subspace_json(&l.a));
    m.insert("A1".into(), Value::String(l.a1.name().into()));
    if let Some(f) = &l.frame {
        m.insert("frame".into(), matrix_json(f));
    }
    Value::Object(m)
}

fn lagrangian_from_json(v: &Value, path: &str) -> Result<LagrangianData> {
    let o = as_object(v, path)?;
    let ap = format!("{path}.A");
    let a = subspace_from_json(field(o, "A", path)?, &ap)?;
    if a.ambient_dim() != 20 {
        return perr(&ap, format!("A must live in Λ³V6 (ambient_dim 20), found {}", a.ambient_dim()));
    }
    let a1 = match o.get("A1") {
        None => A1::Zero,
        Some(x) => x.as_str().and_then(A1::from_name).ok_or_else(|| Error::Parse { path: format!("{path}.A1"), msg: "expected \"0\", \"1\" or \"inf\"".into() })?,
    };
    let frame = match o.get("frame") {
        None | Some(Value::Null) => None,
        Some(f) => Some(matrix_from_json(f, &format!("{path}.frame"), Some(6), Some(6))?),
    };
    let mut ld = LagrangianData::new(a, a1).map_err(|e| Error::Parse { path: ap, msg: e.to_string() })?;
    ld.frame = frame;
    Ok(ld)
}

fn quadric_to_json(q: &QuadricOnSubspace) -> Value {
    json!({ "span": subspace_json(q.span()), "gram": matrix_json(q.gram()) })
}

fn quadric_from_json(v: &Value, path: &str) -> Result<QuadricOnSubspace> {
    let o = as_object(v, path)?;
    let span = subspace_from_json(field(o, "span", path)?, &format!("{path}.span"))?;
    let k = span.dim();
    let gram = matrix_from_json(field(o, "gram", path)?, &format!("{path}.gram"), Some(k), Some(k))?;
    QuadricOnSubspace::new(span, gram).map_err(|e| Error::Parse { path: path.into(), msg: e.to_string() })
}

fn real_root_json(r: &RealRoot) -> Value {
    match r {
        RealRoot::Exact(x) => json!({ "exact": rat_json(x) }),
        RealRoot::Isolated(a, b) => json!({ "interval": [rat_json(a), rat_json(b)] }),
    }
}

fn certificate_to_json(c: &LineCertificate) -> Value {
    json!({
        "line_kind": c.kind.name(),
        "vectors": Value::Array(c.vectors.iter().map(|v| vec_json(v)).collect()),
        "poly": poly_json(&c.poly),
        "degree": c.degree,
        "factors": Value::Array(c.factors.iter().map(|(f, m)| json!({ "factor": poly_json(f), "multiplicity": m })).collect()),
        "real_roots": Value::Array(c.real_roots.iter().map(real_root_json).collect()),
        "rational_roots": vec_json(&c.rational_roots),
        "checked_points": c.checked_points,
    })
}

fn certificate_from_json(v: &Value, path: &str) -> Result<LineCertificate> {
    let o = as_object(v, path)?;
    let kind = match field(o, "line_kind", path)?.as_str() {
        Some("y") => LineKind::Y,
        Some("z") => LineKind::Z,
        _ => return perr(&format!("{path}.line_kind"), "expected \"y\" or \"z\""),
    };
    let vp = format!("{path}.vectors");
    let vectors = as_array(field(o, "vectors", path)?, &vp)?
        .iter()
        .enumerate()
        .map(|(i, x)| vec_from_json(x, &format!("{vp}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let poly = Poly::new(vec_from_json(field(o, "poly", path)?, &format!("{path}.poly"))?);
    let degree = as_usize(field(o, "degree", path)?, &format!("{path}.degree"))?;
    let fp = format!("{path}.factors");
    let factors = as_array(field(o, "factors", path)?, &fp)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{fp}[{i}]");
            let fo = as_object(x, &p)?;
            Ok((Poly::new(vec_from_json(field(fo, "factor", &p)?, &format!("{p}.factor"))?), as_usize(field(fo, "multiplicity", &p)?, &format!("{p}.multiplicity"))?))
        })
        .collect::<Result<Vec<_>>>()?;
    let rp = format!("{path}.real_roots");
    let real_roots = as_array(field(o, "real_roots", path)?, &rp)?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{rp}[{i}]");
            let ro = as_object(x, &p)?;
            if let Some(e) = ro.get("exact") {
                Ok(RealRoot::Exact(rat_from_json(e, &format!("{p}.exact"))?))
            } else {
                let iv = vec_from_json(field(ro, "interval", &p)?, &format!("{p}.interval"))?;
                if iv.len() != 2 {
                    return perr(&format!("{p}.interval"), "expected two endpoints");
                }
                Ok(RealRoot::Isolated(iv[0].clone(), iv[1].clone()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let rational_roots = vec_from_json(field(o, "rational_roots", path)?, &format!("{path}.rational_roots"))?;
    let checked_points = as_usize(field(o, "checked_points", path)?, &format!("{path}.checked_points"))?;
    Ok(LineCertificate { kind, vectors, poly, degree, factors, real_roots, rational_roots, checked_points })
}

/// Comma-separated rationals.
pub fn parse_vector(s: &str, len: usize) -> Result<Vec<Rat>> {
    let v: Vec<Rat> = s
        .split(',')
        .enumerate()
        .map(|(i, x)| parse_rat(x).map_err(|e| Error::Parse { path: format!("component {}", i + 1), msg: e.to_string() }))
        .collect::<Result<_>>()?;
    if v.len() != len {
        return Err(Error::Dimension(format!("expected {len} components, found {}", v.len())));
    }
    Ok(v)
}

/// Vectors separated by `;`.
pub fn parse_vectors(s: &str, len: usize) -> Result<Vec<Vec<Rat>>> {
    s.split(';').map(|x| parse_vector(x, len)).collect()
}

/// Either comma-separated coordinates or a sum of monomials such as `e125 + e134 - 2/3*e236`.
pub fn parse_multivector(s: &str, ambient_dim: usize, degree: usize) -> Result<MultiVector> {
    let len = basis(ambient_dim, degree).len();
    if !s.contains('e') {
        return MultiVector::new(ambient_dim, degree, parse_vector(s, len)?);
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut acc = MultiVector::zero(ambient_dim, degree);
    for t in terms {
        let bad = || Error::Parse { path: format!("term '{t}'"), msg: "expected [coefficient*]e<indices>".into() };
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(t)),
        };
        let (coef, mono) = match body.split_once('*') {
            Some((c, m)) => (parse_rat(c).map_err(|_| bad())?, m),
            None => (crate::rat::one(), body),
        };
        let digits = mono.strip_prefix('e').ok_or_else(bad)?;
        let labels: Vec<usize> = digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
        if labels.len() != degree || labels.iter().any(|&l| l == 0 || l > ambient_dim) {
            return Err(bad());
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != degree {
            return Err(bad());
        }
        acc = acc.add(&MultiVector::e(ambient_dim, &labels).scale(&(coef * crate::rat::rat(sign))));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epw::stratum_poly_on_line;
    use crate::fixtures;
    use crate::matrix::vec_i64;
    use crate::rat::{frac, rat};

    #[test]
    fn fixtures_round_trip() {
        let mut docs: Vec<Document> = fixtures::gm_fixtures().into_iter().map(|(_, d)| Document::Gm(d)).collect();
        docs.extend(fixtures::lagrangian_fixtures().into_iter().map(|(_, l)| Document::Lagrangian(l)));
        docs.push(Document::Quadric(fixtures::fivefold().quadric_at(&vec_i64(&[1, 0, 2, 0, 0, 1]))));
        let ld = fixtures::fivefold_lagrangian();
        let c = stratum_poly_on_line(&ld.a, LineKind::Y, &[vec_i64(&[1, 2, 0, -1, 3, 1]), vec_i64(&[0, 1, 1, 2, -2, 1])], 20).unwrap();
        docs.push(Document::Certificate(c));
        docs.push(Document::Report(json!({"a": 1, "b": ["x"]})));
        for d in docs {
            let text = emit(&d);
            let back = parse(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(emit(&back), text);
        }
    }

    #[test]
    fn malformed_rational() {
        let text = r#"{"version":"1","kind":"lagrangian_data","payload":{"A":{"ambient_dim":20,"basis":[["1/0"]]}}}"#;
        match parse(text) {
            Err(Error::Parse { path, msg }) => {
                assert_eq!(path, "$.payload.A.basis[0][0]");
                assert!(msg.contains("1/0"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_line() {
        match parse("{\n\"version\": \"1\",\n oops }") {
            Err(Error::Parse { path, .. }) => assert!(path.starts_with("line 3")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_kind_and_wrong_dims() {
        assert!(matches!(parse(r#"{"version":"1","kind":"blob","payload":{}}"#), Err(Error::Parse { path, .. }) if path == "$.kind"));
        let q = r#"{"version":"1","kind":"quadric","payload":{"span":{"ambient_dim":3,"basis":[["1","0","0"]]},"gram":[["1","2"]]}}"#;
        assert!(matches!(parse(q), Err(Error::Parse { path, .. }) if path == "$.payload.gram[0]"));
    }

    #[test]
    fn non_rref_basis_is_canonicalized() {
        let text = r#"{"version":"1","kind":"quadric","payload":{"span":{"ambient_dim":3,"basis":[["2","4","0"],["1","1","1"]]},"gram":[["1","0"],["0","-1"]]}}"#;
        let Document::Quadric(q) = parse(text).unwrap() else { panic!() };
        assert_eq!(q.span().basis().row(0), &[rat(1), rat(0), rat(2)][..]);
        let again = emit(&Document::Quadric(q));
        assert!(again.contains("\"-1\""));
        assert_eq!(emit(&parse(&again).unwrap()), again);
    }

    #[test]
    fn multivector_syntax() {
        let m = parse_multivector("e125 + e134 - 2/3*e236", 6, 3).unwrap();
        let want = MultiVector::e(6, &[1, 2, 5]).add(&MultiVector::e(6, &[1, 3, 4])).add(&MultiVector::e(6, &[2, 3, 6]).scale(&frac(-2, 3)));
        assert_eq!(m, want);
        assert_eq!(parse_multivector("e215", 6, 3).unwrap(), MultiVector::e(6, &[1, 2, 5]).scale(&rat(-1)));
        assert!(parse_multivector("e11", 6, 2).is_err());
        assert!(parse_multivector("e17", 6, 2).is_err());
        assert_eq!(parse_vector("1, -1/2,0", 3).unwrap(), vec![rat(1), frac(-1, 2), rat(0)]);
        assert!(parse_vector("1,2", 3).is_err());
    }
}
