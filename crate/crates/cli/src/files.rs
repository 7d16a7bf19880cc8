//! On-disk JSON schemas: algebras as sparse structure-constant lists,
//! representations as dense matrix arrays of rational strings. Serialization
//! is canonical (sorted keys, sorted sparse entries, reduced rationals, two
//! space indent), so serialize(parse(doc)) is byte-identical for normalized
//! documents.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use leibniz_ly::rat::is_zero;
use leibniz_ly::{
    format_rat, parse_rat, Algebra, LYAlgebra, LYRep, LeibnizRep, Matrix, Rat, Tensor3, Tensor4,
};

use crate::CliError;

pub type Triple = (usize, usize, usize, String);
pub type Quad = (usize, usize, usize, usize, String);
pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum AlgebraDoc {
    #[serde(rename = "leibniz")]
    Leibniz {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        dim: usize,
        product: Vec<Triple>,
    },
    #[serde(rename = "ly")]
    Ly {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        dim: usize,
        binary: Vec<Triple>,
        ternary: Vec<Quad>,
    },
}

/// A representation file embeds its algebra or points at another file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Inline(AlgebraDoc),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RepDoc {
    #[serde(rename = "leibniz-rep")]
    Leibniz {
        algebra: AlgebraRef,
        dim_v: usize,
        l: Vec<MatrixDoc>,
        r: Vec<MatrixDoc>,
    },
    #[serde(rename = "ly-rep")]
    Ly {
        algebra: AlgebraRef,
        dim_v: usize,
        rho: Vec<MatrixDoc>,
        theta: Vec<Vec<MatrixDoc>>,
        d: Vec<Vec<MatrixDoc>>,
    },
}

#[derive(Clone, Debug)]
pub enum ParsedAlgebra {
    Leibniz(Algebra),
    Ly(LYAlgebra),
}

impl ParsedAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            ParsedAlgebra::Leibniz(a) => a.dim(),
            ParsedAlgebra::Ly(l) => l.dim(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum ParsedRep {
    Leibniz(LeibnizRep),
    Ly(LYRep),
}

// -- parsing ------------------------------------------------------------

fn parse_entry(context: &str, s: &str) -> Result<Rat, CliError> {
    parse_rat(s).map_err(|e| CliError::Parse(format!("{context}: {e}")))
}

fn check_index(context: &str, idx: usize, dim: usize) -> Result<(), CliError> {
    if idx >= dim {
        return Err(CliError::Parse(format!(
            "{context}: index {idx} out of range for dim {dim}"
        )));
    }
    Ok(())
}

fn tensor3_from_triples(key: &str, dim: usize, entries: &[Triple]) -> Result<Tensor3, CliError> {
    let mut seen = std::collections::HashSet::new();
    let mut t = Tensor3::zeros(dim);
    for (pos, (i, j, k, s)) in entries.iter().enumerate() {
        let ctx = format!("{key}[{pos}]");
        check_index(&ctx, *i, dim)?;
        check_index(&ctx, *j, dim)?;
        check_index(&ctx, *k, dim)?;
        if !seen.insert((*i, *j, *k)) {
            return Err(CliError::Parse(format!("{ctx}: duplicate indices ({i}, {j}, {k})")));
        }
        t.set(*i, *j, *k, parse_entry(&ctx, s)?);
    }
    Ok(t)
}

fn tensor4_from_quads(key: &str, dim: usize, entries: &[Quad]) -> Result<Tensor4, CliError> {
    let mut seen = std::collections::HashSet::new();
    let mut t = Tensor4::zeros(dim);
    for (pos, (i, j, k, m, s)) in entries.iter().enumerate() {
        let ctx = format!("{key}[{pos}]");
        check_index(&ctx, *i, dim)?;
        check_index(&ctx, *j, dim)?;
        check_index(&ctx, *k, dim)?;
        check_index(&ctx, *m, dim)?;
        if !seen.insert((*i, *j, *k, *m)) {
            return Err(CliError::Parse(format!(
                "{ctx}: duplicate indices ({i}, {j}, {k}, {m})"
            )));
        }
        t.set(*i, *j, *k, *m, parse_entry(&ctx, s)?);
    }
    Ok(t)
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<ParsedAlgebra, CliError> {
    match doc {
        AlgebraDoc::Leibniz { name, dim, product } => {
            let t = tensor3_from_triples("product", *dim, product)?;
            Ok(ParsedAlgebra::Leibniz(Algebra::new(t, name.clone())))
        }
        AlgebraDoc::Ly { name, dim, binary, ternary } => {
            let b = tensor3_from_triples("binary", *dim, binary)?;
            let t = tensor4_from_quads("ternary", *dim, ternary)?;
            let ly = LYAlgebra::new(b, t, name.clone())
                .map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(ParsedAlgebra::Ly(ly))
        }
    }
}

fn matrix_from_doc(context: &str, doc: &MatrixDoc, dim_v: usize) -> Result<Matrix, CliError> {
    if doc.len() != dim_v {
        return Err(CliError::Parse(format!(
            "{context}: expected {dim_v} rows, got {}",
            doc.len()
        )));
    }
    let mut rows = Vec::with_capacity(dim_v);
    for (r, row) in doc.iter().enumerate() {
        if row.len() != dim_v {
            return Err(CliError::Parse(format!(
                "{context}[{r}]: expected {dim_v} entries, got {}",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(dim_v);
        for (c, s) in row.iter().enumerate() {
            out.push(parse_entry(&format!("{context}[{r}][{c}]"), s)?);
        }
        rows.push(out);
    }
    Ok(Matrix::from_rows(rows))
}

fn family_from_doc(key: &str, docs: &[MatrixDoc], n: usize, dim_v: usize) -> Result<Vec<Matrix>, CliError> {
    if docs.len() != n {
        return Err(CliError::Parse(format!(
            "{key}: expected {n} matrices, got {}",
            docs.len()
        )));
    }
    docs.iter()
        .enumerate()
        .map(|(i, d)| matrix_from_doc(&format!("{key}[{i}]"), d, dim_v))
        .collect()
}

fn pair_family_from_doc(
    key: &str,
    docs: &[Vec<MatrixDoc>],
    n: usize,
    dim_v: usize,
) -> Result<Vec<Vec<Matrix>>, CliError> {
    if docs.len() != n || docs.iter().any(|row| row.len() != n) {
        return Err(CliError::Parse(format!("{key}: expected an {n}x{n} matrix family")));
    }
    docs.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, d)| matrix_from_doc(&format!("{key}[{i}][{j}]"), d, dim_v))
                .collect()
        })
        .collect()
}

fn algebra_from_ref(r: &AlgebraRef, base: &Path) -> Result<ParsedAlgebra, CliError> {
    match r {
        AlgebraRef::Inline(doc) => algebra_from_doc(doc),
        AlgebraRef::Path(p) => {
            let resolved = base.join(p);
            load_algebra(&resolved).map(|(parsed, _)| parsed)
        }
    }
}

pub fn rep_from_doc(doc: &RepDoc, base: &Path) -> Result<ParsedRep, CliError> {
    match doc {
        RepDoc::Leibniz { algebra, dim_v, l, r } => {
            let ParsedAlgebra::Leibniz(a) = algebra_from_ref(algebra, base)? else {
                return Err(CliError::Parse(
                    "leibniz-rep requires a leibniz algebra".to_string(),
                ));
            };
            let n = a.dim();
            let l = family_from_doc("l", l, n, *dim_v)?;
            let r = family_from_doc("r", r, n, *dim_v)?;
            let rep = LeibnizRep::new(a, *dim_v, l, r)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(ParsedRep::Leibniz(rep))
        }
        RepDoc::Ly { algebra, dim_v, rho, theta, d } => {
            let ParsedAlgebra::Ly(ly) = algebra_from_ref(algebra, base)? else {
                return Err(CliError::Parse("ly-rep requires an ly algebra".to_string()));
            };
            let n = ly.dim();
            let rho = family_from_doc("rho", rho, n, *dim_v)?;
            let theta = pair_family_from_doc("theta", theta, n, *dim_v)?;
            let d = pair_family_from_doc("d", d, n, *dim_v)?;
            let rep = LYRep::new(ly, *dim_v, rho, theta, d)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(ParsedRep::Ly(rep))
        }
    }
}

pub fn load_algebra(path: &Path) -> Result<(ParsedAlgebra, AlgebraDoc), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let doc: AlgebraDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let parsed = algebra_from_doc(&doc).map_err(|e| e.prefixed(&path.display().to_string()))?;
    Ok((parsed, doc))
}

pub fn load_rep(path: &Path) -> Result<ParsedRep, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let doc: RepDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    rep_from_doc(&doc, base).map_err(|e| e.prefixed(&path.display().to_string()))
}

// -- emission -----------------------------------------------------------

pub fn algebra_to_doc(a: &Algebra) -> AlgebraDoc {
    let n = a.dim();
    let mut product = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.product().get(i, j, k);
                if !is_zero(c) {
                    product.push((i, j, k, format_rat(c)));
                }
            }
        }
    }
    AlgebraDoc::Leibniz {
        name: a.name().map(str::to_string),
        dim: n,
        product,
    }
}

pub fn ly_to_doc(l: &LYAlgebra) -> AlgebraDoc {
    let n = l.dim();
    let mut binary = Vec::new();
    let mut ternary = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = l.binary().get(i, j, k);
                if !is_zero(c) {
                    binary.push((i, j, k, format_rat(c)));
                }
                for m in 0..n {
                    let c = l.ternary().get(i, j, k, m);
                    if !is_zero(c) {
                        ternary.push((i, j, k, m, format_rat(c)));
                    }
                }
            }
        }
    }
    AlgebraDoc::Ly {
        name: l.name().map(str::to_string),
        dim: n,
        binary,
        ternary,
    }
}

pub fn matrix_to_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| format_rat(m.get(r, c))).collect())
        .collect()
}

pub fn leibniz_rep_to_doc(rep: &LeibnizRep) -> RepDoc {
    RepDoc::Leibniz {
        algebra: AlgebraRef::Inline(algebra_to_doc(rep.algebra())),
        dim_v: rep.dim_v(),
        l: rep.l().iter().map(matrix_to_doc).collect(),
        r: rep.r().iter().map(matrix_to_doc).collect(),
    }
}

pub fn ly_rep_to_doc(rep: &LYRep) -> RepDoc {
    RepDoc::Ly {
        algebra: AlgebraRef::Inline(ly_to_doc(rep.algebra())),
        dim_v: rep.dim_v(),
        rho: rep.rho().iter().map(matrix_to_doc).collect(),
        theta: rep
            .theta()
            .iter()
            .map(|row| row.iter().map(matrix_to_doc).collect())
            .collect(),
        d: rep
            .d()
            .iter()
            .map(|row| row.iter().map(matrix_to_doc).collect())
            .collect(),
    }
}

/// Canonical JSON: sorted keys, two-space pretty print, no trailing newline.
pub fn to_canonical_json(value: &impl Serialize) -> String {
    let v = serde_json::to_value(value).expect("document serialization cannot fail");
    serde_json::to_string_pretty(&v).expect("value printing cannot fail")
}

pub fn write_doc(path: &Path, value: &impl Serialize) -> Result<(), CliError> {
    let mut text = to_canonical_json(value);
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
