//! JSON and LaTeX renderings of expressions, matrices, bases, relations and
//! `l_k` tables. Every JSON writer has a matching reader that rebuilds an
//! equal value. Rationals are written as `"p/q"` strings.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::Index;
use crate::lsi::{LsiExpr, LsiMonomial};
use crate::polylog::PolylogExpansion;
use crate::rational::{format_rational, parse_rational, GaussianRational, Rational};
use crate::relations::{build_basis, MonomialBasis, MzvRelation, Parity, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub pi: u32,
    pub k: Vec<u32>,
    pub l: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub pi: u32,
    pub k: Vec<u32>,
    pub l: Vec<u32>,
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExprJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Index>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<Vec<MonomialJson>>,
    pub ncols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub weight: u32,
    pub parity: String,
    pub monomials: Vec<MonomialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTermJson {
    pub index: Index,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub terms: Vec<RelationTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LkRowJson {
    pub weight: u32,
    pub l: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheEntryJson {
    index: Index,
    expr: ExprJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheJson {
    entries: Vec<CacheEntryJson>,
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data always serializes")
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn monomial_json(m: &LsiMonomial) -> MonomialJson {
    MonomialJson { pi: m.pi_pow(), k: m.ks().to_vec(), l: m.ls().to_vec() }
}

pub fn monomial_from_json(j: &MonomialJson) -> Result<LsiMonomial> {
    LsiMonomial::new(j.pi, j.k.clone(), j.l.clone())
}

pub fn expr_json(e: &LsiExpr) -> ExprJson {
    let terms = e
        .iter()
        .map(|(m, c)| TermJson {
            pi: m.pi_pow(),
            k: m.ks().to_vec(),
            l: m.ls().to_vec(),
            re: format_rational(&c.re),
            im: format_rational(&c.im),
        })
        .collect();
    ExprJson { terms }
}

pub fn expr_from_json(j: &ExprJson) -> Result<LsiExpr> {
    let mut e = LsiExpr::zero();
    for t in &j.terms {
        let m = LsiMonomial::new(t.pi, t.k.clone(), t.l.clone())?;
        e.add_term(m, &GaussianRational::new(parse_rational(&t.re)?, parse_rational(&t.im)?));
    }
    Ok(e)
}

pub fn expr_to_json(e: &LsiExpr) -> String {
    to_string(&expr_json(e))
}

pub fn expr_from_json_str(s: &str) -> Result<LsiExpr> {
    expr_from_json(&from_str(s)?)
}

pub fn index_to_json(k: &Index) -> String {
    serde_json::to_string(k).expect("plain data always serializes")
}

pub fn index_from_json(s: &str) -> Result<Index> {
    from_str(s)
}

pub fn matrix_json(m: &RationalMatrix) -> MatrixJson {
    MatrixJson {
        rows: m.row_labels.clone(),
        cols: m.col_labels.as_ref().map(|c| c.iter().map(monomial_json).collect()),
        ncols: m.cols(),
        entries: m.row_vectors().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
    }
}

pub fn matrix_to_json(m: &RationalMatrix) -> String {
    to_string(&matrix_json(m))
}

pub fn matrix_from_json_str(s: &str) -> Result<RationalMatrix> {
    let j: MatrixJson = from_str(s)?;
    let mut rows = Vec::with_capacity(j.entries.len());
    for r in &j.entries {
        if r.len() != j.ncols {
            return Err(Error::Parse(format!("row of length {} in a {}-column matrix", r.len(), j.ncols)));
        }
        rows.push(r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?);
    }
    let mut m = RationalMatrix::from_rows(rows, j.ncols);
    if let Some(labels) = j.rows {
        if labels.len() != m.rows() {
            return Err(Error::Parse("row label count does not match".into()));
        }
        m = m.with_row_labels(labels);
    }
    if let Some(labels) = j.cols {
        if labels.len() != m.cols() {
            return Err(Error::Parse("column label count does not match".into()));
        }
        m = m.with_col_labels(labels.iter().map(monomial_from_json).collect::<Result<_>>()?);
    }
    Ok(m)
}

pub fn basis_to_json(b: &MonomialBasis) -> String {
    to_string(&BasisJson {
        weight: b.weight(),
        parity: b.parity().to_string(),
        monomials: b.monomials().iter().map(monomial_json).collect(),
    })
}

/// Rebuilds the basis from its weight and parity, and checks that the
/// listed monomials agree.
pub fn basis_from_json_str(s: &str) -> Result<MonomialBasis> {
    let j: BasisJson = from_str(s)?;
    let parity: Parity = j.parity.parse()?;
    let b = build_basis(j.weight, parity)?;
    let listed = j.monomials.iter().map(monomial_from_json).collect::<Result<Vec<_>>>()?;
    if listed != b.monomials() {
        return Err(Error::Parse("monomial list does not match the basis".into()));
    }
    Ok(b)
}

pub fn relation_json(r: &MzvRelation) -> RelationJson {
    RelationJson {
        terms: r
            .coefficients
            .iter()
            .map(|(k, c)| RelationTermJson { index: k.clone(), coeff: format_rational(c) })
            .collect(),
    }
}

pub fn relations_to_json(rs: &[MzvRelation]) -> String {
    to_string(&rs.iter().map(relation_json).collect::<Vec<_>>())
}

pub fn relations_from_json_str(s: &str) -> Result<Vec<MzvRelation>> {
    let js: Vec<RelationJson> = from_str(s)?;
    js.iter()
        .map(|j| {
            let mut coefficients = BTreeMap::new();
            for t in &j.terms {
                coefficients.insert(t.index.clone(), parse_rational(&t.coeff)?);
            }
            Ok(MzvRelation { coefficients })
        })
        .collect()
}

pub fn lk_to_json(rows: &[(u32, usize)]) -> String {
    to_string(&rows.iter().map(|&(weight, l)| LkRowJson { weight, l }).collect::<Vec<_>>())
}

pub fn lk_from_json_str(s: &str) -> Result<Vec<(u32, usize)>> {
    let js: Vec<LkRowJson> = from_str(s)?;
    Ok(js.into_iter().map(|r| (r.weight, r.l)).collect())
}

/// Memo table of polylog expansions, keyed by index.
pub fn cache_to_json(entries: &[PolylogExpansion]) -> String {
    let entries = entries
        .iter()
        .map(|e| CacheEntryJson { index: e.index.clone(), expr: expr_json(&e.expr) })
        .collect();
    serde_json::to_string(&CacheJson { entries }).expect("plain data always serializes")
}

pub fn cache_from_json_str(s: &str) -> Result<Vec<PolylogExpansion>> {
    let c: CacheJson = from_str(s)?;
    c.entries
        .iter()
        .map(|e| Ok(PolylogExpansion { index: e.index.clone(), expr: expr_from_json(&e.expr)? }))
        .collect()
}

// ---- LaTeX ----

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// `\frac{p}{q}`, or the integer when `q = 1`. No sign.
fn latex_magnitude(r: &Rational) -> String {
    let r = r.abs();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn rational_latex(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}{}", latex_magnitude(r))
}

pub fn monomial_latex(m: &LsiMonomial) -> String {
    let mut out = match m.pi_pow() {
        0 => String::new(),
        1 => "\\pi".to_string(),
        p => format!("\\pi^{{{p}}}"),
    };
    if m.depth() > 0 {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&format!(
            "{{\\rm Ls}}_{{{}}}^{{({})}}\\left(\\frac{{\\pi}}{{3}}\\right)",
            join(m.ks()),
            join(m.ls())
        ));
    }
    out
}

/// Renders `c * m` as a signed summand: the returned sign is `-` or `+`
/// and the body carries no leading sign.
fn term_latex(m: &LsiMonomial, c: &GaussianRational) -> (char, String) {
    let body = monomial_latex(m);
    let unit = body.is_empty();
    let (negative, coeff) = match (c.re.is_zero(), c.im.is_zero()) {
        (false, true) => {
            let mag = if c.re.abs().is_one() && !unit { String::new() } else { latex_magnitude(&c.re) };
            (c.re.is_negative(), mag)
        }
        (true, false) => {
            let mag = if c.im.abs().is_one() { "i".to_string() } else { format!("{} i", latex_magnitude(&c.im)) };
            (c.im.is_negative(), mag)
        }
        _ => {
            let im_sign = if c.im.is_negative() { '-' } else { '+' };
            let im = if c.im.abs().is_one() { "i".to_string() } else { format!("{} i", latex_magnitude(&c.im)) };
            (false, format!("\\left({} {im_sign} {im}\\right)", rational_latex(&c.re)))
        }
    };
    let text = match (coeff.is_empty(), unit) {
        (true, _) => body,
        (false, true) => coeff,
        (false, false) => format!("{coeff} {body}"),
    };
    (if negative { '-' } else { '+' }, text)
}

pub fn expr_latex(e: &LsiExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.iter().enumerate() {
        let (sign, text) = term_latex(m, c);
        match (i, sign) {
            (0, '-') => out.push('-'),
            (0, _) => {}
            (_, s) => {
                out.push(' ');
                out.push(s);
                out.push(' ');
            }
        }
        out.push_str(&text);
    }
    out
}

pub fn matrix_latex(m: &RationalMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for row in m.row_vectors() {
        let cells: Vec<String> = row.iter().map(rational_latex).collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{pmatrix}");
    out
}

pub fn basis_latex(b: &MonomialBasis) -> String {
    let items: Vec<String> = b.monomials().iter().map(monomial_latex).collect();
    format!("\\left( {} \\right)", items.join(",\\ "))
}

pub fn relation_latex(r: &MzvRelation) -> String {
    let mut out = String::new();
    for (i, (k, c)) in r.coefficients.iter().enumerate() {
        let mag = if c.abs().is_one() { String::new() } else { latex_magnitude(c) };
        let term = format!("{mag}\\zeta({})", join(k.parts()));
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&term);
    }
    out.push_str(" = 0");
    out
}

pub fn lk_latex(rows: &[(u32, usize)]) -> String {
    let spec = "c".repeat(rows.len());
    let ks: Vec<String> = rows.iter().map(|r| r.0.to_string()).collect();
    let ls: Vec<String> = rows.iter().map(|r| r.1.to_string()).collect();
    format!(
        "\\begin{{tabular}}{{c|{spec}}}\n$k$ & {} \\\\ \\hline\n$l_k$ & {} \\\\\n\\end{{tabular}}",
        ks.join(" & "),
        ls.join(" & ")
    )
}
