//! Relation search. Real parts of zeta expressions give each MZV as a vector
//! over the monomial basis; imaginary parts vanish and so give linear
//! relations among monomials. Substituting the latter into the former and
//! row-reducing yields `l_k` and explicit rational relations among MZVs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::indices::{dedupe_by_duality, enumerate_admissible, Index};
use crate::lsi::{LsiExpr, LsiMonomial};
use crate::polylog::PolylogExpander;
use crate::rational::Rational;
use crate::relations::basis::{build_basis, MonomialBasis, Parity};
use crate::relations::matrix::RationalMatrix;

/// Which `Re Li_{2k+1}(e^{i pi/3})` identities to add to the monomial
/// relations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum CrInjection {
    #[default]
    None,
    /// Every order `k` that fits the target weight.
    All,
    Orders(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EngineConfig {
    pub parallel_rows: bool,
    pub cr: CrInjection,
    /// Also harvest imaginary-part relations from weights `w+3, w+5, ...`
    /// (this many extra odd steps). 0 uses weights up to `w+1` only.
    pub extra_im_steps: u32,
    /// Print progress lines to stderr.
    pub progress: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { parallel_rows: true, cr: CrInjection::None, extra_im_steps: 0, progress: false }
    }
}

/// `sum c_i zeta(k_i) = 0` with coprime integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzvRelation {
    pub coefficients: BTreeMap<Index, Rational>,
}

impl MzvRelation {
    /// Clears denominators, divides out the content and makes the first
    /// (smallest index) coefficient positive. `None` for the zero relation.
    pub fn normalized(coefficients: BTreeMap<Index, Rational>) -> Option<MzvRelation> {
        let coefficients: BTreeMap<_, _> =
            coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let first = coefficients.values().next()?;
        let lcm = coefficients.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut gcd = BigInt::zero();
        for c in coefficients.values() {
            gcd = gcd.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let scale = if first.is_negative() { -Rational::new(lcm, gcd) } else { Rational::new(lcm, gcd) };
        Some(MzvRelation {
            coefficients: coefficients.into_iter().map(|(k, c)| (k, c * &scale)).collect(),
        })
    }

    /// `sum c_i value(k_i)`.
    pub fn evaluate(&self, mut value: impl FnMut(&Index) -> f64) -> f64 {
        self.coefficients
            .iter()
            .map(|(k, c)| rational_to_f64(c) * value(k))
            .sum()
    }

    /// Coefficient rows over `indices`, for row-space comparisons.
    pub fn to_matrix(relations: &[MzvRelation], indices: &[Index]) -> RationalMatrix {
        let rows = relations
            .iter()
            .map(|r| {
                indices
                    .iter()
                    .map(|k| r.coefficients.get(k).cloned().unwrap_or_else(Rational::zero))
                    .collect()
            })
            .collect();
        RationalMatrix::from_rows(rows, indices.len())
    }
}

impl fmt::Display for MzvRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.coefficients.iter().enumerate() {
            let sign = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}zeta({k})")?;
            } else {
                write!(f, "{sign}{mag}*zeta({k})")?;
            }
        }
        f.write_str(" = 0")
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Drives the whole computation and memoizes zeta expressions.
#[derive(Debug, Default)]
pub struct RelationEngine {
    config: EngineConfig,
    expander: PolylogExpander,
    zetas: RwLock<HashMap<Index, Arc<LsiExpr>>>,
}

impl RelationEngine {
    pub fn new(config: EngineConfig) -> Self {
        RelationEngine { config, expander: PolylogExpander::new(), zetas: RwLock::default() }
    }

    pub fn with_expander(config: EngineConfig, expander: PolylogExpander) -> Self {
        RelationEngine { config, expander, zetas: RwLock::default() }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn expander(&self) -> &PolylogExpander {
        &self.expander
    }

    fn progress(&self, msg: impl FnOnce() -> String) {
        if self.config.progress {
            eprintln!("[lsi] {}", msg());
        }
    }

    pub fn zeta_expr(&self, k: &Index) -> Result<Arc<LsiExpr>> {
        if let Some(hit) = self.zetas.read().expect("zeta cache poisoned").get(k) {
            return Ok(Arc::clone(hit));
        }
        let e = Arc::new(self.expander.zeta_expr(k)?);
        let mut guard = self.zetas.write().expect("zeta cache poisoned");
        Ok(Arc::clone(guard.entry(k.clone()).or_insert(e)))
    }

    fn zeta_rows(&self, indices: &[Index]) -> Result<Vec<Arc<LsiExpr>>> {
        if self.config.parallel_rows {
            indices.par_iter().map(|k| self.zeta_expr(k)).collect()
        } else {
            indices.iter().map(|k| self.zeta_expr(k)).collect()
        }
    }

    fn coefficient_matrix(
        &self,
        rows: Vec<Index>,
        basis: &MonomialBasis,
        imaginary: bool,
    ) -> Result<RationalMatrix> {
        let exprs = self.zeta_rows(&rows)?;
        let mut m = RationalMatrix::zeros(rows.len(), basis.len());
        for (i, e) in exprs.iter().enumerate() {
            for (mono, c) in e.iter() {
                let value = if imaginary { &c.im } else { &c.re };
                if value.is_zero() {
                    continue;
                }
                let j = basis.position(mono).ok_or_else(|| Error::OutsideBasis(mono.clone()))?;
                m.set(i, j, value.clone());
            }
        }
        Ok(m.with_row_labels(rows).with_col_labels(basis.monomials().to_vec()))
    }

    /// Real parts of the zeta expressions of weight `w`, one row per MZV up
    /// to duality, over the basis of parity `w mod 2`.
    pub fn re_matrix(&self, w: u32) -> Result<RationalMatrix> {
        let rows = dedupe_by_duality(&enumerate_admissible(w)?, false)?;
        let basis = build_basis(w, Parity::of(w))?;
        self.progress(|| format!("weight {w}: real parts of {} MZVs", rows.len()));
        self.coefficient_matrix(rows, &basis, false)
    }

    /// Imaginary parts of the zeta expressions of weight `w`, skipping
    /// self-dual indices, over the basis of the other parity.
    pub fn im_matrix(&self, w: u32) -> Result<RationalMatrix> {
        let rows = dedupe_by_duality(&enumerate_admissible(w)?, true)?;
        let basis = build_basis(w, Parity::of(w).flip())?;
        self.progress(|| format!("weight {w}: imaginary parts of {} MZVs", rows.len()));
        self.coefficient_matrix(rows, &basis, true)
    }

    /// Relations among the weight-`w` monomials of parity `w mod 2`, as the
    /// rows of a matrix labelled by that basis:
    /// - imaginary-part relations of weight `w+1` that involve only
    ///   pi-divisible columns, divided by pi (and likewise from `w+1+2t`
    ///   divided by `pi^{1+2t}` when `extra_im_steps > 0`);
    /// - all imaginary-part relations of weight `w-1-2m`, `0 <= m <= (w-4)/2`,
    ///   multiplied by `pi^{1+2m}`;
    /// - the configured `Re Li_{2k+1}` identities.
    pub fn ls_relations_for(&self, w: u32) -> Result<RationalMatrix> {
        let target = build_basis(w, Parity::of(w))?;
        let mut out = RationalMatrix::zeros(0, target.len())
            .with_col_labels(target.monomials().to_vec());

        for t in 0..=self.config.extra_im_steps {
            let shift = 1 + 2 * t;
            let im = self.im_matrix(w + shift)?;
            let suffix = im
                .col_labels
                .as_ref()
                .map(|labels| labels.partition_point(|m| m.pi_pow() < shift))
                .unwrap_or(0);
            let (r, pivots) = im.rref_with_pivots();
            for (i, &p) in pivots.iter().enumerate() {
                if p < suffix {
                    continue;
                }
                out.push_row(transfer_row(r.row(i), &im, &target, |m| m.divide_pi(shift))?);
            }
        }

        if w >= 4 {
            for m in 0..=(w - 4) / 2 {
                let lower = w - 1 - 2 * m;
                let im = self.im_matrix(lower)?;
                let basis_rows = im.row_space_basis();
                for row in basis_rows.row_vectors() {
                    out.push_row(transfer_row(row, &im, &target, |mono| Some(mono.times_pi(1 + 2 * m)))?);
                }
            }
        }

        for k in self.cr_orders_for(w) {
            let rel = self.inject_cr_relation(k)?;
            let lift = w - (2 * k + 1);
            out.push_row(transfer_row(rel.row(0), &rel, &target, |m| Some(m.times_pi(lift)))?);
        }
        Ok(out)
    }

    fn cr_orders_for(&self, w: u32) -> Vec<u32> {
        let fits = |k: u32| k >= 1 && 2 * k < w && (w - 2 * k - 1).is_multiple_of(2);
        match &self.config.cr {
            CrInjection::None => Vec::new(),
            CrInjection::All => (1..=w / 2).filter(|&k| fits(k)).collect(),
            CrInjection::Orders(ks) => ks.iter().copied().filter(|&k| fits(k)).collect(),
        }
    }

    /// `Re Li_{2k+1}(e^{i pi/3}) - (1/2)(1-2^{-2k})(1-3^{-2k}) Re zeta(2k+1) = 0`
    /// as a single row over the odd basis of weight `2k+1`.
    pub fn inject_cr_relation(&self, k: u32) -> Result<RationalMatrix> {
        if k == 0 {
            return Err(Error::InvalidPart(0));
        }
        let w = 2 * k + 1;
        let index = Index::new(vec![w])?;
        let lhs = self.expander.li_expand(&index).real_part();
        let two_k = BigInt::from(1u32) << (2 * k);
        let three_k = BigInt::from(3u32).pow(2 * k);
        let factor = Rational::new(
            (&two_k - BigInt::one()) * (&three_k - BigInt::one()),
            BigInt::from(2) * two_k * three_k,
        );
        let rhs = self.zeta_expr(&index)?.real_part().scale_rational(&factor);
        let relation = &lhs - &rhs;

        let basis = build_basis(w, Parity::Odd)?;
        let mut row = vec![Rational::zero(); basis.len()];
        for (m, c) in &relation {
            let j = basis.position(m).ok_or_else(|| Error::OutsideBasis(m.clone()))?;
            row[j] = c.re.clone();
        }
        Ok(RationalMatrix::from_rows(vec![row], basis.len())
            .with_col_labels(basis.monomials().to_vec()))
    }

    /// `re_matrix(w)` with every pivot column of the stacked monomial
    /// relations eliminated.
    pub fn reduce_mzv_matrix(&self, w: u32) -> Result<RationalMatrix> {
        let mut re = self.re_matrix(w)?;
        let relations = self.ls_relations_for(w)?;
        let (r, pivots) = relations.rref_with_pivots();
        self.progress(|| format!("weight {w}: substituting {} monomial relations", pivots.len()));
        for (i, &c) in pivots.iter().enumerate() {
            let rel = r.row(i);
            for row in 0..re.rows() {
                let f = re.get(row, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, x) in rel.iter().enumerate() {
                    if !x.is_zero() {
                        let v = re.get(row, j) - &f * x;
                        re.set(row, j, v);
                    }
                }
            }
        }
        Ok(re)
    }

    /// Upper bound on `dim Z_w`: the rank of the reduced MZV matrix.
    pub fn compute_lk(&self, w: u32) -> Result<usize> {
        Ok(self.reduce_mzv_matrix(w)?.rank())
    }

    /// A basis of the rational relations among the weight-`w` MZV
    /// representatives that the reduced matrix exposes.
    pub fn mzv_relations(&self, w: u32) -> Result<Vec<MzvRelation>> {
        let reduced = self.reduce_mzv_matrix(w)?;
        let labels = reduced.row_labels.clone().unwrap_or_default();
        let (n, c) = (reduced.rows(), reduced.cols());
        let augmented = RationalMatrix::from_rows(
            (0..n)
                .map(|i| {
                    let mut row = reduced.row(i).to_vec();
                    row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                    row
                })
                .collect(),
            c + n,
        );
        let r = augmented.rref();
        let mut out = Vec::new();
        for i in 0..n {
            let row = r.row(i);
            if row[..c].iter().any(|x| !x.is_zero()) {
                continue;
            }
            let coeffs = labels.iter().cloned().zip(row[c..].iter().cloned()).collect();
            if let Some(rel) = MzvRelation::normalized(coeffs) {
                out.push(rel);
            }
        }
        Ok(out)
    }
}

/// Moves a row over `src`'s column labels onto `target` through `map`.
fn transfer_row(
    row: &[Rational],
    src: &RationalMatrix,
    target: &MonomialBasis,
    map: impl Fn(&LsiMonomial) -> Option<LsiMonomial>,
) -> Result<Vec<Rational>> {
    let labels = src.col_labels.as_ref().expect("relation rows carry column labels");
    let mut out = vec![Rational::zero(); target.len()];
    for (x, m) in row.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let moved = map(m).ok_or_else(|| Error::OutsideBasis(m.clone()))?;
        let j = target.position(&moved).ok_or(Error::OutsideBasis(moved))?;
        out[j] = x.clone();
    }
    Ok(out)
}
