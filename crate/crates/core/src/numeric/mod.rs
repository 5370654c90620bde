//! Floating-point oracle: nested quadrature for log-sine integrals at
//! `pi/3`, series for multiple zeta values, and checks of closed forms.

mod quadrature;
mod zeta;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::indices::Index;
use crate::lsi::{LsiExpr, LsiMonomial};
use crate::polylog::li_expand;
use crate::relations::{rational_to_f64, MzvRelation};

pub use quadrature::TanhSinh;
pub use zeta::{bernoulli, euler_even_zeta, multiple_polylog};

const SIGMA: f64 = PI / 3.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericConfig {
    pub abs_tolerance: f64,
    pub max_depth: usize,
    pub series_cutoff: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { abs_tolerance: 1e-10, max_depth: 3, series_cutoff: 200 }
    }
}

impl NumericConfig {
    pub fn new(abs_tolerance: f64, max_depth: usize, series_cutoff: usize) -> Result<Self> {
        if abs_tolerance.is_nan() || abs_tolerance <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {abs_tolerance}")));
        }
        if max_depth == 0 {
            return Err(Error::Domain("max_depth must be at least 1".into()));
        }
        Ok(NumericConfig { abs_tolerance, max_depth, series_cutoff })
    }

    /// Quadrature level for one nesting level of a depth-`depth` integral.
    /// The rule converges doubly exponentially; level 3 already reaches
    /// double precision on these integrands, and depth 3 costs `nodes^3`.
    fn level(&self, depth: usize) -> u32 {
        let base = if self.abs_tolerance >= 1e-6 { 3 } else { 4 };
        if depth <= 2 {
            base + 1
        } else {
            base
        }
    }
}

/// `A(theta) = log(2 sin(theta/2))` on `(0, 2 pi)`.
pub fn eval_a(theta: f64) -> Result<f64> {
    if theta > 0.0 && theta < 2.0 * PI {
        Ok(a_unchecked(theta))
    } else {
        Err(Error::Domain(format!("A(theta) needs 0 < theta < 2pi, got {theta}")))
    }
}

fn a_unchecked(theta: f64) -> f64 {
    (2.0 * (0.5 * theta).sin()).ln()
}

/// Numerical value of a monomial, `pi^m` times
/// `(-1)^n int_{0<t_1<...<t_n<pi/3} prod t_u^{l_u} A(t_u)^{k_u-1-l_u}`.
pub fn eval_ls(m: &LsiMonomial, cfg: &NumericConfig) -> Result<f64> {
    let n = m.depth();
    if n > cfg.max_depth {
        return Err(Error::DepthCap { depth: n, cap: cfg.max_depth });
    }
    let cols: Vec<(i32, i32)> =
        m.ls().iter().zip(m.a_exponents()).map(|(&l, p)| (l as i32, p as i32)).collect();
    let rule = TanhSinh::new(cfg.level(n));
    let integral = nested(&rule, &cols, SIGMA);
    let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
    Ok(sign * PI.powi(m.pi_pow() as i32) * integral)
}

// int_0^upper t^l A(t)^p g(t) dt, where g is the same integral over the
// remaining columns with upper limit t
fn nested(rule: &TanhSinh, cols: &[(i32, i32)], upper: f64) -> f64 {
    let Some((&(l, p), inner)) = cols.split_last() else {
        return 1.0;
    };
    rule.integrate(0.0, upper, |t| {
        let outer = t.powi(l) * a_unchecked(t).powi(p);
        if outer == 0.0 {
            0.0
        } else {
            outer * nested(rule, inner, t)
        }
    })
}

/// `sum coefficient * eval_ls(monomial)`.
pub fn eval_expr(e: &LsiExpr, cfg: &NumericConfig) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for (m, c) in e.iter() {
        let v = eval_ls(m, cfg)?;
        total += Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im)) * v;
    }
    Ok(total)
}

pub fn eval_mzv(k: &Index, cfg: &NumericConfig) -> Result<f64> {
    zeta::mzv(k, cfg.series_cutoff)
}

/// Left side minus right side of a relation among MZVs.
pub fn eval_relation(r: &MzvRelation, cfg: &NumericConfig) -> Result<f64> {
    let mut total = 0.0;
    for (k, c) in &r.coefficients {
        total += rational_to_f64(c) * eval_mzv(k, cfg)?;
    }
    Ok(total)
}

/// Both sides of the integral evaluation of `int_0^{pi/3} (t-pi/3)^{2m+1} A(t) dt`
/// in terms of single zeta values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CcsCheck {
    pub m: u32,
    pub lhs: f64,
    /// `-(2m+1)!/2 (1-2^{-2m-2})(1-3^{-2m-2}) zeta(2m+3)`
    pub zeta_term: f64,
    /// `(2m+1)! sum_k (-1)^k (pi/3)^{2k} zeta(2m+3-2k) / (2k)!`
    pub sum_term: f64,
}

impl CcsCheck {
    pub fn rhs(&self) -> f64 {
        self.zeta_term + self.sum_term
    }

    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs()).abs()
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.residual() < tolerance
    }
}

pub fn check_ccs_identity(m: u32, cfg: &NumericConfig) -> Result<CcsCheck> {
    let e = 2 * m as i32 + 1;
    let rule = TanhSinh::new(cfg.level(1) + 1);
    let integral = rule.integrate(0.0, SIGMA, |t| (t - SIGMA).powi(e) * a_unchecked(t));
    let lhs = if m % 2 == 1 { -integral } else { integral };

    let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
    let z = |s: u32| eval_mzv(&Index::new(vec![s]).expect("positive part"), cfg);
    let f = fact(2 * m + 1);
    let s = 2 * m as i32 + 2;
    let zeta_term = -0.5 * f * (1.0 - 2f64.powi(-s)) * (1.0 - 3f64.powi(-s)) * z(2 * m + 3)?;
    let mut sum_term = 0.0;
    for k in 0..=m {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        sum_term += sign * SIGMA.powi(2 * k as i32) * z(2 * m + 3 - 2 * k)? / fact(2 * k);
    }
    Ok(CcsCheck { m, lhs, zeta_term, sum_term: f * sum_term })
}

/// `Re Li_{2k+1}(e^{i pi/3})` from the symbolic expansion, against
/// `(1/2)(1-2^{-2k})(1-3^{-2k}) zeta(2k+1)`. Returns `(expansion, closed form)`.
pub fn clausen_real_part(k: u32, cfg: &NumericConfig) -> Result<(f64, f64)> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let s = 2 * k + 1;
    let index = Index::new(vec![s])?;
    let value = eval_expr(&li_expand(&index), cfg)?.re;
    let e = -2 * k as i32;
    let closed = 0.5 * (1.0 - 2f64.powi(e)) * (1.0 - 3f64.powi(e)) * eval_mzv(&index, cfg)?;
    Ok((value, closed))
}
