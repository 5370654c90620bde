use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::lsi::LsiMonomial;
use crate::rational::{GaussianRational, Rational};

/// A finite `Q(i)`-linear combination of [`LsiMonomial`]s. Zero coefficients
/// are never stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LsiExpr {
    terms: BTreeMap<LsiMonomial, GaussianRational>,
}

impl LsiExpr {
    pub fn zero() -> Self {
        LsiExpr::default()
    }

    /// `{1 -> 1}`, the multiplicative identity.
    pub fn unit() -> Self {
        Self::monomial(LsiMonomial::one(), GaussianRational::one())
    }

    pub fn monomial(m: LsiMonomial, coeff: GaussianRational) -> Self {
        let mut e = LsiExpr::zero();
        e.add_term(m, &coeff);
        e
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, LsiMonomial, GaussianRational> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &LsiMonomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &LsiMonomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, m: LsiMonomial, coeff: &GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LsiExpr, factor: &GaussianRational) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(c * factor));
        }
    }

    pub fn scale(&self, factor: &GaussianRational) -> LsiExpr {
        let mut out = LsiExpr::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn scale_rational(&self, factor: &Rational) -> LsiExpr {
        self.scale(&GaussianRational::real(factor.clone()))
    }

    /// Complex conjugate. Ls values and pi are real, so only coefficients change.
    pub fn conjugate(&self) -> LsiExpr {
        LsiExpr {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Keeps the real part of every coefficient.
    pub fn real_part(&self) -> LsiExpr {
        self.project(|c| c.re.clone())
    }

    /// The imaginary part as an expression with real coefficients, so that
    /// `e = real_part(e) + i * imag_part(e)`.
    pub fn imag_part(&self) -> LsiExpr {
        self.project(|c| c.im.clone())
    }

    fn project(&self, f: impl Fn(&GaussianRational) -> Rational) -> LsiExpr {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let r = f(c);
                (!r.is_zero()).then(|| (m.clone(), GaussianRational::real(r)))
            })
            .collect();
        LsiExpr { terms }
    }

    pub fn times_pi(&self, extra: u32) -> LsiExpr {
        LsiExpr {
            terms: self.terms.iter().map(|(m, c)| (m.times_pi(extra), c.clone())).collect(),
        }
    }

    /// The common weight of all terms, if there is one. The zero expression
    /// is homogeneous of every weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(LsiMonomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn max_depth(&self) -> usize {
        self.terms.keys().map(LsiMonomial::depth).max().unwrap_or(0)
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(LsiMonomial::is_canonical)
    }
}

impl FromIterator<(LsiMonomial, GaussianRational)> for LsiExpr {
    fn from_iter<I: IntoIterator<Item = (LsiMonomial, GaussianRational)>>(iter: I) -> Self {
        let mut e = LsiExpr::zero();
        for (m, c) in iter {
            e.add_term(m, &c);
        }
        e
    }
}

impl<'a> IntoIterator for &'a LsiExpr {
    type Item = (&'a LsiMonomial, &'a GaussianRational);
    type IntoIter = btree_map::Iter<'a, LsiMonomial, GaussianRational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl Add for &LsiExpr {
    type Output = LsiExpr;
    fn add(self, rhs: &LsiExpr) -> LsiExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &GaussianRational::one());
        out
    }
}

impl Sub for &LsiExpr {
    type Output = LsiExpr;
    fn sub(self, rhs: &LsiExpr) -> LsiExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &-GaussianRational::one());
        out
    }
}

impl Neg for &LsiExpr {
    type Output = LsiExpr;
    fn neg(self) -> LsiExpr {
        self.scale(&-GaussianRational::one())
    }
}

impl fmt::Display for LsiExpr {
    /// Terms as `c*m` joined by ` + ` or ` - `, with unit coefficients
    /// omitted, e.g. `-1/2*i*Ls_{3}^{(0)} + pi^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let (negative, coeff) = match (c.re.is_zero(), c.im.is_zero()) {
                (_, true) => (c.re.is_negative(), magnitude(&c.re, false)),
                (true, false) => (c.im.is_negative(), magnitude(&c.im, true)),
                _ => (false, Some(format!("{c}"))),
            };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match coeff {
                Some(c) if m.depth() == 0 && m.pi_pow() == 0 => f.write_str(&c)?,
                Some(c) => write!(f, "{c}*{m}")?,
                None => write!(f, "{m}")?,
            }
        }
        Ok(())
    }
}

// `None` for a bare unit; the caller then prints only the monomial
fn magnitude(r: &Rational, imaginary: bool) -> Option<String> {
    let r = r.abs();
    match (r.is_one(), imaginary) {
        (true, false) => None,
        (true, true) => Some("i".into()),
        (false, false) => Some(r.to_string()),
        (false, true) => Some(format!("{r}*i")),
    }
}
