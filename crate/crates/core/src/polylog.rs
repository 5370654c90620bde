//! Multiple polylogarithms at `e^{i pi/3}` as log-sine expressions, and the
//! zeta expression built from them by the duality convolution
//!
//! ```text
//! zeta(k) = sum_{m=0}^{|k|} Li_{k^(m)}(e^{i pi/3}) * conj(Li_{(k*)^(|k|-m)}(e^{i pi/3}))
//! ```

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::indices::Index;
use crate::lsi::{canonicalize, multiply, LsiExpr, LsiMonomial};
use crate::rational::{factorial, third_pow, GaussianRational, Rational};

/// An index together with the canonical expansion of `Li_k(e^{i pi/3})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylogExpansion {
    pub index: Index,
    pub expr: LsiExpr,
}

/// Per-variable exponents `(l_u, p_u)`: powers of `theta_u` and `A(theta_u)`.
type Column = (u32, u32);

/// Expands `Li_k(e^{i pi/3})` without caching.
///
/// The integrand is a product over `u` of
/// `(A(t_{u+1}) - A(t_u) - i t_{u+1}/2 + i t_u/2)^{k_u-1} / (k_u-1)!`
/// with `t_{n+1} = pi/3`, where `A(pi/3) = 0`. Each factor is expanded
/// multinomially; the column for `t_u` closes once factor `u` is processed,
/// since only factors `u-1` and `u` touch it.
pub fn li_expand(k: &Index) -> LsiExpr {
    let n = k.depth();
    if n == 0 {
        return LsiExpr::unit();
    }
    let half_i = GaussianRational::imag(Rational::new(BigInt::one(), BigInt::from(2)));
    let minus_half_i = -&half_i;

    // (closed columns, pending exponents for the next variable) -> coefficient
    let mut states: HashMap<(Vec<Column>, Column), GaussianRational> = HashMap::new();
    states.insert((Vec::new(), (0, 0)), GaussianRational::one());

    for (u, &ku) in k.parts().iter().enumerate() {
        let e = ku - 1;
        let last = u + 1 == n;
        let mut next: HashMap<(Vec<Column>, Column), GaussianRational> = HashMap::new();
        for alpha in 0..=e {
            if last && alpha > 0 {
                break;
            }
            for beta in 0..=e - alpha {
                for gamma in 0..=e - alpha - beta {
                    let delta = e - alpha - beta - gamma;
                    let denom = factorial(alpha) * factorial(beta) * factorial(gamma) * factorial(delta);
                    let mut factor = GaussianRational::real(Rational::new(BigInt::one(), denom));
                    if beta % 2 == 1 {
                        factor = -factor;
                    }
                    factor = &(&factor * &minus_half_i.pow(gamma)) * &half_i.pow(delta);
                    for ((cols, (pend_l, pend_p)), c) in &states {
                        let mut cols = cols.clone();
                        cols.push((pend_l + delta, pend_p + beta));
                        let pending = (gamma, alpha);
                        let slot = next
                            .entry((cols, pending))
                            .or_insert_with(GaussianRational::zero);
                        *slot += &(c * &factor);
                    }
                }
            }
        }
        states = next;
    }

    // i^n from the measure, (-1)^n from the sign convention of Ls
    let prefactor = GaussianRational::i_pow(3 * n as u32 % 4);
    let mut raw = LsiExpr::zero();
    for ((cols, (theta_end, _)), c) in states {
        // the last factor's t_{n+1} powers are (pi/3)^gamma
        let ks = cols.iter().map(|&(l, p)| l + p + 1).collect();
        let ls = cols.iter().map(|&(l, _)| l).collect();
        let m = LsiMonomial::from_parts_unchecked(theta_end, ks, ls);
        let coeff = (&c * &prefactor).scale(&third_pow(theta_end));
        raw.add_term(m, &coeff);
    }
    canonicalize(&raw)
}

/// `li_expand` with a shared memo table. Safe to use from several threads.
#[derive(Debug, Default)]
pub struct PolylogExpander {
    cache: RwLock<HashMap<Index, Arc<LsiExpr>>>,
}

impl PolylogExpander {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn li_expand(&self, k: &Index) -> Arc<LsiExpr> {
        if let Some(hit) = self.cache.read().expect("cache lock poisoned").get(k) {
            return Arc::clone(hit);
        }
        let computed = Arc::new(li_expand(k));
        let mut guard = self.cache.write().expect("cache lock poisoned");
        Arc::clone(guard.entry(k.clone()).or_insert(computed))
    }

    pub fn expansion(&self, k: &Index) -> PolylogExpansion {
        PolylogExpansion { index: k.clone(), expr: (*self.li_expand(k)).clone() }
    }

    /// The canonical log-sine expression of `zeta(k)`; its real part is the
    /// value and its imaginary part vanishes.
    pub fn zeta_expr(&self, k: &Index) -> Result<LsiExpr> {
        let dual = k.dual()?;
        let w = k.weight();
        let mut total = LsiExpr::zero();
        for m in 0..=w {
            let left = self.li_expand(&k.truncate(m)?);
            let right = self.li_expand(&dual.truncate(w - m)?).conjugate();
            total.add_scaled(&multiply(&left, &right), &GaussianRational::one());
        }
        Ok(total)
    }

    /// `Re(i^{|k|} Li_k(e^{i pi/3}))` for `k = ({1}^a, 2, {1}^b)`, returned as
    /// the coefficient of `pi^{a+b+2}`. Fails if anything other than a single
    /// pure power of pi survives.
    pub fn mgl_value(&self, a: usize, b: usize) -> Result<Rational> {
        let mut parts = vec![1; a];
        parts.push(2);
        parts.extend(std::iter::repeat_n(1, b));
        let k = Index::new(parts)?;
        let rotated = self.li_expand(&k).scale(&GaussianRational::i_pow(k.weight() % 4));
        let re = rotated.real_part();
        let pure = LsiMonomial::pi_power(k.weight());
        match re.len() {
            0 => Ok(Rational::zero()),
            1 if re.coefficient(&pure) != GaussianRational::zero() => Ok(re.coefficient(&pure).re),
            _ => Err(Error::NotPurePi(re.to_string())),
        }
    }

    /// `zeta({1}^{a-1}, b+1)`, whose expansion only involves depth-one
    /// integrals.
    pub fn weight1_proposition_expr(&self, a: usize, b: u32) -> Result<LsiExpr> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidPart(0));
        }
        self.zeta_expr(&Index::ones_then(a - 1, &[b + 1]))
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("cache lock poisoned").len()
    }

    /// All memoized expansions, sorted by index.
    pub fn snapshot(&self) -> Vec<PolylogExpansion> {
        let guard = self.cache.read().expect("cache lock poisoned");
        let mut out: Vec<_> = guard
            .iter()
            .map(|(k, e)| PolylogExpansion { index: k.clone(), expr: (**e).clone() })
            .collect();
        out.sort_by(|a, b| a.index.cmp(&b.index));
        out
    }

    pub fn preload(&self, entries: impl IntoIterator<Item = PolylogExpansion>) {
        let mut guard = self.cache.write().expect("cache lock poisoned");
        for PolylogExpansion { index, expr } in entries {
            guard.insert(index, Arc::new(expr));
        }
    }
}

/// Closed form `(-1)^{a+b+1} / (2 * 3^{a+b+2} * (a+b+2)!)` for the
/// coefficient returned by [`PolylogExpander::mgl_value`].
pub fn mgl_closed_form(a: usize, b: usize) -> Rational {
    let s = (a + b + 2) as u32;
    let value = third_pow(s) * Rational::new(BigInt::one(), BigInt::from(2) * factorial(s));
    if (a + b + 1) % 2 == 1 {
        -value
    } else {
        value
    }
}
