//! Multiple zeta values in floating point, and exact Bernoulli numbers.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::indices::Index;
use crate::rational::{factorial, Rational};
use crate::relations::rational_to_f64;

/// `Li_k(z) = sum_{0<m_1<...<m_n} z^{m_n} / (m_1^{k_1} ... m_n^{k_n})` for
/// real `0 <= z < 1`, truncated after `terms` values of `m_n`.
pub fn multiple_polylog(k: &Index, z: f64, terms: usize) -> f64 {
    let parts = k.parts();
    let n = parts.len();
    if n == 0 {
        return 1.0;
    }
    // partial[j]: sum over m_1 < ... < m_j < m of the first j factors
    let mut partial = vec![0.0; n];
    partial[0] = 1.0;
    let mut zp = 1.0;
    let mut total = 0.0;
    for m in 1..=terms {
        let mf = m as f64;
        zp *= z;
        total += zp * partial[n - 1] / mf.powi(parts[n - 1] as i32);
        for j in (1..n).rev() {
            partial[j] += partial[j - 1] / mf.powi(parts[j - 1] as i32);
        }
    }
    total
}

/// `zeta(k)` from the duality convolution at `1/2`,
/// `zeta(k) = sum_m Li_{k^(m)}(1/2) Li_{(k*)^(w-m)}(1/2)`. Every factor is a
/// series in `2^-m`, so `terms` controls the error directly.
pub fn mzv(k: &Index, terms: usize) -> Result<f64> {
    let dual = k.dual()?;
    let w = k.weight();
    let mut total = 0.0;
    for m in 0..=w {
        let left = multiple_polylog(&k.truncate(m)?, 0.5, terms);
        let right = multiple_polylog(&dual.truncate(w - m)?, 0.5, terms);
        total += left * right;
    }
    Ok(total)
}

/// `B_n` with `B_1 = -1/2`, from `sum_{j=0}^{n} C(n+1, j) B_j = 0`.
pub fn bernoulli(n: u32) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            let c = binomial(BigInt::from(m + 1), BigInt::from(j));
            acc += Rational::from_integer(c) * bj;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b.pop().expect("at least B_0")
}

/// `(-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!)`.
pub fn euler_even_zeta(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("zeta(0) is not an even zeta value".into()));
    }
    let ratio = bernoulli(2 * k) / Rational::from_integer(BigInt::from(2) * factorial(2 * k));
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * (2.0 * std::f64::consts::PI).powi(2 * k as i32) * rational_to_f64(&ratio))
}
