use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `pi^m * Ls_k^l(pi/3)` where `Ls_k^l(s) = (-1)^n int_{0<t_1<..<t_n<s} prod t_u^{l_u} A(t_u)^{k_u-1-l_u} dt_u`
/// and `A(t) = log|2 sin(t/2)|`. With `n = 0` this is just `pi^m`.
///
/// Every column satisfies `k_u - 1 - l_u >= 0`; that difference is the power
/// of `A` attached to the column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LsiMonomial {
    pi_pow: u32,
    ks: Vec<u32>,
    ls: Vec<u32>,
}

impl LsiMonomial {
    pub fn new(pi_pow: u32, ks: Vec<u32>, ls: Vec<u32>) -> Result<Self> {
        if ks.len() != ls.len() {
            return Err(Error::InvalidMonomial(format!(
                "k has {} entries but l has {}",
                ks.len(),
                ls.len()
            )));
        }
        for (&k, &l) in ks.iter().zip(&ls) {
            if k == 0 || l + 1 > k {
                return Err(Error::InvalidMonomial(format!(
                    "column (k={k}, l={l}) violates k - 1 - l >= 0"
                )));
            }
        }
        Ok(LsiMonomial { pi_pow, ks, ls })
    }

    pub(crate) fn from_parts_unchecked(pi_pow: u32, ks: Vec<u32>, ls: Vec<u32>) -> Self {
        debug_assert_eq!(ks.len(), ls.len());
        debug_assert!(ks.iter().zip(&ls).all(|(&k, &l)| k > l));
        LsiMonomial { pi_pow, ks, ls }
    }

    /// `pi^m` alone.
    pub fn pi_power(pi_pow: u32) -> Self {
        LsiMonomial { pi_pow, ks: Vec::new(), ls: Vec::new() }
    }

    /// The empty monomial, i.e. the constant 1.
    pub fn one() -> Self {
        Self::pi_power(0)
    }

    pub fn pi_pow(&self) -> u32 {
        self.pi_pow
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    pub fn ls(&self) -> &[u32] {
        &self.ls
    }

    pub fn depth(&self) -> usize {
        self.ks.len()
    }

    pub fn weight(&self) -> u32 {
        self.pi_pow + self.ks.iter().sum::<u32>()
    }

    /// Power of `A` in column `u` (0-based).
    pub fn a_exponent(&self, u: usize) -> u32 {
        self.ks[u] - 1 - self.ls[u]
    }

    pub fn a_exponents(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.depth()).map(|u| self.a_exponent(u))
    }

    /// Total number of `A` factors mod 2; pure powers of pi have parity 0.
    pub fn parity(&self) -> u32 {
        self.a_exponents().sum::<u32>() % 2
    }

    pub fn is_pure_pi(&self) -> bool {
        self.ks.is_empty()
    }

    /// No column with `k_u - 1 - l_u = 0`.
    pub fn is_canonical(&self) -> bool {
        self.a_exponents().all(|p| p >= 1)
    }

    /// 0-based positions where the reduction formula applies.
    pub fn reducible_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.depth()).filter(|&u| self.a_exponent(u) == 0)
    }

    pub fn times_pi(&self, extra: u32) -> Self {
        LsiMonomial { pi_pow: self.pi_pow + extra, ks: self.ks.clone(), ls: self.ls.clone() }
    }

    /// Same monomial with the pi power lowered by `by`, if possible.
    pub fn divide_pi(&self, by: u32) -> Option<Self> {
        (self.pi_pow >= by).then(|| LsiMonomial {
            pi_pow: self.pi_pow - by,
            ks: self.ks.clone(),
            ls: self.ls.clone(),
        })
    }
}

impl Ord for LsiMonomial {
    /// pi power ascending, depth descending, then `ks` and `ls`
    /// lexicographically. Columns divisible by pi therefore form a suffix.
    fn cmp(&self, other: &Self) -> Ordering {
        self.pi_pow
            .cmp(&other.pi_pow)
            .then_with(|| other.depth().cmp(&self.depth()))
            .then_with(|| self.ks.cmp(&other.ks))
            .then_with(|| self.ls.cmp(&other.ls))
    }
}

impl PartialOrd for LsiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for LsiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = match self.pi_pow {
            0 => String::new(),
            1 => "pi".to_string(),
            m => format!("pi^{m}"),
        };
        if self.ks.is_empty() {
            return f.write_str(if pi.is_empty() { "1" } else { &pi });
        }
        if !pi.is_empty() {
            write!(f, "{pi}*")?;
        }
        write!(f, "Ls_{{{}}}^{{({})}}", join(&self.ks), join(&self.ls))
    }
}

impl FromStr for LsiMonomial {
    type Err = Error;

    /// `k1,..,kn:l1,..,ln`, optionally preceded by `m|` for a pi power,
    /// e.g. `2|1,3:0,1`. A bare `m|` is the pure power `pi^m`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("malformed monomial {s:?}: {why}"));
        let (pi_pow, body) = match s.split_once('|') {
            Some((m, rest)) => (m.trim().parse::<u32>().map_err(|_| bad("pi power"))?, rest),
            None => (0, s),
        };
        let body = body.trim();
        if body.is_empty() {
            return Ok(Self::pi_power(pi_pow));
        }
        let (ks, ls) = body.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let list = |part: &str| -> Result<Vec<u32>> {
            part.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad("non-integer entry")))
                .collect()
        };
        LsiMonomial::new(pi_pow, list(ks)?, list(ls)?)
    }
}
