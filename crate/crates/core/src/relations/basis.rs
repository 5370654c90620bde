use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lsi::LsiMonomial;

/// Parity class of a monomial: the total number of `A` factors mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            _ => Err(Error::Parse(format!("parity must be 'odd' or 'even', got {s:?}"))),
        }
    }
}

/// Ordered list of the canonical monomials of one weight and parity class.
/// The even class also contains the pure power `pi^w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    weight: u32,
    parity: Parity,
    monomials: Vec<LsiMonomial>,
    positions: HashMap<LsiMonomial, usize>,
}

impl MonomialBasis {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn monomials(&self) -> &[LsiMonomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &LsiMonomial) -> Option<usize> {
        self.positions.get(m).copied()
    }

    /// First column whose monomial carries at least `pi^min_pi`.
    pub fn pi_suffix_start(&self, min_pi: u32) -> usize {
        self.monomials.partition_point(|m| m.pi_pow() < min_pi)
    }

    fn from_sorted(weight: u32, parity: Parity, monomials: Vec<LsiMonomial>) -> Self {
        let positions = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { weight, parity, monomials, positions }
    }
}

/// All canonical monomials of weight `w` in the given parity class, sorted by
/// the monomial order.
pub fn build_basis(w: u32, parity: Parity) -> Result<MonomialBasis> {
    if w < 2 {
        return Err(Error::WeightTooSmall(w));
    }
    let mut out = Vec::new();
    for pi_pow in 0..=w {
        let rest = w - pi_pow;
        if rest == 0 {
            if parity == Parity::Even {
                out.push(LsiMonomial::pi_power(w));
            }
            continue;
        }
        let mut ks = Vec::new();
        for_each_composition_min2(rest, &mut ks, &mut |ks| {
            let mut ls = vec![0; ks.len()];
            for_each_l(ks, 0, &mut ls, &mut |ls| {
                let m = LsiMonomial::from_parts_unchecked(pi_pow, ks.to_vec(), ls.to_vec());
                if m.parity() == parity.bit() {
                    out.push(m);
                }
            });
        });
    }
    out.sort();
    Ok(MonomialBasis::from_sorted(w, parity, out))
}

fn for_each_composition_min2(rest: u32, prefix: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        f(prefix);
        return;
    }
    for part in 2..=rest {
        prefix.push(part);
        for_each_composition_min2(rest - part, prefix, f);
        prefix.pop();
    }
}

// l_u ranges over 0..=k_u-2 so that every column keeps an A factor
fn for_each_l(ks: &[u32], u: usize, ls: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if u == ks.len() {
        f(ls);
        return;
    }
    for l in 0..=ks[u] - 2 {
        ls[u] = l;
        for_each_l(ks, u + 1, ls, f);
    }
}
