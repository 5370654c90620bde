//! Shuffle products and the reduction formula that removes columns with no
//! `A` factor, plus the canonical form built from them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lsi::{LsiExpr, LsiMonomial};
use crate::rational::{third_pow, GaussianRational, Rational};

/// Which reducible column [`canonicalize_with`] eliminates first. The result
/// does not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionOrder {
    #[default]
    Leftmost,
    Rightmost,
}

/// Calls `f` with the column sources of every interleaving of `n` left
/// columns with `m` right columns (`false` = left, `true` = right).
fn for_each_interleaving(n: usize, m: usize, f: &mut impl FnMut(&[bool])) {
    fn go(n: usize, m: usize, word: &mut Vec<bool>, f: &mut impl FnMut(&[bool])) {
        if n == 0 && m == 0 {
            f(word);
            return;
        }
        if n > 0 {
            word.push(false);
            go(n - 1, m, word, f);
            word.pop();
        }
        if m > 0 {
            word.push(true);
            go(n, m - 1, word, f);
            word.pop();
        }
    }
    let mut word = Vec::with_capacity(n + m);
    go(n, m, &mut word, f);
}

fn shuffle_into(a: &LsiMonomial, b: &LsiMonomial, coeff: &GaussianRational, acc: &mut LsiExpr) {
    let pi = a.pi_pow() + b.pi_pow();
    for_each_interleaving(a.depth(), b.depth(), &mut |word| {
        let (mut i, mut j) = (0, 0);
        let mut ks = Vec::with_capacity(word.len());
        let mut ls = Vec::with_capacity(word.len());
        for &from_b in word {
            if from_b {
                ks.push(b.ks()[j]);
                ls.push(b.ls()[j]);
                j += 1;
            } else {
                ks.push(a.ks()[i]);
                ls.push(a.ls()[i]);
                i += 1;
            }
        }
        acc.add_term(LsiMonomial::from_parts_unchecked(pi, ks, ls), coeff);
    });
}

/// Product of two iterated log-sine integrals as the sum over all
/// interleavings of their `(k, l)` columns. pi powers add.
pub fn shuffle(a: &LsiMonomial, b: &LsiMonomial) -> LsiExpr {
    let mut acc = LsiExpr::zero();
    shuffle_into(a, b, &GaussianRational::one(), &mut acc);
    acc
}

/// Number of interleavings before like terms are collected.
pub fn shuffle_term_count(a: &LsiMonomial, b: &LsiMonomial) -> u64 {
    let (n, m) = (a.depth() as u64, b.depth() as u64);
    (1..=m).fold(1u64, |acc, i| acc * (n + i) / i)
}

/// Integrates out column `j` (1-based) of `m`, which must carry no `A`
/// factor (`k_j - 1 - l_j = 0`). Every output term has depth one less; any
/// power of the endpoint `pi/3` is folded into the pi power and a factor
/// `3^-k`.
pub fn reduce_at(m: &LsiMonomial, j: usize) -> Result<LsiExpr> {
    let n = m.depth();
    if j == 0 || j > n || m.a_exponent(j - 1) != 0 {
        return Err(Error::ReductionNotApplicable { monomial: m.clone(), position: j });
    }
    let u = j - 1;
    let kj = m.ks()[u];
    let inv_k = Rational::new(BigInt::one(), BigInt::from(kj));
    let real = |r: Rational| GaussianRational::real(r);

    if n == 1 {
        let coeff = -(inv_k * third_pow(kj));
        return Ok(LsiExpr::monomial(LsiMonomial::pi_power(m.pi_pow() + kj), real(coeff)));
    }

    // drop column u and add k_j to both k and l of column `into`
    let merged = |into: usize| {
        let mut ks = m.ks().to_vec();
        let mut ls = m.ls().to_vec();
        ks[into] += kj;
        ls[into] += kj;
        ks.remove(u);
        ls.remove(u);
        LsiMonomial::from_parts_unchecked(m.pi_pow(), ks, ls)
    };

    let mut out = LsiExpr::zero();
    if u == 0 {
        out.add_term(merged(1), &real(-inv_k));
    } else if u + 1 < n {
        out.add_term(merged(u - 1), &real(inv_k.clone()));
        out.add_term(merged(u + 1), &real(-inv_k));
    } else {
        out.add_term(merged(u - 1), &real(inv_k.clone()));
        let dropped = LsiMonomial::from_parts_unchecked(
            m.pi_pow() + kj,
            m.ks()[..u].to_vec(),
            m.ls()[..u].to_vec(),
        );
        out.add_term(dropped, &real(-(inv_k * third_pow(kj))));
    }
    Ok(out)
}

fn canonical_form(
    m: &LsiMonomial,
    order: ReductionOrder,
    memo: &mut HashMap<LsiMonomial, LsiExpr>,
) -> LsiExpr {
    if let Some(done) = memo.get(m) {
        return done.clone();
    }
    let position = match order {
        ReductionOrder::Leftmost => m.reducible_positions().next(),
        ReductionOrder::Rightmost => m.reducible_positions().last(),
    };
    let result = match position {
        None => LsiExpr::monomial(m.clone(), GaussianRational::one()),
        Some(u) => {
            let step = reduce_at(m, u + 1).expect("position is reducible");
            let mut acc = LsiExpr::zero();
            for (term, c) in &step {
                let sub = canonical_form(term, order, memo);
                acc.add_scaled(&sub, c);
            }
            acc
        }
    };
    memo.insert(m.clone(), result.clone());
    result
}

/// Rewrites `e` so every monomial is canonical (all `k_u - 1 - l_u >= 1`) or
/// a pure power of pi, reducing at the leftmost applicable column.
pub fn canonicalize(e: &LsiExpr) -> LsiExpr {
    canonicalize_with(e, ReductionOrder::Leftmost)
}

pub fn canonicalize_with(e: &LsiExpr, order: ReductionOrder) -> LsiExpr {
    if e.is_canonical() {
        return e.clone();
    }
    let mut memo = HashMap::new();
    let mut out = LsiExpr::zero();
    for (m, c) in e {
        if m.is_canonical() {
            out.add_term(m.clone(), c);
        } else {
            out.add_scaled(&canonical_form(m, order, &mut memo), c);
        }
    }
    out
}

/// Bilinear shuffle product followed by canonicalization.
pub fn multiply(a: &LsiExpr, b: &LsiExpr) -> LsiExpr {
    let mut acc = LsiExpr::zero();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            shuffle_into(ma, mb, &c, &mut acc);
        }
    }
    // shuffles of canonical monomials are canonical, so this is usually free
    canonicalize(&acc)
}
