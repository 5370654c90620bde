#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use lsi_core::lsi::{shuffle, LsiExpr, LsiMonomial};
use lsi_core::rational::rat;
use lsi_core::{GaussianRational, Index, Rational};

pub fn idx(p: &[u32]) -> Index {
    Index::new(p.to_vec()).unwrap()
}

pub fn mono(pi: u32, ks: &[u32], ls: &[u32]) -> LsiMonomial {
    LsiMonomial::new(pi, ks.to_vec(), ls.to_vec()).unwrap()
}

pub fn single(m: LsiMonomial) -> LsiExpr {
    LsiExpr::monomial(m, GaussianRational::one())
}

/// Any valid monomial with `k_u - 1 - l_u >= 0`.
pub fn monomial(max_pi: u32, max_depth: usize, max_k: u32) -> impl Strategy<Value = LsiMonomial> {
    (0..=max_pi, prop::collection::vec(1..=max_k, 1..=max_depth))
        .prop_flat_map(|(pi, ks)| {
            let ls: Vec<_> = ks.iter().map(|&k| 0..k).collect();
            (Just(pi), Just(ks), ls)
        })
        .prop_map(|(pi, ks, ls)| LsiMonomial::new(pi, ks, ls).unwrap())
}

/// Monomials whose every column keeps an `A` factor.
pub fn canonical_monomial(max_pi: u32, max_depth: usize, max_k: u32) -> impl Strategy<Value = LsiMonomial> {
    (0..=max_pi, prop::collection::vec(2..=max_k, 1..=max_depth))
        .prop_flat_map(|(pi, ks)| {
            let ls: Vec<_> = ks.iter().map(|&k| 0..k - 1).collect();
            (Just(pi), Just(ks), ls)
        })
        .prop_map(|(pi, ks, ls)| LsiMonomial::new(pi, ks, ls).unwrap())
}

pub fn monomial_up_to_weight(max_weight: u32, max_depth: usize) -> impl Strategy<Value = LsiMonomial> {
    monomial(2, max_depth, max_weight.min(4)).prop_filter("weight bound", move |m| m.weight() <= max_weight)
}

/// Monomials with at least one column lacking an `A` factor.
pub fn reducible_monomial(max_weight: u32, max_depth: usize) -> impl Strategy<Value = LsiMonomial> {
    monomial_up_to_weight(max_weight, max_depth).prop_filter("reducible", |m| !m.is_canonical())
}

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
}

pub fn expression(max_weight: u32, max_depth: usize) -> impl Strategy<Value = LsiExpr> {
    prop::collection::vec((monomial_up_to_weight(max_weight, max_depth), gaussian()), 1..=3)
        .prop_map(|terms| terms.into_iter().collect())
}

/// Bilinear extension of the monomial shuffle, without canonicalizing.
pub fn shuffle_expr(a: &LsiExpr, b: &LsiExpr) -> LsiExpr {
    let mut out = LsiExpr::zero();
    for (ma, ca) in a {
        for (mb, cb) in b {
            out.add_scaled(&shuffle(ma, mb), &(ca * cb));
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank by fraction-free (Bareiss) elimination over the integers, after
/// clearing each row's denominators.
pub fn bareiss_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..m {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..n {
            for j in c + 1..m {
                let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

/// Random matrix whose later rows are often combinations of earlier ones.
pub fn rational_rows(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(prop::collection::vec(small_rational(), c), r),
            prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), small_rational()), 0..=r),
        )
            .prop_map(|(mut rows, combos)| {
                for (i, j, f) in combos {
                    let n = rows.len();
                    let (i, j) = (i.index(n), j.index(n));
                    let new: Vec<Rational> =
                        rows[i].iter().zip(&rows[j]).map(|(x, y)| x + &f * y).collect();
                    rows.push(new);
                }
                rows
            })
    })
}
