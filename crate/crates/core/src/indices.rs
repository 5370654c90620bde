//! Index combinatorics: weight, depth, admissibility, duality, truncation and
//! per-weight enumeration of MZV indices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition `(k_1, ..., k_n)` of positive integers. The empty index is
/// valid and plays the role of the empty word (written `phi`).
///
/// Indices are ordered by depth first and lexicographically within a depth,
/// which is the enumeration order used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPart(bad));
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// `{1}^ones` followed by `tail`.
    pub fn ones_then(ones: usize, tail: &[u32]) -> Self {
        let mut parts = vec![1; ones];
        parts.extend_from_slice(tail);
        Index(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.last().is_some_and(|&k| k >= 2)
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual().is_ok_and(|d| &d == self)
    }

    /// The dual index `k*`.
    ///
    /// Writing `k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_h-1}, b_h+1)`, the dual is
    /// `({1}^{b_h-1}, a_h+1, ..., {1}^{b_1-1}, a_1+1)`.
    pub fn dual(&self) -> Result<Index> {
        if !self.is_admissible() {
            return Err(Error::NonAdmissible(self.clone()));
        }
        let mut blocks = Vec::new();
        let mut ones = 0u32;
        for &k in &self.0 {
            if k == 1 {
                ones += 1;
            } else {
                blocks.push((ones + 1, k - 1));
                ones = 0;
            }
        }
        let mut parts = Vec::with_capacity(self.weight() as usize - self.depth());
        for &(a, b) in blocks.iter().rev() {
            parts.extend(std::iter::repeat_n(1, b as usize - 1));
            parts.push(a + 1);
        }
        Ok(Index(parts))
    }

    /// One truncation step: lower the last part by one, dropping it when it
    /// reaches zero. Returns `None` on the empty index.
    fn truncate_once(&self) -> Option<Index> {
        let (&last, rest) = self.0.split_last()?;
        let mut parts = rest.to_vec();
        if last > 1 {
            parts.push(last - 1);
        }
        Some(Index(parts))
    }

    /// `k^(m)`: the index after `m` truncation steps.
    pub fn truncate(&self, steps: u32) -> Result<Index> {
        if steps > self.weight() {
            return Err(Error::TruncationPastEmpty {
                index: self.clone(),
                steps,
            });
        }
        let mut current = self.clone();
        for _ in 0..steps {
            current = current
                .truncate_once()
                .expect("weight bound guarantees a nonempty index");
        }
        Ok(current)
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth()
            .cmp(&other.depth())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Index {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Index::new(parts)
    }
}

impl From<Index> for Vec<u32> {
    fn from(index: Index) -> Self {
        index.0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("phi");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Comma-separated positive integers; `phi` or the empty string give the
    /// empty index. Surrounding parentheses are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "phi" {
            return Ok(Index::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed index {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Index::new(parts)
    }
}

/// Every admissible index of weight `weight`, sorted by depth then
/// lexicographically. There are `2^(weight-2)` of them.
pub fn enumerate_admissible(weight: u32) -> Result<Vec<Index>> {
    if weight < 2 {
        return Err(Error::WeightTooSmall(weight));
    }
    let mut out = Vec::with_capacity(1 << (weight - 2));
    let mut prefix = Vec::new();
    compositions(weight, &mut prefix, &mut out);
    out.retain(Index::is_admissible);
    out.sort();
    Ok(out)
}

fn compositions(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Index>) {
    if remaining == 0 {
        out.push(Index(prefix.clone()));
        return;
    }
    for part in 1..=remaining {
        prefix.push(part);
        compositions(remaining - part, prefix, out);
        prefix.pop();
    }
}

/// Keep one representative of each `{k, k*}` pair, namely whichever appears
/// first in `indices`. With `drop_self_dual`, indices with `k = k*` are removed.
pub fn dedupe_by_duality(indices: &[Index], drop_self_dual: bool) -> Result<Vec<Index>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for k in indices {
        let dual = k.dual()?;
        if seen.contains(k) {
            continue;
        }
        let self_dual = &dual == k;
        seen.insert(k.clone());
        seen.insert(dual);
        if self_dual && drop_self_dual {
            continue;
        }
        out.push(k.clone());
    }
    Ok(out)
}
