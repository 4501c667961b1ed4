//! Partitions and compositions.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing positive
//! parts with no trailing zeros. It is the label type for Specht modules,
//! Young modules, cores and dominant weights. Nothing here caps the number of
//! parts, so all computations live in the stable (unboundedly many variables)
//! setting.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// A finite sequence of nonnegative integers; order is significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Validity(format!(
                "parts must be weakly decreasing, but part {} is {} and part {} is {}",
                i + 1,
                parts[i],
                i + 2,
                parts[i + 1]
            )));
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// The transpose partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut out = Vec::with_capacity(width);
        for j in 1..=width as u32 {
            out.push(self.0.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition(out)
    }

    /// Dominance order: equal degree and every prefix sum of `self` is at
    /// most the matching prefix sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut lhs, mut rhs) = (0u64, 0u64);
        for i in 0..n {
            lhs += u64::from(self.part(i));
            rhs += u64::from(other.part(i));
            if lhs > rhs {
                return false;
            }
        }
        true
    }

    /// The `l`-core, read off the abacus with `len(λ)` beads.
    ///
    /// Beads on each runner are pushed as far up as they go, which is the
    /// result of removing every removable rim `l`-hook.
    pub fn core(&self, l: u32) -> Partition {
        assert!(l >= 1, "core requires l >= 1");
        let k = self.len();
        if k == 0 {
            return Partition::empty();
        }
        let l = l as usize;
        let mut per_runner = vec![0usize; l];
        for (i, &p) in self.0.iter().enumerate() {
            let beta = p as usize + (k - 1 - i);
            per_runner[beta % l] += 1;
        }
        let mut beads: Vec<usize> = per_runner
            .iter()
            .enumerate()
            .flat_map(|(runner, &count)| (0..count).map(move |j| runner + j * l))
            .collect();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        let parts = beads
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (k - 1 - i)) as u32)
            .filter(|&p| p > 0)
            .collect();
        Partition(parts)
    }

    pub fn is_core(&self, l: u32) -> bool {
        self.core(l) == *self
    }

    /// `(l-1)·(m, m-1, …, 1)`; empty when `m == 0`.
    pub fn staircase(m: u32, l: u32) -> Partition {
        assert!(l >= 1, "staircase requires l >= 1");
        if l == 1 {
            return Partition::empty();
        }
        Partition((1..=m).rev().map(|i| (l - 1) * i).collect())
    }

    /// `λ_i > m - i` for every `i ≥ 1` with `λ_i > 0`.
    pub fn is_adapted(&self, m: u32) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| i64::from(p) > i64::from(m) - (i as i64 + 1))
    }

    /// `self + scale·mu`, componentwise with zero padding.
    pub fn add_scaled(&self, scale: u32, mu: &[u32]) -> Result<Partition> {
        let n = self.len().max(mu.len());
        let mut parts = Vec::with_capacity(n);
        for i in 0..n {
            let extra = mu.get(i).copied().unwrap_or(0);
            let v = extra
                .checked_mul(scale)
                .and_then(|e| e.checked_add(self.part(i)))
                .ok_or_else(|| Error::Validity("part overflows u32".into()))?;
            parts.push(v);
        }
        Partition::new(parts)
    }

    /// Hook length of the box in row `i`, column `j` (both 0-based).
    fn hook_length(&self, conj: &Partition, i: usize, j: usize) -> u64 {
        let arm = self.0[i] as usize - j - 1;
        let leg = conj.0[j] as usize - i - 1;
        (arm + leg + 1) as u64
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula.
    pub fn count_standard_tableaux(&self) -> BigUint {
        let conj = self.conjugate();
        let mut numerator = BigUint::one();
        for k in 2..=self.degree() {
            numerator *= k;
        }
        let mut denominator = BigUint::one();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                denominator *= self.hook_length(&conj, i, j);
            }
        }
        numerator / denominator
    }

    /// Concatenation of parts, used to build labels such as `(a, m-1, …, 2, 1^k)`.
    pub fn from_runs(runs: &[(u32, usize)]) -> Result<Partition> {
        let mut parts = Vec::new();
        for &(value, count) in runs {
            parts.extend(std::iter::repeat_n(value, count));
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            acc.push(first);
            go(rest - first, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Partition {
    /// Lexicographic order on parts; a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// `(α | β)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition(parts)
    }
}

/// Expands `part (',' part)*` with `part := INT ('^' INT)?`, optionally
/// wrapped in parentheses. `()` and the empty string give no parts.
fn parse_runs(text: &str) -> Result<Vec<u32>> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('(') {
        body = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::Syntax(format!("unbalanced parenthesis in {text:?}")))?
            .trim();
    }
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        let (value, repeat) = match token.split_once('^') {
            Some((v, r)) => (v.trim(), Some(r.trim())),
            None => (token, None),
        };
        let value = parse_int(value, token)?;
        let repeat = match repeat {
            Some(r) => {
                let n = parse_int(r, token)?;
                if n == 0 {
                    return Err(Error::Syntax(format!("zero repeat count in {token:?}")));
                }
                n as usize
            }
            None => 1,
        };
        out.extend(std::iter::repeat_n(value, repeat));
    }
    Ok(out)
}

fn parse_int(digits: &str, token: &str) -> Result<u32> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax(format!("malformed part {token:?}")));
    }
    digits
        .parse()
        .map_err(|_| Error::Syntax(format!("part out of range in {token:?}")))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts = parse_runs(text)?;
        if parts.contains(&0) {
            return Err(Error::Validity(format!(
                "parts of a partition must be positive: {text:?}"
            )));
        }
        Partition::new(parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_runs(text).map(Composition)
    }
}

/// Writes `a,b,c^k` with runs of two or more equal parts compressed.
fn write_runs(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    let mut first = true;
    for run in parts.chunk_by(|a, b| a == b) {
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if run.len() >= 2 {
            write!(f, "{}^{}", run[0], run.len())?;
        } else {
            write!(f, "{}", run[0])?;
        }
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_runs(f, &self.0)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_runs(f, &self.0)?;
        f.write_str(")")
    }
}
