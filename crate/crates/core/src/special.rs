//! Signed-digit "special pair" predicates.
//!
//! `(r, b)` is `p`-special when `b` can be written `Σ p^i t_i` with
//! `|t_i| ≤ r_i` and `r_i ≡ t_i (mod 2)`, where the `r_i` are the base-`p`
//! digits of `r` (for `p = 0`: `|b| ≤ r` and `r ≡ b (mod 2)`). These are
//! exactly the weights of the rank-one simple module of highest weight `r`,
//! which is why they index the Young summands of the decompositions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Quantum order `l ≥ 2` and field characteristic `p` (0 or prime).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpecialParams {
    l: u64,
    p: u64,
}

impl SpecialParams {
    pub fn new(l: u64, p: u64) -> Result<Self> {
        if l < 2 {
            return Err(Error::Domain(format!("l must be at least 2, got {l}")));
        }
        check_characteristic(p)?;
        Ok(SpecialParams { l, p })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "characteristic must be 0 or prime, got {p}"
        )))
    }
}

/// Base-`p` digits, least significant first.
fn digits(mut r: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while r > 0 {
        out.push(r % p);
        r /= p;
    }
    out
}

struct DigitSearch {
    digits: Vec<u64>,
    /// `tails[i]` = value of the digits from position `i` upwards, i.e.
    /// `r / p^i`; bounds `|residual|` at depth `i`.
    tails: Vec<i64>,
    p: i64,
    memo: HashMap<(usize, i64), bool>,
}

impl DigitSearch {
    fn solve(&mut self, i: usize, residual: i64) -> bool {
        if i == self.digits.len() {
            return residual == 0;
        }
        if residual.abs() > self.tails[i] {
            return false;
        }
        if let Some(&hit) = self.memo.get(&(i, residual)) {
            return hit;
        }
        let r_i = self.digits[i] as i64;
        let p = self.p;
        let base = residual.rem_euclid(p);
        // At most two integers in [-r_i, r_i] share a residue mod p.
        let mut found = false;
        for t in [base - p, base] {
            if t >= -r_i && t <= r_i && (r_i - t) % 2 == 0 && self.solve(i + 1, (residual - t) / p)
            {
                found = true;
                break;
            }
        }
        self.memo.insert((i, residual), found);
        found
    }
}

/// Whether `(r, b)` is `p`-special.
pub fn is_p_special(r: i64, b: i64, p: u64) -> Result<bool> {
    if r < 0 {
        return Err(Error::Domain(format!("r must be nonnegative, got {r}")));
    }
    check_characteristic(p)?;
    if b.abs() > r || (r - b) % 2 != 0 {
        return Ok(false);
    }
    if p == 0 {
        return Ok(true);
    }
    let ds = digits(r as u64, p);
    let mut tails = Vec::with_capacity(ds.len());
    let mut q = r as u64;
    for _ in 0..ds.len() {
        tails.push(q as i64);
        q /= p;
    }
    let mut search = DigitSearch {
        digits: ds,
        tails,
        p: p as i64,
        memo: HashMap::new(),
    };
    Ok(search.solve(0, b))
}

/// Whether `(s, a)` is `(l, p)`-special: peel one base-`l` digit
/// `s = s_0 + l·s̄`, choose `a_0` with `|a_0| ≤ s_0`, `s_0 ≡ a_0 (mod 2)`,
/// `a ≡ a_0 (mod l)`, then require `(s̄, (a - a_0)/l)` to be `p`-special.
pub fn is_lp_special(s: i64, a: i64, params: SpecialParams) -> Result<bool> {
    if s < 0 {
        return Err(Error::Domain(format!("s must be nonnegative, got {s}")));
    }
    let l = params.l as i64;
    let s0 = s % l;
    let s_bar = s / l;
    for a0 in (-s0..=s0).step_by(2) {
        if (a - a0).rem_euclid(l) == 0 && is_p_special(s_bar, (a - a0) / l, params.p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Two-part partitions `(c, d)` with `c + d = u + v` and `(c - d, u - v)`
/// `p`-special, largest `c` first.
pub fn special_two_part(u: u64, v: u64, p: u64) -> Result<Vec<Partition>> {
    check_characteristic(p)?;
    let total = u + v;
    let diff = u as i64 - v as i64;
    let mut out = Vec::new();
    let mut c = total;
    while 2 * c >= total {
        let d = total - c;
        if is_p_special((c - d) as i64, diff, p)? {
            let parts = vec![
                u32::try_from(c).map_err(|_| Error::Domain(format!("part {c} exceeds u32")))?,
                d as u32,
            ];
            out.push(Partition::new(parts)?);
        }
        if c == 0 {
            break;
        }
        c -= 1;
    }
    Ok(out)
}
