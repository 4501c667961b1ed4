//! Weight multiplicities of simple modules in rank at most three.
//!
//! Characters are built from Steinberg's tensor product theorem: a highest
//! weight splits as `λ⁰ + l·λ̄` with `λ⁰` restricted, and
//! `ch L(λ) = ch L(λ⁰) · (ch L(λ̄))^F`, where the Frobenius twist `F`
//! scales every weight. The quantum order `l` is used once, for the
//! outermost layer; every deeper layer peels base-`p` digits, and in
//! characteristic 0 the classical layer is a Weyl character.
//!
//! Restricted base cases:
//! - rank 1: `L(r₀)` for `r₀ < l` is the full string `r₀, r₀-2, …, -r₀`;
//! - rank 3, `p = 2`: `L(())`, `L(1)`, `L(1,1)` and the Steinberg module
//!   `L(2,1)` have the Schur characters `1, s(1), s(1,1), s(2,1)`. Any other
//!   restricted base case is refused rather than guessed.

use std::collections::BTreeMap;

use crate::error::{precondition, Error, Result};
use crate::partition::Partition;
use crate::special::{check_characteristic, is_lp_special, is_p_special, SpecialParams};

/// A formal character of a torus of rank `n ≤ 3`: weights with positive
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCharacter {
    rank: usize,
    mults: BTreeMap<Vec<i64>, u64>,
}

impl WeightCharacter {
    pub fn zero(rank: usize) -> Self {
        WeightCharacter {
            rank,
            mults: BTreeMap::new(),
        }
    }

    /// The trivial module: weight zero with multiplicity one.
    pub fn trivial(rank: usize) -> Self {
        let mut c = WeightCharacter::zero(rank);
        c.add_weight(vec![0; rank], 1);
        c
    }

    /// The rank-one string `r, r-2, …, -r`, each weight once.
    pub fn string(r: u64) -> Self {
        let mut c = WeightCharacter::zero(1);
        let r = r as i64;
        for w in (-r..=r).step_by(2) {
            c.add_weight(vec![w], 1);
        }
        c
    }

    /// `s(λ)` in `n` variables, by Gelfand–Tsetlin patterns.
    pub fn schur_polynomial(lambda: &Partition, n: usize) -> Self {
        let mut c = WeightCharacter::zero(n);
        if lambda.len() > n {
            return c;
        }
        let top: Vec<u32> = (0..n).map(|i| lambda.part(i)).collect();
        let mut weight = vec![0i64; n];
        gt_patterns(&top, &mut weight, &mut c);
        c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_weight(&mut self, weight: Vec<i64>, mult: u64) {
        debug_assert_eq!(weight.len(), self.rank);
        if mult > 0 {
            *self.mults.entry(weight).or_insert(0) += mult;
        }
    }

    /// Multiplicity of `weight`, zero when absent.
    pub fn mult(&self, weight: &[i64]) -> u64 {
        self.mults.get(weight).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn weights(&self) -> impl DoubleEndedIterator<Item = (&[i64], u64)> {
        self.mults.iter().map(|(w, &m)| (w.as_slice(), m))
    }

    /// Character of the tensor product: convolution of weight maps.
    pub fn product(&self, other: &WeightCharacter) -> WeightCharacter {
        assert_eq!(self.rank, other.rank, "rank mismatch in character product");
        let mut out = WeightCharacter::zero(self.rank);
        for (w1, m1) in &self.mults {
            for (w2, m2) in &other.mults {
                let w: Vec<i64> = w1.iter().zip(w2).map(|(x, y)| x + y).collect();
                out.add_weight(w, m1 * m2);
            }
        }
        out
    }

    /// Frobenius twist: every weight multiplied by `scale`.
    pub fn frobenius(&self, scale: u64) -> WeightCharacter {
        let s = scale as i64;
        WeightCharacter {
            rank: self.rank,
            mults: self
                .mults
                .iter()
                .map(|(w, &m)| (w.iter().map(|x| x * s).collect(), m))
                .collect(),
        }
    }

    /// Tensoring with `det^k`: every weight shifted by `k` in each slot.
    pub fn shift_all(&self, k: i64) -> WeightCharacter {
        WeightCharacter {
            rank: self.rank,
            mults: self
                .mults
                .iter()
                .map(|(w, &m)| (w.iter().map(|x| x + k).collect(), m))
                .collect(),
        }
    }
}

fn gt_patterns(row: &[u32], weight: &mut Vec<i64>, out: &mut WeightCharacter) {
    let n = row.len();
    let row_sum: i64 = row.iter().map(|&x| i64::from(x)).sum();
    if n == 1 {
        weight[0] = row_sum;
        out.add_weight(weight.clone(), 1);
        return;
    }
    // Next row down has n-1 entries with row[i] >= next[i] >= row[i+1].
    let mut next = vec![0u32; n - 1];
    fn choose(
        row: &[u32],
        i: usize,
        next: &mut Vec<u32>,
        row_sum: i64,
        weight: &mut Vec<i64>,
        out: &mut WeightCharacter,
    ) {
        if i == next.len() {
            let next_sum: i64 = next.iter().map(|&x| i64::from(x)).sum();
            weight[row.len() - 1] = row_sum - next_sum;
            let snapshot = next.clone();
            gt_patterns(&snapshot, weight, out);
            return;
        }
        for v in row[i + 1]..=row[i] {
            next[i] = v;
            choose(row, i + 1, next, row_sum, weight, out);
        }
    }
    choose(row, 0, &mut next, row_sum, weight, out);
}

/// Simple module of highest weight `r` for `SL₂` at quantum order `l` over
/// characteristic `p`.
pub fn sl2_simple_character(r: i64, params: SpecialParams) -> Result<WeightCharacter> {
    if r < 0 {
        return Err(Error::Domain(format!(
            "highest weight must be nonnegative, got {r}"
        )));
    }
    let r = r as u64;
    let l = params.l();
    let restricted = WeightCharacter::string(r % l);
    let classical = sl2_classical(r / l, params.p());
    Ok(restricted.product(&classical.frobenius(l)))
}

fn sl2_classical(r: u64, p: u64) -> WeightCharacter {
    if p == 0 {
        return WeightCharacter::string(r);
    }
    if r == 0 {
        return WeightCharacter::trivial(1);
    }
    WeightCharacter::string(r % p).product(&sl2_classical(r / p, p).frobenius(p))
}

/// `dim L(c,d)^{(a,b)}`: 1 exactly when `(c-d, a-b)` is `(l,p)`-special.
pub fn gl2_weight_mult(c: i64, d: i64, a: i64, b: i64, params: SpecialParams) -> Result<u64> {
    if d < 0 || c < d {
        return precondition(format!("({c},{d}) is not a partition"));
    }
    if a + b != c + d {
        return precondition(format!(
            "weight ({a},{b}) has degree {} but the highest weight ({c},{d}) has degree {}",
            a + b,
            c + d
        ));
    }
    Ok(u64::from(is_lp_special(c - d, a - b, params)?))
}

/// Like [`gl2_weight_mult`] but a degree mismatch or a negative weight
/// entry simply gives zero.
pub(crate) fn gl2_mult_or_zero(
    c: i64,
    d: i64,
    a: i64,
    b: i64,
    params: SpecialParams,
) -> Result<u64> {
    if a + b != c + d || a < 0 || b < 0 {
        return Ok(0);
    }
    gl2_weight_mult(c, d, a, b, params)
}

fn two_part(mu: &Partition) -> Result<(i64, i64)> {
    if mu.len() > 2 {
        return Err(Error::Validity(format!(
            "{mu} has more than two parts; the weight space vanishes for such labels"
        )));
    }
    Ok((i64::from(mu.part(0)), i64::from(mu.part(1))))
}

fn check_staircase_weight(m: i64, a: i64, b: i64, l: i64) -> Result<()> {
    if m < 1 {
        return precondition(format!("m must be at least 1, got {m}"));
    }
    if a < m * (l - 1) {
        return precondition(format!("need a >= m(l-1) = {}, got a = {a}", m * (l - 1)));
    }
    if b < (m - 1) * (l - 1) {
        return precondition(format!(
            "need b >= (m-1)(l-1) = {}, got b = {b}",
            (m - 1) * (l - 1)
        ));
    }
    Ok(())
}

/// `dim L(σ_m + lμ)` at the weight `(a, b, (m-2)(l-1), …, 2(l-1), l-1)`,
/// where `σ_m = (l-1)(m, …, 1)`.
///
/// Stripping the common `(l-1)` columns from the last `m - 2` rows reduces
/// this to the rank-two multiplicity
/// `dim L(σ_1 + lμ)^{(a-(m-1)(l-1), b-(m-1)(l-1))}`.
pub fn staircase_weight_mult(
    m: i64,
    a: i64,
    b: i64,
    mu: &Partition,
    params: SpecialParams,
) -> Result<u64> {
    let l = params.l() as i64;
    check_staircase_weight(m, a, b, l)?;
    let (c, d) = two_part(mu)?;
    let shift = (m - 1) * (l - 1);
    let reduced = gl2_mult_or_zero(l - 1 + l * c, l * d, a - shift, b - shift, params)?;
    debug_assert!(
        staircase_weight_mult_closed_form(m, a, b, mu, params)?.is_none_or(|v| v == reduced),
        "reduction and closed form disagree at m={m} a={a} b={b} mu={mu}"
    );
    Ok(reduced)
}

/// The same multiplicity in closed form, available when `a + m ≡ 0` and
/// `b + m ≡ 1 (mod l)`: with `lu = a - m(l-1)` and `lv = b - (m-1)(l-1)`
/// it is 1 exactly when `c + d = u + v` and `(c - d, u - v)` is `p`-special.
/// Returns `None` off that congruence class.
pub fn staircase_weight_mult_closed_form(
    m: i64,
    a: i64,
    b: i64,
    mu: &Partition,
    params: SpecialParams,
) -> Result<Option<u64>> {
    let l = params.l() as i64;
    check_staircase_weight(m, a, b, l)?;
    let (c, d) = two_part(mu)?;
    if (a + m).rem_euclid(l) != 0 || (b + m).rem_euclid(l) != 1 {
        return Ok(None);
    }
    let u = (a - m * (l - 1)) / l;
    let v = (b - (m - 1) * (l - 1)) / l;
    if c + d != u + v {
        return Ok(Some(0));
    }
    Ok(Some(u64::from(is_p_special(c - d, u - v, params.p())?)))
}

/// `dim L(σ₂ + 2μ)^{(a, b, 2)}` in characteristic 2 for a two-part `μ`,
/// with `a = 2(u+1)` even, `a ≢ 0 (mod 4)`, and `b = 2v + 1` odd.
///
/// Writing `μ = μ⁰ + 2μ̄` with `μ⁰` restricted, the value is
/// `2·dim L(μ)^{(u+1, v)}`, plus `dim L(2μ̄)^{(u-2, v)}` when `μ⁰ = (2,1)`.
pub fn weight_mult_ab2(a: i64, b: i64, mu: &Partition) -> Result<u64> {
    if a < 2 || a % 2 != 0 {
        return precondition(format!("a must be even and at least 2, got {a}"));
    }
    if a % 4 == 0 {
        return precondition(format!("a must not be divisible by 4, got {a}"));
    }
    if b < 3 || b % 2 == 0 {
        return precondition(format!("b must be odd and at least 3, got {b}"));
    }
    let (m1, m2) = two_part(mu)?;
    let params = SpecialParams::new(2, 2)?;
    let u = a / 2 - 1;
    let v = (b - 1) / 2;
    let x = (m1 - m2) % 2;
    let y = m2 % 2;
    let mut total = 2 * gl2_mult_or_zero(m1, m2, u + 1, v, params)?;
    if x == 1 && y == 1 {
        let (bar1, bar2) = ((m1 - 2) / 2, (m2 - 1) / 2);
        total += gl2_mult_or_zero(2 * bar1, 2 * bar2, u - 2, v, params)?;
    }
    Ok(total)
}

/// Character of the simple `GL₃` module `L(λ)` in characteristic `p`.
///
/// Used as an independent oracle: determinant powers are split off first,
/// then base-`p` Steinberg layers are peeled until the highest weight is
/// zero. In characteristic 0 the answer is the Weyl character `s(λ)`.
pub fn gl3_simple_character(lambda: &Partition, p: u64) -> Result<WeightCharacter> {
    check_characteristic(p)?;
    if lambda.len() > 3 {
        return Err(Error::Validity(format!(
            "{lambda} has more than three parts"
        )));
    }
    let det = lambda.part(2);
    let reduced = Partition::new(vec![lambda.part(0) - det, lambda.part(1) - det])?;
    let body = if p == 0 {
        WeightCharacter::schur_polynomial(&reduced, 3)
    } else {
        gl3_steinberg(&reduced, p)?
    };
    Ok(body.shift_all(i64::from(det)))
}

fn gl3_steinberg(lambda: &Partition, p: u64) -> Result<WeightCharacter> {
    if lambda.is_empty() {
        return Ok(WeightCharacter::trivial(3));
    }
    let p32 = p as u32;
    let (l1, l2) = (lambda.part(0), lambda.part(1));
    let x = (l1 - l2) % p32;
    let y = l2 % p32;
    let restricted = Partition::new(vec![x + y, y])?;
    let rest = Partition::new(vec![(l1 - x - y) / p32, (l2 - y) / p32])?;
    let base = gl3_restricted(&restricted, p)?;
    Ok(base.product(&gl3_steinberg(&rest, p)?.frobenius(p)))
}

fn gl3_restricted(lambda: &Partition, p: u64) -> Result<WeightCharacter> {
    match (lambda.parts(), p) {
        ([], _) => Ok(WeightCharacter::trivial(3)),
        ([1], _) | ([1, 1], _) | ([2, 1], 2) => Ok(WeightCharacter::schur_polynomial(lambda, 3)),
        _ => Err(Error::UnsupportedBaseCase(format!(
            "no trusted character for the restricted weight {lambda} at p = {p}"
        ))),
    }
}
