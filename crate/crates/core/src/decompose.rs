//! Specht modules as direct sums of Young modules, at `q = -1` (`l = 2`).
//!
//! Every family below is computed from the special-pair enumeration; no
//! summand list is written down in closed form. Summands are kept in
//! descending lexicographic order of their labels.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::partition::{Composition, Partition};
use crate::special::{check_characteristic, is_p_special, special_two_part, SpecialParams};

/// Which family produced a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `Sp(a, m-1, …, 2, 1^{b-m+2})`.
    Staircase,
    /// `Sp(a, 1^b)` with `a`, `b` of opposite parity.
    Hook,
    /// `Sp(a, 3, 1^{b-1})` in characteristic 2.
    A31b,
    /// `Sp(b+1, 2, 2, 1^{a-3})`, the conjugate label of [`Theorem::A31b`].
    A31bDual,
    /// `Sp(2^k + 2, 1^{2^k - 1})` in characteristic 2.
    TwoPowerHook,
    /// The `σ_m` block component of a permutation module.
    BlockComponent,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

/// One Young summand `Y(λ)^{(mult)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub young: Partition,
    pub mult: u64,
}

/// A Specht label together with its Young summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub theorem: Theorem,
    pub parameters: BTreeMap<String, i64>,
    pub specht: Partition,
    pub summands: Vec<Summand>,
}

/// The block component of `M(α)` (equivalently of `S^α E`) belonging to a
/// staircase core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockComponent {
    pub theorem: Theorem,
    pub parameters: BTreeMap<String, i64>,
    pub permutation: Composition,
    pub core: Partition,
    pub summands: Vec<Summand>,
}

fn params_map(entries: &[(&str, i64)]) -> BTreeMap<String, i64> {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn summands_of(labels: impl IntoIterator<Item = Partition>) -> Vec<Summand> {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for y in labels {
        *counts.entry(y).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .rev()
        .map(|(young, mult)| Summand { young, mult })
        .collect()
}

fn to_u32(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Precondition(format!("{what} = {v} is out of range")))
}

/// `σ_m + l·μ` for every `μ` in the list.
fn shifted_labels(core: &Partition, l: u32, mus: &[Partition]) -> Result<Vec<Partition>> {
    mus.iter()
        .map(|mu| core.add_scaled(l, mu.parts()))
        .collect()
}

/// `(a, m-1, m-2, …, 2, 1^{ones})`.
pub fn staircase_hook_label(a: u32, m: u32, ones: usize) -> Result<Partition> {
    let mut parts = vec![a];
    parts.extend((2..m).rev());
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::new(parts)
}

impl Decomposition {
    /// Sum of `mult · Y(λ)` as a multiset.
    pub fn multiset(&self) -> BTreeMap<Partition, u64> {
        self.summands
            .iter()
            .map(|s| (s.young.clone(), s.mult))
            .collect()
    }

    /// Checks the structural invariants: positive multiplicities, sorted
    /// labels, degree conservation, and (at `l = 2`) that every Young label
    /// has 2-core `σ_m`.
    pub fn check_invariants(&self) -> Result<()> {
        let degree = self.specht.degree();
        for w in self.summands.windows(2) {
            if w[0].young <= w[1].young {
                return Err(Error::Validity(format!(
                    "summands out of order: {} before {}",
                    w[0].young, w[1].young
                )));
            }
        }
        let core = match (self.parameters.get("l"), self.parameters.get("m")) {
            (Some(&2), Some(&m)) => Some(Partition::staircase(to_u32(m, "m")?, 2)),
            _ => None,
        };
        for s in &self.summands {
            if s.mult == 0 {
                return Err(Error::Validity(format!(
                    "zero multiplicity on Y{}",
                    s.young
                )));
            }
            if s.young.degree() != degree {
                return Err(Error::Validity(format!(
                    "Y{} has degree {} but Sp{} has degree {degree}",
                    s.young,
                    s.young.degree(),
                    self.specht
                )));
            }
            if let Some(core) = &core {
                if s.young.core(2) != *core {
                    return Err(Error::Validity(format!(
                        "Y{} has 2-core {} instead of {core}",
                        s.young,
                        s.young.core(2)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing plain data")
    }

    pub fn from_json(text: &str) -> Result<Decomposition> {
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))
    }
}

fn write_summands(f: &mut fmt::Formatter<'_>, prefix: &str, summands: &[Summand]) -> fmt::Result {
    if summands.is_empty() {
        return f.write_str("0");
    }
    for (i, s) in summands.iter().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write!(f, "{prefix}{}", s.young)?;
        if s.mult > 1 {
            write!(f, "^({})", s.mult)?;
        }
    }
    Ok(())
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp{} = ", self.specht)?;
        write_summands(f, "Y", &self.summands)
    }
}

impl BlockComponent {
    /// The same component read as a summand of `S^α E`, with injective
    /// labels `I(λ)`.
    pub fn injective_form(&self) -> String {
        struct Injective<'a>(&'a BlockComponent);
        impl fmt::Display for Injective<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "S{} [core {}] = ", self.0.permutation, self.0.core)?;
                write_summands(f, "I", &self.0.summands)
            }
        }
        Injective(self).to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializing plain data")
    }

    pub fn from_json(text: &str) -> Result<BlockComponent> {
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))
    }
}

impl fmt::Display for BlockComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{} [core {}] = ", self.permutation, self.core)?;
        write_summands(f, "Y", &self.summands)
    }
}

/// `Sp(a, m-1, …, 2, 1^{b-m+2}) = ⊕ Y(σ_m + 2μ)` over two-part `μ = (c, d)`
/// with `c + d = u + v` and `(c - d, u - v)` `p`-special, where
/// `a - m = 2u` and `b - m + 1 = 2v`.
pub fn decompose_staircase(m: i64, a: i64, b: i64, p: u64) -> Result<Decomposition> {
    check_characteristic(p)?;
    if m < 2 {
        return precondition(format!("m must be at least 2, got {m}"));
    }
    if a < m {
        return precondition(format!("need a >= m, got a = {a}, m = {m}"));
    }
    if b < m - 1 {
        return precondition(format!("need b >= m - 1, got b = {b}, m = {m}"));
    }
    if (a - m) % 2 != 0 {
        return precondition(format!("a - m must be even, got a - m = {}", a - m));
    }
    if (b - m).rem_euclid(2) != 1 {
        return precondition(format!("b - m must be odd, got b - m = {}", b - m));
    }
    let u = (a - m) / 2;
    let v = (b - m + 1) / 2;
    let m32 = to_u32(m, "m")?;
    let specht = staircase_hook_label(to_u32(a, "a")?, m32, (b - m + 2) as usize)?;
    let core = Partition::staircase(m32, 2);
    let mus = special_two_part(u as u64, v as u64, p)?;
    Ok(Decomposition {
        theorem: Theorem::Staircase,
        parameters: params_map(&[("a", a), ("b", b), ("l", 2), ("m", m), ("p", p as i64)]),
        specht,
        summands: summands_of(shifted_labels(&core, 2, &mus)?),
    })
}

/// `Sp(a, 1^b)` for `a, b ≥ 1` of opposite parity. For `a` even this is the
/// staircase family with `m = 2`; for `a` odd the summands are
/// `Y(σ_1 + 2μ)` with `a - 1 = 2u`, `b = 2v`.
pub fn decompose_hook(a: i64, b: i64, p: u64) -> Result<Decomposition> {
    check_characteristic(p)?;
    if a < 1 || b < 1 {
        return precondition(format!("need a, b >= 1, got a = {a}, b = {b}"));
    }
    if (a - b) % 2 == 0 {
        return precondition(format!(
            "a and b must have opposite parity, got a = {a}, b = {b}"
        ));
    }
    let (m, u, v) = if a % 2 == 0 {
        (2, (a - 2) / 2, (b - 1) / 2)
    } else {
        (1, (a - 1) / 2, b / 2)
    };
    let core = Partition::staircase(m, 2);
    let mus = special_two_part(u as u64, v as u64, p)?;
    let specht = Partition::from_runs(&[(to_u32(a, "a")?, 1), (1, b as usize)])?;
    Ok(Decomposition {
        theorem: Theorem::Hook,
        parameters: params_map(&[
            ("a", a),
            ("b", b),
            ("l", 2),
            ("m", i64::from(m)),
            ("p", p as i64),
        ]),
        specht,
        summands: summands_of(shifted_labels(&core, 2, &mus)?),
    })
}

fn check_a31b(a: i64, b: i64) -> Result<(i64, i64)> {
    if a < 4 || a % 2 != 0 {
        return precondition(format!("a must be even and at least 4, got {a}"));
    }
    if a % 4 == 0 {
        return precondition(format!("a must not be divisible by 4, got {a}"));
    }
    if b < 3 || b % 2 == 0 {
        return precondition(format!("b must be odd and at least 3, got {b}"));
    }
    Ok((a / 2 - 1, (b - 1) / 2))
}

/// Two-part `(x, y)` with `x + y = sum` and `(x - y, diff)` `p`-special.
pub(crate) fn pairs_with(sum: i64, diff: i64, p: u64) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    if sum < 0 {
        return Ok(out);
    }
    let mut x = sum;
    while 2 * x >= sum {
        let y = sum - x;
        if is_p_special(x - y, diff, p)? {
            out.push((x, y));
        }
        x -= 1;
    }
    Ok(out)
}

/// Labels `σ₂ + 2μ` for `μ = (μ_1, μ_2, 1)`, `μ_1 + μ_2 = u + v`,
/// `(μ_1 - μ_2, u - v)` 2-special.
pub(crate) fn a31b_three_part_family(u: i64, v: i64) -> Result<Vec<Partition>> {
    let core = Partition::staircase(2, 2);
    pairs_with(u + v, u - v, 2)?
        .into_iter()
        .filter(|&(_, y)| y >= 1)
        .map(|(x, y)| core.add_scaled(2, &[x as u32, y as u32, 1]))
        .collect()
}

/// Labels `σ₂ + 2ρ` for `ρ = σ₂ + 2ρ̄`, `2(ρ̄_1 + ρ̄_2) = u + v - 2`,
/// `(2(ρ̄_1 - ρ̄_2), u - v - 2)` 2-special.
pub(crate) fn a31b_twisted_family(u: i64, v: i64) -> Result<Vec<Partition>> {
    let core = Partition::staircase(2, 2);
    let total = u + v - 2;
    if total < 0 || total % 2 != 0 {
        return Ok(Vec::new());
    }
    let half = total / 2;
    let mut out = Vec::new();
    let mut x = half;
    while 2 * x >= half {
        let y = half - x;
        if is_p_special(2 * (x - y), u - v - 2, 2)? {
            let rho = core.add_scaled(2, &[x as u32, y as u32])?;
            out.push(core.add_scaled(2, rho.parts())?);
        }
        x -= 1;
    }
    Ok(out)
}

/// `Sp(a, 3, 1^{b-1})` in characteristic 2, for `a ≥ 4` even with
/// `a ≢ 0 (mod 4)` and `b ≥ 3` odd.
pub fn decompose_a31b(a: i64, b: i64) -> Result<Decomposition> {
    let (u, v) = check_a31b(a, b)?;
    let specht = Partition::from_runs(&[(to_u32(a, "a")?, 1), (3, 1), (1, (b - 1) as usize)])?;
    let mut labels = a31b_three_part_family(u, v)?;
    labels.extend(a31b_twisted_family(u, v)?);
    Ok(Decomposition {
        theorem: Theorem::A31b,
        parameters: params_map(&[("a", a), ("b", b), ("l", 2), ("m", 2), ("p", 2)]),
        specht,
        summands: summands_of(labels),
    })
}

/// The conjugate label `Sp(b+1, 2, 2, 1^{a-3})`. Specht modules at
/// conjugate labels are dual in characteristic 2 and Young modules are
/// self-dual, so the summands are those of [`decompose_a31b`].
pub fn decompose_a31b_dual(a: i64, b: i64) -> Result<Decomposition> {
    let primal = decompose_a31b(a, b)?;
    Ok(Decomposition {
        theorem: Theorem::A31bDual,
        specht: primal.specht.conjugate(),
        ..primal
    })
}

/// `Sp(2^k + 2, 1^{2^k - 1})` in characteristic 2, computed through
/// [`decompose_staircase`] with `m = 2`.
pub fn decompose_two_power_hook(k: i64) -> Result<Decomposition> {
    if !(1..=30).contains(&k) {
        return precondition(format!("k must lie in 1..=30, got {k}"));
    }
    let n = 1i64 << k;
    let mut d = decompose_staircase(2, n + 2, n - 1, 2)?;
    d.theorem = Theorem::TwoPowerHook;
    d.parameters.insert("k".into(), k);
    Ok(d)
}

/// The `σ_m` block component of `M(a, b, (m-2)(l-1), …, 2(l-1), l-1)`:
/// `⊕ Y(σ_m + lμ)` over `μ = (c, d)` with `c + d = u + v` and
/// `(c - d, u - v)` `p`-special, where `lu = a - m(l-1)` and
/// `lv = b - (m-1)(l-1)`.
pub fn block_component(m: i64, a: i64, b: i64, params: SpecialParams) -> Result<BlockComponent> {
    let l = params.l() as i64;
    if m < 2 {
        return precondition(format!("m must be at least 2, got {m}"));
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
    if (a + m) % l != 0 {
        return precondition(format!("need a + m ≡ 0 mod {l}, got a + m = {}", a + m));
    }
    if (b + m) % l != 1 {
        return precondition(format!("need b + m ≡ 1 mod {l}, got b + m = {}", b + m));
    }
    let u = (a - m * (l - 1)) / l;
    let v = (b - (m - 1) * (l - 1)) / l;
    let (m32, l32) = (to_u32(m, "m")?, to_u32(l, "l")?);
    let mut perm = vec![to_u32(a, "a")?, to_u32(b, "b")?];
    perm.extend((1..=m32.saturating_sub(2)).rev().map(|i| i * (l32 - 1)));
    let core = Partition::staircase(m32, l32);
    let mus = special_two_part(u as u64, v as u64, params.p())?;
    Ok(BlockComponent {
        theorem: Theorem::BlockComponent,
        parameters: params_map(&[
            ("a", a),
            ("b", b),
            ("l", l),
            ("m", m),
            ("p", params.p() as i64),
        ]),
        permutation: Composition::new(perm),
        summands: summands_of(shifted_labels(&core, l32, &mus)?),
        core,
    })
}
