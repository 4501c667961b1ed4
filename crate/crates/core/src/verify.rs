//! Consistency checks that recompute one quantity along two routes.
//!
//! A mismatch is reported as a value, not an error: it means the library
//! disagrees with itself.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::character::{gl2_mult_or_zero, weight_mult_ab2};
use crate::decompose::{
    a31b_three_part_family, a31b_twisted_family, decompose_a31b, decompose_staircase, pairs_with,
    staircase_hook_label,
};
use crate::error::{precondition, Result};
use crate::partition::{Composition, Partition};
use crate::schur::SchurSum;
use crate::special::SpecialParams;

/// Which right-hand side the core-truncated product should equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreIdentityCase {
    /// `a - m` odd, `b - m` even: `s(a+1, m-1, …, 2, 1^{b-m+1})`.
    ExtendedFirstRow,
    /// `a - m` even, `b - m` odd: `s(a, m-1, …, 2, 1^{b-m+2})`.
    Specht,
    /// Any other parity combination: `0`.
    Zero,
}

impl fmt::Display for CoreIdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreIdentityCase::ExtendedFirstRow => "extended-first-row",
            CoreIdentityCase::Specht => "specht",
            CoreIdentityCase::Zero => "zero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreIdentityVerdict {
    Matches(CoreIdentityCase),
    Mismatch {
        case: CoreIdentityCase,
        expected: SchurSum,
        actual: SchurSum,
    },
}

impl CoreIdentityVerdict {
    pub fn is_match(&self) -> bool {
        matches!(self, CoreIdentityVerdict::Matches(_))
    }
}

/// The expected case and right-hand side for `(m, a, b)`.
pub fn core_identity_expectation(m: i64, a: i64, b: i64) -> Result<(CoreIdentityCase, SchurSum)> {
    check_core_identity(m, a, b)?;
    let (m32, a32) = (m as u32, a as u32);
    let odd = |x: i64| x.rem_euclid(2) == 1;
    Ok(match (odd(a - m), odd(b - m)) {
        (true, false) => (
            CoreIdentityCase::ExtendedFirstRow,
            SchurSum::schur(staircase_hook_label(a32 + 1, m32, (b - m + 1) as usize)?),
        ),
        (false, true) => (
            CoreIdentityCase::Specht,
            SchurSum::schur(staircase_hook_label(a32, m32, (b - m + 2) as usize)?),
        ),
        _ => (CoreIdentityCase::Zero, SchurSum::zero()),
    })
}

fn check_core_identity(m: i64, a: i64, b: i64) -> Result<()> {
    if m < 2 {
        return precondition(format!("m must be at least 2, got {m}"));
    }
    if a < m {
        return precondition(format!("need a >= m, got a = {a}, m = {m}"));
    }
    if b < m - 1 {
        return precondition(format!("need b >= m - 1, got b = {b}, m = {m}"));
    }
    if a > i64::from(u32::MAX) - 1 || b > i64::from(u32::MAX) {
        return precondition(format!("a = {a} or b = {b} is out of range"));
    }
    Ok(())
}

/// Truncates `s(a)·e(b)·e(m-2)·…·e(1)` to the 2-core `σ_m` and compares it
/// with the parity-determined right-hand side.
pub fn verify_core_identity(m: i64, a: i64, b: i64) -> Result<CoreIdentityVerdict> {
    let (case, expected) = core_identity_expectation(m, a, b)?;
    let rows = Composition::new(vec![a as u32]);
    let mut cols = vec![b as u32];
    cols.extend((1..=(m as u32).saturating_sub(2)).rev());
    let product = SchurSum::product_character(&rows, &Composition::new(cols));
    let actual = product.truncate_core(&Partition::staircase(m as u32, 2), 2)?;
    Ok(if actual == expected {
        CoreIdentityVerdict::Matches(case)
    } else {
        CoreIdentityVerdict::Mismatch {
            case,
            expected,
            actual,
        }
    })
}

/// Runs `check` over every case in parallel. Results come back in input
/// order.
pub fn run_grid<T, R, F>(cases: &[T], check: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    cases.par_iter().map(check).collect()
}

/// All `(m, a, b)` with `m_lo ≤ m ≤ m_hi`, `m ≤ a ≤ m + da`,
/// `m - 1 ≤ b ≤ m + db`.
pub fn core_identity_grid(m_lo: i64, m_hi: i64, da: i64, db: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for m in m_lo..=m_hi {
        for a in m..=m + da {
            for b in m - 1..=m + db {
                out.push((m, a, b));
            }
        }
    }
    out
}

pub type LabelMultiset = BTreeMap<Partition, u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConsistencyVerdict {
    Consistent,
    Mismatch {
        /// `Sp(a,3,1^{b-1}) ⊕ Sp(a+2,1^b)^{(2)}` from the decomposition engine.
        decomposed: LabelMultiset,
        /// The same sum rebuilt from the three label families.
        families: LabelMultiset,
        /// The same sum rebuilt from weight multiplicities.
        weights: LabelMultiset,
    },
}

impl ConsistencyVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, ConsistencyVerdict::Consistent)
    }
}

fn add_to(ms: &mut LabelMultiset, label: Partition, mult: u64) {
    if mult > 0 {
        *ms.entry(label).or_insert(0) += mult;
    }
}

/// Whether `(a, b)` is in the range of [`decompose_a31b`].
pub fn a31b_valid(a: i64, b: i64) -> bool {
    a >= 4 && a % 2 == 0 && a % 4 != 0 && b >= 3 && b % 2 == 1
}

/// Checks that `Sp(a,3,1^{b-1})` plus two copies of `Sp(a+2,1^b)` equals
/// the direct sum assembled from the weight multiplicities of the
/// permutation module `M(a, b, 2)`, computed in three independent ways.
pub fn verify_a31b_consistency(a: i64, b: i64) -> Result<ConsistencyVerdict> {
    let primary = decompose_a31b(a, b)?;
    let hook = decompose_staircase(2, a + 2, b, 2)?;
    let mut decomposed = LabelMultiset::new();
    for s in &primary.summands {
        add_to(&mut decomposed, s.young.clone(), s.mult);
    }
    for s in &hook.summands {
        add_to(&mut decomposed, s.young.clone(), 2 * s.mult);
    }

    let (u, v) = (a / 2 - 1, (b - 1) / 2);
    let core = Partition::staircase(2, 2);

    let mut families = LabelMultiset::new();
    for y in a31b_three_part_family(u, v)? {
        add_to(&mut families, y, 1);
    }
    for (x, y) in pairs_with(u + v + 1, u - v + 1, 2)? {
        add_to(&mut families, core.add_scaled(2, &[x as u32, y as u32])?, 2);
    }
    for y in a31b_twisted_family(u, v)? {
        add_to(&mut families, y, 1);
    }

    let mut weights = LabelMultiset::new();
    let total = u + v + 1;
    for m2 in 0..=total / 2 {
        let mu = Partition::new(vec![(total - m2) as u32, m2 as u32])?;
        let mult = weight_mult_ab2(a, b, &mu)?;
        add_to(&mut weights, core.add_scaled(2, mu.parts())?, mult);
    }
    let p22 = SpecialParams::new(2, 2)?;
    for m2 in 1..=(u + v) / 2 {
        let m1 = u + v - m2;
        let mult = gl2_mult_or_zero(m1 - 1, m2 - 1, u - 1, v - 1, p22)?;
        add_to(
            &mut weights,
            core.add_scaled(2, &[m1 as u32, m2 as u32, 1])?,
            mult,
        );
    }

    Ok(if decomposed == families && decomposed == weights {
        ConsistencyVerdict::Consistent
    } else {
        ConsistencyVerdict::Mismatch {
            decomposed,
            families,
            weights,
        }
    })
}

/// Every valid `(a, b)` with `a ≤ a_max`, `b ≤ b_max`.
pub fn a31b_grid(a_max: i64, b_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 4..=a_max {
        for b in 3..=b_max {
            if a31b_valid(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Renders a multiset as `Y(..) + Y(..)^(2)` in descending label order.
pub fn render_multiset(ms: &LabelMultiset) -> String {
    if ms.is_empty() {
        return "0".into();
    }
    ms.iter()
        .rev()
        .map(|(y, &k)| {
            if k > 1 {
                format!("Y{y}^({k})")
            } else {
                format!("Y{y}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
