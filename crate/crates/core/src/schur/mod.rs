//! The ring of symmetric functions on the Schur basis.
//!
//! A [`SchurSum`] is a finite integer combination of Schur functions `s(λ)`
//! with no bound on the number of variables. Multiplication by `s(a)` and by
//! `s(1^r)` uses the Pieri rules directly; general products go through the
//! Littlewood–Richardson enumeration in [`lr`], which also serves as an
//! independent check on the Pieri code.

mod coeff;
pub mod lr;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

pub use coeff::Coeff;

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurSum {
    terms: HashMap<Partition, Coeff>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: Coeff,
}

impl SchurSum {
    pub fn zero() -> Self {
        SchurSum::default()
    }

    /// The unit `s(())`.
    pub fn one() -> Self {
        SchurSum::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut terms = HashMap::with_capacity(1);
        terms.insert(lambda, Coeff::ONE);
        SchurSum { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Coeff)>) -> Self {
        let mut sum = SchurSum::zero();
        for (lambda, c) in terms {
            sum.add_term(lambda, &c);
        }
        sum
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// Coefficient of `s(λ)`; zero when absent.
    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or(Coeff::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in descending lexicographic order of the index.
    pub fn terms(&self) -> Vec<(&Partition, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Coeff) -> SchurSum {
        if c.is_zero() {
            return SchurSum::zero();
        }
        SchurSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SchurSum) -> SchurSum {
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SchurSum) -> SchurSum {
        self.add(&other.scale(&Coeff::Small(-1)))
    }

    /// Multiplication by `s(1^r)`: each `s(λ)` becomes the sum of `s(μ)`
    /// over all `μ` obtained by adding one box in each of `r` distinct rows.
    pub fn pieri_column(&self, r: usize) -> SchurSum {
        if r == 0 {
            return self.clone();
        }
        self.expand(|lambda, out| vertical_strips(lambda, r, out))
    }

    /// Multiplication by `s(a)`: each `s(λ)` becomes the sum of `s(μ)` over
    /// horizontal `a`-strips `μ/λ`.
    pub fn pieri_row(&self, a: u32) -> SchurSum {
        if a == 0 {
            return self.clone();
        }
        self.expand(|lambda, out| horizontal_strips(lambda, a, out))
    }

    fn expand(&self, strips: impl Fn(&Partition, &mut Vec<Partition>)) -> SchurSum {
        let mut out = SchurSum::zero();
        let mut buf = Vec::new();
        for (lambda, c) in &self.terms {
            buf.clear();
            strips(lambda, &mut buf);
            for mu in buf.drain(..) {
                out.add_term(mu, c);
            }
        }
        out
    }

    /// Full product through Littlewood–Richardson coefficients.
    pub fn lr_multiply(&self, other: &SchurSum) -> SchurSum {
        let mut out = SchurSum::zero();
        for (lambda, a) in &self.terms {
            for (mu, b) in &other.terms {
                let ab = a * b;
                for (nu, c) in lr::lr_product(lambda, mu) {
                    out.add_term(nu, &(&ab * &Coeff::from(c)));
                }
            }
        }
        out
    }

    /// Keeps exactly the terms whose index is `m`-adapted.
    pub fn truncate_adapted(&self, m: u32) -> SchurSum {
        self.filter(|lambda| lambda.is_adapted(m))
    }

    /// Keeps exactly the terms whose index has `l`-core `gamma`.
    pub fn truncate_core(&self, gamma: &Partition, l: u32) -> Result<SchurSum> {
        if l == 0 {
            return Err(Error::Domain("l must be positive".into()));
        }
        if !gamma.is_core(l) {
            return Err(Error::Precondition(format!("{gamma} is not an {l}-core")));
        }
        Ok(self.filter(|lambda| lambda.core(l) == *gamma))
    }

    pub fn filter(&self, keep: impl Fn(&Partition) -> bool) -> SchurSum {
        SchurSum {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `Π s(rows_i) · Π s(1^{cols_j})`, rows left to right, then columns.
    pub fn product_character(rows: &Composition, cols: &Composition) -> SchurSum {
        let mut g = SchurSum::one();
        for &a in rows.parts() {
            g = g.pieri_row(a);
        }
        for &r in cols.parts() {
            g = g.pieri_column(r as usize);
        }
        g
    }

    /// The common degree of all terms, if the sum is homogeneous and nonzero.
    pub fn degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(Partition::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// JSON array of `{"partition": [...], "coeff": n}`, descending
    /// lexicographic order.
    pub fn to_json(&self) -> String {
        let terms: Vec<TermJson> = self
            .terms()
            .into_iter()
            .map(|(lambda, c)| TermJson {
                partition: lambda.clone(),
                coeff: c.clone(),
            })
            .collect();
        serde_json::to_string(&terms).expect("serializing plain data")
    }

    pub fn from_json(text: &str) -> Result<SchurSum> {
        let terms: Vec<TermJson> =
            serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        Ok(SchurSum::from_terms(
            terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

impl fmt::Display for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*s{lambda}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every `μ ⊇ λ` with `μ/λ` a vertical `r`-strip.
fn vertical_strips(lambda: &Partition, r: usize, out: &mut Vec<Partition>) {
    fn go(
        lambda: &[u32],
        i: usize,
        remaining: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda[i..]);
            out.push(Partition::from_canonical(parts));
            return;
        }
        if i >= lambda.len() {
            // Remaining boxes start new rows of length one, stacked below.
            let mut parts = cur.clone();
            parts.extend(std::iter::repeat_n(1, remaining));
            out.push(Partition::from_canonical(parts));
            return;
        }
        let grown = lambda[i] + 1;
        if i == 0 || grown <= cur[i - 1] {
            cur.push(grown);
            go(lambda, i + 1, remaining - 1, cur, out);
            cur.pop();
        }
        cur.push(lambda[i]);
        go(lambda, i + 1, remaining, cur, out);
        cur.pop();
    }
    let mut cur = Vec::with_capacity(lambda.len() + r);
    go(lambda.parts(), 0, r, &mut cur, out);
}

/// Every `μ ⊇ λ` with `μ/λ` a horizontal `a`-strip.
fn horizontal_strips(lambda: &Partition, a: u32, out: &mut Vec<Partition>) {
    // Row i > 0 may grow up to λ_{i-1}; row 0 takes whatever is left over.
    fn go(lambda: &[u32], i: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > lambda.len() {
            let mut parts = cur.clone();
            parts[0] += remaining;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::from_canonical(parts));
            return;
        }
        let old = lambda.get(i).copied().unwrap_or(0);
        let cap = lambda[i - 1] - old;
        for x in 0..=cap.min(remaining) {
            cur.push(old + x);
            go(lambda, i + 1, remaining - x, cur, out);
            cur.pop();
        }
    }
    if lambda.is_empty() {
        out.push(Partition::row(a));
        return;
    }
    let mut cur = Vec::with_capacity(lambda.len() + 1);
    cur.push(lambda.part(0));
    go(lambda.parts(), 1, a, &mut cur, out);
}
