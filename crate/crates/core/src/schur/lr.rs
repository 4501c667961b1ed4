//! Littlewood–Richardson coefficients by direct tableau enumeration.
//!
//! `s(λ)·s(μ)` is the sum over skew shapes `ν/λ` filled with `μ_1` ones,
//! `μ_2` twos, … such that the filling is semistandard and its reverse
//! reading word is a lattice word. Letters are placed one value at a time,
//! each as a horizontal strip over the shape built so far, which makes the
//! filling semistandard automatically. The lattice condition for letters
//! `k` and `k+1` reduces to: for every row `r`, the number of `k+1`s in
//! rows `≤ r` is at most the number of `k`s in rows `< r`.

use std::collections::HashMap;

use crate::partition::Partition;

struct Search<'a> {
    content: &'a [u32],
    shape: Vec<u32>,
    /// counts[letter][row]
    counts: Vec<Vec<u32>>,
    out: HashMap<Partition, u64>,
}

impl Search<'_> {
    fn place_letter(&mut self, letter: usize) {
        if letter == self.content.len() {
            let parts: Vec<u32> = self.shape.iter().copied().take_while(|&p| p > 0).collect();
            *self
                .out
                .entry(Partition::from_canonical(parts))
                .or_insert(0) += 1;
            return;
        }
        let base = self.shape.clone();
        self.fill_row(letter, &base, 0, self.content[letter], 0, 0);
    }

    /// `placed` counts this letter in rows above `row`; `above_prev` counts
    /// the previous letter in rows above `row`.
    fn fill_row(
        &mut self,
        letter: usize,
        base: &[u32],
        row: usize,
        remaining: u32,
        placed: u32,
        above_prev: u32,
    ) {
        if remaining == 0 {
            self.place_letter(letter + 1);
            return;
        }
        if row >= self.shape.len() {
            return;
        }
        let strip_cap = if row == 0 {
            remaining
        } else {
            base[row - 1] - base[row]
        };
        if row > 0 && base[row - 1] == 0 {
            return;
        }
        let lattice_cap = if letter == 0 {
            remaining
        } else {
            above_prev - placed
        };
        let max = strip_cap.min(lattice_cap).min(remaining);
        let prev_here = if letter == 0 {
            0
        } else {
            self.counts[letter - 1][row]
        };
        for x in (0..=max).rev() {
            self.shape[row] += x;
            self.counts[letter][row] = x;
            self.fill_row(
                letter,
                base,
                row + 1,
                remaining - x,
                placed + x,
                above_prev + prev_here,
            );
            self.shape[row] -= x;
            self.counts[letter][row] = 0;
        }
    }
}

/// All `(ν, c^ν_{λμ})` with nonzero coefficient.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> HashMap<Partition, u64> {
    // c^ν_{λμ} = c^ν_{μλ}; the smaller content gives the shallower search.
    let (outer, content) = if mu.degree() <= lambda.degree() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let rows = outer.len() + content.len();
    let mut shape = outer.parts().to_vec();
    shape.resize(rows, 0);
    let mut search = Search {
        content: content.parts(),
        shape,
        counts: vec![vec![0; rows]; content.len()],
        out: HashMap::new(),
    };
    search.place_letter(0);
    search.out
}
