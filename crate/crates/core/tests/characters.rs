use specht_core::character::{
    gl2_weight_mult, gl3_simple_character, sl2_simple_character, staircase_weight_mult,
    staircase_weight_mult_closed_form, weight_mult_ab2,
};
use specht_core::special::{is_p_special, special_two_part};
use specht_core::{Partition, SpecialParams, WeightCharacter};

fn params(l: u64, p: u64) -> SpecialParams {
    SpecialParams::new(l, p).unwrap()
}

#[test]
fn rank_two_multiplicity_matches_steinberg_character() {
    for (l, p) in [(2, 0), (2, 2), (2, 3), (3, 2), (3, 0)] {
        let params = params(l, p);
        for c in 0..=60i64 {
            for d in 0..=c {
                let ch = sl2_simple_character(c - d, params).unwrap();
                for a in 0..=c + d {
                    let b = c + d - a;
                    assert_eq!(
                        gl2_weight_mult(c, d, a, b, params).unwrap(),
                        ch.mult(&[a - b]),
                        "L({c},{d}) at ({a},{b}), l={l} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn staircase_reduction_matches_closed_form() {
    for (l, p) in [(2, 0), (2, 2), (2, 3), (3, 0), (3, 2), (3, 3)] {
        let params = params(l, p);
        let l = l as i64;
        for m in 2..=5i64 {
            for a in m * (l - 1)..=40 {
                for b in (m - 1) * (l - 1)..=40 {
                    let lu = a - m * (l - 1);
                    let lv = b - (m - 1) * (l - 1);
                    if lu % l != 0 || lv % l != 0 {
                        continue;
                    }
                    let total = (lu + lv) / l;
                    for d in 0..=total / 2 {
                        let mu = Partition::new(vec![(total - d) as u32, d as u32]).unwrap();
                        let closed = staircase_weight_mult_closed_form(m, a, b, &mu, params)
                            .unwrap()
                            .expect("on the congruence class");
                        assert_eq!(
                            staircase_weight_mult(m, a, b, &mu, params).unwrap(),
                            closed,
                            "m={m} a={a} b={b} mu={mu} l={l} p={p}"
                        );
                    }
                }
            }
        }
    }
}

/// `σ_m + 2μ` padded to three entries.
fn gl3_label(m: u32, mu: &Partition) -> Partition {
    Partition::staircase(m, 2)
        .add_scaled(2, mu.parts())
        .unwrap()
}

#[test]
fn staircase_matches_rank_three_oracle() {
    let p22 = params(2, 2);
    // m = 2: weight (a, b, 0); m = 3: weight (a, b, 1).
    for m in 2..=3i64 {
        for a in m..=24 {
            for b in m - 1..=23 {
                let total = a + b - (m * (m + 1) / 2);
                if total < 0 || total % 2 != 0 {
                    continue;
                }
                let half = total / 2;
                for d in 0..=half / 2 {
                    let mu = Partition::new(vec![(half - d) as u32, d as u32]).unwrap();
                    let label = gl3_label(m as u32, &mu);
                    if label.len() > 3 {
                        continue;
                    }
                    let ch = gl3_simple_character(&label, 2).unwrap();
                    let weight = [a, b, m - 2];
                    assert_eq!(
                        staircase_weight_mult(m, a, b, &mu, p22).unwrap(),
                        ch.mult(&weight),
                        "m={m} a={a} b={b} mu={mu}"
                    );
                }
            }
        }
    }
}

fn ab2_grid() -> impl Iterator<Item = (i64, i64)> {
    (4..=30i64)
        .filter(|a| a % 2 == 0 && a % 4 != 0)
        .flat_map(|a| (3..=29i64).step_by(2).map(move |b| (a, b)))
}

#[test]
fn ab2_multiplicity_matches_rank_three_oracle() {
    let sigma = Partition::staircase(2, 2);
    let restricted = gl3_simple_character(&sigma, 2).unwrap();
    for (a, b) in ab2_grid() {
        let total = (a + b - 1) / 2;
        for d in 0..=total / 2 {
            let mu = Partition::new(vec![(total - d) as u32, d as u32]).unwrap();
            let got = weight_mult_ab2(a, b, &mu).unwrap();

            let direct = gl3_simple_character(&gl3_label(2, &mu), 2).unwrap();
            assert_eq!(got, direct.mult(&[a, b, 2]), "a={a} b={b} mu={mu}");

            // Same value through L(σ₂) ⊗ L(2μ): only the weights (2,1,0)
            // and (0,1,2) of L(σ₂) have the right parity.
            let twisted = gl3_simple_character(&mu, 2).unwrap().frobenius(2);
            let via_tensor: u64 = restricted
                .weights()
                .map(|(w, k)| k * twisted.mult(&[a - w[0], b - w[1], 2 - w[2]]))
                .sum();
            assert_eq!(got, via_tensor, "a={a} b={b} mu={mu}");
            assert_eq!(
                got,
                twisted.mult(&[a - 2, b - 1, 2]) + twisted.mult(&[a, b - 1, 0]),
                "a={a} b={b} mu={mu}"
            );
        }
    }
}

#[test]
fn ab2_splits_into_family_indicators() {
    for (a, b) in ab2_grid() {
        let (u, v) = (a / 2 - 1, (b - 1) / 2);
        let nu_family = special_two_part((u + 1) as u64, v as u64, 2).unwrap();
        let total = u + v + 1;
        for d in 0..=total / 2 {
            let mu = Partition::new(vec![(total - d) as u32, d as u32]).unwrap();
            let in_nu = nu_family.contains(&mu);
            // ρ = σ₂ + 2ρ̄ with (2(ρ̄₁-ρ̄₂), u-v-2) 2-special.
            let in_rho = {
                let (x, y) = (i64::from(mu.part(0)), i64::from(mu.part(1)));
                x >= 2
                    && y >= 1
                    && (x - 2) % 2 == 0
                    && (y - 1) % 2 == 0
                    && is_p_special(x - 2 - (y - 1), u - v - 2, 2).unwrap()
            };
            assert_eq!(
                weight_mult_ab2(a, b, &mu).unwrap(),
                2 * u64::from(in_nu) + u64::from(in_rho),
                "a={a} b={b} mu={mu}"
            );
        }
    }
}

#[test]
fn three_part_branch_matches_rank_three_oracle() {
    let p22 = params(2, 2);
    for (a, b) in ab2_grid() {
        let (u, v) = (a / 2 - 1, (b - 1) / 2);
        for m2 in 1..=(u + v) / 2 {
            let m1 = u + v - m2;
            let mu = Partition::new(vec![m1 as u32, m2 as u32, 1]).unwrap();
            let ch = gl3_simple_character(&gl3_label(2, &mu), 2).unwrap();
            let special = u64::from(is_p_special(m1 - m2, u - v, 2).unwrap());
            assert_eq!(ch.mult(&[a, b, 2]), special, "a={a} b={b} mu={mu}");
            let reduced = if u >= 1 && v >= 1 {
                gl2_weight_mult(m1 - 1, m2 - 1, u - 1, v - 1, p22).unwrap()
            } else {
                0
            };
            assert_eq!(reduced, special, "a={a} b={b} mu={mu}");
        }
    }
}

#[test]
fn characters_are_symmetric_and_dominated() {
    for p in [0, 2] {
        for n in 0..=10 {
            for lambda in specht_core::partition::partitions_of(n) {
                if lambda.len() > 3 {
                    continue;
                }
                let ch = match gl3_simple_character(&lambda, p) {
                    Ok(ch) => ch,
                    Err(e) => panic!("{lambda} p={p}: {e}"),
                };
                let schur = WeightCharacter::schur_polynomial(&lambda, 3);
                assert_eq!(
                    ch.mult(&[
                        lambda.part(0) as i64,
                        lambda.part(1) as i64,
                        lambda.part(2) as i64
                    ]),
                    1
                );
                for (w, k) in ch.weights() {
                    assert!(k <= schur.mult(w), "{lambda} p={p} {w:?}");
                    for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
                        let swapped = [w[perm[0]], w[perm[1]], w[perm[2]]];
                        assert_eq!(ch.mult(&swapped), k);
                    }
                    let mut sorted: Vec<u32> = w.iter().map(|&x| x as u32).collect();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    assert!(Partition::new(sorted).unwrap().dominated_by(&lambda));
                }
            }
        }
    }
}
