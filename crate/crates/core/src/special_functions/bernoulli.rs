//! Even-index Bernoulli numbers in the two normalisations the evaluators need.
//!
//! B_2k / (2k)! = (−1)^{k+1} · 2 ζ(2k) / (2π)^{2k}, which stays well scaled in
//! `f64` far beyond the index where B_2k itself overflows the useful range.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::config::MAX_BERNOULLI_TERMS;

const TABLE_LEN: usize = MAX_BERNOULLI_TERMS + 2;

fn zeta_even(k: usize) -> f64 {
    match k {
        1 => PI.powi(2) / 6.0,
        2 => PI.powi(4) / 90.0,
        3 => PI.powi(6) / 945.0,
        4 => PI.powi(8) / 9450.0,
        _ => {
            let p = -(2 * k as i32);
            // tail beyond 200 is below 200^{1-2k} < 1e-20 for k >= 5
            (1..=200).rev().map(|n| (n as f64).powi(p)).sum()
        }
    }
}

fn table() -> &'static [f64; TABLE_LEN] {
    static TABLE: OnceLock<[f64; TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; TABLE_LEN];
        let two_pi_sq = (2.0 * PI).powi(2);
        let mut denom = 1.0;
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            denom *= two_pi_sq;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * zeta_even(k) / denom;
        }
        out
    })
}

/// B_2k / (2k)!, for 1 ≤ k ≤ MAX_BERNOULLI_TERMS + 1.
pub(crate) fn scaled_bernoulli(k: usize) -> f64 {
    table()[k]
}

/// B_2k / (2k (2k − 1)), the k-th Stirling series coefficient.
pub(crate) fn stirling_coefficient(k: usize) -> f64 {
    // (2k)! / (2k (2k-1)) = (2k-2)!
    let factorial: f64 = (1..=(2 * k - 2)).map(|i| i as f64).product();
    scaled_bernoulli(k) * factorial
}
