//! Test-only helpers: seeded CFN generators and closed-form reference
//! formulas written independently of the library's distance code.

#![allow(dead_code)]

use cfkit::Cfn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_cfn(rng: &mut impl Rng) -> Cfn {
    let u: f64 = rng.gen();
    let v: f64 = rng.gen();
    let lo = (u + v - 1.0).max(0.0);
    let hi = u.min(v);
    let j = lo + rng.gen::<f64>() * (hi - lo);
    Cfn::new(u, v, j).expect("sampled inside the joint bounds")
}

/// `(u*, v*, j, h)` straight from the definitions.
pub fn masses(u: f64, v: f64, j: f64) -> [f64; 4] {
    [u - j, v - j, j, 1.0 - u - v + j]
}

pub fn lp(terms: &[f64], p: u32) -> f64 {
    terms
        .iter()
        .map(|t| t.abs().powf(f64::from(p)))
        .sum::<f64>()
        .powf(1.0 / f64::from(p))
}

/// Combined distance between `(u,v,j)` triples, from scratch.
pub fn reference_cf_c(a: (f64, f64, f64), b: (f64, f64, f64), p: u32, lambda: f64) -> f64 {
    let ma = masses(a.0, a.1, a.2);
    let mb = masses(b.0, b.1, b.2);
    let diff: Vec<f64> = ma.iter().zip(&mb).map(|(x, y)| x - y).collect();
    let d_m = lp(&diff, p);
    let d_h = diff[0].abs().max(diff[1].abs());
    lambda * d_m + (1.0 - lambda) * d_h
}

/// Score of `⟨u,v,j⟩` from scratch.
pub fn reference_score(u: f64, v: f64, j: f64, p: u32, lambda: f64) -> f64 {
    let worst = reference_cf_c((u, v, j), (0.0, 1.0, 0.0), p, lambda);
    let best = reference_cf_c((u, v, j), (1.0, 0.0, 0.0), p, lambda);
    worst / (worst + best)
}

/// Exhaustive scan of `(target − s(j))²` on `n` evenly spaced points.
pub fn brute_force_min(u: f64, v: f64, target: f64, p: u32, lambda: f64, n: usize) -> (f64, f64) {
    let lo = (u + v - 1.0).max(0.0);
    let hi = u.min(v);
    let mut best = (lo, f64::INFINITY);
    for k in 0..n {
        let j = if n == 1 {
            lo
        } else {
            lo + (hi - lo) * k as f64 / (n - 1) as f64
        };
        let j = j.min(hi);
        let s = reference_score(u, v, j, p, lambda);
        let obj = (target - s) * (target - s);
        if obj < best.1 {
            best = (j, obj);
        }
    }
    best
}
