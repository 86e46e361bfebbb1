#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wq_core::{GaussianRational as G, RootVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero Gaussian integer with parts in `-bound..=bound`.
pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> G {
    loop {
        let v = G::complex(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if v != G::from_int(0) {
            return v;
        }
    }
}

pub fn gaussian(rng: &mut ChaCha8Rng, bound: i64) -> G {
    G::complex(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn typical_roots(rng: &mut ChaCha8Rng, n: usize) -> RootVector {
    loop {
        let r = RootVector::new((0..n).map(|_| nonzero(rng, 4)).collect());
        if r.is_typical() {
            return r;
        }
    }
}

pub fn values(text: &str) -> Vec<G> {
    G::parse_list(text).unwrap()
}
