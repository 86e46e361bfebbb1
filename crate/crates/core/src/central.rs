//! Cores and central characters of the modules `V(s)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::scalar::GaussianRational;
use crate::series::RationalSeries;
use crate::symmetric::{elementary_symmetric_all, odd_power_sum};

type G = GaussianRational;

/// What is left of `s` after deleting zeros and pairs summing to zero,
/// sorted by `(re, im)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoreData(Vec<G>);

impl CoreData {
    pub fn values(&self) -> &[G] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Removes zeros, then repeatedly removes the first pair `(s_i, s_j)`,
/// `i < j`, with `s_i + s_j = 0`.
pub fn core(s: &[G]) -> CoreData {
    let mut rest: Vec<G> = s.iter().filter(|v| !v.is_zero()).cloned().collect();
    'scan: loop {
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                if (&rest[i] + &rest[j]).is_zero() {
                    rest.remove(j);
                    rest.remove(i);
                    continue 'scan;
                }
            }
        }
        break;
    }
    rest.sort();
    CoreData(rest)
}

/// `z_0(s), z_2(s), …, z_{2K}(s)` from
/// `z_{2k} = -Σ_{i=1}^k σ_{2i} z_{2k-2i} + σ_{2k+1}`.
pub fn z_values(s: &[G], k_max: usize) -> Vec<G> {
    let sigma = elementary_symmetric_all(s);
    let e = |j: usize| sigma.get(j).cloned().unwrap_or_else(G::zero);
    let mut z: Vec<G> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut acc = e(2 * k + 1);
        for i in 1..=k {
            acc -= &(&e(2 * i) * &z[k - i]);
        }
        z.push(acc);
    }
    z
}

/// `χ_s(u) = Σ σ_{2i+1}(s) u^{-2i-1} / (1 + Σ σ_{2i}(s) u^{-2i})`.
pub fn char_series(s: &[G]) -> RationalSeries {
    let sigma = elementary_symmetric_all(s);
    let numerator = sigma.iter().skip(1).step_by(2).cloned().collect();
    let denominator = sigma.iter().step_by(2).cloned().collect();
    RationalSeries::new(numerator, denominator).expect("sigma_0 = 1")
}

/// The three equivalent tests for `χ_s = χ_{s'}`, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralComparison {
    pub core: bool,
    /// Odd power sums `Σ s_i^{2k+1}` agree for `k ≤ 2·max(n, n')`.
    pub power_sums: bool,
    pub series: bool,
}

impl CentralComparison {
    pub fn equal(&self) -> bool {
        self.core
    }

    pub fn consistent(&self) -> bool {
        self.core == self.power_sums && self.core == self.series
    }
}

pub fn compare_central(s: &[G], t: &[G]) -> CentralComparison {
    let kmax = 2 * s.len().max(t.len());
    let power_sums = (0..=kmax as u32).all(|k| odd_power_sum(k, s) == odd_power_sum(k, t));
    CentralComparison {
        core: core(s) == core(t),
        power_sums,
        series: char_series(s) == char_series(t),
    }
}

/// `χ_s = χ_{s'}`, decided by cores and cross-checked; panics if the three
/// tests disagree, which would contradict the core criterion.
pub fn central_char_equal(s: &[G], t: &[G]) -> bool {
    let c = compare_central(s, t);
    assert!(c.consistent(), "central character tests disagree: {c:?}");
    c.equal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<G> {
        xs.iter().map(|&x| G::from_int(x)).collect()
    }

    #[test]
    fn cores() {
        assert_eq!(core(&v(&[1, 0, 3, -1, -1])).values(), v(&[-1, 3]).as_slice());
        assert!(core(&v(&[0, 0, 0])).is_empty());
        assert_eq!(core(&v(&[2, -2, 5])).values(), v(&[5]).as_slice());
    }

    #[test]
    fn values_and_series() {
        assert_eq!(z_values(&v(&[1, 1]), 3), v(&[2, -2, 2, -2]));
        assert_eq!(char_series(&v(&[1, 1])).expand(3), v(&[2, -2, 2, -2]));
        assert!(char_series(&v(&[4, -4])).is_zero());
        assert_eq!(char_series(&v(&[1, 4])).to_string(), "(5*u^-1) / (1 + 4*u^-2)");
        assert!(central_char_equal(&v(&[1, 0, 3, -1, -1]), &v(&[3, -1])));
        assert!(central_char_equal(&v(&[2, 7]), &v(&[7, 2, 3, -3])));
        assert!(!central_char_equal(&v(&[1]), &v(&[2])));
    }
}
