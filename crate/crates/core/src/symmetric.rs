//! Elementary symmetric functions and power sums, numeric and symbolic.

use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::scalar::GaussianRational;

/// `[σ_0, σ_1, …, σ_n]` of `values`.
pub fn elementary_symmetric_all(values: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut e = vec![GaussianRational::zero(); values.len() + 1];
    e[0] = GaussianRational::one();
    for (count, v) in values.iter().enumerate() {
        for a in (1..=count + 1).rev() {
            let t = &e[a - 1] * v;
            e[a] += &t;
        }
    }
    e
}

/// `σ_a(values)`; zero when `a` exceeds the number of values.
pub fn elementary_symmetric(a: usize, values: &[GaussianRational]) -> GaussianRational {
    if a > values.len() {
        return GaussianRational::zero();
    }
    elementary_symmetric_all(values).swap_remove(a)
}

/// `σ_a(x_1, …, x_n)` as a polynomial.
pub fn elementary_symmetric_poly(n: usize, a: usize) -> MultiPoly {
    let mut e: Vec<MultiPoly> = (0..=a).map(|_| MultiPoly::zero(n)).collect();
    e[0] = MultiPoly::one(n);
    for i in 0..n {
        let x = MultiPoly::var(n, i);
        for b in (1..=a.min(i + 1)).rev() {
            let t = &e[b - 1] * &x;
            e[b].add_assign_ref(&t);
        }
    }
    e.swap_remove(a)
}

/// `Σ v_i^k`.
pub fn power_sum(k: u32, values: &[GaussianRational]) -> GaussianRational {
    values.iter().map(|v| v.pow(k)).sum()
}

/// `p_k = Σ v_i^{2k+1}`.
pub fn odd_power_sum(k: u32, values: &[GaussianRational]) -> GaussianRational {
    power_sum(2 * k + 1, values)
}

/// `Σ x_i^k` as a polynomial.
pub fn power_sum_poly(n: usize, k: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for i in 0..n {
        out.add_assign_ref(&MultiPoly::var(n, i).pow(k));
    }
    out
}

/// Power sums `p_1..=p_kmax` computed from `σ_1..σ_n` by Newton's identities
/// `p_k = Σ_{i=1}^{k-1} (-1)^{i-1} σ_i p_{k-i} + (-1)^{k-1} k σ_k`.
pub fn power_sums_from_elementary(sigma: &[GaussianRational], kmax: usize) -> Vec<GaussianRational> {
    let e = |i: usize| sigma.get(i).cloned().unwrap_or_else(GaussianRational::zero);
    let mut p: Vec<GaussianRational> = vec![GaussianRational::zero()];
    for k in 1..=kmax {
        let mut acc = GaussianRational::zero();
        for i in 1..k {
            let t = &e(i) * &p[k - i];
            if i % 2 == 1 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        let last = &e(k) * &GaussianRational::from_int(k as i64);
        if k % 2 == 1 {
            acc += &last;
        } else {
            acc -= &last;
        }
        p.push(acc);
    }
    p.remove(0);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<GaussianRational> {
        v.iter().map(|&x| GaussianRational::from_int(x)).collect()
    }

    #[test]
    fn elementary_values() {
        let v = ints(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(2, &v), GaussianRational::from_int(11));
        assert_eq!(elementary_symmetric(0, &v), GaussianRational::one());
        assert_eq!(elementary_symmetric(0, &[]), GaussianRational::one());
        assert_eq!(elementary_symmetric(4, &v), GaussianRational::zero());
        assert_eq!(elementary_symmetric(3, &v), GaussianRational::from_int(6));
    }

    #[test]
    fn odd_power_sums() {
        let v = ints(&[1, 2]);
        assert_eq!(odd_power_sum(0, &v), GaussianRational::from_int(3));
        assert_eq!(odd_power_sum(1, &v), GaussianRational::from_int(9));
        let a: GaussianRational = "3/2-i".parse().unwrap();
        for k in 0..6 {
            assert!(odd_power_sum(k, &[a.clone(), -a.clone()]).is_zero());
        }
    }

    #[test]
    fn symbolic_matches_numeric() {
        let v = ints(&[2, -3, 5, 7]);
        for a in 0..=5 {
            let p = elementary_symmetric_poly(4, a);
            assert_eq!(p.eval(&v).unwrap(), elementary_symmetric(a, &v));
        }
    }
}
