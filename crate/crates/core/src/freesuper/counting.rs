//! Witt-type dimension formulas for free Lie (super)algebras.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::scalar::{int, Scalar};
use crate::superdim::Parity;

/// Möbius function.
pub fn mobius(k: u64) -> i64 {
    assert!(k >= 1, "mobius is defined for k >= 1");
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |e| n % e == 0)
}

/// `(sum a_i)! / prod a_i!`
fn multinomial(parts: impl IntoIterator<Item = usize>) -> BigInt {
    let mut total = 0usize;
    let mut out = BigInt::from(1);
    for a in parts {
        for i in 1..=a {
            total += 1;
            out = out * BigInt::from(total) / BigInt::from(i);
        }
    }
    out
}

fn common_divisor(alpha: &[usize]) -> usize {
    alpha.iter().fold(0, |g, &a| g.gcd(&a))
}

/// Dimension of the multidegree-`alpha` component of the free Lie algebra.
pub fn witt(alpha: &[usize]) -> u64 {
    let n: usize = alpha.iter().sum();
    assert!(n > 0, "witt needs a nonzero multidegree");
    let g = common_divisor(alpha);
    let mut sum = BigInt::from(0);
    for e in divisors(g) {
        sum += mobius(e as u64) * multinomial(alpha.iter().map(|a| a / e));
    }
    let q = sum / BigInt::from(n);
    q.to_u64().expect("witt value is a non-negative integer")
}

/// Parity of a multidegree: number of odd letters counted with multiplicity.
pub fn multidegree_parity(alpha: &[usize], parities: &[Parity]) -> Parity {
    Parity::from_bit(alpha.iter().zip(parities).filter(|(_, p)| p.is_odd()).map(|(a, _)| a).sum())
}

/// Dimension of the multidegree-`alpha` component of the free Lie
/// superalgebra: `W(alpha) + W(alpha/2)` when `alpha = 2 gamma` with
/// `gamma` of odd parity (the squares of odd elements), else `W(alpha)`.
pub fn super_witt(alpha: &[usize], parities: &[Parity]) -> u64 {
    let mut value = witt(alpha);
    if alpha.iter().all(|a| a % 2 == 0) {
        let half: Vec<usize> = alpha.iter().map(|a| a / 2).collect();
        if multidegree_parity(&half, parities).is_odd() {
            value += witt(&half);
        }
    }
    value
}

/// Degree-`r` dimensions of the free Lie superalgebra on `m` even and `n`
/// odd generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DegreeDims {
    pub dim: i64,
    pub dim_even: i64,
    pub dim_odd: i64,
    pub sdim: i64,
}

fn integral(q: Scalar) -> i64 {
    assert!(q.is_integer(), "dimension formula produced a non-integer");
    q.to_integer().to_i64().expect("fits i64")
}

fn pow(base: i64, e: usize) -> Scalar {
    Scalar::from_integer(BigInt::from(base).pow(e as u32))
}

pub fn degree_dims(m: usize, n: usize, r: usize) -> DegreeDims {
    assert!(r >= 1);
    let (m, n) = (m as i64, n as i64);
    let mut dim = int(0);
    let mut plus = int(0);
    let mut minus = int(0);
    let mut sdim = int(0);
    for a in divisors(r) {
        let mu = int(mobius(a as u64));
        let sign = if a % 2 == 0 { 1 } else { -1 };
        let full = pow(m - sign * n, r / a);
        let signed = pow(m - n, r / a);
        dim += &mu * &full;
        plus += &mu * (&full + &signed) / int(2);
        minus += &mu * (&full - &signed) / int(2);
        sdim += &mu * &signed;
    }
    let r = int(r as i64);
    DegreeDims {
        dim: integral(dim / &r),
        dim_even: integral(plus / &r),
        dim_odd: integral(minus / &r),
        sdim: integral(sdim / &r),
    }
}

/// Multidegree dimension from the signed necklace formula.
pub fn dim_multidegree(alpha: &[usize], parities: &[Parity]) -> i64 {
    let total: usize = alpha.iter().sum();
    assert!(total > 0);
    let odd: usize = alpha.iter().zip(parities).filter(|(_, p)| p.is_odd()).map(|(a, _)| a).sum();
    let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    let mut sum = BigInt::from(0);
    for a in divisors(common_divisor(alpha)) {
        sum += mobius(a as u64) * sign(odd / a) * multinomial(alpha.iter().map(|x| x / a));
    }
    let q = Scalar::new(sum * sign(odd), BigInt::from(total));
    integral(q)
}

/// All multidegrees of total degree `d` over `k` letters, in decreasing
/// lexicographic order.
pub fn multidegrees(k: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, d: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == k {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            go(k, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    go(k, d, &mut Vec::new(), &mut out);
    out
}
