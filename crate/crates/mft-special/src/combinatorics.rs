use num_bigint::BigUint;
use num_traits::One;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// n!! with 0!! = 1.
pub fn double_factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut m = n;
    while m > 1 {
        acc *= m;
        m -= 2;
    }
    acc
}

/// (2i+1)!!
pub fn odd_double_factorial(i: u64) -> BigUint {
    double_factorial(2 * i + 1)
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}
