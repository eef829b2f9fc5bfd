//! Small integer helpers for group orders.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Smallest prime dividing `n`, or `None` for `n <= 1`.
pub fn smallest_prime_factor(n: usize) -> Option<usize> {
    if n <= 1 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

pub fn is_prime(n: usize) -> bool {
    smallest_prime_factor(n) == Some(n)
}

/// If `n = p^k` with `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    let p = smallest_prime_factor(n)?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient by trial division.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}
