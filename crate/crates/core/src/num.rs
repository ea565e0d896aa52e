//! Integer helpers at desk scale: trial-division primality and factoring.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, multiplicity)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists. Every value is its own inverse mod 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicity of the prime `r` in `n` (`n > 0`).
pub fn valuation(mut n: u64, r: u64) -> u32 {
    let mut k = 0;
    while n % r == 0 {
        n /= r;
        k += 1;
    }
    k
}

/// `Some(h)` when `n == base^h`.
pub fn exact_log(n: u64, base: u64) -> Option<u32> {
    if n == 0 || base < 2 {
        return None;
    }
    let (mut v, mut h) = (1u64, 0u32);
    while v < n {
        v = v.checked_mul(base)?;
        h += 1;
    }
    (v == n).then_some(h)
}

/// Binomial coefficients of `n` reduced mod the prime `p`, via Lucas' theorem.
pub fn binomial_row_mod(n: u64, p: u64) -> Vec<u64> {
    // Row of C(n, k) mod p for k in 0..=n.
    let small_rows: Vec<Vec<u64>> = {
        let mut rows = vec![vec![1u64]];
        for r in 1..p.min(n + 1) as usize {
            let prev = &rows[r - 1];
            let mut row = vec![1u64; r + 1];
            for k in 1..r {
                row[k] = (prev[k - 1] + prev[k]) % p;
            }
            rows.push(row);
        }
        rows
    };
    (0..=n)
        .map(|k| {
            let (mut nn, mut kk, mut acc) = (n, k, 1u64);
            while kk > 0 || nn > 0 {
                let (nd, kd) = ((nn % p) as usize, (kk % p) as usize);
                if kd > nd {
                    return 0;
                }
                acc = acc * small_rows[nd][kd] % p;
                nn /= p;
                kk /= p;
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(7) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(49));
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(7, 6), Some(1));
        assert_eq!(mod_inverse(13, 12), Some(1));
        assert_eq!(mod_inverse(5, 8), Some(5));
        assert_eq!(mod_inverse(2, 6), None);
        assert_eq!(mod_inverse(9, 1), Some(0));
    }

    #[test]
    fn logs_and_valuations() {
        assert_eq!(exact_log(49, 7), Some(2));
        assert_eq!(exact_log(1, 7), Some(0));
        assert_eq!(exact_log(21, 7), None);
        assert_eq!(valuation(147, 7), 2);
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..60u64 {
                let row = binomial_row_mod(n, p);
                let mut exact = vec![1u128];
                for r in 1..=n {
                    let mut next = vec![1u128; r as usize + 1];
                    for k in 1..r as usize {
                        next[k] = exact[k - 1] + exact[k];
                    }
                    exact = next;
                }
                let want: Vec<u64> = exact.iter().map(|c| (c % p as u128) as u64).collect();
                assert_eq!(row, want, "n={n} p={p}");
            }
        }
    }
}
