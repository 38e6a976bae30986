//! Small finite fields GF(q) for q ≤ 16.
//!
//! Elements are encoded as integers in `0..q`, read as base-`p` digit vectors
//! of polynomial coefficients. Multiplication goes through precomputed
//! log/antilog tables over a primitive element, which is all the machinery the
//! geometry constructors need.

use thiserror::Error;

/// Largest field order the table builder supports.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} exceeds supported maximum {MAX_ORDER}")]
    TooLarge(usize),
}

/// Decompose `n` as p^k for a prime p, if possible.
pub fn prime_power_decompose(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

pub fn is_prime_power(n: usize) -> bool {
    prime_power_decompose(n).is_some()
}

/// The field GF(q) with add table and log/antilog multiplication tables.
#[derive(Debug, Clone)]
pub struct Gf {
    q: usize,
    add: Vec<u8>,
    /// log[a] for a in 1..q, as exponent of the primitive element.
    log: Vec<usize>,
    /// exp[i] for i in 0..q-1.
    exp: Vec<usize>,
}

impl Gf {
    pub fn new(q: usize) -> Result<Gf, GfError> {
        let (p, k) = prime_power_decompose(q).ok_or(GfError::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(GfError::TooLarge(q));
        }

        let modulus = if k == 1 { 0 } else { find_irreducible(p, k) };
        let mut add = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = poly_add(a, b, p) as u8;
            }
        }

        // Raw polynomial multiplication used only while building the tables.
        let raw_mul = |a: usize, b: usize| poly_mul_mod(a, b, p, k, modulus);

        let generator = (2..q)
            .find(|&g| {
                let mut seen = vec![false; q];
                let mut x = 1;
                let mut count = 0;
                loop {
                    if seen[x] {
                        break;
                    }
                    seen[x] = true;
                    count += 1;
                    x = raw_mul(x, g);
                }
                count == q - 1
            })
            .unwrap_or(1); // q = 2: the only nonzero element is 1

        let mut log = vec![0usize; q];
        let mut exp = vec![0usize; q - 1];
        let mut x = 1;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x;
            log[x] = i;
            x = raw_mul(x, generator);
        }

        Ok(Gf { q, add, log, exp })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.q
    }
}

/// Digit-wise sum of base-p encodings.
fn poly_add(a: usize, b: usize, p: usize) -> usize {
    let mut a = a;
    let mut b = b;
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a + b) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Polynomial product reduced mod the irreducible `modulus` (encoded base p,
/// degree k, leading coefficient implicit 1).
fn poly_mul_mod(a: usize, b: usize, p: usize, k: u32, modulus: usize) -> usize {
    if k == 1 {
        return a * b % p;
    }
    let digits = |mut x: usize| {
        let mut d = Vec::new();
        while x > 0 {
            d.push(x % p);
            x /= p;
        }
        d
    };
    let da = digits(a);
    let db = digits(b);
    let mut prod = vec![0usize; da.len() + db.len()];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce by x^k = -modulus (monic), highest degree first.
    let dm = {
        let mut d = digits(modulus);
        d.resize(k as usize, 0);
        d
    };
    for deg in (k as usize..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in dm.iter().enumerate() {
            let idx = deg - k as usize + i;
            prod[idx] = (prod[idx] + c * (p - m) % p) % p;
        }
    }
    prod.iter()
        .take(k as usize)
        .rev()
        .fold(0, |acc, &d| acc * p + d)
}

/// Find a monic irreducible polynomial of degree k over GF(p), returned as the
/// base-p encoding of its low k coefficients (x^k coefficient implicit).
fn find_irreducible(p: usize, k: u32) -> usize {
    let q = p.pow(k);
    'candidate: for m in 1..q {
        // Candidate f(x) = x^k + (digits of m). Must have nonzero constant term.
        if m % p == 0 {
            continue;
        }
        // Root test over GF(p) kills all reducibles for k <= 3.
        for x in 0..p {
            let mut value = 1; // leading x^k term
            let mut mm = m;
            let mut xp = 1;
            let mut _deg = 0;
            let mut acc = 0;
            while mm > 0 {
                acc = (acc + (mm % p) * xp) % p;
                mm /= p;
                xp = xp * x % p;
                _deg += 1;
            }
            let mut lead = 1;
            for _ in 0..k {
                lead = lead * x % p;
            }
            value = (acc + lead) % p;
            if value == 0 {
                continue 'candidate;
            }
        }
        if k >= 4 {
            // Also exclude products of two irreducible quadratics (p=2, k=4 case):
            // check that x^(p^2) != x mod f has no common factor story by testing
            // divisibility against every monic quadratic directly.
            let mut divisible = false;
            for b in 0..p {
                for c in 0..p {
                    if poly_divides(p, k, m, &[c, b]) {
                        divisible = true;
                    }
                }
            }
            if divisible {
                continue 'candidate;
            }
        }
        return m;
    }
    unreachable!("an irreducible polynomial of degree {k} over GF({p}) exists")
}

/// Does the monic quadratic x^2 + d[1] x + d[0] divide x^k + m (both over GF(p))?
fn poly_divides(p: usize, k: u32, m: usize, d: &[usize]) -> bool {
    // Long division of x^k + digits(m) by x^2 + d[1] x + d[0].
    let mut coeffs = vec![0usize; k as usize + 1];
    let mut mm = m;
    let mut i = 0;
    while mm > 0 {
        coeffs[i] = mm % p;
        mm /= p;
        i += 1;
    }
    coeffs[k as usize] = 1;
    for deg in (2..=k as usize).rev() {
        let c = coeffs[deg];
        if c == 0 {
            continue;
        }
        coeffs[deg] = 0;
        coeffs[deg - 1] = (coeffs[deg - 1] + c * (p - d[1]) % p) % p;
        coeffs[deg - 2] = (coeffs[deg - 2] + c * (p - d[0]) % p) % p;
    }
    coeffs[0] == 0 && coeffs[1] == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_decompose(2), Some((2, 1)));
        assert_eq!(prime_power_decompose(4), Some((2, 2)));
        assert_eq!(prime_power_decompose(9), Some((3, 2)));
        assert_eq!(prime_power_decompose(16), Some((2, 4)));
        assert_eq!(prime_power_decompose(6), None);
        assert_eq!(prime_power_decompose(12), None);
        assert_eq!(prime_power_decompose(1), None);
    }

    #[test]
    fn field_axioms_all_supported_orders() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Gf::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "inverse in GF({q})");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // multiplication by nonzero is a permutation
            for a in 1..q {
                let mut seen = vec![false; q];
                for b in 0..q {
                    let ab = f.mul(a, b);
                    assert!(!seen[ab]);
                    seen[ab] = true;
                }
            }
        }
    }

    #[test]
    fn gf4_is_not_integers_mod_4() {
        let f = Gf::new(4).unwrap();
        // In GF(4), 2*2 has an inverse story: 2*2 = 3 under the standard
        // polynomial tables, never 0 as it would be mod 4.
        assert_ne!(f.mul(2, 2), 0);
        assert_eq!(f.add(2, 2), 0); // characteristic 2
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(Gf::new(6).unwrap_err(), GfError::NotPrimePower(6));
        assert_eq!(Gf::new(17), Err(GfError::TooLarge(17)));
    }
}
