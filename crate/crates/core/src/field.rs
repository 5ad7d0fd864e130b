//! Finite fields GF(p^k) for Paley graphs.
//!
//! Elements are integers `0..q` whose base-`p` digits are the polynomial
//! coefficients, lowest degree first. The modulus is the least monic
//! irreducible polynomial of degree `k`, ordering candidates by the integer
//! value of their lower coefficients.

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients of the monic modulus below the leading term.
    modulus: Vec<u32>,
}

/// Splits `q` into `(p, k)` with `q = p^k` and `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::Field(format!("order {q} above {MAX_FIELD_ORDER}")));
        }
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::Field(format!("{q} is not a prime power")))?;
        let modulus = (0..p.pow(k))
            .map(|code| digits(code, p, k as usize))
            .find(|low| {
                let mut poly = low.clone();
                poly.push(1);
                is_irreducible(&poly, p)
            })
            .ok_or_else(|| {
                Error::Field(format!("no irreducible polynomial of degree {k} mod {p}"))
            })?;
        let field = FiniteField { p, k, q, modulus };
        debug_assert!(field.modulus_is_irreducible());
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Modulus coefficients, lowest degree first, including the leading 1.
    pub fn modulus(&self) -> Vec<u32> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn modulus_is_irreducible(&self) -> bool {
        is_irreducible(&self.modulus(), self.p)
    }

    fn digits(&self, x: u32) -> Vec<u32> {
        digits(x, self.p, self.k as usize)
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let t = prod[deg - k + i] + (p - c) * m as u64;
                prod[deg - k + i] = t % p;
            }
        }
        let low: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.undigits(&low)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Field("zero has no inverse".into()));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// Whether `a` is a nonzero square, by Euler's criterion.
    pub fn is_square(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        self.pow(a, (self.q as u64 - 1) / 2) == 1
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }
}

fn digits(mut x: u32, p: u32, k: usize) -> Vec<u32> {
    let mut d = vec![0; k];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let p = p as u64;
    while r.len() > dm {
        let c = r.pop().unwrap() % p;
        if c != 0 {
            let off = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + (p - c) * mi as u64) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Irreducibility of a monic polynomial by trial division with every monic
/// polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
