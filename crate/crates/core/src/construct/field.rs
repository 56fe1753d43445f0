use crate::{Error, Result};

/// Largest field order built by default.
pub const DEFAULT_FIELD_CAP: u64 = 512;

/// Returns `(p, e)` with `q = p^e` and `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// A finite field `GF(p^e)` with full addition and multiplication tables.
///
/// Elements are `0..q`; element `a` stands for the polynomial whose
/// coefficient of `x^i` is the `i`-th base-`p` digit of `a`. In particular
/// `0` and `1` are the field's zero and one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: usize,
    modulus: Vec<u64>,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

/// Builds `GF(q)` with the default order cap.
pub fn gf(q: u64) -> Result<FiniteField> {
    gf_with_cap(q, DEFAULT_FIELD_CAP)
}

/// Builds `GF(q)`, refusing orders above `cap`. For `e > 1` the modulus is
/// the monic irreducible polynomial of degree `e` with the smallest base-`p`
/// encoding.
pub fn gf_with_cap(q: u64, cap: u64) -> Result<FiniteField> {
    let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > cap || q > u16::MAX as u64 {
        return Err(Error::InvalidArgument(format!(
            "field order {q} exceeds the cap {cap}"
        )));
    }
    let modulus = if e == 1 {
        vec![0, 1]
    } else {
        least_irreducible(p, e)
    };
    let field = FiniteField::from_modulus(p, e, modulus);
    field.verify()?;
    Ok(field)
}

fn digits(mut a: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two polynomials over `GF(p)` reduced modulo a monic `modulus`.
fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - e + i;
            prod[idx] = (prod[idx] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(e);
    prod.resize(e, 0);
    prod
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let e = poly.len() - 1;
    for deg in 1..=e / 2 {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut divisor = digits(low, p, deg);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u64], monic: &[u64], p: u64) -> Vec<u64> {
    let e = monic.len() - 1;
    let mut r = a.to_vec();
    while r.len() > e {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - e;
        for (i, &m) in monic.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * m % p) % p;
        }
        r.pop();
    }
    r
}

fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    (0..p.pow(e))
        .map(|low| {
            let mut poly = digits(low, p, e as usize);
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials exist in every degree")
}

impl FiniteField {
    fn from_modulus(p: u64, e: u32, modulus: Vec<u64>) -> Self {
        let q = p.pow(e) as usize;
        let len = e as usize;
        let digit_table: Vec<Vec<u64>> = (0..q as u64).map(|a| digits(a, p, len)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u64> = digit_table[a]
                    .iter()
                    .zip(&digit_table[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = undigits(&sum, p) as u16;
                let prod = if e == 1 {
                    vec![(a as u64 * b as u64) % p]
                } else {
                    poly_mulmod(&digit_table[a], &digit_table[b], &modulus, p)
                };
                mul[a * q + b] = undigits(&prod, p) as u16;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            if let Some(b) = (1..q).find(|&b| mul[a * q + b] == 1) {
                inv[a] = b as u16;
            }
        }
        FiniteField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            inv,
        }
    }

    /// Checks the field axioms: identities, commutativity, total inverses,
    /// and (for `q ≤ 16`) associativity and distributivity exhaustively.
    fn verify(&self) -> Result<()> {
        let q = self.q;
        let bad = |what: &str| Err(Error::Inconsistent(format!("GF({q}) fails {what}")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return bad("identities");
            }
            if a != 0 && self.mul(a, self.inv[a] as usize) != 1 {
                return bad("inverses");
            }
            if self.add(a, self.neg(a)) != 0 {
                return bad("additive inverses");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
            }
        }
        if q <= 16 {
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                            || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        {
                            return bad("associativity");
                        }
                        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                            return bad("distributivity");
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert_eq!(prime_power(121), Some((11, 2)));
        assert_eq!(prime_power(509), Some((509, 1)));
    }

    #[test]
    fn gf5_is_integers_mod_5() {
        let f = gf(5).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(f.add(a, b), (a + b) % 5);
                assert_eq!(f.mul(a, b), (a * b) % 5);
            }
        }
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = gf(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x · x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn least_moduli() {
        assert_eq!(gf(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(gf(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(gf(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(gf(6), Err(Error::NotPrimePower(6)));
        assert_eq!(gf(1), Err(Error::NotPrimePower(1)));
        assert!(matches!(gf(1024), Err(Error::InvalidArgument(_))));
        assert!(gf_with_cap(27, 16).is_err());
    }

    #[test]
    fn all_small_fields_verify() {
        for q in 2..=128u64 {
            if prime_power(q).is_some() {
                let f = gf(q).unwrap();
                assert_eq!(f.order() as u64, q);
                // The multiplicative group is cyclic of order q − 1: some
                // element has order exactly q − 1.
                let has_generator = (1..f.order()).any(|g| {
                    let mut x = g;
                    let mut ord = 1;
                    while x != 1 {
                        x = f.mul(x, g);
                        ord += 1;
                    }
                    ord == f.order() - 1
                });
                assert!(has_generator, "GF({q})");
            }
        }
    }
}
