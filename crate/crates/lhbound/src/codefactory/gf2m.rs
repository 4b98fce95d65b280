//! GF(2^m) arithmetic via log/antilog tables, minimal polynomials over
//! GF(2), and the BCH generator polynomial.

use crate::error::{Error, Result};

/// One fixed primitive polynomial per degree m = 2..16, from the standard
/// table in Lin & Costello, "Error Control Coding" (Table 2.7). Bit i is
/// the coefficient of X^i.
pub const PRIMITIVE_POLYS: [(usize, u32); 15] = [
    (2, 0x7),      // X^2+X+1
    (3, 0xB),      // X^3+X+1
    (4, 0x13),     // X^4+X+1
    (5, 0x25),     // X^5+X^2+1
    (6, 0x43),     // X^6+X+1
    (7, 0x89),     // X^7+X^3+1
    (8, 0x11D),    // X^8+X^4+X^3+X^2+1
    (9, 0x211),    // X^9+X^4+1
    (10, 0x409),   // X^10+X^3+1
    (11, 0x805),   // X^11+X^2+1
    (12, 0x1053),  // X^12+X^6+X^4+X+1
    (13, 0x201B),  // X^13+X^4+X^3+X+1
    (14, 0x4443),  // X^14+X^10+X^6+X+1
    (15, 0x8003),  // X^15+X+1
    (16, 0x1100B), // X^16+X^12+X^3+X+1
];

/// The field GF(2^m) with discrete log tables over the fixed primitive
/// element α (a root of the degree-m primitive polynomial).
pub struct GF2mField {
    pub m: usize,
    pub primitive_poly: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
}

impl GF2mField {
    pub fn new(m: usize) -> Result<Self> {
        let &(_, poly) = PRIMITIVE_POLYS
            .iter()
            .find(|&&(deg, _)| deg == m)
            .ok_or_else(|| Error::InvalidParameters(format!("no primitive polynomial for m={m}")))?;
        let size = 1usize << m;
        let order = size as u32 - 1;
        let mut log = vec![0u32; size];
        let mut antilog = vec![0u32; size];
        let mut x = 1u32;
        for i in 0..order {
            antilog[i as usize] = x;
            log[x as usize] = i;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= poly;
            }
        }
        antilog[order as usize] = 1; // wrap: α^(2^m-1) = 1
        Ok(GF2mField {
            m,
            primitive_poly: poly,
            log,
            antilog,
        })
    }

    pub fn order(&self) -> u32 {
        (1u32 << self.m) - 1
    }

    /// α^e for any exponent (reduced mod 2^m - 1).
    pub fn alpha_pow(&self, e: u64) -> u32 {
        self.antilog[(e % self.order() as u64) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.alpha_pow(self.log[a as usize] as u64 + self.log[b as usize] as u64)
    }

    /// Cyclotomic coset of `e` modulo 2^m - 1, ascending, starting at the
    /// minimum representative.
    pub fn cyclotomic_coset(&self, e: u64) -> Vec<u64> {
        let n = self.order() as u64;
        let e = e % n;
        let mut coset = vec![e];
        let mut cur = (e * 2) % n;
        while cur != e {
            coset.push(cur);
            cur = (cur * 2) % n;
        }
        coset.sort_unstable();
        coset
    }

    /// Minimal polynomial of α^e over GF(2), as a bitmask (bit i = coeff of
    /// X^i). Product of (X + α^j) over the cyclotomic coset of e.
    pub fn minimal_polynomial(&self, e: u64) -> u64 {
        let coset = self.cyclotomic_coset(e);
        // Coefficients in GF(2^m), ascending degree; start with the constant 1.
        let mut coeffs: Vec<u32> = vec![1];
        for &j in &coset {
            let root = self.alpha_pow(j);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (t, &c) in coeffs.iter().enumerate() {
                next[t + 1] ^= c;
                next[t] ^= self.mul(c, root);
            }
            coeffs = next;
        }
        let mut bits = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            debug_assert!(c <= 1, "minimal polynomial must have GF(2) coefficients");
            bits |= (c as u64) << i;
        }
        bits
    }
}

/// Carryless product of GF(2) polynomials given as bitmasks.
pub fn gf2_poly_mul(a: u128, b: u128) -> u128 {
    let mut out = 0u128;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            out ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    out
}

/// Generator polynomial of the narrow-sense BCH code: lcm of the minimal
/// polynomials of α, α², ..., α^(δ-1).
pub fn bch_generator_poly(field: &GF2mField, designed_distance: usize) -> u128 {
    let mut seen = std::collections::BTreeSet::new();
    let mut g: u128 = 1;
    for e in 1..designed_distance as u64 {
        let rep = *field.cyclotomic_coset(e).first().unwrap();
        if seen.insert(rep) {
            g = gf2_poly_mul(g, field.minimal_polynomial(e) as u128);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tables_round_trip() {
        for m in 2..=10 {
            let f = GF2mField::new(m).unwrap();
            for x in 1..(1u32 << m) {
                assert_eq!(f.antilog[f.log[x as usize] as usize], x);
            }
            // α is primitive: powers 0..2^m-2 are all distinct nonzero elements.
            let mut seen: Vec<bool> = vec![false; 1 << m];
            for e in 0..f.order() {
                let v = f.alpha_pow(e as u64);
                assert!(!seen[v as usize]);
                seen[v as usize] = true;
            }
        }
    }

    #[test]
    fn minimal_polynomial_gf16() {
        let f = GF2mField::new(4).unwrap();
        // Over GF(16) with X^4+X+1: minpoly of α is X^4+X+1 itself,
        // minpoly of α^3 is X^4+X^3+X^2+X+1, minpoly of α^5 is X^2+X+1.
        assert_eq!(f.minimal_polynomial(1), 0b10011);
        assert_eq!(f.minimal_polynomial(3), 0b11111);
        assert_eq!(f.minimal_polynomial(5), 0b111);
    }

    #[test]
    fn bch_15_5_generator() {
        // BCH(15, δ=7): g = m1*m3*m5 of degree 10.
        let f = GF2mField::new(4).unwrap();
        let g = bch_generator_poly(&f, 7);
        assert_eq!(127 - g.leading_zeros(), 10);
    }
}
