//! Polynomial-basis arithmetic in GF(2^m).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The field `GF(2)[x] / (p)`. Elements are bit vectors, bit `i` holding the
/// coefficient of `x^i`; the modulus includes its leading bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gf2m {
    m: u32,
    poly: u32,
}

/// Default moduli for `m = 1..=6`.
pub fn default_poly(m: u32) -> Option<u32> {
    match m {
        1 => Some(0b11),
        2 => Some(0b111),
        3 => Some(0b1011),
        4 => Some(0b10011),
        5 => Some(0b100101),
        6 => Some(0b1000011),
        _ => None,
    }
}

fn degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_mod(mut a: u32, p: u32) -> u32 {
    let dp = degree(p);
    while a != 0 && degree(a) >= dp {
        a ^= p << (degree(a) - dp);
    }
    a
}

/// No factor of degree `1..=deg/2`.
pub fn is_irreducible(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let d = degree(p);
    (2u32..(1 << (d / 2 + 1))).all(|f| poly_mod(p, f) != 0)
}

impl Gf2m {
    pub fn new(m: u32, poly: Option<u32>) -> Result<Self> {
        if !(1..=16).contains(&m) {
            return Err(Error::OutOfRange(format!("field degree m = {m}")));
        }
        let poly = match poly {
            Some(p) => p,
            None => default_poly(m)
                .ok_or_else(|| Error::InvalidField(format!("no default modulus for m = {m}")))?,
        };
        if poly == 0 || degree(poly) != m {
            return Err(Error::InvalidField(format!("{poly:#b} does not have degree {m}")));
        }
        if !is_irreducible(poly) {
            return Err(Error::InvalidField(format!("{poly:#b} is reducible")));
        }
        Ok(Gf2m { m, poly })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    pub fn size(&self) -> u32 {
        1 << self.m
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc = 0u32;
        let (mut a, mut b) = (a, b);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & (1 << self.m) != 0 {
                a ^= self.poly;
            }
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| (1..self.size()).find(|&b| self.mul(a, b) == 1).expect("field"))
    }
}
