//! Exact arithmetic in `Q(sqrt(r))`.
//!
//! Cone boundaries on quartic lattices have slopes in a real quadratic
//! field, so they cannot be carried by rationals alone and must never be
//! approximated by floats. A [`QuadraticSurd`] stores `a + b*sqrt(r)` with
//! exact rational `a, b` and a fixed non-negative integer radicand `r`.
//!
//! Values with a perfect-square radicand are normalized to plain rationals
//! (the root is folded into `a` and the radicand cleared). Apart from that
//! the radicand is kept exactly as handed in, so reported rays quote the
//! discriminant they came from rather than its squarefree part.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

/// An element `a + b*sqrt(radicand)` of a real quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    radicand: BigInt,
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

impl QuadraticSurd {
    /// Builds `a + b*sqrt(radicand)`; panics on a negative radicand.
    pub fn new(a: BigRational, b: BigRational, radicand: BigInt) -> Self {
        assert!(
            radicand.sign() != Sign::Minus,
            "radicand must be non-negative"
        );
        let mut s = QuadraticSurd { a, b, radicand };
        s.normalize();
        s
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticSurd {
            a,
            b: BigRational::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The pure root term `sqrt(radicand)`.
    pub fn sqrt(radicand: BigInt) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), radicand)
    }

    fn normalize(&mut self) {
        if self.b.is_zero() {
            self.radicand = BigInt::zero();
            return;
        }
        if let Some(root) = exact_sqrt(&self.radicand) {
            self.a += &self.b * BigRational::from_integer(root);
            self.b = BigRational::zero();
            self.radicand = BigInt::zero();
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// True after normalization exactly when the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of `a + b*sqrt(r)`, decided by cross-squaring.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&BigRational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&BigRational::zero());
        }
        let sa = self.a.is_positive();
        let sb = self.b.is_positive();
        if sa == sb {
            return if sa { Ordering::Greater } else { Ordering::Less };
        }
        // Opposite signs: compare a^2 against b^2 * r.
        let a2 = &self.a * &self.a;
        let b2r = &self.b * &self.b * BigRational::from_integer(self.radicand.clone());
        match a2.cmp(&b2r) {
            Ordering::Greater => self.a.cmp(&BigRational::zero()),
            Ordering::Less => self.b.cmp(&BigRational::zero()),
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn compatible_radicand(&self, other: &Self) -> BigInt {
        if self.b.is_zero() {
            return other.radicand.clone();
        }
        if other.b.is_zero() {
            return self.radicand.clone();
        }
        assert_eq!(
            self.radicand, other.radicand,
            "mixing surds over different radicands"
        );
        self.radicand.clone()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadraticSurd::new(&self.a * k, &self.b * k, self.radicand.clone())
    }
}

impl Add for &QuadraticSurd {
    type Output = QuadraticSurd;

    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let r = self.compatible_radicand(rhs);
        QuadraticSurd::new(&self.a + &rhs.a, &self.b + &rhs.b, r)
    }
}

impl Sub for &QuadraticSurd {
    type Output = QuadraticSurd;

    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        self + &(-rhs)
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;

    fn neg(self) -> QuadraticSurd {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            radicand: self.radicand.clone(),
        }
    }
}

impl Mul for &QuadraticSurd {
    type Output = QuadraticSurd;

    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let r = self.compatible_radicand(rhs);
        let rr = BigRational::from_integer(r.clone());
        // (a + b√r)(c + e√r) = ac + be·r + (ae + bc)√r
        let a = &self.a * &rhs.a + &self.b * &rhs.b * rr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticSurd::new(a, b, r)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.radicand);
        }
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.radicand)
    }
}
