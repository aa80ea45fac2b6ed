//! Exact numbers of the form `q·√d` and finite sums of them.
//!
//! Star spectra only ever produce such values, so this is all the exact
//! arithmetic the graph energies need. Sums are compared exactly: square
//! roots of distinct squarefree integers are linearly independent over the
//! rationals, so a sum is zero only when every coefficient is, and a nonzero
//! sum has its sign settled by refining rational enclosures of each root.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub type Rational = Ratio<i128>;

pub fn rational(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

pub fn integer(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Splits `n` into `(outer, core)` with `n = outer^2 * core` and `core`
/// squarefree, by trial division. `0` maps to `(0, 1)`.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 1);
    }
    let mut outer = 1u64;
    let mut core = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    core *= rest;
    (outer, core)
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && squarefree_decompose(n).0 == 1
}

/// `coefficient·√radicand` in canonical form: radicand squarefree, and
/// radicand 1 whenever the coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    coefficient: Rational,
    radicand: u64,
}

impl RadicalScalar {
    pub fn new(coefficient: Rational, radicand: u64) -> Self {
        let (outer, core) = squarefree_decompose(radicand);
        if coefficient.is_zero() || outer == 0 {
            return Self::zero();
        }
        Self { coefficient: coefficient * integer(outer as i128), radicand: core }
    }

    pub fn zero() -> Self {
        Self { coefficient: Rational::zero(), radicand: 1 }
    }

    pub fn from_integer(n: i128) -> Self {
        Self::rational(integer(n))
    }

    pub fn rational(q: Rational) -> Self {
        Self { coefficient: q, radicand: 1 }
    }

    /// `√n`, reduced.
    pub fn sqrt(n: u64) -> Self {
        Self::new(Rational::one(), n)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    pub fn is_integer(&self) -> bool {
        self.radicand == 1 && self.coefficient.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self { coefficient: self.coefficient.abs(), radicand: self.radicand }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient) * (self.radicand as f64).sqrt()
    }

    /// `coefficient^2 · radicand`, the square of the value.
    pub fn square(&self) -> Rational {
        self.coefficient * self.coefficient * integer(self.radicand as i128)
    }

    fn signum(&self) -> i32 {
        if self.coefficient.is_zero() {
            0
        } else if self.coefficient.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Neg for RadicalScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coefficient: -self.coefficient, radicand: self.radicand }
    }
}

impl Ord for RadicalScalar {
    /// Exact numeric order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.signum(), other.signum());
        if a != b {
            return a.cmp(&b);
        }
        let by_square = self.square().cmp(&other.square());
        if a >= 0 {
            by_square
        } else {
            by_square.reverse()
        }
    }
}

impl PartialOrd for RadicalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            return write!(f, "{}", format_rational(&self.coefficient));
        }
        let c = &self.coefficient;
        if *c == Rational::one() {
            write!(f, "√{}", self.radicand)
        } else if *c == -Rational::one() {
            write!(f, "-√{}", self.radicand)
        } else if c.is_integer() {
            write!(f, "{}√{}", c.numer(), self.radicand)
        } else {
            write!(f, "({})√{}", format_rational(c), self.radicand)
        }
    }
}

impl Serialize for RadicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RadicalScalar", 4)?;
        st.serialize_field("coefficient", &format_rational(&self.coefficient))?;
        st.serialize_field("radicand", &self.radicand)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("value", &self.to_f64())?;
        st.end()
    }
}

/// Finite sum `Σ q_i·√d_i` over distinct squarefree radicands.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_scalar(x: &RadicalScalar) -> Self {
        let mut s = Self::zero();
        s.add_scalar(x, 1);
        s
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_scalar(&RadicalScalar::rational(q))
    }

    pub fn from_integer(n: i128) -> Self {
        Self::from_rational(integer(n))
    }

    /// Adds `times · x`.
    pub fn add_scalar(&mut self, x: &RadicalScalar, times: i128) {
        if x.is_zero() || times == 0 {
            return;
        }
        let entry = self.terms.entry(x.radicand).or_insert_with(Rational::zero);
        *entry += x.coefficient * integer(times);
        if entry.is_zero() {
            self.terms.remove(&x.radicand);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = RadicalScalar> + '_ {
        self.terms.iter().map(|(&d, &q)| RadicalScalar { coefficient: q, radicand: d })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rational_part(&self) -> Rational {
        self.terms.get(&1).copied().unwrap_or_else(Rational::zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.keys().all(|&d| d == 1) {
            Some(self.rational_part())
        } else {
            None
        }
    }

    pub fn scale(&self, k: Rational) -> Self {
        let mut out = Self::zero();
        if k.is_zero() {
            return out;
        }
        for (&d, &q) in &self.terms {
            out.terms.insert(d, q * k);
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.terms().map(|t| t.to_f64()).sum()
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&Rational::zero());
        }
        // Nonzero by linear independence; tighten enclosures until they
        // exclude zero.
        let mut bits = 64u32;
        loop {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.scale(-Rational::one())
        } else {
            self.clone()
        }
    }

    /// Rational interval containing the value, each root enclosed to
    /// within `2^-bits`.
    fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << bits as usize;
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (&d, q) in &self.terms {
            let q = BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
            if d == 1 {
                lo += &q;
                hi += &q;
                continue;
            }
            let root = (BigUint::from(d) << (2 * bits as usize)).sqrt();
            let r_lo = BigRational::new(BigInt::from(root.clone()), scale.clone());
            let r_hi = BigRational::new(BigInt::from(root + 1u32), scale.clone());
            if q.is_positive() {
                lo += &q * r_lo;
                hi += &q * r_hi;
            } else {
                lo += &q * r_hi;
                hi += &q * r_lo;
            }
        }
        (lo, hi)
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_scalar(&t, 1);
        }
        out
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_scalar(&t, -1);
        }
        out
    }
}

impl Mul<i128> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: i128) -> RadicalSum {
        self.scale(integer(rhs))
    }
}

impl Ord for RadicalSum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().enumerate() {
            let s = t.to_string();
            if i == 0 {
                write!(f, "{s}")?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RadicalSum", 3)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("terms", &self.terms().collect::<Vec<_>>())?;
        st.serialize_field("value", &self.to_f64())?;
        st.end()
    }
}
