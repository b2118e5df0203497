//! Exact arithmetic over Q-linear combinations of square roots.
//!
//! A [`RadicalValue`] is a finite sum `Σ qᵢ·√sᵢ` with rational coefficients
//! and distinct squarefree positive integer radicands; radicand 1 holds the
//! rational part. Square roots of distinct squarefree integers are linearly
//! independent over the rationals, so the canonical form is unique and
//! structural equality coincides with numerical equality. Signs of nonzero
//! values are decided by interval evaluation with exact rational endpoints at
//! doubling precision; nonzero values are bounded away from zero, so the
//! loop terminates.
//!
//! Every Randić value of a bounded-degree graph lives here: each edge
//! contributes `1/sqrt(d(u)d(v))`, a single radical term after squarefree
//! reduction.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Exact number of the form `Σ q·√s`, kept in canonical form: radicands
/// squarefree and distinct, coefficients nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct RadicalValue {
    terms: BTreeMap<u64, BigRational>,
}

/// Shorthand for `BigRational::new(p, q)`.
pub fn big_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// x = s·t² with s squarefree; returns (s, t). Trial division — radicands
/// here are tiny (products of two vertex degrees).
fn squarefree_decompose(x: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut t = 1u64;
    let mut rest = x;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        t *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    (s * rest, t)
}

impl RadicalValue {
    pub fn zero() -> Self {
        RadicalValue { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(big_ratio(i, 1))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        RadicalValue { terms }
    }

    /// Exact `√m` for a positive integer.
    pub fn sqrt_integer(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("square root of zero radicand".into()));
        }
        let (s, t) = squarefree_decompose(m);
        let mut v = RadicalValue::zero();
        v.add_term(s, big_ratio(t as i64, 1));
        Ok(v)
    }

    /// Exact `1/√m`: with `m = s·t²`, this is `(1/(s·t))·√s`.
    pub fn inv_sqrt(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("1/sqrt(0) is undefined".into()));
        }
        let (s, t) = squarefree_decompose(m);
        let mut v = RadicalValue::zero();
        v.add_term(s, BigRational::new(BigInt::one(), BigInt::from(s * t)));
        Ok(v)
    }

    /// Exact `1/√r` for a positive rational `r = p/q`: equals `(t/p)·√s`
    /// where `p·q = s·t²`.
    pub fn inv_sqrt_rational(r: &BigRational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Domain(format!("1/sqrt({r}) needs a positive argument")));
        }
        let p = r.numer().clone();
        let q = r.denom().clone();
        let pq = (&p * &q)
            .to_u64()
            .ok_or_else(|| Error::Domain(format!("radicand {}·{} too large", p, q)))?;
        let (s, t) = squarefree_decompose(pq);
        let mut v = RadicalValue::zero();
        v.add_term(s, BigRational::new(BigInt::from(t), p));
        Ok(v)
    }

    fn add_term(&mut self, s: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, q) in &other.terms {
            out.add_term(s, q.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, q) in &other.terms {
            out.add_term(s, -q.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = RadicalValue::zero();
        for (&s, q) in &self.terms {
            out.add_term(s, -q.clone());
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = RadicalValue::zero();
        if q.is_zero() {
            return out;
        }
        for (&s, c) in &self.terms {
            out.add_term(s, c * q);
        }
        out
    }

    /// General product. `√a·√b = g·√(ab/g²)` with `g = gcd(a, b)`; the
    /// reduced radicand stays squarefree, so no re-factoring is needed.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RadicalValue::zero();
        for (&s1, q1) in &self.terms {
            for (&s2, q2) in &other.terms {
                let g = s1.gcd(&s2);
                let s = (s1 / g) * (s2 / g);
                out.add_term(s, q1 * q2 * big_ratio(g as i64, 1));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact sign. Canonical form decides zero structurally; otherwise the
    /// enclosing interval is refined (64 bits, doubling) until it excludes
    /// zero.
    pub fn sign(&self) -> Sign {
        if self.terms.is_empty() {
            return Sign::Zero;
        }
        if self.terms.len() == 1 {
            let q = self.terms.values().next().unwrap();
            return if q.is_positive() { Sign::Positive } else { Sign::Negative };
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.eval_bits(bits);
            if lo.is_positive() {
                return Sign::Positive;
            }
            if hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    /// Enclosing interval with exact rational endpoints; each irrational
    /// term is bracketed by `⌊√(s·4^b)⌋ / 2^b`.
    fn eval_bits(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (&s, q) in &self.terms {
            if s == 1 {
                lo += q;
                hi += q;
                continue;
            }
            let scaled = BigUint::from(s) << (2 * bits);
            let root = scaled.sqrt();
            let denom = BigInt::from(BigUint::one() << bits);
            let rlo = BigRational::new(BigInt::from(root.clone()), denom.clone());
            let rhi = BigRational::new(BigInt::from(root + BigUint::one()), denom);
            if q.is_positive() {
                lo += q * &rlo;
                hi += q * &rhi;
            } else {
                lo += q * &rhi;
                hi += q * &rlo;
            }
        }
        (lo, hi)
    }

    /// Enclosing interval of width at most `10^(-digits)`.
    pub fn enclosure(&self, digits: u32) -> (BigRational, BigRational) {
        let width = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let mut bits = 64;
        loop {
            let (lo, hi) = self.eval_bits(bits);
            if &hi - &lo <= width {
                return (lo, hi);
            }
            bits *= 2;
        }
    }

    /// Nearest double; good to f64 resolution, not exact.
    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(17);
        ((lo + hi) / big_ratio(2, 1)).to_f64().unwrap_or(f64::NAN)
    }

    /// Compare by value. Consistent with `Eq` because canonical equality is
    /// numerical equality.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match self.sub(other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// Decimal rendering with `sig` correct significant digits. The
    /// enclosure is refined until both endpoints round to the same digit
    /// string, so every printed digit is right.
    pub fn decimal(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.terms.is_empty() {
            return "0".into();
        }
        let negative = self.sign() == Sign::Negative;
        let abs = if negative { self.neg() } else { self.clone() };

        // exponent e with 10^e <= |v| < 10^(e+1), by exact comparison
        let mut e = {
            let (lo, _) = abs.enclosure(3);
            let guess = lo.to_f64().unwrap_or(0.0);
            if guess > 0.0 { guess.log10().floor() as i64 } else { 0 }
        };
        while abs.sub(&Self::from_rational(pow10(e))).sign() == Sign::Negative {
            e -= 1;
        }
        while abs.sub(&Self::from_rational(pow10(e + 1))).sign() != Sign::Negative {
            e += 1;
        }

        // N = round(|v| * 10^(sig-1-e)) pinned via the enclosure
        let scale = pow10(sig as i64 - 1 - e);
        let mut bits = 64;
        let mut digits = loop {
            let (lo, hi) = abs.eval_bits(bits);
            let nlo = round_half_away(&(lo * &scale));
            let nhi = round_half_away(&(hi * &scale));
            if nlo == nhi {
                break nlo;
            }
            bits *= 2;
        };
        let cap = BigInt::from(10u32).pow(sig);
        if digits == cap {
            digits = BigInt::from(10u32).pow(sig - 1);
            e += 1;
        }

        let ds = digits.to_string();
        debug_assert_eq!(ds.len(), sig as usize);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if e < 0 {
            out.push_str("0.");
            for _ in 0..(-e - 1) {
                out.push('0');
            }
            out.push_str(&ds);
        } else if (e as usize) < sig as usize - 1 {
            let point = e as usize + 1;
            out.push_str(&ds[..point]);
            out.push('.');
            out.push_str(&ds[point..]);
        } else {
            out.push_str(&ds);
            for _ in 0..(e as usize + 1 - sig as usize) {
                out.push('0');
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        self.terms.iter().map(|(&s, q)| (s, q))
    }

    /// Rational part (the radicand-1 coefficient).
    pub fn rational_part(&self) -> BigRational {
        self.terms.get(&1).cloned().unwrap_or_else(BigRational::zero)
    }
}

fn pow10(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::from(10u32).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(10u32).pow((-e) as u32))
    }
}

fn round_half_away(r: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    if r.is_negative() {
        -round_half_away(&-r.clone())
    } else {
        (r.numer() * &two + r.denom()).div_floor(&(r.denom() * &two))
    }
}

impl fmt::Display for RadicalValue {
    /// `q0 + q1*sqrt(s1) + ...` with reduced rationals, e.g.
    /// `5/6 - 1/3*sqrt(6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&s, q) in &self.terms {
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if s == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({s})")?;
            } else {
                write!(f, "{mag}*sqrt({s})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalValue({self})")
    }
}

impl PartialOrd for RadicalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for RadicalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl std::ops::Add for &RadicalValue {
    type Output = RadicalValue;
    fn add(self, rhs: &RadicalValue) -> RadicalValue {
        RadicalValue::add(self, rhs)
    }
}

impl std::ops::Sub for &RadicalValue {
    type Output = RadicalValue;
    fn sub(self, rhs: &RadicalValue) -> RadicalValue {
        RadicalValue::sub(self, rhs)
    }
}

impl std::ops::Mul for &RadicalValue {
    type Output = RadicalValue;
    fn mul(self, rhs: &RadicalValue) -> RadicalValue {
        RadicalValue::mul(self, rhs)
    }
}

impl std::ops::Neg for &RadicalValue {
    type Output = RadicalValue;
    fn neg(self) -> RadicalValue {
        RadicalValue::neg(self)
    }
}
