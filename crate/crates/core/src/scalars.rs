//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! Every coefficient in the crate is a [`Cyclotomic`]: a residue class of
//! `Q[x]` modulo the `m`-th cyclotomic polynomial `Φ_m`, stored in the power
//! basis `1, ζ, …, ζ^{φ(m)-1}`. Because the representative is reduced modulo
//! `Φ_m` (and not `x^m - 1`), two elements with the same conductor are equal
//! exactly when their coefficient lists are equal.
//!
//! Binary operations on elements with different conductors first embed both
//! operands into `Q(ζ_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the monic integer polynomial `Φ_m`.
///
/// Computed by exact division of `x^m - 1` by `Φ_d` for every proper divisor
/// `d` of `m`, and memoized.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            num = exact_monic_division(&num, &divisor);
        }
    }
    let poly = Arc::new(num);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(m, Arc::clone(&poly));
    poly
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (dn..num.len()).rev() {
        let lead = rem[k].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k - dn + i] -= &lead * d;
        }
        quot[k - dn] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division not exact");
    quot
}

/// Euler's totient, i.e. the degree of `Φ_m`.
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// An element of `Q(ζ_m)` in canonical (reduced modulo `Φ_m`) form.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

/// The coefficient domain used throughout the crate.
pub type Scalar = Cyclotomic;

impl Cyclotomic {
    /// Builds `Σ coeffs[k] ζ_m^k`, reducing modulo `Φ_m`. Any length is accepted.
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut c = Cyclotomic { conductor, coeffs };
        c.reduce();
        c
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(i)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ζ_m^k`, exact. Negative exponents are allowed.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::new(m, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        let phi = euler_phi(self.conductor);
        if self.coeffs.len() > phi {
            if phi == 1 {
                // Φ_1 = x - 1 and Φ_2 = x + 1: evaluate at ζ = ±1.
                let z = if self.conductor == 1 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let mut acc = Rational::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * &z + c;
                }
                self.coeffs = vec![acc];
                return;
            }
            let modulus = cyclotomic_polynomial(self.conductor);
            for k in (phi..self.coeffs.len()).rev() {
                let lead = std::mem::take(&mut self.coeffs[k]);
                if lead.is_zero() {
                    continue;
                }
                for (i, m) in modulus.iter().enumerate().take(phi) {
                    if !m.is_zero() {
                        let t = &lead * m;
                        self.coeffs[k - phi + i] -= t;
                    }
                }
            }
            self.coeffs.truncate(phi);
        }
        self.coeffs.resize(phi, Rational::zero());
    }

    /// Embeds into `Q(ζ_target)`; `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot embed Q(ζ_{}) into Q(ζ_{})",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        if self.coeffs.len() == 1 {
            let mut coeffs = vec![Rational::zero(); euler_phi(target)];
            coeffs[0] = self.coeffs[0].clone();
            return Cyclotomic {
                conductor: target,
                coeffs,
            };
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Self::new(target, coeffs)
    }

    fn unified(a: &Self, b: &Self) -> (u32, Option<Self>, Option<Self>) {
        if a.conductor == b.conductor {
            return (a.conductor, None, None);
        }
        let l = a.conductor.lcm(&b.conductor);
        let ea = (a.conductor != l).then(|| a.embed(l));
        let eb = (b.conductor != l).then(|| b.embed(l));
        (l, ea, eb)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclotomic {
                conductor: self.conductor,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // Extended Euclid in Q[x]: track s with s * a ≡ r (mod Φ_m).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        debug_assert_eq!(r0.len(), 1, "Φ_m is irreducible, gcd must be constant");
        let g = r0[0].recip();
        let coeffs = s0.into_iter().map(|c| c * &g).collect();
        Ok(Self::new(self.conductor, coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Parses a literal and embeds it into `Q(ζ_conductor)`.
    ///
    /// Fails if the literal mentions a root of unity whose order does not
    /// divide `conductor`.
    pub fn parse_in(literal: &str, conductor: u32) -> Result<Self, ScalarError> {
        let v: Self = literal.parse()?;
        if !conductor.is_multiple_of(v.conductor) {
            return Err(ScalarError::Parse {
                literal: literal.to_string(),
                reason: format!(
                    "root of unity of order {} does not live in Q(ζ_{conductor})",
                    v.conductor
                ),
            });
        }
        Ok(v.embed(conductor))
    }

    /// True when the printed form is a bare rational (no parentheses needed
    /// when used as a coefficient).
    pub fn is_simple(&self) -> bool {
        self.as_rational().is_some()
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        let f = &rem[k] * &lead_inv;
        if f.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k - db + i] -= &f * y;
        }
        quot[k - db] = f;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        match Self::unified(self, other) {
            (_, None, None) => self.coeffs == other.coeffs,
            (_, a, b) => {
                let a = a.as_ref().unwrap_or(self);
                let b = b.as_ref().unwrap_or(other);
                a.coeffs == b.coeffs
            }
        }
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(v: Rational) -> Self {
        Self::from_rational(v)
    }
}

macro_rules! with_unified {
    ($a:expr, $b:expr, |$x:ident, $y:ident, $m:ident| $body:expr) => {{
        let (l, ea, eb) = Cyclotomic::unified($a, $b);
        let $x: &Cyclotomic = ea.as_ref().unwrap_or($a);
        let $y: &Cyclotomic = eb.as_ref().unwrap_or($b);
        let $m = l;
        $body
    }};
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        with_unified!(self, rhs, |x, y, m| Cyclotomic {
            conductor: m,
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(p, q)| p + q).collect(),
        })
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        with_unified!(self, rhs, |x, y, m| Cyclotomic {
            conductor: m,
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(p, q)| p - q).collect(),
        })
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        // Rational times anything needs no polynomial product.
        if self.coeffs.len() == 1 && rhs.conductor.is_multiple_of(self.conductor) {
            let s = &self.coeffs[0];
            return Cyclotomic {
                conductor: rhs.conductor,
                coeffs: rhs.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        if rhs.coeffs.len() == 1 && self.conductor.is_multiple_of(rhs.conductor) {
            let s = &rhs.coeffs[0];
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        with_unified!(self, rhs, |x, y, m| {
            let mut coeffs = vec![Rational::zero(); x.coeffs.len() + y.coeffs.len() - 1];
            for (i, p) in x.coeffs.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (j, q) in y.coeffs.iter().enumerate() {
                    if !q.is_zero() {
                        coeffs[i + j] += p * q;
                    }
                }
            }
            Cyclotomic::new(m, coeffs)
        })
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$f(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (p, q) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *p += q;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (p, q) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *p -= q;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = if k == 0 {
                fmt_rational(c)
            } else if c.is_one() {
                format!("z{}^{}", self.conductor, k)
            } else if (-c).is_one() {
                format!("-z{}^{}", self.conductor, k)
            } else {
                format!("{}*z{}^{}", fmt_rational(c), self.conductor, k)
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

struct LiteralParser<'s> {
    src: &'s str,
    bytes: &'s [u8],
    pos: usize,
}

impl<'s> LiteralParser<'s> {
    fn err(&self, reason: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            literal: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected digits at offset {start}")));
        }
        // Digits only, so parsing cannot fail.
        Ok(self.src[start..self.pos].parse().unwrap())
    }

    fn small(&mut self, what: &str) -> Result<i64, ScalarError> {
        let v = self.digits()?;
        i64::try_from(v)
            .ok()
            .filter(|v| *v <= 1 << 20)
            .ok_or_else(|| self.err(format!("{what} out of range")))
    }

    fn root(&mut self) -> Result<Cyclotomic, ScalarError> {
        // Caller has seen 'z'.
        self.pos += 1;
        let m = self.small("root order")?;
        if m == 0 {
            return Err(self.err("root order must be positive"));
        }
        let mut k = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            k = self.small("exponent")?;
            if neg {
                k = -k;
            }
        }
        Ok(Cyclotomic::root_of_unity(m as u32, k))
    }

    fn term(&mut self) -> Result<Cyclotomic, ScalarError> {
        match self.peek() {
            Some(b'z') => self.root(),
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let mut q = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    q /= Rational::from_integer(den);
                }
                let mut v = Cyclotomic::from_rational(q);
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    if self.peek() != Some(b'z') {
                        return Err(self.err("expected z<m>^<k> after '*'"));
                    }
                    v = &v * &self.root()?;
                }
                Ok(v)
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of literal")),
        }
    }

    fn parse(mut self) -> Result<Cyclotomic, ScalarError> {
        let mut acc = Cyclotomic::zero();
        let mut first = true;
        loop {
            let mut negate = false;
            match self.peek() {
                None if !first => break,
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ if !first => return Err(self.err("expected '+' or '-' between terms")),
                _ => {}
            }
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }
}

impl FromStr for Cyclotomic {
    type Err = ScalarError;

    /// Grammar: a sum of terms `q` or `q*z<m>^<k>` (also `z<m>`, `z<m>^<k>`),
    /// where `q` is an integer or a fraction such as `-3/2`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        LiteralParser {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(lit: &str) -> Scalar {
        lit.parse().unwrap()
    }

    #[test]
    fn trivial_root_is_one() {
        assert!(Cyclotomic::root_of_unity(1, 0).is_one());
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&z * &z, Cyclotomic::from_int(-1));
    }

    #[test]
    fn sixth_root_is_minus_cube_root_squared() {
        let z6 = Cyclotomic::root_of_unity(6, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z6, -z3sq);
    }

    #[test]
    fn inverses() {
        assert_eq!(s("1/2").inverse().unwrap(), s("2"));
        assert_eq!(s("z3").inverse().unwrap(), s("z3^2"));
        // (1 + i)(1 - i) = 2
        assert_eq!(s("1 + z4").inverse().unwrap(), s("1/2 - 1/2*z4"));
        assert_eq!(Scalar::zero().inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn cyclotomic_polynomials_have_degree_phi_and_vanish_at_zeta() {
        for m in 1..=24u32 {
            let phi = cyclotomic_polynomial(m);
            assert_eq!(phi.len() - 1, euler_phi(m), "deg Φ_{m}");
            // Evaluate Φ_m(ζ_m) by Horner in Q(ζ_m).
            let z = Cyclotomic::root_of_unity(m, 1);
            let mut acc = Cyclotomic::zero();
            for c in phi.iter().rev() {
                acc = &(&acc * &z) + &Cyclotomic::from_rational(Rational::from_integer(c.clone()));
            }
            assert!(acc.is_zero(), "Φ_{m}(ζ_{m}) != 0");
        }
    }

    #[test]
    fn zeta_to_the_conductor_is_one() {
        for m in 1..=12u32 {
            assert!(Cyclotomic::root_of_unity(m, m as i64).is_one());
            let z = Cyclotomic::root_of_unity(m, 1);
            assert!(z.pow(m as i64).unwrap().is_one());
        }
    }

    #[test]
    fn mixed_conductors_unify() {
        let a = s("z4");
        let b = s("z3");
        let p = &a * &b;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::root_of_unity(12, 7));
        assert_eq!(s("z12^4"), s("z3"));
    }

    #[test]
    fn literal_round_trip_examples() {
        for lit in ["0", "1", "-3/2", "1/2*z3^1 + 1", "z4", "-z5^3 + 2/7*z5^2", "z6"] {
            let v = s(lit);
            let printed = v.to_string();
            assert_eq!(s(&printed), v, "{lit} -> {printed}");
        }
        assert_eq!(s("1/2*z3^2 + 1").to_string(), "1/2 - 1/2*z3^1");
    }

    #[test]
    fn literal_errors() {
        for bad in ["", "1/0", "x", "1 +", "z0", "2*", "1 2", "z3^"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should fail");
        }
        assert!(Cyclotomic::parse_in("z4", 6).is_err());
        assert_eq!(Cyclotomic::parse_in("z3", 6).unwrap().conductor(), 6);
    }
}
