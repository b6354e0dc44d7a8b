//! Exact scalar fields: the rationals, prime fields and quadratic extensions.
//!
//! Elements carry whatever context they need (a modulus, the defining square)
//! so that ordinary operators work on them. A [`Field`] value is the factory
//! for constants, random elements and the JSON encoding.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::echelon;

/// Arithmetic every field element supports.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    /// Multiplicative inverse, `None` for zero and zero divisors.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByNonInvertible)?;
        Ok(self.clone() * &inv)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Reduce rows in place to reduced row echelon form, returning pivot columns.
    fn rref_rows(rows: &mut Vec<Vec<Self>>, ncols: usize) -> Vec<usize> {
        echelon::gauss_jordan(rows, ncols)
    }
}

/// Serializable description of a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u32),
    Quadratic { base: Box<FieldDescriptor>, lambda: String },
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "Fp:{p}"),
            FieldDescriptor::Quadratic { base, lambda } => write!(f, "{base}[sqrt({lambda})]"),
        }
    }
}

impl FieldDescriptor {
    /// Parse `Q`, `Fp:<p>` or `F<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldDescriptor::Rationals);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("GF"))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(FieldDescriptor::Prime(p))
    }
}

/// Factory and codec for the elements of one field.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Scalar;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;
    /// A random element; over the rationals a small integer.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn encode(&self, x: &Self::Elem) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::Elem>;

    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }

    /// The element `n/d`; panics if `d` vanishes in the field.
    fn ratio(&self, n: i64, d: i64) -> Self::Elem {
        let d = self
            .from_i64(d)
            .inv()
            .expect("denominator must be invertible in the field");
        self.from_i64(n) * &d
    }

    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

/// Fields that can be extended: square roots and square classes are available.
pub trait BaseField: Field {
    /// The canonical square root, if one exists.
    fn sqrt(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn is_square(&self, x: &Self::Elem) -> bool {
        self.sqrt(x).is_some()
    }

    /// Canonical representative of the square class of a nonzero element.
    fn square_class_rep(&self, x: &Self::Elem) -> Result<Self::Elem>;
}

// ---------------------------------------------------------------- rationals

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn rref_rows(rows: &mut Vec<Vec<Self>>, ncols: usize) -> Vec<usize> {
        echelon::fraction_free_rref(rows, ncols)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn encode_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }
    fn encode(&self, x: &BigRational) -> Value {
        Value::String(encode_rational(x))
    }
    fn decode(&self, v: &Value) -> Result<BigRational> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(self.from_i64(i))
                } else {
                    parse_rational(&n.to_string())
                }
            }
            _ => Err(Error::Parse(format!("not a rational: {v}"))),
        }
    }
}

fn squarefree_part(n: &BigInt) -> BigInt {
    let mut n = n.abs();
    let mut out = BigInt::one();
    let mut f = BigInt::from(2u32);
    while &f * &f <= n {
        let mut count = 0u32;
        while (&n % &f).is_zero() {
            n /= &f;
            count += 1;
        }
        if count % 2 == 1 {
            out *= &f;
        }
        f += 1u32;
    }
    out * n
}

impl BaseField for Rationals {
    fn sqrt(&self, x: &BigRational) -> Option<BigRational> {
        if x.is_negative() {
            return None;
        }
        let (n, d) = (x.numer(), x.denom());
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(BigRational::new(rn, rd))
        } else {
            None
        }
    }

    fn square_class_rep(&self, x: &BigRational) -> Result<BigRational> {
        if Zero::is_zero(x) {
            return Err(Error::ZeroVector);
        }
        let prod = x.numer() * x.denom();
        let mut rep = squarefree_part(&prod);
        if prod.is_negative() {
            rep = -rep;
        }
        Ok(BigRational::from_integer(rep))
    }
}

// ------------------------------------------------------------- prime fields

/// An element of a prime field; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    val: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(val: i64, modulus: u32) -> Self {
        Fp {
            val: val.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }
    pub fn value(&self) -> u32 {
        self.val
    }
    pub fn modulus(&self) -> u32 {
        self.modulus
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        let s = self.val as u64 + o.val as u64;
        let m = self.modulus as u64;
        Fp {
            val: if s >= m { (s - m) as u32 } else { s as u32 },
            modulus: self.modulus,
        }
    }
}
impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        let v = if self.val >= o.val {
            self.val - o.val
        } else {
            self.modulus - (o.val - self.val)
        };
        Fp {
            val: v,
            modulus: self.modulus,
        }
    }
}
impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.modulus, o.modulus);
        Fp {
            val: ((self.val as u64 * o.val as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}
impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            val: if self.val == 0 { 0 } else { self.modulus - self.val },
            modulus: self.modulus,
        }
    }
}
impl Add<&Fp> for Fp {
    type Output = Fp;
    fn add(self, o: &Fp) -> Fp {
        self + *o
    }
}
impl Sub<&Fp> for Fp {
    type Output = Fp;
    fn sub(self, o: &Fp) -> Fp {
        self - *o
    }
}
impl Mul<&Fp> for Fp {
    type Output = Fp;
    fn mul(self, o: &Fp) -> Fp {
        self * *o
    }
}
impl AddAssign<&Fp> for Fp {
    fn add_assign(&mut self, o: &Fp) {
        *self = *self + *o;
    }
}
impl SubAssign<&Fp> for Fp {
    fn sub_assign(&mut self, o: &Fp) {
        *self = *self - *o;
    }
}
impl MulAssign<&Fp> for Fp {
    fn mul_assign(&mut self, o: &Fp) {
        *self = *self * *o;
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.val == 0
    }
    fn zero_like(&self) -> Self {
        Fp {
            val: 0,
            modulus: self.modulus,
        }
    }
    fn one_like(&self) -> Self {
        Fp {
            val: 1,
            modulus: self.modulus,
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::new(n, self.modulus)
    }
    fn inv(&self) -> Option<Self> {
        if self.val == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }
}

/// The prime field with `p` elements, `p` prime and at least 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p < 5 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not supported"
            )));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::new(v, self.p)
    }

    fn legendre(&self, x: &Fp) -> u32 {
        x.pow(((self.p - 1) / 2) as u64).val
    }

    /// Tonelli–Shanks; returns some root, not necessarily canonical.
    fn any_sqrt(&self, x: &Fp) -> Option<Fp> {
        if x.val == 0 {
            return Some(*x);
        }
        if self.legendre(x) != 1 {
            return None;
        }
        let p = self.p as u64;
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = self.elem(2);
        while self.legendre(&z) == 1 {
            z = z + self.elem(1);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = x.pow(q);
        let mut r = x.pow(q.div_ceil(2));
        while t.val != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2.val != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        self.elem(0)
    }
    fn from_i64(&self, n: i64) -> Fp {
        self.elem(n)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp {
            val: rng.gen_range(0..self.p),
            modulus: self.p,
        }
    }
    fn encode(&self, x: &Fp) -> Value {
        json!({"mod": self.p, "val": x.val})
    }
    fn decode(&self, v: &Value) -> Result<Fp> {
        match v {
            Value::Object(o) => {
                let m = o.get("mod").and_then(Value::as_u64);
                let val = o.get("val").and_then(Value::as_i64);
                match (m, val) {
                    (Some(m), Some(val)) if m == self.p as u64 => Ok(self.elem(val)),
                    (Some(m), _) if m != self.p as u64 => Err(Error::Parse(format!(
                        "modulus {m} does not match field F{}",
                        self.p
                    ))),
                    _ => Err(Error::Parse(format!("not a prime field element: {v}"))),
                }
            }
            Value::Number(n) => n
                .as_i64()
                .map(|i| self.elem(i))
                .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
            Value::String(s) => {
                let r = parse_rational(s)?;
                let n = (r.numer() % BigInt::from(self.p)).to_i64().unwrap();
                let d = (r.denom() % BigInt::from(self.p)).to_i64().unwrap();
                self.elem(n).div(&self.elem(d))
            }
            _ => Err(Error::Parse(format!("not a prime field element: {v}"))),
        }
    }
    fn elements(&self) -> Option<Vec<Fp>> {
        Some((0..self.p as i64).map(|v| self.elem(v)).collect())
    }
}

impl BaseField for PrimeField {
    /// The root with the smaller representative in `0..p`.
    fn sqrt(&self, x: &Fp) -> Option<Fp> {
        let r = self.any_sqrt(x)?;
        let s = -r;
        Some(if r.val <= s.val { r } else { s })
    }

    fn square_class_rep(&self, x: &Fp) -> Result<Fp> {
        if x.val == 0 {
            return Err(Error::ZeroVector);
        }
        if self.legendre(x) == 1 {
            return Ok(self.elem(1));
        }
        let mut n = 2;
        while self.legendre(&self.elem(n)) == 1 {
            n += 1;
        }
        Ok(self.elem(n))
    }
}

// ------------------------------------------------------ quadratic extension

/// The element `re + im·√λ` of `K[x]/(x² − λ)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadElem<E> {
    pub re: E,
    pub im: E,
    pub lambda: E,
}

impl<E: Scalar> QuadElem<E> {
    pub fn new(re: E, im: E, lambda: E) -> Self {
        QuadElem { re, im, lambda }
    }

    /// The Galois conjugate `re − im·√λ`.
    pub fn conj(&self) -> Self {
        QuadElem {
            re: self.re.clone(),
            im: -self.im.clone(),
            lambda: self.lambda.clone(),
        }
    }

    /// The norm `re² − λ·im²`.
    pub fn norm(&self) -> E {
        self.re.square() - self.lambda.clone() * &self.im.square()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    /// Coordinates in the idempotent basis when `λ = r²` with `r ≠ 0`.
    pub fn to_split(&self, r: &E) -> (E, E) {
        let t = self.im.clone() * r;
        (self.re.clone() + &t, self.re.clone() - &t)
    }

    /// Inverse of [`QuadElem::to_split`].
    pub fn from_split(u: &E, v: &E, r: &E) -> Result<Self> {
        let two = u.from_i64_like(2);
        let re = (u.clone() + v).div(&two)?;
        let im = (u.clone() - v).div(&(two * r))?;
        Ok(QuadElem {
            re,
            im,
            lambda: r.square(),
        })
    }
}

impl<E: Scalar> Add for QuadElem<E> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}
impl<E: Scalar> Sub for QuadElem<E> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}
impl<E: Scalar> Mul for QuadElem<E> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}
impl<E: Scalar> Neg for QuadElem<E> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadElem {
            re: -self.re,
            im: -self.im,
            lambda: self.lambda,
        }
    }
}
impl<E: Scalar> Add<&QuadElem<E>> for QuadElem<E> {
    type Output = Self;
    fn add(mut self, o: &Self) -> Self {
        self += o;
        self
    }
}
impl<E: Scalar> Sub<&QuadElem<E>> for QuadElem<E> {
    type Output = Self;
    fn sub(mut self, o: &Self) -> Self {
        self -= o;
        self
    }
}
impl<E: Scalar> Mul<&QuadElem<E>> for QuadElem<E> {
    type Output = Self;
    fn mul(mut self, o: &Self) -> Self {
        self *= o;
        self
    }
}
impl<E: Scalar> AddAssign<&QuadElem<E>> for QuadElem<E> {
    fn add_assign(&mut self, o: &Self) {
        debug_assert_eq!(self.lambda, o.lambda);
        self.re += &o.re;
        self.im += &o.im;
    }
}
impl<E: Scalar> SubAssign<&QuadElem<E>> for QuadElem<E> {
    fn sub_assign(&mut self, o: &Self) {
        debug_assert_eq!(self.lambda, o.lambda);
        self.re -= &o.re;
        self.im -= &o.im;
    }
}
impl<E: Scalar> MulAssign<&QuadElem<E>> for QuadElem<E> {
    fn mul_assign(&mut self, o: &Self) {
        debug_assert_eq!(self.lambda, o.lambda);
        if o.im.is_zero() {
            self.re *= &o.re;
            self.im *= &o.re;
            return;
        }
        let re = self.re.clone() * &o.re + &(self.lambda.clone() * &self.im * &o.im);
        let im = self.re.clone() * &o.im + &(self.im.clone() * &o.re);
        self.re = re;
        self.im = im;
    }
}

impl<E: Scalar> Scalar for QuadElem<E> {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn zero_like(&self) -> Self {
        QuadElem {
            re: self.re.zero_like(),
            im: self.re.zero_like(),
            lambda: self.lambda.clone(),
        }
    }
    fn one_like(&self) -> Self {
        QuadElem {
            re: self.re.one_like(),
            im: self.re.zero_like(),
            lambda: self.lambda.clone(),
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        QuadElem {
            re: self.re.from_i64_like(n),
            im: self.re.zero_like(),
            lambda: self.lambda.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(QuadElem {
            re: self.re.clone() * &n,
            im: -(self.im.clone() * &n),
            lambda: self.lambda.clone(),
        })
    }
}

/// The algebra `K[x]/(x² − λ)` over a base field.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt<K: BaseField> {
    base: K,
    lambda: K::Elem,
}

impl<K: BaseField> QuadExt<K> {
    /// Any nonzero `λ` is accepted; for a square `λ` the algebra is split.
    pub fn new(base: K, lambda: K::Elem) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::InvalidField("lambda must be nonzero".into()));
        }
        Ok(QuadExt { base, lambda })
    }

    pub fn base(&self) -> &K {
        &self.base
    }

    pub fn lambda(&self) -> &K::Elem {
        &self.lambda
    }

    pub fn is_split(&self) -> bool {
        self.base.is_square(&self.lambda)
    }

    pub fn elem(&self, re: K::Elem, im: K::Elem) -> QuadElem<K::Elem> {
        QuadElem::new(re, im, self.lambda.clone())
    }

    pub fn embed(&self, x: &K::Elem) -> QuadElem<K::Elem> {
        self.elem(x.clone(), self.base.zero())
    }

    /// The generator `√λ`.
    pub fn sqrt_lambda(&self) -> QuadElem<K::Elem> {
        self.elem(self.base.zero(), self.base.one())
    }
}

impl<K: BaseField> Field for QuadExt<K> {
    type Elem = QuadElem<K::Elem>;

    fn zero(&self) -> Self::Elem {
        self.elem(self.base.zero(), self.base.zero())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.elem(self.base.from_i64(n), self.base.zero())
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Quadratic {
            base: Box::new(self.base.descriptor()),
            lambda: match self.base.encode(&self.lambda) {
                Value::String(s) => s,
                v => v.to_string(),
            },
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.elem(self.base.random(rng), self.base.random(rng))
    }
    fn encode(&self, x: &Self::Elem) -> Value {
        json!({
            "lambda": self.base.encode(&self.lambda),
            "re": self.base.encode(&x.re),
            "im": self.base.encode(&x.im),
        })
    }
    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        match v {
            Value::Object(o) => {
                if let Some(l) = o.get("lambda") {
                    if self.base.decode(l)? != self.lambda {
                        return Err(Error::Parse("lambda does not match".into()));
                    }
                }
                let re = o.get("re").map(|x| self.base.decode(x)).transpose()?;
                let im = o.get("im").map(|x| self.base.decode(x)).transpose()?;
                Ok(self.elem(
                    re.unwrap_or_else(|| self.base.zero()),
                    im.unwrap_or_else(|| self.base.zero()),
                ))
            }
            other => Ok(self.embed(&self.base.decode(other)?)),
        }
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let mut out = Vec::with_capacity(base.len() * base.len());
        for a in &base {
            for b in &base {
                out.push(self.elem(a.clone(), b.clone()));
            }
        }
        Some(out)
    }
}

/// Convenience: the integer `n` as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience: the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical representative of `x` modulo `p` for an integer-valued rational.
pub fn reduce_integer(x: &BigInt, p: u32) -> u32 {
    x.mod_floor(&BigInt::from(p)).to_u32().unwrap()
}
