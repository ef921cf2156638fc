//! Finite fields GF(p^m) in the polynomial basis.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! packing its coefficient vector over GF(p), so `0` and `1` are the zero and
//! one of the field and prime-field residues are their own encodings.
//! Multiplication goes through exponent/logarithm tables with respect to the
//! designated primitive element; both tables are derived once from the
//! polynomial arithmetic modulo the defining polynomial.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// A field element in packed polynomial-basis form. Only meaningful together
/// with the [`Field`] that produced it.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Binary primitive polynomials, ascending-degree bit masks, indexed by m.
const BINARY_MODULI: [u32; 21] = [
    0, 0b10, 0b111, 0b1011, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B,
    0x4443, 0x8003, 0x1100B, 0x20009, 0x40081, 0x80027, 0x100009,
];

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    // exp has length 2(q-1) so that log a + log b never needs reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

/// A finite field GF(p^m). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus
                && self.0.primitive == other.0.primitive)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.0.p)
            .field("m", &self.0.m)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl Field {
    /// Builds GF(p^m). With `modulus == None` a built-in primitive polynomial
    /// is used; for GF(16) that is x^4 + x + 1. Coefficients are listed in
    /// ascending degree and must describe a monic polynomial of degree m.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let q = match (q, modulus) {
            (Some(q), _) => q,
            (None, None) => return Err(Error::NoTableEntry { p, m }),
            (None, Some(_)) => return Err(Error::FieldTooLarge { p, m }),
        };
        let p32 = p as u32;
        let modulus: Vec<u32> = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        found: coeffs.len(),
                    });
                }
                if let Some(&bad) = coeffs.iter().find(|&&c| c >= p) {
                    return Err(Error::BadModulusCoefficient(bad));
                }
                if coeffs[m as usize] != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        found: coeffs.len(),
                    });
                }
                let poly: Vec<u32> = coeffs.iter().map(|&c| c as u32).collect();
                if m >= 2 && !poly::is_irreducible(&poly, p32) {
                    return Err(Error::ReduciblePolynomial);
                }
                poly
            }
            None => default_modulus(p32, m),
        };
        Ok(Field(Arc::new(FieldInner::build(p32, m, q as u32, modulus))))
    }

    /// Prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial, ascending coefficients, length m + 1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.0.primitive
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    /// Element with the given packed value.
    pub fn element(&self, value: u32) -> Result<Elem> {
        if value < self.0.q {
            Ok(Elem(value))
        } else {
            Err(Error::ValueOutOfField(value.to_string()))
        }
    }

    /// Embeds an integer of the prime subfield (taken mod p).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::ValueOutOfField(format!("{coeffs:?}")));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(Error::ValueOutOfField(format!("{coeffs:?}")));
            }
            v = v * self.0.p as u64 + c as u64;
        }
        Ok(Elem(v as u32))
    }

    /// Coefficient vector of length m, ascending degree.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        poly::digits(a.0, self.0.p, self.0.m as usize)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.p == 2 {
            Elem(a.0 ^ b.0)
        } else if f.m == 1 {
            let s = a.0 + b.0;
            Elem(if s >= f.p { s - f.p } else { s })
        } else if let Some(t) = &f.add_table {
            Elem(t[(a.0 * f.q + b.0) as usize])
        } else {
            Elem(poly::add_packed(a.0, b.0, f.p, f.m))
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let f = &*self.0;
        Elem(f.exp[(f.log[a.0 as usize] + f.log[b.0 as usize]) as usize])
    }

    /// `a + b * c`, the inner step of every elimination loop.
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.add(a, self.mul(b, c))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &*self.0;
        let l = f.log[a.0 as usize];
        Ok(Elem(f.exp[((f.q - 1 - l) % (f.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent. `pow(0, 0) == 1` (empty product);
    /// a negative exponent on zero is a division by zero.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if e == 0 {
            return Ok(Elem::ONE);
        }
        if a.is_zero() {
            return if e > 0 {
                Ok(Elem::ZERO)
            } else {
                Err(Error::DivisionByZero)
            };
        }
        let f = &*self.0;
        let order = (f.q - 1) as i128;
        let l = (f.log[a.0 as usize] as i128 * e as i128).rem_euclid(order);
        Ok(Elem(f.exp[l as usize]))
    }

    /// `a^n` for a non-negative exponent.
    #[inline]
    pub fn pow_u(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let f = &*self.0;
        let l = (f.log[a.0 as usize] as u64 * (n % (f.q as u64 - 1))) % (f.q as u64 - 1);
        Elem(f.exp[l as usize])
    }

    /// The Frobenius power `a^(p^e)` for `0 <= e < m`.
    pub fn frobenius(&self, a: Elem, e: u32) -> Result<Elem> {
        self.check_galois_exponent(e)?;
        Ok(self.frobenius_unchecked(a, e))
    }

    pub(crate) fn check_galois_exponent(&self, e: u32) -> Result<()> {
        if e >= self.0.m {
            Err(Error::EOutOfRange { e, m: self.0.m })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn frobenius_unchecked(&self, a: Elem, e: u32) -> Elem {
        if e == 0 {
            return a;
        }
        self.pow_u(a, (self.0.p as u64).pow(e))
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// `primitive^k`.
    pub fn exp(&self, k: i64) -> Elem {
        let order = (self.0.q - 1) as i64;
        Elem(self.0.exp[k.rem_euclid(order) as usize])
    }

    /// All q elements: zero, then primitive^0, primitive^1, ..., primitive^(q-2).
    pub fn elements(&self) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.0.q as usize);
        out.push(Elem::ZERO);
        out.extend(self.0.exp[..(self.0.q - 1) as usize].iter().map(|&v| Elem(v)));
        out
    }

    /// Field elements in increasing packed order.
    pub fn elements_by_value(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(0..self.0.q))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(1..self.0.q))
    }

    /// Parses one element. Accepted forms: a decimal prime-field residue
    /// (`"7"`), power notation in the primitive element (`"w"`, `"w^13"`,
    /// `"w^-1"`), and an explicit coefficient list (`"[1,1,0,0]"`, ascending
    /// degree, exactly m entries).
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let syntax = || Error::Syntax(s.to_string());
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(syntax)?;
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() != self.0.m as usize {
                return Err(Error::ValueOutOfField(s.to_string()));
            }
            let mut coeffs = Vec::with_capacity(parts.len());
            for part in parts {
                let c: u64 = part.parse().map_err(|_| syntax())?;
                if c >= self.0.p as u64 {
                    return Err(Error::ValueOutOfField(s.to_string()));
                }
                coeffs.push(c as u32);
            }
            return self.from_coeffs(&coeffs);
        }
        if let Some(rest) = s.strip_prefix('w').or_else(|| s.strip_prefix('ω')) {
            let rest = rest.trim();
            if rest.is_empty() {
                return Ok(self.primitive());
            }
            let exp = rest.strip_prefix('^').ok_or_else(syntax)?.trim();
            let exp = exp.strip_prefix('{').and_then(|e| e.strip_suffix('}')).unwrap_or(exp);
            let k: i64 = exp.parse().map_err(|_| syntax())?;
            return Ok(self.exp(k));
        }
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            let v: u64 = s.parse().map_err(|_| Error::ValueOutOfField(s.to_string()))?;
            if v >= self.0.p as u64 {
                return Err(Error::ValueOutOfField(s.to_string()));
            }
            return Ok(Elem(v as u32));
        }
        Err(syntax())
    }

    /// Canonical text: decimal for prime fields, `0`, `1` or `w^k` with the
    /// least exponent otherwise.
    pub fn format(&self, a: Elem) -> String {
        if self.0.m == 1 {
            return a.0.to_string();
        }
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => "w".to_string(),
            Some(k) => format!("w^{k}"),
        }
    }

    pub fn parse_vector(&self, s: &str) -> Result<Vec<Elem>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.parse(t))
            .collect()
    }

    pub fn format_vector(&self, v: &[Elem]) -> Vec<String> {
        v.iter().map(|&a| self.format(a)).collect()
    }

    pub(crate) fn same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
}

/// An element bundled with its field, for checked one-off arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::ValueOutOfField(value.0.to_string()));
        }
        Ok(FieldElement {
            field: field.clone(),
            value,
        })
    }

    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        Ok(FieldElement {
            field: field.clone(),
            value: field.parse(s)?,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        self.field.same(&other.field)?;
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(FieldElement {
            field: f.clone(),
            value,
        })
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.pow(self.value, e)?,
        })
    }

    pub fn frobenius(&self, e: u32) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.frobenius(self.value, e)?,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl FieldInner {
    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> FieldInner {
        let primitive = find_primitive(p, m, q, &modulus);
        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        let x_is_generator = m > 1 && primitive.0 == p;
        for i in 0..order {
            exp[i] = cur;
            exp[i + order] = cur;
            log[cur as usize] = i as u32;
            cur = if x_is_generator {
                poly::times_x(cur, p, &modulus)
            } else {
                poly::mulmod_packed(cur, primitive.0, p, &modulus)
            };
        }
        let neg = (0..q)
            .map(|a| {
                if p == 2 {
                    a
                } else {
                    poly::neg_packed(a, p, m)
                }
            })
            .collect();
        let add_table = (p != 2 && m > 1 && q <= 1024).then(|| {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    t.push(poly::add_packed(a, b, p, m));
                }
            }
            t
        });
        FieldInner {
            p,
            m,
            q,
            modulus,
            primitive,
            exp,
            log,
            neg,
            add_table,
        }
    }
}

fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    if p == 2 {
        return poly::digits(BINARY_MODULI[m as usize], 2, m as usize + 1);
    }
    // First monic polynomial (ordered by packed lower coefficients) that is
    // irreducible and has x as a generator.
    let q = (p as u64).pow(m) as u32;
    for low in 1..q {
        let mut poly = poly::digits(low, p, m as usize);
        poly.push(1);
        if poly[0] != 0 && poly::is_irreducible(&poly, p) && has_full_order(p, q, &poly, p) {
            return poly;
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn find_primitive(p: u32, m: u32, q: u32, modulus: &[u32]) -> Elem {
    if q == 2 {
        return Elem::ONE;
    }
    if m > 1 && has_full_order(p, q, modulus, p) {
        return Elem(p);
    }
    (2..q)
        .find(|&g| has_full_order(p, q, modulus, g))
        .map(Elem)
        .expect("multiplicative group is cyclic")
}

/// `g^((q-1)/r) != 1` for every prime r dividing q - 1.
fn has_full_order(p: u32, q: u32, modulus: &[u32], g: u32) -> bool {
    if g == 0 {
        return false;
    }
    let order = (q - 1) as u64;
    prime_factors(order)
        .into_iter()
        .all(|r| poly::powmod_packed(g, order / r, p, modulus) != 1)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomial arithmetic over GF(p) on ascending coefficient vectors and on
/// packed values. Used to build and validate the tables.
pub(crate) mod poly {
    pub fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(v % p);
            v /= p;
        }
        out
    }

    pub fn pack(d: &[u32], p: u32) -> u32 {
        d.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64) as u32
    }

    pub fn add_packed(a: u32, b: u32, p: u32, m: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let (mut out, mut pw) = (0u32, 1u32);
        for _ in 0..m {
            out += ((a % p + b % p) % p) * pw;
            a /= p;
            b /= p;
            pw = pw.wrapping_mul(p);
        }
        out
    }

    pub fn neg_packed(a: u32, p: u32, m: u32) -> u32 {
        let mut a = a;
        let (mut out, mut pw) = (0u32, 1u32);
        for _ in 0..m {
            out += ((p - a % p) % p) * pw;
            a /= p;
            pw = pw.wrapping_mul(p);
        }
        out
    }

    /// Multiplication by x modulo the monic `modulus`.
    pub fn times_x(a: u32, p: u32, modulus: &[u32]) -> u32 {
        let m = modulus.len() - 1;
        let mut d = digits(a, p, m);
        let lead = d[m - 1];
        d.rotate_right(1);
        d[0] = 0;
        if lead != 0 {
            for (c, &r) in d.iter_mut().zip(modulus) {
                *c = ((*c as u64 + (p - lead) as u64 * r as u64) % p as u64) as u32;
            }
        }
        pack(&d, p)
    }

    /// Remainder of `a` modulo the monic `b`, both ascending.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
        let db = b.len() - 1;
        let p = p as u64;
        while r.len() > db {
            let lead = r.pop().unwrap() % p;
            if lead != 0 {
                let shift = r.len() - db;
                for (i, &bc) in b[..db].iter().enumerate() {
                    let idx = shift + i;
                    r[idx] = (r[idx] + (p - lead) * bc as u64) % p;
                }
            }
        }
        r.into_iter().map(|c| (c % p) as u32).collect()
    }

    pub fn mulmod(a: &[u32], b: &[u32], p: u32, modulus: &[u32]) -> Vec<u32> {
        let mut prod = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut r = rem(&prod, modulus, p);
        r.resize(modulus.len() - 1, 0);
        r
    }

    pub fn mulmod_packed(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
        let m = modulus.len() - 1;
        pack(&mulmod(&digits(a, p, m), &digits(b, p, m), p, modulus), p)
    }

    pub fn powmod_packed(g: u32, mut e: u64, p: u32, modulus: &[u32]) -> u32 {
        let m = modulus.len() - 1;
        if m == 1 {
            let (mut base, mut acc, p) = (g as u64 % p as u64, 1u64, p as u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            return acc as u32;
        }
        let mut base = digits(g, p, m);
        let mut acc = digits(1, p, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, p, modulus);
            }
            base = mulmod(&base, &base, p, modulus);
            e >>= 1;
        }
        pack(&acc, p)
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = digits(low as u32, p, d);
                g.push(1);
                if rem(f, &g, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}
