//! Exact coefficient rings: integers, integers mod N, integers localized away
//! from a finite set of primes, and quadratic extensions `w^2 + b*w + c = 0`
//! of those, each with an optional conjugation automorphism.
//!
//! Every element is kept in a canonical form so that structural equality is
//! ring equality: residues are reduced mod N, fractions are in lowest terms
//! with denominator supported on the inverted prime set, and quadratic parts
//! are reduced by the defining relation.

mod group_ring;
mod laurent;
mod literal;
mod matrix;
mod poly;

pub use group_ring::{GroupAction, TwistedGroupRingElement};
pub use laurent::TwistedLaurentMatrix;
pub use matrix::Matrix;
pub use poly::{Polynomial, TruncatedSeries};

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Description of one of the supported coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    /// The ring of integers.
    Integers,
    /// Integers mod N, N >= 2.
    Mod(BigUint),
    /// Integers with the primes in the set inverted.
    Localized(BTreeSet<u64>),
    /// Base ring extended by `w` with `w^2 + b*w + c = 0`.
    Quadratic {
        base: Box<RingDescriptor>,
        b: BigInt,
        c: BigInt,
    },
}

/// Canonical coordinates of a ring element. The interpretation depends on the
/// descriptor the value travels with; containers (matrices, series) carry one
/// descriptor for all their entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Frac(BigRational),
    Quad(Box<Scalar>, Box<Scalar>),
}

/// An element paired with its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    pub ring: RingDescriptor,
    pub value: Scalar,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Mod(n) => write!(f, "Z/{n}"),
            RingDescriptor::Localized(s) => {
                let primes: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "Z[1/{{{}}}]", primes.join(","))
            }
            RingDescriptor::Quadratic { base, b, c } => match base.as_ref() {
                RingDescriptor::Integers => write!(f, "Q2({b},{c})"),
                RingDescriptor::Mod(n) => write!(f, "Q2({b},{c})/{n}"),
                other => write!(f, "Q2({b},{c}) over {other}"),
            },
        }
    }
}

impl RingDescriptor {
    pub fn integers() -> Self {
        RingDescriptor::Integers
    }

    pub fn modulo(n: u64) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        RingDescriptor::Mod(BigUint::from(n))
    }

    pub fn localized<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        for &p in &set {
            if !is_prime_u64(p) {
                return Err(Error::MalformedDescriptor(format!(
                    "{p} is not prime in localization set"
                )));
            }
        }
        Ok(RingDescriptor::Localized(set))
    }

    pub fn quadratic(base: RingDescriptor, b: i64, c: i64) -> Result<Self> {
        if !base.is_commutative_base() {
            return Err(Error::MalformedDescriptor(
                "quadratic base must not itself be quadratic".into(),
            ));
        }
        Ok(RingDescriptor::Quadratic {
            base: Box::new(base),
            b: BigInt::from(b),
            c: BigInt::from(c),
        })
    }

    fn is_commutative_base(&self) -> bool {
        !matches!(self, RingDescriptor::Quadratic { .. })
    }

    /// Parse the string forms "Z", "Z/12", "Z[1/{2,3}]", "Q2(b,c)", "Q2(b,c)/N".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(RingDescriptor::Integers);
        }
        if let Some(rest) = s.strip_prefix("Z/") {
            let n: u64 = rest
                .parse()
                .map_err(|_| Error::MalformedDescriptor(s.into()))?;
            if n < 2 {
                return Err(Error::MalformedDescriptor(format!("modulus {n} < 2")));
            }
            return Ok(RingDescriptor::modulo(n));
        }
        if let Some(rest) = s.strip_prefix("Z[1/{") {
            let inner = rest
                .strip_suffix("}]")
                .ok_or_else(|| Error::MalformedDescriptor(s.into()))?;
            let mut primes = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    let p: u64 = part
                        .trim()
                        .parse()
                        .map_err(|_| Error::MalformedDescriptor(s.into()))?;
                    primes.push(p);
                }
            }
            return RingDescriptor::localized(primes);
        }
        if let Some(rest) = s.strip_prefix("Q2(") {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::MalformedDescriptor(s.into()))?;
            let args = &rest[..close];
            let tail = &rest[close + 1..];
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::MalformedDescriptor(s.into()));
            }
            let b: i64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| Error::MalformedDescriptor(s.into()))?;
            let c: i64 = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::MalformedDescriptor(s.into()))?;
            let base = if tail.is_empty() {
                RingDescriptor::Integers
            } else if let Some(n) = tail.strip_prefix('/') {
                let n: u64 = n
                    .parse()
                    .map_err(|_| Error::MalformedDescriptor(s.into()))?;
                if n < 2 {
                    return Err(Error::MalformedDescriptor(format!("modulus {n} < 2")));
                }
                RingDescriptor::modulo(n)
            } else {
                return Err(Error::MalformedDescriptor(s.into()));
            };
            return RingDescriptor::quadratic(base, b, c);
        }
        Err(Error::MalformedDescriptor(s.into()))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            RingDescriptor::Integers | RingDescriptor::Mod(_) => Scalar::Int(BigInt::zero()),
            RingDescriptor::Localized(_) => Scalar::Frac(BigRational::zero()),
            RingDescriptor::Quadratic { base, .. } => {
                Scalar::Quad(Box::new(base.zero()), Box::new(base.zero()))
            }
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            RingDescriptor::Integers => Scalar::Int(BigInt::one()),
            RingDescriptor::Mod(n) => {
                if n == &BigUint::one() {
                    Scalar::Int(BigInt::zero())
                } else {
                    Scalar::Int(BigInt::one())
                }
            }
            RingDescriptor::Localized(_) => Scalar::Frac(BigRational::one()),
            RingDescriptor::Quadratic { base, .. } => {
                Scalar::Quad(Box::new(base.one()), Box::new(base.zero()))
            }
        }
    }

    /// The generator `w` of a quadratic extension.
    pub fn omega(&self) -> Result<Scalar> {
        match self {
            RingDescriptor::Quadratic { base, .. } => {
                Ok(Scalar::Quad(Box::new(base.zero()), Box::new(base.one())))
            }
            _ => Err(Error::MalformedLiteral(
                "w only exists in quadratic extensions".into(),
            )),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            RingDescriptor::Integers => Scalar::Int(v.clone()),
            RingDescriptor::Mod(n) => Scalar::Int(reduce_mod(v, n)),
            RingDescriptor::Localized(_) => Scalar::Frac(BigRational::from(v.clone())),
            RingDescriptor::Quadratic { base, .. } => {
                Scalar::Quad(Box::new(base.from_bigint(v)), Box::new(base.zero()))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (RingDescriptor::Integers, Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (RingDescriptor::Mod(n), Scalar::Int(a), Scalar::Int(b)) => {
                Scalar::Int(reduce_mod(&(a + b), n))
            }
            (RingDescriptor::Localized(_), Scalar::Frac(a), Scalar::Frac(b)) => {
                Scalar::Frac(a + b)
            }
            (RingDescriptor::Quadratic { base, .. }, Scalar::Quad(a1, b1), Scalar::Quad(a2, b2)) => {
                Scalar::Quad(Box::new(base.add(a1, a2)), Box::new(base.add(b1, b2)))
            }
            _ => panic!("scalar does not match ring {self}"),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match (self, x) {
            (RingDescriptor::Integers, Scalar::Int(a)) => Scalar::Int(-a),
            (RingDescriptor::Mod(n), Scalar::Int(a)) => Scalar::Int(reduce_mod(&(-a), n)),
            (RingDescriptor::Localized(_), Scalar::Frac(a)) => Scalar::Frac(-a),
            (RingDescriptor::Quadratic { base, .. }, Scalar::Quad(a, b)) => {
                Scalar::Quad(Box::new(base.neg(a)), Box::new(base.neg(b)))
            }
            _ => panic!("scalar does not match ring {self}"),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self, x, y) {
            (RingDescriptor::Integers, Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (RingDescriptor::Mod(n), Scalar::Int(a), Scalar::Int(b)) => {
                Scalar::Int(reduce_mod(&(a * b), n))
            }
            (RingDescriptor::Localized(_), Scalar::Frac(a), Scalar::Frac(b)) => {
                Scalar::Frac(a * b)
            }
            (RingDescriptor::Quadratic { base, b, c }, Scalar::Quad(a1, b1), Scalar::Quad(a2, b2)) => {
                // (a1 + b1 w)(a2 + b2 w) with w^2 = -b w - c
                let bb = base.from_bigint(b);
                let cc = base.from_bigint(c);
                let a1a2 = base.mul(a1, a2);
                let b1b2 = base.mul(b1, b2);
                let cross = base.add(&base.mul(a1, b2), &base.mul(b1, a2));
                let re = base.sub(&a1a2, &base.mul(&cc, &b1b2));
                let im = base.sub(&cross, &base.mul(&bb, &b1b2));
                Scalar::Quad(Box::new(re), Box::new(im))
            }
            _ => panic!("scalar does not match ring {self}"),
        }
    }

    pub fn pow(&self, x: &Scalar, e: u64) -> Scalar {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Int(a) => a.is_zero(),
            Scalar::Frac(a) => a.is_zero(),
            Scalar::Quad(a, b) => {
                let base = self.quad_base();
                base.is_zero(a) && base.is_zero(b)
            }
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        x == &self.one()
    }

    fn quad_base(&self) -> &RingDescriptor {
        match self {
            RingDescriptor::Quadratic { base, .. } => base,
            _ => panic!("not a quadratic extension"),
        }
    }

    /// Multiplicative inverse, when the element is a unit.
    pub fn try_inv(&self, x: &Scalar) -> Result<Scalar> {
        if self.is_zero(x) {
            return Err(Error::DivisionByNonUnit("zero".into()));
        }
        match (self, x) {
            (RingDescriptor::Integers, Scalar::Int(a)) => {
                if a.magnitude().is_one() {
                    Ok(Scalar::Int(a.clone()))
                } else {
                    Err(Error::DivisionByNonUnit(format!("{a} in Z")))
                }
            }
            (RingDescriptor::Mod(n), Scalar::Int(a)) => {
                let ni = BigInt::from(n.clone());
                let e = a.extended_gcd(&ni);
                if e.gcd.is_one() {
                    Ok(Scalar::Int(reduce_mod(&e.x, n)))
                } else {
                    Err(Error::DivisionByNonUnit(format!("{a} in Z/{n}")))
                }
            }
            (RingDescriptor::Localized(s), Scalar::Frac(a)) => {
                let inv = a.recip();
                if denominator_supported(&inv, s) {
                    Ok(Scalar::Frac(inv))
                } else {
                    Err(Error::DivisionByNonUnit(format!("{a} in {self}")))
                }
            }
            (RingDescriptor::Quadratic { base, b, .. }, Scalar::Quad(a1, b1)) => {
                // x * conj(x) = a^2 - a b B + b^2 C lies in the base ring.
                let conj = self.apply_conjugation(x);
                let norm = self.mul(x, &conj);
                let norm_base = match &norm {
                    Scalar::Quad(re, im) => {
                        debug_assert!(base.is_zero(im), "norm must be in the base ring");
                        let _ = (a1, b1, b);
                        (**re).clone()
                    }
                    _ => unreachable!(),
                };
                let ninv = base.try_inv(&norm_base)?;
                let ninv = Scalar::Quad(Box::new(ninv), Box::new(base.zero()));
                Ok(self.mul(&conj, &ninv))
            }
            _ => panic!("scalar does not match ring {self}"),
        }
    }

    /// Conjugation `w -> -b - w` on a quadratic extension; identity elsewhere.
    pub fn apply_conjugation(&self, x: &Scalar) -> Scalar {
        match (self, x) {
            (RingDescriptor::Quadratic { base, b, .. }, Scalar::Quad(a1, b1)) => {
                // a + b1 (-b - w) = (a - b1 * b) - b1 w
                let bb = base.from_bigint(b);
                let re = base.sub(a1, &base.mul(b1, &bb));
                Scalar::Quad(Box::new(re), Box::new(base.neg(b1)))
            }
            _ => x.clone(),
        }
    }

    /// Whether the additive group of this ring is torsion-free.
    pub fn is_torsion_free(&self) -> bool {
        match self {
            RingDescriptor::Integers | RingDescriptor::Localized(_) => true,
            RingDescriptor::Mod(_) => false,
            RingDescriptor::Quadratic { base, .. } => base.is_torsion_free(),
        }
    }

    /// Whether the prime p is invertible in this ring.
    pub fn prime_is_invertible(&self, p: u64) -> bool {
        match self {
            RingDescriptor::Integers => false,
            RingDescriptor::Mod(n) => {
                let p = BigUint::from(p);
                n.gcd(&p).is_one()
            }
            RingDescriptor::Localized(s) => s.contains(&p),
            RingDescriptor::Quadratic { base, .. } => base.prime_is_invertible(p),
        }
    }

    /// Whether the descriptor denotes a field (used to decide when polynomial
    /// gcd reduction is available).
    pub fn is_field(&self) -> bool {
        match self {
            RingDescriptor::Mod(n) => n.to_u64_digits().first().is_some_and(|&m| {
                n.bits() <= 64 && is_prime_u64(m)
            }),
            _ => false,
        }
    }

    /// All elements of a finite ring, in a stable order. Errors on infinite rings.
    pub fn enumerate(&self) -> Result<Vec<Scalar>> {
        match self {
            RingDescriptor::Mod(n) => {
                let n = n
                    .to_u64_digits()
                    .first()
                    .copied()
                    .filter(|_| n.bits() <= 20)
                    .ok_or_else(|| Error::InvalidInput("modulus too large to enumerate".into()))?;
                Ok((0..n).map(|i| Scalar::Int(BigInt::from(i))).collect())
            }
            RingDescriptor::Quadratic { base, .. } => {
                let inner = base.enumerate()?;
                let mut out = Vec::new();
                for a in &inner {
                    for b in &inner {
                        out.push(Scalar::Quad(Box::new(a.clone()), Box::new(b.clone())));
                    }
                }
                Ok(out)
            }
            _ => Err(Error::InvalidInput(format!("ring {self} is infinite"))),
        }
    }

    /// Evaluate a literal expression in this ring. See the module docs of
    /// `literal` for the grammar.
    pub fn eval(&self, literal: &str) -> Result<RingElement> {
        let value = literal::eval(self, literal)?;
        Ok(RingElement {
            ring: self.clone(),
            value,
        })
    }
}

/// Evaluate a literal in a ring, returning a canonical element.
pub fn ring_eval(descriptor: &RingDescriptor, literal: &str) -> Result<RingElement> {
    descriptor.eval(literal)
}

/// Ring automorphism tag: identity, or conjugation on a quadratic extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutKind {
    Identity,
    Conjugation,
}

impl AutKind {
    pub fn compose(self, other: AutKind) -> AutKind {
        if self == other {
            AutKind::Identity
        } else {
            AutKind::Conjugation
        }
    }

    pub fn pow(self, e: i64) -> AutKind {
        match self {
            AutKind::Identity => AutKind::Identity,
            AutKind::Conjugation => {
                if e.rem_euclid(2) == 0 {
                    AutKind::Identity
                } else {
                    AutKind::Conjugation
                }
            }
        }
    }

    pub fn parse(s: &str) -> Result<AutKind> {
        match s {
            "id" => Ok(AutKind::Identity),
            "conj" => Ok(AutKind::Conjugation),
            other => Err(Error::InvalidInput(format!("unknown twist tag {other}"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            AutKind::Identity => "id",
            AutKind::Conjugation => "conj",
        }
    }
}

/// A ring automorphism of one of the supported rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAutomorphism {
    pub ring: RingDescriptor,
    pub kind: AutKind,
}

impl RingAutomorphism {
    pub fn identity(ring: RingDescriptor) -> Self {
        RingAutomorphism {
            ring,
            kind: AutKind::Identity,
        }
    }

    pub fn conjugation(ring: RingDescriptor) -> Result<Self> {
        match &ring {
            RingDescriptor::Quadratic { .. } => Ok(RingAutomorphism {
                ring,
                kind: AutKind::Conjugation,
            }),
            other => Err(Error::MalformedDescriptor(format!(
                "conjugation needs a quadratic extension, got {other}"
            ))),
        }
    }

    pub fn new(ring: RingDescriptor, kind: AutKind) -> Result<Self> {
        match kind {
            AutKind::Identity => Ok(Self::identity(ring)),
            AutKind::Conjugation => Self::conjugation(ring),
        }
    }

    pub fn apply(&self, x: &Scalar) -> Scalar {
        match self.kind {
            AutKind::Identity => x.clone(),
            AutKind::Conjugation => self.ring.apply_conjugation(x),
        }
    }

    /// The automorphism alpha^e (alpha has order at most 2 here, so negative
    /// exponents are fine).
    pub fn pow(&self, e: i64) -> RingAutomorphism {
        RingAutomorphism {
            ring: self.ring.clone(),
            kind: self.kind.pow(e),
        }
    }

    pub fn apply_pow(&self, x: &Scalar, e: i64) -> Scalar {
        match self.kind.pow(e) {
            AutKind::Identity => x.clone(),
            AutKind::Conjugation => self.ring.apply_conjugation(x),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.kind == AutKind::Identity
    }

    pub fn order(&self) -> u32 {
        match self.kind {
            AutKind::Identity => 1,
            AutKind::Conjugation => 2,
        }
    }
}

fn reduce_mod(v: &BigInt, n: &BigUint) -> BigInt {
    let n = BigInt::from(n.clone());
    v.mod_floor(&n)
}

fn denominator_supported(x: &BigRational, primes: &BTreeSet<u64>) -> bool {
    let mut d = x.denom().abs().to_biguint().expect("abs");
    for &p in primes {
        let p = BigUint::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d.is_one()
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Express a scalar over a localized ring (or Z) as a rational number.
/// Panics on modular scalars; quadratic scalars are rejected.
pub fn scalar_to_rational(ring: &RingDescriptor, x: &Scalar) -> Result<BigRational> {
    match (ring, x) {
        (RingDescriptor::Integers, Scalar::Int(a)) => Ok(BigRational::from(a.clone())),
        (RingDescriptor::Localized(_), Scalar::Frac(a)) => Ok(a.clone()),
        _ => Err(Error::InvalidInput(format!(
            "cannot express element of {ring} as a rational"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingDescriptor {
        RingDescriptor::Integers
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Z", "Z/12", "Z[1/{2,3}]", "Q2(0,1)", "Q2(0,1)/2"] {
            let d = RingDescriptor::parse(s).unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!(RingDescriptor::parse("Z/1").is_err());
        assert!(RingDescriptor::parse("Z[1/{4}]").is_err());
        assert!(RingDescriptor::parse("Zz").is_err());
    }

    #[test]
    fn ring_eval_examples() {
        // (mod 12, "7+8") -> 3
        let d = RingDescriptor::modulo(12);
        assert_eq!(d.eval("7+8").unwrap().value, d.from_i64(3));
        // (quadratic b=0,c=1 over Z, "w*w") -> -1
        let q = RingDescriptor::quadratic(z(), 0, 1).unwrap();
        assert_eq!(q.eval("w*w").unwrap().value, q.from_i64(-1));
        assert_eq!(q.eval("ω·ω").unwrap().value, q.from_i64(-1));
        // (Z localized away from {2}, "3/4") canonical
        let l = RingDescriptor::localized([2]).unwrap();
        let e = l.eval("3/4").unwrap();
        assert_eq!(
            e.value,
            Scalar::Frac(BigRational::new(BigInt::from(3), BigInt::from(4)))
        );
        // 3/5 is not allowed away from {2}
        assert!(l.eval("3/5").is_err());
        assert!(z().eval("1/2").is_err());
        assert!(z().eval("2+*3").is_err());
    }

    #[test]
    fn conjugation_involution_and_homomorphism() {
        let q = RingDescriptor::quadratic(z(), -1, 3).unwrap();
        let sigma = RingAutomorphism::conjugation(q.clone()).unwrap();
        let xs = [
            q.eval("1+2*w").unwrap().value,
            q.eval("w*w - 4").unwrap().value,
            q.eval("(2-w)*(3+w)").unwrap().value,
        ];
        for x in &xs {
            assert_eq!(sigma.apply(&sigma.apply(x)), *x);
            for y in &xs {
                assert_eq!(
                    sigma.apply(&q.mul(x, y)),
                    q.mul(&sigma.apply(x), &sigma.apply(y))
                );
                assert_eq!(
                    sigma.apply(&q.add(x, y)),
                    q.add(&sigma.apply(x), &sigma.apply(y))
                );
            }
        }
    }

    #[test]
    fn quadratic_inverse() {
        // Gaussian integers mod 5: (1+2w) should be invertible.
        let q = RingDescriptor::quadratic(RingDescriptor::modulo(5), 0, 1).unwrap();
        let x = q.eval("1+2*w").unwrap().value;
        let xi = q.try_inv(&x).unwrap();
        assert!(q.is_one(&q.mul(&x, &xi)));
    }

    #[test]
    fn localized_units() {
        let l = RingDescriptor::localized([2, 3]).unwrap();
        assert!(l.try_inv(&l.from_i64(6)).is_ok());
        assert!(l.try_inv(&l.from_i64(5)).is_err());
        assert!(!l.prime_is_invertible(5));
        assert!(l.prime_is_invertible(2));
    }

    #[test]
    fn mod_one_collapses() {
        let d = RingDescriptor::modulo(12);
        assert_eq!(d.eval("-1").unwrap().value, d.from_i64(11));
    }
}
