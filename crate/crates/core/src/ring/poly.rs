//! Polynomials and truncated power series over the supported rings.

use super::{RingDescriptor, Scalar};
use crate::error::{Error, Result};

/// Dense polynomial; trailing zero coefficients are trimmed so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: RingDescriptor,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(ring: RingDescriptor, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { ring, coeffs }
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        Polynomial {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        let one = ring.one();
        Polynomial::new(ring, vec![one])
    }

    pub fn from_i64(ring: &RingDescriptor, coeffs: &[i64]) -> Self {
        Polynomial::new(
            ring.clone(),
            coeffs.iter().map(|&c| ring.from_i64(c)).collect(),
        )
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.ring.is_one(&self.coeffs[0])
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial::new(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(
            self.ring.clone(),
            self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Polynomial::new(self.ring.clone(), coeffs)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        Polynomial::new(
            self.ring.clone(),
            self.coeffs.iter().map(|c| self.ring.mul(s, c)).collect(),
        )
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ring.mul(&self.ring.from_i64(i as i64), c))
            .collect();
        Polynomial::new(self.ring.clone(), coeffs)
    }

    /// Division with remainder by a polynomial whose leading coefficient is a
    /// unit. Used for gcd reduction over fields and Z (monic divisors).
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::DivisionByNonUnit("zero polynomial".into()))?;
        let lead_inv = self.ring.try_inv(&divisor.coeff(dd))?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ring.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = self.ring.mul(&rem[k], &lead_inv);
            if !self.ring.is_zero(&q) {
                quot[k - dd] = q.clone();
                for i in 0..=dd {
                    let sub = self.ring.mul(&q, &divisor.coeff(i));
                    rem[k - dd + i] = self.ring.sub(&rem[k - dd + i], &sub);
                }
            }
            rem.pop();
        }
        Ok((
            Polynomial::new(self.ring.clone(), quot),
            Polynomial::new(self.ring.clone(), rem),
        ))
    }
}

/// Power series known exactly modulo t^{order+1}; stores coefficients of
/// t^0 .. t^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub ring: RingDescriptor,
    order: usize,
    coeffs: Vec<Scalar>,
}

impl TruncatedSeries {
    pub fn new(ring: RingDescriptor, order: usize, mut coeffs: Vec<Scalar>) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() <= order {
            coeffs.push(ring.zero());
        }
        TruncatedSeries {
            ring,
            order,
            coeffs,
        }
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        TruncatedSeries::new(p.ring.clone(), order, p.coeffs().to_vec())
    }

    pub fn one(ring: RingDescriptor, order: usize) -> Self {
        let one = ring.one();
        TruncatedSeries::new(ring, order, vec![one])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order);
        TruncatedSeries::new(self.ring.clone(), order, self.coeffs.clone())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        if self.order != other.order {
            return Err(Error::ContextMismatch(format!(
                "series orders {} vs {}",
                self.order, other.order
            )));
        }
        let mut coeffs = vec![self.ring.zero(); self.order + 1];
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                let p = self.ring.mul(&self.coeffs[i], &other.coeffs[j]);
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &p);
            }
        }
        Ok(TruncatedSeries::new(self.ring.clone(), self.order, coeffs))
    }

    /// Multiplicative inverse; requires the constant term to be a unit.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0_inv = self.ring.try_inv(&self.coeffs[0])?;
        let mut inv = vec![self.ring.zero(); self.order + 1];
        inv[0] = c0_inv.clone();
        for k in 1..=self.order {
            let mut acc = self.ring.zero();
            for i in 1..=k {
                acc = self.ring.add(&acc, &self.ring.mul(&self.coeffs[i], &inv[k - i]));
            }
            inv[k] = self.ring.neg(&self.ring.mul(&c0_inv, &acc));
        }
        Ok(TruncatedSeries::new(
            self.ring.clone(),
            self.order,
            inv,
        ))
    }

    pub fn pow(&self, e: usize) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::one(self.ring.clone(), self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingDescriptor {
        RingDescriptor::Integers
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Polynomial::from_i64(&z(), &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn series_inverse() {
        let p = Polynomial::from_i64(&z(), &[1, -3]);
        let s = TruncatedSeries::from_polynomial(&p, 4);
        let inv = s.inverse().unwrap();
        // 1/(1-3t) = 1 + 3t + 9t^2 + ...
        assert_eq!(*inv.coeff(2), z().from_i64(9));
        assert_eq!(
            s.mul(&inv).unwrap(),
            TruncatedSeries::one(z(), 4)
        );
    }

    #[test]
    fn div_rem_exact() {
        let num = Polynomial::from_i64(&z(), &[1, 0, -1]); // 1 - t^2
        let den = Polynomial::from_i64(&z(), &[1, -1]); // 1 - t
        let (q, r) = num.div_rem(&den).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_i64(&z(), &[1, 1]));
    }
}
