//! Matrices over a twisted Laurent extension: finite formal sums
//! `sum_l f_l * t^l` of matrix coefficients, where moving a coefficient past
//! t applies the ring automorphism: `t^l * M = alpha^l(M) * t^l`.

use super::matrix::{matrix_compose, Matrix};
use super::{RingAutomorphism, RingDescriptor};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedLaurentMatrix {
    pub ring: RingDescriptor,
    pub aut: RingAutomorphism,
    src_rank: usize,
    dst_rank: usize,
    coeffs: BTreeMap<i64, Matrix>,
}

impl TwistedLaurentMatrix {
    pub fn zero(
        ring: RingDescriptor,
        aut: RingAutomorphism,
        src_rank: usize,
        dst_rank: usize,
    ) -> Self {
        TwistedLaurentMatrix {
            ring,
            aut,
            src_rank,
            dst_rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(ring: RingDescriptor, aut: RingAutomorphism, rank: usize) -> Self {
        let mut m = Self::zero(ring.clone(), aut, rank, rank);
        m.add_term(0, Matrix::identity(ring, rank));
        m
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Matrix)>>(
        ring: RingDescriptor,
        aut: RingAutomorphism,
        src_rank: usize,
        dst_rank: usize,
        terms: I,
    ) -> Self {
        let mut m = Self::zero(ring, aut, src_rank, dst_rank);
        for (l, c) in terms {
            m.add_term(l, c);
        }
        m
    }

    pub fn src_rank(&self) -> usize {
        self.src_rank
    }

    pub fn dst_rank(&self) -> usize {
        self.dst_rank
    }

    /// Add `c * t^l`, merging with any existing coefficient and dropping zeros.
    pub fn add_term(&mut self, l: i64, c: Matrix) {
        assert_eq!(c.cols(), self.src_rank, "coefficient source rank");
        assert_eq!(c.rows(), self.dst_rank, "coefficient target rank");
        let merged = match self.coeffs.remove(&l) {
            Some(old) => old.add(&c).expect("same shape"),
            None => c,
        };
        if !merged.is_zero() {
            self.coeffs.insert(l, merged);
        }
    }

    pub fn coeff(&self, l: i64) -> Matrix {
        self.coeffs
            .get(&l)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.ring.clone(), self.src_rank, self.dst_rank))
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Matrix)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        if self.src_rank != other.src_rank || self.dst_rank != other.dst_rank {
            return Err(Error::DimensionMismatch("laurent add shape".into()));
        }
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(*l, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(
            self.ring.clone(),
            self.aut.clone(),
            self.src_rank,
            self.dst_rank,
        );
        for (l, c) in &self.coeffs {
            out.add_term(*l, c.neg());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        if self.aut != other.aut {
            return Err(Error::ContextMismatch("different twists".into()));
        }
        Ok(())
    }
}

/// The composite g after f: the coefficient of t^{l+l'} accumulates
/// g_{l'} composed with alpha^{l'} applied entrywise to f_l.
pub fn laurent_compose(
    f: &TwistedLaurentMatrix,
    g: &TwistedLaurentMatrix,
) -> Result<TwistedLaurentMatrix> {
    f.check_context(g)?;
    if g.src_rank != f.dst_rank {
        return Err(Error::DimensionMismatch(format!(
            "laurent compose: g expects rank {} but f produces rank {}",
            g.src_rank, f.dst_rank
        )));
    }
    let mut out = TwistedLaurentMatrix::zero(
        f.ring.clone(),
        f.aut.clone(),
        f.src_rank,
        g.dst_rank,
    );
    for (lf, cf) in &f.coeffs {
        for (lg, cg) in &g.coeffs {
            let twisted = cf.map_aut(&f.aut.pow(*lg));
            let prod = matrix_compose(&twisted, cg)?;
            out.add_term(lf + lg, prod);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Scalar;

    fn quad() -> RingDescriptor {
        RingDescriptor::quadratic(RingDescriptor::Integers, 0, 1).unwrap()
    }

    fn one_by_one(ring: &RingDescriptor, v: Scalar) -> Matrix {
        Matrix::new(ring.clone(), 1, 1, vec![v])
    }

    #[test]
    fn identity_is_neutral() {
        let ring = quad();
        let aut = RingAutomorphism::conjugation(ring.clone()).unwrap();
        let id = TwistedLaurentMatrix::identity(ring.clone(), aut.clone(), 1);
        let f = TwistedLaurentMatrix::from_terms(
            ring.clone(),
            aut,
            1,
            1,
            [
                (-1, one_by_one(&ring, ring.eval("1+w").unwrap().value)),
                (2, one_by_one(&ring, ring.eval("3").unwrap().value)),
            ],
        );
        assert_eq!(laurent_compose(&id, &f).unwrap(), f);
        assert_eq!(laurent_compose(&f, &id).unwrap(), f);
    }

    #[test]
    fn twist_moves_past_t() {
        // outer = w * t^1, inner = w * t^0 over the Gaussian integers with
        // conjugation: outer after inner = (w * conj(w)) * t^1 = 1 * t^1.
        let ring = quad();
        let aut = RingAutomorphism::conjugation(ring.clone()).unwrap();
        let w = ring.omega().unwrap();
        let outer = TwistedLaurentMatrix::from_terms(
            ring.clone(),
            aut.clone(),
            1,
            1,
            [(1, one_by_one(&ring, w.clone()))],
        );
        let inner = TwistedLaurentMatrix::from_terms(
            ring.clone(),
            aut.clone(),
            1,
            1,
            [(0, one_by_one(&ring, w.clone()))],
        );
        let c = laurent_compose(&inner, &outer).unwrap();
        // w * alpha(w) = w * (-w) = -w^2 = 1
        assert_eq!(c.coeff(1), one_by_one(&ring, ring.one()));
        // the same product in the other order twists nothing: w * w = -1 at t^1
        let c2 = laurent_compose(&outer, &inner).unwrap();
        assert_eq!(c2.coeff(1), one_by_one(&ring, ring.from_i64(-1)));
    }

    #[test]
    fn untwisted_scalar_case_is_laurent_multiplication() {
        let ring = RingDescriptor::Integers;
        let aut = RingAutomorphism::identity(ring.clone());
        // (2 t^-1 + 3) * (5 t + 7) = 10 + 14 t^-1 + 15 t + 21
        let f = TwistedLaurentMatrix::from_terms(
            ring.clone(),
            aut.clone(),
            1,
            1,
            [
                (-1, one_by_one(&ring, ring.from_i64(2))),
                (0, one_by_one(&ring, ring.from_i64(3))),
            ],
        );
        let g = TwistedLaurentMatrix::from_terms(
            ring.clone(),
            aut.clone(),
            1,
            1,
            [
                (1, one_by_one(&ring, ring.from_i64(5))),
                (0, one_by_one(&ring, ring.from_i64(7))),
            ],
        );
        let c = laurent_compose(&f, &g).unwrap();
        assert_eq!(c.coeff(-1), one_by_one(&ring, ring.from_i64(14)));
        assert_eq!(c.coeff(0), one_by_one(&ring, ring.from_i64(31)));
        assert_eq!(c.coeff(1), one_by_one(&ring, ring.from_i64(15)));
    }
}
