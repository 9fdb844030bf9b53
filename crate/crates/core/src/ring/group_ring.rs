//! Twisted group rings R_rho[G] for finite G: finite formal sums
//! `sum r_g * g` with `(r * g)(r' * g') = r rho(g)(r') * gg'`.

use super::{AutKind, RingAutomorphism, RingDescriptor, Scalar};
use crate::error::{Error, Result};
use crate::fingroup::FiniteGroup;
use std::collections::BTreeMap;
use std::sync::Arc;

/// An action of a finite group on a coefficient ring by automorphism tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub ring: RingDescriptor,
    pub group: Arc<FiniteGroup>,
    tags: Vec<AutKind>,
}

impl GroupAction {
    pub fn trivial(ring: RingDescriptor, group: Arc<FiniteGroup>) -> Self {
        let tags = vec![AutKind::Identity; group.order()];
        GroupAction { ring, group, tags }
    }

    /// Build from per-element tags; validates that the map is a homomorphism
    /// into {id, conj}.
    pub fn new(
        ring: RingDescriptor,
        group: Arc<FiniteGroup>,
        tags: Vec<AutKind>,
    ) -> Result<Self> {
        if tags.len() != group.order() {
            return Err(Error::InvalidInput("one tag per group element".into()));
        }
        if tags.contains(&AutKind::Conjugation)
            && !matches!(ring, RingDescriptor::Quadratic { .. })
        {
            return Err(Error::MalformedDescriptor(
                "conjugation action needs a quadratic ring".into(),
            ));
        }
        if tags[group.id()] != AutKind::Identity {
            return Err(Error::InvalidInput("identity must act trivially".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                if tags[group.mul(a, b)] != tags[a].compose(tags[b]) {
                    return Err(Error::InvalidInput(
                        "action tags are not a homomorphism".into(),
                    ));
                }
            }
        }
        Ok(GroupAction { ring, group, tags })
    }

    /// The action that sends the listed elements (and forced products) to
    /// conjugation: convenience for sign-like actions.
    pub fn from_signs(
        ring: RingDescriptor,
        group: Arc<FiniteGroup>,
        conj_elements: &[usize],
    ) -> Result<Self> {
        let mut tags = vec![AutKind::Identity; group.order()];
        for &g in conj_elements {
            tags[g] = AutKind::Conjugation;
        }
        Self::new(ring, group, tags)
    }

    pub fn automorphism(&self, g: usize) -> RingAutomorphism {
        RingAutomorphism {
            ring: self.ring.clone(),
            kind: self.tags[g],
        }
    }

    pub fn tag(&self, g: usize) -> AutKind {
        self.tags[g]
    }

    pub fn apply(&self, g: usize, x: &Scalar) -> Scalar {
        self.automorphism(g).apply(x)
    }

    /// Restrict the action to a subgroup given by its sorted element list;
    /// the subgroup becomes a standalone group with its own indices.
    pub fn restrict(&self, sub_elements: &[usize], sub: Arc<FiniteGroup>) -> Result<GroupAction> {
        let tags = sub_elements.iter().map(|&g| self.tags[g]).collect();
        GroupAction::new(self.ring.clone(), sub, tags)
    }
}

/// An element of the twisted group ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedGroupRingElement {
    pub action: GroupAction,
    coeffs: BTreeMap<usize, Scalar>,
}

impl TwistedGroupRingElement {
    pub fn zero(action: GroupAction) -> Self {
        TwistedGroupRingElement {
            action,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(action: GroupAction) -> Self {
        let id = action.group.id();
        let one = action.ring.one();
        let mut e = Self::zero(action);
        e.add_term(id, one);
        e
    }

    pub fn monomial(action: GroupAction, g: usize, r: Scalar) -> Self {
        let mut e = Self::zero(action);
        e.add_term(g, r);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(
        action: GroupAction,
        terms: I,
    ) -> Self {
        let mut e = Self::zero(action);
        for (g, r) in terms {
            e.add_term(g, r);
        }
        e
    }

    pub fn add_term(&mut self, g: usize, r: Scalar) {
        let ring = &self.action.ring;
        let merged = match self.coeffs.remove(&g) {
            Some(old) => ring.add(&old, &r),
            None => r,
        };
        if !ring.is_zero(&merged) {
            self.coeffs.insert(g, merged);
        }
    }

    pub fn coeff(&self, g: usize) -> Scalar {
        self.coeffs
            .get(&g)
            .cloned()
            .unwrap_or_else(|| self.action.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (g, r) in &other.coeffs {
            out.add_term(*g, r.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let ring = self.action.ring.clone();
        let mut out = Self::zero(self.action.clone());
        for (g, r) in &self.coeffs {
            out.add_term(*g, ring.neg(r));
        }
        out
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.action != other.action {
            return Err(Error::ContextMismatch(
                "twisted group ring contexts differ".into(),
            ));
        }
        Ok(())
    }
}

/// Product in the twisted group ring: the coefficient of g'' accumulates
/// r_g * rho(g)(r'_{g'}) over g'' = g g'.
pub fn twisted_group_ring_mul(
    a: &TwistedGroupRingElement,
    b: &TwistedGroupRingElement,
) -> Result<TwistedGroupRingElement> {
    a.check_context(b)?;
    let action = a.action.clone();
    let ring = action.ring.clone();
    let group = action.group.clone();
    let mut out = TwistedGroupRingElement::zero(action.clone());
    for (&g, r) in &a.coeffs {
        for (&g2, r2) in &b.coeffs {
            let twisted = action.apply(g, r2);
            out.add_term(group.mul(g, g2), ring.mul(r, &twisted));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FiniteGroup;

    #[test]
    fn untwisted_z2_square() {
        let g = FiniteGroup::cyclic(2);
        let act = GroupAction::trivial(RingDescriptor::Integers, g.clone());
        let x = TwistedGroupRingElement::from_terms(
            act.clone(),
            [(0, RingDescriptor::Integers.one()), (1, RingDescriptor::Integers.one())],
        );
        let sq = twisted_group_ring_mul(&x, &x).unwrap();
        assert_eq!(sq.coeff(0), RingDescriptor::Integers.from_i64(2));
        assert_eq!(sq.coeff(1), RingDescriptor::Integers.from_i64(2));
    }

    #[test]
    fn conjugation_twist_square() {
        // rho(s) = conjugation; (w * s)^2 = w * rho(s)(w) * e = w(-b-w) * e
        let ring = RingDescriptor::quadratic(RingDescriptor::Integers, 3, 1).unwrap();
        let g = FiniteGroup::cyclic(2);
        let act = GroupAction::from_signs(ring.clone(), g, &[1]).unwrap();
        let w = ring.omega().unwrap();
        let x = TwistedGroupRingElement::monomial(act, 1, w.clone());
        let sq = twisted_group_ring_mul(&x, &x).unwrap();
        let expected = ring.mul(&w, &ring.apply_conjugation(&w));
        assert_eq!(sq.coeff(0), expected);
        assert!(ring.is_zero(&sq.coeff(1)));
    }

    #[test]
    fn unit_is_neutral() {
        let ring = RingDescriptor::modulo(6);
        let g = FiniteGroup::symmetric(3);
        let act = GroupAction::trivial(ring.clone(), g.clone());
        let one = TwistedGroupRingElement::one(act.clone());
        let x = TwistedGroupRingElement::from_terms(
            act,
            [(1, ring.from_i64(2)), (4, ring.from_i64(5))],
        );
        assert_eq!(twisted_group_ring_mul(&one, &x).unwrap(), x);
        assert_eq!(twisted_group_ring_mul(&x, &one).unwrap(), x);
    }

    #[test]
    fn associativity_on_nonabelian_group() {
        let ring = RingDescriptor::quadratic(RingDescriptor::modulo(4), 0, 1).unwrap();
        let g = FiniteGroup::symmetric(3);
        // sign action: transpositions act by conjugation
        let tags: Vec<AutKind> = g
            .elements()
            .map(|x| {
                if g.element_order(x) == 2 {
                    AutKind::Conjugation
                } else {
                    AutKind::Identity
                }
            })
            .collect();
        let act = GroupAction::new(ring.clone(), g.clone(), tags).unwrap();
        let w = ring.omega().unwrap();
        let a = TwistedGroupRingElement::from_terms(
            act.clone(),
            [(1, w.clone()), (2, ring.from_i64(3))],
        );
        let b = TwistedGroupRingElement::from_terms(
            act.clone(),
            [(0, ring.from_i64(2)), (3, w.clone())],
        );
        let c = TwistedGroupRingElement::from_terms(
            act.clone(),
            [(4, ring.add(&w, &ring.one())), (5, ring.from_i64(1))],
        );
        let left = twisted_group_ring_mul(&twisted_group_ring_mul(&a, &b).unwrap(), &c).unwrap();
        let right = twisted_group_ring_mul(&a, &twisted_group_ring_mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
