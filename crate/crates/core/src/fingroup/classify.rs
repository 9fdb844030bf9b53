//! p-elementary and p-hyperelementary classification of finite groups, and
//! the object-level check of the lemma that a p-hyperelementary subgroup
//! meeting the kernel in a p-group is already p-elementary.

use super::{check_prime, lattice, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Classification flags for one subgroup at one prime, with witnesses.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub prime: u64,
    pub cyclic: bool,
    pub p_group: bool,
    pub p_hyperelementary: bool,
    pub p_elementary: bool,
    /// For hyperelementary: a normal cyclic C (of order prime to p) with
    /// p-power index.
    pub hyper_witness: Option<(Subgroup, usize)>,
    /// For elementary: commuting internal factors (C, P).
    pub elementary_witness: Option<(Subgroup, Subgroup)>,
}

/// Decide all four flags for H at the prime p by exhaustive search inside H.
pub fn classify(h: &Subgroup, p: u64) -> Result<ClassificationReport> {
    check_prime(p)?;
    let group = h.group.clone();
    let cyclic = h.is_cyclic();
    let p_group = h.is_p_group(p);

    // Subgroups of H, as subgroups of the ambient group restricted to H.
    let inner = subgroups_within(&group, h);

    // p-hyperelementary: a normal cyclic subgroup C <= H with [H : C] a power
    // of p. The order of C can always be arranged prime to p (take the
    // p'-part, which is characteristic in C), so search those directly.
    let mut hyper_witness = None;
    for c in &inner {
        if c.order() as u64 % p == 0 {
            continue;
        }
        if !c.is_cyclic() {
            continue;
        }
        if !is_power_of(h.order() / c.order(), p) {
            continue;
        }
        if !is_normal_in(c, h) {
            continue;
        }
        hyper_witness = Some((c.clone(), h.order() / c.order()));
        break;
    }

    // p-elementary: H = C x P internally with C cyclic of order prime to p
    // and P a p-group.
    let mut elementary_witness = None;
    'outer: for c in &inner {
        if !c.is_cyclic() || c.order() as u64 % p == 0 {
            continue;
        }
        for q in &inner {
            if !q.is_p_group(p) {
                continue;
            }
            if c.order() * q.order() != h.order() {
                continue;
            }
            // trivial intersection
            let inter: Vec<usize> = c
                .elements
                .iter()
                .copied()
                .filter(|x| q.contains(*x))
                .collect();
            if inter.len() != 1 {
                continue;
            }
            // elementwise commuting
            let commute = c.elements.iter().all(|&a| {
                q.elements
                    .iter()
                    .all(|&b| group.mul(a, b) == group.mul(b, a))
            });
            if commute {
                elementary_witness = Some((c.clone(), q.clone()));
                break 'outer;
            }
        }
    }

    Ok(ClassificationReport {
        prime: p,
        cyclic,
        p_group,
        p_hyperelementary: hyper_witness.is_some(),
        p_elementary: elementary_witness.is_some(),
        hyper_witness,
        elementary_witness,
    })
}

/// All subgroups of the ambient group contained in H.
fn subgroups_within(group: &Arc<FiniteGroup>, h: &Subgroup) -> Vec<Subgroup> {
    // enumerate inside H only: close subsets of H's elements
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![group.id()];
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(cur) = frontier.pop() {
        for &g in &h.elements {
            if cur.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = cur.clone();
            gens.push(g);
            let closed = lattice::closure(group, &gens);
            if closed.iter().all(|x| h.contains(*x)) && found.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    found
        .into_iter()
        .map(|elements| Subgroup {
            group: group.clone(),
            elements,
        })
        .collect()
}

fn is_normal_in(c: &Subgroup, h: &Subgroup) -> bool {
    h.elements
        .iter()
        .all(|&g| c.conjugate(g).elements == c.elements)
}

fn is_power_of(mut n: usize, p: u64) -> bool {
    let p = p as usize;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Report of the lemma check: for every subgroup H of F that is
/// p-hyperelementary and meets K in a p-group, H must be p-elementary.
#[derive(Debug, Clone)]
pub struct HyperCheckReport {
    pub prime: u64,
    pub checked: usize,
    pub hypothesis_hits: usize,
    /// Subgroups violating the conclusion (expected empty).
    pub violations: Vec<Subgroup>,
}

/// The setting: K normal in F with cyclic quotient; checks the lemma over
/// every subgroup of F.
pub fn hyper_implies_elementary_check(
    f: &Arc<FiniteGroup>,
    k: &Subgroup,
    p: u64,
) -> Result<HyperCheckReport> {
    check_prime(p)?;
    if !k.is_normal() {
        return Err(Error::InvalidGroup("K must be normal in F".into()));
    }
    let (q, _) = k.quotient()?;
    let q_whole = Subgroup::whole(q.clone());
    if !q_whole.is_cyclic() {
        return Err(Error::InvalidGroup("F/K must be cyclic".into()));
    }
    let subs = lattice::all_subgroups(f);
    let mut hits = 0;
    let mut violations = Vec::new();
    for h in &subs {
        let report = classify(h, p)?;
        if !report.p_hyperelementary {
            continue;
        }
        let inter: Vec<usize> = h
            .elements
            .iter()
            .copied()
            .filter(|&x| k.contains(x))
            .collect();
        let inter = Subgroup {
            group: f.clone(),
            elements: inter,
        };
        if !inter.is_p_group(p) {
            continue;
        }
        hits += 1;
        if !report.p_elementary {
            violations.push(h.clone());
        }
    }
    Ok(HyperCheckReport {
        prime: p,
        checked: subs.len(),
        hypothesis_hits: hits,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_rep(g: &Arc<FiniteGroup>, order: usize) -> Subgroup {
        lattice::subgroup_conjugacy_classes(g)
            .into_iter()
            .find(|c| c.representative.order() == order)
            .unwrap()
            .representative
    }

    #[test]
    fn cyclic6_is_2_elementary() {
        let g = FiniteGroup::cyclic(6);
        let whole = Subgroup::whole(g.clone());
        let r = classify(&whole, 2).unwrap();
        assert!(r.cyclic && r.p_elementary && r.p_hyperelementary);
        let (c, p) = r.elementary_witness.unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn s3_classification() {
        let g = FiniteGroup::symmetric(3);
        let whole = Subgroup::whole(g.clone());
        let at2 = classify(&whole, 2).unwrap();
        assert!(at2.p_hyperelementary, "S3 = C3 : C2");
        assert!(!at2.p_elementary, "S3 is not a direct product");
        let (c, idx) = at2.hyper_witness.unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(idx, 2);
        let at3 = classify(&whole, 3).unwrap();
        assert!(!at3.p_hyperelementary);
        assert!(!at3.p_elementary);
    }

    #[test]
    fn classification_is_conjugation_invariant() {
        let g = FiniteGroup::symmetric(4);
        let classes = lattice::subgroup_conjugacy_classes(&g);
        for class in classes.iter().filter(|c| c.members.len() > 1).take(4) {
            for p in [2u64, 3] {
                let r0 = classify(&class.members[0], p).unwrap();
                for m in &class.members[1..] {
                    let r = classify(m, p).unwrap();
                    assert_eq!(r0.cyclic, r.cyclic);
                    assert_eq!(r0.p_group, r.p_group);
                    assert_eq!(r0.p_hyperelementary, r.p_hyperelementary);
                    assert_eq!(r0.p_elementary, r.p_elementary);
                }
            }
        }
    }

    #[test]
    fn lemma_check_on_s3_as_semidirect() {
        let g = FiniteGroup::symmetric(3);
        let k = class_rep(&g, 3); // A3, normal with cyclic quotient
        let report = hyper_implies_elementary_check(&g, &k, 2).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.hypothesis_hits > 0);
    }

    #[test]
    fn elementary_implies_hyperelementary_small_corpus() {
        for name in ["C12", "S3", "D4", "Q8", "A4"] {
            let g = super::super::named_group(name).unwrap();
            for h in lattice::all_subgroups(&g) {
                for p in [2u64, 3, 5, 7] {
                    let r = classify(&h, p).unwrap();
                    if r.p_elementary {
                        assert!(r.p_hyperelementary, "{name} {:?} p={p}", h.elements);
                    }
                    if r.cyclic {
                        assert!(r.p_elementary && r.p_hyperelementary);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_prime() {
        let g = FiniteGroup::cyclic(4);
        let whole = Subgroup::whole(g);
        assert!(classify(&whole, 4).is_err());
    }
}
