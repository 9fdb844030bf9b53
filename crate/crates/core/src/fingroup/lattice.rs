//! Subgroup lattice enumeration, conjugacy classes of subgroups, and the
//! double-coset morphism sets of the finite-subgroup category.

use super::{FiniteGroup, Subgroup};
use std::collections::BTreeSet;
use std::sync::Arc;

pub fn closure(group: &Arc<FiniteGroup>, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    set.insert(group.id());
    let mut frontier: Vec<usize> = vec![group.id()];
    let gens: Vec<usize> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            for y in [group.mul(x, g), group.mul(g, x)] {
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
    }
    // generators themselves (in case gens is empty this is just {e})
    for &g in &gens {
        if set.insert(g) {
            // closing again: multiply everything
            let mut frontier = vec![g];
            while let Some(x) = frontier.pop() {
                let current: Vec<usize> = set.iter().copied().collect();
                for y in current {
                    for z in [group.mul(x, y), group.mul(y, x)] {
                        if set.insert(z) {
                            frontier.push(z);
                        }
                    }
                }
            }
        }
    }
    set.into_iter().collect()
}

/// All subgroups, sorted by (order, elements).
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![group.id()];
    found.insert(trivial.clone());
    let mut frontier: Vec<Vec<usize>> = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in group.elements() {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let closed = closure(group, &gens);
            if found.insert(closed.clone()) {
                frontier.push(closed);
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|elements| Subgroup {
            group: group.clone(),
            elements,
        })
        .collect();
    out.sort();
    out
}

/// A conjugacy class of subgroups: representative (the least member), all
/// members, and the representative's normalizer.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
    pub normalizer: Subgroup,
}

impl SubgroupClass {
    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.iter().any(|m| m == h)
    }
}

/// Group the full lattice into conjugacy classes, sorted by
/// (order of representative, representative elements).
pub fn subgroup_conjugacy_classes(group: &Arc<FiniteGroup>) -> Vec<SubgroupClass> {
    let subs = all_subgroups(group);
    let mut remaining: BTreeSet<Vec<usize>> = subs.iter().map(|s| s.elements.clone()).collect();
    let mut classes = Vec::new();
    for s in &subs {
        if !remaining.contains(&s.elements) {
            continue;
        }
        let mut member_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in group.elements() {
            member_sets.insert(s.conjugate(g).elements);
        }
        for m in &member_sets {
            remaining.remove(m);
        }
        let members: Vec<Subgroup> = member_sets
            .into_iter()
            .map(|elements| Subgroup {
                group: group.clone(),
                elements,
            })
            .collect();
        classes.push(SubgroupClass {
            representative: members[0].clone(),
            members,
            normalizer: s.normalizer(),
        });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    classes
}

/// Morphism set of the finite-subgroup category from H to K: the double coset
/// K \ { g | g H g^{-1} <= K } / C_G(H). Returns orbit representatives.
pub fn subfin_morphisms(group: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let t: Vec<usize> = group
        .elements()
        .filter(|&g| h.elements.iter().all(|&x| k.contains(group.conj(g, x))))
        .collect();
    let c = h.centralizer();
    let mut unassigned: BTreeSet<usize> = t.iter().copied().collect();
    let mut reps = Vec::new();
    while let Some(&g) = unassigned.iter().next() {
        reps.push(g);
        // orbit of g under left K, right C_G(H)
        let mut orbit = BTreeSet::new();
        let mut frontier = vec![g];
        orbit.insert(g);
        while let Some(x) = frontier.pop() {
            for &kk in &k.elements {
                let y = group.mul(kk, x);
                if orbit.insert(y) {
                    frontier.push(y);
                }
            }
            for &cc in &c.elements {
                let y = group.mul(x, cc);
                if orbit.insert(y) {
                    frontier.push(y);
                }
            }
        }
        for x in orbit {
            unassigned.remove(&x);
        }
    }
    reps
}

/// Independent count of Inn(K) \ conhom_G(H, K): conjugation maps H -> K as
/// literal functions, modulo postcomposition with inner automorphisms of K.
pub fn conhom_orbit_count(group: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> usize {
    let t: Vec<usize> = group
        .elements()
        .filter(|&g| h.elements.iter().all(|&x| k.contains(group.conj(g, x))))
        .collect();
    // the function h -> g h g^{-1} restricted to H, as a vector
    let as_map = |g: usize| -> Vec<usize> {
        h.elements.iter().map(|&x| group.conj(g, x)).collect()
    };
    let conhom: BTreeSet<Vec<usize>> = t.iter().map(|&g| as_map(g)).collect();
    let mut remaining = conhom.clone();
    let mut count = 0;
    while let Some(f) = remaining.iter().next().cloned() {
        count += 1;
        for &kk in &k.elements {
            let g: Vec<usize> = f.iter().map(|&y| group.conj(kk, y)).collect();
            remaining.remove(&g);
        }
        remaining.remove(&f);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic6_has_divisor_lattice() {
        let g = FiniteGroup::cyclic(6);
        let subs = all_subgroups(&g);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn s3_lattice() {
        let g = FiniteGroup::symmetric(3);
        let subs = all_subgroups(&g);
        assert_eq!(subs.len(), 6);
        let classes = subgroup_conjugacy_classes(&g);
        assert_eq!(classes.len(), 4);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 3, 1, 1]);
    }

    #[test]
    fn trivial_group_lattice() {
        let g = FiniteGroup::trivial();
        assert_eq!(all_subgroups(&g).len(), 1);
    }

    #[test]
    fn subfin_morphism_counts_s3() {
        let g = FiniteGroup::symmetric(3);
        let classes = subgroup_conjugacy_classes(&g);
        let a3 = classes
            .iter()
            .find(|c| c.representative.order() == 3)
            .unwrap()
            .representative
            .clone();
        let c2 = classes
            .iter()
            .find(|c| c.representative.order() == 2)
            .unwrap()
            .representative
            .clone();
        let trivial = Subgroup::trivial(g.clone());

        // H trivial: one morphism to anything
        assert_eq!(subfin_morphisms(&g, &trivial, &a3).len(), 1);
        // H = K = A3: two morphisms
        assert_eq!(subfin_morphisms(&g, &a3, &a3).len(), 2);
        // H = K = <(12)>: one morphism
        assert_eq!(subfin_morphisms(&g, &c2, &c2).len(), 1);

        // double-coset count equals the Inn(K)\conhom count
        for h in [&trivial, &c2, &a3] {
            for k in [&trivial, &c2, &a3] {
                assert_eq!(
                    subfin_morphisms(&g, h, k).len(),
                    conhom_orbit_count(&g, h, k),
                );
            }
        }
    }
}
