//! Finite groups given by multiplication tables, their subgroup lattices,
//! double cosets, and the p-elementary / p-hyperelementary classification.

mod classify;
mod lattice;
mod perm;

pub use classify::{classify, hyper_implies_elementary_check, ClassificationReport, HyperCheckReport};
pub use lattice::{subfin_morphisms, subgroup_conjugacy_classes, SubgroupClass};
pub use perm::{group_from_permutations, parse_cycles};

use crate::error::{Error, Result};
use crate::ring::{is_prime_u64, RingDescriptor};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Default cap on group orders for lattice enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 96;

#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table && self.identity == other.identity
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Build a group from a multiplication table; validates the group axioms.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidGroup(format!("entry {v} out of range")));
                }
                flat.push(v);
            }
        }
        let names = (0..order).map(|i| format!("g{i}")).collect();
        Self::from_flat_table(name, order, flat, names)
    }

    pub fn from_flat_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Arc<Self>> {
        // locate identity
        let mut identity = None;
        for e in 0..order {
            if (0..order).all(|a| table[e * order + a] == a && table[a * order + e] == a) {
                identity = Some(e);
                break;
            }
        }
        let identity =
            identity.ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        // inverses
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == identity && table[b * order + a] == identity {
                    inverse[a] = b;
                    break;
                }
            }
            if inverse[a] == usize::MAX {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        // associativity
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            name: name.into(),
            order,
            table,
            inverse,
            identity,
            names,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Verify that a permutation of element indices is an automorphism.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        if phi.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &v in phi {
            if v >= self.order || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..self.order)
            .all(|a| (0..self.order).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }

    // ---- standard corpus constructors ----

    pub fn trivial() -> Arc<Self> {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let table: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        let names = (0..n).map(|i| format!("{i}")).collect();
        Self::from_flat_table(format!("C{n}"), n, table, names).expect("cyclic group")
    }

    /// Dihedral group of order 2n (symmetries of the n-gon), n >= 1.
    /// Elements (r, s) encoded as s*n + r with relations r^n = s^2 = e,
    /// s r s = r^{-1}.
    pub fn dihedral(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let order = 2 * n;
        let enc = |r: usize, s: usize| s * n + r;
        let mut table = vec![0usize; order * order];
        for s1 in 0..2 {
            for r1 in 0..n {
                for s2 in 0..2 {
                    for r2 in 0..n {
                        // (r1, s1)(r2, s2): s^{s1} r^{r1} s^{s2} r^{r2}
                        // r^{r1} s = s r^{-r1}
                        let r = if s2 == 1 {
                            (n - r1 % n) % n + r2
                        } else {
                            r1 + r2
                        } % n;
                        let s = (s1 + s2) % 2;
                        table[enc(r1, s1) * order + enc(r2, s2)] = enc(r, s);
                    }
                }
            }
        }
        let names = (0..order)
            .map(|i| {
                let (s, r) = (i / n, i % n);
                if s == 0 {
                    format!("r{r}")
                } else {
                    format!("sr{r}")
                }
            })
            .collect();
        Self::from_flat_table(format!("D{n}"), order, table, names).expect("dihedral group")
    }

    pub fn symmetric(degree: usize) -> Arc<Self> {
        assert!((1..=4).contains(&degree), "symmetric group degree 1..=4");
        let perms = all_permutations(degree);
        group_from_perm_list(format!("S{degree}"), perms)
    }

    pub fn alternating(degree: usize) -> Arc<Self> {
        assert!((1..=4).contains(&degree), "alternating group degree 1..=4");
        let perms: Vec<Vec<usize>> = all_permutations(degree)
            .into_iter()
            .filter(|p| perm_sign(p) == 1)
            .collect();
        group_from_perm_list(format!("A{degree}"), perms)
    }

    /// The quaternion group of order 8: {±1, ±i, ±j, ±k}.
    pub fn quaternion8() -> Arc<Self> {
        // encode 1,-1,i,-i,j,-j,k,-k as 0..8
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        let idx = |sign: i32, axis: usize| -> usize {
            let base = axis * 2;
            if sign > 0 {
                base
            } else {
                base + 1
            }
        };
        // axis 0 = scalar 1, 1 = i, 2 = j, 3 = k
        let mul_axis = |a: usize, b: usize| -> (i32, usize) {
            match (a, b) {
                (0, x) => (1, x),
                (x, 0) => (1, x),
                (1, 1) => (-1, 0),
                (2, 2) => (-1, 0),
                (3, 3) => (-1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (1, 1),
                (3, 2) => (-1, 1),
                (3, 1) => (1, 2),
                (1, 3) => (-1, 2),
                _ => unreachable!(),
            }
        };
        let mut table = vec![0usize; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (sa, xa) = ((if a % 2 == 0 { 1 } else { -1 }), a / 2);
                let (sb, xb) = ((if b % 2 == 0 { 1 } else { -1 }), b / 2);
                let (s, x) = mul_axis(xa, xb);
                table[a * 8 + b] = idx(sa * sb * s, x);
            }
        }
        Self::from_flat_table(
            "Q8",
            8,
            table,
            names.iter().map(|s| s.to_string()).collect(),
        )
        .expect("quaternion group")
    }

    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Arc<Self> {
        let order = a.order * b.order;
        let enc = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![0usize; order * order];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[enc(x1, y1) * order + enc(x2, y2)] =
                            enc(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        let names = (0..order)
            .map(|i| {
                format!(
                    "({},{})",
                    a.element_name(i / b.order),
                    b.element_name(i % b.order)
                )
            })
            .collect();
        Self::from_flat_table(
            format!("{}x{}", a.name, b.name),
            order,
            table,
            names,
        )
        .expect("direct product")
    }

    /// Semidirect product K x| Z/m where the generator of Z/m acts on K by
    /// the automorphism alpha. Elements (k, j) encoded as j*|K| + k, with
    /// (k, a)(k', b) = (k * alpha^a(k'), a + b).
    pub fn semidirect_cyclic(
        k: &Arc<FiniteGroup>,
        alpha: &[usize],
        m: usize,
    ) -> Result<Arc<Self>> {
        if !k.is_automorphism(alpha) {
            return Err(Error::InvalidGroup("alpha is not an automorphism".into()));
        }
        // alpha^m must be the identity for the action of Z/m to be defined
        let mut pw: Vec<usize> = (0..k.order).collect();
        for _ in 0..m {
            pw = pw.iter().map(|&x| alpha[x]).collect();
        }
        if pw.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::InvalidGroup(format!(
                "automorphism order does not divide {m}"
            )));
        }
        let order = k.order * m;
        let enc = |kk: usize, j: usize| j * k.order + kk;
        // alpha_pows[a][x] = alpha^a(x)
        let mut alpha_pows: Vec<Vec<usize>> = Vec::with_capacity(m);
        alpha_pows.push((0..k.order).collect());
        for a in 1..m {
            let prev = &alpha_pows[a - 1];
            alpha_pows.push(prev.iter().map(|&x| alpha[x]).collect());
        }
        let mut table = vec![0usize; order * order];
        for a in 0..m {
            for k1 in 0..k.order {
                for b in 0..m {
                    for k2 in 0..k.order {
                        let kk = k.mul(k1, alpha_pows[a][k2]);
                        table[enc(k1, a) * order + enc(k2, b)] = enc(kk, (a + b) % m);
                    }
                }
            }
        }
        let names = (0..order)
            .map(|i| format!("({},t{})", k.element_name(i % k.order), i / k.order))
            .collect();
        Self::from_flat_table(
            format!("{}:C{}", k.name, m),
            order,
            table,
            names,
        )
    }
}

/// A subgroup: the parent group plus a sorted element-index set.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    pub elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl Subgroup {
    pub fn new(group: Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let s = Subgroup { group, elements };
        s.validate()?;
        Ok(s)
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let id = group.id();
        Subgroup {
            group,
            elements: vec![id],
        }
    }

    pub fn whole(group: Arc<FiniteGroup>) -> Self {
        let elements = (0..group.order()).collect();
        Subgroup { group, elements }
    }

    /// Closure of a generating set.
    pub fn generated(group: Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let elements = lattice::closure(&group, gens);
        Subgroup { group, elements }
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        if !self.elements.contains(&g.id()) {
            return Err(Error::InvalidGroup("subgroup misses identity".into()));
        }
        let set: BTreeSet<usize> = self.elements.iter().copied().collect();
        for &a in &self.elements {
            if !set.contains(&g.inv(a)) {
                return Err(Error::InvalidGroup("subgroup not closed under inverse".into()));
            }
            for &b in &self.elements {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::InvalidGroup("subgroup not closed under product".into()));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn contains_all(&self, other: &Subgroup) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }

    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .map(|&x| self.group.conj(g, x))
            .collect();
        elements.sort_unstable();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn is_normal(&self) -> bool {
        self.group.elements().all(|g| self.conjugate(g) == *self)
    }

    pub fn normalizer(&self) -> Subgroup {
        let elements: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.conjugate(g) == *self)
            .collect();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn centralizer(&self) -> Subgroup {
        let g = &self.group;
        let elements: Vec<usize> = g
            .elements()
            .filter(|&x| self.elements.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
            .collect();
        Subgroup {
            group: self.group.clone(),
            elements,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator().is_some()
    }

    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements
            .iter()
            .copied()
            .find(|&a| self.group.element_order(a) == self.order())
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        while n % (p as usize) == 0 {
            n /= p as usize;
        }
        n == 1
    }

    /// Left cosets gH, each sorted, in a stable order (by minimal element).
    pub fn left_cosets(&self) -> Vec<Vec<usize>> {
        let g = &self.group;
        let mut seen = vec![false; g.order()];
        let mut cosets = Vec::new();
        for rep in g.elements() {
            if seen[rep] {
                continue;
            }
            let mut coset: Vec<usize> = self.elements.iter().map(|&h| g.mul(rep, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// The quotient group by a normal subgroup, together with the projection
    /// map element -> coset index.
    pub fn quotient(&self) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
        if !self.is_normal() {
            return Err(Error::InvalidGroup("quotient by a non-normal subgroup".into()));
        }
        let g = &self.group;
        let cosets = self.left_cosets();
        let mut coset_of = vec![usize::MAX; g.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x] = i;
            }
        }
        let n = cosets.len();
        let mut table = vec![0usize; n * n];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                table[i * n + j] = coset_of[g.mul(ci[0], cj[0])];
            }
        }
        let names = cosets
            .iter()
            .map(|c| format!("[{}]", g.element_name(c[0])))
            .collect();
        let q = FiniteGroup::from_flat_table(format!("{}/N", g.name()), n, table, names)?;
        Ok((q, coset_of))
    }
}

/// Enumerate the full subgroup lattice; errors if the order exceeds `bound`.
pub fn subgroups(group: &Arc<FiniteGroup>, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::OrderBoundExceeded {
            order: group.order(),
            bound,
        });
    }
    Ok(lattice::all_subgroups(group))
}

/// Primes dividing `torsion_order` that are not invertible in the ring.
pub fn pset_for_order(torsion_order: usize, ring: &RingDescriptor) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut n = torsion_order as u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            if !ring.prime_is_invertible(p) {
                out.insert(p);
            }
        }
        p += 1;
    }
    if n > 1 && !ring.prime_is_invertible(n) {
        out.insert(n);
    }
    out
}

/// The primes of Notation P(G, R) for a finite group.
pub fn pset(group: &FiniteGroup, ring: &RingDescriptor) -> BTreeSet<u64> {
    pset_for_order(group.order(), ring)
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn perm_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn group_from_perm_list(name: String, perms: Vec<Vec<usize>>) -> Arc<FiniteGroup> {
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
    let order = perms.len();
    let mut table = vec![0usize; order * order];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // (a * b)(x) = a(b(x))
            let ab: Vec<usize> = (0..a.len()).map(|x| a[b[x]]).collect();
            table[i * order + j] = index(&ab);
        }
    }
    let names = perms.iter().map(|p| perm::cycle_notation(p)).collect();
    FiniteGroup::from_flat_table(name, order, table, names).expect("permutation group")
}

/// The named corpus used by tests and the CLI.
pub fn named_group(name: &str) -> Result<Arc<FiniteGroup>> {
    let n = name.trim();
    if let Some(rest) = n.strip_prefix('C').or_else(|| n.strip_prefix('Z')) {
        if let Ok(k) = rest.parse::<usize>() {
            if k >= 1 {
                return Ok(FiniteGroup::cyclic(k));
            }
        }
    }
    if let Some(rest) = n.strip_prefix('D') {
        if let Ok(k) = rest.parse::<usize>() {
            if k >= 1 {
                return Ok(FiniteGroup::dihedral(k));
            }
        }
    }
    if let Some(rest) = n.strip_prefix('S') {
        if let Ok(k) = rest.parse::<usize>() {
            if (1..=4).contains(&k) {
                return Ok(FiniteGroup::symmetric(k));
            }
        }
    }
    if let Some(rest) = n.strip_prefix('A') {
        if let Ok(k) = rest.parse::<usize>() {
            if (1..=4).contains(&k) {
                return Ok(FiniteGroup::alternating(k));
            }
        }
    }
    if n == "Q8" {
        return Ok(FiniteGroup::quaternion8());
    }
    if let Some((a, b)) = n.split_once('x') {
        let ga = named_group(a)?;
        let gb = named_group(b)?;
        return Ok(FiniteGroup::direct_product(&ga, &gb));
    }
    Err(Error::InvalidGroup(format!("unknown group name {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_groups_are_groups() {
        for name in ["C1", "C6", "C12", "D4", "S3", "S4", "A4", "Q8", "C2xC6"] {
            let g = named_group(name).unwrap();
            assert!(g.order() > 0);
        }
        assert_eq!(named_group("S3").unwrap().order(), 6);
        assert_eq!(named_group("D4").unwrap().order(), 8);
        assert_eq!(named_group("Q8").unwrap().order(), 8);
        assert_eq!(named_group("A4").unwrap().order(), 12);
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion8();
        // i*j = k, j*i = -k, i^2 = -1
        assert_eq!(q.element_name(q.mul(2, 4)), "k");
        assert_eq!(q.element_name(q.mul(4, 2)), "-k");
        assert_eq!(q.element_name(q.mul(2, 2)), "-1");
        assert_eq!(q.element_order(2), 4);
    }

    #[test]
    fn dihedral_relation() {
        let d = FiniteGroup::dihedral(4);
        // s r s^{-1} = r^{-1}
        let r = 1; // r1
        let s = 4; // sr0
        assert_eq!(d.conj(s, r), d.inv(r));
    }

    #[test]
    fn pset_examples() {
        let s3 = FiniteGroup::symmetric(3);
        let z = RingDescriptor::Integers;
        assert_eq!(
            pset(&s3, &z).into_iter().collect::<Vec<_>>(),
            vec![2, 3]
        );
        let inv = RingDescriptor::localized([2, 3]).unwrap();
        assert!(pset(&s3, &inv).is_empty());
        let f3 = RingDescriptor::modulo(3);
        assert_eq!(pset(&s3, &f3).into_iter().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn quotient_of_s3_by_a3() {
        let s3 = FiniteGroup::symmetric(3);
        let a3: Vec<usize> = s3
            .elements()
            .filter(|&g| s3.element_order(g) != 2)
            .collect();
        let a3 = Subgroup::new(s3.clone(), a3).unwrap();
        let (q, _) = a3.quotient().unwrap();
        assert_eq!(q.order(), 2);
    }
}
