//! Permutation parsing (disjoint cycle notation, 1-based points) and group
//! construction from permutation generators.

use super::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Parse "(1 2 3)(4 5)" into a permutation on 0-based points. Accepts commas
/// or spaces inside cycles; "()" and the empty string are the identity.
pub fn parse_cycles(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::InvalidInput(format!("expected '(' in {s}")))?;
        if !rest[..open].trim().is_empty() {
            return Err(Error::InvalidInput(format!("stray text in {s}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::InvalidInput(format!("unbalanced '(' in {s}")))?;
        let inner = &rest[open + 1..close];
        let mut cycle = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad point {tok}")))?;
            if v == 0 {
                return Err(Error::InvalidInput("points are 1-based".into()));
            }
            cycle.push(v - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim();
    }
    let degree = cycles
        .iter()
        .flat_map(|c| c.iter())
        .max()
        .map_or(1, |&m| m + 1);
    let mut perm: Vec<usize> = (0..degree).collect();
    for cycle in &cycles {
        let mut seen = cycle.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != cycle.len() {
            return Err(Error::InvalidInput(format!("repeated point in {s}")));
        }
        for i in 0..cycle.len() {
            perm[cycle[i]] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(perm)
}

pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            seen[i] = true;
            continue;
        }
        out.push('(');
        let mut j = i;
        let mut first = true;
        while !seen[j] {
            seen[j] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(j + 1).to_string());
            first = false;
            j = p[j];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn pad(p: &[usize], degree: usize) -> Vec<usize> {
    let mut q = p.to_vec();
    for i in q.len()..degree {
        q.push(i);
    }
    q
}

/// Close a set of permutation generators into a group with multiplication
/// table; element names are cycle notations.
pub fn group_from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Arc<FiniteGroup>> {
    let degree = gens.iter().map(|g| g.len()).max().unwrap_or(1);
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| pad(g, degree)).collect();
    for g in &gens {
        let mut seen = vec![false; degree];
        for &v in g {
            if v >= degree || seen[v] {
                return Err(Error::InvalidInput("generator is not a permutation".into()));
            }
            seen[v] = true;
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    index.insert(identity, 0);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let cur = elems[i].clone();
        for g in &gens {
            let next: Vec<usize> = (0..degree).map(|x| g[cur[x]]).collect();
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                frontier.push(elems.len());
                elems.push(next);
            }
        }
        if elems.len() > 10_000 {
            return Err(Error::InvalidInput("permutation closure too large".into()));
        }
    }
    let order = elems.len();
    let mut table = vec![0usize; order * order];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let ab: Vec<usize> = (0..degree).map(|x| a[b[x]]).collect();
            table[i * order + j] = index[&ab];
        }
    }
    let names = elems.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat_table(name, order, table, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_cycles("(1 2 3)(4 5)").unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3]);
        assert_eq!(cycle_notation(&p), "(1 2 3)(4 5)");
        assert_eq!(parse_cycles("()").unwrap(), vec![0]);
    }

    #[test]
    fn s3_from_generators() {
        let g = group_from_permutations(
            "S3",
            &[parse_cycles("(1 2)").unwrap(), parse_cycles("(1 2 3)").unwrap()],
        )
        .unwrap();
        assert_eq!(g.order(), 6);
    }
}
