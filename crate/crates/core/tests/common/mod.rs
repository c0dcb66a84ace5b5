//! Independent oracles over explicit permutation sets. Nothing here uses the
//! library's element indexing, multiplication tables, lattice or N^π code.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hallstone::{catalog_lookup, quotient_group, Group, Permutation, PrimeSet, Subgroup};

pub type Set = BTreeSet<Permutation>;

pub fn group(name: &str) -> Group {
    catalog_lookup(name).unwrap().group().unwrap()
}

pub fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let owned: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &owned).unwrap()
}

pub fn sub(g: &Group, cycles: &[&[&[usize]]]) -> Subgroup {
    let gens: Vec<Permutation> = cycles.iter().map(|c| perm(g.degree(), c)).collect();
    g.subgroup_from(&gens).unwrap()
}

pub fn set_of(h: &Subgroup) -> Set {
    h.permutations().cloned().collect()
}

/// Breadth-first closure under right multiplication by the generators.
pub fn closure(degree: usize, gens: &[Permutation]) -> Set {
    let identity = Permutation::identity(degree);
    let mut seen: Set = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn degree_of(s: &Set) -> usize {
    s.iter().next().unwrap().degree()
}

pub fn join(a: &Set, b: &Set) -> Set {
    let gens: Vec<Permutation> = a.iter().chain(b).cloned().collect();
    closure(degree_of(a), &gens)
}

/// Every subgroup of the group with element set `g`: cyclic subgroups closed under joins.
pub fn brute_subgroups(g: &Set) -> Vec<Set> {
    let degree = degree_of(g);
    let mut found: BTreeSet<Set> = g.iter().map(|x| closure(degree, std::slice::from_ref(x))).collect();
    loop {
        let list: Vec<Set> = found.iter().cloned().collect();
        let mut grew = false;
        for a in &list {
            for b in &list {
                if !a.is_subset(b) && !b.is_subset(a) && found.insert(join(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Set> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Normal subgroups of `g`: joins of the subgroups generated by conjugacy classes.
pub fn brute_normals(g: &Set) -> Vec<Set> {
    let degree = degree_of(g);
    let closures: BTreeSet<Set> = g
        .iter()
        .map(|x| {
            let class: Vec<Permutation> = g.iter().map(|y| conj(x, y)).collect();
            closure(degree, &class)
        })
        .collect();
    let mut found = closures.clone();
    loop {
        let list: Vec<Set> = found.iter().cloned().collect();
        let mut grew = false;
        for a in &list {
            for b in &closures {
                if !b.is_subset(a) && found.insert(join(a, b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Set> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

pub fn conj(x: &Permutation, g: &Permutation) -> Permutation {
    g.inverse().compose(x).compose(g)
}

pub fn normalizes(g: &Permutation, h: &Set) -> bool {
    h.iter().all(|x| h.contains(&conj(x, g)))
}

pub fn is_normal(g: &Set, h: &Set) -> bool {
    g.iter().all(|x| normalizes(x, h))
}

pub fn normalizer(g: &Set, h: &Set) -> Set {
    g.iter().filter(|x| normalizes(x, h)).cloned().collect()
}

pub fn conjugate(h: &Set, g: &Permutation) -> Set {
    h.iter().map(|x| conj(x, g)).collect()
}

pub fn commutator_group(a: &Set, b: &Set) -> Set {
    let gens: Vec<Permutation> = a
        .iter()
        .flat_map(|x| {
            b.iter()
                .map(move |y| x.inverse().compose(&y.inverse()).compose(x).compose(y))
        })
        .collect();
    closure(degree_of(a), &gens)
}

pub fn derived(h: &Set) -> Set {
    commutator_group(h, h)
}

/// Lower central series reaches the identity.
pub fn is_nilpotent(h: &Set) -> bool {
    let mut current = h.clone();
    loop {
        if current.len() == 1 {
            return true;
        }
        let next = commutator_group(&current, h);
        if next == current {
            return false;
        }
        current = next;
    }
}

pub fn is_pi_number(n: u64, pi: &PrimeSet) -> bool {
    hallstone::primes::prime_divisors(n).into_iter().all(|p| pi.contains(p))
}

/// `h` is the direct product of a π-group and a nilpotent π′-group: its π-elements
/// and its π′-elements each form subgroups, the second nilpotent, with orders
/// multiplying to `|h|`.
pub fn npi_member(h: &Set, pi: &PrimeSet) -> bool {
    let degree = degree_of(h);
    let part = |set: &PrimeSet| -> Set {
        h.iter()
            .filter(|x| is_pi_number(x.order(), set))
            .cloned()
            .collect()
    };
    let a = part(pi);
    let b = part(&pi.complement());
    let closed = |s: &Set| closure(degree, &s.iter().cloned().collect::<Vec<_>>()) == *s;
    closed(&a) && closed(&b) && a.len() * b.len() == h.len() && is_nilpotent(&b)
}

/// `H^G`-conjugacy classes of the subgroups in `subs`.
pub fn class_count(g: &Set, subs: &[Set]) -> usize {
    let mut seen: BTreeSet<Set> = BTreeSet::new();
    let mut classes = 0;
    for s in subs {
        if seen.contains(s) {
            continue;
        }
        classes += 1;
        for x in g {
            seen.insert(conjugate(s, x));
        }
    }
    classes
}

pub fn carter(g: &Set) -> Vec<Set> {
    brute_subgroups(g)
        .into_iter()
        .filter(|h| is_nilpotent(h) && normalizer(g, h) == *h)
        .collect()
}

fn as_group(x: &Set) -> Group {
    let gens: Vec<Permutation> = x.iter().cloned().collect();
    hallstone::generate_group(degree_of(x), &gens).unwrap()
}

fn as_subgroup(group: &Group, s: &Set) -> Subgroup {
    let gens: Vec<Permutation> = s.iter().cloned().collect();
    group.subgroup_from(&gens).unwrap()
}

/// N^π-projectors of `x` from the definition: for each normal `K`, the factor group
/// `x/K` is built as a permutation group on cosets and the image of `U` must be
/// N^π-maximal among all subgroups of it.
pub fn projectors_by_quotients(x: &Set, pi: &PrimeSet) -> Vec<Set> {
    let group = as_group(x);
    let whole = group.whole();
    let subs = brute_subgroups(x);
    let normals: Vec<&Set> = subs.iter().filter(|k| is_normal(x, k)).collect();
    let mut alive: Vec<Set> = subs.clone();
    for k in normals {
        let q = quotient_group(&whole, &as_subgroup(&group, k)).unwrap();
        let qset: Set = q.group().elements().iter().cloned().collect();
        let qsubs = brute_subgroups(&qset);
        let members: Vec<&Set> = qsubs.iter().filter(|s| npi_member(s, pi)).collect();
        let maximal: Vec<&&Set> = members
            .iter()
            .filter(|m| !members.iter().any(|n| n.len() > m.len() && m.is_subset(n)))
            .collect();
        alive.retain(|u| {
            let image: Set = u
                .iter()
                .map(|p| {
                    let e = group.index_of(p).unwrap();
                    q.group().element(q.image(e)).clone()
                })
                .collect();
            maximal.iter().any(|m| ***m == image)
        });
    }
    alive
}

/// Subgroups of `g` that are projectors of every subgroup containing them.
pub fn covering_by_quotients(g: &Set, pi: &PrimeSet) -> Vec<Set> {
    let subs = brute_subgroups(g);
    let projectors = projectors_by_quotients(g, pi);
    projectors
        .into_iter()
        .filter(|e| {
            subs.iter()
                .filter(|x| e.is_subset(x))
                .all(|x| projectors_by_quotients(x, pi).contains(e))
        })
        .collect()
}

pub fn sets(list: &[Subgroup]) -> Vec<Set> {
    list.iter().map(set_of).collect()
}

pub fn sorted(mut list: Vec<Set>) -> Vec<Set> {
    list.sort();
    list
}

/// Groups small enough for the quotient oracles.
pub const SMALL: &[&str] = &["C1", "C6", "S3", "D8", "Q8", "A4", "D10", "D12", "S4", "SL(2,3)", "C3xS3"];

/// A representative π-list for a group order: subsets of π(G) and some cofinite sets.
pub fn some_pis(order: u64) -> Vec<PrimeSet> {
    hallstone::primes::pi_sweep(order)
}
