//! Subgroup enumeration by cyclic extension, normal subgroups, conjugacy of subgroups.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};

/// Every subgroup of a group, in canonical order, with its conjugacy classes.
pub struct SubgroupLattice {
    group: Group,
    subgroups: Vec<Subgroup>,
    index: HashMap<Subgroup, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    overgroups: OnceLock<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least member in canonical order.
    pub representative: usize,
    /// Lattice positions, ascending.
    pub members: Vec<usize>,
}

/// Subgroups of `ambient` generated by cyclic subgroups of prime-power order whose
/// generators pass `allowed`, keeping only closures of at most `bound` elements whose
/// order passes `accept`. Discovery order; callers sort.
pub(crate) fn cyclic_extension(
    ambient: &Subgroup,
    allowed: impl Fn(Elem) -> bool,
    bound: usize,
    accept: impl Fn(usize) -> bool,
) -> Vec<Subgroup> {
    let group = ambient.group();
    let trivial = group.trivial();
    let mut seeds: Vec<Elem> = Vec::new();
    let mut seen_cyclic: HashSet<Subgroup> = HashSet::new();
    for &x in ambient.elements() {
        let order = group.element_order(x);
        if order == 1 || !crate::primes::is_prime_power(order) || !allowed(x) {
            continue;
        }
        let cyclic = trivial.extended(&[x]);
        if seen_cyclic.insert(cyclic) {
            seeds.push(x);
        }
    }

    let mut found: HashSet<Subgroup> = HashSet::new();
    let mut list = vec![trivial.clone()];
    found.insert(trivial);
    let mut i = 0;
    while i < list.len() {
        let current = list[i].clone();
        i += 1;
        for &c in &seeds {
            if current.contains(c) {
                continue;
            }
            let Some(next) = current.extended_bounded(&[c], bound) else {
                continue;
            };
            if accept(next.order()) && !found.contains(&next) {
                found.insert(next.clone());
                list.push(next);
            }
        }
    }
    list
}

/// The full subgroup lattice of `group`; fails when the order exceeds the lattice cap.
pub fn all_subgroups(group: &Group) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group)
}

impl SubgroupLattice {
    pub fn new(group: &Group) -> Result<Self> {
        let cap = group.limits().max_lattice;
        if group.order() > cap {
            return Err(Error::LatticeTooLarge {
                order: group.order(),
                cap,
            });
        }
        let whole = group.whole();
        let mut subgroups = cyclic_extension(&whole, |_| true, usize::MAX, |_| true);
        subgroups.sort();
        let index: HashMap<Subgroup, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for start in 0..subgroups.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let class_id = classes.len();
            class_of[start] = class_id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let s = &subgroups[members[k]];
                k += 1;
                for &g in group.generator_ids() {
                    let j = index[&s.conjugate(g)];
                    if class_of[j] == usize::MAX {
                        class_of[j] = class_id;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }

        Ok(SubgroupLattice {
            group: group.clone(),
            subgroups,
            index,
            classes,
            class_of,
            overgroups: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h).copied()
    }

    /// Position of a subgroup known to belong to this lattice's group.
    pub fn id(&self, h: &Subgroup) -> usize {
        self.position(h).expect("subgroup of the lattice group")
    }

    pub fn whole_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Positions of all subgroups containing subgroup `i`, itself included, ascending.
    pub fn overgroups(&self, i: usize) -> &[usize] {
        &self.overgroups.get_or_init(|| {
            (0..self.subgroups.len())
                .map(|a| {
                    let sub = &self.subgroups[a];
                    (a..self.subgroups.len())
                        .filter(|&b| sub.is_subgroup_of(&self.subgroups[b]))
                        .collect()
                })
                .collect()
        })[i]
    }

    /// Positions of the subgroups of `ambient`.
    pub fn subgroups_of(&self, ambient: &Subgroup) -> Vec<usize> {
        (0..self.subgroups.len())
            .take_while(|&i| self.subgroups[i].order() <= ambient.order())
            .filter(|&i| self.subgroups[i].is_subgroup_of(ambient))
            .collect()
    }

    /// Positions of `X` with `h ≤ X ≤ ambient`.
    pub fn intermediate_ids(&self, ambient: &Subgroup, h: &Subgroup) -> Vec<usize> {
        self.overgroups(self.id(h))
            .iter()
            .copied()
            .filter(|&i| self.subgroups[i].is_subgroup_of(ambient))
            .collect()
    }

    /// All `X` with `h ≤ X ≤ ambient`, in canonical order.
    pub fn intermediate_subgroups(&self, ambient: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
        self.intermediate_ids(ambient, h)
            .into_iter()
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    /// Positions of the normal subgroups of `ambient`.
    pub fn normal_ids(&self, ambient: &Subgroup) -> Vec<usize> {
        self.subgroups_of(ambient)
            .into_iter()
            .filter(|&i| ambient.has_normal(&self.subgroups[i]))
            .collect()
    }
}

/// Normal subgroups of `ambient` in canonical order, as joins of normal closures of
/// elements. Does not need the lattice.
pub fn normal_subgroups(ambient: &Subgroup) -> Vec<Subgroup> {
    let mut closures: Vec<Subgroup> = Vec::new();
    for class in ambient.element_classes() {
        if class[0] == ambient.group().identity() {
            continue;
        }
        let closure = ambient.normal_closure_of(&class[..1]);
        if !closures.contains(&closure) {
            closures.push(closure);
        }
    }
    let trivial = ambient.group().trivial();
    let mut found: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut list = vec![trivial];
    let mut i = 0;
    while i < list.len() {
        let current = list[i].clone();
        i += 1;
        for closure in &closures {
            if closure.is_subgroup_of(&current) {
                continue;
            }
            let next = current.join(closure);
            if found.insert(next.clone()) {
                list.push(next);
            }
        }
    }
    list.sort();
    list
}

/// Non-trivial normal subgroups containing no smaller non-trivial normal subgroup.
pub fn minimal_normal_subgroups(ambient: &Subgroup) -> Vec<Subgroup> {
    let normals = normal_subgroups(ambient);
    normals
        .iter()
        .filter(|n| !n.is_trivial())
        .filter(|n| {
            !normals
                .iter()
                .any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect()
}

/// Proper normal subgroups not contained in a larger proper normal subgroup.
pub fn maximal_normal_subgroups(ambient: &Subgroup) -> Vec<Subgroup> {
    let normals = normal_subgroups(ambient);
    let proper: Vec<&Subgroup> = normals
        .iter()
        .filter(|n| n.order() < ambient.order())
        .collect();
    proper
        .iter()
        .filter(|n| {
            !proper
                .iter()
                .any(|m| m.order() > n.order() && n.is_subgroup_of(m))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// Least `g ∈ ambient` (in element order) with `a^g = b`.
pub fn are_conjugate(ambient: &Subgroup, a: &Subgroup, b: &Subgroup) -> Option<Elem> {
    if a.order() != b.order() {
        return None;
    }
    ambient
        .elements()
        .iter()
        .copied()
        .find(|&g| a.generators().iter().all(|&x| b.contains(ambient.group().conj(x, g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::perm::Permutation;

    fn sym(n: usize) -> Group {
        let cycle: Vec<usize> = (1..=n).collect();
        generate_group(
            n,
            &[
                Permutation::from_cycles(n, &[cycle]).unwrap(),
                Permutation::from_cycles(n, &[vec![1, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s4_lattice() {
        let lattice = all_subgroups(&sym(4)).unwrap();
        assert_eq!(lattice.len(), 30);
        assert_eq!(lattice.classes().len(), 11);
        assert!(lattice.get(0).is_trivial());
        assert_eq!(lattice.get(lattice.whole_id()).order(), 24);
    }

    #[test]
    fn lattice_cap() {
        let g = sym(6);
        assert!(matches!(
            all_subgroups(&g),
            Err(Error::LatticeTooLarge { order: 720, cap: 500 })
        ));
    }

    #[test]
    fn s4_normals() {
        let g = sym(4).whole();
        let orders: Vec<usize> = normal_subgroups(&g).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let minimal = minimal_normal_subgroups(&g);
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 4);
    }
}
