//! Finite permutation groups with an explicit element list, and their subgroups.
//!
//! A [`Group`] enumerates its elements once, sorts them, and from then on refers
//! to them by index ([`Elem`]). Every [`Subgroup`] lives inside one root group and
//! is identified by its sorted list of element indices; since the root's element
//! list is sorted, that list is also the canonical sorted list of permutations.
//!
//! Most structural operations are methods on [`Subgroup`] with `self` as the
//! ambient group, so the same code computes `N_G(H)` and `N_K(H)` for an
//! intermediate `K`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::primes::{self, PrimeSet};

/// Index of an element in its root group's sorted element list.
pub type Elem = u32;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements enumerated by [`generate_group`].
    pub max_order: usize,
    /// Maximum group order for full subgroup-lattice enumeration.
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 10_000,
            max_lattice: 500,
        }
    }
}

#[derive(Clone)]
pub struct Group(Arc<GroupData>);

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<Elem>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, Elem>,
    table: Option<Vec<Elem>>,
    inverses: Vec<Elem>,
    orders: Vec<u64>,
    limits: Limits,
}

/// The group generated by `generators` on `degree` points, with default limits.
pub fn generate_group(degree: usize, generators: &[Permutation]) -> Result<Group> {
    generate_group_with(degree, generators, Limits::default())
}

pub fn generate_group_with(
    degree: usize,
    generators: &[Permutation],
    limits: Limits,
) -> Result<Group> {
    if degree == 0 {
        return Err(Error::NotAPermutation("degree must be positive".into()));
    }
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() >= limits.max_order {
                    return Err(Error::GroupTooLarge {
                        cap: limits.max_order,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let lookup: HashMap<Permutation, Elem> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as Elem))
        .collect();
    let generator_ids: Vec<Elem> = generators.iter().map(|g| lookup[g]).collect();
    let inverses = elements.iter().map(|p| lookup[&p.inverse()]).collect();
    let orders = elements.iter().map(Permutation::order).collect();
    let table = (elements.len() <= TABLE_LIMIT)
        .then(|| multiplication_table(&elements, &lookup, &generator_ids));
    Ok(Group(Arc::new(GroupData {
        degree,
        generators: generators.to_vec(),
        generator_ids,
        elements,
        lookup,
        table,
        inverses,
        orders,
        limits,
    })))
}

/// Fills rows of the Cayley table along a spanning tree of the right Cayley graph:
/// `a·(b·s) = (a·b)·s`.
fn multiplication_table(
    elements: &[Permutation],
    lookup: &HashMap<Permutation, Elem>,
    generators: &[Elem],
) -> Vec<Elem> {
    let n = elements.len();
    let right: Vec<Vec<Elem>> = elements
        .iter()
        .map(|x| {
            generators
                .iter()
                .map(|&s| lookup[&x.compose(&elements[s as usize])])
                .collect()
        })
        .collect();
    let mut tree: Vec<(Elem, usize)> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut order = vec![0 as Elem];
    let mut i = 0;
    while i < order.len() {
        let b = order[i];
        for (k, &c) in right[b as usize].iter().enumerate() {
            if !seen[c as usize] {
                seen[c as usize] = true;
                order.push(c);
                tree.push((b, k));
            }
        }
        i += 1;
    }
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        let row = &mut table[a * n..(a + 1) * n];
        row[0] = a as Elem;
        for (&c, &(b, k)) in order[1..].iter().zip(&tree) {
            row[c as usize] = right[row[b as usize] as usize][k];
        }
    }
    table
}

impl Group {
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    /// The sorted element list.
    pub fn elements(&self) -> &[Permutation] {
        &self.0.elements
    }

    pub fn element(&self, e: Elem) -> &Permutation {
        &self.0.elements[e as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.0.lookup.get(p).copied()
    }

    /// The identity is the least permutation, so always index 0.
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.table {
            Some(t) => t[a as usize * self.0.elements.len() + b as usize],
            None => self.0.lookup[&self.element(a).compose(self.element(b))],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverses[a as usize]
    }

    /// `g⁻¹ x g`
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        let mut n = n % self.element_order(a);
        let mut base = a;
        let mut acc = self.identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        self.0.orders[a as usize]
    }

    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn generator_ids(&self) -> &[Elem] {
        &self.0.generator_ids
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup::new(
            self.clone(),
            members,
            (0..self.order() as Elem).collect(),
            self.0.generator_ids.clone(),
        )
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::trivial(self)
    }

    /// The subgroup generated by the given permutations, which must be elements.
    pub fn subgroup_from(&self, generators: &[Permutation]) -> Result<Subgroup> {
        let ids = generators
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::NotAMember(format!("{p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&ids))
    }

    pub fn subgroup_generated(&self, generators: &[Elem]) -> Subgroup {
        Subgroup::trivial(self).extended(generators)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.0.generators)
            .finish()
    }
}

/// Elements of a subgroup as a sorted index list plus a membership bitset.
#[derive(Clone)]
pub struct Subgroup {
    group: Group,
    data: Arc<SubgroupData>,
}

struct SubgroupData {
    members: FixedBitSet,
    elements: Vec<Elem>,
    generators: Vec<Elem>,
}

/// One factor of a composition series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct CompositionFactor {
    pub order: u64,
    pub abelian: bool,
}

/// Right-coset closure `H ∪ Hx₁ ∪ ...` of `base` under right multiplication by
/// `generators` (Dimino's algorithm). Gives up once more than `bound` elements appear.
fn dimino(
    group: &Group,
    base: &Subgroup,
    generators: &[Elem],
    bound: usize,
) -> Option<(FixedBitSet, Vec<Elem>)> {
    let mut members = base.data.members.clone();
    let mut elements = base.data.elements.clone();
    let mut reps = vec![group.identity()];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        i += 1;
        for &s in generators {
            let x = group.mul(r, s);
            if members.contains(x as usize) {
                continue;
            }
            for &h in &base.data.elements {
                let y = group.mul(h, x);
                members.insert(y as usize);
                elements.push(y);
            }
            if elements.len() > bound {
                return None;
            }
            reps.push(x);
        }
    }
    elements.sort_unstable();
    Some((members, elements))
}

impl Subgroup {
    fn new(group: Group, members: FixedBitSet, elements: Vec<Elem>, generators: Vec<Elem>) -> Self {
        Subgroup {
            group,
            data: Arc::new(SubgroupData {
                members,
                elements,
                generators,
            }),
        }
    }

    pub(crate) fn trivial(group: &Group) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(0);
        Subgroup::new(group.clone(), members, vec![0], Vec::new())
    }

    /// Builds a subgroup from a membership set already known to be closed.
    pub(crate) fn from_members(group: &Group, members: FixedBitSet) -> Subgroup {
        let target = members.count_ones(..);
        let mut current = Subgroup::trivial(group);
        for e in members.ones() {
            if current.order() == target {
                break;
            }
            if !current.contains(e as Elem) {
                current = current.extended(&[e as Elem]);
            }
        }
        debug_assert_eq!(current.data.members, members);
        current
    }

    /// `⟨self, extra⟩`.
    pub fn extended(&self, extra: &[Elem]) -> Subgroup {
        self.extended_bounded(extra, usize::MAX)
            .expect("unbounded closure")
    }

    /// `⟨self, extra⟩`, or `None` once the closure exceeds `bound` elements.
    pub fn extended_bounded(&self, extra: &[Elem], bound: usize) -> Option<Subgroup> {
        let fresh: Vec<Elem> = extra
            .iter()
            .copied()
            .filter(|&x| !self.contains(x))
            .collect();
        if fresh.is_empty() {
            return Some(self.clone());
        }
        let mut generators = self.data.generators.clone();
        generators.extend(&fresh);
        let (members, elements) = dimino(&self.group, self, &generators, bound)?;
        Some(Subgroup::new(self.group.clone(), members, elements, generators))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[Elem] {
        &self.data.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.data.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.data.members
    }

    pub fn permutations(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.data.elements.iter().map(|&e| self.group.element(e))
    }

    /// Generators as permutations.
    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.data
            .generators
            .iter()
            .map(|&e| self.group.element(e).clone())
            .collect()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.data.members.contains(e as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.data.members.is_subset(&other.data.members)
    }

    pub fn index_in(&self, ambient: &Subgroup) -> usize {
        ambient.order() / self.order()
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let group = &self.group;
        let mut members = FixedBitSet::with_capacity(group.order());
        let mut elements: Vec<Elem> = self
            .data
            .elements
            .iter()
            .map(|&x| {
                let y = group.conj(x, g);
                members.insert(y as usize);
                y
            })
            .collect();
        elements.sort_unstable();
        let generators = self
            .data
            .generators
            .iter()
            .map(|&x| group.conj(x, g))
            .collect();
        Subgroup::new(group.clone(), members, elements, generators)
    }

    /// Whether `g` normalises `self`.
    pub fn normalized_by(&self, g: Elem) -> bool {
        self.data
            .generators
            .iter()
            .all(|&x| self.contains(self.group.conj(x, g)))
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        if self.order() >= other.order() {
            self.extended(other.generators())
        } else {
            other.extended(self.generators())
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.data.members.clone();
        members.intersect_with(&other.data.members);
        if members.count_ones(..) == self.order() {
            return self.clone();
        }
        Subgroup::from_members(&self.group, members)
    }

    /// The product set `AB` as a membership set.
    pub fn product_set(&self, other: &Subgroup) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.group.order());
        for &a in self.elements() {
            for &b in other.elements() {
                set.insert(self.group.mul(a, b) as usize);
            }
        }
        set
    }

    /// `AB = BA`: the product set has size `|A||B|/|A∩B|` and is closed under
    /// multiplication by the generators of both factors.
    pub fn permutes_with(&self, other: &Subgroup) -> bool {
        let set = self.product_set(other);
        let expected = self.order() * other.order() / self.intersection(other).order();
        debug_assert_eq!(set.count_ones(..), expected);
        let gens: Vec<Elem> = self
            .generators()
            .iter()
            .chain(other.generators())
            .copied()
            .collect();
        set.ones().all(|x| {
            gens.iter()
                .all(|&s| set.contains(self.group.mul(x as Elem, s) as usize))
        })
    }

    /// `AB` when it is a subgroup.
    pub fn product(&self, other: &Subgroup) -> Option<Subgroup> {
        if !self.permutes_with(other) {
            return None;
        }
        Some(self.join(other))
    }

    // ---- operations with `self` as the ambient group ----

    /// `N_self(h)`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = self.filter_members(|g| h.normalized_by(g));
        Subgroup::from_members(&self.group, members)
    }

    /// `C_self(h)`
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let group = &self.group;
        let members = self.filter_members(|g| {
            h.generators()
                .iter()
                .all(|&x| group.mul(g, x) == group.mul(x, g))
        });
        Subgroup::from_members(group, members)
    }

    fn filter_members(&self, keep: impl Fn(Elem) -> bool) -> FixedBitSet {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for &g in self.elements() {
            if keep(g) {
                members.insert(g as usize);
            }
        }
        members
    }

    /// Whether `h ⊴ self` (with `h ≤ self`).
    pub fn has_normal(&self, h: &Subgroup) -> bool {
        h.is_subgroup_of(self) && self.generators().iter().all(|&g| h.normalized_by(g))
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure_of(&self, seeds: &[Elem]) -> Subgroup {
        let mut current = Subgroup::trivial(&self.group).extended(seeds);
        loop {
            let missing: Vec<Elem> = current
                .generators()
                .iter()
                .flat_map(|&x| self.generators().iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.group.conj(x, g))
                .filter(|&y| !current.contains(y))
                .collect();
            if missing.is_empty() {
                return current;
            }
            current = current.extended(&missing);
        }
    }

    /// Subgroup generated by the elements of `self` satisfying `keep`.
    pub fn generated_by(&self, keep: impl Fn(Elem) -> bool) -> Subgroup {
        let mut current = Subgroup::trivial(&self.group);
        for &x in self.elements() {
            if !current.contains(x) && keep(x) {
                current = current.extended(&[x]);
            }
        }
        current
    }

    /// `⟨x ∈ self : |x| is a ρ-number⟩`
    pub fn generated_by_rho_elements(&self, rho: &PrimeSet) -> Subgroup {
        self.generated_by(|x| rho.is_number(self.group.element_order(x)))
    }

    /// Conjugacy classes of elements of `self`, each sorted, ordered by least member.
    pub fn element_classes(&self) -> Vec<Vec<Elem>> {
        let mut seen = FixedBitSet::with_capacity(self.group.order());
        let mut classes = Vec::new();
        for &x in self.elements() {
            if seen.contains(x as usize) {
                continue;
            }
            seen.insert(x as usize);
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                i += 1;
                for &g in self.generators() {
                    let z = self.group.conj(y, g);
                    if !seen.contains(z as usize) {
                        seen.insert(z as usize);
                        class.push(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.group.mul(a, b) == self.group.mul(b, a))
        })
    }

    /// `self′`: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let commutators: Vec<Elem> = gens
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| gens[i + 1..].iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.group.commutator(a, b))
            .collect();
        self.normal_closure_of(&commutators)
    }

    /// `self ≥ self′ ≥ self″ ≥ ...` until the series stabilises; the first entry is `self`.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("non-empty");
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().expect("non-empty").is_trivial()
    }

    /// Every Sylow subgroup is normal; tested as: for each `p`, the `p`-elements
    /// generate a subgroup of order `|self|_p` (then it is the unique Sylow `p`-subgroup).
    pub fn is_nilpotent(&self) -> bool {
        primes::factorize(self.order() as u64)
            .into_iter()
            .all(|(p, e)| {
                let rho = PrimeSet::of(&[p]);
                self.generated_by_rho_elements(&rho).order() as u64 == p.pow(e)
            })
    }

    /// `π(|self|)`
    pub fn prime_divisors(&self) -> Vec<u64> {
        primes::prime_divisors(self.order() as u64)
    }

    /// `O_π(self)`: join of the normal closures of elements that generate π-groups.
    pub fn core_o_pi(&self, pi: &PrimeSet) -> Subgroup {
        let mut core = Subgroup::trivial(&self.group);
        for class in self.element_classes() {
            let x = class[0];
            if core.contains(x) || !pi.is_number(self.group.element_order(x)) {
                continue;
            }
            let closure = self.normal_closure_of(&[x]);
            if pi.is_number(closure.order() as u64) {
                core = core.join(&closure);
            }
        }
        core
    }

    /// `O^π(self)`: generated by all `π′`-elements (equivalently by the Sylow
    /// `p`-subgroups for `p ∈ π′`).
    pub fn residual_o_pi(&self, pi: &PrimeSet) -> Subgroup {
        self.generated_by_rho_elements(&pi.complement())
    }

    /// Orders and abelianness of the factors of one composition series, top down.
    pub fn composition_factors(&self) -> Vec<CompositionFactor> {
        let mut factors = Vec::new();
        let mut current = self.clone();
        while !current.is_trivial() {
            let below = crate::lattice::maximal_normal_subgroups(&current)
                .into_iter()
                .next()
                .expect("non-trivial group has a maximal normal subgroup");
            let abelian = current.derived_subgroup().is_subgroup_of(&below);
            factors.push(CompositionFactor {
                order: (current.order() / below.order()) as u64,
                abelian,
            });
            current = below;
        }
        factors
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.data.elements == other.data.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.data.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then by sorted element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.data.elements.cmp(&other.data.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order())?;
        for (i, p) in self.generator_permutations().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("])")
    }
}

/// Serialised as the sorted list of its elements in cycle notation.
impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.order()))?;
        for p in self.permutations() {
            seq.serialize_element(&p.to_string())?;
        }
        seq.end()
    }
}
