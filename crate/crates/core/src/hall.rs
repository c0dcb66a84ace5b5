//! Separability, Hall subgroups, `E_ρ`/`D_ρ`, complement π-bases, Hall π-systems
//! and Sylow π-bases.
//!
//! Hall systems are indexed only by sets `ρ ⊆ π(G)`: every `ρ` with the same
//! intersection with `π(G)` names the same Hall subgroup. A `ρ` is admissible when
//! `π ∩ π(G) ⊆ ρ` or `ρ ∩ π = ∅`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::lattice::cyclic_extension;
use crate::primes::PrimeSet;

/// All subgroups of `ambient` whose order is a `ρ`-number, in canonical order.
pub fn rho_subgroups(ambient: &Subgroup, rho: &PrimeSet) -> Vec<Subgroup> {
    let target = rho.part_of(ambient.order() as u64) as usize;
    let group = ambient.group();
    let mut out = cyclic_extension(
        ambient,
        |x| rho.is_number(group.element_order(x)),
        target,
        |order| target.is_multiple_of(order),
    );
    out.sort();
    out
}

/// `Hall_ρ(ambient)`: subgroups of order exactly `|ambient|_ρ`.
pub fn hall_subgroups(ambient: &Subgroup, rho: &PrimeSet) -> Vec<Subgroup> {
    let target = rho.part_of(ambient.order() as u64) as usize;
    if target == ambient.order() {
        return vec![ambient.clone()];
    }
    if target == 1 {
        return vec![ambient.group().trivial()];
    }
    rho_subgroups(ambient, rho)
        .into_iter()
        .filter(|h| h.order() == target)
        .collect()
}

pub fn sylow_subgroups(ambient: &Subgroup, p: u64) -> Vec<Subgroup> {
    hall_subgroups(ambient, &PrimeSet::of(&[p]))
}

/// `E_ρ`: a Hall `ρ`-subgroup exists.
pub fn satisfies_e(ambient: &Subgroup, rho: &PrimeSet) -> bool {
    !hall_subgroups(ambient, rho).is_empty()
}

/// `D_ρ`: `E_ρ` holds and every `ρ`-subgroup lies in a Hall `ρ`-subgroup. Checked
/// on the inclusion-maximal `ρ`-subgroups.
pub fn satisfies_d(ambient: &Subgroup, rho: &PrimeSet) -> bool {
    let target = rho.part_of(ambient.order() as u64) as usize;
    if target == ambient.order() {
        return true;
    }
    let subgroups = rho_subgroups(ambient, rho);
    if !subgroups.iter().any(|h| h.order() == target) {
        return false;
    }
    subgroups.iter().all(|h| {
        h.order() == target
            || subgroups
                .iter()
                .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
    })
}

/// Every composition factor is a `π`-group or a `π′`-group.
pub fn is_pi_separable(ambient: &Subgroup, pi: &PrimeSet) -> bool {
    let complement = pi.complement();
    ambient
        .composition_factors()
        .iter()
        .all(|f| pi.is_number(f.order) || complement.is_number(f.order))
}

/// Soluble relative to `set`: separable for `set`, and every composition factor that
/// is a `set`-group has prime-power order.
pub fn is_pi_soluble(ambient: &Subgroup, set: &PrimeSet) -> bool {
    let complement = set.complement();
    ambient.composition_factors().iter().all(|f| {
        if set.is_number(f.order) {
            crate::primes::is_prime_power(f.order)
        } else {
            complement.is_number(f.order)
        }
    })
}

/// Split of `π(ambient)` into `π ∩ π(G)` and `π′ ∩ π(G)`.
fn split_primes(order: usize, pi: &PrimeSet) -> (Vec<u64>, Vec<u64>) {
    crate::primes::prime_divisors(order as u64)
        .into_iter()
        .partition(|&p| pi.contains(p))
}

fn finite(primes: impl IntoIterator<Item = u64>) -> PrimeSet {
    PrimeSet::finite(primes).expect("primes from a factorisation")
}

/// Admissible `ρ ⊆ π(G)`, sorted.
pub fn admissible_rhos(order: usize, pi: &PrimeSet) -> Vec<PrimeSet> {
    let (inside, outside) = split_primes(order, pi);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << outside.len()) {
        let chosen = outside
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p);
        out.insert(finite(chosen.clone()));
        out.insert(finite(inside.iter().copied().chain(chosen)));
    }
    out.into_iter().collect()
}

/// One Hall `p′`-subgroup for each `p ∈ π′ ∩ π(G)`, and one Hall `π′`-subgroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComplementBasis {
    pub pi: PrimeSet,
    pub complements: BTreeMap<u64, Subgroup>,
    pub hall_pi_prime: Subgroup,
}

impl ComplementBasis {
    /// The basis as a set of subgroups.
    pub fn members(&self) -> Vec<&Subgroup> {
        let mut out: Vec<&Subgroup> = self.complements.values().collect();
        out.push(&self.hall_pi_prime);
        out.sort();
        out.dedup();
        out
    }

    pub fn conjugate(&self, g: Elem) -> ComplementBasis {
        ComplementBasis {
            pi: self.pi.clone(),
            complements: self
                .complements
                .iter()
                .map(|(&p, s)| (p, s.conjugate(g)))
                .collect(),
            hall_pi_prime: self.hall_pi_prime.conjugate(g),
        }
    }
}

/// All complement π-bases, in lexicographic order of the choices.
pub fn complement_pi_bases(ambient: &Subgroup, pi: &PrimeSet) -> Vec<ComplementBasis> {
    let (_, outside) = split_primes(ambient.order(), pi);
    let hall_pi_prime = hall_subgroups(ambient, &pi.complement());
    let choices: Vec<(u64, Vec<Subgroup>)> = outside
        .iter()
        .map(|&p| (p, hall_subgroups(ambient, &PrimeSet::all_but(&[p]))))
        .collect();
    if hall_pi_prime.is_empty() || choices.iter().any(|(_, c)| c.is_empty()) {
        return Vec::new();
    }
    let mut partial: Vec<BTreeMap<u64, Subgroup>> = vec![BTreeMap::new()];
    for (p, options) in &choices {
        partial = partial
            .into_iter()
            .flat_map(|chosen| {
                options.iter().map(move |s| {
                    let mut next = chosen.clone();
                    next.insert(*p, s.clone());
                    next
                })
            })
            .collect();
    }
    partial
        .into_iter()
        .flat_map(|complements| {
            hall_pi_prime.iter().map(move |h| ComplementBasis {
                pi: pi.clone(),
                complements: complements.clone(),
                hall_pi_prime: h.clone(),
            })
        })
        .collect()
}

/// One Hall `ρ`-subgroup for each admissible `ρ`, pairwise permutable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HallSystem {
    pub pi: PrimeSet,
    pub members: BTreeMap<PrimeSet, Subgroup>,
}

/// Members are keyed by the printed form of `ρ`, e.g. `"{2,3}"`.
impl Serialize for HallSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let members: BTreeMap<String, &Subgroup> = self
            .members
            .iter()
            .map(|(rho, s)| (rho.to_string(), s))
            .collect();
        let mut st = serializer.serialize_struct("HallSystem", 2)?;
        st.serialize_field("pi", &self.pi)?;
        st.serialize_field("members", &members)?;
        st.end()
    }
}

/// Checks a `ρ ↦ subgroup` family inside `ambient`: orders are `ρ`-parts and all
/// pairs permute. Keys are reduced to `ρ ∩ π(ambient)`; keys that collapse together
/// must name the same subgroup.
pub fn check_hall_family(
    ambient: &Subgroup,
    members: &BTreeMap<PrimeSet, Subgroup>,
) -> std::result::Result<(), String> {
    let primes = ambient.prime_divisors();
    let mut reduced: BTreeMap<PrimeSet, &Subgroup> = BTreeMap::new();
    for (rho, h) in members {
        let expected = rho.part_of(ambient.order() as u64) as usize;
        if h.order() != expected || !h.is_subgroup_of(ambient) {
            return Err(format!(
                "member for {rho} has order {}, expected a subgroup of order {expected}",
                h.order()
            ));
        }
        let key = rho.restrict(&primes);
        if let Some(prev) = reduced.insert(key.clone(), h) {
            if prev != h {
                return Err(format!("two different Hall {key}-subgroups"));
            }
        }
    }
    let list: Vec<(&PrimeSet, &Subgroup)> = members.iter().collect();
    for (i, (ra, a)) in list.iter().enumerate() {
        for (rb, b) in &list[i + 1..] {
            if !a.permutes_with(b) {
                return Err(format!("members for {ra} and {rb} do not permute"));
            }
        }
    }
    Ok(())
}

impl HallSystem {
    pub fn validate(&self, ambient: &Subgroup) -> Result<()> {
        let expected = admissible_rhos(ambient.order(), &self.pi);
        if !self.members.keys().eq(expected.iter()) {
            return Err(Error::NotASystem("index sets differ from admissible sets".into()));
        }
        check_hall_family(ambient, &self.members).map_err(Error::NotASystem)
    }

    pub fn member(&self, rho: &PrimeSet) -> Option<&Subgroup> {
        self.members.get(rho)
    }

    /// Memberwise conjugate `Σ^g`.
    pub fn conjugate(&self, g: Elem) -> HallSystem {
        HallSystem {
            pi: self.pi.clone(),
            members: self
                .members
                .iter()
                .map(|(rho, s)| (rho.clone(), s.conjugate(g)))
                .collect(),
        }
    }

    /// The complement π-basis contained in the system.
    pub fn complement_basis(&self, ambient: &Subgroup) -> ComplementBasis {
        let primes = ambient.prime_divisors();
        let (_, outside) = split_primes(ambient.order(), &self.pi);
        let complements = outside
            .iter()
            .map(|&p| {
                let rho = finite(primes.iter().copied().filter(|&q| q != p));
                (p, self.members[&rho].clone())
            })
            .collect();
        ComplementBasis {
            pi: self.pi.clone(),
            complements,
            hall_pi_prime: self.members[&finite(outside)].clone(),
        }
    }
}

pub fn conjugate_system(system: &HallSystem, g: Elem) -> HallSystem {
    system.conjugate(g)
}

/// The Hall π-system generated by a complement π-basis: `G_ρ` is the intersection
/// of the complements for `p ∈ π′ ∖ ρ`, further intersected with the Hall
/// `π′`-member when `ρ ∩ π = ∅`.
pub fn hall_system_from_basis(ambient: &Subgroup, basis: &ComplementBasis) -> Result<HallSystem> {
    let (inside, outside) = split_primes(ambient.order(), &basis.pi);
    let inside = finite(inside);
    let mut members = BTreeMap::new();
    for rho in admissible_rhos(ambient.order(), &basis.pi) {
        let mut acc = ambient.clone();
        for p in outside.iter().filter(|&&p| !rho.contains(p)) {
            acc = acc.intersection(&basis.complements[p]);
        }
        if !inside.is_subset_of(&rho) {
            acc = acc.intersection(&basis.hall_pi_prime);
        }
        members.insert(rho, acc);
    }
    let system = HallSystem {
        pi: basis.pi.clone(),
        members,
    };
    system.validate(ambient)?;
    Ok(system)
}

/// A basis that failed to generate a system, with the reason.
#[derive(Clone, Debug, Serialize)]
pub struct GenerationFailure {
    pub basis: ComplementBasis,
    pub reason: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HallSystemEnumeration {
    pub bases: usize,
    pub systems: Vec<HallSystem>,
    pub failures: Vec<GenerationFailure>,
}

/// Every Hall π-system generated by a complement π-basis, deduplicated and sorted.
pub fn enumerate_hall_systems(ambient: &Subgroup, pi: &PrimeSet) -> HallSystemEnumeration {
    let bases = complement_pi_bases(ambient, pi);
    let mut seen = HashSet::new();
    let mut out = HallSystemEnumeration {
        bases: bases.len(),
        ..Default::default()
    };
    for basis in bases {
        match hall_system_from_basis(ambient, &basis) {
            Ok(system) => {
                if seen.insert(system.clone()) {
                    out.systems.push(system);
                }
            }
            Err(e) => out.failures.push(GenerationFailure {
                basis,
                reason: e.to_string(),
            }),
        }
    }
    out.systems.sort();
    out
}

/// `∏_{S ∈ K_π} |G : N_G(S)|`
pub fn hall_system_count_formula(ambient: &Subgroup, basis: &ComplementBasis) -> u64 {
    basis
        .members()
        .into_iter()
        .map(|s| (ambient.order() / ambient.normalizer(s).order()) as u64)
        .product()
}

/// One Hall `π`-subgroup and one Sylow `p`-subgroup for each `p ∈ π′ ∩ π(G)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SylowBasis {
    pub pi: PrimeSet,
    pub hall_pi: Subgroup,
    pub sylows: BTreeMap<u64, Subgroup>,
}

impl SylowBasis {
    pub fn validate(&self, ambient: &Subgroup) -> Result<()> {
        let n = ambient.order() as u64;
        if self.hall_pi.order() as u64 != self.pi.part_of(n) {
            return Err(Error::NotASystem("Hall π-member has the wrong order".into()));
        }
        for (&p, s) in &self.sylows {
            if s.order() as u64 != crate::primes::p_part(n, p) {
                return Err(Error::NotASystem(format!("Sylow {p}-member has the wrong order")));
            }
        }
        let members: Vec<&Subgroup> = std::iter::once(&self.hall_pi).chain(self.sylows.values()).collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if !a.permutes_with(b) {
                    return Err(Error::NotASystem("Sylow basis members do not permute".into()));
                }
            }
        }
        Ok(())
    }
}

/// The Sylow π-basis contained in a system: the members for `π ∩ π(G)` and `{p}`.
pub fn sylow_basis_of_system(ambient: &Subgroup, system: &HallSystem) -> SylowBasis {
    let (inside, outside) = split_primes(ambient.order(), &system.pi);
    SylowBasis {
        pi: system.pi.clone(),
        hall_pi: system.members[&finite(inside)].clone(),
        sylows: outside
            .iter()
            .map(|&p| (p, system.members[&finite([p])].clone()))
            .collect(),
    }
}

/// The Hall π-system generated by a Sylow π-basis: each `G_ρ` is the product of the
/// relevant basis members, multiplied in increasing prime order.
pub fn system_from_sylow_basis(ambient: &Subgroup, basis: &SylowBasis) -> Result<HallSystem> {
    let (inside, _) = split_primes(ambient.order(), &basis.pi);
    let inside = finite(inside);
    let mut members = BTreeMap::new();
    for rho in admissible_rhos(ambient.order(), &basis.pi) {
        let mut acc = if inside.is_subset_of(&rho) {
            basis.hall_pi.clone()
        } else {
            ambient.group().trivial()
        };
        for (&p, sylow) in &basis.sylows {
            if !rho.contains(p) {
                continue;
            }
            acc = acc.product(sylow).ok_or_else(|| {
                Error::BasisMembersDoNotPermute(format!("while forming the member for {rho}"))
            })?;
        }
        members.insert(rho, acc);
    }
    let system = HallSystem {
        pi: basis.pi.clone(),
        members,
    };
    system.validate(ambient)?;
    Ok(system)
}

/// Conjugation orbit of a system under `ambient`, sorted.
pub fn system_orbit(ambient: &Subgroup, system: &HallSystem) -> Vec<HallSystem> {
    let mut seen: HashSet<HallSystem> = HashSet::from([system.clone()]);
    let mut orbit = vec![system.clone()];
    let mut i = 0;
    while i < orbit.len() {
        let current = orbit[i].clone();
        i += 1;
        for &g in ambient.generators() {
            let next = current.conjugate(g);
            if seen.insert(next.clone()) {
                orbit.push(next);
            }
        }
    }
    orbit.sort();
    orbit
}

/// Whether the conjugation orbit of one system is the full list. False when empty.
pub fn is_transitive(ambient: &Subgroup, systems: &[HallSystem]) -> bool {
    match systems.first() {
        Some(first) => system_orbit(ambient, first) == systems,
        None => false,
    }
}

/// Whether `ambient` acts transitively on its Hall π-systems.
pub fn orbit_is_all(ambient: &Subgroup, pi: &PrimeSet) -> bool {
    is_transitive(ambient, &enumerate_hall_systems(ambient, pi).systems)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DuReport {
    /// (i) π-separable.
    pub separable: bool,
    /// (ii) `E_π`, `E_π′`, `E_{π∪{q}}`, `E_{π′∪{p}}`.
    pub cond_ii: bool,
    /// (iii) `E_π`, `E_π′`, `E_{p,q}`.
    pub cond_iii: bool,
    pub consistent: bool,
}

/// Evaluates the three conditions of Du's characterisation of π-separability,
/// with `p` and `q` ranging over `π ∩ π(G)` and `π′ ∩ π(G)`.
pub fn du_equivalence(ambient: &Subgroup, pi: &PrimeSet) -> DuReport {
    let (inside, outside) = split_primes(ambient.order(), pi);
    let e = |primes: Vec<u64>| satisfies_e(ambient, &finite(primes));
    let base = e(inside.clone()) && e(outside.clone());
    let pairs = || {
        inside
            .iter()
            .flat_map(|&p| outside.iter().map(move |&q| (p, q)))
    };
    let cond_ii = base
        && pairs().all(|(p, q)| {
            e(inside.iter().copied().chain([q]).collect())
                && e(outside.iter().copied().chain([p]).collect())
        });
    let cond_iii = base && pairs().all(|(p, q)| e(vec![p, q]));
    let separable = is_pi_separable(ambient, pi);
    DuReport {
        separable,
        cond_ii,
        cond_iii,
        consistent: separable == cond_ii && cond_ii == cond_iii,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DpiReport {
    pub two_in_pi: bool,
    pub basis_exists: bool,
    pub d_pi: bool,
    /// `2 ∈ π`, a complement π-basis exists, and `D_π` holds.
    pub hypothesis: bool,
    /// π-separable.
    pub conclusion: bool,
    pub violation: bool,
}

/// A group with a complement π-basis satisfying `D_π` with `2 ∈ π` must be π-separable.
pub fn dpi_implies_separable_check(ambient: &Subgroup, pi: &PrimeSet) -> DpiReport {
    let two_in_pi = pi.contains(2);
    let basis_exists = !complement_pi_bases(ambient, pi).is_empty();
    let d_pi = satisfies_d(ambient, pi);
    let hypothesis = two_in_pi && basis_exists && d_pi;
    let conclusion = is_pi_separable(ambient, pi);
    DpiReport {
        two_in_pi,
        basis_exists,
        d_pi,
        hypothesis,
        conclusion,
        violation: hypothesis && !conclusion,
    }
}
