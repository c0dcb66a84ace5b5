//! The class `N^π` of direct products of a π-group and a nilpotent π′-group:
//! membership, residuals, Dnormality, projectors and covering subgroups.
//!
//! Projectors are computed from their definition. The image `UK/K` of `U` in
//! `G/K` is tested for `N^π`-maximality through the correspondence between
//! subgroups of `G/K` and subgroups of `G` containing `K`: `UK/K` is
//! `N^π`-maximal exactly when `UK/K ∈ N^π` and no `L > UK` has `L/K ∈ N^π`.
//! Membership of a section `L/K` is decided by [`quotient_in_npi`].

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::hall::sylow_subgroups;
use crate::lattice::SubgroupLattice;
use crate::primes::{p_part, PrimeSet};

/// `X = X_π × X_π′` with `X_π = O_π(X)` and `X_π′ = O_π′(X)`.
#[derive(Clone, Debug, Serialize)]
pub struct NpiDecomposition {
    pub subject: Subgroup,
    pub pi_part: Subgroup,
    pub pi_prime_part: Subgroup,
    pub member: bool,
}

/// Decomposes `x` as `O_π(x) × O_π′(x)`; a member when the orders multiply to
/// `|x|` and `O_π′(x)` is nilpotent.
pub fn in_npi(x: &Subgroup, pi: &PrimeSet) -> NpiDecomposition {
    let pi_part = x.core_o_pi(pi);
    let pi_prime_part = x.core_o_pi(&pi.complement());
    let member =
        pi_part.order() * pi_prime_part.order() == x.order() && pi_prime_part.is_nilpotent();
    NpiDecomposition {
        subject: x.clone(),
        pi_part,
        pi_prime_part,
        member,
    }
}

/// Whether `upper/lower ∈ N^π`, for `lower ⊴ upper`, without building the quotient.
///
/// `Q = upper/lower` lies in `N^π` iff it has a normal Hall π-subgroup and a
/// normal Sylow `p`-subgroup for each `p ∈ π′`. For a set `ρ` with `|Q|_ρ = m`,
/// `Q` has a normal Hall `ρ`-subgroup iff the `ρ`-elements of `Q` (the `x` with
/// `x^m ∈ lower`) generate a subgroup of order `m`.
pub fn quotient_in_npi(upper: &Subgroup, lower: &Subgroup, pi: &PrimeSet) -> bool {
    let index = (upper.order() / lower.order()) as u64;
    let group = upper.group();
    let normal_hall = |rho: &PrimeSet| {
        let m = rho.part_of(index);
        if m == 1 || m == index {
            return true;
        }
        let bound = lower.order() * m as usize;
        let mut acc = lower.clone();
        for &x in upper.elements() {
            if acc.contains(x) || !lower.contains(group.pow(x, m)) {
                continue;
            }
            match acc.extended_bounded(&[x], bound) {
                Some(next) => acc = next,
                None => return false,
            }
        }
        acc.order() == bound
    };
    normal_hall(pi)
        && crate::primes::prime_divisors(index)
            .into_iter()
            .filter(|&p| !pi.contains(p))
            .all(|p| normal_hall(&PrimeSet::of(&[p])))
}

/// `X^{N^π}`: intersection of the normal subgroups `N` of `x` with `x/N ∈ N^π`.
pub fn npi_residual(x: &Subgroup, pi: &PrimeSet) -> Result<Subgroup> {
    let mut residual = x.clone();
    for n in crate::lattice::normal_subgroups(x) {
        if quotient_in_npi(x, &n, pi) {
            residual = residual.intersection(&n);
        }
    }
    if !quotient_in_npi(x, &residual, pi) {
        return Err(Error::Internal(format!(
            "quotient by the N^{pi} residual is not in N^{pi}"
        )));
    }
    Ok(residual)
}

/// `N^π`-Dnormality via the characterisation: normality when `|π| ≤ 1`; otherwise
/// `O^π(H) ⊴ G` and `O^π(G) ≤ N_G(H)`.
pub fn is_dnormal(g: &Subgroup, h: &Subgroup, pi: &PrimeSet) -> bool {
    if !pi.has_at_least_two() {
        return g.has_normal(h);
    }
    g.has_normal(&h.residual_o_pi(pi))
        && g.residual_o_pi(pi)
            .generators()
            .iter()
            .all(|&x| h.normalized_by(x))
}

/// Sylow subgroups of `g` for every prime dividing `|g|`.
pub fn sylow_table(g: &Subgroup) -> BTreeMap<u64, Vec<Subgroup>> {
    g.prime_divisors()
        .into_iter()
        .map(|p| (p, sylow_subgroups(g, p)))
        .collect()
}

/// `N^π`-Dnormality from the reduction conditions: every Sylow `G_p` reducing into
/// `H` normalises `H` when `p ∈ π′`, and normalises `O^π(H)` when `p ∈ π`.
/// For `|π| ≤ 1` this is normality. The condition `π(|G:H|) ⊆ Char(N^π)` always
/// holds because `N^π` has full characteristic.
pub fn is_dnormal_reduction(g: &Subgroup, h: &Subgroup, pi: &PrimeSet) -> bool {
    is_dnormal_reduction_with(g, h, pi, &sylow_table(g))
}

/// [`is_dnormal_reduction`] with the Sylow subgroups of `g` precomputed.
pub fn is_dnormal_reduction_with(
    g: &Subgroup,
    h: &Subgroup,
    pi: &PrimeSet,
    sylows: &BTreeMap<u64, Vec<Subgroup>>,
) -> bool {
    if !pi.has_at_least_two() {
        return g.has_normal(h);
    }
    let residual = h.residual_o_pi(pi);
    sylows.iter().all(|(&p, list)| {
        let target = p_part(h.order() as u64, p) as usize;
        let normalised = if pi.contains(p) { &residual } else { h };
        list.iter()
            .filter(|sp| sp.intersection(h).order() == target)
            .all(|sp| sp.generators().iter().all(|&x| normalised.normalized_by(x)))
    })
}

/// Lattice-backed `N^π` computations for one group and one `π`, with caches.
///
/// Subgroups are addressed by lattice position. Any lattice subgroup can serve as
/// the ambient group, which covering subgroups need.
pub struct NpiAnalysis<'a> {
    lattice: &'a SubgroupLattice,
    pi: PrimeSet,
    member: Vec<bool>,
    normals: Vec<OnceCell<Vec<usize>>>,
    upper_pi: Vec<OnceCell<usize>>,
    residual: Vec<OnceCell<usize>>,
    derived: Vec<OnceCell<usize>>,
    projectors: Vec<OnceCell<Vec<usize>>>,
    sections: RefCell<HashMap<(usize, usize), bool>>,
}

impl<'a> NpiAnalysis<'a> {
    pub fn new(lattice: &'a SubgroupLattice, pi: &PrimeSet) -> Self {
        let n = lattice.len();
        let trivial = lattice.get(0);
        let member = lattice
            .subgroups()
            .iter()
            .map(|s| quotient_in_npi(s, trivial, pi))
            .collect();
        NpiAnalysis {
            lattice,
            pi: pi.clone(),
            member,
            normals: cells(n),
            upper_pi: cells(n),
            residual: cells(n),
            derived: cells(n),
            projectors: cells(n),
            sections: RefCell::new(HashMap::new()),
        }
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn pi(&self) -> &PrimeSet {
        &self.pi
    }

    fn sub(&self, i: usize) -> &'a Subgroup {
        self.lattice.get(i)
    }

    fn contains(&self, outer: usize, inner: usize) -> bool {
        self.sub(inner).is_subgroup_of(self.sub(outer))
    }

    pub fn is_member(&self, i: usize) -> bool {
        self.member[i]
    }

    /// Normal subgroups of subgroup `x`.
    pub fn normals(&self, x: usize) -> &[usize] {
        self.normals[x].get_or_init(|| self.lattice.normal_ids(self.sub(x)))
    }

    /// `upper/lower ∈ N^π` for `lower ⊴ upper`.
    pub fn section(&self, upper: usize, lower: usize) -> bool {
        if let Some(&v) = self.sections.borrow().get(&(upper, lower)) {
            return v;
        }
        let v = quotient_in_npi(self.sub(upper), self.sub(lower), &self.pi);
        self.sections.borrow_mut().insert((upper, lower), v);
        v
    }

    /// Positions of `O^π(x)`.
    pub fn upper_pi(&self, x: usize) -> usize {
        *self.upper_pi[x].get_or_init(|| self.lattice.id(&self.sub(x).residual_o_pi(&self.pi)))
    }

    /// `N^π`-maximal subgroups of subgroup `ambient`.
    pub fn maximal_members(&self, ambient: usize) -> Vec<usize> {
        self.lattice
            .subgroups_of(self.sub(ambient))
            .into_iter()
            .filter(|&u| self.member[u])
            .filter(|&u| {
                !self.lattice.overgroups(u).iter().any(|&v| {
                    v != u && self.member[v] && self.contains(ambient, v)
                })
            })
            .collect()
    }

    /// `N^π`-projectors of subgroup `ambient`.
    pub fn projectors_of(&self, ambient: usize) -> &[usize] {
        self.projectors[ambient].get_or_init(|| {
            let mut alive = self.maximal_members(ambient);
            let mut normals: Vec<usize> = self
                .normals(ambient)
                .iter()
                .copied()
                .filter(|&k| k != 0 && k != ambient)
                .collect();
            normals.reverse();
            for k in normals {
                let kernel = self.sub(k);
                alive.retain(|&u| {
                    let uk = self.lattice.id(&self.sub(u).join(kernel));
                    self.section(uk, k)
                        && !self.lattice.overgroups(uk).iter().any(|&l| {
                            l != uk && self.contains(ambient, l) && self.section(l, k)
                        })
                });
            }
            alive
        })
    }

    /// `N^π`-covering subgroups of subgroup `ambient`.
    pub fn covering_of(&self, ambient: usize) -> Vec<usize> {
        self.projectors_of(ambient)
            .iter()
            .copied()
            .filter(|&e| {
                self.lattice
                    .overgroups(e)
                    .iter()
                    .filter(|&&x| self.contains(ambient, x))
                    .all(|&x| self.projectors_of(x).contains(&e))
            })
            .collect()
    }

    /// `h` is `N^π`-Dnormal in `k`, for `h ≤ k`.
    pub fn dnormal(&self, k: usize, h: usize) -> bool {
        let (kk, hh) = (self.sub(k), self.sub(h));
        if !self.pi.has_at_least_two() {
            return kk.has_normal(hh);
        }
        kk.has_normal(self.sub(self.upper_pi(h)))
            && self
                .sub(self.upper_pi(k))
                .generators()
                .iter()
                .all(|&x| hh.normalized_by(x))
    }

    /// `h` is Dnormal in no intermediate subgroup of `ambient` other than itself.
    pub fn self_dnormalizing(&self, ambient: usize, h: usize) -> bool {
        self.lattice
            .overgroups(h)
            .iter()
            .filter(|&&k| k != h && self.contains(ambient, k))
            .all(|&k| !self.dnormal(k, h))
    }

    /// Position of `x^{N^π}`.
    pub fn residual(&self, x: usize) -> Result<usize> {
        if let Some(&r) = self.residual[x].get() {
            return Ok(r);
        }
        let mut acc = self.sub(x).clone();
        for &n in self.normals(x) {
            if self.section(x, n) {
                acc = acc.intersection(self.sub(n));
            }
        }
        let r = self.lattice.id(&acc);
        if !self.section(x, r) {
            return Err(Error::Internal(format!(
                "quotient by the N^{} residual is not in N^{}",
                self.pi, self.pi
            )));
        }
        Ok(*self.residual[x].get_or_init(|| r))
    }

    fn derived(&self, x: usize) -> usize {
        *self.derived[x].get_or_init(|| self.lattice.id(&self.sub(x).derived_subgroup()))
    }

    /// For every `X` with `h ≤ X ≤ ambient`: `h ∩ X^{N^π} ≤ (X^{N^π})′`.
    pub fn star(&self, ambient: usize, h: usize) -> Result<bool> {
        let hh = self.sub(h);
        for &x in self.lattice.overgroups(h) {
            if !self.contains(ambient, x) {
                continue;
            }
            let r = self.residual(x)?;
            let (res, der) = (self.sub(r), self.sub(self.derived(r)));
            if hh.elements().iter().any(|&e| res.contains(e) && !der.contains(e)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `N^π`-maximal subgroups of the lattice group.
pub fn npi_maximal_subgroups(lattice: &SubgroupLattice, pi: &PrimeSet) -> Vec<Subgroup> {
    let analysis = NpiAnalysis::new(lattice, pi);
    to_subgroups(lattice, &analysis.maximal_members(lattice.whole_id()))
}

/// Fails with [`Error::NotAMember`] when `h` is not a subgroup of the lattice group.
pub fn is_self_dnormalizing(lattice: &SubgroupLattice, h: &Subgroup, pi: &PrimeSet) -> Result<bool> {
    let id = lattice_position(lattice, h)?;
    Ok(NpiAnalysis::new(lattice, pi).self_dnormalizing(lattice.whole_id(), id))
}

pub fn projectors(lattice: &SubgroupLattice, pi: &PrimeSet) -> Vec<Subgroup> {
    let analysis = NpiAnalysis::new(lattice, pi);
    to_subgroups(lattice, analysis.projectors_of(lattice.whole_id()))
}

pub fn covering_subgroups(lattice: &SubgroupLattice, pi: &PrimeSet) -> Vec<Subgroup> {
    let analysis = NpiAnalysis::new(lattice, pi);
    to_subgroups(lattice, &analysis.covering_of(lattice.whole_id()))
}

/// Fails with [`Error::NotAMember`] when `h` is not a subgroup of the lattice group.
pub fn star_property(lattice: &SubgroupLattice, h: &Subgroup, pi: &PrimeSet) -> Result<bool> {
    let id = lattice_position(lattice, h)?;
    NpiAnalysis::new(lattice, pi).star(lattice.whole_id(), id)
}

fn lattice_position(lattice: &SubgroupLattice, h: &Subgroup) -> Result<usize> {
    lattice
        .position(h)
        .ok_or_else(|| Error::NotAMember(format!("{h:?} is not a subgroup of the lattice group")))
}

/// Self-normalising nilpotent subgroups.
pub fn carter_subgroups(lattice: &SubgroupLattice) -> Vec<Subgroup> {
    let whole = lattice.get(lattice.whole_id());
    lattice
        .subgroups()
        .iter()
        .filter(|h| h.is_nilpotent() && whole.normalizer(h) == **h)
        .cloned()
        .collect()
}

fn cells<T>(n: usize) -> Vec<OnceCell<T>> {
    (0..n).map(|_| OnceCell::new()).collect()
}

fn to_subgroups(lattice: &SubgroupLattice, ids: &[usize]) -> Vec<Subgroup> {
    ids.iter().map(|&i| lattice.get(i).clone()).collect()
}

/// Projectors and covering subgroups of a group, with the conjugacy partition.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectorReport {
    pub pi: PrimeSet,
    pub projectors: Vec<Subgroup>,
    pub covering: Vec<Subgroup>,
    /// Projectors grouped by conjugacy class, classes ordered by representative.
    pub classes: Vec<Vec<Subgroup>>,
    pub nonempty: bool,
    pub equal_sets: bool,
    /// The projectors form exactly one full conjugacy class.
    pub single_class: bool,
}

pub fn projector_report(lattice: &SubgroupLattice, pi: &PrimeSet) -> ProjectorReport {
    let analysis = NpiAnalysis::new(lattice, pi);
    projector_report_with(&analysis)
}

pub(crate) fn projector_report_with(analysis: &NpiAnalysis<'_>) -> ProjectorReport {
    let lattice = analysis.lattice();
    let whole = lattice.whole_id();
    let projector_ids = analysis.projectors_of(whole).to_vec();
    let covering_ids = analysis.covering_of(whole);
    let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &p in &projector_ids {
        by_class.entry(lattice.class_of(p)).or_default().push(p);
    }
    let single_class = by_class.len() == 1
        && by_class
            .iter()
            .all(|(&c, members)| lattice.classes()[c].members == *members);
    let mut classes: Vec<Vec<usize>> = by_class.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    ProjectorReport {
        pi: analysis.pi().clone(),
        nonempty: !projector_ids.is_empty(),
        equal_sets: projector_ids == covering_ids,
        single_class,
        projectors: to_subgroups(lattice, &projector_ids),
        covering: to_subgroups(lattice, &covering_ids),
        classes: classes.iter().map(|c| to_subgroups(lattice, c)).collect(),
    }
}

/// Outcome of the two-part decomposition check on `N^π`-maximal subgroups.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionCheck {
    /// Every maximal `M` equals `M_π′ · C` for a Hall π-subgroup `C` of `C_G(M_π′)`.
    pub factorization: bool,
    /// Maximal subgroups with conjugate π′-parts are conjugate.
    pub conjugacy: bool,
    pub checked: usize,
    pub failures: Vec<Subgroup>,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.factorization && self.conjugacy
    }
}

/// For every `N^π`-maximal `M = M_π × M_π′`: `M = M_π′ C` for some Hall π-subgroup
/// `C` of `C_G(M_π′)`; and any two maximal subgroups whose π′-parts are conjugate
/// are themselves conjugate.
pub fn decomposition_check(lattice: &SubgroupLattice, pi: &PrimeSet) -> DecompositionCheck {
    let whole = lattice.get(lattice.whole_id());
    let maximal = npi_maximal_subgroups(lattice, pi);
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for m in &maximal {
        let decomposition = in_npi(m, pi);
        let m_prime = decomposition.pi_prime_part;
        let centralizer = whole.centralizer(&m_prime);
        let target = pi.part_of(centralizer.order() as u64) as usize;
        let found = lattice
            .subgroups_of(&centralizer)
            .into_iter()
            .map(|i| lattice.get(i))
            .filter(|c| c.order() == target)
            .any(|c| m_prime.join(c) == *m && m_prime.order() * c.order() == m.order());
        if !found {
            failures.push(m.clone());
        }
        parts.push(lattice.class_of(lattice.id(&m_prime)));
    }
    let factorization = failures.is_empty();
    let mut conjugacy = true;
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            let same_parts = parts[i] == parts[j];
            let same_class =
                lattice.class_of(lattice.id(&maximal[i])) == lattice.class_of(lattice.id(&maximal[j]));
            if same_parts && !same_class {
                conjugacy = false;
                failures.push(maximal[i].clone());
            }
        }
    }
    DecompositionCheck {
        factorization,
        conjugacy,
        checked: maximal.len(),
        failures,
    }
}
