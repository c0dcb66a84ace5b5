mod common;

use common::*;
use hallstone::formation::{in_npi, is_dnormal, is_dnormal_reduction, npi_residual, quotient_in_npi};
use hallstone::io::{format_group_file, parse_group_text};
use hallstone::lattice::normal_subgroups;
use hallstone::{generate_group, quotient_group, Permutation, PrimeSet};
use proptest::prelude::*;

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn prime_set() -> impl Strategy<Value = PrimeSet> {
    (proptest::collection::btree_set(prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], 0..4), any::<bool>())
        .prop_map(|(primes, cofinite)| {
            if cofinite {
                PrimeSet::cofinite(primes).unwrap()
            } else {
                PrimeSet::finite(primes).unwrap()
            }
        })
}

const HOSTS: &[&str] = &["S4", "SL(2,3)", "C2xA4", "S3xS3", "A5", "D12"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_with_inverses(
        a in permutation(7), b in permutation(7), c in permutation(7)
    ) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
    }

    #[test]
    fn cycle_notation_round_trips(a in permutation(9)) {
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse(&text, 9).unwrap(), a.clone());
        let order = a.order();
        let mut power = Permutation::identity(9);
        for _ in 0..order {
            power = power.compose(&a);
        }
        prop_assert!(power.is_identity());
    }

    #[test]
    fn group_files_round_trip(gens in proptest::collection::vec(permutation(6), 0..4)) {
        let text = format_group_file(6, &gens);
        let parsed = parse_group_text(&text).unwrap();
        prop_assert_eq!(&parsed.generators, &gens);
        prop_assert_eq!(format_group_file(6, &parsed.generators), text);
    }

    #[test]
    fn generated_groups_match_naive_closure(gens in proptest::collection::vec(permutation(5), 0..3)) {
        let g = generate_group(5, &gens).unwrap();
        let naive = closure(5, &gens);
        prop_assert_eq!(g.order(), naive.len());
        prop_assert_eq!(120 % g.order(), 0);
        let listed: Set = g.elements().iter().cloned().collect();
        prop_assert_eq!(listed, naive);
    }

    #[test]
    fn prime_set_algebra(a in prime_set(), b in prime_set(), p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(11)]) {
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_ne!(a.contains(p), a.complement().contains(p));
        prop_assert_eq!(a.union(&b).contains(p), a.contains(p) || b.contains(p));
        prop_assert!(a.is_subset_of(&a.union(&b)));
        let n = 2u64.pow(3) * 3 * 25 * 7;
        prop_assert_eq!(a.part_of(n) * a.complement().part_of(n), n);
    }

    #[test]
    fn subgroup_operations(host in 0..HOSTS.len(), seeds in proptest::collection::vec(0usize..1000, 1..3), g_seed in 0usize..1000) {
        let g = group(HOSTS[host]);
        let elems: Vec<u32> = seeds.iter().map(|s| (s % g.order()) as u32).collect();
        let h = g.subgroup_generated(&elems);
        let whole = g.whole();
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(set_of(&h), closure(g.degree(), &h.generator_permutations()));
        let n = whole.normalizer(&h);
        prop_assert!(h.is_subgroup_of(&n) && n.has_normal(&h));
        prop_assert_eq!(set_of(&n), normalizer(&set_of(&whole), &set_of(&h)));
        let x = (g_seed % g.order()) as u32;
        let conj = h.conjugate(x);
        prop_assert_eq!(conj.order(), h.order());
        prop_assert_eq!(set_of(&conj), conjugate(&set_of(&h), g.element(x)));
        let c = whole.centralizer(&h);
        prop_assert!(c.is_subgroup_of(&n));
        let k = g.subgroup_generated(&[x]);
        let meet = h.intersection(&k);
        let joined = h.join(&k);
        prop_assert!(meet.is_subgroup_of(&h) && meet.is_subgroup_of(&k));
        prop_assert!(h.is_subgroup_of(&joined) && k.is_subgroup_of(&joined));
        prop_assert_eq!(h.permutes_with(&k), h.order() * k.order() / meet.order() == joined.order());
    }

    #[test]
    fn dnormality_properties(host in 0..HOSTS.len(), seeds in proptest::collection::vec(0usize..1000, 1..3), pi in prime_set()) {
        let g = group(HOSTS[host]);
        let elems: Vec<u32> = seeds.iter().map(|s| (s % g.order()) as u32).collect();
        let h = g.subgroup_generated(&elems);
        let whole = g.whole();
        prop_assert_eq!(is_dnormal(&whole, &h, &pi), is_dnormal_reduction(&whole, &h, &pi));
        prop_assert!(is_dnormal(&h, &h, &pi));
        if whole.has_normal(&h) {
            prop_assert!(is_dnormal(&whole, &h, &pi));
        }
        let d = in_npi(&h, &pi);
        prop_assert_eq!(d.member, npi_member(&set_of(&h), &pi));
    }

    #[test]
    fn residual_quotients_lie_in_the_class(host in 0..HOSTS.len(), pi in prime_set()) {
        let g = group(HOSTS[host]);
        let whole = g.whole();
        let r = npi_residual(&whole, &pi).unwrap();
        prop_assert!(whole.has_normal(&r));
        prop_assert!(quotient_in_npi(&whole, &r, &pi));
        for n in normal_subgroups(&whole) {
            let q = quotient_group(&whole, &n).unwrap();
            prop_assert_eq!(q.group().order() * n.order(), whole.order());
            if quotient_in_npi(&whole, &n, &pi) {
                prop_assert!(r.is_subgroup_of(&n));
            }
        }
    }
}
