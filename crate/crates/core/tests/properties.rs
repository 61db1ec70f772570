use fcentral::largeness::{
    f_syndetic_algebraic, f_thick_algebraic, is_f_syndetic, is_f_thick, is_strongly_f_central,
    is_thickly_f_central,
};
use fcentral::semigroup::{direct_product, enumerate_semigroups, make_family, sample_semigroups};
use fcentral::{ElementSet, Filter, FiniteSemigroup, IdealCatalog};
use proptest::prelude::*;

fn associative(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)))))
}

fn sampled() -> impl Strategy<Value = FiniteSemigroup> {
    (4usize..=6, any::<u64>()).prop_map(|(n, seed)| sample_semigroups(n, 1, seed).unwrap().remove(0))
}

/// A sampled semigroup, a subset mask, and a choice among its subsemigroups.
fn instance() -> impl Strategy<Value = (FiniteSemigroup, ElementSet, Filter)> {
    (sampled(), any::<u64>(), any::<prop::sample::Index>()).prop_map(|(s, mask, pick)| {
        let a = ElementSet::from_mask(s.order(), mask & ((1 << s.order()) - 1));
        let subs = s.subsemigroups();
        let f = Filter::principal(subs[pick.index(subs.len())]).unwrap();
        (s, a, f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_tables_are_associative_and_round_trip(s in sampled()) {
        prop_assert!(associative(&s));
        let back = FiniteSemigroup::parse_table(&s.to_table_text()).unwrap();
        prop_assert_eq!(back.rows(), s.rows());
    }

    #[test]
    fn set_literals_round_trip(order in 1usize..=20, mask in any::<u64>()) {
        let a = ElementSet::from_mask(order, mask & ((1 << order) - 1));
        prop_assert_eq!(ElementSet::parse_literal(order, &a.to_literal()).unwrap(), a);
        prop_assert_eq!(a.complement().complement(), a);
        prop_assert_eq!(a.union(&a.complement()), ElementSet::full(order));
    }

    #[test]
    fn thick_and_syndetic_are_dual((s, a, f) in instance()) {
        let thick = is_f_thick(&s, &a, &f).unwrap();
        let syndetic = is_f_syndetic(&s, &a.complement(), &f).unwrap();
        prop_assert_eq!(thick.value(), !syndetic.value());
        prop_assert!(thick.agree());
        prop_assert!(syndetic.agree());
    }

    #[test]
    fn definitional_matches_algebraic((s, a, f) in instance()) {
        prop_assert_eq!(is_f_thick(&s, &a, &f).unwrap().value(), f_thick_algebraic(&s, &a, &f).unwrap());
        prop_assert_eq!(is_f_syndetic(&s, &a, &f).unwrap().value(), f_syndetic_algebraic(&s, &a, &f).unwrap());
    }

    #[test]
    fn thickly_is_dual_to_strongly((s, a, f) in instance()) {
        prop_assert_eq!(
            is_thickly_f_central(&s, &a, &f).unwrap(),
            !is_strongly_f_central(&s, &a.complement(), &f).unwrap()
        );
    }
}

/// Minimal left ideals as the inclusion-minimal principal left ideals `{a} ∪ S·a`.
fn minimal_left_oracle(s: &FiniteSemigroup) -> Vec<ElementSet> {
    let principal: Vec<ElementSet> = (0..s.order())
        .map(|a| {
            let mut l = ElementSet::singleton(s.order(), a);
            for x in 0..s.order() {
                l.insert(s.mul(x, a));
            }
            l
        })
        .collect();
    let mut out: Vec<ElementSet> = principal
        .iter()
        .filter(|l| principal.iter().all(|m| !m.is_subset(l) || m == *l))
        .copied()
        .collect();
    out.sort_by_key(|l| l.first());
    out.dedup();
    out
}

#[test]
fn minimal_left_ideals_match_principal_oracle() {
    for n in 1..=3 {
        for s in enumerate_semigroups(n).unwrap() {
            assert_eq!(IdealCatalog::new(&s).minimal_left_ideals, minimal_left_oracle(&s), "{s:?}");
        }
    }
}

#[test]
fn products_of_small_semigroups_are_semigroups() {
    let small: Vec<FiniteSemigroup> = (1..=2).flat_map(|n| enumerate_semigroups(n).unwrap()).collect();
    for s in &small {
        for t in &small {
            let (p, codec) = direct_product(s, t).unwrap();
            assert!(associative(&p));
            for i in 0..p.order() {
                let (x, y) = codec.unpair(i);
                assert_eq!(codec.pair(x, y), i);
                for j in 0..p.order() {
                    let (u, v) = codec.unpair(j);
                    assert_eq!(p.mul(i, j), codec.pair(s.mul(x, u), t.mul(y, v)));
                }
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    let n = s.order();
    n == t.order()
        && permutations(n)
            .iter()
            .any(|phi| (0..n).all(|x| (0..n).all(|y| phi[s.mul(x, y)] == t.mul(phi[x], phi[y]))))
}

#[test]
fn z2_times_z3_is_z6() {
    let family = |spec: &str| make_family(spec.parse().unwrap()).unwrap();
    let (p, _) = direct_product(&family("Z2"), &family("Z3")).unwrap();
    assert!(isomorphic(&p, &family("Z6")));
    let (q, _) = direct_product(&family("Z2"), &family("Z2")).unwrap();
    assert!(!isomorphic(&q, &family("Z4")));
}

#[test]
fn right_zero_singleton_is_central_but_not_strongly() {
    let rz2 = make_family("RZ2".parse().unwrap()).unwrap();
    let a = ElementSet::singleton(2, 0);
    let f = Filter::trivial(2);
    assert!(fcentral::largeness::is_central(&rz2, &a).unwrap());
    assert!(!is_strongly_f_central(&rz2, &a, &f).unwrap());
    assert!(is_thickly_f_central(&rz2, &a, &f).unwrap());
}
