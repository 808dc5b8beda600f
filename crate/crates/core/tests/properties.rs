use std::sync::{Arc, LazyLock};

use nilpotra_core::lab::random::random_automorphism;
use nilpotra_core::morphism::{is_primitive, primitive_witness};
use nilpotra_core::{
    commutator, is_basic, witt_count, BigInt, CommutatorTree, Endomorphism, GroupContext, HallOrder, Letter,
    NilpotentElement, Word,
};
use proptest::prelude::*;
use rand::SeedableRng;

static F33: LazyLock<Arc<GroupContext>> = LazyLock::new(|| GroupContext::new(3, 3).unwrap());
static F24: LazyLock<Arc<GroupContext>> = LazyLock::new(|| GroupContext::new(2, 4).unwrap());

fn word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank, prop_oneof![-3i64..=-1, 1i64..=3]), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, e)| Letter::new(g, e))).unwrap())
}

fn element(ctx: &'static LazyLock<Arc<GroupContext>>) -> impl Strategy<Value = NilpotentElement> {
    let rank = ctx.rank() as u32;
    word(rank, 12).prop_map(move |w| ctx.collect(&w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn collect_is_a_homomorphism(u in word(3, 12), v in word(3, 12)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(F33.collect(&uv).unwrap(), F33.collect(&u).unwrap().mul(&F33.collect(&v).unwrap()).unwrap());
        prop_assert!(F33.collect(&u.concat(&u.inverse()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn normal_form_word_round_trip(a in element(&F33)) {
        let w = a.to_word(1 << 20).unwrap();
        prop_assert_eq!(F33.collect(&w).unwrap(), a.clone());
        prop_assert_eq!(F33.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn multiplication_is_associative(a in element(&F24), b in element(&F24), c in element(&F24)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.mul(&a.inv()).unwrap().is_identity());
        prop_assert!(a.inv().mul(&a).unwrap().is_identity());
    }

    #[test]
    fn power_laws(a in element(&F33), m in -6i64..=6, k in -6i64..=6) {
        prop_assert_eq!(a.pow_i64(m).mul(&a.pow_i64(k)).unwrap(), a.pow_i64(m + k));
        prop_assert_eq!(a.pow_i64(m).pow_i64(k), a.pow_i64(m * k));
        let mut acc = F33.identity();
        for _ in 0..k.abs() {
            acc = acc.mul(&a).unwrap();
        }
        let expect = if k < 0 { acc.inv() } else { acc };
        prop_assert_eq!(a.power(&BigInt::from(k)), expect);
    }

    #[test]
    fn commutators_raise_the_filtration(a in element(&F24), b in element(&F24), c in element(&F24)) {
        let ab = commutator(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(ab.weight_filtration() >= 2);
        let abc = commutator(&[a, b, c.clone()]).unwrap();
        prop_assert!(abc.weight_filtration() >= 3);
        let deep = commutator(&[ab.clone(), abc]).unwrap();
        prop_assert!(deep.is_identity());
        prop_assert!(commutator(&[ab, c]).unwrap().weight_filtration() >= 3);
    }

    #[test]
    fn endomorphisms_are_homomorphisms(seed in any::<u64>(), a in element(&F33), b in element(&F33)) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = random_automorphism(&F33, &mut rng).unwrap();
        let g = random_automorphism(&F33, &mut rng).unwrap();
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(f.apply(&ab).unwrap(), f.apply(&a).unwrap().mul(&f.apply(&b).unwrap()).unwrap());
        prop_assert_eq!(f.compose(&g).unwrap().apply(&a).unwrap(), f.apply(&g.apply(&a).unwrap()).unwrap());
        let fi = f.invert().unwrap();
        prop_assert!(f.compose(&fi).unwrap().is_identity());
        prop_assert!(fi.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn primitive_witness_maps_x1_to_the_element(a in element(&F33)) {
        match primitive_witness(&a).unwrap() {
            Some(w) => {
                prop_assert!(is_primitive(&a));
                prop_assert!(w.is_automorphism());
                prop_assert_eq!(w.image(1), &a);
            }
            None => prop_assert!(!is_primitive(&a)),
        }
    }

    #[test]
    fn inner_automorphisms_conjugate(a in element(&F33), b in element(&F33)) {
        let tau = Endomorphism::inner(&a);
        let expect = a.mul(&b).unwrap().mul(&a.inv()).unwrap();
        prop_assert_eq!(tau.apply(&b).unwrap(), expect);
        prop_assert!(tau.ia_level().unwrap() >= 1);
    }
}

fn trees(rank: u32, weight: usize) -> Vec<CommutatorTree> {
    if weight == 1 {
        return (1..=rank).map(CommutatorTree::leaf).collect();
    }
    let mut out = Vec::new();
    for lw in 1..weight {
        for l in trees(rank, lw) {
            for r in trees(rank, weight - lw) {
                out.push(CommutatorTree::node(l.clone(), r));
            }
        }
    }
    out
}

#[test]
fn basic_predicate_counts_match_witt() {
    for n in 1..=3u32 {
        let order = HallOrder::new(n as usize);
        for m in 1..=5usize {
            let count = trees(n, m).iter().filter(|t| is_basic(t, &order)).count();
            assert_eq!(BigInt::from(count), witt_count(n as u64, m as u32), "n={n} m={m}");
        }
    }
}

#[test]
fn basic_predicate_is_invariant_under_order_preserving_relabel() {
    let small = HallOrder::new(3);
    let large = HallOrder::new(5);
    for m in 1..=4 {
        for t in trees(3, m) {
            let shifted = t.relabel(&|g| 2 * g - 1);
            assert_eq!(is_basic(&t, &small), is_basic(&shifted, &large), "{t}");
        }
    }
}

#[test]
fn hall_strata_match_witt_counts() {
    for n in 1..=5 {
        for c in 1..=4 {
            let ctx = GroupContext::new(n, c).unwrap();
            for (m, size) in ctx.basis().stratum_sizes().iter().enumerate() {
                assert_eq!(BigInt::from(*size), witt_count(n as u64, m as u32 + 1));
            }
        }
    }
}

#[test]
fn compose_oracle_two_transvections() {
    // (x1 -> x1 x2) twice is x1 -> x1 x2^2 with x2 fixed.
    let ctx = GroupContext::new(2, 3).unwrap();
    let f = Endomorphism::parse(&ctx, "x1 -> x1 x2").unwrap();
    let ff = f.compose(&f).unwrap();
    assert_eq!(ff, Endomorphism::parse(&ctx, "x1 -> x1 x2^2").unwrap());
}

#[test]
fn project_of_lift_is_identity_on_automorphisms() {
    let f32 = GroupContext::new(3, 2).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let g = random_automorphism(&f32, &mut rng).unwrap();
        for c in 2..=4 {
            assert_eq!(g.lift(c).unwrap().project(2).unwrap(), g);
        }
    }
}
