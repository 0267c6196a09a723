use mcfarland_core::characters::{all_sums_approx, all_sums_exact, enumerate_characters};
use mcfarland_core::group::{
    abelian_invariants, frattini, quotient, stabilizer, subgroups_of_order, Elem, ElementSet,
    FinAbGroup, Subgroup,
};
use mcfarland_core::group_ring::{
    convolve, dset_character_criterion, involute_power, is_difference_set, mcfarland_params,
    two_power_params, GroupRingElement,
};
use mcfarland_core::transversal::{classify_transversal, type_i_complete, type_i_fast};
use proptest::prelude::*;

const SMALL_FACTORS: &[&[u32]] = &[
    &[2],
    &[4],
    &[6],
    &[2, 2],
    &[4, 2],
    &[3, 3],
    &[2, 2, 2],
    &[4, 4],
    &[8, 2],
    &[4, 2, 2],
    &[3, 5],
    &[2, 2, 2, 2],
    &[4, 2, 2, 2],
    &[4, 4, 2],
    &[8, 4],
    &[4, 4, 4],
    &[2, 2, 2, 2, 2, 2],
];

const TWO_GROUPS_EXP4: &[&[u32]] = &[
    &[2, 2],
    &[4, 2],
    &[2, 2, 2],
    &[4, 4],
    &[4, 2, 2],
    &[2, 2, 2, 2],
    &[4, 4, 2],
    &[4, 2, 2, 2],
];

fn group() -> impl Strategy<Value = FinAbGroup> {
    proptest::sample::select(SMALL_FACTORS).prop_map(|f| FinAbGroup::new(f).unwrap())
}

fn exp4_group() -> impl Strategy<Value = FinAbGroup> {
    proptest::sample::select(TWO_GROUPS_EXP4).prop_map(|f| FinAbGroup::new(f).unwrap())
}

fn subset_of(g: &FinAbGroup, bits: u64) -> ElementSet {
    ElementSet::new(g, g.elements().filter(|x| bits >> (x.idx() % 64) & 1 == 1))
}

fn coeffs(g: &FinAbGroup, seed: &[i8]) -> GroupRingElement {
    let c = (0..g.order()).map(|i| seed[i % seed.len()] as i64).collect();
    GroupRingElement::from_coeffs(g, c).unwrap()
}

/// Random transversal of a random subgroup, built from per-coset choices.
fn transversal(g: &FinAbGroup, pick: usize, choices: &[usize]) -> (Subgroup, ElementSet) {
    let orders: Vec<usize> = (1..=g.order()).filter(|d| g.order().is_multiple_of(*d)).collect();
    let subs = subgroups_of_order(g, orders[pick % orders.len()], None);
    let n = subs[pick % subs.len()].clone();
    let mut seen = vec![false; g.order()];
    let mut e = Vec::new();
    let mut j = 0;
    for x in g.elements() {
        if seen[x.idx()] {
            continue;
        }
        for &y in n.elements() {
            seen[g.mul(x, y).idx()] = true;
        }
        let y = n.elements()[choices[j % choices.len()] % n.order()];
        e.push(g.mul(x, y));
        j += 1;
    }
    (n.clone(), ElementSet::new(g, e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(g in group(), a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let (a, b, c) = (Elem((a % g.order()) as u32), Elem((b % g.order()) as u32), Elem((c % g.order()) as u32));
        prop_assert_eq!(g.mul(a, b), g.mul(b, a));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.identity()), a);
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.elem(&g.exps(a)).unwrap(), a);
        prop_assert_eq!(g.pow(a, g.order_of(a) as i64), g.identity());
    }

    #[test]
    fn quotient_map_is_a_homomorphism(g in group(), pick in 0usize..100, a in 0usize..1000, b in 0usize..1000) {
        let orders: Vec<usize> = (1..=g.order()).filter(|d| g.order() % d == 0).collect();
        let subs = subgroups_of_order(&g, orders[pick % orders.len()], None);
        let h = &subs[pick % subs.len()];
        let q = quotient(&g, h).unwrap();
        let (a, b) = (Elem((a % g.order()) as u32), Elem((b % g.order()) as u32));
        prop_assert_eq!(q.project(g.mul(a, b)), q.group.mul(q.project(a), q.project(b)));
        prop_assert_eq!(q.group.order() * h.order(), g.order());
        prop_assert_eq!(q.project(a) == q.group.identity(), h.contains(a));
    }

    #[test]
    fn stabilizer_is_translation_invariant(g in group(), bits in any::<u64>(), t in 0usize..1000) {
        let e = subset_of(&g, bits | 1);
        let t = Elem((t % g.order()) as u32);
        let s = stabilizer(&e).unwrap();
        prop_assert_eq!(&s, &stabilizer(&e.translate(t)).unwrap());
        for &x in s.elements() {
            prop_assert_eq!(&e.translate(x), &e);
        }
    }

    #[test]
    fn frattini_quotient_is_elementary(g in exp4_group()) {
        let phi = frattini(&g).unwrap();
        let inv = abelian_invariants(&Subgroup::whole(&g), Some(&phi)).unwrap();
        prop_assert!(inv.iter().all(|&f| f == 2));
        prop_assert_eq!(1usize << inv.len(), g.order() / phi.order());
    }

    #[test]
    fn characters_are_orthogonal(g in group()) {
        let whole = ElementSet::whole(&g);
        let sums = all_sums_approx(&whole);
        prop_assert!((sums[0].re - g.order() as f64).abs() < 1e-9);
        for z in &sums[1..] {
            prop_assert!(z.norm() < 1e-9);
        }
        let chars = enumerate_characters(&g);
        let l = g.exponent() as f64;
        for a in chars.iter().take(8) {
            for b in chars.iter().take(8) {
                let mut re = 0.0;
                let mut im = 0.0;
                for x in g.elements() {
                    let t = std::f64::consts::TAU * (a.phase(x) as f64 - b.phase(x) as f64) / l;
                    re += t.cos();
                    im += t.sin();
                }
                let expect = if a.index() == b.index() { g.order() as f64 } else { 0.0 };
                prop_assert!((re - expect).abs() < 1e-9 && im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn exact_and_float_sums_agree(g in exp4_group(), bits in any::<u64>()) {
        let e = subset_of(&g, bits);
        let exact = all_sums_exact(&e).unwrap();
        let approx = all_sums_approx(&e);
        for (z, w) in exact.iter().zip(&approx) {
            prop_assert!((z.re as f64 - w.re).abs() < 1e-9);
            prop_assert!((z.im as f64 - w.im).abs() < 1e-9);
        }
    }

    #[test]
    fn convolution_is_commutative_and_associative(
        g in group(),
        x in proptest::collection::vec(-3i8..4, 1..8),
        y in proptest::collection::vec(-3i8..4, 1..8),
        z in proptest::collection::vec(-3i8..4, 1..8),
    ) {
        let (x, y, z) = (coeffs(&g, &x), coeffs(&g, &y), coeffs(&g, &z));
        let xy = convolve(&x, &y).unwrap();
        prop_assert_eq!(&xy, &convolve(&y, &x).unwrap());
        prop_assert_eq!(
            convolve(&xy, &z).unwrap(),
            convolve(&x, &convolve(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            involute_power(&xy, -1),
            convolve(&involute_power(&x, -1), &involute_power(&y, -1)).unwrap()
        );
    }

    #[test]
    fn difference_set_iff_character_criterion(g in group(), bits in any::<u64>()) {
        let d = subset_of(&g, bits | 1);
        let v = g.order() as i64;
        let k = d.len() as i64;
        let verdict = is_difference_set(&d).unwrap();
        if v > 1 && (k * (k - 1)) % (v - 1) == 0 {
            let lambda = k * (k - 1) / (v - 1);
            let crit = dset_character_criterion(&d, k, lambda);
            prop_assert_eq!(verdict.verdict, crit.holds);
        } else if v > 1 {
            prop_assert!(!verdict.verdict);
        }
    }

    #[test]
    fn mcfarland_parameter_identity(e in 1u32..4, p in proptest::sample::select(vec![2u64, 3, 5]), n in 1u32..4) {
        let q = p.pow(e);
        let ps = mcfarland_params(q, n).unwrap();
        prop_assert_eq!(ps.lambda * (ps.v - 1), ps.k * (ps.k - 1));
        if p == 2 && n == 2 {
            let tp = two_power_params(e).unwrap();
            prop_assert_eq!((tp.v, tp.k, tp.lambda), (ps.v, ps.k, ps.lambda));
        }
    }

    #[test]
    fn classifier_witnesses_rebuild_e(g in exp4_group(), pick in 0usize..100, choices in proptest::collection::vec(0usize..64, 1..32)) {
        let (n, e) = transversal(&g, pick, &choices);
        let r = classify_transversal(&e, &n).unwrap();
        if let Some(w) = &r.type_i {
            prop_assert_eq!(&w.reconstruct(), &e);
            prop_assert_eq!(w.h1.order() * 2, e.len());
        }
        if let Some(w) = &r.type_ii {
            prop_assert_eq!(&w.reconstruct(), &e);
            prop_assert_eq!(w.e_prime.len(), 8);
        }
        prop_assert_eq!(r.neither, r.type_i.is_none() && r.type_ii.is_none());
    }

    #[test]
    fn fast_type_i_implies_complete(g in exp4_group(), pick in 0usize..100, choices in proptest::collection::vec(0usize..64, 1..32)) {
        let (_, e) = transversal(&g, pick, &choices);
        if e.len() >= 2 {
            if let Some(w) = type_i_fast(&e).unwrap() {
                prop_assert_eq!(&w.reconstruct(), &e);
                prop_assert!(type_i_complete(&e).unwrap().is_some());
            }
        }
    }
}
