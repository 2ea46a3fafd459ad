use std::sync::Arc;

use proptest::prelude::*;

use extended_brauer::falgebra::{
    conjugation_action, fixed_space, jacobson_radical, lift_idempotent, nilpotency_degree, relative_trace,
    relative_trace_with_reps, splitting_degree, trace_image, Algebra, Fe, Field, Subspace, Vector,
};
use extended_brauer::groups::{
    compute_k, coset_reps, sylow_subgroup, symmetric_group, FiniteGroup, Perm, Side, Subgroup,
};
use extended_brauer::interior::{extended_brauer_quotient, make_kn_interior};

fn sub(g: &Arc<FiniteGroup>, gens: &[&[&[usize]]]) -> Subgroup {
    let perms: Vec<Perm> = gens.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
    Subgroup::from_perms(g, &perms).unwrap()
}

fn vector(f: &Field, codes: &[u32]) -> Vector {
    codes.iter().map(|&c| f.element(c % f.order())).collect()
}

fn combine(f: &Field, space: &Subspace, codes: &[u32]) -> Vector {
    space.combine(f, &vector(f, &codes[..space.dim()]))
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just((2, 1)), Just((2, 2)), Just((2, 3)), Just((3, 1)), Just((3, 2)), Just((5, 1)), Just((7, 2))]
        .prop_map(|(p, e)| Field::new(p, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (f.element(a % f.order()), f.element(b % f.order()), f.element(c % f.order()));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        let p = f.characteristic() as u64;
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Fe::ONE);
        }
    }

    #[test]
    fn generated_groups_obey_lagrange(
        x in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        y in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        i in any::<usize>(), j in any::<usize>(), k in any::<usize>(),
    ) {
        let g = FiniteGroup::from_generators(vec![Perm::new(x).unwrap(), Perm::new(y).unwrap()]).unwrap();
        let n = g.order();
        prop_assert_eq!(120 % n, 0);
        let (i, j, k) = (i % n, j % n, k % n);
        prop_assert_eq!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
        prop_assert_eq!(g.mul(i, g.inv(i)), g.identity());
        prop_assert_eq!(n % g.element_order(i), 0);
    }

    #[test]
    fn group_algebra_is_associative(
        f in field_strategy(),
        x in prop::collection::vec(any::<u32>(), 6),
        y in prop::collection::vec(any::<u32>(), 6),
        z in prop::collection::vec(any::<u32>(), 6),
    ) {
        let s3 = symmetric_group(3).unwrap();
        let kg = Algebra::group_algebra(&Subgroup::whole(&s3), &f);
        let (x, y, z) = (vector(&f, &x), vector(&f, &y), vector(&f, &z));
        prop_assert_eq!(kg.mul(&kg.mul(&x, &y), &z), kg.mul(&x, &kg.mul(&y, &z)));
        prop_assert_eq!(kg.mul(kg.unit(), &x), x.clone());
        prop_assert_eq!(kg.mul(&x, &kg.add(&y, &z)), kg.add(&kg.mul(&x, &y), &kg.mul(&x, &z)));
    }

    #[test]
    fn relative_traces_compose(chain in 0usize..4, b in prop::collection::vec(any::<u32>(), 24)) {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let one = Subgroup::trivial(&s4);
        let c2 = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let d8 = sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let c3 = sub(&s4, &[&[&[0, 1, 2]]]);
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let (r, q, h) = [(&one, &c2, &d8), (&c2, &v4, &g), (&one, &c3, &a4), (&v4, &a4, &g)][chain];
        let f = Field::new(2, 2).unwrap();
        let act = conjugation_action(&g, &g);
        let a = relative_trace(&f, &act, &one, r, &vector(&f, &b)).unwrap();
        let two_step = relative_trace(&f, &act, q, h, &relative_trace(&f, &act, r, q, &a).unwrap()).unwrap();
        prop_assert_eq!(two_step, relative_trace(&f, &act, r, h, &a).unwrap());
    }

    #[test]
    fn brauer_map_is_multiplicative(
        scenario in 0usize..3,
        x in prop::collection::vec(any::<u32>(), 24),
        y in prop::collection::vec(any::<u32>(), 24),
    ) {
        let s4 = symmetric_group(4).unwrap();
        let s3 = symmetric_group(3).unwrap();
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
        let (g, n, p, f) = match scenario {
            0 => (Subgroup::whole(&s3), a3.clone(), a3, Field::new(3, 1).unwrap()),
            1 => (Subgroup::whole(&s4), a4, v4.clone(), Field::new(2, 2).unwrap()),
            _ => (Subgroup::whole(&s4), v4.clone(), v4, Field::new(2, 2).unwrap()),
        };
        let a = make_kn_interior(&g, &n, &f).unwrap();
        let k = compute_k(&g, &n, &p).unwrap();
        let q = extended_brauer_quotient(&a, &p, &k).unwrap();
        let fixed = fixed_space(&f, a.dim(), a.phi(), &p);
        let (u, v) = (combine(&f, &fixed, &x), combine(&f, &fixed, &y));
        let alg = a.algebra();
        prop_assert_eq!(
            q.brauer(&alg.mul(&u, &v)).unwrap(),
            q.algebra().mul(&q.brauer(&u).unwrap(), &q.brauer(&v).unwrap())
        );
        prop_assert_eq!(q.brauer(alg.unit()).unwrap(), q.algebra().unit().clone());
    }

    #[test]
    fn idempotents_lift_through_the_radical(which in any::<bool>(), noise in prop::collection::vec(any::<u32>(), 6)) {
        // kC6 over GF(3) has exactly four idempotents, so a lift is
        // determined by its class modulo the radical
        let c6 = FiniteGroup::from_generators(vec![Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap()]).unwrap();
        let g = Subgroup::whole(&c6);
        let f = Field::new(3, 1).unwrap();
        let kg = Algebra::group_algebra(&g, &f);
        let j = jacobson_radical(&kg).unwrap();
        let s = g.position(c6.index_of(&Perm::from_cycles(5, &[&[3, 4]]).unwrap()).unwrap()).unwrap();
        let half = f.inv(f.from_int(2));
        let sign = if which { Fe::ONE } else { f.neg(Fe::ONE) };
        let mut e = kg.unit().clone();
        e[s] = f.add(e[s], sign);
        let e: Vector = e.iter().map(|&c| f.mul(half, c)).collect();
        let a = kg.add(&e, &combine(&f, &j, &noise));
        let lifted = lift_idempotent(&kg, &a, &j).unwrap();
        prop_assert_eq!(lifted, e);
    }

    #[test]
    fn radical_is_a_nilpotent_ideal_with_semisimple_quotient(which in 0usize..5, f in field_strategy()) {
        let s3 = symmetric_group(3).unwrap();
        let c6 = FiniteGroup::from_generators(vec![Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap()]).unwrap();
        let a4 = FiniteGroup::from_generators(vec![
            Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
        ])
        .unwrap();
        // the decomposition needs a splitting field
        let p = f.characteristic();
        let split = [&s3, &c6, &a4].iter().all(|g| f.degree() % splitting_degree(g, p) == 0);
        prop_assume!(split || which == 3);
        let alg = match which {
            0 => Algebra::group_algebra(&Subgroup::whole(&s3), &f),
            1 => Algebra::group_algebra(&Subgroup::whole(&c6), &f),
            2 => Algebra::group_algebra(&Subgroup::whole(&a4), &f),
            3 => Algebra::diagonal(&f, 3),
            _ => {
                let kg = Algebra::group_algebra(&Subgroup::whole(&s3), &f);
                kg.subalgebra(&kg.center()).unwrap().algebra
            }
        };
        let j = jacobson_radical(&alg).unwrap();
        prop_assert!(alg.is_two_sided_ideal(&j));
        prop_assert!(j.basis().iter().all(|b| alg.is_nilpotent(b)));
        nilpotency_degree(&alg, &j).unwrap();
        let quot = alg.quotient(&j).unwrap();
        prop_assert_eq!(jacobson_radical(&quot.algebra).unwrap().dim(), 0);
    }

    #[test]
    fn relative_trace_ignores_coset_representatives(
        pick in 0usize..3,
        shifts in prop::collection::vec(any::<usize>(), 24),
        b in prop::collection::vec(any::<u32>(), 24),
    ) {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let q = match pick {
            0 => sub(&s4, &[&[&[0, 1]]]),
            1 => sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
            _ => sub(&s4, &[&[&[0, 1, 2]]]),
        };
        let f = Field::new(2, 2).unwrap();
        let act = conjugation_action(&g, &g);
        let one = Subgroup::trivial(&s4);
        let a = relative_trace(&f, &act, &one, &q, &vector(&f, &b)).unwrap();
        let reps = coset_reps(&g, &q, Side::Left).unwrap();
        let moved: Vec<usize> =
            reps.iter().zip(&shifts).map(|(&r, &t)| s4.mul(r, q.members()[t % q.order()])).collect();
        prop_assert_eq!(
            relative_trace_with_reps(&f, &act, &q, &moved, &a).unwrap(),
            relative_trace_with_reps(&f, &act, &q, &reps, &a).unwrap()
        );
    }
}

#[test]
fn trace_images_only_see_sylow_subgroups() {
    let s4 = symmetric_group(4).unwrap();
    let g = Subgroup::whole(&s4);
    let act = conjugation_action(&g, &g);
    let subgroups = [
        sub(&s4, &[&[&[0, 1]], &[&[0, 1, 2]]]),
        sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]),
        sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]),
        g.clone(),
    ];
    for p in [2u32, 3] {
        let f = Field::new(p, 2).unwrap();
        for q in &subgroups {
            let qp = sylow_subgroup(q, p as usize).unwrap();
            assert_eq!(
                trace_image(&f, 24, &act, q, &g).unwrap(),
                trace_image(&f, 24, &act, &qp, &g).unwrap(),
                "p = {p}, |Q| = {}",
                q.order()
            );
        }
    }
}
