use std::sync::Arc;

use extended_brauer::corresp::{
    verify_first_main, verify_prop_3_3, verify_theorem_3_1, verify_theorem_3_2, CorrespondenceReport, Status,
};
use extended_brauer::falgebra::Field;
use extended_brauer::groups::{symmetric_group, FiniteGroup, Perm, Subgroup};

fn sub(g: &Arc<FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
    let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
    Subgroup::from_perms(g, &perms).unwrap()
}

struct Scenario {
    g: Subgroup,
    n: Subgroup,
    p: Subgroup,
    field: Field,
}

fn s3_a3() -> Scenario {
    let s3 = symmetric_group(3).unwrap();
    let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
    Scenario { g: Subgroup::whole(&s3), n: a3.clone(), p: a3, field: Field::new(3, 1).unwrap() }
}

fn s4(n_is_a4: bool) -> Scenario {
    let s4 = symmetric_group(4).unwrap();
    let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
    let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
    let n = if n_is_a4 { a4 } else { v4.clone() };
    Scenario { g: Subgroup::whole(&s4), n, p: v4, field: Field::new(2, 2).unwrap() }
}

fn a4_v4() -> Scenario {
    let s4 = symmetric_group(4).unwrap();
    let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
    let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
    Scenario { g: a4, n: v4.clone(), p: v4, field: Field::new(2, 2).unwrap() }
}

fn c6_c3() -> Scenario {
    let g = FiniteGroup::from_generators(vec![Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap()]).unwrap();
    let c3 = sub(&g, &[&[&[0, 1, 2]]]);
    Scenario { g: Subgroup::whole(&g), n: c3.clone(), p: c3, field: Field::new(3, 1).unwrap() }
}

fn scenarios() -> Vec<(&'static str, Scenario)> {
    vec![("S3/A3", s3_a3()), ("S4/A4", s4(true)), ("S4/V4", s4(false)), ("A4/V4", a4_v4()), ("C6/C3", c6_c3())]
}

fn show(name: &str, r: &CorrespondenceReport) {
    eprintln!("{name} {}: {:?} {:?} {:?}", r.name, r.status, r.facts, r.diagnostics);
}

#[test]
fn theorem_3_1_on_catalog() {
    for (name, s) in scenarios() {
        let r = verify_theorem_3_1(&s.g, &s.n, &s.p, &s.g, &s.field, 7).unwrap();
        show(name, &r);
        assert_eq!(r.status, Status::Pass, "{name}");
    }
}

#[test]
fn theorem_3_2_on_catalog() {
    for (name, s) in scenarios() {
        let r = verify_theorem_3_2(&s.g, &s.n, &s.p, &s.g, &s.field, 7).unwrap();
        show(name, &r);
        assert_eq!(r.status, Status::Pass, "{name}");
    }
}

#[test]
fn prop_3_3_on_catalog() {
    let expected = [("S3/A3", 6), ("S4/A4", 24), ("S4/V4", 24), ("A4/V4", 12)];
    for (name, s) in scenarios() {
        let r = verify_prop_3_3(&s.g, &s.n, &s.p, &s.field, 7).unwrap();
        show(name, &r);
        assert_eq!(r.status, Status::Pass, "{name}");
        if let Some((_, d)) = expected.iter().find(|(n, _)| *n == name) {
            assert_eq!(r.facts.int("e_quotient_dim"), Some(*d), "{name}");
        }
    }
}

#[test]
fn first_main_small() {
    let s3 = symmetric_group(3).unwrap();
    let r = verify_first_main(&Subgroup::whole(&s3), &Field::new(2, 2).unwrap(), 1, true).unwrap();
    show("S3", &r);
    assert!(r.passed());
    let s4 = symmetric_group(4).unwrap();
    let r = verify_first_main(&Subgroup::whole(&s4), &Field::new(2, 2).unwrap(), 1, true).unwrap();
    show("S4", &r);
    assert!(r.passed());
}

#[test]
fn theorem_3_1_with_h_equal_n_has_defect_p_points() {
    for (name, s) in scenarios() {
        let r = verify_theorem_3_1(&s.g, &s.n, &s.p, &s.n, &s.field, 3).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {:?}", r.diagnostics);
        // P is a Sylow p-subgroup of N in every catalog scenario, so the
        // principal block of kN has defect P
        assert!(r.facts.int("left_defect_p").unwrap() >= 1, "{name}");
        assert_eq!(r.facts.int("left_defect_p"), r.facts.int("right_defect_p"));
        assert_eq!(r.matching.len() as i64, r.facts.int("left_defect_p").unwrap());
    }
}

#[test]
fn theorem_3_1_hypothesis_gate() {
    let g = FiniteGroup::from_generators(vec![
        Perm::from_cycles(5, &[&[0, 1]]).unwrap(),
        Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
        Perm::from_cycles(5, &[&[3, 4]]).unwrap(),
    ])
    .unwrap();
    let whole = Subgroup::whole(&g);
    let n = sub(&g, &[&[&[0, 1, 2]]]);
    let p = sub(&g, &[&[&[3, 4]]]);
    let r = verify_theorem_3_1(&whole, &n, &p, &whole, &Field::new(2, 2).unwrap(), 0).unwrap();
    assert_eq!(r.status, Status::HypothesisUnsatisfied);
    assert!(r.assertions.is_empty());
}

#[test]
fn theorem_3_2_degenerate_n_equals_g() {
    let s = s3_a3();
    let r = verify_theorem_3_2(&s.g, &s.g, &s.p, &s.g, &s.field, 0).unwrap();
    assert!(r.passed(), "{:?}", r.diagnostics);
    assert_eq!(r.facts.int("c_dim"), r.facts.int("d_dim"));
}

#[test]
fn first_main_anchors() {
    let s3 = symmetric_group(3).unwrap();
    let r = verify_first_main(&Subgroup::whole(&s3), &Field::new(2, 2).unwrap(), 0, false).unwrap();
    assert_eq!(r.facts.int("blocks"), Some(2));
    let s4 = symmetric_group(4).unwrap();
    let r = verify_first_main(&Subgroup::whole(&s4), &Field::new(2, 2).unwrap(), 0, false).unwrap();
    assert!(r.passed());
    assert_eq!(r.facts.int("blocks"), Some(1));
}
