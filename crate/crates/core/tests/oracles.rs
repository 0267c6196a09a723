use mcfarland_core::group::FinAbGroup;
use mcfarland_core::transversal::{ei_ej_sweep, SweepOptions};

fn sweep(factors: &[u32]) -> mcfarland_core::transversal::SearchReport {
    let mut opts = SweepOptions::extended(1);
    opts.groups = vec![FinAbGroup::new(factors).unwrap()];
    ei_ej_sweep(&opts).unwrap()
}

// |E| = 16 is the first size where type II is not automatic.
#[test]
fn order_128_sweep_sees_nontrivial_type_ii() {
    let r = sweep(&[4, 4, 4, 2]);
    assert!(r.complete);
    assert_eq!(r.satisfying_found, 0, "{:?}", r.witnesses);
    assert!(!r.details.contains_key("neither"));
    assert!(r.details["type_ii_nontrivial"] > 0);
    assert!(r.details["type_i"] > 0);
    assert_eq!(r.details["instances"], r.details["ei_instances"] + r.details["ej_instances"]);
}

#[test]
fn order_128_sweep_second_group() {
    let r = sweep(&[4, 4, 2, 2, 2]);
    assert_eq!(r.satisfying_found, 0, "{:?}", r.witnesses);
    assert_eq!(r.details["instances"], 9984);
}

/// Minutes to hours on one core; run with `--ignored`.
#[test]
#[ignore]
fn order_128_sweep_all_groups() {
    let r = ei_ej_sweep(&SweepOptions::extended(4)).unwrap();
    assert!(r.complete);
    assert_eq!(r.satisfying_found, 0, "{:?}", r.witnesses);
}
