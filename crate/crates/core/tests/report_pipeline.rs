use hopf_forge::format::{parse_hopf, to_canonical_string};
use hopf_forge::report::CHECK_KEYS;
use hopf_forge::zoo::{self, ZooSpec};
use hopf_forge::{build_report, ReportOptions};

#[test]
fn report_survives_a_file_round_trip() {
    let h = zoo::build_taft(5, 2, None).unwrap();
    let back = parse_hopf(&to_canonical_string(&h)).unwrap();
    let opts = ReportOptions::default();
    assert_eq!(build_report(&h, &opts).unwrap().to_json(), build_report(&back, &opts).unwrap().to_json());
}

#[test]
fn corpus_reports_have_no_failures() {
    for spec in zoo::corpus() {
        let h = spec.build().unwrap();
        let r = build_report(&h, &ReportOptions::default()).unwrap();
        assert!(!r.any_failed(), "{}", r.to_text());
        let keys: Vec<&str> = r.checks.iter().map(|c| c.key.as_str()).collect();
        assert_eq!(keys, CHECK_KEYS);
    }
}

#[test]
fn omega_choice_changes_exponent_not_verdicts() {
    let h = zoo::build_taft(5, 1, None).unwrap();
    let mut exps = Vec::new();
    for k in 1..5 {
        let r = build_report(&h, &ReportOptions { omega_power: k, ..Default::default() }).unwrap();
        assert!(!r.any_failed(), "omega power {k}\n{}", r.to_text());
        exps.push(r.x_exponent.unwrap());
    }
    exps.sort();
    assert_eq!(exps, [1, 2, 3, 4]);
}

#[test]
fn dual_group_algebra_report_over_a_large_enough_field() {
    let h = ZooSpec::Dual(Box::new(ZooSpec::Cyclic { orders: vec![5], order: None })).build().unwrap();
    let r = build_report(&h, &ReportOptions::default()).unwrap();
    assert_eq!(r.grouplikes, Some(5));
    assert_eq!(r.semisimple, Some(true));
    assert!(!r.any_failed());
}
