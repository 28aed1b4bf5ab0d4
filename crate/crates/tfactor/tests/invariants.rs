//! Property tests for the structural guarantees: ratios stay in range, the
//! merge is order-independent and count-additive, per-class figures
//! reconcile with the system figure, and gate comparisons are monotone.

mod common;

use common::*;
use proptest::collection::vec;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use std::path::PathBuf;
use tfactor::{
    compute_report, merge_models, parse_source, CategoryRules, ProjectModel, Ratio,
};

fn method_strategy() -> impl Strategy<Value = MethodSpec> {
    (any::<bool>(), any::<bool>()).prop_map(|(template, proto)| MethodSpec { template, proto })
}

fn class_strategy() -> impl Strategy<Value = ClassSpec> {
    (any::<u8>(), any::<bool>(), vec(method_strategy(), 0..5))
        .prop_map(|(kind_seed, template, methods)| ClassSpec { kind_seed, template, methods })
}

fn file_strategy() -> impl Strategy<Value = FileSpec> {
    (any::<bool>(), vec(class_strategy(), 0..4), vec(method_strategy(), 0..3))
        .prop_map(|(java, classes, free)| FileSpec { java, classes, free })
}

fn project_strategy() -> impl Strategy<Value = Vec<FileSpec>> {
    vec(file_strategy(), 1..5)
}

/// A numerator/denominator pair with `num <= den`, i.e. a valid proportion.
fn proportion() -> impl Strategy<Value = Ratio> {
    (1u64..2000).prop_flat_map(|den| (0..=den).prop_map(move |num| Ratio::new(num, den)))
}

/// Full-magnitude proportions (up to u64::MAX) plus the undefined 0/0 form,
/// for stressing the u128 cross-multiplication.
fn wide_proportion() -> impl Strategy<Value = Ratio> {
    prop_oneof![
        1 => Just(Ratio::undefined()),
        9 => any::<u64>().prop_flat_map(|den| {
            (0..=den).prop_map(move |num| if den == 0 {
                Ratio::undefined()
            } else {
                Ratio::new(num, den)
            })
        }),
    ]
}

fn fragments(project: &[FileSpec]) -> Vec<ProjectModel> {
    project
        .iter()
        .enumerate()
        .map(|(idx, spec)| {
            let source = render_file(spec, idx, PLAIN);
            let mut facts = parse_source(source.as_bytes(), spec.dialect());
            facts.file.path = PathBuf::from(spec.file_name(idx));
            ProjectModel::from_facts(facts)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reports_match_the_spec_and_stay_in_range(project in project_strategy()) {
        let model = merge_models(fragments(&project)).unwrap();
        let report = compute_report(&model, None, &CategoryRules::default());
        let mut expected = Counts::default();
        for (idx, spec) in project.iter().enumerate() {
            expected.absorb(expected_counts(spec, idx));
        }
        assert_report_matches(&report, &expected);
        for ratio in [report.ctf, report.mtf_system].into_iter().chain(report.mtf_per_class.values().copied()) {
            prop_assert!(ratio.num() <= ratio.den(), "proportion out of range: {ratio}");
        }
    }

    #[test]
    fn merge_is_order_invariant(project in project_strategy(), seed in any::<u64>()) {
        let sorted = merge_models(fragments(&project)).unwrap();
        let mut shuffled_inputs = fragments(&project);
        shuffled_inputs.shuffle(&mut StdRng::seed_from_u64(seed));
        let shuffled = merge_models(shuffled_inputs).unwrap();
        prop_assert_eq!(
            serde_json::to_vec(&sorted).unwrap(),
            serde_json::to_vec(&shuffled).unwrap(),
            "merged models must be byte-identical regardless of input order"
        );
    }

    #[test]
    fn merge_adds_counts_fragment_by_fragment(project in project_strategy()) {
        let rules = CategoryRules::default();
        let parts = fragments(&project);
        let mut class_num = 0u64;
        let mut class_den = 0u64;
        let mut method_num = 0u64;
        let mut method_den = 0u64;
        for part in &parts {
            let report = compute_report(part, None, &rules);
            class_num += report.ctf.num();
            class_den += report.ctf.den();
            method_num += report.mtf_system.num();
            method_den += report.mtf_system.den();
        }
        let merged = compute_report(&merge_models(parts).unwrap(), None, &rules);
        prop_assert_eq!(merged.ctf, Ratio::new(class_num, class_den));
        prop_assert_eq!(merged.mtf_system, Ratio::new(method_num, method_den));
    }

    #[test]
    fn per_class_figures_reconcile_with_the_system_figure(project in project_strategy()) {
        let model = merge_models(fragments(&project)).unwrap();
        let report = compute_report(&model, None, &CategoryRules::default());
        let class_num: u64 = report.mtf_per_class.values().map(|r| r.num()).sum();
        let class_den: u64 = report.mtf_per_class.values().map(|r| r.den()).sum();
        // The system figure counts everything per-class figures do, plus
        // free functions; the difference is exactly the free functions.
        let free_total = project
            .iter()
            .filter(|f| !f.java)
            .flat_map(|f| f.free.iter())
            .filter(|m| !m.proto)
            .count() as u64;
        let free_template = project
            .iter()
            .filter(|f| !f.java)
            .flat_map(|f| f.free.iter())
            .filter(|m| !m.proto && m.template)
            .count() as u64;
        prop_assert_eq!(report.mtf_system.den(), class_den + free_total);
        prop_assert_eq!(report.mtf_system.num(), class_num + free_template);
    }
}

proptest! {
    #[test]
    fn gate_comparison_is_monotone(actual in proportion(), a in proportion(), b in proportion()) {
        let (low, high) = if a.value_ge(&b) { (b, a) } else { (a, b) };
        if actual.value_ge(&high) {
            prop_assert!(actual.value_ge(&low), "passing at {high} must imply passing at {low}");
        }
        // Reflexivity: every defined value passes its own threshold.
        prop_assert!(actual.value_ge(&actual));
    }

    #[test]
    fn value_comparison_never_overflows(a in wide_proportion(), b in wide_proportion()) {
        let forward = a.value_cmp(&b);
        let backward = b.value_cmp(&a);
        match (forward, backward) {
            (Some(x), Some(y)) => prop_assert_eq!(x, y.reverse()),
            (None, None) => {} // at least one side undefined
            other => prop_assert!(false, "asymmetric comparability: {:?}", other),
        }
        if a.den() == 0 || b.den() == 0 {
            prop_assert_eq!(forward, None, "undefined values never compare");
        }
    }

    #[test]
    fn decimal_rendering_is_six_digit_and_accurate(r in proportion()) {
        let text = r.decimal().unwrap();
        let re = regex::Regex::new(r"^\d+\.\d{6}$").unwrap();
        prop_assert!(re.is_match(&text), "bad shape: {}", text);
        let parsed: f64 = text.parse().unwrap();
        let truth = r.num() as f64 / r.den() as f64;
        prop_assert!((parsed - truth).abs() <= 5.0e-7 + 1.0e-12, "{} vs {}", parsed, truth);
    }
}
