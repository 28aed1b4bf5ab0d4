//! Turn a report into a CI gate. Thresholds are compared as exact
//! rationals by cross-multiplication, so 3/11 against 0.27272727 resolves
//! correctly where floats would be on thin ice, and the exact boundary
//! passes.
//!
//! ```bash
//! cargo run --example ci_gate
//! ```

use tfactor::{
    compute_report, evaluate_gates, merge_models, parse_source, CategoryRules, Dialect,
    GateConfig, ProjectModel, Ratio,
};

fn main() -> tfactor::Result<()> {
    // Eleven classes, three of them parameterized: ctf = 3/11.
    let mut fragments = Vec::new();
    for idx in 0..11 {
        let source = if idx < 3 {
            format!("public class Gen{idx}<T> {{\n}}\n")
        } else {
            format!("public class Plain{idx} {{\n}}\n")
        };
        let mut facts = parse_source(source.as_bytes(), Dialect::JavaGenerics);
        facts.file.path = format!("f{idx}.java").into();
        fragments.push(ProjectModel::from_facts(facts));
    }
    let model = merge_models(fragments)?;
    let report = compute_report(&model, None, &CategoryRules::default());
    println!("ctf = {} = {}\n", report.ctf, report.ctf.decimal().unwrap());

    for threshold in ["0.25", "3/11", "0.27272727", "0.27272728", "0.5"] {
        let gate = GateConfig {
            min_ctf: Some(Ratio::parse(threshold).unwrap()),
            ..GateConfig::default()
        };
        let result = evaluate_gates(&report, &gate);
        let exit_code = i32::from(!result.passed);
        println!("--gate-ctf {threshold:<12} exit {exit_code}");
        for violation in &result.violations {
            println!("    {violation}");
        }
    }
    Ok(())
}
