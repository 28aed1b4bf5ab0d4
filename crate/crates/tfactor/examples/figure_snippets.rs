//! Scan two tiny in-memory snippets and walk through every counted
//! declaration, showing how the indicator flags roll up into CTF and MTF.
//!
//! ```bash
//! cargo run --example figure_snippets
//! ```

use tfactor::{
    compute_ctf, compute_mtf, parse_source, Dialect, ProjectModel,
};

const FUNCTIONS: &str = "\
void function1() {
}
template<class T>
void function2(T &x, T &y) {
}
void function3() {
}
";

const CLASSES: &str = "\
class A {
};
template<class T, int size>
class B {
    T arr[size];
};
";

fn main() {
    let functions = ProjectModel::from_facts(parse_source(
        FUNCTIONS.as_bytes(),
        Dialect::CxxTemplates,
    ));
    println!("three free functions, one with its own template clause:");
    for method in &functions.methods {
        let marker = if method.is_template { "template" } else { "plain" };
        println!("  line {:>2}  {:<12} {marker}", method.span.start, method.qualified_name);
    }
    // One template method out of three methods.
    let mtf = compute_mtf(&functions);
    println!("  mtf = {mtf} = {}\n", mtf.decimal().unwrap());

    let classes =
        ProjectModel::from_facts(parse_source(CLASSES.as_bytes(), Dialect::CxxTemplates));
    println!("two classes, one parameterized:");
    for class in &classes.classes {
        let marker = if class.is_template {
            format!("template with {} parameter(s)", class.template_param_count)
        } else {
            "plain".to_string()
        };
        println!("  line {:>2}  {:<12} {marker}", class.span.start, class.qualified_name);
    }
    let ctf = compute_ctf(&classes);
    println!("  ctf = {ctf} = {}", ctf.decimal().unwrap());
}
