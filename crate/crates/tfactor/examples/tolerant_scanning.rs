//! The scanner is tolerant: unrecognized or broken constructs become WARN
//! or ERROR diagnostics and the scan keeps going. This example feeds it a
//! messy file and prints what was still extracted, alongside the findings.
//!
//! ```bash
//! cargo run --example tolerant_scanning
//! ```

use tfactor::{parse_source, Dialect, ProjectModel};

// A nameless class, a stray `template`, an anonymous body, an unterminated
// comment — and a healthy class in the middle of it all.
const MESSY: &str = "\
class ;
class {
    int orphan;
};
class Survivor {
    int count() { return 1; }
};
template stray_keyword;
/* this comment never ends
";

fn main() {
    let model = ProjectModel::from_facts(parse_source(MESSY.as_bytes(), Dialect::CxxTemplates));

    println!("extracted despite the noise:");
    for class in &model.classes {
        println!("  class  {}", class.qualified_name);
    }
    for method in &model.methods {
        println!("  method {}", method.qualified_name);
    }

    println!("\nfindings:");
    for diagnostic in model.all_diagnostics() {
        println!("  {diagnostic}");
    }

    // Strict pipelines (`--strict`) refuse to publish numbers built on
    // ERROR findings; warnings alone never block.
    let errors = model.error_count();
    println!("\n{errors} error(s): strict mode would exit 3, tolerant mode reports anyway");
}
