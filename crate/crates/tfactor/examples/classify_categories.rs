//! Bucket classes into reuse categories with ordered `glob => CATEGORY`
//! rules. First match wins; anything unmatched falls into the default
//! bucket (product-specific, the least reusable).
//!
//! ```bash
//! cargo run --example classify_categories
//! ```

use tfactor::{
    classify_class, parse_source, Category, CategoryRules, Dialect, ProjectModel,
};

const SOURCE: &str = "\
template<class T>
class Vector {
};
template<class K, class V>
class HashTable {
};
class PayrollCalendar {
};
class PayslipScreen {
};
class AuditTrail {
};
";

fn main() -> tfactor::Result<()> {
    let model =
        ProjectModel::from_facts(parse_source(SOURCE.as_bytes(), Dialect::CxxTemplates));

    // The same rule file format `load_rules` reads from disk.
    let rules = CategoryRules::from_rules(
        [
            ("Vector", Category::GeneralPurpose),
            ("HashTable", Category::GeneralPurpose),
            ("Payroll*", Category::DomainSpecific),
            ("Audit*", Category::DomainSpecific),
        ],
        Category::ProductSpecific,
    )?;

    for class in &model.classes {
        let category = classify_class(class, &rules);
        println!("{:<16} {category}", class.qualified_name);
    }
    Ok(())
}
