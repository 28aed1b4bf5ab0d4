//! Measure the reuse ratio U: the share of classes matched by a reuse
//! manifest (glob patterns over qualified class names, one per line).
//!
//! ```bash
//! cargo run --example reuse_ratio
//! ```

use tfactor::{
    compute_reuse_ratio, merge_models, parse_source, Dialect, ProjectModel, ReuseManifest,
};

const SOURCES: [(&str, &str); 3] = [
    (
        "beans.java",
        "public class AccountBean {\n    void refresh() {\n    }\n}\npublic class SessionBean {\n}\n",
    ),
    (
        "dao.java",
        "public class AccountDAO {\n    void persist() {\n    }\n}\n",
    ),
    (
        "app.java",
        "public class Billing {\n    void invoice() {\n    }\n}\npublic class ReportScreen {\n}\n",
    ),
];

fn main() -> tfactor::Result<()> {
    let mut fragments = Vec::new();
    for (name, source) in SOURCES {
        let mut facts = parse_source(source.as_bytes(), Dialect::JavaGenerics);
        facts.file.path = name.into();
        fragments.push(ProjectModel::from_facts(facts));
    }
    let model = merge_models(fragments)?;

    // In a real run this comes from a file via `load_manifest`; globs match
    // whole qualified names, so `*Bean` catches the bean layer.
    let manifest = ReuseManifest::from_patterns(["*Bean", "*DAO"])?;

    println!("classes considered reused:");
    for class in &model.classes {
        let mark = if manifest.matches(&class.qualified_name) { "reused" } else { "-" };
        println!("  {:<14} {mark}", class.qualified_name);
    }
    let reuse = compute_reuse_ratio(&model, &manifest);
    println!("u = {reuse} = {}", reuse.decimal().unwrap());
    Ok(())
}
