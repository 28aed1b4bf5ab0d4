//! One report, three renderings: machine-oriented JSON (stable key order,
//! byte-identical across runs), spreadsheet-friendly CSV, and the aligned
//! table. Undefined ratios (0/0) show as `null` / empty / "undefined".
//!
//! ```bash
//! cargo run --example render_formats
//! ```

use tfactor::{
    compute_report, parse_source, render_csv, render_json, render_table, CategoryRules,
    Dialect, ProjectModel,
};

const SOURCE: &str = "\
template<class T>
class Buffer {
public:
    T take() { return value; }
    void reset() { }
private:
    T value;
};
class Cursor {
};
";

fn main() {
    let model = ProjectModel::from_facts(parse_source(SOURCE.as_bytes(), Dialect::CxxTemplates));
    let report = compute_report(&model, None, &CategoryRules::default());

    println!("== json ==");
    print!("{}", String::from_utf8(render_json(&report)).unwrap());
    println!("== csv ==");
    print!("{}", String::from_utf8(render_csv(&report)).unwrap());
    println!("== table ==");
    print!("{}", render_table(&report));
}
