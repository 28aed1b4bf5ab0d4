//! Template-and-generics reuse metrics for C++ and Java source trees.
//!
//! `tfactor` scans source files with a tolerant declaration scanner (no
//! compiler, no full parse), builds a language-agnostic model of the classes
//! and methods it finds, and computes three exact-rational metrics:
//!
//! - **CTF** (class template factor): classes declared with their own
//!   template/generic parameter list, over all classes.
//! - **MTF** (method template factor): methods declared with their own
//!   template/generic clause, over all methods — system-wide with free
//!   functions included, and per class without them.
//! - **U** (reuse ratio): classes matched by a reuse manifest, over all
//!   classes.
//!
//! Counts are kept raw (`2/4` never becomes `1/2`) and `0/0` is a
//! first-class UNDEFINED value, so CI gates compare thresholds by integer
//! cross-multiplication instead of floats and reports stay byte-identical
//! between runs.
//!
//! # Quick start
//!
//! ```
//! use tfactor::{compute_ctf, parse_source, Dialect, ProjectModel, Ratio};
//!
//! let source = b"template<class T>\nclass Buffer {\n};\nclass Cursor {\n};\n";
//! let model = ProjectModel::from_facts(parse_source(source, Dialect::CxxTemplates));
//! assert_eq!(compute_ctf(&model), Ratio::new(1, 2));
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── figure_snippets.rs     # indicator flags rolling up into CTF and MTF
//! ├── scan_tree.rs           # full pipeline over a directory tree
//! ├── reuse_ratio.rs         # manifest-driven reuse ratio U
//! ├── classify_categories.rs # glob rules bucketing classes by reuse scope
//! ├── ci_gate.rs             # thresholds, exact boundaries, exit codes
//! ├── tolerant_scanning.rs   # diagnostics instead of parse failures
//! └── render_formats.rs      # JSON, CSV, and table renderings
//! ```
//!
//! ```bash
//! cargo run --example figure_snippets
//! cargo run --example scan_tree -- path/to/sources
//! cargo run --example reuse_ratio
//! cargo run --example classify_categories
//! cargo run --example ci_gate
//! cargo run --example tolerant_scanning
//! cargo run --example render_formats
//! ```
//!
//! The same pipeline ships as a thin `tfactor` binary for CI use; see the
//! README for its flags, report formats, and exit codes.

#![forbid(unsafe_code)]

mod classify;
mod error;
mod frontend;
mod metrics;
mod model;
mod ratio;
mod report;
mod run;

pub use classify::{
    classify_class, load_manifest, load_rules, Category, CategoryRules, ReuseManifest,
};
pub use error::{Error, Result};
pub use metrics::{
    compute_ctf, compute_mtf, compute_report, compute_reuse_ratio, mtf_per_class, uses_ct,
    uses_mt, MetricsReport, ModelSummary, PerClassMtf, SCHEMA_VERSION,
};
pub use frontend::{
    parse_file, parse_source, scan_declarations, tokenize, FileFacts, Token, TokenKind,
    TokenStream,
};
pub use model::{
    merge_models, ClassDecl, ClassId, ClassKind, Dialect, FileId, MethodDecl, MethodId,
    ParseDiagnostic, ProjectModel, Severity, SourceFile, Span, IN_MEMORY_PATH,
};
pub use ratio::{Ratio, RatioParseError};
pub use report::{
    evaluate_gates, render_csv, render_json, render_table, GateConfig, GateResult,
    GateViolation, UndefinedPolicy,
};
pub use run::{discover_files, run, DiscoveredFile, OutputFormat, RunConfig, RunOutcome};
