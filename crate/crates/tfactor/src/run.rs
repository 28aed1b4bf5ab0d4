//! End-to-end pipeline: discover source files, scan them in parallel, merge,
//! compute metrics, render, and evaluate gates.
//!
//! File scanning fans out across threads, but discovery output is sorted and
//! the merge is order-independent, so a run over the same tree produces
//! byte-identical output no matter how the work was scheduled.

use std::path::PathBuf;

use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;
use walkdir::WalkDir;

use crate::classify::{load_manifest, load_rules, CategoryRules};
use crate::error::{Error, Result};
use crate::frontend::{parse_file, FileFacts};
use crate::metrics::{compute_report, MetricsReport};
use crate::model::{merge_models, Dialect, ParseDiagnostic, ProjectModel, SourceFile};
use crate::report::{
    evaluate_gates, render_csv, render_json, render_table, GateConfig, GateResult,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Table,
}

/// Everything one invocation needs. `Default` scans nothing; set `roots`.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    /// Files or directories to scan; at least one is required.
    pub roots: Vec<PathBuf>,
    /// Parse every selected file as this dialect instead of mapping each
    /// file's extension. Selection itself is still by known extension.
    pub dialect_override: Option<Dialect>,
    /// Globs a file's root-relative path must match to be scanned; empty
    /// means everything. Patterns without `/` match at any depth.
    pub include: Vec<String>,
    /// Globs that remove files after `include` is applied.
    pub exclude: Vec<String>,
    pub manifest_path: Option<PathBuf>,
    pub rules_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub gate: GateConfig,
    /// Exit with code 3 when any parse errors occurred.
    pub strict: bool,
    /// Render the scanned declaration model as JSON instead of the report.
    pub dump_model: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveredFile {
    pub path: PathBuf,
    pub dialect: Dialect,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub report: MetricsReport,
    /// Present iff at least one gate threshold was set.
    pub gate_result: Option<GateResult>,
    /// The selected format (or the model dump), ready to write as-is.
    pub rendered: Vec<u8>,
    /// Manifest, discovery, and parse findings in a stable order.
    pub diagnostics: Vec<ParseDiagnostic>,
    pub parse_error_count: usize,
    /// 0 success, 1 gate failure, 3 strict-mode parse errors. Code 2
    /// (usage/config) surfaces as an `Err` from [`run`] instead.
    pub exit_code: i32,
}

/// Walks the roots (following symlinks) and returns the selected files in
/// lexicographic path order with duplicates removed, plus WARN diagnostics
/// for unwalkable entries such as filesystem loops.
pub fn discover_files(config: &RunConfig) -> Result<(Vec<DiscoveredFile>, Vec<ParseDiagnostic>)> {
    let include = build_globset(&config.include)?;
    let exclude = build_globset(&config.exclude)?;
    let mut files = Vec::new();
    let mut warnings = Vec::new();
    for root in &config.roots {
        for entry in WalkDir::new(root).follow_links(true).sort_by_file_name() {
            let entry = match entry {
                Ok(entry) => entry,
                Err(err) => {
                    let mut diag = ParseDiagnostic::warn(0, format!("skipped: {err}"));
                    diag.file = err.path().unwrap_or(root).to_path_buf();
                    warnings.push(diag);
                    continue;
                }
            };
            if !entry.file_type().is_file() {
                continue;
            }
            let path = entry.path();
            let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
            let Some(mapped) = Dialect::from_extension(ext) else { continue };
            let dialect = config.dialect_override.unwrap_or(mapped);
            // Globs see the path relative to the root that found the file;
            // a root that is itself a file is matched by its file name.
            let relative = match path.strip_prefix(root) {
                Ok(rel) if !rel.as_os_str().is_empty() => rel.to_path_buf(),
                _ => PathBuf::from(path.file_name().unwrap_or_default()),
            };
            if let Some(include) = &include {
                if !include.is_match(&relative) {
                    continue;
                }
            }
            if let Some(exclude) = &exclude {
                if exclude.is_match(&relative) {
                    continue;
                }
            }
            files.push(DiscoveredFile { path: path.to_path_buf(), dialect });
        }
    }
    files.sort_by(|a, b| a.path.cmp(&b.path));
    files.dedup();
    Ok((files, warnings))
}

fn build_globset(patterns: &[String]) -> Result<Option<GlobSet>> {
    if patterns.is_empty() {
        return Ok(None);
    }
    let mut builder = GlobSetBuilder::new();
    for pattern in patterns {
        // A bare name like `*.cpp` is matched at any depth, like gitignore.
        let expanded = if pattern.contains('/') {
            pattern.clone()
        } else {
            format!("**/{pattern}")
        };
        let glob = Glob::new(&expanded)
            .map_err(|err| Error::InvalidConfig(format!("invalid glob `{pattern}`: {err}")))?;
        builder.add(glob);
    }
    let set = builder
        .build()
        .map_err(|err| Error::InvalidConfig(format!("invalid glob set: {err}")))?;
    Ok(Some(set))
}

/// Runs the whole pipeline. Configuration problems (no matching files, bad
/// manifest, missing threshold prerequisites) come back as `Err`; parse
/// trouble and gate failures are reported through [`RunOutcome::exit_code`].
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    if config.roots.is_empty() {
        return Err(Error::InvalidConfig("at least one root path is required".into()));
    }
    if config.gate.min_reuse_ratio.is_some() && config.manifest_path.is_none() {
        return Err(Error::InvalidConfig("a reuse-ratio gate requires a manifest".into()));
    }
    let mut diagnostics = Vec::new();
    let manifest = match &config.manifest_path {
        Some(path) => {
            let (manifest, warnings) = load_manifest(path)?;
            diagnostics.extend(warnings);
            Some(manifest)
        }
        None => None,
    };
    let rules = match &config.rules_path {
        Some(path) => load_rules(path)?,
        None => CategoryRules::default(),
    };
    let (files, walk_warnings) = discover_files(config)?;
    diagnostics.extend(walk_warnings);
    if files.is_empty() {
        return Err(Error::NoSourceFiles);
    }

    let fragments: Vec<ProjectModel> = files.par_iter().map(parse_one).collect();
    let model = merge_models(fragments)?;
    let report = compute_report(&model, manifest.as_ref(), &rules);
    diagnostics.extend(model.all_diagnostics().cloned());
    let parse_error_count = model.error_count();

    let gate_result = config
        .gate
        .any_threshold_set()
        .then(|| evaluate_gates(&report, &config.gate));
    let exit_code = if config.strict && parse_error_count > 0 {
        3
    } else if gate_result.as_ref().is_some_and(|gate| !gate.passed) {
        1
    } else {
        0
    };

    let rendered = if config.dump_model {
        let mut bytes =
            serde_json::to_vec_pretty(&model).expect("model serialization is infallible");
        bytes.push(b'\n');
        bytes
    } else {
        match config.output_format {
            OutputFormat::Json => render_json(&report),
            OutputFormat::Csv => render_csv(&report),
            OutputFormat::Table => render_table(&report).into_bytes(),
        }
    };
    Ok(RunOutcome { report, gate_result, rendered, diagnostics, parse_error_count, exit_code })
}

/// Scans one file; an unreadable file becomes an empty fragment with a single
/// ERROR diagnostic rather than aborting the run.
fn parse_one(file: &DiscoveredFile) -> ProjectModel {
    match parse_file(&file.path, file.dialect) {
        Ok(facts) => ProjectModel::from_facts(facts),
        Err(err) => {
            let message = match &err {
                Error::Io { source, .. } => format!("cannot read file: {source}"),
                other => other.to_string(),
            };
            let facts = FileFacts {
                file: SourceFile {
                    path: file.path.clone(),
                    dialect: file.dialect,
                    byte_count: 0,
                    diagnostics: Vec::new(),
                },
                classes: Vec::new(),
                methods: Vec::new(),
                diagnostics: vec![ParseDiagnostic::error(0, message)],
            };
            ProjectModel::from_facts(facts)
        }
    }
}
