//! Metric computation: pure functions over an immutable [`ProjectModel`].
//!
//! All ratios keep their raw counts — nothing is reduced, so a report always
//! shows the real numerator and denominator (3/11, not 0.27…), and an empty
//! scope yields the explicit UNDEFINED ratio 0/0 rather than a silent 0 or 1.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{classify_class, Category, CategoryRules, ReuseManifest};
use crate::model::{ClassDecl, MethodDecl, ProjectModel};
use crate::ratio::Ratio;

/// 1 iff the class is declared with its own template/generic clause.
pub fn uses_ct(class: &ClassDecl) -> u64 {
    class.is_template as u64
}

/// 1 iff the method is declared with its own template/generic clause.
pub fn uses_mt(method: &MethodDecl) -> u64 {
    method.is_template as u64
}

/// Class template factor: template classes over all classes.
/// UNDEFINED (0/0) when the model has no classes.
pub fn compute_ctf(model: &ProjectModel) -> Ratio {
    let total = model.classes.len() as u64;
    let templates = model.classes.iter().map(uses_ct).sum();
    Ratio::new(templates, total)
}

/// System method template factor: template methods over all methods,
/// members and free functions alike. UNDEFINED when there are none.
pub fn compute_mtf(model: &ProjectModel) -> Ratio {
    let total = model.methods.len() as u64;
    let templates = model.methods.iter().map(uses_mt).sum();
    Ratio::new(templates, total)
}

/// Per-class method template factors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PerClassMtf {
    /// One ratio per class with at least one method, keyed by qualified
    /// name. Same-named classes (a merge WARN) accumulate into one entry.
    pub defined: BTreeMap<String, Ratio>,
    /// Names of classes with zero methods — their MTF is undefined and is
    /// reported as such instead of being silently gated as 0/0.
    pub undefined: Vec<String>,
}

/// Computes each class's MTF over its own methods only; free functions are
/// excluded here (they still count in [`compute_mtf`]).
pub fn mtf_per_class(model: &ProjectModel) -> PerClassMtf {
    let mut counts: BTreeMap<&str, (u64, u64)> = BTreeMap::new();
    let mut undefined: Vec<String> = Vec::new();
    for class in &model.classes {
        if class.method_ids.is_empty() {
            if !undefined.contains(&class.qualified_name) {
                undefined.push(class.qualified_name.clone());
            }
            continue;
        }
        let entry = counts.entry(class.qualified_name.as_str()).or_insert((0, 0));
        for mid in &class.method_ids {
            let method = &model.methods[mid.0];
            entry.0 += uses_mt(method);
            entry.1 += 1;
        }
    }
    undefined.sort_unstable();
    PerClassMtf {
        defined: counts
            .into_iter()
            .map(|(name, (num, den))| (name.to_string(), Ratio::new(num, den)))
            .collect(),
        undefined,
    }
}

/// Reuse ratio U: classes matching at least one manifest pattern over all
/// classes. UNDEFINED when the model has no classes.
pub fn compute_reuse_ratio(model: &ProjectModel, manifest: &ReuseManifest) -> Ratio {
    let total = model.classes.len() as u64;
    let reused = model
        .classes
        .iter()
        .filter(|c| manifest.matches(&c.qualified_name))
        .count() as u64;
    Ratio::new(reused, total)
}

/// Headline counts of the analyzed model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub files: usize,
    pub classes: usize,
    pub methods: usize,
    pub parse_errors: usize,
}

/// Everything one analysis run reports. Field order is the serialization
/// order; all maps are ordered, so identical models render identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub schema_version: u32,
    pub model_summary: ModelSummary,
    pub ctf: Ratio,
    pub mtf_system: Ratio,
    pub mtf_per_class: BTreeMap<String, Ratio>,
    pub undefined_mtf: Vec<String>,
    /// Present only when a reuse manifest was supplied.
    pub reuse_ratio: Option<Ratio>,
    pub category_counts: BTreeMap<Category, u64>,
}

pub const SCHEMA_VERSION: u32 = 1;

/// Computes the full report. Without a manifest the reuse ratio is absent
/// (not zero); without explicit rules every class lands in the default
/// product-specific category.
pub fn compute_report(
    model: &ProjectModel,
    manifest: Option<&ReuseManifest>,
    rules: &CategoryRules,
) -> MetricsReport {
    let per_class = mtf_per_class(model);
    let mut category_counts: BTreeMap<Category, u64> =
        Category::ALL.iter().map(|c| (*c, 0)).collect();
    for class in &model.classes {
        *category_counts.entry(classify_class(class, rules)).or_insert(0) += 1;
    }
    MetricsReport {
        schema_version: SCHEMA_VERSION,
        model_summary: ModelSummary {
            files: model.files.len(),
            classes: model.classes.len(),
            methods: model.methods.len(),
            parse_errors: model.error_count(),
        },
        ctf: compute_ctf(model),
        mtf_system: compute_mtf(model),
        mtf_per_class: per_class.defined,
        undefined_mtf: per_class.undefined,
        reuse_ratio: manifest.map(|m| compute_reuse_ratio(model, m)),
        category_counts,
    }
}
