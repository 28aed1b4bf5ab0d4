//! Language-agnostic program model produced by the frontends and consumed by
//! the metrics engine.
//!
//! A [`ProjectModel`] is immutable once built: every metric is a pure function
//! of it, and serialization order is fixed (files by path, declarations by
//! path then span) so that rebuilding from the same sources in any scan order
//! yields identical output.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::Error;

/// Input language flavor a file is scanned as.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dialect {
    /// C-family templates: `template<...>` clauses ahead of classes, structs
    /// and functions.
    CxxTemplates,
    /// Generic type and method declarations: `class Name<T>`, `<T> T get()`.
    JavaGenerics,
}

impl Dialect {
    /// Maps a file extension to a dialect: `.h .hpp .hh .cc .cpp .cxx` are
    /// C++-style, `.java` is generics-style.
    pub fn from_extension(ext: &str) -> Option<Dialect> {
        match ext {
            "h" | "hpp" | "hh" | "cc" | "cpp" | "cxx" => Some(Dialect::CxxTemplates),
            "java" => Some(Dialect::JavaGenerics),
            _ => None,
        }
    }

    /// Separator used when joining scope segments into qualified names.
    pub fn scope_separator(&self) -> &'static str {
        match self {
            Dialect::CxxTemplates => "::",
            Dialect::JavaGenerics => ".",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warn,
    Error,
}

/// A scanner or IO finding tied to a file position. `Error` severity marks a
/// construct the scanner skipped; it aborts the run only in strict mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseDiagnostic {
    pub file: PathBuf,
    pub line: u32,
    pub severity: Severity,
    pub message: String,
}

impl ParseDiagnostic {
    pub fn warn(line: u32, message: impl Into<String>) -> Self {
        ParseDiagnostic {
            file: PathBuf::from(IN_MEMORY_PATH),
            line,
            severity: Severity::Warn,
            message: message.into(),
        }
    }

    pub fn error(line: u32, message: impl Into<String>) -> Self {
        ParseDiagnostic {
            file: PathBuf::from(IN_MEMORY_PATH),
            line,
            severity: Severity::Error,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseDiagnostic {
    /// `severity: file:line: message`; the line is omitted when 0 (findings
    /// about the file as a whole, such as read failures).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Warn => "warning",
            Severity::Error => "error",
        };
        if self.line == 0 {
            write!(f, "{severity}: {}: {}", self.file.display(), self.message)
        } else {
            write!(f, "{severity}: {}:{}: {}", self.file.display(), self.line, self.message)
        }
    }
}

/// Placeholder path for declarations scanned from an in-memory buffer.
pub const IN_MEMORY_PATH: &str = "<memory>";

/// One scanned source file and its parse diagnostics.
#[derive(Debug, Clone, Serialize)]
pub struct SourceFile {
    pub path: PathBuf,
    pub dialect: Dialect,
    pub byte_count: u64,
    pub diagnostics: Vec<ParseDiagnostic>,
}

impl SourceFile {
    /// A synthetic record for buffers scanned without a backing file.
    pub fn in_memory(dialect: Dialect) -> Self {
        SourceFile {
            path: PathBuf::from(IN_MEMORY_PATH),
            dialect,
            byte_count: 0,
            diagnostics: Vec::new(),
        }
    }
}

/// Index of a file within its model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FileId(pub usize);

/// Index of a class within its model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassId(pub usize);

/// Index of a method within its model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MethodId(pub usize);

/// Inclusive line range of a declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub start: u32,
    pub end: u32,
}

impl Span {
    pub fn line(line: u32) -> Span {
        Span { start: line, end: line }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Class,
    Struct,
    Interface,
}

/// An extracted class-like declaration.
///
/// `is_template` holds exactly when the declaration carries its own template
/// or generic parameter list with at least one parameter; instantiating or
/// extending a template elsewhere does not set it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDecl {
    pub qualified_name: String,
    pub file: FileId,
    pub span: Span,
    pub kind: ClassKind,
    pub is_template: bool,
    pub template_param_count: u32,
    pub method_ids: Vec<MethodId>,
}

/// An extracted method or free function.
///
/// `owner` is absent for free functions. `is_template` reflects the
/// declaration's own template clause only; a plain method inside a template
/// class has `is_template = false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodDecl {
    pub qualified_name: String,
    pub owner: Option<ClassId>,
    pub file: FileId,
    pub span: Span,
    pub is_template: bool,
}

/// Immutable aggregate of all scanned files, classes and methods for one
/// analysis run.
///
/// Per-file parse diagnostics live on each [`SourceFile`]; the model-level
/// `diagnostics` list holds cross-file findings (currently: qualified-name
/// collisions between classes). [`ProjectModel::all_diagnostics`] iterates
/// both.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ProjectModel {
    pub files: Vec<SourceFile>,
    pub classes: Vec<ClassDecl>,
    pub methods: Vec<MethodDecl>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

impl ProjectModel {
    /// Builds a single-file model from scanned facts, pointing every
    /// declaration and diagnostic at the facts' file record.
    pub fn from_facts(facts: crate::frontend::FileFacts) -> ProjectModel {
        let mut file = facts.file;
        let path = file.path.clone();
        file.diagnostics = facts
            .diagnostics
            .into_iter()
            .map(|mut d| {
                d.file = path.clone();
                d
            })
            .collect();
        let classes = facts
            .classes
            .into_iter()
            .map(|mut c| {
                c.file = FileId(0);
                c
            })
            .collect();
        let methods = facts
            .methods
            .into_iter()
            .map(|mut m| {
                m.file = FileId(0);
                m
            })
            .collect();
        ProjectModel { files: vec![file], classes, methods, diagnostics: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.files.is_empty() && self.classes.is_empty() && self.methods.is_empty()
    }

    /// All diagnostics: per-file parse findings first (in file order), then
    /// model-level ones.
    pub fn all_diagnostics(&self) -> impl Iterator<Item = &ParseDiagnostic> {
        self.files
            .iter()
            .flat_map(|f| f.diagnostics.iter())
            .chain(self.diagnostics.iter())
    }

    pub fn error_count(&self) -> usize {
        self.all_diagnostics().filter(|d| d.severity == Severity::Error).count()
    }

    /// Checks the owner/method_ids cross-references and the template flag
    /// invariant; used by tests and after merges.
    pub fn check_consistency(&self) -> Result<(), String> {
        for (idx, method) in self.methods.iter().enumerate() {
            if method.file.0 >= self.files.len() {
                return Err(format!("method {idx} has dangling file id"));
            }
            if let Some(owner) = method.owner {
                let class = self
                    .classes
                    .get(owner.0)
                    .ok_or_else(|| format!("method {idx} has dangling owner id"))?;
                if !class.method_ids.contains(&MethodId(idx)) {
                    return Err(format!(
                        "class {} does not list its method {}",
                        class.qualified_name, method.qualified_name
                    ));
                }
            }
        }
        for (idx, class) in self.classes.iter().enumerate() {
            if class.file.0 >= self.files.len() {
                return Err(format!("class {idx} has dangling file id"));
            }
            if class.is_template != (class.template_param_count >= 1) {
                return Err(format!(
                    "class {} template flag disagrees with its parameter count",
                    class.qualified_name
                ));
            }
            for mid in &class.method_ids {
                let method = self
                    .methods
                    .get(mid.0)
                    .ok_or_else(|| format!("class {idx} has dangling method id"))?;
                if method.owner != Some(ClassId(idx)) {
                    return Err(format!(
                        "method {} does not point back at class {}",
                        method.qualified_name, class.qualified_name
                    ));
                }
            }
        }
        Ok(())
    }
}

/// One file's worth of model data, detached from global ids while merging.
struct Fragment {
    file: SourceFile,
    classes: Vec<ClassDecl>,
    methods: Vec<MethodDecl>,
}

/// Unions per-file models into one, independent of input order.
///
/// Files must be pairwise disjoint by path; a repeated path is
/// [`Error::DuplicateFile`]. Declarations are re-sorted by (path, span,
/// name) and index links rebuilt, so any permutation of `models` produces an
/// identical result. Model-level diagnostics are regenerated from scratch
/// over the merged declarations (making the operation associative), so
/// collision warnings never duplicate across repeated merges.
pub fn merge_models(models: Vec<ProjectModel>) -> Result<ProjectModel, Error> {
    let mut fragments: Vec<Fragment> = Vec::new();
    for model in models {
        let ProjectModel { files, classes, methods, diagnostics: _ } = model;
        let base = fragments.len();
        fragments.extend(
            files
                .into_iter()
                .map(|file| Fragment { file, classes: Vec::new(), methods: Vec::new() }),
        );
        for class in classes {
            fragments[base + class.file.0].classes.push(class);
        }
        for method in methods {
            fragments[base + method.file.0].methods.push(method);
        }
    }

    fragments.sort_by(|a, b| a.file.path.cmp(&b.file.path));
    for pair in fragments.windows(2) {
        if pair[0].file.path == pair[1].file.path {
            return Err(Error::DuplicateFile { path: pair[0].file.path.clone() });
        }
    }

    let mut merged = ProjectModel::default();
    for (file_idx, frag) in fragments.into_iter().enumerate() {
        let Fragment { file, classes, methods } = frag;
        let class_base = merged.classes.len();
        let method_base = merged.methods.len();

        let mut class_order: Vec<usize> = (0..classes.len()).collect();
        class_order.sort_by(|&i, &j| {
            let a = &classes[i];
            let b = &classes[j];
            (a.span.start, a.span.end, &a.qualified_name)
                .cmp(&(b.span.start, b.span.end, &b.qualified_name))
        });
        let mut method_order: Vec<usize> = (0..methods.len()).collect();
        method_order.sort_by(|&i, &j| {
            let a = &methods[i];
            let b = &methods[j];
            (a.span.start, a.span.end, &a.qualified_name)
                .cmp(&(b.span.start, b.span.end, &b.qualified_name))
        });

        // Old intra-fragment index -> new intra-fragment position.
        let mut class_new_of_old = vec![0usize; classes.len()];
        for (new, &old) in class_order.iter().enumerate() {
            class_new_of_old[old] = new;
        }
        let mut method_new_of_old = vec![0usize; methods.len()];
        for (new, &old) in method_order.iter().enumerate() {
            method_new_of_old[old] = new;
        }

        let mut classes: Vec<Option<ClassDecl>> = classes.into_iter().map(Some).collect();
        for &old in &class_order {
            let mut class = classes[old].take().expect("class indexed twice");
            class.file = FileId(file_idx);
            for mid in &mut class.method_ids {
                *mid = MethodId(method_base + method_new_of_old[mid.0]);
            }
            class.method_ids.sort_by_key(|m| m.0);
            merged.classes.push(class);
        }
        let mut methods: Vec<Option<MethodDecl>> = methods.into_iter().map(Some).collect();
        for &old in &method_order {
            let mut method = methods[old].take().expect("method indexed twice");
            method.file = FileId(file_idx);
            if let Some(owner) = &mut method.owner {
                *owner = ClassId(class_base + class_new_of_old[owner.0]);
            }
            merged.methods.push(method);
        }
        merged.files.push(file);
    }

    merged.diagnostics = collision_warnings(&merged);
    debug_assert_eq!(merged.check_consistency(), Ok(()));
    Ok(merged)
}

/// WARN diagnostics for classes sharing a qualified name, attached to every
/// occurrence after the first (in file-then-span order).
fn collision_warnings(model: &ProjectModel) -> Vec<ParseDiagnostic> {
    let mut first_seen: HashMap<&str, usize> = HashMap::new();
    let mut warnings = Vec::new();
    for class in &model.classes {
        match first_seen.entry(class.qualified_name.as_str()) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(class.file.0);
            }
            std::collections::hash_map::Entry::Occupied(o) => {
                let first_file = &model.files[*o.get()].path;
                warnings.push(ParseDiagnostic {
                    file: model.files[class.file.0].path.clone(),
                    line: class.span.start,
                    severity: Severity::Warn,
                    message: format!(
                        "class `{}` also declared in {}; both occurrences are counted",
                        class.qualified_name,
                        first_file.display()
                    ),
                });
            }
        }
    }
    warnings
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(path: &str, dialect: Dialect) -> SourceFile {
        SourceFile {
            path: PathBuf::from(path),
            dialect,
            byte_count: 0,
            diagnostics: Vec::new(),
        }
    }

    fn class(name: &str, line: u32, params: u32) -> ClassDecl {
        ClassDecl {
            qualified_name: name.to_string(),
            file: FileId(0),
            span: Span::line(line),
            kind: ClassKind::Class,
            is_template: params >= 1,
            template_param_count: params,
            method_ids: Vec::new(),
        }
    }

    fn method(name: &str, line: u32, owner: Option<usize>, is_template: bool) -> MethodDecl {
        MethodDecl {
            qualified_name: name.to_string(),
            owner: owner.map(ClassId),
            file: FileId(0),
            span: Span::line(line),
            is_template,
        }
    }

    fn single(path: &str, classes: Vec<ClassDecl>, methods: Vec<MethodDecl>) -> ProjectModel {
        let mut model = ProjectModel {
            files: vec![file(path, Dialect::CxxTemplates)],
            classes,
            methods,
            diagnostics: Vec::new(),
        };
        // Rebuild method_ids from owner links so fixtures stay terse.
        for (idx, m) in model.methods.iter().enumerate() {
            if let Some(owner) = m.owner {
                model.classes[owner.0].method_ids.push(MethodId(idx));
            }
        }
        model.check_consistency().unwrap();
        model
    }

    #[test]
    fn merge_of_nothing_is_empty() {
        let merged = merge_models(Vec::new()).unwrap();
        assert!(merged.is_empty());
        assert!(merged.diagnostics.is_empty());
    }

    #[test]
    fn merge_rejects_duplicate_paths() {
        let a = single("src/a.cpp", vec![], vec![]);
        let b = single("src/a.cpp", vec![], vec![]);
        let err = merge_models(vec![a, b]).unwrap_err();
        assert!(matches!(err, Error::DuplicateFile { .. }));
    }

    #[test]
    fn merge_is_order_independent() {
        let a = single(
            "src/b.cpp",
            vec![class("B", 2, 2)],
            vec![method("B::get", 3, Some(0), false)],
        );
        let b = single(
            "src/a.cpp",
            vec![class("A", 1, 0)],
            vec![method("helper", 9, None, true)],
        );
        let ab = merge_models(vec![a.clone(), b.clone()]).unwrap();
        let ba = merge_models(vec![b, a]).unwrap();
        assert_eq!(
            serde_json::to_string(&ab).unwrap(),
            serde_json::to_string(&ba).unwrap()
        );
        assert_eq!(ab.files[0].path, PathBuf::from("src/a.cpp"));
        ab.check_consistency().unwrap();
    }

    #[test]
    fn merge_relinks_owners_across_fragments() {
        let a = single(
            "z.cpp",
            vec![class("Z", 1, 1), class("Y", 10, 0)],
            vec![
                method("Z::m", 2, Some(0), false),
                method("Y::n", 11, Some(1), true),
            ],
        );
        let b = single("a.cpp", vec![class("A", 1, 0)], vec![method("A::p", 2, Some(0), false)]);
        let merged = merge_models(vec![a, b]).unwrap();
        merged.check_consistency().unwrap();
        assert_eq!(merged.classes.len(), 3);
        assert_eq!(merged.methods.len(), 3);
        // a.cpp sorts first, so A is class 0 and its method owns ClassId(0).
        assert_eq!(merged.classes[0].qualified_name, "A");
        assert_eq!(merged.methods[0].owner, Some(ClassId(0)));
        let z = merged.classes.iter().position(|c| c.qualified_name == "Z").unwrap();
        let zm = merged.methods.iter().position(|m| m.qualified_name == "Z::m").unwrap();
        assert_eq!(merged.methods[zm].owner, Some(ClassId(z)));
        assert!(merged.classes[z].method_ids.contains(&MethodId(zm)));
    }

    #[test]
    fn merge_warns_on_name_collision_and_keeps_both() {
        let a = single("a.cpp", vec![class("Widget", 1, 0)], vec![]);
        let b = single("b.cpp", vec![class("Widget", 5, 1)], vec![]);
        let merged = merge_models(vec![a, b]).unwrap();
        assert_eq!(merged.classes.len(), 2);
        assert_eq!(merged.diagnostics.len(), 1);
        let d = &merged.diagnostics[0];
        assert_eq!(d.severity, Severity::Warn);
        assert_eq!(d.file, PathBuf::from("b.cpp"));
        assert!(d.message.contains("Widget"));
        assert!(d.message.contains("a.cpp"));
    }

    #[test]
    fn merge_is_associative_including_warnings() {
        let a = single("a.cpp", vec![class("Widget", 1, 0)], vec![]);
        let b = single("b.cpp", vec![class("Widget", 5, 1)], vec![]);
        let c = single("c.cpp", vec![class("Widget", 9, 0)], vec![]);
        let left = merge_models(vec![
            merge_models(vec![a.clone(), b.clone()]).unwrap(),
            c.clone(),
        ])
        .unwrap();
        let right = merge_models(vec![a, merge_models(vec![b, c]).unwrap()]).unwrap();
        assert_eq!(
            serde_json::to_string(&left).unwrap(),
            serde_json::to_string(&right).unwrap()
        );
        assert_eq!(left.diagnostics.len(), 2);
    }

    #[test]
    fn dialect_from_extension_covers_known_suffixes() {
        for ext in ["h", "hpp", "hh", "cc", "cpp", "cxx"] {
            assert_eq!(Dialect::from_extension(ext), Some(Dialect::CxxTemplates));
        }
        assert_eq!(Dialect::from_extension("java"), Some(Dialect::JavaGenerics));
        assert_eq!(Dialect::from_extension("rs"), None);
        assert_eq!(Dialect::from_extension("txt"), None);
    }

    #[test]
    fn consistency_detects_template_flag_mismatch() {
        let mut model = single("a.cpp", vec![class("A", 1, 0)], vec![]);
        model.classes[0].is_template = true;
        assert!(model.check_consistency().is_err());
    }
}
