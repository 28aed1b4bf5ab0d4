//! Reuse manifest and category rules: which classes count as reused, and the
//! three-way component categorization.
//!
//! Both inputs are line-oriented UTF-8 files with `#` comments. A manifest
//! line is one glob matched against class qualified names; a rules line is
//! `pattern => CATEGORY`. Rules are ordered and first match wins; classes no
//! rule matches get the default category (product-specific, the safe
//! assumption for unmatched code).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use globset::{Glob, GlobMatcher};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ClassDecl, ParseDiagnostic, Severity};

/// Component category by reuse breadth: across domains, within one domain,
/// or custom-built for a single product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    GeneralPurpose,
    DomainSpecific,
    ProductSpecific,
}

impl Category {
    pub const ALL: [Category; 3] =
        [Category::GeneralPurpose, Category::DomainSpecific, Category::ProductSpecific];

    pub fn as_str(&self) -> &'static str {
        match self {
            Category::GeneralPurpose => "general_purpose",
            Category::DomainSpecific => "domain_specific",
            Category::ProductSpecific => "product_specific",
        }
    }

    /// Accepts the rule-file spellings `GENERAL_PURPOSE`, `DOMAIN_SPECIFIC`,
    /// `PRODUCT_SPECIFIC` (case-insensitive).
    pub fn parse(s: &str) -> Option<Category> {
        match s.to_ascii_uppercase().as_str() {
            "GENERAL_PURPOSE" => Some(Category::GeneralPurpose),
            "DOMAIN_SPECIFIC" => Some(Category::DomainSpecific),
            "PRODUCT_SPECIFIC" => Some(Category::ProductSpecific),
            _ => None,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One compiled glob with its source text for reporting.
#[derive(Debug, Clone)]
struct Pattern {
    text: String,
    matcher: GlobMatcher,
}

fn compile(pattern: &str, path: &Path, line: usize) -> Result<Pattern> {
    let glob = Glob::new(pattern).map_err(|e| Error::InvalidPattern {
        pattern: pattern.to_string(),
        path: path.to_path_buf(),
        line,
        reason: e.kind().to_string(),
    })?;
    Ok(Pattern { text: pattern.to_string(), matcher: glob.compile_matcher() })
}

/// The set of class-name patterns considered "reused" — the numerator source
/// for the reuse ratio.
#[derive(Debug, Clone)]
pub struct ReuseManifest {
    patterns: Vec<Pattern>,
    pub source_path: PathBuf,
}

impl ReuseManifest {
    /// Builds a manifest from in-memory patterns (used by tests and
    /// examples; the path is recorded as `<memory>`).
    pub fn from_patterns<I, S>(patterns: I) -> Result<ReuseManifest>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let path = PathBuf::from(crate::model::IN_MEMORY_PATH);
        let mut compiled = Vec::new();
        for (idx, p) in patterns.into_iter().enumerate() {
            compiled.push(compile(p.as_ref(), &path, idx + 1)?);
        }
        Ok(ReuseManifest { patterns: compiled, source_path: path })
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn pattern_texts(&self) -> impl Iterator<Item = &str> {
        self.patterns.iter().map(|p| p.text.as_str())
    }

    /// Whether any pattern matches the qualified class name.
    pub fn matches(&self, class_name: &str) -> bool {
        self.patterns.iter().any(|p| p.matcher.is_match(class_name))
    }
}

/// Loads a manifest file: one glob per line, `#` comments, blank lines
/// ignored. Duplicate patterns come back as WARN diagnostics; a file with no
/// patterns at all is an error.
pub fn load_manifest(path: &Path) -> Result<(ReuseManifest, Vec<ParseDiagnostic>)> {
    let text = fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut patterns: Vec<Pattern> = Vec::new();
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = strip_comment(raw);
        if trimmed.is_empty() {
            continue;
        }
        if patterns.iter().any(|p| p.text == trimmed) {
            warnings.push(ParseDiagnostic {
                file: path.to_path_buf(),
                line: line as u32,
                severity: Severity::Warn,
                message: format!("duplicate pattern `{trimmed}` ignored"),
            });
            continue;
        }
        patterns.push(compile(trimmed, path, line)?);
    }
    if patterns.is_empty() {
        return Err(Error::EmptyManifest { path: path.to_path_buf() });
    }
    Ok((ReuseManifest { patterns, source_path: path.to_path_buf() }, warnings))
}

/// Ordered `pattern => CATEGORY` rules with a default for the rest.
#[derive(Debug, Clone)]
pub struct CategoryRules {
    rules: Vec<(Pattern, Category)>,
    pub default_category: Category,
}

impl Default for CategoryRules {
    fn default() -> Self {
        CategoryRules { rules: Vec::new(), default_category: Category::ProductSpecific }
    }
}

impl CategoryRules {
    /// Builds rules from in-memory `(pattern, category)` pairs.
    pub fn from_rules<I, S>(rules: I, default_category: Category) -> Result<CategoryRules>
    where
        I: IntoIterator<Item = (S, Category)>,
        S: AsRef<str>,
    {
        let path = PathBuf::from(crate::model::IN_MEMORY_PATH);
        let mut compiled = Vec::new();
        for (idx, (p, cat)) in rules.into_iter().enumerate() {
            compiled.push((compile(p.as_ref(), &path, idx + 1)?, cat));
        }
        Ok(CategoryRules { rules: compiled, default_category })
    }

    /// First matching rule's category, else the default.
    pub fn category_of(&self, class_name: &str) -> Category {
        self.rules
            .iter()
            .find(|(p, _)| p.matcher.is_match(class_name))
            .map(|(_, c)| *c)
            .unwrap_or(self.default_category)
    }
}

/// Categorizes one class declaration; total and deterministic.
pub fn classify_class(class: &ClassDecl, rules: &CategoryRules) -> Category {
    rules.category_of(&class.qualified_name)
}

/// Loads a rules file: `pattern => CATEGORY` per line, `#` comments.
pub fn load_rules(path: &Path) -> Result<CategoryRules> {
    let text = fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = strip_comment(raw);
        if trimmed.is_empty() {
            continue;
        }
        let Some((pattern, category)) = trimmed.split_once("=>") else {
            return Err(Error::InvalidRule {
                path: path.to_path_buf(),
                line,
                reason: "expected `pattern => CATEGORY`".to_string(),
            });
        };
        let pattern = pattern.trim();
        let category = category.trim();
        if pattern.is_empty() {
            return Err(Error::InvalidRule {
                path: path.to_path_buf(),
                line,
                reason: "empty pattern".to_string(),
            });
        }
        let Some(category) = Category::parse(category) else {
            return Err(Error::InvalidRule {
                path: path.to_path_buf(),
                line,
                reason: format!(
                    "unknown category `{category}` (expected GENERAL_PURPOSE, DOMAIN_SPECIFIC, or PRODUCT_SPECIFIC)"
                ),
            });
        };
        rules.push((compile(pattern, path, line)?, category));
    }
    Ok(CategoryRules { rules, default_category: Category::ProductSpecific })
}

/// Strips a trailing `#` comment and surrounding whitespace.
fn strip_comment(line: &str) -> &str {
    let body = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    body.trim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ClassKind, FileId, Span};

    fn class(name: &str) -> ClassDecl {
        ClassDecl {
            qualified_name: name.to_string(),
            file: FileId(0),
            span: Span::line(1),
            kind: ClassKind::Class,
            is_template: false,
            template_param_count: 0,
            method_ids: Vec::new(),
        }
    }

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn manifest_matches_globs_against_class_names() {
        let manifest = ReuseManifest::from_patterns(["BaseDAO", "*Bean"]).unwrap();
        assert!(manifest.matches("BaseDAO"));
        assert!(manifest.matches("EmployeeBean"));
        assert!(!manifest.matches("HRProcess"));
    }

    #[test]
    fn load_manifest_parses_comments_and_warns_on_duplicates() {
        let f = write_temp("# reused classes\nBaseDAO\n*Bean # beans\n\nBaseDAO\n");
        let (manifest, warnings) = load_manifest(f.path()).unwrap();
        assert_eq!(manifest.pattern_texts().collect::<Vec<_>>(), vec!["BaseDAO", "*Bean"]);
        assert_eq!(warnings.len(), 1);
        assert_eq!(warnings[0].line, 5);
        assert!(warnings[0].message.contains("duplicate"));
    }

    #[test]
    fn load_manifest_rejects_comment_only_files() {
        let f = write_temp("# nothing\n\n# here\n");
        let err = load_manifest(f.path()).unwrap_err();
        assert!(matches!(err, Error::EmptyManifest { .. }));
    }

    #[test]
    fn load_manifest_reports_bad_globs_with_line() {
        let f = write_temp("ok\n[unclosed\n");
        let err = load_manifest(f.path()).unwrap_err();
        match err {
            Error::InvalidPattern { pattern, line, .. } => {
                assert_eq!(pattern, "[unclosed");
                assert_eq!(line, 2);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn first_matching_rule_wins() {
        let rules = CategoryRules::from_rules(
            [("util.*", Category::GeneralPurpose), ("util.Strings", Category::DomainSpecific)],
            Category::ProductSpecific,
        )
        .unwrap();
        assert_eq!(classify_class(&class("util.Strings"), &rules), Category::GeneralPurpose);
        assert_eq!(classify_class(&class("app.Main"), &rules), Category::ProductSpecific);
    }

    #[test]
    fn empty_rules_fall_through_to_default() {
        let rules = CategoryRules::default();
        assert_eq!(classify_class(&class("Anything"), &rules), Category::ProductSpecific);
    }

    #[test]
    fn load_rules_parses_arrow_lines() {
        let f = write_temp("# layering\n*DAO => DOMAIN_SPECIFIC\nutil.* => general_purpose\n");
        let rules = load_rules(f.path()).unwrap();
        assert_eq!(rules.category_of("EmployeeDAO"), Category::DomainSpecific);
        assert_eq!(rules.category_of("util.Fmt"), Category::GeneralPurpose);
        assert_eq!(rules.category_of("Other"), Category::ProductSpecific);
    }

    #[test]
    fn load_rules_rejects_malformed_lines() {
        let f = write_temp("*DAO DOMAIN_SPECIFIC\n");
        assert!(matches!(load_rules(f.path()).unwrap_err(), Error::InvalidRule { .. }));
        let f = write_temp("*DAO => SOMETHING_ELSE\n");
        let err = load_rules(f.path()).unwrap_err();
        match err {
            Error::InvalidRule { reason, .. } => assert!(reason.contains("SOMETHING_ELSE")),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn category_serializes_snake_case() {
        assert_eq!(serde_json::to_string(&Category::GeneralPurpose).unwrap(), "\"general_purpose\"");
        assert_eq!(Category::parse("domain_specific"), Some(Category::DomainSpecific));
        assert_eq!(Category::parse("bogus"), None);
    }
}
