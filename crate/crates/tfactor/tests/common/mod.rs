//! Shared scaffolding for the integration suites: a declarative spec for
//! generated source files, deterministic renderers for both dialects,
//! by-construction expected counts, and an independent line-regex counter
//! used to cross-check the real scanner.
//!
//! The renderers stick to a disciplined one-declaration-head-per-line layout
//! (matching the fixture corpus) so the regex counter stays trivially right;
//! the scanner itself tolerates much more than this subset.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::Rng;
use regex::Regex;
use tfactor::{Dialect, MetricsReport, Ratio};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MethodSpec {
    pub template: bool,
    /// Rendered as a body-less declaration (`;`) instead of a definition.
    pub proto: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    /// Picks class/struct (C++) or class/interface (generics dialect).
    pub kind_seed: u8,
    pub template: bool,
    pub methods: Vec<MethodSpec>,
}

impl ClassSpec {
    pub fn is_interface(&self) -> bool {
        self.kind_seed % 3 == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileSpec {
    pub java: bool,
    pub classes: Vec<ClassSpec>,
    /// Free functions; only rendered for the C++ dialect.
    pub free: Vec<MethodSpec>,
}

impl FileSpec {
    pub fn dialect(&self) -> Dialect {
        if self.java {
            Dialect::JavaGenerics
        } else {
            Dialect::CxxTemplates
        }
    }

    pub fn file_name(&self, idx: usize) -> String {
        if self.java {
            format!("f{idx}.java")
        } else {
            format!("f{idx}.cpp")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderStyle {
    pub comments: bool,
    pub extra_blank_lines: bool,
}

pub const PLAIN: RenderStyle = RenderStyle { comments: false, extra_blank_lines: false };
pub const NOISY: RenderStyle = RenderStyle { comments: true, extra_blank_lines: true };

/// Declaration totals; `per_class` maps class name to
/// (template methods, methods), including zero-method classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    pub classes: u64,
    pub template_classes: u64,
    pub methods: u64,
    pub template_methods: u64,
    pub per_class: BTreeMap<String, (u64, u64)>,
}

impl Counts {
    pub fn absorb(&mut self, other: Counts) {
        self.classes += other.classes;
        self.template_classes += other.template_classes;
        self.methods += other.methods;
        self.template_methods += other.template_methods;
        for (name, (t, m)) in other.per_class {
            let entry = self.per_class.entry(name).or_insert((0, 0));
            entry.0 += t;
            entry.1 += m;
        }
    }
}

pub fn sample_method(rng: &mut StdRng) -> MethodSpec {
    MethodSpec { template: rng.gen_bool(0.35), proto: rng.gen_bool(0.2) }
}

pub fn sample_class(rng: &mut StdRng, max_methods: usize) -> ClassSpec {
    let methods = (0..rng.gen_range(0..max_methods)).map(|_| sample_method(rng)).collect();
    ClassSpec { kind_seed: rng.gen(), template: rng.gen_bool(0.4), methods }
}

pub fn sample_file(rng: &mut StdRng) -> FileSpec {
    let classes = (0..rng.gen_range(0..4)).map(|_| sample_class(rng, 5)).collect();
    let free = (0..rng.gen_range(0..3)).map(|_| sample_method(rng)).collect();
    FileSpec { java: rng.gen_bool(0.5), classes, free }
}

/// A deliberately chunky file for performance corpora: several classes with
/// full method sets, so each rendered file lands near a hundred lines.
pub fn sample_large_file(rng: &mut StdRng) -> FileSpec {
    let classes = (0..rng.gen_range(3..8)).map(|_| sample_class(rng, 8)).collect();
    let free = (0..rng.gen_range(0..4)).map(|_| sample_method(rng)).collect();
    FileSpec { java: rng.gen_bool(0.5), classes, free }
}

pub fn render_file(spec: &FileSpec, idx: usize, style: RenderStyle) -> String {
    if spec.java {
        render_java(spec, idx, style)
    } else {
        render_cxx(spec, idx, style)
    }
}

fn render_cxx(spec: &FileSpec, idx: usize, style: RenderStyle) -> String {
    let mut out = String::new();
    if style.comments {
        out.push_str("// generated corpus file\n");
        out.push_str("/*\nclass NotReal {\nint fake(int x) {\nreturn x;\n}\n};\n*/\n");
    }
    for (k, class) in spec.classes.iter().enumerate() {
        let name = format!("C{idx}_{k}");
        let keyword = if class.kind_seed % 2 == 0 { "class" } else { "struct" };
        if style.extra_blank_lines {
            out.push('\n');
        }
        if class.template {
            out.push_str("template<class T, int N>\n");
        }
        out.push_str(&format!("{keyword} {name} {{\n"));
        if keyword == "class" {
            out.push_str("public:\n");
        }
        for (j, method) in class.methods.iter().enumerate() {
            if style.comments {
                out.push_str(&format!("    // member {j}\n"));
            }
            if method.template {
                out.push_str("    template<typename U>\n");
            }
            if method.proto {
                out.push_str(&format!("    int m{j}(int a);\n"));
            } else {
                out.push_str(&format!(
                    "    int m{j}(int a) {{\n        int v{j} = a + 1;\n        return v{j};\n    }}\n"
                ));
            }
        }
        out.push_str(&format!("    int field{k};\n}};\n"));
    }
    for (j, method) in spec.free.iter().enumerate() {
        if style.extra_blank_lines {
            out.push('\n');
        }
        if method.template {
            out.push_str("template<class T>\n");
        }
        if method.proto {
            out.push_str(&format!("int free{idx}_{j}(int x);\n"));
        } else {
            out.push_str(&format!("int free{idx}_{j}(int x) {{\n    return x + 1;\n}}\n"));
        }
    }
    out
}

fn render_java(spec: &FileSpec, idx: usize, style: RenderStyle) -> String {
    let mut out = String::new();
    out.push_str(&format!("package corpus.p{idx};\n\n"));
    if style.comments {
        out.push_str("// generated corpus file\n");
        out.push_str("/*\nclass NotReal {\nint fake(int x) {\nreturn x;\n}\n}\n*/\n");
    }
    for (k, class) in spec.classes.iter().enumerate() {
        let name = format!("J{idx}_{k}");
        let keyword = if class.is_interface() { "interface" } else { "class" };
        if style.extra_blank_lines {
            out.push('\n');
        }
        let params = if class.template { "<T>" } else { "" };
        out.push_str(&format!("public {keyword} {name}{params} {{\n"));
        if !class.is_interface() {
            out.push_str(&format!("    private int field{k};\n"));
        }
        for (j, method) in class.methods.iter().enumerate() {
            if style.comments {
                out.push_str(&format!("    // member {j}\n"));
            }
            let generic = if method.template { "<U> " } else { "" };
            let ret = if method.template { "U" } else { "int" };
            let head = format!("{generic}{ret} m{j}({ret} a)");
            if class.is_interface() {
                if method.proto {
                    out.push_str(&format!("    {head};\n"));
                } else {
                    out.push_str(&format!("    default {head} {{\n        return a;\n    }}\n"));
                }
            } else if method.proto {
                out.push_str(&format!("    abstract {head};\n"));
            } else {
                out.push_str(&format!("    public {head} {{\n        return a;\n    }}\n"));
            }
        }
        out.push_str("}\n");
    }
    out
}

/// Counts implied by the spec itself — what the rendered file must scan to.
pub fn expected_counts(spec: &FileSpec, idx: usize) -> Counts {
    let mut counts = Counts::default();
    for (k, class) in spec.classes.iter().enumerate() {
        let name = if spec.java { format!("J{idx}_{k}") } else { format!("C{idx}_{k}") };
        counts.classes += 1;
        if class.template {
            counts.template_classes += 1;
        }
        let template = class.methods.iter().filter(|m| m.template).count() as u64;
        let total = class.methods.len() as u64;
        counts.methods += total;
        counts.template_methods += template;
        counts.per_class.insert(name, (template, total));
    }
    if !spec.java {
        // Free-function prototypes carry no body and are not counted.
        for method in spec.free.iter().filter(|m| !m.proto) {
            counts.methods += 1;
            if method.template {
                counts.template_methods += 1;
            }
        }
    }
    counts
}

/// Independent line-oriented counter for disciplined sources (declaration
/// heads on their own lines, no braces inside string literals). Knows
/// nothing about the scanner; used to cross-check it.
pub fn count_with_regex(source: &str, dialect: Dialect) -> Counts {
    let block_comment = Regex::new(r"(?s)/\*.*?\*/").unwrap();
    let line_comment = Regex::new(r"//[^\n]*").unwrap();
    let string_lit = Regex::new(r#""[^"\n]*""#).unwrap();
    let stripped = string_lit
        .replace_all(&line_comment.replace_all(&block_comment.replace_all(source, " "), ""), "")
        .into_owned();

    let template_line = Regex::new(r"^\s*template\s*<[^<>]*>\s*$").unwrap();
    let cxx_class = Regex::new(r"^\s*(?:class|struct)\s+(\w+)").unwrap();
    let java_class = Regex::new(
        r"^\s*(?:(?:public|protected|private|abstract|final|static|strictfp)\s+)*(?:class|interface)\s+(\w+)\s*(<[^<>]*>)?",
    )
    .unwrap();
    let cxx_method =
        Regex::new(r"^\s*(?:[\w:~]+[&*]?\s+)+(\w+)\s*\([^()]*\)\s*(?:const\s*)?([;{])\s*$")
            .unwrap();
    let java_method = Regex::new(
        r"^\s*(?:(?:public|private|protected|static|final|abstract|synchronized|native|strictfp|default)\s+)*(<[^<>]*>\s*)?[\w.]+(?:<[^<>]*>)?(?:\[\])?\s+(\w+)\s*\([^()]*\)\s*(?:throws\s+[\w.,\s]*?)?([;{])\s*$",
    )
    .unwrap();

    let mut counts = Counts::default();
    let mut depth: i64 = 0;
    let mut open_classes: Vec<(String, i64)> = Vec::new();
    let mut pending_template = false;
    for line in stripped.lines() {
        if line.trim().is_empty() {
            continue; // blank lines keep a pending template clause armed
        }
        let class_match = match dialect {
            Dialect::CxxTemplates => line.contains('{').then(|| cxx_class.captures(line)).flatten(),
            Dialect::JavaGenerics => line.contains('{').then(|| java_class.captures(line)).flatten(),
        };
        if template_line.is_match(line) {
            pending_template = true;
        } else if let Some(captures) = class_match {
            let name = captures[1].to_string();
            let template = match dialect {
                Dialect::CxxTemplates => pending_template,
                Dialect::JavaGenerics => captures.get(2).is_some(),
            };
            counts.classes += 1;
            if template {
                counts.template_classes += 1;
            }
            counts.per_class.insert(name.clone(), (0, 0));
            open_classes.push((name, depth));
            pending_template = false;
        } else {
            let method_match = match dialect {
                Dialect::CxxTemplates => cxx_method.captures(line).map(|c| {
                    let tail = c[2].to_string();
                    (pending_template, tail)
                }),
                Dialect::JavaGenerics => java_method.captures(line).map(|c| {
                    let template = c.get(1).is_some();
                    let tail = c[3].to_string();
                    (template, tail)
                }),
            };
            if let Some((template, tail)) = method_match {
                // A body-less head at the top level is a C++ free-function
                // prototype — declared, not defined, so not counted.
                let counted = dialect == Dialect::JavaGenerics || tail == "{" || depth > 0;
                if counted {
                    counts.methods += 1;
                    if template {
                        counts.template_methods += 1;
                    }
                    if let Some((owner, _)) = open_classes.last() {
                        let entry = counts.per_class.get_mut(owner).expect("owner recorded");
                        entry.1 += 1;
                        if template {
                            entry.0 += 1;
                        }
                    }
                }
            }
            pending_template = false;
        }
        depth += line.matches('{').count() as i64 - line.matches('}').count() as i64;
        while open_classes.last().is_some_and(|(_, open)| depth <= *open) {
            open_classes.pop();
        }
    }
    counts
}

/// Asserts the pipeline report carries exactly the expected raw counts.
pub fn assert_report_matches(report: &MetricsReport, expected: &Counts) {
    assert_eq!(
        report.ctf,
        Ratio::new(expected.template_classes, expected.classes),
        "ctf mismatch"
    );
    assert_eq!(
        report.mtf_system,
        Ratio::new(expected.template_methods, expected.methods),
        "system mtf mismatch"
    );
    let defined: BTreeMap<String, Ratio> = expected
        .per_class
        .iter()
        .filter(|(_, (_, total))| *total > 0)
        .map(|(name, (t, total))| (name.clone(), Ratio::new(*t, *total)))
        .collect();
    assert_eq!(report.mtf_per_class, defined, "per-class mtf mismatch");
    let undefined: Vec<String> = expected
        .per_class
        .iter()
        .filter(|(_, (_, total))| *total == 0)
        .map(|(name, _)| name.clone())
        .collect();
    assert_eq!(report.undefined_mtf, undefined, "undefined list mismatch");
}
