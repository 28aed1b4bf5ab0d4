//! Declaration scanner: walks a token stream and extracts class and method
//! facts without parsing either language in full.
//!
//! The scanner only interprets declaration heads. Method and initializer
//! bodies, enum/record/annotation bodies, and anything it cannot classify are
//! skipped over balanced delimiters, so statement-level code never influences
//! the counts. A `template<...>` clause (or, in the Java-style dialect, a
//! bare `<...>` at the start of a member declaration) arms a one-shot pending
//! marker that flags only the next class or method declaration and is
//! discarded at any `;`, `{`, or `}` that ends the current declaration.

use crate::frontend::lexer::{Token, TokenKind};
use crate::frontend::FileFacts;
use crate::model::{
    ClassDecl, ClassId, ClassKind, Dialect, FileId, MethodDecl, MethodId, ParseDiagnostic,
    SourceFile, Span,
};

pub fn scan_declarations(tokens: &[Token], dialect: Dialect) -> FileFacts {
    Scanner {
        toks: tokens,
        dialect,
        i: 0,
        file: SourceFile::in_memory(dialect),
        classes: Vec::new(),
        methods: Vec::new(),
        diagnostics: Vec::new(),
        scopes: Vec::new(),
        pending_template: None,
        seen_assign: false,
        seen_new: false,
    }
    .run()
}

enum Scope {
    Namespace(Option<String>),
    Class { idx: usize, name: String },
}

/// An armed template/generic clause waiting for the declaration it flags.
struct Pending {
    params: u32,
    #[allow(dead_code)]
    line: u32,
}

struct Scanner<'a> {
    toks: &'a [Token],
    dialect: Dialect,
    i: usize,
    file: SourceFile,
    classes: Vec<ClassDecl>,
    methods: Vec<MethodDecl>,
    diagnostics: Vec<ParseDiagnostic>,
    scopes: Vec<Scope>,
    pending_template: Option<Pending>,
    seen_assign: bool,
    seen_new: bool,
}

impl<'a> Scanner<'a> {
    fn run(mut self) -> FileFacts {
        while self.i < self.toks.len() {
            let t = &self.toks[self.i];
            match t.kind {
                TokenKind::Semi => {
                    self.i += 1;
                    self.end_decl();
                }
                TokenKind::BraceOpen => self.stray_block(),
                TokenKind::BraceClose => self.close_scope(),
                TokenKind::TemplateOpen => self.bare_angle_group(),
                TokenKind::ParenOpen => self.paren_group(),
                TokenKind::Keyword => self.keyword(),
                TokenKind::Punct => {
                    if t.text == "=" {
                        self.seen_assign = true;
                    }
                    self.i += 1;
                }
                _ => self.i += 1,
            }
        }
        if !self.scopes.is_empty() {
            let line = self.toks.last().map(|t| t.line).unwrap_or(1);
            let n = self.scopes.len();
            self.diagnostics.push(ParseDiagnostic::warn(
                line,
                format!("end of file with {n} unclosed scope(s)"),
            ));
            while let Some(scope) = self.scopes.pop() {
                if let Scope::Class { idx, .. } = scope {
                    self.classes[idx].span.end = line;
                }
            }
        }
        FileFacts {
            file: self.file,
            classes: self.classes,
            methods: self.methods,
            diagnostics: self.diagnostics,
        }
    }

    fn end_decl(&mut self) {
        self.seen_assign = false;
        self.seen_new = false;
        self.pending_template = None;
    }

    fn line_at(&self, i: usize) -> u32 {
        self.toks.get(i).map(|t| t.line).unwrap_or_else(|| {
            self.toks.last().map(|t| t.line).unwrap_or(1)
        })
    }

    fn warn(&mut self, line: u32, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic::warn(line, message));
    }

    fn error(&mut self, line: u32, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic::error(line, message));
    }

    /// Joins open scope names and `name` into a qualified name.
    fn qualify(&self, name: &str) -> String {
        let sep = self.dialect.scope_separator();
        let mut out = String::new();
        for scope in &self.scopes {
            match scope {
                Scope::Namespace(Some(s)) => {
                    out.push_str(s);
                    out.push_str(sep);
                }
                Scope::Namespace(None) => {}
                Scope::Class { name, .. } => {
                    out.push_str(name);
                    out.push_str(sep);
                }
            }
        }
        out.push_str(name);
        out
    }

    fn innermost_class(&self) -> Option<usize> {
        self.scopes.iter().rev().find_map(|s| match s {
            Scope::Class { idx, .. } => Some(*idx),
            _ => None,
        })
    }

    // ---- balanced skipping --------------------------------------------

    /// From an opening token at `i`, returns the index one past its match.
    /// Only `open`/`close` kinds affect depth, so lambdas inside argument
    /// lists or parens inside bodies pass straight through.
    fn skip_balanced(&mut self, mut i: usize, open: TokenKind, close: TokenKind) -> usize {
        let start_line = self.line_at(i);
        let mut depth = 0usize;
        while i < self.toks.len() {
            let k = self.toks[i].kind;
            i += 1;
            if k == open {
                depth += 1;
            } else if k == close {
                depth -= 1;
                if depth == 0 {
                    return i;
                }
            }
        }
        self.warn(start_line, "unterminated group at end of file");
        i
    }

    /// Non-diagnosing balanced scan used by lookahead (no consumption).
    fn find_balanced(&self, mut i: usize, open: TokenKind, close: TokenKind) -> usize {
        let mut depth = 0usize;
        while i < self.toks.len() {
            let k = self.toks[i].kind;
            i += 1;
            if k == open {
                depth += 1;
            } else if k == close {
                depth -= 1;
                if depth == 0 {
                    return i;
                }
            }
        }
        i
    }

    /// Consumes through the end of the current declaration: a `;` at group
    /// depth zero, or a balanced `{...}` (plus an optional trailing `;`).
    fn skip_to_decl_end(&mut self) {
        while self.i < self.toks.len() {
            match self.toks[self.i].kind {
                TokenKind::Semi => {
                    self.i += 1;
                    break;
                }
                TokenKind::ParenOpen => {
                    self.i = self.skip_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
                }
                TokenKind::BraceOpen => {
                    self.i = self.skip_balanced(self.i, TokenKind::BraceOpen, TokenKind::BraceClose);
                    if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::Semi) {
                        self.i += 1;
                    }
                    break;
                }
                TokenKind::BraceClose => break, // stray close belongs to an enclosing scope
                _ => self.i += 1,
            }
        }
        self.end_decl();
    }

    /// Consumes a `<...>` group starting at `self.i` and returns its
    /// top-level parameter count (`<>` counts zero). Commas nested inside
    /// inner angle groups or parentheses do not count. Stops early if the
    /// lexer abandoned the group at a `;`/`{`/`}`.
    fn angle_group_params(&mut self) -> u32 {
        debug_assert_eq!(self.toks[self.i].kind, TokenKind::TemplateOpen);
        self.i += 1;
        let mut angle_depth = 1u32;
        let mut paren_depth = 0u32;
        let mut commas = 0u32;
        let mut inner_tokens = 0u32;
        while self.i < self.toks.len() {
            let t = &self.toks[self.i];
            match t.kind {
                TokenKind::TemplateOpen => angle_depth += 1,
                TokenKind::TemplateClose => {
                    angle_depth -= 1;
                    if angle_depth == 0 {
                        self.i += 1;
                        break;
                    }
                }
                TokenKind::ParenOpen => paren_depth += 1,
                TokenKind::ParenClose => paren_depth = paren_depth.saturating_sub(1),
                // The lexer already warned and reset its depth here.
                TokenKind::Semi | TokenKind::BraceOpen | TokenKind::BraceClose => break,
                TokenKind::Punct if t.text == "," && angle_depth == 1 && paren_depth == 0 => {
                    commas += 1;
                }
                _ => {}
            }
            inner_tokens += 1;
            self.i += 1;
        }
        if inner_tokens == 0 {
            0
        } else {
            commas + 1
        }
    }

    // ---- main-loop arms -----------------------------------------------

    /// A `{` not claimed by a class or method head: initializer block,
    /// static block, brace initializer, … Skipped wholesale.
    fn stray_block(&mut self) {
        if self.seen_new {
            let line = self.line_at(self.i);
            self.warn(line, "anonymous class body skipped");
            self.seen_new = false;
        }
        self.i = self.skip_balanced(self.i, TokenKind::BraceOpen, TokenKind::BraceClose);
        self.pending_template = None;
    }

    fn close_scope(&mut self) {
        let line = self.line_at(self.i);
        match self.scopes.pop() {
            Some(Scope::Class { idx, .. }) => self.classes[idx].span.end = line,
            Some(Scope::Namespace(_)) => {}
            None => self.warn(line, "unmatched closing brace"),
        }
        self.i += 1;
        self.end_decl();
    }

    /// A `<...>` group reaching the main loop directly. In the Java-style
    /// dialect this is a method's own type-parameter clause; arm it. In the
    /// C++ dialect (where `template` is handled separately) it is noise.
    fn bare_angle_group(&mut self) {
        let line = self.line_at(self.i);
        let params = self.angle_group_params();
        if self.dialect == Dialect::JavaGenerics {
            self.pending_template = Some(Pending { params, line });
        }
    }

    fn keyword(&mut self) {
        let text = self.toks[self.i].text.clone();
        match (self.dialect, text.as_str()) {
            (Dialect::CxxTemplates, "template") => self.template_clause(),
            (Dialect::CxxTemplates, "class" | "struct") => self.class_decl(&text),
            (Dialect::JavaGenerics, "class" | "interface") => {
                // `Foo.class` is an expression, not a declaration.
                if self.i > 0 && self.toks[self.i - 1].is_punct(".") {
                    self.i += 1;
                } else {
                    self.class_decl(&text);
                }
            }
            (Dialect::CxxTemplates, "enum") | (Dialect::JavaGenerics, "enum" | "record") => {
                self.i += 1;
                self.skip_to_decl_end();
            }
            (Dialect::CxxTemplates, "union") => {
                self.i += 1;
                self.skip_to_decl_end();
            }
            (Dialect::CxxTemplates, "friend") => {
                self.i += 1;
                self.skip_to_decl_end();
            }
            (Dialect::CxxTemplates, "using" | "typedef") => {
                self.i += 1;
                self.skip_to_decl_end();
            }
            (Dialect::JavaGenerics, "import" | "package") => {
                self.i += 1;
                self.skip_to_decl_end();
            }
            (Dialect::CxxTemplates, "namespace") => self.namespace_decl(),
            (Dialect::CxxTemplates, "extern") => self.extern_decl(),
            (Dialect::CxxTemplates, "operator") => self.operator_method(),
            (Dialect::JavaGenerics, "new") => {
                self.seen_new = true;
                self.i += 1;
            }
            _ => self.i += 1,
        }
    }

    /// `template` + `<...>`: arm the one-shot pending marker.
    fn template_clause(&mut self) {
        let line = self.line_at(self.i);
        self.i += 1;
        if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::TemplateOpen) {
            let params = self.angle_group_params();
            self.pending_template = Some(Pending { params, line });
        } else {
            self.error(line, "template keyword without a parameter list; skipped");
        }
    }

    fn namespace_decl(&mut self) {
        self.i += 1;
        let mut name = String::new();
        // `namespace a::b::c {` opens one scope carrying the joined name.
        while let Some(t) = self.toks.get(self.i) {
            if t.kind == TokenKind::Ident {
                if !name.is_empty() {
                    name.push_str("::");
                }
                name.push_str(&t.text);
                self.i += 1;
                if self.toks.get(self.i).map(|t| t.is_punct(":")) == Some(true)
                    && self.toks.get(self.i + 1).map(|t| t.is_punct(":")) == Some(true)
                {
                    self.i += 2;
                    continue;
                }
            }
            break;
        }
        match self.toks.get(self.i) {
            Some(t) if t.kind == TokenKind::BraceOpen => {
                self.i += 1;
                self.scopes.push(Scope::Namespace(if name.is_empty() { None } else { Some(name) }));
                self.end_decl();
            }
            Some(t) if t.is_punct("=") => self.skip_to_decl_end(), // namespace alias
            _ => {}
        }
    }

    /// `extern "C" {` opens a transparent scope; other `extern` forms are
    /// left for the ordinary declaration paths.
    fn extern_decl(&mut self) {
        self.i += 1;
        if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::Literal) {
            self.i += 1;
            if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::BraceOpen) {
                self.i += 1;
                self.scopes.push(Scope::Namespace(None));
                self.end_decl();
            }
        }
    }

    /// `operator` + symbol soup up to the call parenthesis, e.g.
    /// `operator<<`, `operator()`, `operator std::string`.
    fn operator_method(&mut self) {
        let line = self.line_at(self.i);
        self.i += 1;
        let mut name = String::from("operator");
        // `operator()` has its parens in the name, then the parameter list.
        if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::ParenOpen)
            && self.toks.get(self.i + 1).map(|t| t.kind) == Some(TokenKind::ParenClose)
        {
            name.push_str("()");
            self.i += 2;
        } else {
            while let Some(t) = self.toks.get(self.i) {
                match t.kind {
                    TokenKind::ParenOpen | TokenKind::Semi | TokenKind::BraceOpen
                    | TokenKind::BraceClose => break,
                    _ => {
                        if matches!(t.kind, TokenKind::Ident | TokenKind::Keyword)
                            && name.chars().last().is_some_and(|c| c.is_alphanumeric())
                        {
                            name.push(' ');
                        }
                        name.push_str(&t.text);
                        self.i += 1;
                    }
                }
            }
        }
        if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::ParenOpen) {
            self.method_candidate(name, line, true);
        } else {
            self.error(line, "operator declaration without a parameter list; skipped");
            self.end_decl();
        }
    }

    // ---- class declarations -------------------------------------------

    fn class_decl(&mut self, kw: &str) {
        let kw_line = self.line_at(self.i);
        let kind = match kw {
            "struct" => ClassKind::Struct,
            "interface" => ClassKind::Interface,
            _ => ClassKind::Class,
        };
        // Annotation type `@interface Name { ... }` declares no class.
        if kw == "interface" && self.i > 0 && self.toks[self.i - 1].is_punct("@") {
            self.i += 1;
            self.skip_to_decl_end();
            return;
        }
        self.i += 1;

        // Find the name, tolerating attributes and modifiers in between.
        let mut name: Option<(String, u32)> = None;
        while let Some(t) = self.toks.get(self.i) {
            match t.kind {
                TokenKind::Ident => {
                    name = Some((t.text.clone(), t.line));
                    self.i += 1;
                    break;
                }
                TokenKind::BraceOpen => break,
                TokenKind::Semi => break,
                _ => self.i += 1,
            }
        }
        let Some((name, _)) = name else {
            match self.toks.get(self.i).map(|t| t.kind) {
                Some(TokenKind::BraceOpen) => {
                    self.warn(kw_line, format!("anonymous {kw} skipped"));
                    self.i =
                        self.skip_balanced(self.i, TokenKind::BraceOpen, TokenKind::BraceClose);
                }
                _ => self.error(kw_line, format!("{kw} declaration without a name; skipped")),
            }
            self.end_decl();
            return;
        };

        // Generic parameter group directly after the name. It determines the
        // parameter count in the Java-style dialect; in the C++ dialect the
        // count comes from the `template<...>` clause and a group here is a
        // specialization head.
        let mut name_params = 0u32;
        if self.toks.get(self.i).map(|t| t.kind) == Some(TokenKind::TemplateOpen) {
            name_params = self.angle_group_params();
        }
        let param_count = match self.dialect {
            Dialect::CxxTemplates => {
                self.pending_template.take().map(|p| p.params).unwrap_or(0)
            }
            Dialect::JavaGenerics => name_params,
        };

        // Base clauses and attributes up to the body or a forward `;`.
        loop {
            match self.toks.get(self.i) {
                None => {
                    self.end_decl();
                    return;
                }
                Some(t) => match t.kind {
                    TokenKind::BraceOpen => break,
                    TokenKind::Semi => {
                        // Forward declaration (or C-style `struct X v;`): no
                        // definition here, nothing to count.
                        self.i += 1;
                        self.end_decl();
                        return;
                    }
                    TokenKind::TemplateOpen => {
                        self.angle_group_params();
                    }
                    TokenKind::ParenOpen => {
                        self.i =
                            self.skip_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
                    }
                    TokenKind::BraceClose => {
                        self.end_decl();
                        return;
                    }
                    _ => self.i += 1,
                },
            }
        }

        // Body: record the class and open its scope.
        self.i += 1; // consume `{`
        let qualified = self.qualify(&name);
        let idx = self.classes.len();
        self.classes.push(ClassDecl {
            qualified_name: qualified,
            file: FileId(0),
            span: Span { start: kw_line, end: kw_line },
            kind,
            is_template: param_count >= 1,
            template_param_count: param_count,
            method_ids: Vec::new(),
        });
        self.scopes.push(Scope::Class { idx, name });
        self.end_decl();
    }

    // ---- method declarations ------------------------------------------

    /// `(` in the main loop: decide whether the preceding tokens form a
    /// method head and dispatch accordingly.
    fn paren_group(&mut self) {
        let prev = if self.i > 0 { Some(&self.toks[self.i - 1]) } else { None };
        let candidate = match prev {
            Some(t) if t.kind == TokenKind::Ident && !self.seen_assign => Some(t),
            _ => None,
        };
        let Some(cand) = candidate else {
            self.i = self.skip_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
            return;
        };
        let name_line = cand.line;
        let mut name = cand.text.clone();
        let mut record = true;
        let before = self.i.checked_sub(2).and_then(|i| self.toks.get(i));
        match (self.dialect, before) {
            // Annotation use `@Anno(...)` — argument list, not a method.
            (Dialect::JavaGenerics, Some(p)) if p.is_punct("@") => {
                self.i = self.skip_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
                return;
            }
            // `x.f(...)` is a call; never a declaration head in this dialect.
            (Dialect::JavaGenerics, Some(p)) if p.is_punct(".") => {
                self.i = self.skip_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
                return;
            }
            (Dialect::CxxTemplates, Some(p)) if p.is_punct("~") => {
                name = format!("~{name}");
            }
            // `Foo::bar(...)` is an out-of-line definition of a member that
            // was already counted at its in-class declaration: consume it
            // fully but record nothing.
            (Dialect::CxxTemplates, Some(p)) if p.is_punct(":") => {
                let p2 = self.i.checked_sub(3).and_then(|i| self.toks.get(i));
                if p2.is_some_and(|t| t.is_punct(":")) {
                    record = false;
                }
            }
            _ => {}
        }
        self.method_candidate(name, name_line, record);
    }

    /// Shared accept/reject path once a candidate name sits before `(`.
    fn method_candidate(&mut self, name: String, line: u32, record: bool) {
        let after_params = self.find_balanced(self.i, TokenKind::ParenOpen, TokenKind::ParenClose);
        let trailer = match self.dialect {
            Dialect::CxxTemplates => self.cxx_trailer(after_params),
            Dialect::JavaGenerics => self.java_trailer(after_params),
        };
        match trailer {
            Trailer::Reject => {
                // Not a declaration head; resume after the argument list.
                self.i = after_params;
            }
            Trailer::Accept { body_at, end_index } => {
                let pending = self.pending_template.take();
                let end_line;
                if let Some(body) = body_at {
                    self.i = self.skip_balanced(body, TokenKind::BraceOpen, TokenKind::BraceClose);
                    end_line = self.line_at(self.i.saturating_sub(1));
                } else {
                    self.i = end_index; // one past the `;`
                    end_line = self.line_at(self.i.saturating_sub(1));
                }
                let owner = self.innermost_class();
                // Free-function prototypes in the C++ dialect carry no
                // definition; skip them so a later out-of-line or header
                // definition cannot double-count.
                let prototype_only = body_at.is_none() && owner.is_none()
                    && self.dialect == Dialect::CxxTemplates;
                if record && !prototype_only {
                    let mid = MethodId(self.methods.len());
                    self.methods.push(MethodDecl {
                        qualified_name: self.qualify(&name),
                        owner: owner.map(ClassId),
                        file: FileId(0),
                        span: Span { start: line, end: end_line },
                        is_template: pending.map(|p| p.params >= 1).unwrap_or(false),
                    });
                    if let Some(idx) = owner {
                        self.classes[idx].method_ids.push(mid);
                    }
                }
                self.seen_assign = false;
                self.seen_new = false;
            }
        }
    }

    /// C++-style declarator trailer after the parameter list: cv/ref
    /// qualifiers, `noexcept(...)`, `override`/`final`, attributes, trailing
    /// return types, `= 0|default|delete`, constructor initializer lists and
    /// function-try-blocks, ending in a body or `;`.
    fn cxx_trailer(&self, mut j: usize) -> Trailer {
        loop {
            let Some(t) = self.toks.get(j) else { return Trailer::Reject };
            match t.kind {
                TokenKind::BraceOpen => {
                    return Trailer::Accept { body_at: Some(j), end_index: j };
                }
                TokenKind::Semi => {
                    return Trailer::Accept { body_at: None, end_index: j + 1 };
                }
                _ if t.is_word("const")
                    || t.is_word("volatile")
                    || t.is_word("override")
                    || t.is_word("final")
                    || t.is_word("mutable")
                    || t.is_word("try") =>
                {
                    j += 1;
                }
                _ if t.is_word("noexcept") || t.is_word("throw") => {
                    j += 1;
                    if self.toks.get(j).map(|t| t.kind) == Some(TokenKind::ParenOpen) {
                        j = self.find_balanced(j, TokenKind::ParenOpen, TokenKind::ParenClose);
                    }
                }
                TokenKind::Punct if t.text == "&" => j += 1,
                TokenKind::Punct if t.text == "[" => {
                    j = self.find_bracket_close(j);
                }
                TokenKind::Punct if t.text == "-" => {
                    // `->` trailing return type: consume type tokens.
                    if self.toks.get(j + 1).is_some_and(|t| t.is_punct(">")) {
                        j += 2;
                        loop {
                            match self.toks.get(j) {
                                None => return Trailer::Reject,
                                Some(t) => match t.kind {
                                    TokenKind::BraceOpen | TokenKind::Semi => break,
                                    TokenKind::ParenOpen => {
                                        j = self.find_balanced(
                                            j,
                                            TokenKind::ParenOpen,
                                            TokenKind::ParenClose,
                                        );
                                    }
                                    TokenKind::TemplateOpen => {
                                        j = self.find_balanced(
                                            j,
                                            TokenKind::TemplateOpen,
                                            TokenKind::TemplateClose,
                                        );
                                    }
                                    TokenKind::BraceClose => return Trailer::Reject,
                                    _ => j += 1,
                                },
                            }
                        }
                    } else {
                        return Trailer::Reject;
                    }
                }
                TokenKind::Punct if t.text == "=" => {
                    // `= 0;` (pure virtual), `= default;`, `= delete;`.
                    let next = self.toks.get(j + 1);
                    let ok = match next {
                        Some(n) if n.kind == TokenKind::Literal => true,
                        Some(n) if n.is_word("default") || n.is_word("delete") => true,
                        _ => false,
                    };
                    if ok && self.toks.get(j + 2).map(|t| t.kind) == Some(TokenKind::Semi) {
                        return Trailer::Accept { body_at: None, end_index: j + 3 };
                    }
                    return Trailer::Reject;
                }
                TokenKind::Punct if t.text == ":" => {
                    // Constructor initializer list: `: member(args), base{...} {`.
                    j += 1;
                    loop {
                        match self.toks.get(j) {
                            None => return Trailer::Reject,
                            Some(t) => match t.kind {
                                TokenKind::BraceOpen => {
                                    // Directly after an identifier this is a
                                    // brace initializer, otherwise the body.
                                    let prev = j.checked_sub(1).and_then(|i| self.toks.get(i));
                                    let is_init = prev.is_some_and(|p| {
                                        matches!(p.kind, TokenKind::Ident | TokenKind::Keyword)
                                    });
                                    if is_init {
                                        j = self.find_balanced(
                                            j,
                                            TokenKind::BraceOpen,
                                            TokenKind::BraceClose,
                                        );
                                    } else {
                                        return Trailer::Accept { body_at: Some(j), end_index: j };
                                    }
                                }
                                TokenKind::ParenOpen => {
                                    j = self.find_balanced(
                                        j,
                                        TokenKind::ParenOpen,
                                        TokenKind::ParenClose,
                                    );
                                }
                                TokenKind::TemplateOpen => {
                                    j = self.find_balanced(
                                        j,
                                        TokenKind::TemplateOpen,
                                        TokenKind::TemplateClose,
                                    );
                                }
                                TokenKind::Semi | TokenKind::BraceClose => return Trailer::Reject,
                                _ => j += 1,
                            },
                        }
                    }
                }
                _ => return Trailer::Reject,
            }
        }
    }

    /// Java-style trailer: optional `throws A, B.C` then body or `;`.
    fn java_trailer(&self, mut j: usize) -> Trailer {
        loop {
            let Some(t) = self.toks.get(j) else { return Trailer::Reject };
            match t.kind {
                TokenKind::BraceOpen => {
                    return Trailer::Accept { body_at: Some(j), end_index: j };
                }
                TokenKind::Semi => {
                    return Trailer::Accept { body_at: None, end_index: j + 1 };
                }
                _ if t.is_word("throws") => j += 1,
                TokenKind::Ident => j += 1,
                TokenKind::Punct if t.text == "," || t.text == "." => j += 1,
                TokenKind::TemplateOpen => {
                    j = self.find_balanced(j, TokenKind::TemplateOpen, TokenKind::TemplateClose);
                }
                _ => return Trailer::Reject,
            }
        }
    }

    /// `[` ... `]` with nesting, for attributes like `[[nodiscard]]`.
    fn find_bracket_close(&self, mut j: usize) -> usize {
        let mut depth = 0usize;
        while j < self.toks.len() {
            let t = &self.toks[j];
            j += 1;
            if t.is_punct("[") {
                depth += 1;
            } else if t.is_punct("]") {
                depth -= 1;
                if depth == 0 {
                    return j;
                }
            }
        }
        j
    }
}

enum Trailer {
    /// `body_at`: index of the `{` when the declaration has a body;
    /// `end_index`: index one past the declaration when it has none.
    Accept { body_at: Option<usize>, end_index: usize },
    Reject,
}
