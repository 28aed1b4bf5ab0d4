//! Tolerant tokenizer for both input dialects.
//!
//! The lexer strips comments (and, for the C++-style dialect, preprocessor
//! directive lines), keeps string/char literals atomic so braces inside them
//! cannot skew nesting depth, and classifies `<` as [`TokenKind::TemplateOpen`]
//! only in declaration-head positions:
//!
//! * directly after the `template` keyword (C++ dialect);
//! * after a name that itself follows `class`/`struct`/`interface`;
//! * at the start of a member declaration (Java dialect), i.e. after `{`,
//!   `}`, `;`, a modifier keyword, an annotation name, or at start of input;
//! * anywhere inside an already-open template parameter group.
//!
//! Every other `<` is plain punctuation, which avoids expression parsing:
//! `a < b` never opens a group. Recovery is best-effort and non-fatal; the
//! lexer reports oddities (unterminated literals or comments, interrupted
//! parameter groups, invalid UTF-8) as WARN diagnostics.

use crate::model::{Dialect, ParseDiagnostic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Keyword,
    Punct,
    Literal,
    TemplateOpen,
    TemplateClose,
    BraceOpen,
    BraceClose,
    ParenOpen,
    ParenClose,
    Semi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: u32,
}

impl Token {
    pub fn is(&self, text: &str) -> bool {
        self.text == text
    }

    pub fn is_punct(&self, text: &str) -> bool {
        self.kind == TokenKind::Punct && self.text == text
    }

    /// Keyword-or-identifier with the given spelling; contextual keywords
    /// (`override`, `final`, …) may lex either way.
    pub fn is_word(&self, text: &str) -> bool {
        matches!(self.kind, TokenKind::Ident | TokenKind::Keyword) && self.text == text
    }
}

/// Tokens plus everything the lexer had to tolerate along the way.
#[derive(Debug, Clone)]
pub struct TokenStream {
    pub tokens: Vec<Token>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

const CXX_KEYWORDS: &[&str] = &[
    "alignas", "alignof", "auto", "bool", "break", "case", "catch", "char", "class", "const",
    "constexpr", "continue", "decltype", "default", "delete", "do", "double", "else", "enum",
    "explicit", "extern", "final", "float", "for", "friend", "goto", "if", "inline", "int", "long",
    "mutable", "namespace", "new", "noexcept", "operator", "override", "private", "protected",
    "public", "return", "short", "signed", "sizeof", "static", "static_assert", "struct", "switch",
    "template", "this", "throw", "try", "typedef", "typename", "union", "unsigned", "using",
    "virtual", "void", "volatile", "wchar_t", "while",
];

const JAVA_KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "record", "return", "short",
    "static", "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
];

/// Member-declaration modifiers after which a `<` starts a method's own
/// type-parameter clause in the Java-style dialect.
pub const JAVA_MODIFIERS: &[&str] = &[
    "public", "private", "protected", "static", "final", "abstract", "synchronized", "native",
    "strictfp", "default", "transient", "volatile",
];

pub fn tokenize(source: &[u8], dialect: Dialect) -> TokenStream {
    Lexer::new(source, dialect).run()
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    /// Only whitespace seen since the last newline (comments do not clear
    /// it, so an indented `#` still starts a directive).
    at_line_start: bool,
    dialect: Dialect,
    angle_depth: u32,
    angle_open_line: u32,
    tokens: Vec<Token>,
    diagnostics: Vec<ParseDiagnostic>,
}

impl Lexer {
    fn new(source: &[u8], dialect: Dialect) -> Lexer {
        let text = String::from_utf8_lossy(source);
        let mut diagnostics = Vec::new();
        if text.as_bytes() != source {
            diagnostics.push(ParseDiagnostic::warn(1, "invalid UTF-8 bytes replaced"));
        }
        Lexer {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            at_line_start: true,
            dialect,
            angle_depth: 0,
            angle_open_line: 0,
            tokens: Vec::new(),
            diagnostics,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        c
    }

    fn push(&mut self, kind: TokenKind, text: String, line: u32) {
        self.tokens.push(Token { kind, text, line });
        self.at_line_start = false;
    }

    fn warn(&mut self, line: u32, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic::warn(line, message));
    }

    fn run(mut self) -> TokenStream {
        while let Some(c) = self.peek() {
            match c {
                '\n' => {
                    self.bump();
                    self.line += 1;
                    self.at_line_start = true;
                }
                c if c.is_whitespace() => {
                    self.bump();
                }
                '#' if self.dialect == Dialect::CxxTemplates && self.at_line_start => {
                    self.skip_directive();
                }
                '/' if self.peek2() == Some('/') => self.skip_line_comment(),
                '/' if self.peek2() == Some('*') => self.skip_block_comment(),
                '"' => self.lex_quoted('"'),
                '\'' => self.lex_quoted('\''),
                c if c == '_' || c == '$' || c.is_alphabetic() => self.lex_word(),
                c if c.is_ascii_digit() => self.lex_number(),
                '.' if matches!(self.peek2(), Some(d) if d.is_ascii_digit()) => self.lex_number(),
                '<' => self.lex_angle_open(),
                '>' => self.lex_angle_close(),
                '{' => self.lex_nesting(TokenKind::BraceOpen, "{"),
                '}' => self.lex_nesting(TokenKind::BraceClose, "}"),
                '(' => self.lex_simple(TokenKind::ParenOpen, "("),
                ')' => self.lex_simple(TokenKind::ParenClose, ")"),
                ';' => self.lex_nesting(TokenKind::Semi, ";"),
                c => {
                    let line = self.line;
                    self.bump();
                    self.push(TokenKind::Punct, c.to_string(), line);
                }
            }
        }
        if self.angle_depth > 0 {
            let line = self.angle_open_line;
            self.warn(line, "template parameter list still open at end of file");
        }
        TokenStream { tokens: self.tokens, diagnostics: self.diagnostics }
    }

    /// Consumes a `#` directive to end of line, honoring `\` continuations.
    fn skip_directive(&mut self) {
        let mut last = '#';
        while let Some(c) = self.peek() {
            if c == '\n' {
                if last == '\\' {
                    self.bump();
                    self.line += 1;
                    last = ' ';
                    continue;
                }
                break;
            }
            if c != '\r' {
                last = c;
            }
            self.bump();
        }
    }

    fn skip_line_comment(&mut self) {
        while let Some(c) = self.peek() {
            if c == '\n' {
                break;
            }
            self.bump();
        }
    }

    fn skip_block_comment(&mut self) {
        let start = self.line;
        self.bump();
        self.bump();
        loop {
            match self.peek() {
                None => {
                    self.warn(start, "unterminated block comment");
                    return;
                }
                Some('*') if self.peek2() == Some('/') => {
                    self.bump();
                    self.bump();
                    return;
                }
                Some('\n') => {
                    self.bump();
                    self.line += 1;
                }
                Some(_) => {
                    self.bump();
                }
            }
        }
    }

    /// String or char literal, emitted as one LITERAL token including quotes.
    /// An unescaped newline or EOF ends it early with a WARN.
    fn lex_quoted(&mut self, quote: char) {
        let start = self.line;
        let mut text = String::new();
        text.push(self.bump());
        loop {
            match self.peek() {
                None => {
                    self.warn(start, "unterminated literal");
                    break;
                }
                Some('\\') => {
                    text.push(self.bump());
                    if let Some(esc) = self.peek() {
                        if esc == '\n' {
                            self.line += 1;
                        }
                        text.push(self.bump());
                    }
                }
                Some(c) if c == quote => {
                    text.push(self.bump());
                    break;
                }
                Some('\n') => {
                    self.warn(start, "unterminated literal");
                    break;
                }
                Some(_) => text.push(self.bump()),
            }
        }
        self.push(TokenKind::Literal, text, start);
    }

    fn lex_word(&mut self) {
        let line = self.line;
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if c == '_' || c == '$' || c.is_alphanumeric() {
                text.push(self.bump());
            } else {
                break;
            }
        }
        let keywords = match self.dialect {
            Dialect::CxxTemplates => CXX_KEYWORDS,
            Dialect::JavaGenerics => JAVA_KEYWORDS,
        };
        let kind = if keywords.contains(&text.as_str()) { TokenKind::Keyword } else { TokenKind::Ident };
        self.push(kind, text, line);
    }

    /// Numbers swallow alphanumerics, `.`, exponent signs, and (C++ dialect)
    /// digit-separator quotes, so `1'000'000u` or `0x7Bp-2` is one LITERAL.
    fn lex_number(&mut self) {
        let line = self.line;
        let mut text = String::new();
        let mut prev = ' ';
        while let Some(c) = self.peek() {
            let take = c.is_ascii_alphanumeric()
                || c == '_'
                || c == '.'
                || (c == '\''
                    && self.dialect == Dialect::CxxTemplates
                    && matches!(self.peek2(), Some(d) if d.is_ascii_alphanumeric()))
                || ((c == '+' || c == '-') && matches!(prev, 'e' | 'E' | 'p' | 'P'));
            if !take {
                break;
            }
            prev = c;
            text.push(self.bump());
        }
        self.push(TokenKind::Literal, text, line);
    }

    fn lex_angle_open(&mut self) {
        let line = self.line;
        self.bump();
        if self.angle_depth > 0 || self.template_open_position() {
            if self.angle_depth == 0 {
                self.angle_open_line = line;
            }
            self.angle_depth += 1;
            self.push(TokenKind::TemplateOpen, "<".to_string(), line);
        } else {
            self.push(TokenKind::Punct, "<".to_string(), line);
        }
    }

    fn lex_angle_close(&mut self) {
        let line = self.line;
        self.bump();
        if self.angle_depth > 0 {
            self.angle_depth -= 1;
            self.push(TokenKind::TemplateClose, ">".to_string(), line);
        } else {
            self.push(TokenKind::Punct, ">".to_string(), line);
        }
    }

    /// Whether a `<` at the current position starts a template/generic
    /// parameter group, judged purely from the last two tokens.
    fn template_open_position(&self) -> bool {
        let n = self.tokens.len();
        let prev = self.tokens.last();
        let prev2 = n.checked_sub(2).and_then(|i| self.tokens.get(i));
        match self.dialect {
            Dialect::CxxTemplates => match prev {
                Some(t) if t.kind == TokenKind::Keyword && t.text == "template" => true,
                Some(t) if t.kind == TokenKind::Ident => matches!(
                    prev2,
                    Some(p) if p.kind == TokenKind::Keyword && (p.text == "class" || p.text == "struct")
                ),
                _ => false,
            },
            Dialect::JavaGenerics => match prev {
                None => true,
                Some(t) => match t.kind {
                    TokenKind::BraceOpen | TokenKind::BraceClose | TokenKind::Semi => true,
                    TokenKind::Keyword => JAVA_MODIFIERS.contains(&t.text.as_str()),
                    TokenKind::Ident => match prev2 {
                        Some(p) if p.kind == TokenKind::Keyword
                            && (p.text == "class" || p.text == "interface") => true,
                        Some(p) if p.is_punct("@") => true,
                        _ => false,
                    },
                    _ => false,
                },
            },
        }
    }

    fn lex_simple(&mut self, kind: TokenKind, text: &str) {
        let line = self.line;
        self.bump();
        self.push(kind, text.to_string(), line);
    }

    /// `;` `{` `}` — tokens that cannot legally appear inside a template
    /// parameter group; an open group is abandoned with a WARN.
    fn lex_nesting(&mut self, kind: TokenKind, text: &str) {
        if self.angle_depth > 0 {
            self.angle_depth = 0;
            let line = self.line;
            self.warn(line, format!("template parameter list interrupted by `{text}`"));
        }
        self.lex_simple(kind, text);
    }
}
