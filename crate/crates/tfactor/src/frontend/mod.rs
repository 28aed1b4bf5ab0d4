//! Dialect frontends: tolerant lexing plus declaration scanning.
//!
//! [`parse_file`] (and its in-memory twin [`parse_source`]) compose
//! [`tokenize`] and [`scan_declarations`] into a pure function of
//! `(bytes, dialect)`; distinct files can be scanned concurrently with no
//! shared state.

mod lexer;
mod scanner;

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{ClassDecl, Dialect, MethodDecl, ParseDiagnostic, SourceFile};

pub use lexer::{tokenize, Token, TokenKind, TokenStream};
pub use scanner::scan_declarations;

/// Everything extracted from one source file: the file record, its class and
/// method declarations (with intra-file owner links), and all lexer/scanner
/// diagnostics sorted by line.
#[derive(Debug, Clone)]
pub struct FileFacts {
    pub file: SourceFile,
    pub classes: Vec<ClassDecl>,
    pub methods: Vec<MethodDecl>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

/// Scans an in-memory buffer. The resulting facts carry a placeholder file
/// record; [`parse_file`] substitutes the real one.
pub fn parse_source(source: &[u8], dialect: Dialect) -> FileFacts {
    let stream = tokenize(source, dialect);
    let mut facts = scan_declarations(&stream.tokens, dialect);
    let mut diagnostics = stream.diagnostics;
    diagnostics.append(&mut facts.diagnostics);
    diagnostics.sort_by_key(|d| d.line);
    facts.diagnostics = diagnostics;
    facts
}

/// Reads and scans one file.
pub fn parse_file(path: &Path, dialect: Dialect) -> Result<FileFacts> {
    let bytes = fs::read(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut facts = parse_source(&bytes, dialect);
    facts.file = SourceFile {
        path: path.to_path_buf(),
        dialect,
        byte_count: bytes.len() as u64,
        diagnostics: Vec::new(),
    };
    Ok(facts)
}
