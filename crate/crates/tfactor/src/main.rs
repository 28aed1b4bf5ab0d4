use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use tfactor::{
    run, Dialect, Error, GateConfig, OutputFormat, Ratio, RunConfig, UndefinedPolicy,
};

/// Template/generic reuse metrics for C++ and Java source trees.
///
/// Scans the given roots, counts template/generic class and method
/// declarations, and reports CTF (class template factor), MTF (method
/// template factor), and optionally the manifest-based reuse ratio U.
/// Thresholds turn the report into a CI gate.
#[derive(Parser)]
#[command(name = "tfactor", version, max_term_width = 100)]
struct Args {
    /// Files or directories to scan.
    #[arg(required = true, value_name = "PATH")]
    roots: Vec<PathBuf>,

    /// Parse every selected file as this dialect instead of mapping by
    /// extension.
    #[arg(long, value_enum, value_name = "DIALECT")]
    dialect: Option<DialectArg>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Reuse manifest: one class-name glob per line, `#` comments.
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,

    /// Category rules: `glob => CATEGORY` lines, first match wins.
    #[arg(long, value_name = "FILE")]
    rules: Option<PathBuf>,

    /// Minimum CTF, as a decimal in [0,1] or a fraction like `3/11`.
    #[arg(long, value_name = "MIN")]
    gate_ctf: Option<String>,

    /// Minimum system-wide MTF.
    #[arg(long, value_name = "MIN")]
    gate_mtf: Option<String>,

    /// Minimum reuse ratio U; requires --manifest.
    #[arg(long, value_name = "MIN")]
    gate_u: Option<String>,

    /// How gates treat an undefined (0/0) metric; requires a gate.
    #[arg(long, value_enum, value_name = "POLICY")]
    undefined: Option<UndefinedArg>,

    /// Only scan files whose root-relative path matches; repeatable.
    #[arg(long, value_name = "GLOB")]
    include: Vec<String>,

    /// Skip files whose root-relative path matches; repeatable.
    #[arg(long, value_name = "GLOB")]
    exclude: Vec<String>,

    /// Exit with code 3 if any parse errors occur.
    #[arg(long)]
    strict: bool,

    /// Write the scanned declaration model as JSON instead of the report.
    #[arg(long)]
    dump_model: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DialectArg {
    Cxx,
    Java,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum UndefinedArg {
    Fail,
    Skip,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match try_main(args) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn try_main(args: Args) -> Result<u8, Error> {
    let gate = GateConfig {
        min_ctf: parse_threshold(args.gate_ctf.as_deref())?,
        min_mtf: parse_threshold(args.gate_mtf.as_deref())?,
        min_reuse_ratio: parse_threshold(args.gate_u.as_deref())?,
        undefined_policy: match args.undefined {
            Some(UndefinedArg::Skip) => UndefinedPolicy::Skip,
            _ => UndefinedPolicy::Fail,
        },
    };
    if args.undefined.is_some() && !gate.any_threshold_set() {
        return Err(Error::InvalidConfig(
            "--undefined has no effect without a --gate-* threshold".into(),
        ));
    }
    if gate.min_reuse_ratio.is_some() && args.manifest.is_none() {
        return Err(Error::InvalidConfig("--gate-u requires --manifest".into()));
    }

    let config = RunConfig {
        roots: args.roots,
        dialect_override: args.dialect.map(|d| match d {
            DialectArg::Cxx => Dialect::CxxTemplates,
            DialectArg::Java => Dialect::JavaGenerics,
        }),
        include: args.include,
        exclude: args.exclude,
        manifest_path: args.manifest,
        rules_path: args.rules,
        output_format: match args.format {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Table => OutputFormat::Table,
        },
        gate,
        strict: args.strict,
        dump_model: args.dump_model,
    };

    let outcome = run(&config)?;
    for diagnostic in &outcome.diagnostics {
        eprintln!("{diagnostic}");
    }
    if let Some(gate_result) = &outcome.gate_result {
        for violation in &gate_result.violations {
            eprintln!("gate violation: {violation}");
        }
    }
    if outcome.exit_code == 3 {
        eprintln!("{}", Error::StrictParse { count: outcome.parse_error_count });
    }
    match &args.out {
        Some(path) => fs::write(path, &outcome.rendered)
            .map_err(|source| Error::Io { path: path.clone(), source })?,
        None => io::stdout()
            .write_all(&outcome.rendered)
            .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source })?,
    }
    Ok(outcome.exit_code as u8)
}

fn parse_threshold(input: Option<&str>) -> Result<Option<Ratio>, Error> {
    let Some(input) = input else { return Ok(None) };
    let ratio = Ratio::parse(input).map_err(|err| Error::InvalidThreshold {
        input: err.input,
        reason: err.reason.to_string(),
    })?;
    Ok(Some(ratio))
}
