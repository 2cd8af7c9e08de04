//! `hemilat`: validate, classify and explore finite hemiimplicative
//! semilattices given as JSON operation tables.
//!
//! Exit status: 0 on success, 1 when the input violates a law (a witness is
//! printed as JSON), 2 on usage errors and malformed input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hemilat::congruence::{congruence_lattice, enumerate_filters, is_congruent_filter, theta_of_filter};
use hemilat::dot::{congruence_lattice_dot, hasse_dot};
use hemilat::format::{self, semilattice_to_json, to_json, FormatError, Parsed};
use hemilat::search::{
    count_hemi_implications, enumerate_hemi_implications, enumerate_semilattices, find_product_escape,
    find_variety_separators, find_violation, kind_members, EnumerationBound, Witness, DEFAULT_FACTOR_SIZE,
};
use hemilat::symmetry::{check_roundtrip_h4, check_roundtrip_s, SymmetricAlgebra};
use hemilat::{
    build_implication, classify, congruent_filter_generated, fixtures, principal_congruence, symmetrize, Elem,
    FiniteSemilattice, HemiAlgebra, ImplicationKind,
};
use serde_json::{json, Value};
use thiserror::Error;

/// Hard ceiling when HEMILAT_MAX_SIZE is unset.
const DEFAULT_SIZE_CAP: usize = 7;
/// Refuse to stream more algebras than this from `enumerate --algebras`.
const MAX_STREAM: u128 = 10_000_000;

#[derive(Parser)]
#[command(name = "hemilat", version, about = "Finite hemiimplicative semilattices")]
struct Cli {
    #[command(flatten)]
    io: IoArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input JSON file, `-` for stdin.
    #[arg(long = "in", global = true, default_value = "-", value_name = "FILE")]
    input: String,
    /// Write the JSON result here instead of stdout (a directory for
    /// `enumerate`).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Also write a Graphviz diagram to this file (`-` for stdout).
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<String>,
    /// Worker threads for searches and sweeps.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the laws of a semilattice or algebra.
    Validate,
    /// Report which equations and conditions an algebra satisfies.
    Classify,
    /// Equip a semilattice with one of the six canonical implications.
    Build {
        #[arg(long)]
        kind: ImplicationKind,
    },
    /// Replace `→` by `a ↔ b = (a → b) ∧ (b → a)`.
    Symmetrize,
    /// Check the round trips through `↔` and `a ⇒ b = a ∼ (a ∧ b)`.
    Roundtrip,
    /// List filters, marking the congruent ones.
    Filters,
    /// The congruence lattice, one congruence per congruent filter.
    Congruences,
    /// The congruence generated by one pair.
    Principal {
        /// Two elements, by label or index, e.g. `x,1`.
        #[arg(long)]
        pair: String,
    },
    /// Hunt for the first small model violating a property.
    Search {
        /// A classification flag (h4, h5, symmetric, condition_s,
        /// implicative, es_member), `separators`, or `product-escape`.
        #[arg(long)]
        property: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Restrict to one construction; required for `product-escape`.
        #[arg(long)]
        kind: Option<ImplicationKind>,
    },
    /// Enumerate semilattices (or algebras) up to a size.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        /// Every hemiimplication on each semilattice, not just the order.
        #[arg(long, conflicts_with = "kind")]
        algebras: bool,
        /// Equip each semilattice with this construction.
        #[arg(long)]
        kind: Option<ImplicationKind>,
        /// Keep every natural labeling instead of one per isomorphism class.
        #[arg(long)]
        all_labelings: bool,
    },
    /// Print a named algebra from the built-in corpus, or list the names.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{message}")]
    Invalid { message: String, witness: Option<Vec<Elem>> },
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid { .. } => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        if e.is_validation() {
            CliError::Invalid { message: e.to_string(), witness: e.witness() }
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text)?,
        _ => {
            let mut out = io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                // A closed pipe downstream is not our failure.
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
    }
    Ok(())
}

fn line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn size_cap() -> Result<usize> {
    match std::env::var("HEMILAT_MAX_SIZE") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::Usage(format!("HEMILAT_MAX_SIZE must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn bound(max_size: usize, modulo_isomorphism: bool) -> Result<EnumerationBound> {
    let cap = size_cap()?;
    if max_size == 0 {
        return Err(CliError::Usage("--max-size must be at least 1".into()));
    }
    if max_size > cap {
        return Err(CliError::Usage(format!("--max-size {max_size} exceeds the cap of {cap} (HEMILAT_MAX_SIZE)")));
    }
    Ok(EnumerationBound::new(max_size, modulo_isomorphism))
}

/// Resolves `a,b`. Labels may themselves contain commas (product labels
/// do), so every split point is tried and exactly one must resolve.
fn parse_pair(s: &FiniteSemilattice, text: &str) -> Result<(Elem, Elem)> {
    let found: Vec<(Elem, Elem)> = text
        .match_indices(',')
        .filter_map(|(i, _)| Some((s.resolve(text[..i].trim())?, s.resolve(text[i + 1..].trim())?)))
        .collect();
    match found.as_slice() {
        [p] => Ok(*p),
        [] => Err(CliError::Usage(format!("--pair `{text}` does not name two elements"))),
        _ => Err(CliError::Usage(format!("--pair `{text}` is ambiguous"))),
    }
}

struct Ctx {
    io: IoArgs,
}

impl Ctx {
    fn parsed(&self) -> Result<Parsed> {
        Ok(format::parse(&read_input(&self.io.input)?)?)
    }

    fn algebra(&self) -> Result<HemiAlgebra> {
        Ok(self.parsed()?.into_algebra()?)
    }

    fn emit(&self, v: &Value) -> Result<()> {
        write_text(self.io.out.as_deref(), &line(v))
    }

    fn emit_dot(&self, dot: impl FnOnce() -> String) -> Result<()> {
        if let Some(path) = &self.io.dot {
            write_text(Some(Path::new(path)), &dot())?;
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(jobs) = cli.io.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ctx = Ctx { io: cli.io };
    match cli.command {
        Command::Validate => validate(&ctx),
        Command::Classify => {
            let a = ctx.algebra()?;
            ctx.emit(&serde_json::to_value(classify(&a)).expect("report serializes"))?;
            ctx.emit_dot(|| hasse_dot(a.base()))
        }
        Command::Build { kind } => {
            let parsed = ctx.parsed()?;
            let s = parsed.semilattice();
            let a =
                build_implication(s, kind).map_err(|e| CliError::Invalid { message: e.to_string(), witness: None })?;
            ctx.emit(&to_json(&a))?;
            ctx.emit_dot(|| hasse_dot(s))
        }
        Command::Symmetrize => {
            let a = ctx.algebra()?;
            ctx.emit(&to_json(symmetrize(&a).algebra()))
        }
        Command::Roundtrip => roundtrip(&ctx),
        Command::Filters => filters(&ctx),
        Command::Congruences => {
            let a = ctx.algebra()?;
            let lattice = congruence_lattice(&a);
            let entries: Vec<Value> =
                lattice.iter().map(|(f, theta)| json!({"filter": f.set(), "blocks": theta.blocks()})).collect();
            ctx.emit(&json!({"count": entries.len(), "congruences": entries}))?;
            ctx.emit_dot(|| congruence_lattice_dot(a.base(), &lattice))
        }
        Command::Principal { pair } => {
            let a = ctx.algebra()?;
            let (x, y) = parse_pair(a.base(), &pair)?;
            let filter = congruent_filter_generated(&a, a.rla(x, y));
            let theta = principal_congruence(&a, x, y);
            ctx.emit(&json!({
                "pair": [x, y],
                "filter": filter.set(),
                "blocks": theta.blocks(),
            }))
        }
        Command::Search { property, max_size, kind } => search(&ctx, &property, max_size, kind),
        Command::Enumerate { max_size, algebras, kind, all_labelings } => {
            enumerate(&ctx, bound(max_size, !all_labelings)?, algebras, kind)
        }
        Command::Fixtures { name } => match name {
            None => ctx.emit(&json!(fixtures::names())),
            Some(n) => {
                let a = fixtures::get(&n).ok_or_else(|| CliError::Usage(format!("no fixture named `{n}`")))?;
                ctx.emit(&to_json(&a))?;
                ctx.emit_dot(|| hasse_dot(a.base()))
            }
        },
    }
}

fn validate(ctx: &Ctx) -> Result<()> {
    let parsed = ctx.parsed()?;
    let (what, s) = match &parsed {
        Parsed::Semilattice(s) => ("semilattice", s),
        Parsed::Algebra(a) => ("algebra", a.base()),
    };
    ctx.emit(&json!({"valid": true, "kind": what, "size": s.size(), "top": s.top(), "bottom": s.bottom()}))?;
    ctx.emit_dot(|| hasse_dot(s))
}

fn roundtrip(ctx: &Ctx) -> Result<()> {
    let a = ctx.algebra()?;
    let h4 = check_roundtrip_h4(&a);
    let s = match SymmetricAlgebra::new(a.clone()) {
        Ok(sym) => serde_json::to_value(check_roundtrip_s(&sym)).expect("check serializes"),
        Err(_) => Value::Null,
    };
    ctx.emit(&json!({
        "roundtrip_h4": h4.holds(),
        "h4": h4,
        "roundtrip_s": s.get("witness").map(Value::is_null),
        "s": s,
    }))
}

fn filters(ctx: &Ctx) -> Result<()> {
    let parsed = ctx.parsed()?;
    let s = parsed.semilattice().clone();
    let alg = match parsed {
        Parsed::Algebra(a) => Some(a),
        Parsed::Semilattice(_) => None,
    };
    let entries: Vec<Value> = enumerate_filters(&s)
        .into_iter()
        .map(|f| {
            let mut v = json!({"filter": f.set(), "generator": f.generator(&s)});
            if let Some(a) = &alg {
                let check = is_congruent_filter(a, f);
                v["congruent"] = json!(check.holds());
                if let Some(w) = check.witness {
                    v["t_witness"] = json!(w);
                    v["t_value"] = json!(hemilat::t_term(a, w[0], w[1], w[2]));
                } else {
                    v["blocks"] = json!(theta_of_filter(a, f).expect("checked congruent").blocks());
                }
            }
            v
        })
        .collect();
    ctx.emit(&json!({"count": entries.len(), "filters": entries}))?;
    ctx.emit_dot(|| hasse_dot(&s))
}

fn witness_value(w: &Witness) -> Value {
    let mut v = serde_json::to_value(w).expect("witness serializes");
    v["found"] = json!(true);
    v
}

fn not_found(property: &str, b: EnumerationBound) -> Value {
    json!({"property": property, "found": false, "max_size": b.max_size()})
}

fn search(ctx: &Ctx, property: &str, max_size: Option<usize>, kind: Option<ImplicationKind>) -> Result<()> {
    const FLAGS: [&str; 6] = ["h4", "h5", "symmetric", "condition_s", "implicative", "es_member"];
    let result = match property {
        "product-escape" => {
            let kind = kind.ok_or_else(|| CliError::Usage("product-escape needs --kind".into()))?;
            let b = bound(max_size.unwrap_or(DEFAULT_FACTOR_SIZE), true)?;
            find_product_escape(kind, b).map_or_else(|| not_found(property, b), |w| witness_value(&w))
        }
        "separators" => {
            let b = bound(max_size.unwrap_or(EnumerationBound::default().max_size()), true)?;
            let found: Vec<Value> = find_variety_separators(b).iter().map(witness_value).collect();
            json!({"property": property, "max_size": b.max_size(), "witnesses": found})
        }
        flag if FLAGS.contains(&flag) => {
            let b = bound(max_size.unwrap_or(EnumerationBound::default().max_size()), true)?;
            let w = match kind {
                None => find_violation(flag, b),
                Some(k) => kind_members(k, b).into_iter().find_map(|a| {
                    let tuple = classify(&a).flag(flag)?.witness.clone()?;
                    Some(Witness { property: flag.to_owned(), tuple, algebra: a, factors: Vec::new() })
                }),
            };
            w.map_or_else(|| not_found(property, b), |w| witness_value(&w))
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown property `{other}`; expected one of {}, separators, product-escape",
                FLAGS.join(", ")
            )))
        }
    };
    ctx.emit(&result)
}

fn enumerate(ctx: &Ctx, b: EnumerationBound, algebras: bool, kind: Option<ImplicationKind>) -> Result<()> {
    let semilattices: Vec<FiniteSemilattice> = enumerate_semilattices(b).collect();
    if algebras {
        let total: u128 = semilattices.iter().map(count_hemi_implications).sum();
        if total > MAX_STREAM {
            return Err(CliError::Usage(format!(
                "{total} algebras up to size {}; refusing to stream more than {MAX_STREAM}",
                b.max_size()
            )));
        }
    }
    let docs = semilattices.iter().flat_map(|s| -> Box<dyn Iterator<Item = Value>> {
        match (algebras, kind) {
            (true, _) => Box::new(enumerate_hemi_implications(s).map(|a| to_json(&a))),
            (false, Some(k)) => Box::new(build_implication(s, k).ok().map(|a| to_json(&a)).into_iter()),
            (false, None) => Box::new(std::iter::once(semilattice_to_json(s))),
        }
    });
    match &ctx.io.out {
        Some(dir) if dir != Path::new("-") => {
            fs::create_dir_all(dir)?;
            let mut written = 0usize;
            for (i, doc) in docs.enumerate() {
                let n = doc["size"].as_u64().expect("documents carry a size");
                fs::write(dir.join(format!("size{n}-{i:06}.json")), line(&doc))?;
                written += 1;
            }
            write_text(None, &line(&json!({"written": written, "dir": dir})))
        }
        _ => {
            let mut out = io::BufWriter::new(io::stdout().lock());
            for doc in docs {
                writeln!(out, "{doc}")?;
            }
            out.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let CliError::Invalid { message, witness } = &e {
                let v = json!({"valid": false, "error": message, "witness": witness});
                let _ = write_text(None, &line(&v));
            }
            eprintln!("hemilat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
