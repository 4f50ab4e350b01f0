//! Command-line front end for finite binary operations.
//!
//! Subcommands expose parsing and validation, composition and inversion,
//! invertibility and distributivity checks, closure generation and
//! identification, exhaustive enumeration and censuses, and the binary
//! representation of a finite group.
//!
//! Exit codes: 0 success / property holds, 1 property fails (a witness is
//! printed on stdout), 2 usage or input error, 3 a guard was exceeded.
//! `--json` switches stdout to a single machine-readable object with an
//! `ok` key and optional `result`, `witness` and `counts` keys. The
//! environment variable `BINOP_GUARD_MAX` (a positive integer) raises or
//! lowers the closure, enumeration and verification guards.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use binop_core::{
    closure_with_guard, criterion_census_with_guard, enumerate_all_ops_with_guard,
    enumerate_invertible_with_guard, identify_group, invertible_op_count, parse_binop,
    parse_document, parse_group, serialize_binop, slice_relation_witness, table_group,
    verify_representation_with_guard, BinaryOpTable, DistributiveFailure, DocumentPayload, Error,
    FiniteGroup, RepresentationReport, DEFAULT_CLOSURE_GUARD, DEFAULT_ENUMERATION_GUARD,
    DEFAULT_INVERTIBLE_GUARD, DEFAULT_REPRESENTATION_GUARD,
};

#[derive(Parser)]
#[command(name = "binop", version, about = "Inspect and verify finite binary operations")]
struct Cli {
    /// Emit a single machine-readable JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and report its kind and invariants.
    Validate { file: PathBuf },
    /// Compose two operations: (f ∘ g)(t, x) = f(t, g(t, x)).
    Compose {
        f: PathBuf,
        g: PathBuf,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Invert an operation slice-wise.
    Invert {
        f: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the slices (rows) of an operation.
    Slices { f: PathBuf },
    /// Check that every slice of an operation is a bijection.
    CheckInvertible { f: PathBuf },
    /// Check the distributivity slice relation on all ordered pairs of the
    /// given operations.
    CheckDistributive {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also require the given set to be a distributive subgroup.
        #[arg(long)]
        subgroup: bool,
    },
    /// Generate the subgroup closure of the given invertible operations.
    Closure {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also identify the closure's isomorphism class.
        #[arg(long)]
        identify: bool,
    },
    /// Print the number of invertible operations on n points, (n!)^n.
    Order {
        #[arg(short)]
        n: u32,
    },
    /// Count tables at size n and compare against the (n!)^n formula.
    Census {
        #[arg(short)]
        n: usize,
        /// Also count two-sided invertibles by exhaustive search (n <= 2).
        #[arg(long)]
        exhaustive_inverse: bool,
    },
    /// Stream tables at size n, separated by blank lines.
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Only tables whose rows are permutations.
        #[arg(long)]
        invertible: bool,
        /// Stop after this many tables.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Emit the binary representation tables of a group.
    Represent {
        groupfile: PathBuf,
        /// Also verify the representation exhaustively and print a report.
        #[arg(long)]
        verify: bool,
    },
    /// Identify the group generated by the given operations.
    Identify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// How a run ends, before being folded into an exit code.
enum Outcome {
    /// Exit 0; carries the JSON result/counts for `--json` mode.
    Pass { result: Value, counts: Option<Value> },
    /// Exit 1; the witness has a JSON form and was printed as text.
    Fail { result: Value, witness: Value },
}

enum Failure {
    /// Exit 2: bad usage, unreadable or invalid input.
    Input(String),
    /// Exit 3: a size guard was exceeded.
    Guard(String),
}

impl Failure {
    fn from_error(err: &Error) -> Failure {
        match err {
            Error::OrderGuardExceeded { .. }
            | Error::ClosureGuardExceeded { .. }
            | Error::SearchSpaceTooLarge { .. } => Failure::Guard(err.to_string()),
            _ => Failure::Input(err.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure::from_error(&err)
    }
}

impl From<binop_core::ParseError> for Failure {
    fn from(err: binop_core::ParseError) -> Failure {
        match err {
            binop_core::ParseError::Invalid(ref inner) => match Failure::from_error(inner) {
                Failure::Guard(msg) => Failure::Guard(msg),
                Failure::Input(_) => Failure::Input(err.to_string()),
            },
            _ => Failure::Input(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(2);
        }
    };
    let json = cli.json;
    let guard = match guard_override() {
        Ok(guard) => guard,
        Err(msg) => return finish_failure(json, Failure::Input(msg)),
    };
    match run(cli.command, json, guard) {
        Ok(Outcome::Pass { result, counts }) => {
            if json {
                let mut object = json!({ "ok": true, "result": result });
                if let Some(counts) = counts {
                    object["counts"] = counts;
                }
                println!("{object}");
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fail { result, witness }) => {
            if json {
                println!("{}", json!({ "ok": false, "result": result, "witness": witness }));
            }
            ExitCode::from(1)
        }
        Err(failure) => finish_failure(json, failure),
    }
}

fn finish_failure(json: bool, failure: Failure) -> ExitCode {
    let (message, code) = match failure {
        Failure::Input(msg) => (msg, 2),
        Failure::Guard(msg) => (msg, 3),
    };
    eprintln!("error: {message}");
    if json {
        println!("{}", json!({ "ok": false, "result": { "error": message } }));
    }
    ExitCode::from(code)
}

/// Reads `BINOP_GUARD_MAX`; unset means per-operation defaults apply.
fn guard_override() -> Result<Option<u64>, String> {
    match std::env::var("BINOP_GUARD_MAX") {
        Ok(raw) => match raw.parse::<u64>() {
            Ok(value) if value > 0 => Ok(Some(value)),
            _ => Err(format!(
                "BINOP_GUARD_MAX must be a positive integer, got {raw:?}"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(err) => Err(format!("BINOP_GUARD_MAX: {err}")),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|err| Failure::Input(format!("{}: {err}", path.display())))
}

fn load_binop(path: &Path) -> Result<BinaryOpTable, Failure> {
    let text = read_file(path)?;
    parse_binop(&text).map_err(|err| match err.into() {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        guard => guard,
    })
}

fn load_group(path: &Path) -> Result<FiniteGroup, Failure> {
    let text = read_file(path)?;
    parse_group(&text).map_err(|err| match err.into() {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        guard => guard,
    })
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn serialize(op: &BinaryOpTable) -> String {
    serialize_binop(op).expect("labels came from the parser or defaults")
}

fn write_out(out: Option<&Path>, text: &str, json: bool) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| Failure::Input(format!("{}: {err}", path.display()))),
        None => {
            if !json {
                print!("{text}");
            }
            Ok(())
        }
    }
}

fn run(command: Command, json: bool, guard: Option<u64>) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { file } => run_validate(&file, json),
        Command::Compose { f, g, out } => {
            let (f, g) = (load_binop(&f)?, load_binop(&g)?);
            let composed = f.compose(&g)?;
            let text = serialize(&composed);
            write_out(out.as_deref(), &text, json)?;
            Ok(Outcome::Pass {
                result: Value::String(text),
                counts: None,
            })
        }
        Command::Invert { f, out } => {
            let op = load_binop(&f)?;
            match op.invert() {
                Ok(inverse) => {
                    let text = serialize(&inverse);
                    write_out(out.as_deref(), &text, json)?;
                    Ok(Outcome::Pass {
                        result: Value::String(text),
                        counts: None,
                    })
                }
                Err(Error::NotInvertible { t }) => {
                    let label = op.points().label(t).to_string();
                    if !json {
                        println!("not invertible");
                        println!("witness: slice t={label} is not a bijection");
                    }
                    Ok(Outcome::Fail {
                        result: Value::String("not invertible".into()),
                        witness: json!({ "t": label }),
                    })
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::Slices { f } => {
            let op = load_binop(&f)?;
            let lines: Vec<String> = (0..op.n())
                .map(|t| {
                    let images: Vec<&str> = op.rows()[t]
                        .iter()
                        .map(|&v| op.points().label(v))
                        .collect();
                    format!("{}: {}", op.points().label(t), images.join(" "))
                })
                .collect();
            if !json {
                for line in &lines {
                    println!("{line}");
                }
            }
            Ok(Outcome::Pass {
                result: json!(lines),
                counts: None,
            })
        }
        Command::CheckInvertible { f } => {
            let op = load_binop(&f)?;
            match op.invert() {
                Ok(_) => {
                    if !json {
                        println!("invertible");
                    }
                    Ok(Outcome::Pass {
                        result: json!(true),
                        counts: None,
                    })
                }
                Err(Error::NotInvertible { t }) => {
                    let label = op.points().label(t).to_string();
                    let images: Vec<String> = op.rows()[t]
                        .iter()
                        .map(|&v| op.points().label(v).to_string())
                        .collect();
                    if !json {
                        println!("not invertible");
                        println!("witness: slice t={label} images=[{}]", images.join(" "));
                    }
                    Ok(Outcome::Fail {
                        result: json!(false),
                        witness: json!({ "t": label, "images": images }),
                    })
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::CheckDistributive { files, subgroup } => {
            run_check_distributive(&files, subgroup, json)
        }
        Command::Closure { files, identify } => run_closure(&files, identify, json, guard),
        Command::Order { n } => {
            let count = invertible_op_count(n as usize);
            if !json {
                println!("{count}");
            }
            Ok(Outcome::Pass {
                result: Value::String(count.to_string()),
                counts: None,
            })
        }
        Command::Census {
            n,
            exhaustive_inverse,
        } => {
            let census = criterion_census_with_guard(
                n,
                exhaustive_inverse,
                guard.unwrap_or(DEFAULT_ENUMERATION_GUARD),
            )?;
            let mut counts = json!({
                "total_ops": census.total_ops.to_string(),
                "row_permutation_ops": census.row_permutation_ops.to_string(),
                "formula_value": census.formula_value.to_string(),
            });
            if !json {
                println!("n: {n}");
                println!("total_ops: {}", census.total_ops);
                println!("row_permutation_ops: {}", census.row_permutation_ops);
                if let Some(two_sided) = &census.two_sided_invertible_ops {
                    println!("two_sided_invertible_ops: {two_sided}");
                }
                println!("formula_value: {}", census.formula_value);
            }
            if let Some(two_sided) = &census.two_sided_invertible_ops {
                counts["two_sided_invertible_ops"] = Value::String(two_sided.to_string());
            }
            Ok(Outcome::Pass {
                result: Value::Null,
                counts: Some(counts),
            })
        }
        Command::Enumerate {
            n,
            invertible,
            limit,
        } => {
            let tables: Box<dyn Iterator<Item = BinaryOpTable>> = if invertible {
                Box::new(enumerate_invertible_with_guard(
                    n,
                    limit,
                    guard.unwrap_or(DEFAULT_INVERTIBLE_GUARD),
                )?)
            } else {
                let stream =
                    enumerate_all_ops_with_guard(n, guard.unwrap_or(DEFAULT_ENUMERATION_GUARD))?;
                match limit {
                    Some(k) => Box::new(stream.take(k as usize)),
                    None => Box::new(stream),
                }
            };
            let mut emitted: u64 = 0;
            let mut collected = Vec::new();
            for table in tables {
                let text = serialize(&table);
                if json {
                    collected.push(Value::String(text));
                } else {
                    if emitted > 0 {
                        println!();
                    }
                    print!("{text}");
                }
                emitted += 1;
            }
            Ok(Outcome::Pass {
                result: json!(collected),
                counts: Some(json!({ "emitted": emitted })),
            })
        }
        Command::Represent { groupfile, verify } => run_represent(&groupfile, verify, json, guard),
        Command::Identify { files } => {
            let generators = load_same_points(&files)?;
            let elements =
                closure_with_guard(&generators, guard.unwrap_or(DEFAULT_CLOSURE_GUARD))?;
            let group = table_group(&elements)?;
            let name = identify_group(&group);
            if !json {
                println!("{name}");
            }
            Ok(Outcome::Pass {
                result: json!({ "name": name, "order": elements.len() }),
                counts: None,
            })
        }
    }
}

fn run_validate(file: &Path, json: bool) -> Result<Outcome, Failure> {
    let text = read_file(file)?;
    // Grammar-level failures are input errors; group-axiom failures are a
    // property failure of the file's table and exit 1 with the witness.
    match parse_document(&text) {
        Ok(mut doc) => {
            doc.name = Some(file_stem(file));
            match &doc.payload {
                DocumentPayload::Binop(op) => {
                    if !json {
                        println!("kind: binop");
                        println!("points: {}", op.n());
                        println!("invertible: {}", op.is_invertible());
                    }
                    Ok(Outcome::Pass {
                        result: json!({
                            "kind": "binop",
                            "name": doc.name,
                            "points": op.n(),
                            "invertible": op.is_invertible(),
                        }),
                        counts: None,
                    })
                }
                DocumentPayload::Group(group) => {
                    if !json {
                        println!("kind: group");
                        println!("order: {}", group.order());
                        println!("identity: {}", group.label(group.identity()));
                        println!("abelian: {}", group.is_abelian());
                    }
                    Ok(Outcome::Pass {
                        result: json!({
                            "kind": "group",
                            "name": doc.name,
                            "order": group.order(),
                            "identity": group.label(group.identity()),
                            "abelian": group.is_abelian(),
                        }),
                        counts: None,
                    })
                }
            }
        }
        Err(binop_core::ParseError::Invalid(err)) => {
            if !json {
                println!("invalid");
                println!("witness: {err}");
            }
            Ok(Outcome::Fail {
                result: Value::String("invalid".into()),
                witness: json!({ "error": err.to_string() }),
            })
        }
        Err(err) => Err(Failure::Input(format!("{}: {err}", file.display()))),
    }
}

fn load_same_points(files: &[PathBuf]) -> Result<Vec<BinaryOpTable>, Failure> {
    let ops = files
        .iter()
        .map(|f| load_binop(f))
        .collect::<Result<Vec<_>, _>>()?;
    for op in &ops[1..] {
        if op.points() != ops[0].points() {
            return Err(Failure::Input(Error::PointSetMismatch.to_string()));
        }
    }
    Ok(ops)
}

fn run_check_distributive(
    files: &[PathBuf],
    subgroup: bool,
    json: bool,
) -> Result<Outcome, Failure> {
    let ops = load_same_points(files)?;
    let names: Vec<String> = files.iter().map(|f| file_stem(f)).collect();
    for (op, name) in ops.iter().zip(&names) {
        if let Err(Error::NotInvertible { t }) = op.invert() {
            return Err(Failure::Input(format!(
                "{name}: slice t={} is not a bijection",
                op.points().label(t)
            )));
        }
    }
    // All ordered pairs of the given operations, in argument order.
    for (i, g) in ops.iter().enumerate() {
        for (j, h) in ops.iter().enumerate() {
            if let Some((t, t_prime)) = slice_relation_witness(g, h)? {
                let (tl, tpl) = (g.points().label(t), g.points().label(t_prime));
                if !json {
                    println!("not distributive");
                    println!(
                        "witness: pair=({},{}) t={tl} t'={tpl}",
                        names[i], names[j]
                    );
                }
                return Ok(Outcome::Fail {
                    result: json!(false),
                    witness: json!({
                        "pair": [names[i], names[j]],
                        "t": tl,
                        "t_prime": tpl,
                    }),
                });
            }
        }
    }
    if subgroup {
        if let Some(failure) = binop_core::is_distributive_subgroup(&ops)? {
            let witness = match &failure {
                DistributiveFailure::MissingIdentity => {
                    if !json {
                        println!("not a distributive subgroup");
                        println!("witness: the identity operation is missing from the set");
                    }
                    json!({ "missing": "identity" })
                }
                DistributiveFailure::NotClosedUnderCompose { left, right } => {
                    if !json {
                        println!("not a distributive subgroup");
                        println!("witness: composition escapes the set");
                        print!("{}", serialize(left));
                        println!();
                        print!("{}", serialize(right));
                    }
                    json!({
                        "not_closed_under": "compose",
                        "left": serialize(left),
                        "right": serialize(right),
                    })
                }
                DistributiveFailure::NotClosedUnderInvert { element } => {
                    if !json {
                        println!("not a distributive subgroup");
                        println!("witness: inverse escapes the set");
                        print!("{}", serialize(element));
                    }
                    json!({ "not_closed_under": "invert", "element": serialize(element) })
                }
                DistributiveFailure::NonDistributivePair { g, h, triple } => {
                    let points = g.points();
                    let (x, x1, x2) = *triple;
                    if !json {
                        println!("not a distributive subgroup");
                        println!(
                            "witness: triple x={} x'={} x''={} for the pair",
                            points.label(x),
                            points.label(x1),
                            points.label(x2)
                        );
                        print!("{}", serialize(g));
                        println!();
                        print!("{}", serialize(h));
                    }
                    json!({
                        "pair": [serialize(g), serialize(h)],
                        "triple": [points.label(x), points.label(x1), points.label(x2)],
                    })
                }
            };
            return Ok(Outcome::Fail {
                result: json!(false),
                witness,
            });
        }
    }
    if !json {
        if subgroup {
            println!("distributive subgroup");
        } else {
            println!("distributive");
        }
    }
    Ok(Outcome::Pass {
        result: json!(true),
        counts: None,
    })
}

fn run_closure(
    files: &[PathBuf],
    identify: bool,
    json: bool,
    guard: Option<u64>,
) -> Result<Outcome, Failure> {
    let generators = load_same_points(files)?;
    let elements = closure_with_guard(&generators, guard.unwrap_or(DEFAULT_CLOSURE_GUARD))?;
    let mut texts = Vec::with_capacity(elements.len());
    for (i, element) in elements.iter().enumerate() {
        let text = serialize(element);
        if !json {
            if i > 0 {
                println!();
            }
            print!("{text}");
        }
        texts.push(Value::String(text));
    }
    let name = if identify {
        let group = table_group(&elements)?;
        let name = identify_group(&group);
        if !json {
            println!("# group: {name}");
        }
        Some(name)
    } else {
        None
    };
    let mut result = json!({ "elements": texts });
    if let Some(name) = name {
        result["name"] = Value::String(name);
    }
    Ok(Outcome::Pass {
        result,
        counts: Some(json!({ "order": elements.len() })),
    })
}

fn report_lines(report: &RepresentationReport) -> Vec<String> {
    vec![
        format!("group: {}", report.group_name),
        format!("injective: {}", report.injective),
        format!("homomorphism: {}", report.homomorphism),
        format!("image_is_subgroup: {}", report.image_is_subgroup),
        format!("image_distributive: {}", report.image_distributive),
        format!("image_order: {}", report.image_order),
        format!("isomorphic_to_source: {}", report.isomorphic_to_source),
    ]
}

fn run_represent(
    groupfile: &Path,
    verify: bool,
    json: bool,
    guard: Option<u64>,
) -> Result<Outcome, Failure> {
    let group = load_group(groupfile)?;
    let tables = binop_core::binary_representation(&group);
    let mut entries = Vec::with_capacity(tables.len());
    for (i, table) in tables.iter().enumerate() {
        let text = serialize(table);
        if !json {
            if i > 0 {
                println!();
            }
            println!("# element: {}", group.label(i));
            print!("{text}");
        }
        entries.push(json!({ "element": group.label(i), "table": text }));
    }
    if !verify {
        return Ok(Outcome::Pass {
            result: json!({ "tables": entries }),
            counts: None,
        });
    }
    let report = verify_representation_with_guard(
        &group,
        guard.unwrap_or(DEFAULT_REPRESENTATION_GUARD),
    )?;
    if !json {
        println!();
        for line in report_lines(&report) {
            println!("{line}");
        }
    }
    let report_json = json!({
        "group": report.group_name,
        "injective": report.injective,
        "homomorphism": report.homomorphism,
        "image_is_subgroup": report.image_is_subgroup,
        "image_distributive": report.image_distributive,
        "image_order": report.image_order,
        "isomorphic_to_source": report.isomorphic_to_source,
    });
    if report.all_hold() {
        Ok(Outcome::Pass {
            result: json!({ "tables": entries, "report": report_json }),
            counts: None,
        })
    } else {
        if !json {
            println!("witness: some representation property failed");
        }
        Ok(Outcome::Fail {
            result: json!({ "tables": entries, "report": report_json }),
            witness: report_json,
        })
    }
}
