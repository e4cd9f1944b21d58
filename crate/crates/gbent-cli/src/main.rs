use std::io::{self, Write};
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand};
use gbent_cli::{
    verify, AnalyzeReport, ClassificationReport, CliError, DecompositionReport, FunctionRecord,
};
use gbent_core::{
    bent_functions, bent_functions_in_range, compose, exhaustive_regular, BooleanFunction,
    DecompositionSystem, CONVENTION,
};

/// Exact-arithmetic toolkit for bent Boolean functions and regular
/// generalized bent functions with values modulo a power of two.
#[derive(Parser)]
#[command(name = "gbent", version, about)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Print the value-table convention and exit.
    #[arg(long)]
    convention: bool,

    /// Worker threads for the enumeration subcommands.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one function: spectrum, bentness, regularity, duality.
    Analyze {
        /// Modulus of the value table (a power of two).
        #[arg(short = 'q', long = "modulus", default_value_t = 4)]
        q: u32,
        /// Value table: a digit string such as 2101, or separated integers.
        table: String,
    },
    /// Split a regular function into its Boolean component truth tables.
    Decompose {
        #[arg(short = 'q', long = "modulus", default_value_t = 4)]
        q: u32,
        table: String,
    },
    /// Build a generalized function from q/2 Boolean truth tables.
    Compose {
        #[arg(short = 'q', long = "modulus", default_value_t = 4)]
        q: u32,
        /// 0/1 truth tables, one per component.
        tables: Vec<String>,
    },
    /// List every bent Boolean function on n variables, one per line.
    EnumerateBent {
        #[arg(short = 'n', long = "vars")]
        n: usize,
    },
    /// List every regular generalized bent function, one per line.
    EnumerateRegular {
        #[arg(short = 'q', long = "modulus", default_value_t = 4)]
        q: u32,
        #[arg(short = 'n', long = "vars")]
        n: usize,
    },
    /// Partition the quaternary regular bent functions into equivalence
    /// classes under the restricted extended-affine group.
    Classify {
        #[arg(short = 'q', long = "modulus", default_value_t = 4)]
        q: u32,
        #[arg(short = 'n', long = "vars")]
        n: usize,
    },
    /// Run the built-in verification suite and report each criterion.
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.convention {
        println!("{CONVENTION}");
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    match run(command, cli.json, cli.threads.max(1)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command, json: bool, threads: usize) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match command {
        Command::Analyze { q, table } => {
            let record = FunctionRecord::parse_table(q, &table)?;
            let report = AnalyzeReport::build(&record.to_function()?);
            if json {
                emit(
                    &mut out,
                    &serde_json::to_string(&report).expect("serializable"),
                )?;
            } else {
                write_all(&mut out, report.human().as_bytes())?;
            }
        }
        Command::Decompose { q, table } => {
            let record = FunctionRecord::parse_table(q, &table)?;
            let report = DecompositionReport::build(&record.to_function()?)?;
            if json {
                emit(
                    &mut out,
                    &serde_json::to_string(&report).expect("serializable"),
                )?;
            } else {
                for component in &report.components {
                    emit(&mut out, component)?;
                }
            }
        }
        Command::Compose { q, tables } => {
            if q < 2 || !q.is_power_of_two() {
                return Err(CliError::usage(format!(
                    "modulus {q} is not a power of two of at least 2"
                )));
            }
            let m = q.trailing_zeros();
            let expected = 1usize << (m - 1);
            if tables.len() != expected {
                return Err(CliError::usage(format!(
                    "modulus {q} needs exactly {expected} component tables, got {}",
                    tables.len()
                )));
            }
            let components = tables
                .iter()
                .map(|t| BooleanFunction::from_table_str(t).map_err(CliError::Core))
                .collect::<Result<Vec<BooleanFunction>, CliError>>()?;
            let f = compose(&DecompositionSystem::new(m, components)?)?;
            let record = FunctionRecord::from_function(&f);
            if json {
                emit(
                    &mut out,
                    &serde_json::to_string(&record).expect("serializable"),
                )?;
            } else {
                emit(&mut out, &record.compact())?;
            }
        }
        Command::EnumerateBent { n } => enumerate_bent(&mut out, n, json, threads)?,
        Command::EnumerateRegular { q, n } => enumerate_regular(&mut out, q, n, json, threads)?,
        Command::Classify { q, n } => {
            if q != 4 {
                return Err(CliError::usage(format!(
                    "classification is implemented for modulus 4 only, got {q}"
                )));
            }
            let report = ClassificationReport::build(n)?;
            if json {
                emit(
                    &mut out,
                    &serde_json::to_string(&report).expect("serializable"),
                )?;
            } else {
                write_all(&mut out, report.human().as_bytes())?;
            }
        }
        Command::Verify => {
            let outcomes = verify::run_all();
            if json {
                emit(
                    &mut out,
                    &serde_json::to_string(&outcomes).expect("serializable"),
                )?;
            } else {
                for outcome in &outcomes {
                    emit(&mut out, &outcome.line())?;
                }
                let passed = outcomes.iter().filter(|o| o.passed).count();
                emit(
                    &mut out,
                    &format!("{passed}/{} criteria passed", outcomes.len()),
                )?;
            }
            out.flush().map_err(io_error)?;
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    out.flush().map_err(io_error)?;
    Ok(ExitCode::SUCCESS)
}

fn enumerate_bent(
    out: &mut impl Write,
    n: usize,
    json: bool,
    threads: usize,
) -> Result<(), CliError> {
    // Validates n before any thread spawns.
    let _ = bent_functions(n)?;
    let total = 1u64 << (1usize << n);
    let print = |out: &mut dyn Write, b: &BooleanFunction| -> Result<(), CliError> {
        if json {
            let record = FunctionRecord {
                q: 2,
                n: b.n(),
                values: (0..b.len()).map(|j| u8::from(b.value(j))).collect(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&record).expect("serializable")
            )
        } else {
            writeln!(out, "{}", b.table_string())
        }
        .map_err(io_error)
    };
    if threads == 1 {
        for b in bent_functions(n)? {
            print(out, &b)?;
        }
        return Ok(());
    }
    let chunk = total.div_ceil(threads as u64);
    let batches: Vec<Vec<BooleanFunction>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let start = chunk * t as u64;
                let end = total.min(start + chunk);
                scope.spawn(move || {
                    bent_functions_in_range(n, start, end).map(Iterator::collect::<Vec<_>>)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration workers do not panic"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    for batch in &batches {
        for b in batch {
            print(out, b)?;
        }
    }
    Ok(())
}

fn enumerate_regular(
    out: &mut impl Write,
    q: u32,
    n: usize,
    json: bool,
    threads: usize,
) -> Result<(), CliError> {
    if q < 2 || !q.is_power_of_two() {
        return Err(CliError::usage(format!(
            "modulus {q} is not a power of two of at least 2"
        )));
    }
    let m = q.trailing_zeros();
    let print = |out: &mut dyn Write, record: &FunctionRecord| -> Result<(), CliError> {
        if json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(record).expect("serializable")
            )
        } else {
            writeln!(out, "{}", record.compact())
        }
        .map_err(io_error)
    };
    if q != 4 {
        // Exhaustive scan; the library's guard bounds the search space.
        for f in exhaustive_regular(n, m)? {
            print(out, &FunctionRecord::from_function(&f))?;
        }
        return Ok(());
    }
    // q = 4: stream compositions of ordered bent pairs instead of scanning
    // the q^(2^n) candidate space.
    let bents: Vec<BooleanFunction> = bent_functions(n)?.collect();
    let pairs = bents.len() * bents.len();
    let compose_pair = |p: usize| -> FunctionRecord {
        let system = DecompositionSystem::new(
            2,
            vec![
                bents[p / bents.len()].clone(),
                bents[p % bents.len()].clone(),
            ],
        )
        .expect("pairs have matching shapes");
        let f = compose(&system).expect("bent pairs compose at q = 4");
        FunctionRecord::from_function(&f)
    };
    if threads == 1 {
        for p in 0..pairs {
            print(out, &compose_pair(p))?;
        }
        return Ok(());
    }
    let chunk = pairs.div_ceil(threads);
    let batches: Vec<Vec<FunctionRecord>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let start = chunk * t;
                let end = pairs.min(start + chunk);
                let compose_pair = &compose_pair;
                scope.spawn(move || (start..end).map(compose_pair).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration workers do not panic"))
            .collect()
    });
    for batch in &batches {
        for record in batch {
            print(out, record)?;
        }
    }
    Ok(())
}

fn emit(out: &mut impl Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(io_error)
}

fn write_all(out: &mut impl Write, bytes: &[u8]) -> Result<(), CliError> {
    out.write_all(bytes).map_err(io_error)
}

fn io_error(e: io::Error) -> CliError {
    if e.kind() == io::ErrorKind::BrokenPipe {
        // Downstream closed the pipe (e.g. `| head`); treated as done.
        std::process::exit(0);
    }
    CliError::usage(format!("io error: {e}"))
}
