use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sqcycle::formulas::{l_of, LValue, Route};
use sqcycle::graph::{enumerate_cycles, l_bruteforce, largest_cycles, CycleRecord};
use sqcycle::verify::{check_fixture, classify_report, classify_sweep, oeis_compare, sweep};
use sqcycle::{to_canonical_json, Error};

#[derive(Parser)]
#[command(name = "sqcycle")]
#[command(about = "Maximum cycle lengths of the squaring map x -> x^2 mod m")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Auto,
    Formula,
    Oracle,
}

#[derive(Subcommand)]
enum Commands {
    /// Compute L(m)
    L {
        m: u64,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate cycles of the squaring map mod m
    Cycles {
        m: u64,
        /// Only the cycles of maximum length (default)
        #[arg(long)]
        largest: bool,
        /// Every cycle
        #[arg(long, conflicts_with = "largest")]
        all: bool,
        /// Include the full orbit from each canonical representative
        #[arg(long)]
        elements: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check an embedded fixture table (prime-L, composite-L, prime-square-L,
    /// prime-power-L, fermat, ratio-classes, golden-cycles)
    Table {
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Group primes by the ratio class k with L(p^2) = (p-1)L(p)/k
    Classify {
        #[arg(long, default_value_t = 360)]
        limit: u64,
        /// Also check the grouped lists against the embedded fixture
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep formula-vs-oracle agreement over 1..=max
    Verify {
        #[arg(long, default_value_t = 20000)]
        max: u64,
        /// Compare against the brute-force oracle
        #[arg(long)]
        oracle: bool,
        /// Worker thread cap for the sweep
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare a b-file of L(p) values against the formula
    Oeis {
        path: PathBuf,
        /// Index the b-file assigns to the first prime 2
        #[arg(long = "offset-rule", default_value_t = 1)]
        offset_rule: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn emit_l(lv: &LValue, format: Format) {
    match format {
        Format::Text => println!("L({}) = {} (route: {})", lv.modulus, lv.value, lv.route),
        Format::Csv => {
            println!("modulus,L,route");
            println!("{},{},{}", lv.modulus, lv.value, lv.route);
        }
        Format::Json => println!("{}", to_canonical_json(lv)),
    }
}

fn emit_cycles(cycles: &[CycleRecord], format: Format) {
    match format {
        Format::Text => {
            for c in cycles {
                match &c.elements {
                    Some(e) => {
                        let joined: Vec<String> = e.iter().map(u64::to_string).collect();
                        println!(
                            "cycle: representative={} length={} elements={}",
                            c.representative,
                            c.length,
                            joined.join(",")
                        );
                    }
                    None => println!(
                        "cycle: representative={} length={}",
                        c.representative, c.length
                    ),
                }
            }
        }
        Format::Csv => {
            println!("representative,length,elements");
            for c in cycles {
                let joined = c
                    .elements
                    .as_ref()
                    .map(|e| {
                        e.iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(";")
                    })
                    .unwrap_or_default();
                println!("{},{},{}", c.representative, c.length, joined);
            }
        }
        Format::Json => println!("{}", to_canonical_json(&cycles)),
    }
}

fn emit_report(report: &sqcycle::verify::MismatchReport, format: Format) -> i32 {
    match format {
        Format::Text => {
            for mm in &report.mismatches {
                println!(
                    "MISMATCH {}: expected {}, got {}",
                    mm.input, mm.expected, mm.got
                );
            }
            println!(
                "{}: {} checked, {} mismatches -> {}",
                report.descriptor,
                report.checked,
                report.mismatches.len(),
                if report.pass { "pass" } else { "FAIL" }
            );
        }
        Format::Csv => {
            println!("input,expected,got");
            for mm in &report.mismatches {
                println!("{},{},{}", mm.input, mm.expected, mm.got);
            }
        }
        Format::Json => println!("{}", to_canonical_json(report)),
    }
    if report.pass {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Commands::L { m, route, format } => {
            let lv = match route {
                RouteArg::Auto | RouteArg::Formula => l_of(m)?,
                RouteArg::Oracle => LValue {
                    modulus: m,
                    value: l_bruteforce(m)?,
                    route: Route::BruteForce,
                },
            };
            emit_l(&lv, format);
            Ok(0)
        }
        Commands::Cycles {
            m,
            largest: _,
            all,
            elements,
            format,
        } => {
            let cycles: Vec<CycleRecord> = if all {
                let summary = enumerate_cycles(m)?;
                let m = summary.modulus;
                summary
                    .cycles
                    .into_iter()
                    .map(|c| if elements { c.with_elements(m) } else { c })
                    .collect()
            } else {
                let mut cs = largest_cycles(m)?;
                if !elements {
                    for c in &mut cs {
                        c.elements = None;
                    }
                }
                cs
            };
            emit_cycles(&cycles, format);
            Ok(0)
        }
        Commands::Table { name, format } => {
            let report = check_fixture(&name)?;
            Ok(emit_report(&report, format))
        }
        Commands::Classify {
            limit,
            check,
            format,
        } => {
            if check {
                let report = classify_report(limit)?;
                return Ok(emit_report(&report, format));
            }
            let groups = classify_sweep(limit)?;
            match format {
                Format::Text => {
                    for (k, primes) in &groups {
                        let joined: Vec<String> = primes.iter().map(u64::to_string).collect();
                        println!("k={}: {}", k, joined.join(","));
                    }
                }
                Format::Csv => {
                    println!("k,primes");
                    for (k, primes) in &groups {
                        let joined: Vec<String> = primes.iter().map(u64::to_string).collect();
                        println!("{},{}", k, joined.join(";"));
                    }
                }
                Format::Json => {
                    // string keys for a plain json object
                    let obj: std::collections::BTreeMap<String, &Vec<u64>> = groups
                        .iter()
                        .map(|(k, v)| (k.to_string(), v))
                        .collect();
                    println!("{}", to_canonical_json(&obj));
                }
            }
            Ok(0)
        }
        Commands::Verify {
            max,
            oracle,
            jobs,
            format,
        } => {
            let report = match jobs {
                Some(n) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(n)
                        .build()
                        .map_err(|e| Error::Io(e.to_string()))?;
                    pool.install(|| sweep(1, max, oracle))?
                }
                None => sweep(1, max, oracle)?,
            };
            Ok(emit_report(&report, format))
        }
        Commands::Oeis {
            path,
            offset_rule,
            format,
        } => {
            let report = oeis_compare(&path, offset_rule)?;
            Ok(emit_report(&report, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
