use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use prymcert_cli::report::{
    exit_code, instantiate_family, parse_field, render_human, render_profile, run_verify,
    EXIT_OK, EXIT_STRUCTURAL,
};
use prymcert_core::cert::wreath_type_census;
use prymcert_core::modf3::stabilizer_orbit_count;
use prymcert_core::perm::PermGroup;
use prymcert_core::prym::curve_profile;
use prymcert_core::signed::{build_wreath, sign_module_submodule_dims};

#[derive(Parser)]
#[command(
    name = "prymcert",
    about = "Certify Gal(f) = W(D_m) for odd f of degree 12k+11 and report the Prym consequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct VerifyArgs {
    /// Polynomial, e.g. "x*(x^10 - x^2 - 1)" or a coefficient list "[0,-1,...]"
    #[arg(long)]
    poly: String,
    /// Base field: "q" or "q-sqrt-minus-3"
    #[arg(long, default_value = "q-sqrt-minus-3")]
    field: String,
    /// Number of unramified primes to sample
    #[arg(long, default_value_t = 200)]
    budget: usize,
    /// Write the JSON report to this path
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full certification pipeline on one polynomial
    Verify(VerifyArgs),
    /// Print the curve/Prym numeric profile for degree n
    Profile {
        #[arg(long)]
        n: usize,
    },
    /// Print structural facts about the group W(D_m)
    Group {
        #[arg(long)]
        m: usize,
    },
    /// Instantiate a one-parameter family and verify each member
    Search {
        /// Template with a standalone integer hole "a"
        #[arg(long)]
        family: String,
        /// Inclusive range "lo..hi"
        #[arg(long)]
        range: String,
        #[arg(long, default_value = "q-sqrt-minus-3")]
        field: String,
        #[arg(long, default_value_t = 200)]
        budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Profile { n } => cmd_profile(n),
        Command::Group { m } => cmd_group(m),
        Command::Search {
            family,
            range,
            field,
            budget,
        } => cmd_search(&family, &range, &field, budget),
    };
    ExitCode::from(code as u8)
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let field = match parse_field(&args.field) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_STRUCTURAL;
        }
    };
    if args.budget == 0 {
        eprintln!("budget must be at least 1");
        return EXIT_STRUCTURAL;
    }
    match run_verify(&args.poly, field, args.budget) {
        Ok(report) => {
            print!("{}", render_human(&report));
            if let Some(path) = args.json {
                let text = match serde_json::to_string_pretty(&report) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("serialization error: {}", e);
                        return EXIT_STRUCTURAL;
                    }
                };
                if let Err(e) = std::fs::write(&path, text) {
                    eprintln!("cannot write {}: {}", path, e);
                    return EXIT_STRUCTURAL;
                }
            }
            exit_code(&report)
        }
        Err(e) => {
            eprintln!("{}", e);
            EXIT_STRUCTURAL
        }
    }
}

fn cmd_profile(n: usize) -> i32 {
    match curve_profile(n) {
        Ok(p) => {
            print!("{}", render_profile(&p));
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{}", e);
            EXIT_STRUCTURAL
        }
    }
}

const GROUP_M_CAP: usize = 15;

fn cmd_group(m: usize) -> i32 {
    if !(3..=GROUP_M_CAP).contains(&m) {
        eprintln!("m must lie in 3..={}", GROUP_M_CAP);
        return EXIT_STRUCTURAL;
    }
    if m % 6 != 5 {
        println!(
            "note: m = {} is not congruent to 5 mod 6; outside the theorem's scope",
            m
        );
    }
    let w = build_wreath(&PermGroup::symmetric(m), true);
    println!("|W(D_{})| = {}", m, w.order());
    match stabilizer_orbit_count(&w) {
        Ok(c) => println!("point-stabilizer orbit count: {}", c),
        Err(e) => println!("point-stabilizer orbit count: unavailable ({})", e),
    }
    match sign_module_submodule_dims(m) {
        Ok(dims) => println!("even-weight sign module submodule dims: {:?}", dims),
        Err(e) => println!("even-weight sign module: unavailable ({})", e),
    }
    if wreath_type_census(m).is_some() {
        // small enough for the derived-series facts too
        let derived = w.derived_subgroup();
        let index = w.order() / derived.order();
        println!("derived subgroup index: {}", index);
        println!(
            "derived subgroup perfect: {}",
            if derived.is_perfect() { "yes" } else { "no" }
        );
    } else {
        println!("derived subgroup: skipped (group too large to enumerate)");
    }
    EXIT_OK
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("range {:?} is not of the form lo..hi", text))?;
    let lo: i64 = lo.trim().parse().map_err(|_| "bad range start".to_string())?;
    let hi: i64 = hi.trim().parse().map_err(|_| "bad range end".to_string())?;
    if lo > hi {
        return Err("empty range".to_string());
    }
    Ok((lo, hi))
}

fn cmd_search(family: &str, range: &str, field: &str, budget: usize) -> i32 {
    let field = match parse_field(field) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_STRUCTURAL;
        }
    };
    let (lo, hi) = match parse_range(range) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_STRUCTURAL;
        }
    };
    // template sanity on the first instantiation: it must parse and
    // have degree 12k+11
    let probe = match instantiate_family(family, lo) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}", e);
            return EXIT_STRUCTURAL;
        }
    };
    match prymcert_core::parse::parse_poly(&probe) {
        Ok(f) => {
            let n = f.degree().unwrap_or(0);
            if n < 11 || n % 12 != 11 {
                eprintln!("instantiated degree {} is not congruent to 11 mod 12", n);
                return EXIT_STRUCTURAL;
            }
        }
        Err(e) => {
            eprintln!("template does not parse: {}", e);
            return EXIT_STRUCTURAL;
        }
    }
    let mut hits = 0usize;
    for a in lo..=hi {
        let poly = match instantiate_family(family, a) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("{}", e);
                return EXIT_STRUCTURAL;
            }
        };
        match run_verify(&poly, field, budget) {
            Ok(report) => {
                let code = exit_code(&report);
                if code == EXIT_OK {
                    hits += 1;
                    let primes: Vec<String> = report
                        .witnesses
                        .iter()
                        .map(|w| format!("{}@{}", w.certificate, w.prime))
                        .collect();
                    println!("a = {}: PROVEN ({})", a, primes.join(", "));
                } else {
                    println!("a = {}: not certified (exit {})", a, code);
                }
            }
            Err(e) => println!("a = {}: structural ({})", a, e),
        }
    }
    println!("{} certified member(s) in {}..={}", hits, lo, hi);
    EXIT_OK
}
