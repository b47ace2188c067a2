//! Command-line interface to the weylab library.
//!
//! Exit codes: 0 success/verified, 1 verification failure (counterexample),
//! 2 usage error, 3 resource cap exceeded.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use weylab::arrangement::{verify_special_bn, verify_special_f4, Arrangement, ChamberComplex, RegionSet};
use weylab::bruhat;
use weylab::cartan::GroupType;
use weylab::error::WeylError;
use weylab::mlattice::MnLattice;
use weylab::parabolic::{classify_quotient_element, Quotient, QuotientSide};
use weylab::roots::RootSystem;
use weylab::verify::verify_main_theorem;
use weylab::weyl::WeylElement;

#[derive(Parser)]
#[command(name = "weylab", version, about = "Exact Weyl group computations: Bruhat intervals, inversion arrangements, parabolic quotients, M(n)")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap for group/interval/quotient enumerations.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Number of worker threads (default: all cores). Output is independent
    /// of this value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré polynomial P_w(q) of the lower Bruhat interval.
    Poincare { group: String, word: String },
    /// Region-distance polynomial R_w(q) of the inversion arrangement.
    Regions { group: String, word: String },
    /// Exhaustively verify: P_w palindromic <=> P_w = R_w, for all w.
    VerifyMain { group: String },
    /// Rank sizes and palindromic elements of a leaf-removed quotient.
    Quotient {
        group: String,
        /// Node label of the removed diagram leaf.
        node: usize,
        #[arg(value_enum)]
        side: SideArg,
    },
    /// The lattice M(n) and its palindromic elements.
    Mlattice { n: usize },
    /// Verify the quotient poset is isomorphic to M(n) (B_n, remove s_0) or
    /// M(n-1) (D_n, remove s_0 or s_1).
    VerifyIso { group: String, node: usize },
    /// The special-case verifications (the F4 instance and the B_n family).
    VerifySpecial {
        #[arg(value_enum)]
        case: SpecialArg,
        /// Rank for the bn case (2..=5).
        n: Option<usize>,
    },
    /// Export a poset as DOT or JSON.
    Export {
        #[command(subcommand)]
        object: ExportObject,
    },
}

#[derive(Subcommand)]
enum ExportObject {
    /// The lattice M(n).
    Mlattice {
        n: usize,
        #[command(flatten)]
        out: ExportArgs,
    },
    /// A leaf-removed parabolic quotient poset.
    Quotient {
        group: String,
        node: usize,
        #[arg(value_enum)]
        side: SideArg,
        #[command(flatten)]
        out: ExportArgs,
    },
    /// A lower Bruhat interval [id, w].
    Interval {
        group: String,
        word: String,
        #[command(flatten)]
        out: ExportArgs,
    },
    /// The chamber poset of an inversion arrangement.
    RegionPoset {
        group: String,
        word: String,
        #[command(flatten)]
        out: ExportArgs,
    },
}

#[derive(clap::Args)]
struct ExportArgs {
    #[arg(long, value_enum, default_value = "dot")]
    format: ExportFormat,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Rightfree,
    Leftfree,
}

impl From<SideArg> for QuotientSide {
    fn from(side: SideArg) -> QuotientSide {
        match side {
            SideArg::Rightfree => QuotientSide::RightFree,
            SideArg::Leftfree => QuotientSide::LeftFree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecialArg {
    F4,
    Bn,
}

struct Caps {
    group: u128,
    quotient: u128,
    interval: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    let caps = Caps {
        group: cli.cap.map_or(weylab::weyl::DEFAULT_GROUP_CAP, u128::from),
        quotient: cli
            .cap
            .map_or(weylab::parabolic::DEFAULT_QUOTIENT_CAP, u128::from),
        interval: cli
            .cap
            .map_or(weylab::bruhat::DEFAULT_INTERVAL_CAP, |c| c as usize),
    };
    match run(&cli, &caps) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                WeylError::Config(_) | WeylError::Domain(_) => ExitCode::from(2),
                WeylError::Resource(_) => ExitCode::from(3),
                WeylError::Invariant(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli, caps: &Caps) -> Result<ExitCode, WeylError> {
    match &cli.command {
        Command::Poincare { group, word } => {
            let rs = RootSystem::parse(group)?;
            let w = element(&rs, word)?;
            let p = bruhat::poincare_with_cap(&rs, &w, caps.interval)?;
            if cli.json {
                emit(&json!({
                    "group": rs.datum().name(),
                    "word": w.canonical_word(&rs),
                    "length": w.length(),
                    "poly": p,
                    "palindromic": p.is_palindromic(),
                }));
            } else {
                println!("P_w(q) = {p}");
                println!("coefficients: {}", coeff_list(p.coeffs()));
                println!("length: {}", w.length());
                println!("palindromic: {}", p.is_palindromic());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Regions { group, word } => {
            let rs = RootSystem::parse(group)?;
            let w = element(&rs, word)?;
            let chambers = ChamberComplex::build_with_cap(&rs, caps.group)?;
            let regions = RegionSet::enumerate(&rs, &Arrangement::inversion(&rs, &w), &chambers)?;
            let r = regions.distance_poly();
            if cli.json {
                emit(&json!({
                    "group": rs.datum().name(),
                    "word": w.canonical_word(&rs),
                    "length": w.length(),
                    "poly": r,
                    "palindromic": r.is_palindromic(),
                    "regions": regions.len(),
                }));
            } else {
                println!("R_w(q) = {r}");
                println!("coefficients: {}", coeff_list(r.coeffs()));
                println!("regions: {}", regions.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyMain { group } => {
            let rs = RootSystem::parse(group)?;
            let report = verify_main_theorem(&rs, caps.group).map_err(|e| match e {
                WeylError::Resource(msg) => WeylError::Resource(format!(
                    "{msg}; feasible at the default cap: A1-A9, B2-B7, D4-D7, E6, F4, G2"
                )),
                other => other,
            })?;
            if cli.json {
                emit(&json!({ "report": report, "passed": report.passed() }));
            } else {
                println!("{}", report.scope);
                println!(
                    "scanned: {} elements, rationally smooth: {}, wall time: {} ms",
                    report.elements_scanned, report.rationally_smooth, report.wall_ms
                );
                for f in &report.failures {
                    println!("counterexample: {f}");
                }
                println!("result: {}", if report.passed() { "VERIFIED" } else { "FAILED" });
            }
            Ok(exit_verified(report.passed()))
        }
        Command::Quotient { group, node, side } => {
            let rs = RootSystem::parse(group)?;
            let j = removed_leaf(&rs, *node)?;
            let side = QuotientSide::from(*side);
            let q = Quotient::build_with_cap(&rs, &j, side, caps.quotient)?;
            let nontrivial = q.nontrivial_palindromic();
            let tagged: Vec<(Vec<usize>, String)> = nontrivial
                .iter()
                .map(|v| {
                    let tag = classify_quotient_element(&rs, &q, v)?;
                    Ok((v.canonical_word(&rs), tag.to_string()))
                })
                .collect::<Result<_, WeylError>>()?;
            if cli.json {
                emit(&json!({
                    "group": rs.datum().name(),
                    "removed": node,
                    "side": side.to_string(),
                    "size": q.len(),
                    "rank_sizes": q.poset().rank_sizes(),
                    "nontrivial_palindromic": tagged
                        .iter()
                        .map(|(word, tag)| json!({ "word": word, "class": tag }))
                        .collect::<Vec<_>>(),
                }));
            } else {
                println!(
                    "quotient {}^J, J = S \\ {{s_{node}}}, side {side}: {} elements",
                    rs.datum().name(),
                    q.len()
                );
                println!("rank sizes: {}", coeff_list(&q.poset().rank_sizes()));
                println!("nontrivial palindromic elements: {}", tagged.len());
                for (word, tag) in &tagged {
                    println!("  [{}]  {tag}", word_list(word));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mlattice { n } => {
            let lattice = MnLattice::build(*n)?;
            let palindromic = lattice.palindromic();
            if cli.json {
                emit(&json!({
                    "n": n,
                    "size": lattice.elements().len(),
                    "rank_sizes": lattice.poset().rank_sizes(),
                    "palindromic": palindromic.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                }));
            } else {
                println!("M({n}): {} elements", lattice.elements().len());
                println!("rank sizes: {}", coeff_list(&lattice.poset().rank_sizes()));
                println!("palindromic elements ({}):", palindromic.len());
                for e in &palindromic {
                    println!("  {e}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyIso { group, node } => {
            let ty = GroupType::parse(group)?;
            let rs = RootSystem::new(ty)?;
            let m_n = match (ty, node) {
                (GroupType::B(n), 0) => n,
                (GroupType::D(n), 0 | 1) => n - 1,
                _ => {
                    return Err(WeylError::Domain(format!(
                        "verify-iso compares B_n with s_0 removed to M(n), or D_n with s_0 or s_1 removed to M(n-1); got {group} node {node}"
                    )))
                }
            };
            let j: BTreeSet<usize> = rs
                .labels()
                .iter()
                .copied()
                .filter(|l| l != node)
                .collect();
            let q = Quotient::build_with_cap(&rs, &j, QuotientSide::RightFree, caps.quotient)?;
            let lattice = MnLattice::build(m_n)?;
            let isomorphic = q.poset().is_isomorphic(lattice.poset());
            if cli.json {
                emit(&json!({
                    "group": rs.datum().name(),
                    "removed": node,
                    "lattice": format!("M({m_n})"),
                    "isomorphic": isomorphic,
                }));
            } else {
                println!(
                    "{}^J with s_{node} removed ({} elements) vs M({m_n}): {}",
                    rs.datum().name(),
                    q.len(),
                    if isomorphic { "isomorphic" } else { "NOT isomorphic" }
                );
            }
            Ok(exit_verified(isomorphic))
        }
        Command::VerifySpecial { case, n } => {
            let report = match case {
                SpecialArg::F4 => verify_special_f4()?,
                SpecialArg::Bn => verify_special_bn(n.unwrap_or(3))?,
            };
            if cli.json {
                emit(&json!({ "report": report, "passed": report.all_checks_pass() }));
            } else {
                println!("{}", report.scope);
                println!("  l(u) = {}, l(v) = {}", report.ell_u, report.ell_v);
                println!("  P_w = {}", report.p_w);
                println!("  P_u = {}", report.p_u);
                println!("  quotient Poincare of v = {}", report.quotient_poincare);
                println!("  R_w = {}", report.r_w);
                println!("  R_u = {}", report.r_u);
                println!("  uniform: {}", report.uniform);
                println!(
                    "  R_w = R_u * (1+...+q^{}): {}",
                    report.ell_v, report.r_factorizes_as_chain
                );
                println!("  P_w = R_w: {}", report.p_equals_r);
                if let Some(deg3) = report.displayed_deg3_factor_holds {
                    println!("  note: degree-3 factor identity P_w = P_u*(1+q+q^2+q^3): {deg3}");
                }
                println!(
                    "result: {}",
                    if report.all_checks_pass() { "VERIFIED" } else { "FAILED" }
                );
            }
            Ok(exit_verified(report.all_checks_pass()))
        }
        Command::Export { object } => export(caps, object),
    }
}

fn export(caps: &Caps, object: &ExportObject) -> Result<ExitCode, WeylError> {
    let (poset, labels, args) = match object {
        ExportObject::Mlattice { n, out } => {
            let lattice = MnLattice::build(*n)?;
            let labels: Vec<String> = lattice.elements().iter().map(|e| e.to_string()).collect();
            (lattice.poset().clone(), labels, out)
        }
        ExportObject::Quotient {
            group,
            node,
            side,
            out,
        } => {
            let rs = RootSystem::parse(group)?;
            let j = removed_leaf(&rs, *node)?;
            let q = Quotient::build_with_cap(&rs, &j, QuotientSide::from(*side), caps.quotient)?;
            let labels: Vec<String> = q.elements().iter().map(|v| word_label(&rs, v)).collect();
            (q.poset().clone(), labels, out)
        }
        ExportObject::Interval { group, word, out } => {
            let rs = RootSystem::parse(group)?;
            let w = element(&rs, word)?;
            let interval = bruhat::lower_interval_with_cap(&rs, &w, caps.interval)?;
            let labels: Vec<String> =
                interval.elements.iter().map(|v| word_label(&rs, v)).collect();
            (interval.poset, labels, out)
        }
        ExportObject::RegionPoset { group, word, out } => {
            let rs = RootSystem::parse(group)?;
            let w = element(&rs, word)?;
            let chambers = ChamberComplex::build_with_cap(&rs, caps.group)?;
            let regions = RegionSet::enumerate(&rs, &Arrangement::inversion(&rs, &w), &chambers)?;
            let labels: Vec<String> = regions
                .regions()
                .iter()
                .map(|r| sign_label(r.signs(), regions.arrangement().len()))
                .collect();
            (regions.region_poset()?, labels, out)
        }
    };
    let rendered = match args.format {
        ExportFormat::Dot => poset.to_dot(&labels),
        ExportFormat::Json => format!("{}\n", poset.to_json(&labels)),
    };
    match &args.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| WeylError::Domain(format!("cannot create {}: {e}", path.display())))?;
            file.write_all(rendered.as_bytes())
                .map_err(|e| WeylError::Domain(format!("write failed: {e}")))?;
        }
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Parses whitespace- or comma-separated node labels; empty means identity.
fn element(rs: &RootSystem, word: &str) -> Result<WeylElement, WeylError> {
    let letters: Vec<usize> = word
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| WeylError::Domain(format!("cannot parse node label '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    WeylElement::from_word(rs, &letters)
}

fn removed_leaf(rs: &RootSystem, node: usize) -> Result<BTreeSet<usize>, WeylError> {
    if !rs.labels().contains(&node) {
        return Err(WeylError::Domain(format!(
            "node {node} is not in {}",
            rs.datum().name()
        )));
    }
    if !rs.leaf_labels().contains(&node) {
        return Err(WeylError::Domain(format!(
            "node s_{node} is not a diagram leaf; the BP theorem only covers leaf-removed maximal quotients (leaves of {}: {:?})",
            rs.datum().name(),
            rs.leaf_labels()
        )));
    }
    Ok(rs.labels().iter().copied().filter(|&l| l != node).collect())
}

fn word_label(rs: &RootSystem, v: &WeylElement) -> String {
    if v.is_identity() {
        "e".to_string()
    } else {
        word_list(&v.canonical_word(rs))
    }
}

fn word_list(word: &[usize]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn sign_label(signs: u64, len: usize) -> String {
    (0..len)
        .map(|k| if signs >> k & 1 == 1 { '-' } else { '+' })
        .collect()
}

fn coeff_list<T: std::fmt::Display>(coeffs: &[T]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn exit_verified(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
