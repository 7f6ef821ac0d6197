//! Command-line front end: verification, catalogs, moments, cumulants,
//! matching, spectra, the Gelfand space, duals, convergence scans, and the
//! named result suites.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage
//! errors (including malformed fixture files).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::spectrum::{spectrum, DEFAULT_SPECTRUM_TOL};
use crate::checks;
use crate::coreps::{dual_catalog, kp_catalog, resolve_rep, sekine_catalog, IrrepCatalog};
use crate::error::{Error, Result};
use crate::exactnum::{format_rat, parse_rat, CycloNum};
use crate::moments::{
    asymptotic_scan, cumulant, match_distribution, omega_space, star_moments,
    uniform_weight_report, MomentTable, RefDist, ScanFamily,
};
use crate::qgroup::{
    build_kp, build_sekine, dual, fixture, verify_cancellation, verify_cocommutative,
    verify_haar, verify_hopf, QuantumGroup,
};
use crate::report::Report;

#[derive(Parser)]
#[command(
    name = "fqg",
    about = "Exact-arithmetic workbench for the Kac-Paljutkin and Sekine finite quantum groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct GroupArgs {
    /// Group selector: kp | sekine:N | dual-sekine:N | file:PATH
    #[arg(long, value_name = "SELECTOR")]
    group: Option<String>,
    /// Load the group from a fixture file (same as --group file:PATH)
    #[arg(long, value_name = "PATH", conflicts_with = "group")]
    from_file: Option<PathBuf>,
}

impl GroupArgs {
    fn build(&self) -> Result<QuantumGroup> {
        if let Some(path) = &self.from_file {
            return fixture::read_group(path);
        }
        let sel = self.group.as_deref().ok_or_else(|| {
            Error::InvalidParameter("missing --group (or --from-file)".into())
        })?;
        build_group(sel)
    }
}

/// Above this Sekine index the explicit structure tensor (4 n^4 sparse
/// entries of cyclotomic scalars) no longer fits comfortably in memory;
/// character moments at large n go through the closed-form engine instead.
pub const MAX_EXPLICIT_SEKINE_INDEX: u32 = 16;

fn parse_sekine_index(selector: &str, n: &str) -> Result<u32> {
    let n: u32 = n
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad index in {selector:?}")))?;
    if n > MAX_EXPLICIT_SEKINE_INDEX {
        return Err(Error::InvalidParameter(format!(
            "building the explicit 2*{n}^2-dimensional structure tensor is unsupported \
             (index cap {MAX_EXPLICIT_SEKINE_INDEX}); character moments, matching and scans \
             at large indices use the closed-form engine: `moments`/`match` with a X(U,V) \
             representation, or `scan`"
        )));
    }
    Ok(n)
}

pub fn build_group(selector: &str) -> Result<QuantumGroup> {
    if selector == "kp" {
        return Ok(build_kp());
    }
    if let Some(n) = selector.strip_prefix("sekine:") {
        return build_sekine(parse_sekine_index(selector, n)?);
    }
    if let Some(n) = selector.strip_prefix("dual-sekine:") {
        return dual(&build_sekine(parse_sekine_index(selector, n)?)?);
    }
    if let Some(path) = selector.strip_prefix("file:") {
        return fixture::read_group(std::path::Path::new(path));
    }
    Err(Error::InvalidParameter(format!(
        "unknown group selector {selector:?}; use kp | sekine:N | dual-sekine:N | file:PATH"
    )))
}

/// Catalog of the group, when it is one of the built-in families.
fn catalog_of(g: &QuantumGroup) -> Result<IrrepCatalog> {
    let name = g.name().to_string();
    if name == "kp" {
        return Ok(kp_catalog(g));
    }
    if name.starts_with("sekine:") {
        return Ok(sekine_catalog(g));
    }
    if let Some(rest) = name.strip_prefix("dual(sekine:") {
        let n: u32 = rest
            .trim_end_matches(')')
            .parse()
            .map_err(|_| Error::InvalidParameter("unrecognized dual group name".into()))?;
        return Ok(dual_catalog(g, n));
    }
    Err(Error::InvalidParameter(format!(
        "no built-in catalog for group {name:?}; catalogs exist for kp, sekine:N and dual-sekine:N"
    )))
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hopf *-algebra axioms, the Haar state, and (at small
    /// dimension) the quantum cancellation rules
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        /// Numerical tolerance for the Gram/cancellation checks
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Export the group fixture to this path
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List the irreducible corepresentation catalog and certify completeness
    Irreps {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Moment table of a character power under the Haar state
    Moments {
        #[command(flatten)]
        group: GroupArgs,
        /// Representation label from the catalog ("fundamental" works)
        #[arg(long, default_value = "fundamental")]
        rep: String,
        /// Matrix power before taking the trace
        #[arg(long, default_value_t = 1)]
        power: u64,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Joint cumulant of a family of character powers
    Cumulants {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "fundamental")]
        rep: String,
        /// Comma-separated list of powers, e.g. 2,4
        #[arg(long, value_name = "K1,K2,...")]
        powers: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Compare a moment table against a reference law
    Match {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "fundamental")]
        rep: String,
        #[arg(long, default_value_t = 1)]
        power: u64,
        /// Law: mu0|mu1|mu2|mu4 | kp:K | arcsine | c-arcsine | odd-limit |
        /// odd-limit-u0 | even-limit-u0 | even-finite:U,V,K | dual:K |
        /// dirac:P/Q | circle:P/Q
        #[arg(long)]
        dist: String,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Numerical spectrum of a character power via the left regular
    /// representation
    Spectrum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "fundamental")]
        rep: String,
        #[arg(long, default_value_t = 1)]
        power: u64,
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Gelfand space of the character algebra with idempotent-derived
    /// weights, plus the uniform-weight comparison
    Omega {
        #[command(flatten)]
        group: GroupArgs,
        /// Verify Haar reproduction on generator monomials up to this degree
        #[arg(long, default_value_t = 8)]
        max_degree: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Construct and verify the dual quantum group
    Dual {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        /// Export the dual fixture to this path
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Convergence scan of a character family against a limit law
    Scan {
        /// Family: chi:U,V,K (Sekine character powers) or dual-trace:K
        #[arg(long)]
        family: String,
        /// Reference law (same grammar as `match --dist`); dual:K laws are
        /// evaluated per scanned n
        #[arg(long)]
        dist: String,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Comma-separated family indices, e.g. 3,5,7,101
        #[arg(long, value_name = "N1,N2,...")]
        n_list: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run a named built-in result suite
    #[command(name = "paper-check")]
    PaperCheck {
        /// One of ThDist, ThInd, PropChar, PropSpace, PropComm, LemSpan,
        /// ThOmega, ThOdd, ThEven, PropIndPair, Dual
        id: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidParameter(format!("bad integer {t:?}")))
        })
        .collect()
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidParameter(format!("bad integer {t:?}")))
        })
        .collect()
}

/// Sekine index named by a selector ("sekine:N" or "dual-sekine:N").
fn selector_sekine_index(group: &GroupArgs) -> Option<u32> {
    let sel = group.group.as_deref()?;
    let n = sel
        .strip_prefix("sekine:")
        .or_else(|| sel.strip_prefix("dual-sekine:"))?;
    n.parse().ok()
}

fn parse_dist(spec: &str, n: Option<u32>) -> Result<RefDist> {
    match spec {
        "mu0" => return Ok(RefDist::mu0()),
        "mu1" => return Ok(RefDist::mu1()),
        "mu2" => return Ok(RefDist::mu2()),
        "mu4" => return Ok(RefDist::mu4()),
        "arcsine" => return Ok(RefDist::Arcsine),
        "c-arcsine" => return Ok(RefDist::CArcsine(crate::exactnum::rat(2, 1))),
        "odd-limit" => return Ok(RefDist::half_zero_half_carcsine()),
        "odd-limit-u0" => return Ok(RefDist::half_zero_half_arcsine()),
        "even-limit-u0" => {
            return Ok(RefDist::half_dirac_half_arcsine(CycloNum::from_int(2)))
        }
        "even-limit" => {
            return Ok(RefDist::half_circle_half_carcsine(CycloNum::from_int(2)))
        }
        _ => {}
    }
    if let Some(k) = spec.strip_prefix("kp:") {
        let k: u64 = k
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad power in {spec:?}")))?;
        return Ok(crate::moments::kp_power_law(k));
    }
    if let Some(k) = spec.strip_prefix("dual:") {
        let k: u64 = k
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad power in {spec:?}")))?;
        let n = n.ok_or_else(|| {
            Error::InvalidParameter("dual:K laws need a Sekine family index".into())
        })?;
        return Ok(RefDist::dual_normalized(n as u64, k));
    }
    if let Some(x) = spec.strip_prefix("dirac:") {
        return Ok(RefDist::dirac(CycloNum::from_rat(parse_rat(x)?)));
    }
    if let Some(r) = spec.strip_prefix("circle:") {
        return Ok(RefDist::UniformCircle(CycloNum::from_rat(parse_rat(r)?)));
    }
    if let Some(rest) = spec.strip_prefix("even-finite:") {
        let parts = parse_u64_list(rest)?;
        if parts.len() != 3 {
            return Err(Error::InvalidParameter(
                "even-finite needs U,V,K".into(),
            ));
        }
        let (u, v, k) = (parts[0], parts[1], parts[2]);
        if k % 2 != 0 {
            return Err(Error::InvalidParameter("even-finite needs an even K".into()));
        }
        let n = n.ok_or_else(|| {
            Error::InvalidParameter("even-finite laws need a Sekine family index".into())
        })?;
        let ix = crate::qgroup::sekine::SekineIndex { n };
        let radius = ix.two_cos_half((k * u * v) as i64);
        return Ok(if u == 0 {
            RefDist::half_dirac_half_arcsine(radius)
        } else {
            RefDist::half_circle_half_carcsine(radius)
        });
    }
    Err(Error::InvalidParameter(format!(
        "unknown distribution {spec:?}"
    )))
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report_json(r: &Report) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn print_report(r: &Report, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report_json(r)).expect("valid json")
        ),
        _ => print!("{r}"),
    }
}

/// Parses a two-dimensional family label "X(U,V)".
fn parse_x_label(rep: &str) -> Option<(u32, u32)> {
    let inner = rep.strip_prefix("X(")?.strip_suffix(')')?;
    let (u, v) = inner.split_once(',')?;
    Some((u.trim().parse().ok()?, v.trim().parse().ok()?))
}

/// Moment table of chi(rep^power). Sekine character powers of the
/// two-dimensional family are evaluated through the closed-form word engine
/// (exactly equal to the direct path, and the only feasible route at large
/// indices); everything else walks the explicit group.
fn char_power_table(
    group: &GroupArgs,
    rep: &str,
    power: u64,
    max_order: usize,
) -> Result<MomentTable> {
    if max_order > crate::moments::MAX_WORD_ORDER {
        return Err(Error::InvalidParameter(format!(
            "max order {max_order} above the cap {}",
            crate::moments::MAX_WORD_ORDER
        )));
    }
    if let Some(sel) = group.group.as_deref() {
        if let Some(nstr) = sel.strip_prefix("sekine:") {
            if let (Ok(n), Some((u, v))) = (nstr.parse::<u32>(), parse_x_label(rep)) {
                if n < 2 || u >= n || v == 0 || v > crate::coreps::two_dim_v_max(n) {
                    return Err(Error::InvalidParameter(format!(
                        "representation {rep:?} out of range for sekine:{n}"
                    )));
                }
                return Ok(crate::moments::sekine_char_moment_table(
                    n, u, v, power, max_order,
                ));
            }
        }
    }
    let g = group.build()?;
    let cat = catalog_of(&g)?;
    let corep = resolve_rep(&cat, rep)?;
    let chi = corep.power(power).trace();
    star_moments(
        &g,
        &chi,
        &format!("chi({rep}^{power}) in {}", g.name()),
        max_order,
    )
}

fn run_command(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Verify {
            group,
            format,
            tol,
            out,
        } => {
            let g = group.build()?;
            let mut report = verify_hopf(&g);
            report.merge(verify_haar(&g));
            report.merge(verify_cancellation(&g, tol));
            report.push(
                "cocommutative",
                true,
                format!("{}", verify_cocommutative(&g)),
            );
            report.title = format!("verification: {}", g.name());
            if let Some(path) = &out {
                fixture::write_group(&g, path)?;
            }
            print_report(&report, format);
            Ok(report.all_passed())
        }
        Command::Irreps { group, format, out } => {
            let g = group.build()?;
            let cat = catalog_of(&g)?;
            let report = crate::coreps::verify_complete(&cat);
            match format {
                Format::Json => {
                    let v = json!({
                        "group": g.name(),
                        "dim": g.dim(),
                        "catalog": cat.to_json(),
                        "completeness": report_json(&report),
                    });
                    emit(&v, out.as_ref())?;
                }
                _ => {
                    println!("catalog of {} (dim {}):", g.name(), g.dim());
                    for (label, c) in &cat.items {
                        println!("  {label:<12} dimension {}", c.dim());
                    }
                    println!(
                        "sum of squared dimensions: {} (algebra dimension {})",
                        cat.sum_of_squares(),
                        g.dim()
                    );
                    print_report(&report, format);
                    if let Some(path) = &out {
                        emit(&cat.to_json(), Some(path))?;
                    }
                }
            }
            Ok(report.all_passed())
        }
        Command::Moments {
            group,
            rep,
            power,
            max_order,
            format,
            out,
        } => {
            let table = char_power_table(&group, &rep, power, max_order)?;
            match format {
                Format::Json => emit(&table.to_json(), out.as_ref())?,
                _ => {
                    println!("moments of {}:", table.element);
                    for (w, v) in &table.entries {
                        println!("  {:<20} {}", w.to_string(), v);
                    }
                    if let Some(path) = &out {
                        emit(&table.to_json(), Some(path))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Cumulants {
            group,
            rep,
            powers,
            format,
        } => {
            let g = group.build()?;
            let ks = parse_u64_list(&powers)?;
            let cat = catalog_of(&g)?;
            let corep = resolve_rep(&cat, &rep)?;
            let elems: Vec<_> = ks.iter().map(|&k| corep.power(k).trace()).collect();
            let kappa = cumulant(&g, &elems)?;
            let independent = kappa.is_zero();
            match format {
                Format::Json => {
                    let v = json!({
                        "group": g.name(),
                        "rep": rep,
                        "powers": ks,
                        "cumulant": crate::exactnum::scalar_to_json(&kappa),
                        "verdict": if independent { "independent (cumulant vanishes)" } else { "not independent" },
                    });
                    emit(&v, None)?;
                }
                _ => {
                    println!("joint cumulant kappa{ks:?} = {kappa}");
                    println!(
                        "verdict: {}",
                        if independent {
                            "cumulant vanishes"
                        } else {
                            "not independent"
                        }
                    );
                }
            }
            Ok(true)
        }
        Command::Match {
            group,
            rep,
            power,
            dist,
            max_order,
            tol,
            format,
        } => {
            let law = parse_dist(&dist, selector_sekine_index(&group))?;
            let table = char_power_table(&group, &rep, power, max_order)?;
            let report = match_distribution(&table, &law, max_order, tol);
            match format {
                Format::Json => {
                    let rows: Vec<Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "word": r.word.to_string(),
                                "value": crate::exactnum::scalar_to_json(&r.value),
                                "reference": crate::exactnum::scalar_to_json(&r.reference),
                                "exact": r.exact,
                                "deviation": r.deviation,
                                "ok": r.ok,
                            })
                        })
                        .collect();
                    let v = json!({
                        "element": report.element,
                        "dist": report.dist,
                        "tol": report.tol,
                        "all_match": report.all_match,
                        "worst_deviation": report.worst_deviation,
                        "rows": rows,
                    });
                    emit(&v, None)?;
                }
                _ => {
                    println!(
                        "matching {} against {} (tol {:.1e})",
                        report.element, report.dist, report.tol
                    );
                    for r in &report.rows {
                        println!(
                            "  {:<20} value {:<24} reference {:<24} {}",
                            r.word.to_string(),
                            r.value.to_string(),
                            r.reference.to_string(),
                            if r.ok { "ok" } else { "MISMATCH" }
                        );
                    }
                    println!(
                        "verdict: {} (worst deviation {:.3e})",
                        if report.all_match { "match" } else { "mismatch" },
                        report.worst_deviation
                    );
                }
            }
            Ok(report.all_match)
        }
        Command::Spectrum {
            group,
            rep,
            power,
            tol,
            format,
        } => {
            let g = group.build()?;
            let cat = catalog_of(&g)?;
            let corep = resolve_rep(&cat, &rep)?;
            let chi = corep.power(power).trace();
            let spec = spectrum(&chi, tol);
            match format {
                Format::Json => {
                    let merged: Vec<Value> = spec
                        .merged
                        .iter()
                        .map(|(z, m)| json!({ "re": z.re, "im": z.im, "multiplicity": m }))
                        .collect();
                    let v = json!({
                        "element": format!("chi({rep}^{power})"),
                        "normal": spec.normal,
                        "tol": spec.tol,
                        "eigenvalues": merged,
                    });
                    emit(&v, None)?;
                }
                _ => {
                    println!(
                        "spectrum of chi({rep}^{power}) in {} (tol {:.1e}){}",
                        g.name(),
                        tol,
                        if spec.normal {
                            ""
                        } else {
                            "  [warning: element is not normal, multiplicities unreliable]"
                        }
                    );
                    for (z, m) in &spec.merged {
                        println!("  {:+.9} {:+.9}i   multiplicity {}", z.re, z.im, m);
                    }
                }
            }
            Ok(true)
        }
        Command::Omega {
            group,
            max_degree,
            format,
        } => {
            let g = group.build()?;
            let space = omega_space(&g)?;
            let failing = space.verify_monomials(&g, max_degree);
            let uni = uniform_weight_report(&g, &space);
            match format {
                Format::Json => {
                    let points: Vec<Value> = space
                        .points
                        .iter()
                        .map(|p| {
                            json!({
                                "a": crate::exactnum::scalar_to_json(&p.a),
                                "b": p.b,
                                "c": crate::exactnum::scalar_to_json(&p.c),
                                "weight": format_rat(&p.weight),
                            })
                        })
                        .collect();
                    let v = json!({
                        "group": g.name(),
                        "points": points,
                        "total_mass": format_rat(&space.total_mass()),
                        "monomials_verified_to_degree": max_degree,
                        "monomials_ok": failing.is_none(),
                        "uniform_weight_comparison": {
                            "uniform_weight": format_rat(&uni.uniform_weight),
                            "uniform_second_moment": format_rat(&uni.uniform_second_moment_sum),
                            "exact_second_moment": format_rat(&uni.exact_second_moment),
                            "agrees": uni.agrees,
                        },
                    });
                    emit(&v, None)?;
                }
                _ => {
                    println!(
                        "gelfand space of the character algebra of {} ({} points):",
                        g.name(),
                        space.points.len()
                    );
                    println!("  {:<28} {:>2}  {:<22} weight", "a", "b", "c");
                    for p in &space.points {
                        println!(
                            "  {:<28} {:>2}  {:<22} {}",
                            p.a.to_string(),
                            p.b,
                            p.c.to_string(),
                            format_rat(&p.weight)
                        );
                    }
                    println!("total mass: {}", format_rat(&space.total_mass()));
                    match failing {
                        None => println!(
                            "haar reproduction on generator monomials up to degree {max_degree}: exact"
                        ),
                        Some((d1, d2, d3)) => println!(
                            "haar reproduction FAILED at monomial ({d1},{d2},{d3})"
                        ),
                    }
                    println!(
                        "uniform-weight display comparison: E[c^2] uniform = {}, exact = {} ({})",
                        format_rat(&uni.uniform_second_moment_sum),
                        format_rat(&uni.exact_second_moment),
                        if uni.agrees { "agrees" } else { "DISAGREES" }
                    );
                }
            }
            Ok(failing.is_none())
        }
        Command::Dual { group, format, out } => {
            let g = group.build()?;
            let gd = dual(&g)?;
            let mut report = verify_hopf(&gd);
            report.merge(verify_haar(&gd));
            report.title = format!("dual verification: {}", gd.name());
            if let Some(path) = &out {
                fixture::write_group(&gd, path)?;
            }
            print_report(&report, format);
            Ok(report.all_passed())
        }
        Command::Scan {
            family,
            dist,
            max_order,
            n_list,
            format,
            out,
        } => {
            let ns = parse_u32_list(&n_list)?;
            let fam = if let Some(rest) = family.strip_prefix("chi:") {
                let parts = parse_u64_list(rest)?;
                if parts.len() != 3 {
                    return Err(Error::InvalidParameter("chi family needs U,V,K".into()));
                }
                ScanFamily::SekineCharPower {
                    u: parts[0] as u32,
                    v: parts[1] as u32,
                    k: parts[2],
                }
            } else if let Some(k) = family.strip_prefix("dual-trace:") {
                ScanFamily::DualNormalizedTrace {
                    k: k.parse()
                        .map_err(|_| Error::InvalidParameter("bad dual-trace power".into()))?,
                }
            } else {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {family:?}; use chi:U,V,K or dual-trace:K"
                )));
            };
            // dual:K laws vary with the scanned index (through gcd(k, n));
            // other laws are constant across the scan
            let report = if let Some(k) = dist.strip_prefix("dual:") {
                let k: u64 = k
                    .parse()
                    .map_err(|_| Error::InvalidParameter("bad power in dual:K".into()))?;
                crate::moments::matching::asymptotic_scan_with(
                    &fam,
                    |n| RefDist::dual_normalized(n as u64, k),
                    max_order,
                    &ns,
                )?
            } else {
                let law = parse_dist(&dist, None)?;
                asymptotic_scan(&fam, &law, max_order, &ns)?
            };
            match format {
                Format::Csv => {
                    let text = report.to_csv();
                    match &out {
                        Some(path) => std::fs::write(path, text)?,
                        None => print!("{text}"),
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "word": r.word.to_string(),
                                "value": crate::exactnum::scalar_to_json(&r.value),
                                "limit": crate::exactnum::scalar_to_json(&r.limit),
                                "deviation": r.deviation,
                            })
                        })
                        .collect();
                    let first: Vec<Value> = report
                        .first_exact
                        .iter()
                        .map(|(w, n)| json!({ "word": w.to_string(), "first_exact_n": n }))
                        .collect();
                    emit(
                        &json!({
                            "family": report.family,
                            "dist": report.dist,
                            "rows": rows,
                            "first_exact": first,
                        }),
                        out.as_ref(),
                    )?;
                }
                Format::Human => {
                    println!("scan of {} against {}:", report.family, report.dist);
                    for r in &report.rows {
                        println!(
                            "  n={:<4} {:<16} value {:<24} limit {:<24} deviation {:.3e}",
                            r.n,
                            r.word.to_string(),
                            r.value.to_string(),
                            r.limit.to_string(),
                            r.deviation
                        );
                    }
                    for (w, n) in &report.first_exact {
                        match n {
                            Some(n) => println!("  word {w}: exact from n = {n}"),
                            None => println!("  word {w}: no exact agreement in the scanned range"),
                        }
                    }
                    if let Some(path) = &out {
                        std::fs::write(path, report.to_csv())?;
                    }
                }
            }
            Ok(true)
        }
        Command::PaperCheck { id, format } => {
            let report = checks::paper_check(&id)?;
            print_report(&report, format);
            Ok(report.all_passed())
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    crate::config::init_thread_pool();
    let cli = Cli::parse();
    match run_command(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::Fixture(_) | Error::Io(_) | Error::Json(_) => 2,
                _ => 1,
            }
        }
    }
}
