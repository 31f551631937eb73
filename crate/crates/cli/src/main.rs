//! Command-line front end for the rwhitney toolkit.
//!
//! Subcommands: `whitney` (triangle rows), `bernoulli` (the q-parameter
//! Bernoulli and poly-Bernoulli families), `cauchy` (the q-parameter Cauchy
//! families at r and -r), `series` (raw generating-function coefficients),
//! and `verify` (the identity suite). Identical invocations produce
//! byte-identical output. Exit codes: 0 on success / all-pass, 1 when a
//! verification check fails, 2 on usage errors.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rwhitney::bernoulli::{
    bernoulli_gf_series, bernoulli_q_explicit, bernoulli_q_gf, bernoulli_q_wsum_list,
    poly_bernoulli_q, poly_bernoulli_series,
};
use rwhitney::cauchy::{cauchy_first_list, cauchy_second_neg_list};
use rwhitney::identities::{run_suite, IdentityReport};
use rwhitney::poly::{EvalPoint, MPoly, Var};
use rwhitney::rational::Rational;
use rwhitney::whitney::{egf_second_series, WhitneyKind, WhitneyTriangle};

use render::{csv_quote, to_json, write_output, Format};

#[derive(Parser)]
#[command(
    name = "rwhitney",
    version,
    about = "Exact r-Whitney triangles and the Bernoulli/Cauchy polynomial families with a q parameter"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    First,
    Second,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RouteArg {
    Wsum,
    Explicit,
    Gf,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesArg {
    /// Generating function of the q-parameter Bernoulli polynomials
    Ebq,
    /// Column generating function of the second-kind Whitney triangle
    EgfW,
    /// Generating function of the poly-Bernoulli polynomials
    Polybern,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print rows (or one column) of an r-Whitney triangle
    Whitney {
        /// Which kind of triangle
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Largest row index
        #[arg(long)]
        nmax: usize,
        /// Restrict output to column k
        #[arg(long)]
        k: Option<usize>,
        /// Evaluate at q = RAT ("p/q" or integer); omit to stay symbolic
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        /// Evaluate at r = RAT; omit to stay symbolic
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        r: Option<Rational>,
    },
    /// Print the Bernoulli (or poly-Bernoulli) polynomials with a q parameter
    Bernoulli {
        /// Largest index
        #[arg(long)]
        nmax: usize,
        /// Computation route; `all` cross-checks the routes per index
        #[arg(long, value_enum, default_value_t = RouteArg::Wsum)]
        route: RouteArg,
        /// Poly-Bernoulli order; selects the poly-Bernoulli family in q and z
        #[arg(long = "k-order", allow_hyphen_values = true)]
        k_order: Option<i64>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        r: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z: Option<Rational>,
    },
    /// Print the Cauchy polynomials with a q parameter at r (first kind) or -r (second kind)
    Cauchy {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        r: Option<Rational>,
    },
    /// Print raw coefficients of a generating-function series
    Series {
        #[arg(long, value_enum)]
        which: SeriesArg,
        /// Truncation order (coefficients of t^0 .. t^order)
        #[arg(long)]
        order: usize,
        /// Column index (egf-w, default 0) or polylogarithm order (polybern, default 1)
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        r: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z: Option<Rational>,
    },
    /// Run the identity-verification suite
    Verify {
        /// Largest index every family is swept to
        #[arg(long)]
        nmax: usize,
        /// Seed for the rational specialization points
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated identity-id prefixes to keep (e.g. "orthogonality,cauchy")
        #[arg(long)]
        families: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let (content, ok) = match cli.command {
        Command::Whitney {
            kind,
            nmax,
            k,
            q,
            r,
        } => (cmd_whitney(kind, nmax, k, &q, &r, cli.format)?, true),
        Command::Bernoulli {
            nmax,
            route,
            k_order,
            q,
            r,
            z,
        } => cmd_bernoulli(nmax, route, k_order, &q, &r, &z, cli.format)?,
        Command::Cauchy { kind, nmax, q, r } => (cmd_cauchy(kind, nmax, &q, &r, cli.format)?, true),
        Command::Series {
            which,
            order,
            k,
            q,
            r,
            z,
        } => (cmd_series(which, order, k, &q, &r, &z, cli.format)?, true),
        Command::Verify {
            nmax,
            seed,
            families,
        } => cmd_verify(nmax, seed, families.as_deref(), cli.format)?,
    };
    write_output(&cli.out, &content)?;
    Ok(ok)
}

fn eval_point(q: &Option<Rational>, r: &Option<Rational>, z: &Option<Rational>) -> EvalPoint {
    let mut point = EvalPoint::new();
    if let Some(q) = q {
        point = point.set(Var::Q, q.clone());
    }
    if let Some(r) = r {
        point = point.set(Var::R, r.clone());
    }
    if let Some(z) = z {
        point = point.set(Var::Z, z.clone());
    }
    point
}

#[derive(Serialize)]
struct TriangleDoc {
    kind: &'static str,
    nmax: usize,
    rows: Vec<Vec<MPoly>>,
}

#[derive(Serialize)]
struct ColumnDoc {
    kind: &'static str,
    nmax: usize,
    k: usize,
    values: Vec<MPoly>,
}

#[derive(Serialize)]
struct FamilyDoc {
    family: &'static str,
    route: &'static str,
    nmax: usize,
    values: Vec<MPoly>,
}

#[derive(Serialize)]
struct PolyBernoulliDoc {
    family: &'static str,
    k: i64,
    nmax: usize,
    values: Vec<MPoly>,
}

#[derive(Serialize)]
struct ExplicitDoc {
    family: &'static str,
    route: &'static str,
    nmax: usize,
    q: Rational,
    r: Rational,
    values: Vec<Rational>,
}

#[derive(Serialize)]
struct AgreementEntry {
    n: usize,
    agree: bool,
    wsum: String,
    gf: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    explicit: Option<String>,
}

#[derive(Serialize)]
struct AgreementDoc {
    family: &'static str,
    route: &'static str,
    nmax: usize,
    entries: Vec<AgreementEntry>,
}

#[derive(Serialize)]
struct SeriesDoc {
    which: &'static str,
    order: usize,
    k: Option<i64>,
    coefficients: Vec<MPoly>,
}

fn render_values(format: Format, values: &[MPoly], doc: impl Serialize) -> Result<String> {
    Ok(match format {
        Format::Plain => {
            let mut out = String::new();
            for v in values {
                out.push_str(&v.to_string());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", csv_quote(&v.to_string())));
            }
            out
        }
        Format::Json => to_json(&doc)?,
    })
}

fn cmd_whitney(
    kind: KindArg,
    nmax: usize,
    k: Option<usize>,
    q: &Option<Rational>,
    r: &Option<Rational>,
    format: Format,
) -> Result<String> {
    let (core_kind, kind_name) = match kind {
        KindArg::First => (WhitneyKind::First, "first"),
        KindArg::Second => (WhitneyKind::Second, "second"),
    };
    let mut triangle = WhitneyTriangle::new(core_kind);
    triangle.extend_to(nmax);
    let point = eval_point(q, r, &None);

    if let Some(k) = k {
        if k > nmax {
            bail!("--k ({k}) must not exceed --nmax ({nmax})");
        }
        let values: Vec<MPoly> = (k..=nmax)
            .map(|n| triangle.get(n, k).expect("row computed").eval(&point))
            .collect();
        return render_values(
            format,
            &values,
            ColumnDoc {
                kind: kind_name,
                nmax,
                k,
                values: values.clone(),
            },
        );
    }

    let rows: Vec<Vec<MPoly>> = (0..=nmax)
        .map(|n| {
            (0..=n)
                .map(|j| triangle.get(n, j).expect("row computed").eval(&point))
                .collect()
        })
        .collect();
    Ok(match format {
        Format::Plain => {
            let mut out = String::new();
            for row in &rows {
                let cells: Vec<String> = row.iter().map(MPoly::to_string).collect();
                out.push_str(&format!("[{}]\n", cells.join(", ")));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for (n, row) in rows.iter().enumerate() {
                let mut cells = vec![n.to_string()];
                cells.extend(row.iter().map(|p| csv_quote(&p.to_string())));
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => to_json(&TriangleDoc {
            kind: kind_name,
            nmax,
            rows,
        })?,
    })
}

fn cmd_bernoulli(
    nmax: usize,
    route: RouteArg,
    k_order: Option<i64>,
    q: &Option<Rational>,
    r: &Option<Rational>,
    z: &Option<Rational>,
    format: Format,
) -> Result<(String, bool)> {
    if let Some(k) = k_order {
        let point = eval_point(q, &None, z);
        let values: Vec<MPoly> = poly_bernoulli_q(nmax, k)
            .iter()
            .map(|p| p.eval(&point))
            .collect();
        let doc = PolyBernoulliDoc {
            family: "poly_bernoulli_q",
            k,
            nmax,
            values: values.clone(),
        };
        return Ok((render_values(format, &values, doc)?, true));
    }

    match route {
        RouteArg::Wsum | RouteArg::Gf => {
            let point = eval_point(q, r, &None);
            let (list, route_name) = match route {
                RouteArg::Wsum => (bernoulli_q_wsum_list(nmax), "wsum"),
                _ => (bernoulli_q_gf(nmax), "gf"),
            };
            let values: Vec<MPoly> = list.iter().map(|p| p.eval(&point)).collect();
            let doc = FamilyDoc {
                family: "bernoulli_q",
                route: route_name,
                nmax,
                values: values.clone(),
            };
            Ok((render_values(format, &values, doc)?, true))
        }
        RouteArg::Explicit => {
            let (Some(q_val), Some(r_val)) = (q, r) else {
                bail!("route 'explicit' evaluates a double sum and needs numeric --q and --r");
            };
            if q_val.is_zero() {
                bail!("route 'explicit' requires q != 0: the explicit double sum divides by q^k");
            }
            let values: Vec<Rational> = (0..=nmax)
                .map(|n| bernoulli_q_explicit(n, q_val, r_val).expect("q != 0"))
                .collect();
            let content = match format {
                Format::Plain => {
                    let mut out = String::new();
                    for v in &values {
                        out.push_str(&v.to_string());
                        out.push('\n');
                    }
                    out
                }
                Format::Csv => {
                    let mut out = String::from("n,value\n");
                    for (n, v) in values.iter().enumerate() {
                        out.push_str(&format!("{n},{}\n", csv_quote(&v.to_string())));
                    }
                    out
                }
                Format::Json => to_json(&ExplicitDoc {
                    family: "bernoulli_q",
                    route: "explicit",
                    nmax,
                    q: q_val.clone(),
                    r: r_val.clone(),
                    values,
                })?,
            };
            Ok((content, true))
        }
        RouteArg::All => {
            if matches!(q, Some(v) if v.is_zero()) {
                bail!("route 'all' includes the explicit double sum, which requires q != 0");
            }
            let point = eval_point(q, r, &None);
            let wsum: Vec<MPoly> = bernoulli_q_wsum_list(nmax)
                .iter()
                .map(|p| p.eval(&point))
                .collect();
            let gf: Vec<MPoly> = bernoulli_q_gf(nmax)
                .iter()
                .map(|p| p.eval(&point))
                .collect();
            let explicit: Option<Vec<Rational>> = match (q, r) {
                (Some(q_val), Some(r_val)) => Some(
                    (0..=nmax)
                        .map(|n| bernoulli_q_explicit(n, q_val, r_val).expect("q != 0"))
                        .collect(),
                ),
                _ => None,
            };
            let entries: Vec<AgreementEntry> = (0..=nmax)
                .map(|n| {
                    let explicit_str = explicit.as_ref().map(|e| e[n].to_string());
                    let wsum_str = wsum[n].to_string();
                    let agree =
                        wsum[n] == gf[n] && explicit_str.as_ref().is_none_or(|e| *e == wsum_str);
                    AgreementEntry {
                        n,
                        agree,
                        wsum: wsum_str,
                        gf: gf[n].to_string(),
                        explicit: explicit_str,
                    }
                })
                .collect();
            let all_agree = entries.iter().all(|e| e.agree);
            let content = match format {
                Format::Plain => {
                    let mut out = String::new();
                    for e in &entries {
                        if e.agree {
                            out.push_str(&format!("n={} agree: {}\n", e.n, e.wsum));
                        } else {
                            out.push_str(&format!(
                                "n={} MISMATCH: wsum={} gf={}{}\n",
                                e.n,
                                e.wsum,
                                e.gf,
                                e.explicit
                                    .as_ref()
                                    .map(|x| format!(" explicit={x}"))
                                    .unwrap_or_default()
                            ));
                        }
                    }
                    out
                }
                Format::Csv => {
                    let mut out = String::from("n,agree,wsum,gf,explicit\n");
                    for e in &entries {
                        out.push_str(&format!(
                            "{},{},{},{},{}\n",
                            e.n,
                            e.agree,
                            csv_quote(&e.wsum),
                            csv_quote(&e.gf),
                            e.explicit.as_deref().map(csv_quote).unwrap_or_default()
                        ));
                    }
                    out
                }
                Format::Json => to_json(&AgreementDoc {
                    family: "bernoulli_q",
                    route: "all",
                    nmax,
                    entries,
                })?,
            };
            Ok((content, all_agree))
        }
    }
}

fn cmd_cauchy(
    kind: KindArg,
    nmax: usize,
    q: &Option<Rational>,
    r: &Option<Rational>,
    format: Format,
) -> Result<String> {
    let (list, family) = match kind {
        KindArg::First => (cauchy_first_list(nmax), "cauchy_first"),
        KindArg::Second => (cauchy_second_neg_list(nmax), "cauchy_second_neg"),
    };
    let point = eval_point(q, r, &None);
    let values: Vec<MPoly> = list.iter().map(|p| p.eval(&point)).collect();
    render_values(
        format,
        &values,
        FamilyDoc {
            family,
            route: "wsum",
            nmax,
            values: values.clone(),
        },
    )
}

fn cmd_series(
    which: SeriesArg,
    order: usize,
    k: Option<i64>,
    q: &Option<Rational>,
    r: &Option<Rational>,
    z: &Option<Rational>,
    format: Format,
) -> Result<String> {
    let (series, which_name, k_used) = match which {
        SeriesArg::Ebq => (bernoulli_gf_series(order), "ebq", None),
        SeriesArg::EgfW => {
            let k = k.unwrap_or(0);
            if k < 0 {
                bail!("--k for egf-w is a column index and must be >= 0");
            }
            (egf_second_series(k as usize, order), "egf-w", Some(k))
        }
        SeriesArg::Polybern => {
            let k = k.unwrap_or(1);
            (poly_bernoulli_series(order, k), "polybern", Some(k))
        }
    };
    let point = eval_point(q, r, z);
    let coefficients: Vec<MPoly> = series.coeffs().iter().map(|c| c.eval(&point)).collect();
    Ok(match format {
        Format::Plain => {
            let mut out = String::new();
            for c in &coefficients {
                out.push_str(&c.to_string());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in coefficients.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", csv_quote(&c.to_string())));
            }
            out
        }
        Format::Json => to_json(&SeriesDoc {
            which: which_name,
            order,
            k: k_used,
            coefficients,
        })?,
    })
}

fn instance_param_string(report: &IdentityReport, joiner: &str) -> String {
    report
        .instance
        .params
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(joiner)
}

fn cmd_verify(
    nmax: usize,
    seed: u64,
    families: Option<&str>,
    format: Format,
) -> Result<(String, bool)> {
    let reports = run_suite(nmax, seed);
    let selected: Vec<IdentityReport> = match families {
        None => reports,
        Some(filter) => {
            let prefixes: Vec<&str> = filter
                .split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .collect();
            if prefixes.is_empty() {
                bail!("--families needs at least one identity-id prefix");
            }
            let selected: Vec<IdentityReport> = reports
                .into_iter()
                .filter(|r| prefixes.iter().any(|p| r.identity_id.starts_with(p)))
                .collect();
            if selected.is_empty() {
                bail!("no identity family matches {filter:?}");
            }
            selected
        }
    };

    let failed = selected.iter().filter(|r| !r.passed()).count();
    let ok = failed == 0;
    let content = match format {
        Format::Plain => {
            let mut out = String::new();
            for report in &selected {
                let k_part = report
                    .instance
                    .k
                    .map(|k| format!(" k={k}"))
                    .unwrap_or_default();
                let params = instance_param_string(report, " ");
                let params_part = if params.is_empty() {
                    String::new()
                } else {
                    format!(" {params}")
                };
                out.push_str(&format!(
                    "{} {} n={}{}{}\n",
                    report.status.as_str(),
                    report.identity_id,
                    report.instance.n,
                    k_part,
                    params_part
                ));
                if !report.passed() {
                    out.push_str(&format!("  lhs: {}\n  rhs: {}\n", report.lhs, report.rhs));
                }
            }
            out.push_str(&format!(
                "{} checks: {} passed, {} failed\n",
                selected.len(),
                selected.len() - failed,
                failed
            ));
            out
        }
        Format::Csv => {
            let mut out = String::from("identity_id,n,k,params,status,lhs,rhs\n");
            for report in &selected {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    csv_quote(&report.identity_id),
                    report.instance.n,
                    report.instance.k.map(|k| k.to_string()).unwrap_or_default(),
                    csv_quote(&instance_param_string(report, ";")),
                    report.status.as_str(),
                    csv_quote(&report.lhs),
                    csv_quote(&report.rhs),
                ));
            }
            out
        }
        Format::Json => to_json(&selected)?,
    };
    Ok((content, ok))
}
