//! Subcommand implementations. Each returns rendered text plus whether every
//! requested check held; the caller maps that to an exit code.

use std::path::Path;

use num_bigint::BigInt;

use sunseq_core::analysis::{
    check_log_shape, check_ratio_log_concave, check_ratio_monotone, check_root_log_concave,
    check_root_monotone, explore_both_conventions, l_operator, root_ratio_trend,
};
use sunseq_core::arith::{quad_to_decimal, rational_to_decimal};
use sunseq_core::cert::{
    assemble_theorem_report, bound_table, check_interlacing, check_xia, verify_inductive_step,
    TheoremOptions,
};
use sunseq_core::sequence::bfile::{read_bfile_path, write_bfile};
use sunseq_core::sequence::{ratios, sum_terms};
use sunseq_core::{
    BigRational, BoundFunction, CertificateReport, CheckResult, Direction, LogShape, TermStore,
    XiaParameters,
};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::render::{report_table, Table};
use crate::{
    BfileCommand, CertifyCommand, CheckCommand, Command, ConjectureArgs, DirectionArg, Method,
    RangeArgs, ShapeArg, TermsArgs,
};

/// Largest root-log-concavity index run without `--allow-large`.
pub const ROOT_LOGCONCAVE_CAP: u64 = 60;
/// Default end of the root-ratio trend table.
pub const TREND_DEFAULT_TO: u64 = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub held: bool,
}

impl Outcome {
    fn new(config: &RunConfig, tables: &[Table], held: bool) -> Self {
        let text = tables
            .iter()
            .map(|t| t.render(config.format))
            .collect::<Vec<_>>()
            .join("\n");
        Outcome { text, held }
    }

    fn reports(config: &RunConfig, reports: &[&CertificateReport]) -> Self {
        let tables: Vec<Table> = reports.iter().map(|r| report_table(r)).collect();
        let held = reports.iter().all(|r| !r.is_refuted());
        Outcome::new(config, &tables, held)
    }
}

pub fn dispatch(config: &RunConfig, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Terms(args) => terms(config, args),
        Command::Ratios(range) => ratio_table(config, *range),
        Command::Table1 { from, to } => table1(config, *from, *to),
        Command::Check(c) => check(config, c),
        Command::Certify(c) => certify(config, c),
        Command::Conjectures(args) => conjectures(config, args),
        Command::Bfile(c) => bfile(config, c),
    }
}

fn resolve(range: RangeArgs, from: u64, to: u64) -> Result<(u64, u64), CliError> {
    let (lo, hi) = (range.from.unwrap_or(from), range.to.unwrap_or(to));
    if lo > hi {
        return Err(CliError::Usage(format!(
            "--from {lo} is larger than --to {hi}"
        )));
    }
    Ok((lo, hi))
}

fn term_table(title: String, store: &TermStore) -> Table {
    let mut t = Table::new(title, &["n", "z_n"]);
    for (n, z) in store.iter() {
        t.push(vec![n.to_string(), z.to_string()]);
    }
    t
}

fn terms(config: &RunConfig, args: &TermsArgs) -> Result<Outcome, CliError> {
    let (lo, hi) = resolve(args.range, 0, config.horizon)?;
    let def = &config.def;
    let need = |present: bool, what: &str| {
        if present {
            Ok(())
        } else {
            Err(CliError::Usage(format!("`{}` has no {what}", def.name)))
        }
    };
    let store = match args.method {
        Method::Sum => {
            need(def.summand.is_some(), "binomial summand")?;
            sum_terms(def, lo, hi)?
        }
        Method::Recurrence => {
            need(def.recurrence.is_some(), "recurrence")?;
            config.terms(hi)?.slice(lo, hi)?
        }
        Method::Both => {
            need(def.summand.is_some(), "binomial summand")?;
            need(def.recurrence.is_some(), "recurrence")?;
            let summed = sum_terms(def, lo, hi)?;
            let rec = config.terms(hi)?.slice(lo, hi)?;
            if let Some((n, s)) = summed.iter().find(|(n, s)| rec.get(*n) != Some(*s)) {
                return Err(CliError::Mismatch(format!(
                    "summation and recurrence disagree at n={n}: {s} vs {}",
                    rec.term(n)?
                )));
            }
            summed
        }
    };
    if let Some(path) = &args.bfile {
        write_bfile_file(&store, path)?;
    }
    let title = format!("{} terms {lo}..={hi}", def.name);
    Ok(Outcome::new(config, &[term_table(title, &store)], true))
}

fn ratio_table(config: &RunConfig, range: RangeArgs) -> Result<Outcome, CliError> {
    let (lo, hi) = resolve(range, 0, config.horizon)?;
    let store = config.terms(hi + 1)?;
    let mut t = Table::new(
        format!("{} ratios z_(n+1)/z_n", config.def.name),
        &["n", "r_n", "decimal"],
    );
    for (n, r) in (lo..=hi).zip(ratios(&store, lo, hi)?) {
        t.push(vec![
            n.to_string(),
            r.to_string(),
            rational_to_decimal(&r, config.digits),
        ]);
    }
    Ok(Outcome::new(config, &[t], true))
}

fn table1(config: &RunConfig, from: u64, to: u64) -> Result<Outcome, CliError> {
    let (lo, hi) = resolve(
        RangeArgs {
            from: Some(from),
            to: Some(to),
        },
        from,
        to,
    )?;
    if lo == 0 {
        return Err(CliError::Usage("the bound is undefined at n = 0".into()));
    }
    let store = config.terms(hi + 1)?;
    let d = config.digits;
    let mut t = Table::new(
        format!("{}: bound sandwich b_n < r_n < b_(n+1)", config.def.name),
        &["n", "b_(n+1)", "r_n", "b_n"],
    );
    for row in bound_table(&store, &BoundFunction::sandwich(), lo, hi)? {
        t.push(vec![
            row.n.to_string(),
            quad_to_decimal(&row.upper, d),
            rational_to_decimal(&row.ratio, d),
            quad_to_decimal(&row.lower, d),
        ]);
    }
    Ok(Outcome::new(config, &[t], true))
}

fn check_table(result: &CheckResult) -> Table {
    let mut t = Table::new(
        "",
        &[
            "property",
            "from",
            "to",
            "verdict",
            "first violation",
            "lhs",
            "rhs",
        ],
    );
    let (at, lhs, rhs) = match &result.violation {
        Some(v) => (v.index.to_string(), v.lhs.exact(), v.rhs.exact()),
        None => ("-".into(), "-".into(), "-".into()),
    };
    t.push(vec![
        result.property.clone(),
        result.lo.to_string(),
        result.hi.to_string(),
        result.verdict.to_string(),
        at,
        lhs,
        rhs,
    ]);
    t
}

fn direction(d: DirectionArg) -> Direction {
    match d {
        DirectionArg::Increasing => Direction::Increasing,
        DirectionArg::Decreasing => Direction::Decreasing,
    }
}

fn check(config: &RunConfig, command: &CheckCommand) -> Result<Outcome, CliError> {
    let h = config.horizon;
    let strict_result = |r: CheckResult| {
        let held = r.holds_strict();
        Outcome::new(config, &[check_table(&r)], held)
    };
    match command {
        CheckCommand::LogShape { range, shape, weak } => {
            let (lo, hi) = resolve(*range, 4, h)?;
            let mode = match shape {
                ShapeArg::Convex => LogShape::Convex,
                ShapeArg::Concave => LogShape::Concave,
            };
            let r = check_log_shape(&config.terms(hi + 1)?, lo, hi, mode, !weak)?;
            let held = if *weak { r.holds() } else { r.holds_strict() };
            Ok(Outcome::new(config, &[check_table(&r)], held))
        }
        CheckCommand::RatioMonotone {
            range,
            direction: d,
        } => {
            let (lo, hi) = resolve(*range, 3, h)?;
            let r = check_ratio_monotone(&config.terms(hi + 1)?, lo, hi, direction(*d))?;
            Ok(strict_result(r))
        }
        CheckCommand::RatioLogconcave { range } => {
            let (lo, hi) = resolve(*range, 5, h)?;
            Ok(strict_result(check_ratio_log_concave(
                &config.terms(hi + 2)?,
                lo,
                hi,
            )?))
        }
        CheckCommand::RootMonotone {
            range,
            direction: d,
        } => {
            let (lo, hi) = resolve(*range, 1, h)?;
            let r = check_root_monotone(&config.terms(hi + 1)?, lo, hi, direction(*d))?;
            Ok(strict_result(r))
        }
        CheckCommand::RootLogconcave { range, allow_large } => {
            let (lo, hi) = resolve(*range, 5, h.min(ROOT_LOGCONCAVE_CAP))?;
            if hi > ROOT_LOGCONCAVE_CAP && !allow_large {
                return Err(CliError::Usage(format!(
                    "--to {hi} is past {ROOT_LOGCONCAVE_CAP}; operands grow cubically, pass --allow-large to proceed"
                )));
            }
            Ok(strict_result(check_root_log_concave(
                &config.terms(hi + 2)?,
                lo,
                hi,
            )?))
        }
        CheckCommand::RootRatioTrend { range } => {
            let (lo, hi) = resolve(*range, 5, h.min(TREND_DEFAULT_TO))?;
            let trend = root_ratio_trend(&config.terms(hi + 2)?, lo, hi, config.digits)?;
            let mut t = Table::new(
                format!(
                    "q_n = z_(n+1)^(1/(n+1)) / z_n^(1/n) for {}",
                    config.def.name
                ),
                &["n", "q_n", "q_n - q_(n+1)"],
            );
            for row in &trend.rows {
                t.push(vec![
                    row.n.to_string(),
                    row.ratio.clone(),
                    row.diff_to_next.clone().unwrap_or_else(|| "-".into()),
                ]);
            }
            let mut summary = check_table(&trend.check);
            summary.headers.push(format!("q_{hi} - 1"));
            summary.rows[0].push(trend.distance_to_one.clone());
            let held = trend.check.holds_strict();
            Ok(Outcome::new(config, &[t, summary], held))
        }
    }
}

fn parse_k0(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("--k0 `{text}` is not a rational number"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    let k0 = BigRational::new(num, den);
    if k0 <= BigRational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("--k0 must be positive, got {k0}")));
    }
    Ok(k0)
}

fn certify(config: &RunConfig, command: &CertifyCommand) -> Result<Outcome, CliError> {
    let h = config.horizon;
    let report = match command {
        CertifyCommand::Interlacing { from, to } => {
            let (lo, hi) = resolve(
                RangeArgs {
                    from: Some(*from),
                    to: Some(*to),
                },
                *from,
                *to,
            )?;
            check_interlacing(&config.terms(hi + 1)?, &BoundFunction::sandwich(), lo, hi)?
        }
        CertifyCommand::InductiveStep => verify_inductive_step(&BoundFunction::sandwich())?,
        CertifyCommand::Xia { k0, n0 } => {
            let params = XiaParameters::for_r().with_k0(parse_k0(k0)?).with_n0(*n0);
            check_xia(&config.terms(h + 1)?, &params, h)?
        }
        CertifyCommand::Theorem => {
            let options = TheoremOptions {
                horizon: h,
                ..TheoremOptions::default()
            };
            assemble_theorem_report(&config.def, &config.terms(h + 1)?, &options)?
        }
    };
    Ok(Outcome::reports(config, &[&report]))
}

fn conjectures(config: &RunConfig, args: &ConjectureArgs) -> Result<Outcome, CliError> {
    let h = config.horizon;
    let window_end = args.start + args.width;
    let store = config.terms((h + 2).max(window_end + 1))?;
    let ratio_lc = check_ratio_log_concave(&store, 5, h)?;
    let l = l_operator(&store)?;
    let (raw, abs) = explore_both_conventions(&l, args.start, args.depth, args.width)?;
    let mut tables = vec![check_table(&ratio_lc)];
    tables[0].title = format!(
        "ratio log-concavity of {} (finite range, evidence only)",
        config.def.name
    );
    tables.push(report_table(&raw.report));
    tables.push(report_table(&abs.report));
    Ok(Outcome::new(config, &tables, ratio_lc.holds_strict()))
}

fn write_bfile_file(store: &TermStore, path: &Path) -> Result<(), CliError> {
    let file = std::fs::File::create(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    write_bfile(store, std::io::BufWriter::new(file))?;
    Ok(())
}

fn bfile(config: &RunConfig, command: &BfileCommand) -> Result<Outcome, CliError> {
    match command {
        BfileCommand::Export { range, out } => {
            let (lo, hi) = resolve(*range, 0, config.horizon)?;
            let store = config.terms(hi)?.slice(lo, hi)?;
            match out {
                None => {
                    let mut buf = Vec::new();
                    write_bfile(&store, &mut buf)?;
                    Ok(Outcome {
                        text: String::from_utf8(buf).expect("b-file text is ascii"),
                        held: true,
                    })
                }
                Some(path) => {
                    write_bfile_file(&store, path)?;
                    let mut t = Table::new("", &["path", "first", "last", "terms"]);
                    t.push(vec![
                        path.display().to_string(),
                        lo.to_string(),
                        hi.to_string(),
                        store.len().to_string(),
                    ]);
                    Ok(Outcome::new(config, &[t], true))
                }
            }
        }
        BfileCommand::Import { path } => {
            let imported = read_bfile_path(path)?;
            let (lo, hi) = (imported.first_index(), imported.last_index());
            if hi < lo as i64 {
                return Err(CliError::Usage(format!("{}: no terms", path.display())));
            }
            let hi = hi as u64;
            let expected = config.terms(hi)?;
            if let Some((n, z)) = imported.iter().find(|(n, z)| expected.get(*n) != Some(*z)) {
                return Err(CliError::Mismatch(format!(
                    "{}: term {n} is {z}, `{}` has {}",
                    path.display(),
                    config.def.name,
                    expected.term(n)?
                )));
            }
            if let (Some(cache), 0) = (config.cache(), lo) {
                cache.save(&config.def, &imported.renamed(config.def.name.clone()))?;
            }
            let mut t = Table::new("", &["path", "first", "last", "terms", "matches"]);
            t.push(vec![
                path.display().to_string(),
                lo.to_string(),
                hi.to_string(),
                imported.len().to_string(),
                config.def.name.clone(),
            ]);
            Ok(Outcome::new(config, &[t], true))
        }
    }
}
