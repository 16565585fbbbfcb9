//! One function per subcommand.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use sact::radical::{
    check_hereditary, check_hoehnke, check_ka, check_ka_redundancy, check_pair_conditions, check_radical_closure,
    check_semisimple_closure, enumerate_radicals, radical_class, reflect, semisimple_class, verify_reflection,
};
use sact::torsion::{check_torsion_theory, coproduct_closure_check, enumerate_torsion_pairs, ka_from_torsion};
use sact::{ActClass, AxiomReport, RadicalAssignment, RadicalFilter, TorsionPair, Universe};

use crate::cache::Source;
use crate::fixture::render_radical;
use crate::output::{Report, Section};
use crate::workspace::{fixture_files, Workspace};
use crate::{theorems, Cli, CliError, Command, FilterArg, Outcome, Suite, DEFAULT_MAX_SIZE};

pub fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let bounds = sact::Bounds::default();
    let max_size = cli.max_size;
    let done = |report| Outcome { report, invalid_input: false };
    match &cli.command {
        Command::Validate { paths, universe } => validate(cli, paths, universe.as_deref(), bounds),
        Command::Universe { monoid } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            universe_cmd(&ws, monoid, max_size.unwrap_or(DEFAULT_MAX_SIZE), err).map(done)
        }
        Command::Check { suite, targets, universe } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            check(&ws, *suite, targets, universe.as_deref(), max_size).map(done)
        }
        Command::Theorems { monoid } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            ws.require_monoid(monoid)?;
            let n = max_size.unwrap_or(DEFAULT_MAX_SIZE);
            Ok(done(theorems::run(&ws, monoid, n, cli.seed)))
        }
        Command::Reflect { radical, universe } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            reflect_cmd(&ws, radical, universe.as_deref(), max_size).map(done)
        }
        Command::EnumerateRadicals { filter, universe } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            enumerate_cmd(&ws, *filter, universe, max_size).map(done)
        }
        Command::CoproductCheck { classes, universe } => {
            let ws = Workspace::load(&cli.workspace, bounds)?;
            coproduct_cmd(&ws, classes, universe, max_size).map(done)
        }
    }
}

/// Parses `M` or `M/n`.
fn universe_spec(spec: &str, max_size: Option<usize>) -> Result<(String, usize), CliError> {
    match spec.split_once('/') {
        Some((m, n)) => {
            let n =
                n.parse().map_err(|_| CliError::Usage(format!("bad universe `{spec}`: expected `<monoid>/<size>`")))?;
            Ok((m.to_string(), n))
        }
        None => Ok((spec.to_string(), max_size.unwrap_or(DEFAULT_MAX_SIZE))),
    }
}

fn timed(mut section: Section, f: impl FnOnce(&mut Section)) -> Section {
    let start = Instant::now();
    f(&mut section);
    section.elapsed = start.elapsed();
    section
}

fn validate(cli: &Cli, paths: &[PathBuf], universe: Option<&str>, bounds: sact::Bounds) -> Result<Outcome, CliError> {
    let files = if paths.is_empty() {
        fixture_files(&cli.workspace)
            .map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", cli.workspace.display())))?
    } else {
        paths.to_vec()
    };
    let ws = Workspace::from_files(&cli.workspace, &files, bounds)?;
    let mut report = Report::new("validate");
    let mut invalid = !ws.diagnostics.is_empty();
    report.push(timed(Section::new("fixtures", ""), |s| {
        s.info("files", files.len());
        for d in &ws.diagnostics {
            s.report.fail("fixture.invalid", d.to_string());
        }
    }));
    let mut radicals: Vec<(String, String, usize)> = Vec::new();
    for path in &files {
        let text = fs::read_to_string(path).unwrap_or_default();
        let (fx, _) = crate::fixture::parse("", &text);
        for r in fx.radicals {
            radicals.push((r.name, r.monoid, r.max_size));
        }
    }
    for (name, monoid, n) in radicals {
        if ws.radical_def(&name).is_none() {
            continue;
        }
        let section = timed(Section::new("radical", &name), |s| {
            let resolved = ws.universe(&monoid, n).and_then(|(u, _)| ws.radical(&name, &monoid, &u));
            if let Err(e) = resolved {
                s.report.fail("fixture.radical", e.to_string());
            }
        });
        invalid |= !section.report.passed();
        report.push(section);
    }
    if let Some(spec) = universe {
        let (monoid, n) = universe_spec(spec, cli.max_size)?;
        let (u, _) = ws.universe(&monoid, n)?;
        for name in torsion_names(&files) {
            let section = timed(Section::new("torsion", &name), |s| match ws.torsion(&name, &u) {
                Ok(tau) => {
                    for w in check_torsion_theory(&u, &tau).witnesses {
                        s.report.fail("fixture.torsion", format!("{}: {}", w.property, w.data));
                    }
                }
                Err(e) => s.report.fail("fixture.torsion", e.to_string()),
            });
            invalid |= !section.report.passed();
            report.push(section);
        }
    }
    Ok(Outcome { report, invalid_input: invalid })
}

fn torsion_names(files: &[PathBuf]) -> Vec<String> {
    files
        .iter()
        .flat_map(|p| {
            let text = fs::read_to_string(p).unwrap_or_default();
            crate::fixture::parse("", &text).0.torsions.into_iter().map(|t| t.name)
        })
        .collect()
}

fn rows_text(u: &Universe, i: usize) -> String {
    u.act(i)
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn universe_cmd(ws: &Workspace, monoid: &str, n: usize, err: &mut dyn Write) -> Result<Report, CliError> {
    let start = Instant::now();
    let (u, source) = ws.universe(monoid, n)?;
    let how = match source {
        Source::Built => "built",
        Source::Loaded => "loaded from cache",
        Source::Rebuilt => "rebuilt (stale cache entry replaced)",
    };
    let _ = writeln!(err, "universe {monoid}/{n} {how}");
    let mut s = Section::new("universe", format!("{monoid}/{n}"));
    s.info("acts", u.len());
    let sizes: Vec<String> = u.size_counts().iter().map(ToString::to_string).collect();
    s.info("acts by size", sizes.join(" "));
    for i in 0..u.len() {
        s.info(u.name(i), rows_text(&u, i));
    }
    s.elapsed = start.elapsed();
    let mut report = Report::new("universe");
    report.push(s);
    Ok(report)
}

/// Universe named by `--universe`, else by the first radical fixture target.
fn check_universe(
    ws: &Workspace,
    spec: Option<&str>,
    targets: &[String],
    max_size: Option<usize>,
) -> Result<(String, Arc<Universe>), CliError> {
    let (monoid, n) = match spec {
        Some(spec) => universe_spec(spec, max_size)?,
        None => {
            let def = targets
                .iter()
                .find_map(|t| ws.radical_def(t))
                .ok_or_else(|| CliError::Usage("no universe: pass --universe <monoid>[/<size>]".into()))?;
            (def.monoid.clone(), def.max_size)
        }
    };
    let (u, _) = ws.universe(&monoid, n)?;
    Ok((monoid, u))
}

fn filter_of(suite: Suite) -> RadicalFilter {
    match suite {
        Suite::Hereditary => RadicalFilter::Hereditary,
        Suite::Ka => RadicalFilter::Ka,
        _ => RadicalFilter::Hoehnke,
    }
}

fn filter_name(f: RadicalFilter) -> &'static str {
    match f {
        RadicalFilter::Hoehnke => "hoehnke",
        RadicalFilter::Hereditary => "hereditary",
        RadicalFilter::Ka => "ka",
    }
}

/// Named radicals, or every enumerated radical passing the suite's filter.
fn radical_targets(
    ws: &Workspace,
    monoid: &str,
    u: &Universe,
    targets: &[String],
    filter: RadicalFilter,
) -> Result<Vec<(String, RadicalAssignment)>, CliError> {
    if targets.is_empty() {
        let all = enumerate_radicals(u, filter, &ws.bounds)?;
        let name = filter_name(filter);
        return Ok(all.into_iter().enumerate().map(|(k, r)| (format!("{name}#{k}"), r)).collect());
    }
    targets.iter().map(|t| Ok((t.clone(), ws.radical(t, monoid, u)?))).collect()
}

fn pair_targets(ws: &Workspace, u: &Universe, targets: &[String]) -> Result<Vec<(String, TorsionPair)>, CliError> {
    if targets.is_empty() {
        let kas = enumerate_radicals(u, RadicalFilter::Ka, &ws.bounds)?;
        return Ok(kas
            .iter()
            .enumerate()
            .map(|(k, r)| (format!("ka#{k}"), TorsionPair::new(radical_class(u, r), semisimple_class(u, r))))
            .collect());
    }
    targets.iter().map(|t| Ok((t.clone(), ws.torsion(t, u)?))).collect()
}

fn check(
    ws: &Workspace,
    suite: Suite,
    targets: &[String],
    spec: Option<&str>,
    max_size: Option<usize>,
) -> Result<Report, CliError> {
    let (monoid, u) = check_universe(ws, spec, targets, max_size)?;
    let u = &*u;
    let suite_name = format!("{suite:?}").to_lowercase();
    let mut report = Report::new(format!("check {suite_name}"));
    let subject = |name: &str| format!("{name} over {monoid}/{}", u.max_size());
    match suite {
        Suite::Hoehnke | Suite::Hereditary | Suite::Ka | Suite::Redundancy => {
            for (name, r) in radical_targets(ws, &monoid, u, targets, filter_of(suite))? {
                report.push(timed(Section::new(&suite_name, subject(&name)), |s| {
                    let h = check_hoehnke(u, &r);
                    s.report = match suite {
                        Suite::Hoehnke => h,
                        Suite::Hereditary => with_precondition(h, check_hereditary(u, &r)),
                        Suite::Ka => with_precondition(h, check_ka(u, &r)),
                        _ => with_precondition(h, check_ka_redundancy(u, &r)),
                    };
                }));
            }
        }
        Suite::Reflection => {
            let hoehnke = enumerate_radicals(u, RadicalFilter::Hoehnke, &ws.bounds)?;
            let ka = enumerate_radicals(u, RadicalFilter::Ka, &ws.bounds)?;
            let chosen = if targets.is_empty() {
                hoehnke.iter().enumerate().map(|(k, r)| (format!("hoehnke#{k}"), r.clone())).collect()
            } else {
                radical_targets(ws, &monoid, u, targets, RadicalFilter::Hoehnke)?
            };
            for (name, r) in chosen {
                report.push(timed(Section::new("reflection", subject(&name)), |s| {
                    s.report = verify_reflection(u, &r, &ka, &hoehnke);
                    s.info("ka radicals", ka.len());
                    s.info("hoehnke radicals", hoehnke.len());
                }));
            }
        }
        Suite::Pair => {
            for (name, tau) in pair_targets(ws, u, targets)? {
                report.push(timed(Section::new("pair", subject(&name)), |s| {
                    s.report = check_pair_conditions(u, &tau.torsion, &tau.torsion_free);
                }));
            }
        }
        Suite::Torsion => {
            let pairs = if targets.is_empty() {
                enumerate_torsion_pairs(u, &ws.bounds)?
                    .into_iter()
                    .enumerate()
                    .map(|(k, t)| (format!("torsion#{k}"), t))
                    .collect()
            } else {
                pair_targets(ws, u, targets)?
            };
            for (name, tau) in pairs {
                report.push(timed(Section::new("torsion", subject(&name)), |s| {
                    s.report = check_torsion_theory(u, &tau);
                    if s.report.passed() {
                        match ka_from_torsion(u, &tau) {
                            Ok((_, findings)) => s.report.extend(findings),
                            Err(e) => s.report.fail("torsion.radical", e.to_string()),
                        }
                    }
                }));
            }
        }
        Suite::Closure => {
            let classes: Vec<(ActClass, bool, bool)> = if targets.is_empty() {
                let mut v = Vec::new();
                for tau in enumerate_torsion_pairs(u, &ws.bounds)? {
                    v.push((tau.torsion, true, false));
                    v.push((tau.torsion_free, false, true));
                }
                v
            } else {
                targets.iter().map(|t| Ok((ws.class(t, u)?, true, true))).collect::<Result<_, CliError>>()?
            };
            for (c, radical, semisimple) in classes {
                let label = c.describe_nontrivial(u);
                if radical {
                    report
                        .push(timed(Section::new("radical-closure", subject(&format!("{} {label}", c.label))), |s| {
                            s.report = check_radical_closure(u, &c)
                        }));
                }
                if semisimple {
                    report.push(timed(
                        Section::new("semisimple-closure", subject(&format!("{} {label}", c.label))),
                        |s| s.report = check_semisimple_closure(u, &c),
                    ));
                }
            }
        }
    }
    Ok(report)
}

// a failed Hoehnke precondition is reported under its own ids
fn with_precondition(pre: AxiomReport, main: AxiomReport) -> AxiomReport {
    let mut out = pre;
    out.extend(main);
    out
}

fn reflect_cmd(ws: &Workspace, name: &str, spec: Option<&str>, max_size: Option<usize>) -> Result<Report, CliError> {
    let (monoid, u) = check_universe(ws, spec, &[name.to_string()], max_size)?;
    let r = ws.radical(name, &monoid, &u)?;
    let start = Instant::now();
    let rk = reflect(&u, &r)?;
    let out_name = format!("{name}_k");
    let path = ws.dir.join(format!("{out_name}.sact"));
    fs::write(&path, render_radical(&out_name, &monoid, &u, &rk))
        .map_err(|e| CliError::Usage(format!("cannot write `{}`: {e}", path.display())))?;
    let mut s = Section::new("reflect", format!("{name} over {monoid}/{}", u.max_size()));
    s.info("written", format!("{out_name}.sact"));
    let changed = (0..u.len()).filter(|&i| rk.value(i) != r.value(i)).count();
    s.info("acts changed", changed);
    for i in 0..u.len() {
        s.info(u.name(i), rk.value(i));
    }
    s.elapsed = start.elapsed();
    let mut report = Report::new("reflect");
    report.push(s);
    Ok(report)
}

fn enumerate_cmd(ws: &Workspace, filter: FilterArg, spec: &str, max_size: Option<usize>) -> Result<Report, CliError> {
    let (monoid, n) = universe_spec(spec, max_size)?;
    let (u, _) = ws.universe(&monoid, n)?;
    let filter = match filter {
        FilterArg::Hoehnke => RadicalFilter::Hoehnke,
        FilterArg::Hereditary => RadicalFilter::Hereditary,
        FilterArg::Ka => RadicalFilter::Ka,
    };
    let start = Instant::now();
    let all = enumerate_radicals(&u, filter, &ws.bounds)?;
    let name = filter_name(filter);
    let mut s = Section::new("enumerate-radicals", format!("{name} over {monoid}/{n}"));
    s.info("search space", sact::radical::search_space(&u));
    s.info("count", all.len());
    for (k, r) in all.iter().enumerate() {
        let values: Vec<String> = (0..u.len()).map(|i| format!("{} : {}", u.name(i), r.value(i))).collect();
        s.info(format!("{name}#{k}"), values.join("; "));
    }
    s.elapsed = start.elapsed();
    let mut report = Report::new("enumerate-radicals");
    report.push(s);
    Ok(report)
}

fn coproduct_cmd(ws: &Workspace, classes: &[String], spec: &str, max_size: Option<usize>) -> Result<Report, CliError> {
    let (monoid, n) = universe_spec(spec, max_size)?;
    let (u, _) = ws.universe(&monoid, n)?;
    let chosen: Vec<ActClass> = if classes.is_empty() {
        let mut v: Vec<ActClass> = Vec::new();
        for tau in enumerate_torsion_pairs(&u, &ws.bounds)? {
            for c in [tau.torsion, tau.torsion_free] {
                if !v.iter().any(|x| x.same_members(&c)) {
                    v.push(c);
                }
            }
        }
        v
    } else {
        classes.iter().map(|c| ws.class(c, &u)).collect::<Result<_, _>>()?
    };
    let mut report = Report::new("coproduct-check");
    for c in chosen {
        let label = format!("{} {} over {monoid}/{n}", c.label, c.describe_nontrivial(&u));
        report.push(timed(Section::new("coproducts", label), |s| {
            s.report = coproduct_closure_check(&u, &c);
            if s.report.passed() {
                s.info("result", "no witness at this scale");
            }
        }));
    }
    Ok(report)
}
