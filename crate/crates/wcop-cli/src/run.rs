//! Command execution: resolve scenarios, run the checkers, render canonical
//! output, map outcomes to exit codes.

use crate::canon::{format_float, to_canonical_string, Json};
use crate::cli::{
    expand_seed_spec, parse_tolerances, BuiltinKind, Cli, Command, CommandArgs, Format,
    EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK,
};
use crate::scenario_file;
use wcop::measure::{l2_norm, L2Function};
use wcop::operator::{apply_operator, kernel_projector, radon_nikodym};
use wcop::reciprocal::{
    adjoint_reciprocal_matrix, derived_one_hat, derived_weight_hat,
    multiplication_reciprocal_diagonal, reciprocal_pair,
};
use wcop::scenario::{line_index, ScenarioKind, ScenarioSpec};
use wcop::suite::{self};
use wcop::{oracle, Profile64, Report64, Symbol64, Tolerances64};

/// A resolved scenario with provenance for report diagnostics.
#[derive(Debug)]
pub struct ScenarioInstance {
    pub id: String,
    pub symbol: Symbol64,
    pub source: Source,
}

#[derive(Debug)]
pub enum Source {
    File,
    Builtin(BuiltinKind),
}

/// Parses argv and runs; returns the process exit code.
pub fn main_entry<I, S>(argv: I) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT_ERROR,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("wcop: {message}");
            EXIT_INPUT_ERROR
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Verify(args) => {
            let tol = parse_tolerances(&args.tolerances)?;
            let scenarios = resolve_scenarios(&args)?;
            let (json, text, all_passed) = run_verify(&scenarios, &tol);
            emit(&args, json, text)?;
            Ok(if all_passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Report(args) => {
            parse_tolerances(&args.tolerances)?;
            let scenarios = resolve_scenarios(&args)?;
            let (json, text) = run_report(&scenarios)?;
            emit(&args, json, text)?;
            Ok(EXIT_OK)
        }
        Command::Conditions(args) => {
            let tol = parse_tolerances(&args.tolerances)?;
            let scenarios = resolve_scenarios(&args)?;
            let (json, text, all_passed) = run_conditions(&scenarios, &tol);
            emit(&args, json, text)?;
            Ok(if all_passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn emit(args: &CommandArgs, json: Json, text: String) -> Result<(), String> {
    let payload = match args.format {
        Format::Json => to_canonical_string(&json),
        Format::Text => text,
    };
    match &args.out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

/// Expands the scenario source into concrete symbols. Input problems map to
/// exit code 2 through the `Err` channel.
pub fn resolve_scenarios(args: &CommandArgs) -> Result<Vec<ScenarioInstance>, String> {
    if let Some(path) = &args.scenario {
        let (id, symbol) = scenario_file::load(path).map_err(|e| e.to_string())?;
        return Ok(vec![ScenarioInstance {
            id,
            symbol,
            source: Source::File,
        }]);
    }
    let Some(kind) = args.builtin else {
        return Err("one of --scenario or --builtin is required".to_string());
    };
    let n = args
        .n
        .ok_or_else(|| format!("--builtin {} requires --n", kind.as_str()))?;
    let specs: Vec<ScenarioSpec<f64>> = match kind {
        BuiltinKind::Hiszpa => {
            let mut spec = ScenarioSpec::builtin(ScenarioKind::Hiszpa, n);
            spec.alpha = args.alpha;
            vec![spec]
        }
        BuiltinKind::HiszpaPlus => vec![ScenarioSpec::builtin(ScenarioKind::HiszpaPlus, n)],
        BuiltinKind::HiszpaMinus => {
            let mut spec = ScenarioSpec::builtin(ScenarioKind::HiszpaMinus, n);
            spec.mass_ratio = args.q;
            vec![spec]
        }
        BuiltinKind::Random => {
            let mut seeds = Vec::new();
            for spec in &args.seeds {
                seeds.extend(expand_seed_spec(spec)?);
            }
            if seeds.is_empty() {
                return Err("no scenarios: --builtin random requires at least one \
                            --seed (ranges a..b are inclusive)"
                    .to_string());
            }
            seeds
                .into_iter()
                .map(|seed| ScenarioSpec::random(n, seed, args.profile.into()))
                .collect()
        }
    };
    specs
        .into_iter()
        .map(|spec| {
            let symbol = spec.generate().map_err(|e| e.to_string())?;
            Ok(ScenarioInstance {
                id: spec.id(),
                symbol,
                source: Source::Builtin(kind),
            })
        })
        .collect()
}

/// One merged report per scenario: every applicable checker contributes its
/// checks; precondition-gated checkers degrade to an informational note.
pub fn verification_report(scenario: &ScenarioInstance, tol: &Tolerances64) -> Report64 {
    let id = scenario.id.as_str();
    let symbol = &scenario.symbol;
    let mut report = Report64::new(id);
    report.absorb(suite::check_reciprocal_formula(id, symbol, tol));
    report.absorb(suite::check_adjoint_formulas(id, symbol, tol));
    report.absorb(suite::check_adjoint_quotient(id, symbol, tol));
    report.absorb(suite::check_product_reciprocal(id, symbol, tol));

    let profile = suite::evaluate_conditions(id, symbol, tol);
    suite::profile_as_checks(&profile, &mut report);
    report.absorb(suite::check_condition_implications(
        id,
        std::slice::from_ref(&profile),
        tol,
    ));

    report.absorb(suite::check_ssrk(id, symbol, tol));
    match suite::check_konopiste(id, symbol, tol) {
        Ok(partial) => report.absorb(partial),
        Err(e) => report.record_informational(
            "konopiste_skipped",
            0.0,
            format!("precondition not met: {e}"),
        ),
    }
    match suite::check_wariat(id, symbol, tol) {
        Ok(partial) => report.absorb(partial),
        Err(e) => report.record_informational(
            "wariat_skipped",
            0.0,
            format!("precondition not met: {e}"),
        ),
    }
    report
}

fn run_verify(
    scenarios: &[ScenarioInstance],
    tol: &Tolerances64,
) -> (Json, String, bool) {
    let reports: Vec<Report64> = scenarios
        .iter()
        .map(|scenario| verification_report(scenario, tol))
        .collect();
    let all_passed = reports.iter().all(Report64::all_passed);
    let json = Json::Arr(reports.iter().map(report_json).collect());
    let mut text = String::new();
    for report in &reports {
        text.push_str(&report_text(report));
    }
    text.push_str(if all_passed {
        "overall: PASS\n"
    } else {
        "overall: FAIL\n"
    });
    (json, text, all_passed)
}

fn report_json(report: &Report64) -> Json {
    Json::Obj(vec![
        (
            "scenario_id".to_string(),
            Json::Str(report.scenario_id().to_string()),
        ),
        (
            "checks".to_string(),
            Json::Arr(report.checks().iter().map(check_json).collect()),
        ),
    ])
}

fn check_json(check: &wcop::Check<f64>) -> Json {
    Json::Obj(vec![
        ("name".to_string(), Json::Str(check.name.clone())),
        ("residual".to_string(), Json::Num(check.residual)),
        ("tolerance".to_string(), Json::Num(check.tolerance)),
        ("passed".to_string(), Json::Bool(check.passed)),
        ("notes".to_string(), Json::Str(check.notes.clone())),
    ])
}

fn report_text(report: &Report64) -> String {
    let mut out = format!("scenario {}\n", report.scenario_id());
    for check in report.checks() {
        out.push_str(&format!(
            "  [{}] {:<40} residual {:>24}  tolerance {:>24}  {}\n",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            format_float(check.residual),
            format_float(check.tolerance),
            check.notes,
        ));
    }
    out
}

fn run_report(scenarios: &[ScenarioInstance]) -> Result<(Json, String), String> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for scenario in scenarios {
        let quantities = quantities_json(scenario)?;
        text.push_str(&format!("scenario {}\n", scenario.id));
        for (name, _) in &quantities {
            text.push_str(&format!("  quantity {name}\n"));
        }
        entries.push(Json::Obj(vec![
            ("scenario_id".to_string(), Json::Str(scenario.id.clone())),
            ("checks".to_string(), Json::Arr(Vec::new())),
            ("quantities".to_string(), Json::Obj(quantities)),
        ]));
    }
    Ok((Json::Arr(entries), text))
}

fn quantities_json(scenario: &ScenarioInstance) -> Result<Vec<(String, Json)>, String> {
    let symbol = &scenario.symbol;
    let unit = symbol.with_unit_weight();
    let pair = reciprocal_pair(symbol);
    let decomposition = oracle::svd(&pair.forward).map_err(|e| e.to_string())?;

    let mut quantities: Vec<(String, Json)> = vec![
        (
            "h_phi_w".to_string(),
            Json::real_vec(radon_nikodym(symbol).values()),
        ),
        (
            "h_phi".to_string(),
            Json::real_vec(radon_nikodym(&unit).values()),
        ),
        (
            "w_hat".to_string(),
            Json::complex_vec(derived_weight_hat(symbol).weight()),
        ),
        (
            "one_hat".to_string(),
            Json::complex_vec(derived_one_hat(symbol).weight()),
        ),
        ("forward_matrix".to_string(), Json::matrix(&pair.forward)),
        (
            "reciprocal_matrix".to_string(),
            Json::matrix(&pair.reciprocal),
        ),
        (
            "adjoint_reciprocal_matrix".to_string(),
            Json::matrix(&adjoint_reciprocal_matrix(symbol)),
        ),
        (
            "multiplication_reciprocal_diagonal".to_string(),
            Json::complex_vec(&multiplication_reciprocal_diagonal(symbol.weight())),
        ),
        (
            "composition_reciprocal_matrix".to_string(),
            Json::matrix(&suite::composition_reciprocal_matrix(symbol)),
        ),
        ("range_projection".to_string(), Json::matrix(&pair.range_proj)),
        (
            "kernel_projection".to_string(),
            Json::matrix(&kernel_projector(symbol)),
        ),
        (
            "singular_values".to_string(),
            Json::real_vec(decomposition.singular_values()),
        ),
    ];

    // Truncation trend diagnostics: reported, never asserted; the
    // properties they hint at (non-dense domains, non-closed products) only
    // exist on the infinite spaces.
    if let Source::Builtin(kind) = scenario.source {
        let n = trend_truncation(symbol, kind);
        match kind {
            BuiltinKind::HiszpaPlus => {
                let h = radon_nikodym(&unit);
                quantities.push((
                    "trend_h_phi_at_zero".to_string(),
                    Json::Num(h.value(line_index(n, 0))),
                ));
            }
            BuiltinKind::HiszpaMinus => {
                let space = symbol.space();
                let ratios: Vec<f64> = (1..=n as i64)
                    .map(|k| {
                        space.mass(line_index(n, -k)) / space.mass(line_index(n, -k + 1))
                    })
                    .collect();
                quantities.push(("trend_mass_ratio".to_string(), Json::real_vec(&ratios)));
                let growth: Vec<f64> = (1..=n as i64)
                    .map(|k| {
                        let basis = L2Function::basis(symbol.size(), line_index(n, -k));
                        let weighted = l2_norm(space, &apply_operator(symbol, &basis));
                        let plain = l2_norm(space, &apply_operator(&unit, &basis));
                        if plain > 0.0 {
                            weighted / plain
                        } else {
                            0.0
                        }
                    })
                    .collect();
                quantities.push((
                    "trend_weighted_to_plain_norm_ratio".to_string(),
                    Json::real_vec(&growth),
                ));
            }
            _ => {}
        }
    }
    Ok(quantities)
}

fn trend_truncation(symbol: &Symbol64, kind: BuiltinKind) -> usize {
    match kind {
        BuiltinKind::HiszpaPlus | BuiltinKind::HiszpaMinus => (symbol.size() - 1) / 2,
        _ => 0,
    }
}

fn run_conditions(
    scenarios: &[ScenarioInstance],
    tol: &Tolerances64,
) -> (Json, String, bool) {
    let profiles: Vec<Profile64> = scenarios
        .iter()
        .map(|scenario| suite::evaluate_conditions(&scenario.id, &scenario.symbol, tol))
        .collect();
    let sweep_id = if scenarios.len() == 1 {
        scenarios[0].id.clone()
    } else {
        format!("sweep-{}-scenarios-{}", scenarios[0].id, scenarios.len())
    };
    let chain = suite::check_condition_implications(&sweep_id, &profiles, tol);
    let all_passed = chain.all_passed();

    let json = Json::Obj(vec![
        ("scenario_id".to_string(), Json::Str(sweep_id.clone())),
        (
            "checks".to_string(),
            Json::Arr(chain.checks().iter().map(check_json).collect()),
        ),
        (
            "profiles".to_string(),
            Json::Arr(profiles.iter().map(profile_json).collect()),
        ),
    ]);

    let mut text = format!("conditions sweep {sweep_id}\n");
    for profile in &profiles {
        text.push_str(&format!(
            "  {}: a1 {} | a2 {} | a3 {} | b1 {} | b2 {} | c {}\n",
            profile.scenario_id,
            profile.a1.status.as_str(),
            profile.a2.status.as_str(),
            profile.a3.status.as_str(),
            profile.b1.status.as_str(),
            profile.b2.status.as_str(),
            profile.c.status.as_str(),
        ));
    }
    text.push_str(&report_text(&chain));
    text.push_str(if all_passed {
        "overall: PASS\n"
    } else {
        "overall: FAIL\n"
    });
    (json, text, all_passed)
}

fn profile_json(profile: &Profile64) -> Json {
    let condition = |check: &wcop::ConditionCheck<f64>| {
        Json::Obj(vec![
            (
                "status".to_string(),
                Json::Str(check.status.as_str().to_string()),
            ),
            ("residual".to_string(), Json::Num(check.residual)),
        ])
    };
    Json::Obj(vec![
        (
            "scenario_id".to_string(),
            Json::Str(profile.scenario_id.clone()),
        ),
        ("a1".to_string(), condition(&profile.a1)),
        ("a2".to_string(), condition(&profile.a2)),
        ("a3".to_string(), condition(&profile.a3)),
        ("b1".to_string(), condition(&profile.b1)),
        ("b2".to_string(), condition(&profile.b2)),
        ("c".to_string(), condition(&profile.c)),
        ("notes".to_string(), Json::Str(profile.notes.clone())),
    ])
}
