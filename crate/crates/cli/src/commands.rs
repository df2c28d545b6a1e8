use serde::Serialize;
use serde_json::{json, Map, Value};

use qcat::alcove::{build_alcove, AlcoveCategory};
use qcat::braid::{coboundary, duality_report, pair_braiding, pair_braidings, pair_duality};
use qcat::wqh::{
    apply_twist, build_aw, coboundary_twist, gauge_rigidity_experiment, random_gauge, AxiomSummary, GaugeInvariants,
    SixJTable, MAX_AW_LEVEL,
};
use qcat::CycloNumber;

use crate::config::RunConfig;
use crate::output::{Artifact, Check};

/// Largest A1 level for which `verify` runs the pentagon and hexagon suites.
pub const MAX_SIXJ_LEVEL: i64 = 6;
/// Largest A1 level for which `verify` builds `A_W`; bigger levels are slow.
pub const MAX_VERIFY_AW_LEVEL: i64 = 3;

#[derive(Debug)]
pub enum CmdError {
    /// Unsupported or malformed configuration (exit code 2).
    Config(String),
}

impl std::fmt::Display for CmdError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CmdError::Config(m) => f.write_str(m),
        }
    }
}

fn config_err(e: impl std::fmt::Display) -> CmdError {
    CmdError::Config(e.to_string())
}

fn category(cfg: &RunConfig) -> Result<AlcoveCategory, CmdError> {
    build_alcove(cfg.root_system.clone(), cfg.level).map_err(config_err)
}

fn conventions(cat: &AlcoveCategory, cfg: &RunConfig) -> Map<String, Value> {
    let Value::Object(mut m) = serde_json::to_value(cat.conventions()).expect("conventions serialize") else {
        unreachable!("conventions are a struct");
    };
    m.insert("exact_numbers".into(), json!("{order N, coeffs}: sum_j coeffs[j] zeta_N^j, power basis of Q(zeta_N)"));
    m.insert(
        "pair_braiding".into(),
        json!("R on channel nu of V_lambda (x) V is eps_nu exp(2 pi i (c_nu - c_lambda - c_V) / 4ell)"),
    );
    m.insert("rbar_branch".into(), json!("principal: Rbar = eps_nu"));
    m.insert("seed".into(), json!(cfg.seed));
    m
}

fn sixj_conventions(m: &mut Map<String, Value>) {
    m.insert(
        "f_symbols".into(),
        json!("|a,b;e>|e,c;d> = sum_f F^{abc}_d[e,f] |b,c;f>|a,f;d>, square-root-free vertex gauge"),
    );
    m.insert("r_symbols".into(), json!("R^{ab}_c = (-1)^{(a+b-c)/2} zeta_{4ell}^{(c(c+2)-a(a+2)-b(b+2))/2}"));
}

fn a1_level(cfg: &RunConfig, what: &str) -> Result<u8, CmdError> {
    if !cfg.is_a1() {
        return Err(CmdError::Config(format!("{what} is available for type A1 only")));
    }
    u8::try_from(cfg.level).map_err(config_err)
}

pub fn fusion(cfg: &RunConfig) -> Result<Artifact, CmdError> {
    let cat = category(cfg)?;
    let table = cat.fusion_table();
    let csv: Vec<String> = table.to_csv().lines().map(str::to_string).collect();
    let mut pretty = vec![format!("{} simple objects", cat.rank())];
    for (a, row) in cat.fusion.iter().enumerate() {
        for (b, col) in row.iter().enumerate().skip(a) {
            let terms: Vec<String> = col
                .iter()
                .enumerate()
                .filter(|(_, m)| **m > 0)
                .map(|(c, m)| if *m == 1 { cat.weights[c].to_string() } else { format!("{m}·{}", cat.weights[c]) })
                .collect();
            pretty.push(format!("{} ⊗ {} = {}", cat.weights[a], cat.weights[b], terms.join(" + ")));
        }
    }
    let checks = vec![
        Check::new("fusion associativity", cat.associativity_violations() == 0),
        Check::new("commutativity and unit", cat.ring_axiom_violations() == 0),
    ];
    Ok(Artifact {
        conventions: conventions(&cat, cfg),
        payload: json!({ "weights": table.weights, "N": table.n }),
        checks,
        csv,
        pretty,
    })
}

pub fn modular(cfg: &RunConfig) -> Result<Artifact, CmdError> {
    let cat = category(cfg)?;
    let mut conv = conventions(&cat, cfg);
    let data = match cat.modular_data() {
        Ok(d) => d,
        Err(e) => {
            return Ok(Artifact {
                conventions: conv,
                payload: Value::Null,
                checks: vec![Check::new("S·S* is a nonzero scalar", false).with_counterexample(e.to_string())],
                csv: Vec::new(),
                pretty: vec![e.to_string()],
            })
        }
    };
    conv.insert("global_dimension_squared".into(), json!(data.global_dim2.to_string()));
    let report = cat.modular_report(&data);
    let n = cat.rank();
    let mut csv = vec!["i,j,S,T".to_string()];
    let mut pretty = vec!["S:".to_string()];
    for i in 0..n {
        for j in 0..n {
            let t = if i == j { data.t[(i, i)].to_string() } else { String::new() };
            csv.push(format!("{i},{j},\"{}\",\"{t}\"", data.s[(i, j)]));
        }
        let row: Vec<String> = (0..n).map(|j| data.s[(i, j)].to_string()).collect();
        pretty.push(format!("  {}: [{}]", cat.weights[i], row.join(", ")));
    }
    pretty.push("T:".into());
    for i in 0..n {
        pretty.push(format!("  {}: {}", cat.weights[i], data.t[(i, i)]));
    }
    let checks = vec![
        Check::new("S·S* is a nonzero scalar", report.s_unitary_up_to_scale),
        Check::new("(ST)^3 proportional to S^2", report.st_cubed_proportional),
        Check::new("modular report", report.all_ok()).with_counterexample(&report),
    ];
    let mut payload = cat.modular_json(&data);
    if let Value::Object(m) = &mut payload {
        m.remove("conventions");
    }
    Ok(Artifact { conventions: conv, payload, checks, csv, pretty })
}

pub fn duality(cfg: &RunConfig) -> Result<Artifact, CmdError> {
    let cat = category(cfg)?;
    let pairs = pair_duality(&cat).map_err(config_err)?;
    let mut checks = vec![Check::new(
        "n=2 pair level: distinct channel eigenvalues span",
        pairs.iter().all(|p| !p.distinct_eigenvalues || p.duality),
    )
    .with_counterexample(pairs.iter().find(|p| p.distinct_eigenvalues && !p.duality))];
    let mut csv = vec!["n,centralizer_dim,braid_image_dim,duality".to_string()];
    let mut pretty = Vec::new();
    for p in &pairs {
        pretty.push(format!("V = {}: {} channels, image dimension {}", p.v, p.channels, p.image_dim));
    }
    let mut tower = Value::Null;
    if cfg.is_a1() {
        let entries = duality_report(&cat, cfg.n_max).map_err(config_err)?;
        for e in &entries {
            csv.push(format!("{},{},{},{}", e.n, e.centralizer_dim, e.braid_image_dim, e.duality));
            pretty.push(format!(
                "n={}: centralizer {} braid image {} {}",
                e.n,
                e.centralizer_dim,
                e.braid_image_dim,
                if e.duality { "equal" } else { "DIFFERENT" }
            ));
        }
        checks.push(
            Check::new(format!("braid image = centralizer, n ≤ {}", cfg.n_max), entries.iter().all(|e| e.duality))
                .with_counterexample(entries.iter().find(|e| !e.duality)),
        );
        tower = serde_json::to_value(&entries).expect("duality report serializes");
    } else {
        for p in &pairs {
            csv.push(format!("2,{},{},{}", p.channels, p.image_dim, p.duality));
        }
    }
    Ok(Artifact {
        conventions: conventions(&cat, cfg),
        payload: json!({ "pairs": pairs, "tower": tower }),
        checks,
        csv,
        pretty,
    })
}

#[derive(Serialize)]
struct Failure {
    lambda: String,
    error: String,
}

fn coboundary_check(cat: &AlcoveCategory) -> Check {
    let mut failure = None;
    for lambda in &cat.weights {
        match pair_braidings(cat, lambda) {
            Ok(pbs) => {
                for pb in pbs {
                    let cb = coboundary(&pb);
                    if !(cb.is_involutive() && cb.is_unitary()) {
                        failure.get_or_insert(Failure { lambda: lambda.to_string(), error: format!("{:?}", cb.rbar_blocks) });
                    }
                }
            }
            Err(e) => {
                failure.get_or_insert(Failure { lambda: lambda.to_string(), error: e.to_string() });
            }
        }
    }
    Check::new("Rbar involutive and unimodular on (V_lambda, V)", failure.is_none()).with_counterexample(failure)
}

fn truncation_check(cat: &AlcoveCategory, n_max: usize) -> Result<Check, CmdError> {
    let powers = cat.truncated_powers(n_max).map_err(config_err)?;
    let mut bad = None;
    for p in &powers {
        for w in p.decomposition.keys() {
            let d = cat.qdim(w).map_err(config_err)?.to_complex64();
            if !(d.re > 0.0 && d.im.abs() < 1e-12) {
                bad.get_or_insert(json!({ "n": p.n, "weight": w.to_string() }));
            }
        }
    }
    Ok(Check::new(format!("summands of V^n, n ≤ {n_max}, have positive qdim"), bad.is_none()).with_counterexample(bad))
}

pub fn verify(cfg: &RunConfig) -> Result<Artifact, CmdError> {
    let cat = category(cfg)?;
    let mut conv = conventions(&cat, cfg);
    let mut checks = vec![
        Check::new("fusion associativity", cat.associativity_violations() == 0),
        Check::new("commutativity and unit", cat.ring_axiom_violations() == 0),
        Check::new("qdim multiplicativity", cat.qdim_multiplicativity_violations() == 0),
        Check::new("qdims positive", cat.qdims_positive().map_err(config_err)?),
    ];
    let mut payload = Map::new();
    match cat.modular_data() {
        Ok(data) => {
            let report = cat.modular_report(&data);
            checks.push(Check::new("S·S* is a nonzero scalar", report.s_unitary_up_to_scale));
            checks.push(Check::new("(ST)^3 proportional to S^2", report.st_cubed_proportional));
            checks.push(Check::new("modular report", report.all_ok()).with_counterexample(&report));
            let v = cat.verlinde_check(&data).map_err(config_err)?;
            checks.push(Check::new("Verlinde integrality", v.passed()).with_counterexample(v.violations.first()));
            payload.insert("verlinde_triples".into(), json!(v.triples_checked));
        }
        Err(e) => checks.push(Check::new("S·S* is a nonzero scalar", false).with_counterexample(e.to_string())),
    }
    checks.push(truncation_check(&cat, cfg.n_max)?);
    let pairs = pair_duality(&cat).map_err(config_err)?;
    checks.push(
        Check::new(
            "n=2 pair level: distinct channel eigenvalues span",
            pairs.iter().all(|p| !p.distinct_eigenvalues || p.duality),
        )
        .with_counterexample(pairs.iter().find(|p| p.distinct_eigenvalues && !p.duality)),
    );
    checks.push(coboundary_check(&cat));

    if cfg.is_a1() {
        let entries = duality_report(&cat, cfg.n_max).map_err(config_err)?;
        checks.push(
            Check::new(format!("braid image = centralizer, n ≤ {}", cfg.n_max), entries.iter().all(|e| e.duality))
                .with_counterexample(entries.iter().find(|e| !e.duality)),
        );
        if cfg.level <= MAX_SIXJ_LEVEL {
            sixj_conventions(&mut conv);
            verify_sixj(cfg, &mut checks, &mut payload)?;
        } else {
            payload.insert("skipped".into(), json!(format!("F/R suites run for level ≤ {MAX_SIXJ_LEVEL}")));
        }
    }
    let pretty = checks.iter().map(|c| format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)).collect();
    let mut csv = vec!["check,passed".to_string()];
    csv.extend(checks.iter().map(|c| format!("\"{}\",{}", c.name, c.passed)));
    Ok(Artifact { conventions: conv, payload: Value::Object(payload), checks, csv, pretty })
}

fn verify_sixj(cfg: &RunConfig, checks: &mut Vec<Check>, payload: &mut Map<String, Value>) -> Result<(), CmdError> {
    let k = a1_level(cfg, "the F/R suite")?;
    let table = SixJTable::q_racah(k).map_err(config_err)?;
    let summary = AxiomSummary::new(&table);
    for r in &summary.reports {
        checks.push(Check::new(r.family.clone(), r.passed()).with_counterexample(&r.first_counterexample));
    }
    payload.insert("axioms".into(), summary.to_json());
    let rigidity = gauge_rigidity_experiment(&table, cfg.trials, cfg.seed).map_err(config_err)?;
    checks.push(
        Check::new(format!("{} random gauges keep axioms and invariants", cfg.trials), rigidity.axioms_preserved == rigidity.trials && rigidity.invariants_preserved == rigidity.trials)
            .with_counterexample(&rigidity),
    );
    checks.push(
        Check::new(format!("{} perturbed tables violate the pentagon", cfg.trials), rigidity.negative_controls.passed())
            .with_counterexample(&rigidity.negative_controls),
    );
    payload.insert("rigidity".into(), serde_json::to_value(&rigidity).expect("report serializes"));
    if cfg.level <= MAX_VERIFY_AW_LEVEL && k <= MAX_AW_LEVEL {
        let w = build_aw(k).map_err(config_err)?;
        let report = w.check().map_err(config_err)?;
        checks.push(Check::new("weak quasi-bialgebra axioms", report.passed()).with_counterexample(&report));
        let j = random_gauge(k, &mut seeded(cfg.seed));
        let round_trip = apply_twist(&w, &j)
            .and_then(|m| apply_twist(&m, &j.inverse()?))
            .map(|back| back == w)
            .unwrap_or(false);
        checks.push(Check::new("twist round trip", round_trip));
        payload.insert("weak_axioms".into(), serde_json::to_value(&report).expect("report serializes"));
    }
    Ok(())
}

fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Serialize)]
struct TwistRow {
    lambda: u8,
    mu: u8,
    nu: u8,
    before: CycloNumber,
    after: CycloNumber,
    sign: i64,
    rbar: CycloNumber,
}

pub fn twist(cfg: &RunConfig) -> Result<Artifact, CmdError> {
    let k = a1_level(cfg, "twist")?;
    let cat = category(cfg)?;
    let mut conv = conventions(&cat, cfg);
    sixj_conventions(&mut conv);
    conv.insert(
        "coboundary_twist".into(),
        json!("j(lambda,V;nu) = kappa^{1/2}, j(V,lambda;nu) = kappa^{-1/2}, kappa = eps_nu R^{lambda V}_nu, lambda != V"),
    );
    let table = SixJTable::q_racah(k).map_err(config_err)?;
    let j = coboundary_twist(k);
    let after = table.twisted(&j).map_err(config_err)?;
    let mut rows = Vec::new();
    for lambda in (0..=k).filter(|&l| l != 1) {
        let pb = pair_braiding(&cat, &qcat::lie::Weight(vec![lambda as i64]), 0).map_err(config_err)?;
        let cb = coboundary(&pb);
        for (ch, (_, rbar)) in pb.channels.iter().zip(&cb.rbar_blocks) {
            let nu = ch.nu.0[0] as u8;
            rows.push(TwistRow {
                lambda,
                mu: 1,
                nu,
                before: table.r(lambda, 1, nu).clone(),
                after: after.r(lambda, 1, nu).clone(),
                sign: ch.sign,
                rbar: rbar.clone(),
            });
        }
    }
    let mismatch = rows.iter().find(|r| r.after != CycloNumber::from_int(r.sign));
    let axioms = AxiomSummary::new(&after);
    let round_trip = j.inverse().and_then(|ji| after.twisted(&ji)).is_ok_and(|t| t == table);
    let invariants = GaugeInvariants::of(&table).ok() == GaugeInvariants::of(&after).ok();
    let checks = vec![
        Check::new("twisted R on (lambda, V) equals the coboundary sign", mismatch.is_none())
            .with_counterexample(mismatch.map(|r| (r.lambda, r.nu))),
        Check::new("twisted table satisfies pentagon and hexagons", axioms.passed()).with_counterexample(axioms.to_json()),
        Check::new("gauge invariants unchanged", invariants),
        Check::new("twist round trip", round_trip),
    ];
    let mut csv = vec!["lambda,mu,nu,before,after,sign".to_string()];
    let mut pretty = Vec::new();
    for r in &rows {
        csv.push(format!("{},{},{},\"{}\",\"{}\",{}", r.lambda, r.mu, r.nu, r.before, r.after, r.sign));
        pretty.push(format!("R^{{{} 1}}_{}: {} -> {}", r.lambda, r.nu, r.before, r.after));
    }
    Ok(Artifact { conventions: conv, payload: json!({ "rows": rows }), checks, csv, pretty })
}
