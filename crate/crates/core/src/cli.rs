//! Command implementations behind the `untwist` binary, and the knot table.
//!
//! Every command returns an [`Output`] holding both a JSON document and a
//! plain-text rendering; the binary only picks one and maps errors to exit
//! codes.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::cyclo::{zeta_twist_value, Cyclotomic};
use crate::error::{Error, Result};
use crate::families::verify_divisor_sets;
use crate::homfly::{
    conway_of, twist_matrix_power, unit_specialization, SkeinEngine, DEFAULT_CROSSING_CAP,
};
use crate::obstruct::{
    candidate_sets, fibred_obstruction, fwm_bounds, ObstructionReport, DEFAULT_K_MAX,
};
use crate::poly::{LaurentPoly2, Ring};

pub const BUNDLED_TABLE: &str = include_str!("../data/knots.jsonl");

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Exit status for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::TooLarge { .. } | Error::SearchExhausted(_) => EXIT_RESOURCE,
        _ => EXIT_DOMAIN,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GlobalOpts {
    pub k_max: u64,
    pub crossing_cap: usize,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            k_max: DEFAULT_K_MAX,
            crossing_cap: DEFAULT_CROSSING_CAP,
        }
    }
}

impl GlobalOpts {
    fn engine(&self) -> SkeinEngine {
        SkeinEngine::new(self.crossing_cap)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
    /// False when a verification suite found a failure.
    pub passed: bool,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY
        }
    }

    /// Pretty JSON with a trailing newline; keys are sorted, so output is
    /// byte-stable.
    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct KnotRecord {
    pub name: String,
    pub braid: String,
    pub crossing_number: i64,
    pub braid_index: i64,
    pub two_bridge: bool,
}

impl KnotRecord {
    pub fn word(&self) -> Result<BraidWord> {
        self.braid.parse()
    }

    pub fn homfly(&self, engine: &SkeinEngine) -> Result<LaurentPoly2> {
        engine.homfly_braid(&self.word()?)
    }
}

/// A table record with its HOMFLY polynomial, after the gates have passed.
#[derive(Debug, Clone, PartialEq)]
pub struct TableEntry {
    pub record: KnotRecord,
    pub homfly: LaurentPoly2,
}

fn gate(record: &KnotRecord, engine: &SkeinEngine) -> std::result::Result<LaurentPoly2, String> {
    let word = record.word().map_err(|e| format!("braid: {e}"))?;
    let components = word.closure_component_count();
    if components != 1 {
        return Err(format!("closure has {components} components"));
    }
    if record.crossing_number < 0 || record.braid_index < 1 {
        return Err("crossing-number must be >= 0 and braid-index >= 1".into());
    }
    let p = engine.homfly_braid(&word).map_err(|e| e.to_string())?;
    let b = fwm_bounds(&p).map_err(|e| e.to_string())?;
    // the crossing bound assumes a nontrivial knot
    if !p.is_one() && record.crossing_number < b.crossing_lb {
        return Err(format!(
            "FWM crossing-number: declared {} below lower bound {}",
            record.crossing_number, b.crossing_lb
        ));
    }
    if record.braid_index < b.braid_index_lb {
        return Err(format!(
            "FWM braid-index: declared {} below lower bound {}",
            record.braid_index, b.braid_index_lb
        ));
    }
    if record.two_bridge && record.braid_index != b.braid_index_lb {
        return Err(format!(
            "two-bridge braid-index: declared {} but a-span gives {}",
            record.braid_index, b.braid_index_lb
        ));
    }
    Ok(p)
}

/// Parses JSON lines and runs every ingestion gate. Blank lines are skipped;
/// line numbers in errors are 1-based.
pub fn parse_table(text: &str, engine: &SkeinEngine) -> Result<Vec<TableEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: KnotRecord = serde_json::from_str(line).map_err(|e| Error::Table {
            line: line_no,
            reason: e.to_string(),
        })?;
        let homfly = gate(&record, engine).map_err(|reason| Error::Table {
            line: line_no,
            reason: format!("{}: {reason}", record.name),
        })?;
        out.push(TableEntry { record, homfly });
    }
    Ok(out)
}

pub fn load_table(path: &Path, engine: &SkeinEngine) -> Result<Vec<TableEntry>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text, engine)
}

pub fn bundled_table() -> Result<Vec<TableEntry>> {
    parse_table(BUNDLED_TABLE, &SkeinEngine::default())
}

fn table_from(path: Option<&Path>, opts: &GlobalOpts) -> Result<Vec<TableEntry>> {
    match path {
        Some(p) => load_table(p, &opts.engine()),
        None => parse_table(BUNDLED_TABLE, &opts.engine()),
    }
}

pub fn cmd_invariants(braid: &str, allow_links: bool, opts: &GlobalOpts) -> Result<Output> {
    let word: BraidWord = braid.parse()?;
    let components = word.closure_component_count();
    if components != 1 && !allow_links {
        return Err(Error::NotAKnot(components));
    }
    let p = opts.engine().homfly_braid(&word)?;
    let nabla = conway_of(&p)?;
    let profile = p.degree_profile()?;
    let mut json = json!({
        "braid": word.to_string(),
        "strands": word.strands(),
        "crossings": word.len(),
        "components": components,
        "homfly": p.to_json(),
        "homfly-text": p.to_string(),
        "conway": nabla.to_json(),
        "conway-text": nabla.to_string(),
        "degree-profile": profile,
    });
    let mut text = format!(
        "braid      {word}\ncomponents {components}\nP          {p}\nconway     {nabla}\nz-degree   {}\na-span     {}\n",
        profile.z_degree, profile.a_span
    );
    if components == 1 {
        let b = fwm_bounds(&p)?;
        let self_check = unit_specialization(&p)?.is_one();
        json["fwm-bounds"] = json!(b);
        json["self-check"] = json!(self_check);
        let _ = writeln!(
            text,
            "bounds     c >= {}, b >= {}\nself-check P(a, 1/a - a) = 1: {}",
            b.crossing_lb, b.braid_index_lb, self_check
        );
    }
    Ok(Output {
        json,
        text,
        passed: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSelection {
    T,
    Tbar,
    Both,
}

impl FromStr for MoveSelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "t" => Ok(MoveSelection::T),
            "tbar" => Ok(MoveSelection::Tbar),
            "both" => Ok(MoveSelection::Both),
            _ => Err(format!("expected t, tbar or both, got {s:?}")),
        }
    }
}

fn report_json(r: &ObstructionReport) -> Value {
    json!({ "report": r, "candidates": r.candidates() })
}

fn report_text(r: &ObstructionReport, out: &mut String) {
    let _ = writeln!(out, "{} moves, k = {}..{}", r.family, r.k_min, r.k_max);
    for v in &r.verdicts {
        let mut line = format!(
            "  k = {:>3}  {}",
            v.k,
            if v.obstructed { "obstructed" } else { "-" }
        );
        if let Some(c) = &v.certificate {
            let _ = write!(
                line,
                " ({})",
                serde_json::to_value(c.test).unwrap().as_str().unwrap()
            );
        }
        for col in &v.modp {
            let _ = write!(
                line,
                "  F_{}: {}",
                col.p,
                if col.obstructed { "obstructed" } else { "-" }
            );
        }
        let _ = writeln!(out, "{line}");
    }
    let cands: Vec<String> = r.candidates().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "  candidates {{{}}}", cands.join(", "));
}

pub fn cmd_obstruct(
    braid: &str,
    moves: MoveSelection,
    modp: bool,
    opts: &GlobalOpts,
) -> Result<Output> {
    let word: BraidWord = braid.parse()?;
    let components = word.closure_component_count();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let p = opts.engine().homfly_braid(&word)?;
    let nabla = conway_of(&p)?;
    let (mut t, tbar) = candidate_sets(&word.to_string(), &p, &nabla, opts.k_max)?;
    if modp {
        t.add_modp_columns(&p, 1)?;
    }
    let mut reports = Vec::new();
    if moves != MoveSelection::Tbar {
        reports.push(t);
    }
    if moves != MoveSelection::T {
        reports.push(tbar);
    }
    let mut text = format!(
        "braid {word}\nfibred criterion: {}\n",
        fibred_obstruction(&nabla)
    );
    for r in &reports {
        report_text(r, &mut text);
    }
    let _ = writeln!(text, "{}", crate::obstruct::VERDICT_NOTE);
    Ok(Output {
        json: json!({
            "braid": word.to_string(),
            "fibred-criterion": fibred_obstruction(&nabla),
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
        }),
        text,
        passed: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    DivisorSets,
    Matrix,
    Skein,
    FwmTable,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop6" => Ok(Suite::DivisorSets),
            "matrix" => Ok(Suite::Matrix),
            "skein" => Ok(Suite::Skein),
            "fwm-table" => Ok(Suite::FwmTable),
            _ => Err(Error::UnknownSuite(s.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOpts<'a> {
    pub n_max: u64,
    pub samples: usize,
    pub seed: u64,
    pub table: Option<&'a Path>,
}

impl Default for VerifyOpts<'_> {
    fn default() -> Self {
        VerifyOpts {
            n_max: 6,
            samples: 50,
            seed: 1,
            table: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

fn checks_output(suite: &str, checks: Vec<Check>) -> Output {
    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        let _ = write!(
            text,
            "{} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name
        );
        if let Some(d) = &c.detail {
            let _ = write!(text, ": {d}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{suite}: {}", if passed { "pass" } else { "FAIL" });
    Output {
        json: json!({ "suite": suite, "passed": passed, "checks": checks }),
        text,
        passed,
    }
}

/// `M^{2k} = a^{2k} I` at `z_k` for `k = 3..=k_max`, the repeated-eigenvalue
/// case `z = 2ζ_4`, and `M^4 = -a^4 I` at `z_4`.
pub fn matrix_checks(k_max: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 3..=k_max {
        let (_, z) = zeta_twist_value(k)?;
        let pow = twist_matrix_power(&z, 2 * k as i64);
        checks.push(Check::new(
            format!("M^{} = a^{} I at z_{k}", 2 * k, 2 * k),
            pow.is_scalar_power(2 * k as i64),
        ));
    }
    let z = Cyclotomic::root(4).mul(&Cyclotomic::from_int(4, 2));
    let m4 = twist_matrix_power(&z, 4);
    checks.push(Check::new(
        "M^4 != a^4 I at z = 2ζ4",
        !m4.is_scalar_power(4),
    ));
    checks.push(Check::new(
        "M^4 = a^4 I mod 4 at z = 2ζ4",
        m4.map(|c| c.reduce_coeffs(4)).is_scalar_power(4),
    ));
    // the same point inside Q(ζ8)
    let z8 = Cyclotomic::root_pow(8, 2).mul(&Cyclotomic::from_int(8, 2));
    checks.push(Check::new(
        "M^4 != a^4 I over Q(ζ8) at z = 2ζ8^2",
        !twist_matrix_power(&z8, 4).is_scalar_power(4),
    ));
    let (_, z4) = zeta_twist_value(4)?;
    let m = twist_matrix_power(&z4, 4);
    let minus = crate::homfly::TwistMatrix::scalar(
        crate::poly::LaurentPoly1::monomial(crate::poly::Var::A, 4, Cyclotomic::from_int(8, -1)),
        &Cyclotomic::from_int(8, 1),
    );
    checks.push(Check::new(
        "M^4 = -a^4 I over Q(ζ8) at z_4",
        !m.is_scalar_power(4) && m == minus,
    ));
    Ok(checks)
}

/// Random braid word on at most four strands.
pub fn random_word(rng: &mut StdRng, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=4usize);
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Skein relation, conjugation and stabilization on random words.
pub fn skein_checks(samples: usize, seed: u64, engine: &SkeinEngine) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut markov_failures = Vec::new();
    for _ in 0..samples {
        let w = random_word(&mut rng, 10);
        let j = rng.gen_range(0..w.len());
        let mut letters = w.letters().to_vec();
        if letters[j] < 0 {
            letters[j] = -letters[j];
        }
        let plus = BraidWord::new(w.strands(), letters.clone())?;
        letters[j] = -letters[j];
        let minus = BraidWord::new(w.strands(), letters.clone())?;
        letters.remove(j);
        let zero = BraidWord::new(w.strands(), letters)?;
        let (pp, pm, p0) = (
            engine.homfly_braid(&plus)?,
            engine.homfly_braid(&minus)?,
            engine.homfly_braid(&zero)?,
        );
        if &pp.shift(-1, 0) - &pm.shift(1, 0) != p0.shift(0, 1) {
            failures.push(format!("{plus} at position {j}"));
        }
        let pw = engine.homfly_braid(&w)?;
        let shift = rng.gen_range(0..w.len());
        let rotated = w.rotate(shift);
        let stabilized = w.stabilize(rng.gen_bool(0.5));
        if engine.homfly_braid(&rotated)? != pw || engine.homfly_braid(&stabilized)? != pw {
            markov_failures.push(w.to_string());
        }
    }
    let skein = Check::new(
        format!("skein relation on {samples} random words"),
        failures.is_empty(),
    );
    let markov = Check::new(
        format!("Markov invariance on {samples} random words"),
        markov_failures.is_empty(),
    );
    Ok(vec![
        if failures.is_empty() {
            skein
        } else {
            skein.with_detail(failures.join("; "))
        },
        if markov_failures.is_empty() {
            markov
        } else {
            markov.with_detail(markov_failures.join("; "))
        },
    ])
}

/// Ingestion gates, self-check, and both cardinality bounds for every record.
pub fn table_checks(entries: &[TableEntry], k_max: u64) -> Result<Vec<Check>> {
    let mut checks = vec![Check::new(
        format!("{} records pass ingestion gates", entries.len()),
        true,
    )];
    for e in entries {
        let nabla = conway_of(&e.homfly)?;
        let (mut t, mut tbar) = candidate_sets(&e.record.name, &e.homfly, &nabla, k_max)?;
        t.attach_headline_bound(e.record.crossing_number);
        tbar.attach_headline_bound(e.record.braid_index);
        let detail = format!(
            "t candidates {:?}, tbar candidates {:?}",
            t.candidates(),
            tbar.candidates()
        );
        checks.push(
            Check::new(
                format!("{} cardinality bounds", e.record.name),
                t.bounds_hold() && tbar.bounds_hold(),
            )
            .with_detail(detail),
        );
        checks.push(Check::new(
            format!("{} P(a, 1/a - a) = 1", e.record.name),
            unit_specialization(&e.homfly)?.is_one(),
        ));
    }
    Ok(checks)
}

pub fn cmd_verify(suite: Suite, vopts: &VerifyOpts<'_>, opts: &GlobalOpts) -> Result<Output> {
    match suite {
        Suite::DivisorSets => {
            let r = verify_divisor_sets(vopts.n_max, opts.k_max)?;
            let mut text = String::new();
            for c in r.failures() {
                let _ = writeln!(
                    text,
                    "FAIL {} n = {} k = {}: {}",
                    c.family,
                    c.n,
                    c.k,
                    c.failures.join("; ")
                );
            }
            let _ = writeln!(
                text,
                "prop6 n <= {}, k <= {}: {} cells, {}",
                r.n_max,
                r.k_max,
                r.cells.len(),
                if r.passed { "pass" } else { "FAIL" }
            );
            Ok(Output {
                json: serde_json::to_value(&r).expect("report serializes"),
                text,
                passed: r.passed,
            })
        }
        Suite::Matrix => Ok(checks_output("matrix", matrix_checks(opts.k_max)?)),
        Suite::Skein => Ok(checks_output(
            "skein",
            skein_checks(vopts.samples, vopts.seed, &opts.engine())?,
        )),
        Suite::FwmTable => {
            let entries = table_from(vopts.table, opts)?;
            Ok(checks_output(
                "fwm-table",
                table_checks(&entries, opts.k_max)?,
            ))
        }
    }
}

pub fn cmd_table(path: Option<&Path>, opts: &GlobalOpts) -> Result<Output> {
    let entries = table_from(path, opts)?;
    let mut rows = Vec::new();
    let mut text = format!(
        "{:<6} {:<28} {:>2} {:>2} {:<6} {}\n",
        "name", "braid", "c", "b", "fibred", "P"
    );
    for e in &entries {
        let nabla = conway_of(&e.homfly)?;
        let fibred = fibred_obstruction(&nabla);
        rows.push(json!({
            "record": e.record,
            "homfly": e.homfly.to_json(),
            "conway": nabla.to_json(),
            "fwm-bounds": fwm_bounds(&e.homfly)?,
            "fibred-criterion": fibred,
        }));
        let _ = writeln!(
            text,
            "{:<6} {:<28} {:>2} {:>2} {:<6} {}",
            e.record.name,
            e.record.braid,
            e.record.crossing_number,
            e.record.braid_index,
            fibred,
            e.homfly
        );
    }
    Ok(Output {
        json: Value::Array(rows),
        text,
        passed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str =
        r#"{"name":"3_1","braid":"1 1 1","crossing-number":3,"braid-index":2,"two-bridge":true}"#;
    const FIG8: &str = r#"{"name":"4_1","braid":"1 -2 1 -2","crossing-number":4,"braid-index":3,"two-bridge":true}"#;

    #[test]
    fn table_gates() {
        let engine = SkeinEngine::default();
        assert_eq!(
            parse_table(&format!("{TREFOIL}\n\n{FIG8}\n"), &engine)
                .unwrap()
                .len(),
            2
        );
        let bad = FIG8.replace(r#""braid-index":3"#, r#""braid-index":2"#);
        match parse_table(&format!("{TREFOIL}\n{bad}"), &engine) {
            Err(Error::Table { line, reason }) => {
                assert_eq!(line, 2);
                assert!(reason.contains("FWM braid-index"), "{reason}");
            }
            r => panic!("{r:?}"),
        }
        let link = TREFOIL.replace("1 1 1", "1 1");
        assert!(matches!(
            parse_table(&link, &engine),
            Err(Error::Table { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("{", &engine),
            Err(Error::Table { line: 1, .. })
        ));
    }

    #[test]
    fn bundled_table_loads() {
        let t = bundled_table().unwrap();
        assert_eq!(t.len(), 13);
        assert!(t
            .iter()
            .all(|e| unit_specialization(&e.homfly).unwrap().is_one()));
    }

    #[test]
    fn invariants_examples() {
        let opts = GlobalOpts::default();
        let out = cmd_invariants("1 1 1", false, &opts).unwrap();
        assert_eq!(out.json["homfly-text"], "2a^2 + a^2z^2 - a^4");
        assert_eq!(
            out.json["fwm-bounds"],
            json!({"crossing-lb": 3, "braid-index-lb": 2})
        );
        assert_eq!(out.json["self-check"], json!(true));
        let out = cmd_invariants("", false, &opts).unwrap();
        assert_eq!(
            out.json["fwm-bounds"],
            json!({"crossing-lb": 1, "braid-index-lb": 1})
        );
        let err = cmd_invariants("1 1", false, &opts).unwrap_err();
        assert!(err.to_string().contains("2 components"));
        assert_eq!(exit_code(&err), EXIT_DOMAIN);
        assert!(cmd_invariants("1 1", true, &opts).is_ok());
    }

    #[test]
    fn resource_cap_exit_code() {
        let opts = GlobalOpts {
            crossing_cap: 2,
            ..GlobalOpts::default()
        };
        let err = cmd_invariants("1 1 1", false, &opts).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_RESOURCE);
    }

    #[test]
    fn obstruct_examples() {
        let opts = GlobalOpts {
            k_max: 20,
            ..GlobalOpts::default()
        };
        let out = cmd_obstruct("1 1 1", MoveSelection::T, false, &opts).unwrap();
        assert_eq!(out.json["reports"][0]["candidates"], json!([2]));
        let out = cmd_obstruct("1 -2 1 -2", MoveSelection::Tbar, false, &opts).unwrap();
        assert_eq!(out.json["reports"][0]["candidates"], json!([]));
        let opts = GlobalOpts {
            k_max: 6,
            ..GlobalOpts::default()
        };
        let out = cmd_obstruct("1 1 1", MoveSelection::Both, true, &opts).unwrap();
        let t = &out.json["reports"][0]["report"]["verdicts"];
        for v in t.as_array().unwrap() {
            let has = v.get("modp").is_some();
            assert_eq!(has, v["k"].as_u64().unwrap() >= 3);
        }
    }

    #[test]
    fn output_is_deterministic() {
        let opts = GlobalOpts {
            k_max: 8,
            ..GlobalOpts::default()
        };
        let a = cmd_obstruct("1 1 1 2 -1 2", MoveSelection::Both, true, &opts).unwrap();
        let b = cmd_obstruct("1 1 1 2 -1 2", MoveSelection::Both, true, &opts).unwrap();
        assert_eq!(a.json_string(), b.json_string());
    }

    #[test]
    fn verify_suites() {
        let opts = GlobalOpts {
            k_max: 10,
            ..GlobalOpts::default()
        };
        let v = VerifyOpts::default();
        assert!(cmd_verify(Suite::Matrix, &v, &opts).unwrap().passed);
        assert!(cmd_verify(Suite::FwmTable, &v, &opts).unwrap().passed);
        let v = VerifyOpts {
            samples: 10,
            ..VerifyOpts::default()
        };
        assert!(cmd_verify(Suite::Skein, &v, &opts).unwrap().passed);
        assert_eq!(
            "nope".parse::<Suite>(),
            Err(Error::UnknownSuite("nope".into()))
        );
    }
}
