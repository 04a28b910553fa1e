//! Check reports, command output rendering and the bench sweep behind the
//! `inclideal` binary. Every renderer here is byte-deterministic.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::{IdealSpec, Input};
use crate::hypergraph::{HypergraphSpec, IncreasingHypergraph};
use crate::ideal::{associated_primes, irredundant_filter, is_totally_ordered_ass, MonomialIdeal};
use crate::linalg::Field;
use crate::monomial::vector_string;
use crate::oracle::{betti_table, euler_consistency_check, MAX_GENERATORS};
use crate::stability::{
    check_pure_power_truncation, dual_truncation, is_stable, minimal_stable_truncation, q_bound,
    t_bound, t_bound_first_entries,
};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CLAIM_FAILED: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const SKIPPED: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    #[serde(rename = "skipped")]
    Skipped,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Claim {
    fn new(name: &'static str, ok: bool) -> Self {
        Self {
            name,
            status: Status::from_bool(ok),
            detail: None,
            witness: None,
        }
    }

    fn with_status(name: &'static str, status: Status, detail: impl Into<String>) -> Self {
        Self {
            name,
            status,
            detail: Some(detail.into()),
            witness: None,
        }
    }

    fn witness_if_failed(mut self, witness: impl FnOnce() -> Value) -> Self {
        if self.status == Status::Fail {
            self.witness = Some(witness());
        }
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Values {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    /// Sum of the sorted containment entries `2..=s`, present when it differs from `t`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_first_s: Option<u64>,
    pub q: u64,
    pub deg: u64,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reg: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_stable_truncation: Option<u64>,
    pub uncovered_vertices: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypergraph: Option<HypergraphSpec>,
    pub characteristic: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<String>,
    pub components: Vec<String>,
    pub ideal: String,
    pub values: Values,
    pub claims: Vec<Claim>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if !self.passed() {
            exit::CLAIM_FAILED
        } else if self.claims.iter().any(|c| c.status == Status::Skipped) {
            exit::SKIPPED
        } else {
            exit::PASS
        }
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.hypergraph {
            Some(h) => {
                let edges: Vec<String> = h.edges.iter().map(|e| vector_string(e)).collect();
                let _ = writeln!(
                    out,
                    "instance: hypergraph n={} d={} s={} edges=[{}]",
                    h.n,
                    h.d,
                    h.edges.len(),
                    edges.join(",")
                );
            }
            None => {
                let _ = writeln!(out, "instance: ideal");
            }
        }
        let v = &self.values;
        if let Some(a) = &v.a {
            let _ = writeln!(out, "a={}", vector_string(a));
        }
        if let Some(inc) = &self.inclusion {
            let _ = writeln!(out, "inclusion: {inc}");
        }
        for (k, c) in self.components.iter().enumerate() {
            let _ = writeln!(out, "component {}: {c}", k + 1);
        }
        let label = if self.kind == "hypergraph" {
            "dual"
        } else {
            "ideal"
        };
        let _ = writeln!(out, "{label}: {}", self.ideal);
        if let Some(t) = v.t {
            let _ = write!(out, "t={t} ");
        }
        let _ = writeln!(out, "q={} deg={} m={}", v.q, v.deg, v.m);
        if let Some(ts) = v.t_first_s {
            let _ = writeln!(out, "t_first_s={ts}");
        }
        match v.reg {
            Some(r) => {
                let _ = writeln!(out, "reg={r} (char {})", self.characteristic);
            }
            None => {
                let _ = writeln!(out, "reg=skipped");
            }
        }
        if let Some(e) = v.min_stable_truncation {
            let _ = writeln!(out, "min_stable_truncation={e}");
        }
        if v.uncovered_vertices {
            let _ = writeln!(
                out,
                "note: some vertices lie in no edge; stability checked on the covered variables"
            );
        }
        for c in &self.claims {
            let _ = write!(out, "claim {}: {}", c.name, c.status.as_str());
            if let Some(d) = &c.detail {
                let _ = write!(out, " ({d})");
            }
            let _ = writeln!(out);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub field: Field,
    pub skip_reg: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            field: Field::Rational,
            skip_reg: false,
        }
    }
}

/// The characteristic compared against in the `char_agreement` claim.
fn other_field(field: Field) -> Field {
    match field {
        Field::Rational => Field::Prime(2),
        Field::Prime(_) => Field::Rational,
    }
}

struct OracleOutcome {
    reg: Option<u64>,
    claims: Vec<Claim>,
}

/// Euler identity and characteristic agreement on `ideal`, plus its regularity.
fn run_oracle(ideal: &MonomialIdeal, opts: CheckOptions) -> Result<OracleOutcome> {
    const NAMES: [&str; 2] = ["euler_identity", "char_agreement"];
    if opts.skip_reg {
        return Ok(OracleOutcome {
            reg: None,
            claims: NAMES
                .iter()
                .map(|n| Claim::with_status(n, Status::Skipped, "--skip-reg"))
                .collect(),
        });
    }
    let table = match betti_table(ideal, opts.field) {
        Ok(t) => t,
        Err(e @ (Error::TooManyGenerators { .. } | Error::GroundSetTooLarge { .. })) => {
            return Ok(OracleOutcome {
                reg: None,
                claims: NAMES
                    .iter()
                    .map(|n| Claim::with_status(n, Status::Skipped, e.to_string()))
                    .collect(),
            });
        }
        Err(e) => return Err(e),
    };
    let euler = euler_consistency_check(ideal, &table)?;
    let other = betti_table(ideal, other_field(opts.field))?;
    let agree = other.entries == table.entries;
    let claims = vec![
        Claim::new("euler_identity", euler),
        Claim::new("char_agreement", agree).witness_if_failed(|| {
            json!({
                "characteristic": other.characteristic,
                "table": other.to_json(),
            })
        }),
    ];
    Ok(OracleOutcome {
        reg: table.regularity(),
        claims,
    })
}

fn reg_claim(
    name: &'static str,
    reg: Option<u64>,
    skip_detail: &str,
    holds: impl Fn(u64) -> bool,
) -> Claim {
    match reg {
        Some(r) => Claim::new(name, holds(r)),
        None => Claim::with_status(name, Status::Skipped, skip_detail),
    }
}

pub fn check_hypergraph(h: &IncreasingHypergraph, opts: CheckOptions) -> Result<CheckReport> {
    let a = h.containment_vector();
    let sd = h.special_dual()?;
    let s = h.s();
    let mut claims = Vec::new();

    let offending: Vec<Value> = h
        .inclusion_exponents()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.iter().zip(a.entries()).any(|(bi, ai)| bi > ai))
        .map(|(k, b)| json!({"edge": k + 1, "b": b}))
        .collect();
    claims.push(
        Claim::new("generators_below_containment", offending.is_empty())
            .witness_if_failed(|| json!({"a": a.entries(), "generators": offending})),
    );

    let primes = associated_primes(&sd.components);
    let chain = is_totally_ordered_ass(&sd.components) && primes.as_slice() == h.edges();
    claims.push(Claim::new("ass_chain", chain).witness_if_failed(|| json!({ "primes": primes })));

    let kept = irredundant_filter(&sd.components);
    claims.push(
        Claim::new("components_irredundant", kept.len() == s).witness_if_failed(|| {
            let dropped: Vec<String> = sd
                .components
                .iter()
                .filter(|c| !kept.contains(c))
                .map(ToString::to_string)
                .collect();
            json!({ "redundant": dropped })
        }),
    );

    let involution = sd.ideal.alexander_dual(a.entries())? == sd.inclusion;
    claims.push(Claim::new("duality_involution", involution));

    // components in canonical order, each on its own r_i variables
    let (canon, _) = h.canonical_vertex_order();
    let canon_sd = canon.special_dual()?;
    let mut component_failure = None;
    for (k, q) in canon_sd.components.iter().enumerate() {
        let r = canon.edges()[k].len();
        let exps = &q.exponents()[..r];
        let ok = match check_pure_power_truncation(exps) {
            Ok(ok) => ok,
            Err(Error::Hypothesis(msg)) => {
                component_failure =
                    Some(json!({"component": k + 1, "exponents": exps, "hypothesis": msg}));
                break;
            }
            Err(e) => return Err(e),
        };
        if !ok {
            component_failure = Some(json!({"component": k + 1, "exponents": exps}));
            break;
        }
    }
    claims.push(
        Claim::new("component_truncations_stable", component_failure.is_none())
            .witness_if_failed(|| component_failure.clone().unwrap_or(Value::Null)),
    );

    let dt = dual_truncation(h)?;
    claims.push(
        Claim::new("dual_truncation_stable", dt.report.is_stable).witness_if_failed(|| {
            json!({
                "labels": "canonical",
                "t": dt.t,
                "witness": dt.report.witness,
            })
        }),
    );

    let t = t_bound(a.entries())?;
    let q = q_bound(&dt.dual)?;
    let deg = dt.dual.max_degree()?;
    let m = dt.dual.max_index()?;
    claims.push(Claim::new("t_le_q", t <= q).witness_if_failed(|| json!({"t": t, "q": q})));
    claims.push(Claim::new("deg_le_t", deg <= t).witness_if_failed(|| json!({"deg": deg, "t": t})));

    let oracle = run_oracle(&sd.ideal, opts)?;
    let skip = oracle
        .claims
        .first()
        .and_then(|c| c.detail.clone())
        .unwrap_or_default();
    claims.push(
        reg_claim("reg_le_t", oracle.reg, &skip, |r| r <= t)
            .witness_if_failed(|| json!({"reg": oracle.reg, "t": t, "instance": h.to_spec()})),
    );
    claims.push(
        reg_claim("reg_lt_q", oracle.reg, &skip, |r| r < q)
            .witness_if_failed(|| json!({"reg": oracle.reg, "q": q, "instance": h.to_spec()})),
    );
    claims.extend(oracle.claims);

    let t_first_s = t_bound_first_entries(a.entries(), s);
    Ok(CheckReport {
        kind: "hypergraph",
        hypergraph: Some(h.to_spec()),
        characteristic: opts.field.characteristic(),
        inclusion: Some(sd.inclusion.to_string()),
        components: sd.components.iter().map(ToString::to_string).collect(),
        ideal: sd.ideal.to_string(),
        values: Values {
            a: Some(a.entries().to_vec()),
            t: Some(t),
            t_first_s: (t_first_s != t).then_some(t_first_s),
            q,
            deg,
            m,
            reg: oracle.reg,
            min_stable_truncation: minimal_stable_truncation(&dt.dual, t)?,
            uncovered_vertices: dt.restricted,
        },
        claims,
    })
}

const HYPERGRAPH_CLAIMS: [&str; 9] = [
    "generators_below_containment",
    "ass_chain",
    "components_irredundant",
    "duality_involution",
    "component_truncations_stable",
    "dual_truncation_stable",
    "t_le_q",
    "deg_le_t",
    "reg_le_t",
];

pub fn check_ideal(ideal: &MonomialIdeal, opts: CheckOptions) -> Result<CheckReport> {
    let q = q_bound(ideal)?;
    let deg = ideal.max_degree()?;
    let m = ideal.max_index()?;
    let mut claims: Vec<Claim> = HYPERGRAPH_CLAIMS
        .iter()
        .map(|n| Claim::with_status(n, Status::NotApplicable, "not a hypergraph dual"))
        .collect();

    let oracle = run_oracle(ideal, opts)?;
    // smallest e in deg..=q with a stable truncation, if any
    let mut stable_at = None;
    for e in deg..=q.max(deg) {
        if is_stable(&ideal.truncate(e)?)?.is_stable {
            stable_at = Some(e);
            break;
        }
    }
    claims.push(Claim::with_status(
        "reg_lt_q",
        Status::NotApplicable,
        "bound stated for duals of inclusion ideals",
    ));
    claims.push(match (stable_at, oracle.reg) {
        (None, _) => Claim::with_status(
            "stable_truncation_bounds_reg",
            Status::NotApplicable,
            "no stable truncation in degrees deg..=q",
        ),
        (Some(_), None) => Claim::with_status(
            "stable_truncation_bounds_reg",
            Status::Skipped,
            "regularity not computed",
        ),
        (Some(e), Some(r)) => {
            let mut c = Claim::new("stable_truncation_bounds_reg", r <= e);
            c.detail = Some(format!("e={e}"));
            c.witness_if_failed(|| json!({"reg": r, "e": e}))
        }
    });
    claims.extend(oracle.claims);

    Ok(CheckReport {
        kind: "ideal",
        hypergraph: None,
        characteristic: opts.field.characteristic(),
        inclusion: None,
        components: Vec::new(),
        ideal: ideal.to_string(),
        values: Values {
            a: None,
            t: None,
            t_first_s: None,
            q,
            deg,
            m,
            reg: oracle.reg,
            min_stable_truncation: stable_at,
            uncovered_vertices: false,
        },
        claims,
    })
}

pub fn check_input(input: &Input, opts: CheckOptions) -> Result<CheckReport> {
    match input {
        Input::Hypergraph(h) => check_hypergraph(h, opts),
        Input::Ideal(i) => check_ideal(i, opts),
    }
}

/// Text for the `dual` command.
pub fn render_dual(input: &Input) -> Result<String> {
    let mut out = String::new();
    match input {
        Input::Hypergraph(h) => {
            let a = h.containment_vector();
            let sd = h.special_dual()?;
            let dt = dual_truncation(h)?;
            let _ = writeln!(out, "a={}", vector_string(a.entries()));
            let _ = writeln!(out, "inclusion: {}", sd.inclusion);
            let _ = writeln!(out, "components:");
            for c in &sd.components {
                let _ = writeln!(out, "  {c}");
            }
            let _ = writeln!(out, "dual: {}", sd.ideal);
            let _ = writeln!(out, "t={} q={}", dt.t, q_bound(&dt.dual)?);
        }
        Input::Ideal(i) => {
            let c = lcm_of_generators(i)?;
            let comps = i.alexander_dual_components(&c)?;
            let dual = i.alexander_dual(&c)?;
            let _ = writeln!(out, "c={}", vector_string(&c));
            let _ = writeln!(out, "ideal: {i}");
            let _ = writeln!(out, "components:");
            for q in &comps {
                let _ = writeln!(out, "  {q}");
            }
            let _ = writeln!(out, "dual: {dual}");
        }
    }
    Ok(out)
}

fn lcm_of_generators(ideal: &MonomialIdeal) -> Result<Vec<u32>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok((1..=ideal.n())
        .map(|k| {
            ideal
                .generators()
                .iter()
                .map(|g| g.exponent(k))
                .max()
                .unwrap_or(0)
        })
        .collect())
}

/// The ideal the oracle commands operate on: the dual for hypergraph input.
pub fn oracle_target(input: &Input) -> Result<MonomialIdeal> {
    match input {
        Input::Hypergraph(h) => Ok(h.special_dual()?.ideal),
        Input::Ideal(i) => Ok(i.clone()),
    }
}

/// Parameters of a bench sweep.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_range: (usize, usize),
    pub s_range: (usize, usize),
    pub d_set: Vec<usize>,
    pub count: usize,
    pub seed: u64,
    pub skip_reg: bool,
    pub field: Field,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_range: (2, 7),
            s_range: (1, 4),
            d_set: vec![1, 2],
            count: 200,
            seed: 0,
            skip_reg: false,
            field: Field::Rational,
        }
    }
}

impl BenchConfig {
    /// Feasible `(n, s, d)` triples, in lexicographic order.
    pub fn shapes(&self) -> Vec<(usize, usize, usize)> {
        let mut d_set = self.d_set.clone();
        d_set.sort_unstable();
        d_set.dedup();
        let mut out = Vec::new();
        for n in self.n_range.0..=self.n_range.1 {
            for s in self.s_range.0.max(1)..=self.s_range.1 {
                for &d in d_set.iter().filter(|&&d| d > 0) {
                    if 2 + (s - 1) * d <= n {
                        out.push((n, s, d));
                    }
                }
            }
        }
        out
    }

    /// Instance parameters `(n, s, d, seed)` in id order.
    pub fn sample(&self) -> Result<Vec<(usize, usize, usize, u64)>> {
        let shapes = self.shapes();
        if shapes.is_empty() {
            return Err(Error::Infeasible {
                n: self.n_range.1,
                d: self.d_set.iter().copied().min().unwrap_or(0),
                s: self.s_range.0,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        Ok((0..self.count)
            .map(|_| {
                let (n, s, d) = shapes[rng.gen_range(0..shapes.len())];
                (n, s, d, rng.gen::<u64>())
            })
            .collect())
    }
}

/// One bench row. `reg` and its comparisons are `None` when skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub instance_id: usize,
    pub n: usize,
    pub s: usize,
    pub d: usize,
    pub t: u64,
    pub q: u64,
    pub deg: u64,
    pub m: usize,
    pub reg: Option<u64>,
    pub reg_le_t: Option<bool>,
    pub t_le_q: bool,
    pub reg_lt_q: Option<bool>,
    pub stable_at_t: bool,
    pub ass_chain: bool,
    pub below_containment: bool,
    pub edges: String,
}

impl BenchRow {
    pub fn all_pass(&self) -> bool {
        self.reg_le_t != Some(false)
            && self.reg_lt_q != Some(false)
            && self.t_le_q
            && self.stable_at_t
            && self.ass_chain
            && self.below_containment
    }
}

pub fn bench_row(
    id: usize,
    h: &IncreasingHypergraph,
    skip_reg: bool,
    field: Field,
) -> Result<BenchRow> {
    let sd = h.special_dual()?;
    let dt = dual_truncation(h)?;
    let t = dt.t;
    let q = q_bound(&dt.dual)?;
    let reg = if skip_reg || sd.ideal.generators().len() > MAX_GENERATORS {
        None
    } else {
        Some(crate::oracle::regularity(&sd.ideal, field)?)
    };
    let chain = is_totally_ordered_ass(&sd.components)
        && associated_primes(&sd.components).as_slice() == h.edges();
    let edges: Vec<String> = h
        .edges()
        .iter()
        .map(|e| {
            e.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    Ok(BenchRow {
        instance_id: id,
        n: h.n(),
        s: h.s(),
        d: h.d(),
        t,
        q,
        deg: dt.dual.max_degree()?,
        m: dt.dual.max_index()?,
        reg,
        reg_le_t: reg.map(|r| r <= t),
        t_le_q: t <= q,
        reg_lt_q: reg.map(|r| r < q),
        stable_at_t: dt.report.is_stable,
        ass_chain: chain,
        below_containment: h.generators_below_containment(),
        edges: edges.join("|"),
    })
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let params = config.sample()?;
    params
        .par_iter()
        .enumerate()
        .map(|(id, &(n, s, d, seed))| {
            let h = IncreasingHypergraph::random_instance(n, d, s, seed)?;
            bench_row(id, &h, config.skip_reg, config.field)
        })
        .collect()
}

pub const BENCH_SCHEMA: &str = "# inclideal bench schema v1";

pub fn render_bench_csv(rows: &[BenchRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "instance_id",
            "n",
            "s",
            "d",
            "t",
            "q",
            "deg",
            "m",
            "reg",
            "reg_le_t",
            "t_le_q",
            "reg_lt_q",
            "stable_at_t",
            "ass_chain",
            "below_containment",
            "edges",
        ])
        .expect("in-memory write");
    let opt = |x: Option<String>| x.unwrap_or_default();
    for r in rows {
        writer
            .write_record([
                r.instance_id.to_string(),
                r.n.to_string(),
                r.s.to_string(),
                r.d.to_string(),
                r.t.to_string(),
                r.q.to_string(),
                r.deg.to_string(),
                r.m.to_string(),
                opt(r.reg.map(|v| v.to_string())),
                opt(r.reg_le_t.map(|v| v.to_string())),
                r.t_le_q.to_string(),
                opt(r.reg_lt_q.map(|v| v.to_string())),
                r.stable_at_t.to_string(),
                r.ass_chain.to_string(),
                r.below_containment.to_string(),
                r.edges.clone(),
            ])
            .expect("in-memory write");
    }
    let body = String::from_utf8(writer.into_inner().expect("flush")).expect("utf8");
    format!("{BENCH_SCHEMA}\n{body}")
}

/// Convenience: the ideal spec JSON for an ideal.
pub fn ideal_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealSpec::from_ideal(ideal)).expect("serializes")
}
