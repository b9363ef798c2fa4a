//! Subcommand handlers.

use serde::Serialize;

use rectbal::dfa::{build_sample_table, default_depth, infer_min_dfa, Dfa};
use rectbal::fib_balance::{
    delta_scan, diverse_identities_check, exact_balance, zeck_balance, BalanceTable, BalanceVerdict,
    DEFAULT_SCAN_HORIZON,
};
use rectbal::numeration::{NegaBinRep, TribRep, ZeckRep};
use rectbal::rectangles::HankelTable;
use rectbal::tm_balance::{balance_class_table, default_horizon, excess, excess_parity_reduced, excess_profile};
use rectbal::trib_balance::{
    balanced_2xn_list, corner_certificate, find_corner_witness, two_balance_scan, TwoBalanceReport,
    DEFAULT_CORNER_SEARCH_LIMIT, DEFAULT_TWO_BALANCE_HORIZON,
};
use rectbal::words::{SequenceKind, Word};

use crate::output::{emit_one, emit_rows, join, sink};
use crate::{
    Cli, Command, DfaCommand, FibCommand, FibMethod, Format, NumCommand, NumSystem, TmCommand, TribCommand,
    WordCommand, EXIT_USAGE, EXIT_VERIFY,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rectbal::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Core(rectbal::Error::NotFoundWithinLimit { .. }) => EXIT_VERIFY,
        CliError::Core(rectbal::Error::InconsistentSample { .. }) => EXIT_VERIFY,
        CliError::Core(_) | CliError::Usage(_) => EXIT_USAGE,
        CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_VERIFY,
    }
}

fn ok(passed: bool) -> u8 {
    if passed {
        0
    } else {
        EXIT_VERIFY
    }
}

pub fn dispatch(cli: &Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Fib(c) => fib(c, g.format, g.budget()),
        Command::Trib(c) => trib(c, g.format, g.budget()),
        Command::Tm(c) => tm(c, g.format),
        Command::Dfa(c) => dfa(c, g.format),
        Command::Num(c) => num(c, g.format),
        Command::Word(WordCommand::Dump { kind, len }) => {
            let word = Word::generate(*kind, *len, g.budget())?;
            let text: String = word.symbols().iter().map(|c| char::from(b'0' + c)).collect();
            let record = WordRecord { kind: kind.to_string(), len: *len, word: text.clone() };
            emit_one(g.format, &text, &record, &record)?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct WordRecord {
    kind: String,
    len: usize,
    word: String,
}

/// Flat verdict row; `value_set` is `;`-joined and empty when unknown.
#[derive(Serialize)]
struct VerdictRow {
    m: u64,
    n: u64,
    balanced: bool,
    value_set: String,
    method: String,
    status: String,
    horizon: Option<u64>,
    witness: Option<String>,
}

impl VerdictRow {
    fn from_verdict(v: &BalanceVerdict) -> Self {
        Self {
            m: v.m,
            n: v.n,
            balanced: v.is_balanced(),
            value_set: v.values.as_ref().map(join).unwrap_or_default(),
            method: v.method.to_string(),
            status: v.status.to_string(),
            horizon: v.horizon,
            witness: v.witness.map(|w| w.to_string()),
        }
    }
}

fn verdict_text(v: &BalanceVerdict) -> String {
    let mut s = format!("{} m={} n={} method={}", v.status, v.m, v.n, v.method);
    if let Some(h) = v.horizon {
        s += &format!(" horizon={h}");
    }
    if let Some(vs) = &v.values {
        s += &format!(" values={}", join(vs));
    }
    if let Some(w) = v.witness {
        s += &format!(" witness={w}");
    }
    s
}

#[derive(Serialize)]
struct SweepRow {
    m: u64,
    n: u64,
    balanced: bool,
    value_set: String,
    method: &'static str,
}

fn fib(cmd: &FibCommand, format: Format, budget: rectbal::Budget) -> Result<u8, CliError> {
    match cmd {
        FibCommand::Bal { m, n, method, horizon } => {
            if horizon.is_some() && *method != FibMethod::Scan {
                return Err(CliError::Usage("--horizon applies to --method scan only".into()));
            }
            let v = match method {
                FibMethod::Exact => exact_balance(*m, *n),
                FibMethod::Scan => delta_scan(*m, *n, horizon.unwrap_or(DEFAULT_SCAN_HORIZON)),
                FibMethod::Zeck => zeck_balance(*m, *n),
            };
            emit_one(format, &verdict_text(&v), &v, &VerdictRow::from_verdict(&v))?;
            Ok(0)
        }
        FibCommand::Sweep { max, out } => {
            let table = BalanceTable::square(*max);
            let rows: Vec<SweepRow> = (0..=*max)
                .flat_map(|m| (0..=*max).map(move |n| (m, n)))
                .map(|(m, n)| {
                    let r = table.range(m, n);
                    SweepRow { m, n, balanced: r.is_balanced(), value_set: join(r.min..=r.max), method: "sweep" }
                })
                .collect();
            let format = if out.is_some() && format == Format::Text { Format::Csv } else { format };
            emit_rows(format, out.as_deref(), &rows, |r| {
                format!("{},{} {} values={}", r.m, r.n, if r.balanced { "balanced" } else { "unbalanced" }, r.value_set)
            })?;
            Ok(0)
        }
        FibCommand::Diverse { k } => {
            let report = diverse_identities_check(*k, budget)?;
            let rows: Vec<DiverseRow> = [("even", report.even), ("odd", report.odd)]
                .into_iter()
                .map(|(which, c)| DiverseRow {
                    k: *k,
                    identity: which,
                    i: c.i,
                    j: c.j,
                    side: c.side,
                    t_i: c.t_i,
                    t_j: c.t_j,
                    difference: c.difference(),
                    expected: c.expected,
                    holds: c.holds(),
                })
                .collect();
            emit_rows(format, None, &rows, |r| {
                format!(
                    "k={} {}: T({},{s},{s}) - T({},{s},{s}) = {} - {} = {} (expected {}) {}",
                    r.k,
                    r.identity,
                    r.i,
                    r.j,
                    r.t_i,
                    r.t_j,
                    r.difference,
                    r.expected,
                    if r.holds { "ok" } else { "FAILED" },
                    s = r.side
                )
            })?;
            Ok(ok(report.holds()))
        }
    }
}

#[derive(Serialize)]
struct DiverseRow {
    k: u64,
    identity: &'static str,
    i: u64,
    j: u64,
    side: u64,
    t_i: u64,
    t_j: u64,
    difference: i64,
    expected: i64,
    holds: bool,
}

#[derive(Serialize)]
struct TwoBalanceRow {
    m: u64,
    n: u64,
    status: String,
    two_balanced: bool,
    horizon: u64,
    scanned: u64,
    witness: Option<String>,
}

impl TwoBalanceRow {
    fn from_report(r: &TwoBalanceReport) -> Self {
        Self {
            m: r.m,
            n: r.n,
            status: r.status.to_string(),
            two_balanced: r.is_two_balanced(),
            horizon: r.horizon,
            scanned: r.scanned,
            witness: r.witness.map(|w| format!("{},{},{},{}", w.i, w.j, w.count_i, w.count_j)),
        }
    }

    fn text(&self) -> String {
        let mut s = format!("{} m={} n={} horizon={} scanned={}", self.status, self.m, self.n, self.horizon, self.scanned);
        if let Some(w) = &self.witness {
            s += &format!(" witness={w}");
        }
        s
    }
}

fn trib(cmd: &TribCommand, format: Format, budget: rectbal::Budget) -> Result<u8, CliError> {
    match cmd {
        TribCommand::Bal2 { m, n, horizon } => {
            let r = two_balance_scan(*m, *n, horizon.unwrap_or(DEFAULT_TWO_BALANCE_HORIZON), budget)?;
            let row = TwoBalanceRow::from_report(&r);
            let text = match r.witness {
                Some(w) => format!("{} letter={}", row.text(), w.letter),
                None => row.text(),
            };
            emit_one(format, &text, &r, &row)?;
            Ok(0)
        }
        TribCommand::List2 { limit, horizon } => {
            let h = horizon.unwrap_or(DEFAULT_TWO_BALANCE_HORIZON);
            let list = balanced_2xn_list(*limit, h, budget)?;
            let record = ListRecord { m: 2, limit: *limit, horizon: h, n: list.clone() };
            let row = ListRow { m: 2, limit: *limit, horizon: h, n: join(&list) };
            emit_one(format, &join(&list).replace(';', ","), &record, &row)?;
            Ok(0)
        }
        TribCommand::Corner { p, search_limit } => {
            let limit = search_limit.unwrap_or(DEFAULT_CORNER_SEARCH_LIMIT);
            let w = find_corner_witness(*p, limit, budget)?;
            let table = HankelTable::for_kind(SequenceKind::Tribonacci, (w.i.max(w.j) + p + 5) as usize, budget)?;
            let cert = corner_certificate(&w, 3, p + 3, &table)?;
            let row = CornerRow {
                p: *p,
                i: w.i,
                j: w.j,
                m: cert.m,
                n: cert.n,
                count2_i: cert.counts[0].get(2),
                count2_j: cert.counts[1].get(2),
            };
            let text = format!(
                "p={} i={} j={} rectangle {}x{} letter-2 counts {} vs {}",
                p, w.i, w.j, cert.m, cert.n, row.count2_i, row.count2_j
            );
            emit_one(format, &text, &cert, &row)?;
            Ok(ok(w.verify() && cert.letter2_gap() == 3))
        }
    }
}

#[derive(Serialize)]
struct ListRecord {
    m: u64,
    limit: u64,
    horizon: u64,
    n: Vec<u64>,
}

#[derive(Serialize)]
struct ListRow {
    m: u64,
    limit: u64,
    horizon: u64,
    n: String,
}

#[derive(Serialize)]
struct CornerRow {
    p: u64,
    i: u64,
    j: u64,
    m: u64,
    n: u64,
    count2_i: u64,
    count2_j: u64,
}

#[derive(Serialize)]
struct ExcessRow {
    i: u64,
    m: u64,
    n: u64,
    excess: i64,
}

#[derive(Serialize)]
struct ProfileRow {
    m: u64,
    n: u64,
    min_s: i64,
    max_s: i64,
    balance: u64,
    horizon: u64,
}

fn tm(cmd: &TmCommand, format: Format) -> Result<u8, CliError> {
    match cmd {
        TmCommand::Excess { i, m, n } => {
            let s = excess(*i, *m, *n);
            let fast = excess_parity_reduced(*i, *m, *n);
            let row = ExcessRow { i: *i, m: *m, n: *n, excess: s };
            emit_one(format, &s.to_string(), &row, &row)?;
            Ok(ok(s == fast))
        }
        TmCommand::Profile { m, n, horizon } => {
            if *m == 0 || *n == 0 {
                return Err(CliError::Usage("m and n must be at least 1".into()));
            }
            let p = excess_profile(*m, *n, horizon.unwrap_or_else(|| default_horizon(*m, *n)));
            let row = ProfileRow { m: p.m, n: p.n, min_s: p.min_s, max_s: p.max_s, balance: p.balance, horizon: p.horizon };
            let text = format!(
                "balance {} m={} n={} excess {}..{} horizon={}",
                p.balance, p.m, p.n, p.min_s, p.max_s, p.horizon
            );
            emit_one(format, &text, &p, &row)?;
            Ok(0)
        }
        TmCommand::Table { max, horizon, out } => {
            let rows: Vec<ProfileRow> = balance_class_table(*max, *horizon)
                .into_iter()
                .map(|p| ProfileRow { m: p.m, n: p.n, min_s: p.min_s, max_s: p.max_s, balance: p.balance, horizon: p.horizon })
                .collect();
            let format = if out.is_some() && format == Format::Text { Format::Csv } else { format };
            emit_rows(format, out.as_deref(), &rows, |r| format!("{},{} balance {}", r.m, r.n, r.balance))?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct InferRecord {
    max_len: usize,
    depth: usize,
    states: usize,
    accepting: usize,
}

#[derive(Serialize)]
struct RunRecord {
    m: u64,
    n: u64,
    accepted: bool,
}

fn dfa(cmd: &DfaCommand, format: Format) -> Result<u8, CliError> {
    match cmd {
        DfaCommand::Infer { max_len, depth, out } => {
            let table = build_sample_table(*max_len)?;
            let depth = depth.unwrap_or_else(|| default_depth(*max_len));
            let d = infer_min_dfa(&table, depth)?;
            if let Some(path) = out {
                let mut w = sink(Some(path))?;
                w.write_all(d.to_text().as_bytes())?;
                w.flush()?;
            }
            let record =
                InferRecord { max_len: *max_len, depth, states: d.num_states(), accepting: d.accepting_states().count() };
            let text = if out.is_some() {
                format!("states {} max_len={} depth={}", record.states, record.max_len, record.depth)
            } else {
                d.to_text().trim_end().to_string()
            };
            emit_one(format, &text, &record, &record)?;
            Ok(0)
        }
        DfaCommand::Run { file, pair } => {
            let text = std::fs::read_to_string(file)?;
            let d = Dfa::from_text(&text)?;
            if d.arity() != 2 {
                return Err(CliError::Usage(format!("{} is not a two-track automaton", file.display())));
            }
            let (m, n) = (pair[0], pair[1]);
            let record = RunRecord { m, n, accepted: d.accepts_pair(m, n) };
            let text = if record.accepted { "accept" } else { "reject" };
            emit_one(format, text, &record, &record)?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct NumRecord {
    system: &'static str,
    value: i64,
    digits: String,
}

fn num(cmd: &NumCommand, format: Format) -> Result<u8, CliError> {
    let non_negative = |v: i64| {
        u64::try_from(v).map_err(|_| CliError::Usage("this system represents non-negative integers only".into()))
    };
    let record = match cmd {
        NumCommand::Encode { system, value } => {
            let digits = match system {
                NumSystem::Zeck => ZeckRep::encode(non_negative(*value)?).to_string(),
                NumSystem::Trib => TribRep::encode(non_negative(*value)?).to_string(),
                NumSystem::Neg2 => NegaBinRep::encode(*value).to_string(),
            };
            NumRecord { system: system_name(*system), value: *value, digits }
        }
        NumCommand::Decode { system, digits } => {
            let value = match system {
                NumSystem::Zeck => ZeckRep::parse(digits)?.value() as i64,
                NumSystem::Trib => TribRep::parse(digits)?.value() as i64,
                NumSystem::Neg2 => NegaBinRep::parse(digits)?.value(),
            };
            NumRecord { system: system_name(*system), value, digits: digits.clone() }
        }
    };
    let text = match cmd {
        NumCommand::Encode { .. } => record.digits.clone(),
        NumCommand::Decode { .. } => record.value.to_string(),
    };
    emit_one(format, &text, &record, &record)?;
    Ok(0)
}

fn system_name(s: NumSystem) -> &'static str {
    match s {
        NumSystem::Zeck => "zeck",
        NumSystem::Trib => "trib",
        NumSystem::Neg2 => "neg2",
    }
}
