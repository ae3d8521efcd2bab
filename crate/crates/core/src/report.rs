//! Bound tables, reference envelopes, and unimodality scans, with CSV and
//! structured-JSON emitters. All emitted values are integers or exact
//! rationals; byte-stable output for fixed inputs in single-worker mode.

use num::rational::Ratio;
use serde::{Serialize, Serializer};

use crate::codes::{graham_sloane, gs_lower_bound, johnson_upper, ConstantWeightCode};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::solver::{Budget, SolveOutcome, SolveStatus};
use crate::subset::binomial;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Levels above this size are refused by table/scan generation before any
/// allocation happens.
pub const MAX_LEVEL_ENUMERATION: u64 = 5_000_000;

/// Where a code-size cell came from. When several sources could fill one
/// cell the precedence is FILE > EXACT > GS.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "GS")]
    Gs,
    #[serde(rename = "EXACT")]
    Exact,
    #[serde(rename = "FILE")]
    File,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Gs => "GS",
            Provenance::Exact => "EXACT",
            Provenance::File => "FILE",
        })
    }
}

/// How table cells are computed: Graham–Sloane only, or the exact solver
/// under a per-instance budget (falling back to GS on exhaustion when GS is
/// larger).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMethod {
    Gs,
    Exact(Budget),
}

impl TableMethod {
    pub fn name(&self) -> &'static str {
        match self {
            TableMethod::Gs => "GS",
            TableMethod::Exact(_) => "EXACT",
        }
    }

    pub fn budget(&self) -> Budget {
        match self {
            TableMethod::Gs => Budget::UNLIMITED,
            TableMethod::Exact(b) => *b,
        }
    }
}

/// Reference envelope around the middle binomial coefficient:
/// `lower_ref = C·(n+1)/n` and `upper_ref = C·(n+2)/n` with C = C(n,⌊n/2⌋),
/// kept as exact rationals. These drop the second-order asymptotic terms
/// (the flag says so), so they are advisory columns, never pass/fail bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    pub lower_ref: Ratio<u128>,
    pub upper_ref: Ratio<u128>,
    pub asymptotic_terms_omitted: bool,
}

pub fn asymptotic_envelope(n: u32) -> Envelope {
    assert!(n >= 2, "envelope needs n >= 2");
    let c = u128::from(binomial(n, n / 2));
    let n = u128::from(n);
    Envelope {
        lower_ref: Ratio::new(c * (n + 1), n),
        upper_ref: Ratio::new(c * (n + 2), n),
        asymptotic_terms_omitted: true,
    }
}

impl Serialize for Envelope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Envelope", 3)?;
        s.serialize_field("lower_ref", &self.lower_ref.to_string())?;
        s.serialize_field("upper_ref", &self.upper_ref.to_string())?;
        s.serialize_field("asymptotic_terms_omitted", &self.asymptotic_terms_omitted)?;
        s.end()
    }
}

/// One table row: the two-level bound C(n,k) + A(n,4,k+1) against the
/// three-level bound C(n,k) + A(n,4,k), with provenance and Johnson columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub n: u32,
    pub k: u32,
    pub binom: u64,
    pub code_k: u64,
    pub prov_k: Provenance,
    pub code_k1: u64,
    pub prov_k1: Provenance,
    pub kt_bound: u64,
    pub new_bound: u64,
    pub johnson_k: u64,
    pub johnson_k1: u64,
    pub optimal_k: bool,
    pub optimal_k1: bool,
    pub envelope: Envelope,
}

impl BoundRecord {
    /// The row-level identities and provenance-implied inequalities.
    pub fn is_consistent(&self) -> bool {
        self.kt_bound == self.binom + self.code_k1
            && self.new_bound == self.binom + self.code_k
            && self.code_k <= self.johnson_k
            && self.code_k1 <= self.johnson_k1
            && (self.prov_k != Provenance::Gs || self.code_k >= gs_lower_bound(self.n, self.k))
            && (self.prov_k1 != Provenance::Gs
                || self.code_k1 >= gs_lower_bound(self.n, self.k + 1))
    }
}

/// A row together with the codes that realize it, so callers can rebuild
/// the corresponding families.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub record: BoundRecord,
    pub code_at_k: ConstantWeightCode,
    pub code_at_k1: ConstantWeightCode,
}

/// One code-size cell: the best size found, its provenance, whether it is
/// proven optimal, and the realizing code.
struct CellValue {
    size: u64,
    provenance: Provenance,
    optimal: bool,
    code: ConstantWeightCode,
}

fn solve_cell(
    n: u32,
    k: u32,
    method: TableMethod,
    mode: ExecMode,
    provided: Option<&ConstantWeightCode>,
) -> Result<CellValue> {
    let johnson = johnson_upper(n, k)?;
    if let Some(code) = provided {
        // File-provided codes take precedence; they were re-verified when
        // constructed, so the size is a certified lower bound.
        return Ok(CellValue {
            size: code.len() as u64,
            provenance: Provenance::File,
            optimal: code.len() as u64 == johnson,
            code: code.clone(),
        });
    }
    if binomial(n, k) > MAX_LEVEL_ENUMERATION {
        return Err(Error::InstanceTooLarge {
            vertices: binomial(n, k) as usize,
            limit: MAX_LEVEL_ENUMERATION as usize,
        });
    }
    let gs = graham_sloane(n, k)?;
    let from_gs = |gs: ConstantWeightCode| CellValue {
        size: gs.len() as u64,
        provenance: Provenance::Gs,
        optimal: gs.len() as u64 == johnson,
        code: gs,
    };
    match method {
        TableMethod::Gs => Ok(from_gs(gs)),
        TableMethod::Exact(budget) => {
            match crate::solver::exact_max_code_mode(n, 4, k, budget, mode) {
                Ok(outcome) => {
                    let size = outcome.code.len() as u64;
                    if outcome.status == SolveStatus::ProvenOptimal {
                        Ok(CellValue {
                            size,
                            provenance: Provenance::Exact,
                            optimal: true,
                            code: outcome.code,
                        })
                    } else if size >= gs.len() as u64 {
                        Ok(CellValue {
                            size,
                            provenance: Provenance::Exact,
                            optimal: size == johnson,
                            code: outcome.code,
                        })
                    } else {
                        Ok(from_gs(gs))
                    }
                }
                // Instances too big to even start fall back to GS rather
                // than failing the table.
                Err(Error::InstanceTooLarge { .. }) => Ok(from_gs(gs)),
                Err(other) => Err(other),
            }
        }
    }
}

/// Builds one row per n (ascending input order is preserved) at k = ⌊n/2⌋.
pub fn bound_table_cells(
    n_values: &[u32],
    method: TableMethod,
    mode: ExecMode,
) -> Result<Vec<TableCell>> {
    for &n in n_values {
        if n < 2 {
            return Err(Error::UniverseOutOfRange(n));
        }
    }
    let build = |&n: &u32| -> Result<TableCell> {
        let k = n / 2;
        let at_k = solve_cell(n, k, method, mode, None)?;
        let at_k1 = solve_cell(n, k + 1, method, mode, None)?;
        Ok(assemble_cell(n, k, at_k, at_k1))
    };
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return n_values.par_iter().map(build).collect();
    }
    n_values.iter().map(build).collect()
}

fn assemble_cell(n: u32, k: u32, at_k: CellValue, at_k1: CellValue) -> TableCell {
    let record = BoundRecord {
        n,
        k,
        binom: binomial(n, k),
        code_k: at_k.size,
        prov_k: at_k.provenance,
        code_k1: at_k1.size,
        prov_k1: at_k1.provenance,
        kt_bound: binomial(n, k) + at_k1.size,
        new_bound: binomial(n, k) + at_k.size,
        johnson_k: johnson_upper(n, k).expect("validated"),
        johnson_k1: johnson_upper(n, k + 1).expect("validated"),
        optimal_k: at_k.optimal,
        optimal_k1: at_k1.optimal,
        envelope: asymptotic_envelope(n),
    };
    debug_assert!(record.is_consistent());
    TableCell {
        record,
        code_at_k: at_k.code,
        code_at_k1: at_k1.code,
    }
}

/// [`bound_table_cells`] without the realizing codes.
pub fn bound_table(
    n_values: &[u32],
    method: TableMethod,
    mode: ExecMode,
) -> Result<Vec<BoundRecord>> {
    Ok(bound_table_cells(n_values, method, mode)?
        .into_iter()
        .map(|c| c.record)
        .collect())
}

pub const CSV_HEADER: &str =
    "n,k,binom,code_k,prov_k,code_k1,prov_k1,kt_bound,new_bound,johnson_k,johnson_k1,optimal_k,optimal_k1";

/// CSV with the pinned header; envelope columns are structured-output only.
pub fn records_to_csv(records: &[BoundRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.k,
            r.binom,
            r.code_k,
            r.prov_k,
            r.code_k1,
            r.prov_k1,
            r.kt_bound,
            r.new_bound,
            r.johnson_k,
            r.johnson_k1,
            r.optimal_k,
            r.optimal_k1
        ));
    }
    out
}

/// The `meta` block of structured reports.
#[derive(Clone, Debug, Serialize)]
pub struct ReportMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub method: String,
    pub budget_millis: u64,
    pub budget_nodes: u64,
}

impl ReportMeta {
    pub fn new(method: &TableMethod) -> ReportMeta {
        let budget = method.budget();
        ReportMeta {
            tool: "nfree",
            version: env!("CARGO_PKG_VERSION"),
            method: method.name().to_string(),
            budget_millis: budget.millis,
            budget_nodes: budget.nodes,
        }
    }
}

#[derive(Serialize)]
struct TableReport<'a> {
    meta: &'a ReportMeta,
    records: &'a [BoundRecord],
}

/// Structured JSON: `{ meta: {...}, records: [...] }`, newline-terminated.
pub fn records_to_json(records: &[BoundRecord], meta: &ReportMeta) -> String {
    let mut out = serde_json::to_string_pretty(&TableReport { meta, records })
        .expect("report types serialize infallibly");
    out.push('\n');
    out
}

/// One scanned weight: pigeonhole/Graham–Sloane lower bound, Johnson upper
/// bound, and the exact value when the solver proved one in budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub k: u32,
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
}

/// Unimodality evidence for A(n,4,k) over 3 ≤ k ≤ n−3. The verdict speaks
/// only about exactly solved entries: strictly rising to the peak, strictly
/// falling after, allowing a two-wide peak plateau only at adjacent weights
/// (the odd-n middle pair).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodalityVerdict {
    pub n: u32,
    pub entries: Vec<ScanEntry>,
    pub strictly_unimodal_on_exact_range: bool,
    pub peak_positions: Vec<u32>,
}

pub fn unimodality_scan(n: u32, budget: Budget, mode: ExecMode) -> Result<UnimodalityVerdict> {
    crate::subset::check_universe(n)?;
    let ks: Vec<u32> = (3..=n.saturating_sub(3)).collect();
    let scan_one = |&k: &u32| -> Result<ScanEntry> {
        if binomial(n, k) > MAX_LEVEL_ENUMERATION {
            return Err(Error::InstanceTooLarge {
                vertices: binomial(n, k) as usize,
                limit: MAX_LEVEL_ENUMERATION as usize,
            });
        }
        let lower = graham_sloane(n, k)?.len() as u64;
        let upper = johnson_upper(n, k)?;
        let exact = match crate::solver::exact_max_code_mode(n, 4, k, budget, mode) {
            Ok(outcome) if outcome.status == SolveStatus::ProvenOptimal => {
                Some(outcome.code.len() as u64)
            }
            Ok(_) => None,
            Err(Error::InstanceTooLarge { .. }) => None,
            Err(other) => return Err(other),
        };
        Ok(ScanEntry {
            k,
            lower,
            upper,
            exact,
        })
    };
    #[cfg(feature = "parallel")]
    let entries: Result<Vec<ScanEntry>> = if mode.is_parallel() {
        ks.par_iter().map(scan_one).collect()
    } else {
        ks.iter().map(scan_one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let entries: Result<Vec<ScanEntry>> = ks.iter().map(scan_one).collect();
    let entries = entries?;
    let (strict, peaks) = evaluate_unimodality(&entries);
    Ok(UnimodalityVerdict {
        n,
        entries,
        strictly_unimodal_on_exact_range: strict,
        peak_positions: peaks,
    })
}

/// Evaluates strict unimodality over the exactly-known entries, literally:
/// non-adjacent exact weights are compared as a plain sequence. No exact
/// entries gives a vacuous pass with no peaks.
fn evaluate_unimodality(entries: &[ScanEntry]) -> (bool, Vec<u32>) {
    let exact: Vec<(u32, u64)> = entries
        .iter()
        .filter_map(|e| e.exact.map(|v| (e.k, v)))
        .collect();
    let Some(&peak_value) = exact.iter().map(|(_, v)| v).max() else {
        return (true, Vec::new());
    };
    let peaks: Vec<u32> = exact
        .iter()
        .filter(|&&(_, v)| v == peak_value)
        .map(|&(k, _)| k)
        .collect();
    let first = exact.iter().position(|&(_, v)| v == peak_value).unwrap();
    let last = exact.iter().rposition(|&(_, v)| v == peak_value).unwrap();
    let plateau_ok = match peaks.len() {
        1 => true,
        2 => last == first + 1 && exact[last].0 == exact[first].0 + 1,
        _ => false,
    };
    let rising = exact[..=first].windows(2).all(|w| w[0].1 < w[1].1);
    let falling = exact[last..].windows(2).all(|w| w[0].1 > w[1].1);
    (plateau_ok && rising && falling, peaks)
}

#[derive(Serialize)]
struct ScanReport<'a> {
    meta: &'a ReportMeta,
    scan: &'a UnimodalityVerdict,
}

pub fn verdict_to_json(verdict: &UnimodalityVerdict, meta: &ReportMeta) -> String {
    let mut out = serde_json::to_string_pretty(&ScanReport {
        meta,
        scan: verdict,
    })
    .expect("report types serialize infallibly");
    out.push('\n');
    out
}

/// A solver run flattened to the report fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutcomeRecord {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub size: u64,
    pub status: String,
    pub nodes: u64,
    pub millis: u64,
}

impl OutcomeRecord {
    pub fn new(outcome: &SolveOutcome) -> OutcomeRecord {
        OutcomeRecord {
            n: outcome.code.universe(),
            k: outcome.code.weight(),
            d: outcome.code.min_distance(),
            size: outcome.code.len() as u64,
            status: outcome.status.to_string(),
            nodes: outcome.nodes_explored,
            millis: outcome.elapsed.as_millis() as u64,
        }
    }
}

pub fn outcome_to_json(record: &OutcomeRecord) -> String {
    let mut out =
        serde_json::to_string_pretty(record).expect("report types serialize infallibly");
    out.push('\n');
    out
}

pub const OUTCOME_CSV_HEADER: &str = "n,k,d,size,status,nodes,millis";

pub fn outcome_to_csv(record: &OutcomeRecord) -> String {
    format!(
        "{}\n{},{},{},{},{},{},{}\n",
        OUTCOME_CSV_HEADER,
        record.n,
        record.k,
        record.d,
        record.size,
        record.status,
        record.nodes,
        record.millis
    )
}

pub const SCAN_CSV_HEADER: &str = "n,k,gs_lower,johnson_upper,exact";

/// Scan rows as CSV; unknown exact values render as an empty field.
pub fn verdict_to_csv(verdict: &UnimodalityVerdict) -> String {
    let mut out = String::from(SCAN_CSV_HEADER);
    out.push('\n');
    for e in &verdict.entries {
        let exact = e.exact.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            verdict.n, e.k, e.lower, e.upper, exact
        ));
    }
    out
}
