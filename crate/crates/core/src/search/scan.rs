use crate::error::{Error, Result};
use crate::graph::{parse_graph6, to_graph6, Graph};
use crate::invariants::{dk_value, invariant_report};
use crate::structure::{check_theorem1, is_in_class_d3_until, is_planar};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Invariants,
    Planarity,
    D3Membership,
    Theorem1,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Invariants,
        Check::Planarity,
        Check::D3Membership,
        Check::Theorem1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Invariants => "invariants",
            Check::Planarity => "planarity",
            Check::D3Membership => "d3-membership",
            Check::Theorem1 => "theorem1",
        }
    }
}

/// Set of checks; parses from a comma list such as `invariants,planarity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckSet(pub BTreeSet<Check>);

impl CheckSet {
    pub fn all() -> Self {
        CheckSet(Check::ALL.into_iter().collect())
    }

    pub fn contains(&self, c: Check) -> bool {
        self.0.contains(&c)
    }
}

impl FromStr for CheckSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c = Check::ALL
                .into_iter()
                .find(|c| c.name() == part)
                .ok_or_else(|| Error::InvalidParameters(format!("unknown check {part:?}")))?;
            set.insert(c);
        }
        Ok(CheckSet(set))
    }
}

impl fmt::Display for CheckSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|c| c.name()).collect();
        f.write_str(&names.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Summary {
    pub holds: bool,
    pub holds_without_own_singleton: bool,
    pub colorings_checked: usize,
}

/// One line of scan output. Fields of checks that were not requested are
/// omitted; `theorem1` is present only for D(k) graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: usize,
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_dom: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dk: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planar: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d3_member: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem1: Option<Theorem1Summary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KStats {
    pub count: usize,
    pub min_order: usize,
    /// First graph (in input order) of minimum order.
    pub witness: String,
    pub planar: usize,
    pub d3_members: usize,
    pub theorem1_failures: usize,
}

/// Aggregates over a scan; identical for an interrupted-and-resumed run.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ScanSummary {
    pub records: usize,
    pub errors: usize,
    pub planar: usize,
    pub d3_members: usize,
    pub skipped: Vec<SkippedLine>,
    /// Keyed by k; only graphs whose invariants were computed contribute.
    pub per_k: BTreeMap<usize, KStats>,
}

impl ScanSummary {
    fn absorb(&mut self, r: &ScanRecord) {
        self.records += 1;
        self.errors += r.error.is_some() as usize;
        self.planar += (r.planar == Some(true)) as usize;
        self.d3_members += (r.d3_member == Some(true)) as usize;
        if let Some(k) = r.dk {
            let s = self.per_k.entry(k).or_insert_with(|| KStats {
                min_order: usize::MAX,
                ..KStats::default()
            });
            s.count += 1;
            if r.n < s.min_order {
                s.min_order = r.n;
                s.witness = r.graph6.clone();
            }
            s.planar += (r.planar == Some(true)) as usize;
            s.d3_members += (r.d3_member == Some(true)) as usize;
            s.theorem1_failures += r.theorem1.as_ref().is_some_and(|t| !t.holds) as usize;
        }
    }
}

/// CSV form of the per-k table: `k,count,min_order,witness,planar,d3_members,theorem1_failures`.
pub fn summary_csv(summary: &ScanSummary) -> String {
    let mut out = String::from("k,count,min_order,witness,planar,d3_members,theorem1_failures\n");
    for (k, s) in &summary.per_k {
        out.push_str(&format!(
            "{k},{},{},{},{},{},{}\n",
            s.count, s.min_order, s.witness, s.planar, s.d3_members, s.theorem1_failures
        ));
    }
    out
}

/// Resume point written after every completed chunk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub source_sha256: String,
    pub checks: String,
    /// Source lines consumed so far.
    pub next_line: usize,
    pub next_index: usize,
    /// Length of the record file covering exactly the consumed lines.
    pub out_bytes: u64,
    pub summary: ScanSummary,
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub checks: CheckSet,
    pub jobs: usize,
    pub strict: bool,
    pub checkpoint: Option<PathBuf>,
    /// Graphs per unit of parallel work and checkpointing.
    pub chunk: usize,
    /// Stop (as if interrupted) once this many records exist in total.
    pub stop_after: Option<usize>,
    /// Per-graph budget for the membership search.
    pub deadline: Option<Duration>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            checks: CheckSet::all(),
            jobs: 1,
            strict: false,
            checkpoint: None,
            chunk: 256,
            stop_after: None,
            deadline: None,
        }
    }
}

fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data).iter().map(|b| format!("{b:02x}")).collect()
}

fn check_graph(g: &Graph, index: usize, line: usize, checks: &CheckSet, deadline: Option<Duration>) -> ScanRecord {
    let mut r = ScanRecord {
        index,
        line,
        graph6: to_graph6(g),
        n: g.order(),
        edge_count: g.edge_count(),
        gamma: None,
        gamma_t: None,
        chi: None,
        chi_d: None,
        chi_dom: None,
        dk: None,
        planar: None,
        d3_member: None,
        theorem1: None,
        error: None,
    };
    if let Err(e) = fill(&mut r, g, checks, deadline) {
        r.error = Some(e.to_string());
    }
    r
}

fn fill(r: &mut ScanRecord, g: &Graph, checks: &CheckSet, deadline: Option<Duration>) -> Result<()> {
    if checks.contains(Check::Planarity) {
        let v = is_planar(g);
        assert!(v.verify(g), "planarity certificate failed to verify");
        r.planar = Some(v.planar);
    }
    let mut dk = None;
    if checks.contains(Check::Invariants) {
        let rep = invariant_report(g)?;
        assert!(rep.witnesses_valid(g), "invariant witness failed to verify");
        r.gamma = Some(rep.gamma);
        r.gamma_t = rep.gamma_t;
        r.chi = Some(rep.chi);
        r.chi_d = Some(rep.chi_d);
        r.chi_dom = rep.chi_dom;
        r.dk = rep.dk;
        dk = rep.dk;
    } else if checks.contains(Check::Theorem1) {
        dk = dk_value(g)?;
    }
    if checks.contains(Check::D3Membership) {
        let until = deadline.map(|d| Instant::now() + d);
        r.d3_member = Some(is_in_class_d3_until(g, until)?.is_some());
    }
    if checks.contains(Check::Theorem1) && dk.is_some() {
        let t = check_theorem1(g)?;
        r.theorem1 = Some(Theorem1Summary {
            holds: t.holds(),
            holds_without_own_singleton: t.holds_without_own_singleton(),
            colorings_checked: t.colorings_checked,
        });
    }
    Ok(())
}

/// Checks in-memory graphs, records in input order.
pub fn scan_graphs(graphs: &[Graph], checks: &CheckSet, jobs: usize) -> Result<Vec<ScanRecord>> {
    let pool = pool(jobs)?;
    Ok(pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| check_graph(g, i, i + 1, checks, None))
            .collect()
    }))
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(format!("worker pool: {e}")))
}

fn write_atomic(path: &Path, data: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, data)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Scans a graph6 source. Records go to `out` as JSON Lines in input order;
/// with a checkpoint file the run resumes where a previous one stopped.
pub fn scan_stream(source: &str, out: Option<&Path>, opts: &ScanOptions) -> Result<ScanSummary> {
    let digest = sha256_hex(source.as_bytes());
    let checks = opts.checks.to_string();
    let mut state = Checkpoint {
        source_sha256: digest.clone(),
        checks: checks.clone(),
        next_line: 0,
        next_index: 0,
        out_bytes: 0,
        summary: ScanSummary::default(),
    };
    if let Some(cp) = opts.checkpoint.as_deref().filter(|p| p.exists()) {
        let saved: Checkpoint = serde_json::from_str(&fs::read_to_string(cp)?)?;
        if saved.source_sha256 != digest {
            return Err(Error::CheckpointMismatch("source digest differs".into()));
        }
        if saved.checks != checks {
            return Err(Error::CheckpointMismatch(format!(
                "checks differ: saved {}, requested {checks}",
                saved.checks
            )));
        }
        state = saved;
    }
    let mut sink: Option<File> = match out {
        Some(path) => {
            let mut f = OpenOptions::new().create(true).write(true).truncate(false).open(path)?;
            let len = f.metadata()?.len();
            if len < state.out_bytes {
                return Err(Error::CheckpointMismatch(format!(
                    "record file has {len} bytes, checkpoint expects {}",
                    state.out_bytes
                )));
            }
            f.set_len(state.out_bytes)?;
            f.seek(SeekFrom::End(0))?;
            Some(f)
        }
        None => None,
    };

    let lines: Vec<&str> = source.lines().collect();
    let pool = pool(opts.jobs)?;
    let chunk = opts.chunk.max(1);
    let mut pos = state.next_line;
    while pos < lines.len() {
        if opts.stop_after.is_some_and(|s| state.summary.records >= s) {
            break;
        }
        let mut batch: Vec<(usize, Graph)> = Vec::new();
        let mut skipped = Vec::new();
        let mut end = pos;
        while end < lines.len() && batch.len() < chunk {
            let text = lines[end].trim();
            end += 1;
            if text.is_empty() {
                continue;
            }
            match parse_graph6(text) {
                Ok(g) => batch.push((end, g)),
                Err(e) if opts.strict => {
                    return Err(Error::Source {
                        line: end,
                        reason: e.to_string(),
                    })
                }
                Err(e) => skipped.push(SkippedLine {
                    line: end,
                    reason: e.to_string(),
                }),
            }
        }
        if let Some(limit) = opts.stop_after {
            let room = limit - state.summary.records;
            if batch.len() > room {
                end = batch[room].0 - 1;
                batch.truncate(room);
                skipped.retain(|s| s.line <= end);
            }
        }
        let first = state.next_index;
        let records: Vec<ScanRecord> = pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .map(|(i, (line, g))| check_graph(g, first + i, *line, &opts.checks, opts.deadline))
                .collect()
        });
        let mut text = String::new();
        for r in &records {
            text.push_str(&serde_json::to_string(r)?);
            text.push('\n');
            state.summary.absorb(r);
        }
        state.summary.skipped.extend(skipped);
        if let Some(f) = sink.as_mut() {
            f.write_all(text.as_bytes())?;
            f.flush()?;
        }
        state.out_bytes += text.len() as u64;
        state.next_index += records.len();
        state.next_line = end;
        pos = end;
        if let Some(cp) = &opts.checkpoint {
            write_atomic(cp, serde_json::to_string_pretty(&state)?.as_bytes())?;
        }
    }
    Ok(state.summary)
}
