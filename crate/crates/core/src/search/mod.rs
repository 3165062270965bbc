//! Enumeration of small connected graphs, streamed predicate scans with
//! checkpoints, and the minimum-order survey.

mod scan;
mod survey;

pub use scan::{
    scan_graphs, scan_stream, summary_csv, Check, CheckSet, Checkpoint, KStats, ScanOptions,
    ScanRecord, ScanSummary, SkippedLine, Theorem1Summary,
};
pub use survey::{connected_graph_count, min_order_scan, OrderScan, SurveyRecord};

use crate::error::{Error, Result};
use crate::graph::{canonical_code, Graph};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest order the built-in generator handles.
pub const MAX_BUILTIN_ORDER: usize = 7;

/// One representative per isomorphism class of connected graphs of order
/// `n`, canonically labeled and sorted by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_BUILTIN_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        level = extend_connected(&level);
    }
    Ok(level)
}

/// Given every connected graph of order `m` (up to isomorphism), returns
/// every connected graph of order `m + 1`: each one has a vertex whose
/// removal leaves it connected, so joining a new vertex to each nonempty
/// neighbor subset reaches all of them.
pub fn extend_connected(graphs: &[Graph]) -> Vec<Graph> {
    let codes: BTreeSet<_> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let m = g.order();
            assert!(m < 63, "order too large for subset extension");
            (1u64..1 << m).map(move |mask| {
                let h = g.with_new_vertex((0..m).filter(|&v| mask >> v & 1 == 1));
                canonical_code(&h)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    codes.iter().map(|c| c.to_graph()).collect()
}
