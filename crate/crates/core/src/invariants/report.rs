use super::coloring::has_coloring;
use super::{
    chromatic_number, dominated_chromatic_number, dominator_chromatic_number, domination_number,
    total_domination_number, Coloring, ColoringKind, DominatingWitness,
};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};
use serde::{Deserialize, Serialize};

/// The five invariants of a connected graph with optimal witnesses.
///
/// `gamma_t` is absent when the graph has an isolated vertex (only `K_1`
/// among connected graphs) and `chi_dom` is absent on a single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edge_count: usize,
    pub graph6: String,
    pub gamma: usize,
    pub gamma_witness: DominatingWitness,
    pub gamma_t: Option<usize>,
    pub gamma_t_witness: Option<DominatingWitness>,
    pub chi: usize,
    pub chi_coloring: Coloring,
    pub chi_d: usize,
    pub chi_d_coloring: Coloring,
    pub chi_dom: Option<usize>,
    pub chi_dom_coloring: Option<Coloring>,
    pub dk: Option<usize>,
}

/// Flat form of [`InvariantReport`] for CSV rows and one-line JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub edge_count: usize,
    pub gamma: usize,
    pub gamma_t: Option<usize>,
    pub chi: usize,
    pub chi_d: usize,
    pub chi_dom: Option<usize>,
    pub dk: Option<usize>,
    pub graph6: String,
}

impl InvariantRecord {
    pub const CSV_HEADER: &'static str = "n,edge_count,gamma,gamma_t,chi,chi_d,chi_dom,dk,graph6";

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.edge_count,
            self.gamma,
            opt(self.gamma_t),
            self.chi,
            self.chi_d,
            opt(self.chi_dom),
            opt(self.dk),
            self.graph6
        )
    }
}

impl InvariantReport {
    pub fn record(&self) -> InvariantRecord {
        InvariantRecord {
            n: self.n,
            edge_count: self.edge_count,
            gamma: self.gamma,
            gamma_t: self.gamma_t,
            chi: self.chi,
            chi_d: self.chi_d,
            chi_dom: self.chi_dom,
            dk: self.dk,
            graph6: self.graph6.clone(),
        }
    }

    /// Sandwich inequalities: `gamma <= gamma_t`, `chi <= chi_d`, `chi <= chi_dom`.
    pub fn sandwich_holds(&self) -> bool {
        self.gamma_t.is_none_or(|t| self.gamma <= t)
            && self.chi <= self.chi_d
            && self.chi_dom.is_none_or(|d| self.chi <= d)
    }

    /// Re-checks every witness against its defining predicate.
    pub fn witnesses_valid(&self, g: &Graph) -> bool {
        self.gamma_witness.is_valid(g)
            && self.gamma_witness.vertices.len() == self.gamma
            && self.gamma_t_witness.as_ref().is_none_or(|w| {
                w.is_valid(g) && Some(w.vertices.len()) == self.gamma_t
            })
            && self.chi_coloring.is_proper(g)
            && self.chi_coloring.k() == self.chi
            && self.chi_d_coloring.is_dominator(g)
            && self.chi_d_coloring.k() == self.chi_d
            && self
                .chi_dom_coloring
                .as_ref()
                .is_none_or(|c| c.is_dominated(g) && Some(c.k()) == self.chi_dom)
    }
}

/// Computes all five invariants of a connected graph.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let (gamma, gamma_witness) = domination_number(g)?;
    let (gamma_t, gamma_t_witness) = match total_domination_number(g) {
        Ok((t, w)) => (Some(t), Some(w)),
        Err(Error::IsolatedVertex(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let (chi, chi_coloring) = chromatic_number(g)?;
    let (chi_d, chi_d_coloring) = dominator_chromatic_number(g)?;
    let (chi_dom, chi_dom_coloring) = match dominated_chromatic_number(g) {
        Ok((d, c)) => (Some(d), Some(c)),
        Err(Error::SingleVertex) => (None, None),
        Err(e) => return Err(e),
    };
    let dk = (gamma == chi && chi == chi_d).then_some(chi);
    let report = InvariantReport {
        n: g.order(),
        edge_count: g.edge_count(),
        graph6: to_graph6(g),
        gamma,
        gamma_witness,
        gamma_t,
        gamma_t_witness,
        chi,
        chi_coloring,
        chi_d,
        chi_d_coloring,
        chi_dom,
        chi_dom_coloring,
        dk,
    };
    assert!(report.sandwich_holds(), "sandwich inequalities violated: {report:?}");
    Ok(report)
}

/// `Some(k)` iff `gamma = chi = chi_d = k`, with the full report either way.
pub fn classify_dk(g: &Graph) -> Result<(Option<usize>, InvariantReport)> {
    let report = invariant_report(g)?;
    Ok((report.dk, report))
}

/// D(k) test without witnesses: stops as soon as two invariants differ.
pub fn dk_value(g: &Graph) -> Result<Option<usize>> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let (gamma, _) = domination_number(g)?;
    let (chi, _) = chromatic_number(g)?;
    if gamma != chi {
        return Ok(None);
    }
    // chi_d >= chi, so chi_d = chi iff a dominator coloring with chi classes exists
    Ok(has_coloring(g, ColoringKind::Dominator, chi)?.then_some(chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;

    #[test]
    fn classify_small_graphs() {
        let (dk, r) = classify_dk(&complete_bipartite(2, 2).unwrap().0).unwrap();
        assert_eq!(dk, Some(2));
        assert_eq!((r.gamma, r.chi, r.chi_d), (2, 2, 2));
        let (dk, r) = classify_dk(&complete_bipartite(1, 3).unwrap().0).unwrap();
        assert_eq!(dk, None);
        assert_eq!((r.gamma, r.chi), (1, 2));
        assert_eq!(classify_dk(&Graph::empty(2)).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn single_vertex_report() {
        let (dk, r) = classify_dk(&Graph::empty(1)).unwrap();
        assert_eq!(dk, Some(1));
        assert_eq!((r.gamma_t, r.chi_dom), (None, None));
        assert!(r.witnesses_valid(&Graph::empty(1)));
    }

    #[test]
    fn record_csv() {
        let (_, r) = classify_dk(&Graph::complete(3)).unwrap();
        assert_eq!(r.record().csv_row(), "3,3,1,2,3,3,3,,Bw");
    }

    #[test]
    fn fast_path_agrees() {
        for g in [
            complete_bipartite(2, 3).unwrap().0,
            Graph::path(4),
            Graph::cycle(5).unwrap(),
            Graph::empty(1),
        ] {
            assert_eq!(dk_value(&g).unwrap(), classify_dk(&g).unwrap().0);
        }
    }
}
