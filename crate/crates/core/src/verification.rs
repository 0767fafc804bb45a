//! Batch checks: the prism conjecture sweep over graph6 streams, the product
//! lower-bound question, bound audits and the subgraph demonstrations.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::certificate::{Assignment, Certificate, CertificateJson};
use crate::checker;
use crate::constructions::{
    bound_prop25, bound_thm21, bound_thm26, construct_layer_lift, construct_prop25, construct_thm21, construct_thm26,
    BoundValue,
};
use crate::error::SolveError;
use crate::family::{generate, Family};
use crate::graph::Graph;
use crate::graph6::from_graph6;
use crate::product::{cartesian_product, ProductGraph};
use crate::solver::{sg_product_with_layer_pruning, strong_geodetic_number, SgOutcome, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// `sg(G □ K_2) > sg(G)`.
    Holds,
    /// `sg(G □ K_2) = sg(G)`.
    Equality,
    Violated,
    Indeterminate,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    /// Zero-based position in the input stream.
    pub line: usize,
    pub graph6: String,
    pub n: Option<usize>,
    pub sg: Option<usize>,
    pub sg_prism: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Optimal certificates for `G` and `G □ K_2`, and a verified prism set
    /// of size `2 sg(G)` copied from the first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<SweepCertificates>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepCertificates {
    pub graph: CertificateJson,
    pub prism: CertificateJson,
    pub doubled: CertificateJson,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub equality: usize,
    pub violated: usize,
    pub indeterminate: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub records: Vec<SweepRecord>,
    pub counts: StatusCounts,
    /// graph6 strings of the equality cases, in input order.
    pub equality_catalog: Vec<String>,
}

impl ConjectureReport {
    pub fn violations(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| r.status == Status::Violated)
    }
}

/// Computes `sg(G)` and `sg(G □ K_2)` for every graph6 line.
///
/// Lines are processed in parallel; the report keeps input order. Malformed
/// or disconnected lines become `error` records and the sweep continues.
/// Records whose budget ran out are `indeterminate` and count toward no verdict.
pub fn sweep_conjecture<S: AsRef<str> + Sync>(lines: &[S], opts: &SolveOptions) -> ConjectureReport {
    let records: Vec<SweepRecord> = lines
        .par_iter()
        .enumerate()
        .map(|(i, l)| sweep_one(i, l.as_ref().trim(), opts))
        .collect();
    let mut counts = StatusCounts::default();
    for r in &records {
        *match r.status {
            Status::Holds => &mut counts.holds,
            Status::Equality => &mut counts.equality,
            Status::Violated => &mut counts.violated,
            Status::Indeterminate => &mut counts.indeterminate,
            Status::Error => &mut counts.error,
        } += 1;
    }
    let equality_catalog = records
        .iter()
        .filter(|r| r.status == Status::Equality)
        .map(|r| r.graph6.clone())
        .collect();
    ConjectureReport { records, counts, equality_catalog }
}

fn sweep_one(line: usize, text: &str, opts: &SolveOptions) -> SweepRecord {
    let mut rec = SweepRecord {
        line,
        graph6: text.to_string(),
        n: None,
        sg: None,
        sg_prism: None,
        status: Status::Error,
        error: None,
        certificates: None,
    };
    match sweep_values(text, opts) {
        Ok((n, g_out, p_out, certs)) => {
            rec.n = Some(n);
            rec.sg = g_out.value();
            rec.sg_prism = p_out.value();
            rec.status = match (rec.sg, rec.sg_prism) {
                (Some(a), Some(b)) if b > a => Status::Holds,
                (Some(a), Some(b)) if b == a => Status::Equality,
                (Some(_), Some(_)) => Status::Violated,
                _ => Status::Indeterminate,
            };
            rec.certificates = certs;
        }
        Err(e) => rec.error = Some(e),
    }
    rec
}

type SweepValues = (usize, SgOutcome, SgOutcome, Option<SweepCertificates>);

fn sweep_values(text: &str, opts: &SolveOptions) -> Result<SweepValues, String> {
    let g = from_graph6(text).map_err(|e| e.to_string())?;
    let k2 = Family::Complete(2).generate().map_err(|e| e.to_string())?;
    let pg = cartesian_product(&g, &k2).map_err(|e| e.to_string())?;
    let g_out = strong_geodetic_number(&g, opts).map_err(|e| e.to_string())?;
    let p_out = sg_product_with_layer_pruning(&pg, opts).map_err(|e| e.to_string())?;
    let certs = match (g_out.certificate(), p_out.certificate()) {
        (Some(gc), Some(pc)) => {
            let (lifted, doubled) = construct_layer_lift(&g, gc, &k2).map_err(|e| e.to_string())?;
            if pc.size() > doubled.size() {
                return Err(format!("prism value {} exceeds the doubled set {}", pc.size(), doubled.size()));
            }
            Some(SweepCertificates {
                graph: gc.to_json(&g),
                prism: pc.to_json(pg.graph()),
                doubled: doubled.to_json(lifted.graph()),
            })
        }
        _ => None,
    };
    Ok((g.order(), g_out, p_out, certs))
}

/// Re-checks every stored certificate of a record with the independent
/// checker and confirms the recorded values match their sizes.
pub fn recheck_record(r: &SweepRecord) -> Result<(), String> {
    let Some(c) = &r.certificates else {
        return Ok(());
    };
    for cert in [&c.graph, &c.prism, &c.doubled] {
        checker::check(cert).map_err(|e| e.to_string())?;
    }
    if Some(c.graph.s.len()) != r.sg || Some(c.prism.s.len()) != r.sg_prism {
        return Err("recorded values disagree with certificate sizes".into());
    }
    Ok(())
}

/// Does `sg(G □ H) >= max{sg(G), sg(H)}` hold for this pair?
#[derive(Clone, Debug, Serialize)]
pub struct Problem35Record {
    pub sg_g: Option<usize>,
    pub sg_h: Option<usize>,
    pub sg_product: Option<usize>,
    pub max_factor: Option<usize>,
    /// `None` while some value is undetermined.
    pub holds: Option<bool>,
    pub tight: Option<bool>,
}

pub fn check_problem35(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<Problem35Record, SolveError> {
    let sg_g = strong_geodetic_number(g, opts)?.value();
    let sg_h = strong_geodetic_number(h, opts)?.value();
    let pg = cartesian_product(g, h)?;
    let sg_product = sg_product_with_layer_pruning(&pg, opts)?.value();
    let max_factor = sg_g.zip(sg_h).map(|(a, b)| a.max(b));
    let cmp = sg_product.zip(max_factor);
    Ok(Problem35Record {
        sg_g,
        sg_h,
        sg_product,
        max_factor,
        holds: cmp.map(|(p, m)| p >= m),
        tight: cmp.map(|(p, m)| p == m),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    /// Which factor plays the role of `G` (the other is `H`).
    pub orientation: &'static str,
    pub bound: BoundValue,
    /// Size of the verified construction realizing the bound, if one exists.
    pub constructed: Option<usize>,
    pub slack: Option<usize>,
    pub sharp: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub sg_g: usize,
    pub sg_h: usize,
    pub exact: Option<usize>,
    /// Set when the budget ran out: `exact` is `None` and this is `[lower, upper]`.
    pub interval: Option<(usize, usize)>,
    pub rows: Vec<BoundRow>,
}

// Optimal set when the budget allows, else the whole vertex set.
fn factor_cert(g: &Graph, opts: &SolveOptions) -> Result<Certificate, SolveError> {
    match strong_geodetic_number(g, opts)? {
        SgOutcome::Exact { certificate, .. } => Ok(certificate),
        SgOutcome::Bounded { .. } => Ok(Assignment::new(g, g.vertices()).finish()?),
    }
}

fn complete_order(g: &Graph) -> Option<usize> {
    g.is_complete().then(|| g.order())
}

/// Every applicable upper bound for `G □ H` next to the exact value.
///
/// Factor sets come from the exact solver. Each bound also has its
/// construction built and verified, so `constructed` equals the bound value
/// whenever the construction exists.
pub fn audit_bounds(g: &Graph, h: &Graph, opts: &SolveOptions) -> Result<BoundReport, SolveError> {
    let (gc, hc) = (factor_cert(g, opts)?, factor_cert(h, opts)?);
    let pg = cartesian_product(g, h)?;
    let (exact, interval) = match sg_product_with_layer_pruning(&pg, opts)? {
        SgOutcome::Exact { value, .. } => (Some(value), None),
        SgOutcome::Bounded { lower, upper } => (None, Some((lower, upper))),
    };
    let size = |r: Result<(ProductGraph, Certificate), _>| r.ok().map(|(_, c): (ProductGraph, Certificate)| c.size());

    let mut rows = Vec::new();
    let mut push = |orientation, bound: BoundValue, constructed: Option<usize>| {
        let slack = bound.value.zip(exact).map(|(b, e)| b.saturating_sub(e));
        rows.push(BoundRow { orientation, sharp: slack.map(|s| s == 0), bound, constructed, slack });
    };
    push("G,H", bound_thm21(g, &gc, h, &hc), None);
    for (orientation, a, ac, b, bc) in [("G,H", g, &gc, h, &hc), ("H,G", h, &hc, g, &gc)] {
        let lifted = BoundValue {
            name: "layer lift".into(),
            value: Some(ac.size() * b.order()),
            hypotheses: vec![],
        };
        push(orientation, lifted, size(construct_layer_lift(a, ac, b)));
        let mut one_sided = bound_thm21(b, bc, a, ac);
        one_sided.name = "general upper bound, one orientation".into();
        one_sided.value = (bc.size() >= 2 || ac.size() == 1).then(|| bc.size() * a.order() + 1 - ac.size());
        push(orientation, one_sided, size(construct_thm21(a, ac, b, bc)));
        push(orientation, bound_thm26(a, ac, b, bc), size(construct_thm26(a, ac, b, bc)));
        if let Some(n) = complete_order(b).filter(|&n| n >= 2) {
            push(orientation, bound_prop25(a, ac, n), size(construct_prop25(a, ac, n)));
            let mut diam2 = bound_prop25(a, ac, n);
            diam2.name = "diameter-2 specialization".into();
            diam2.hypotheses.push(("diam(G) = 2".into(), a.diameter() == 2));
            if a.diameter() != 2 {
                diam2.value = None;
            }
            push(orientation, diam2, None);
        }
    }
    Ok(BoundReport { sg_g: gc.size(), sg_h: hc.size(), exact, interval, rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgraphDemo {
    pub name: String,
    pub host: String,
    pub host_sg: Option<usize>,
    pub subgraph: String,
    pub subgraph_sg: Option<usize>,
    pub convex: bool,
    pub gated: bool,
    /// `"host < subgraph"`, `"host > subgraph"` or `"equal"`; `None` on budget exhaustion.
    pub relation: Option<String>,
}

fn demo(
    name: &str,
    host_name: String,
    host: &Graph,
    sub_name: &str,
    keep: &VertexSet,
    opts: &SolveOptions,
) -> Result<SubgraphDemo, SolveError> {
    let sub = host.induced(keep)?;
    let host_sg = strong_geodetic_number(host, opts)?.value();
    let subgraph_sg = strong_geodetic_number(&sub, opts)?.value();
    let relation = host_sg.zip(subgraph_sg).map(|(a, b)| {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => "host < subgraph",
            std::cmp::Ordering::Greater => "host > subgraph",
            std::cmp::Ordering::Equal => "equal",
        }
        .to_string()
    });
    Ok(SubgraphDemo {
        name: name.into(),
        host: host_name,
        host_sg,
        subgraph: sub_name.into(),
        subgraph_sg,
        convex: host.is_convex_subgraph(keep),
        gated: host.is_gated_subgraph(keep),
        relation,
    })
}

fn labelled_set(g: &Graph, pred: impl Fn(&str) -> bool) -> VertexSet {
    VertexSet::from_vertices(g.order(), g.vertices().filter(|&v| pred(&g.label(v))))
}

/// Shows that `sg` is monotone in neither direction under taking convex or
/// gated subgraphs, nor under taking subgraphs in general.
pub fn demo_subgraph_relations(opts: &SolveOptions) -> Result<Vec<SubgraphDemo>, SolveError> {
    let g = |spec: &str| generate(spec).expect("fixed family spec");
    let mut out = Vec::new();

    let ladder = cartesian_product(&g("path:8"), &g("complete:2"))?;
    let mut keep = VertexSet::full(16);
    for i in 1..=4 {
        keep.remove(ladder.vertex(2 * i - 1, 0));
    }
    out.push(demo("ladder and a tree inside it", "path:8 x complete:2".into(), ladder.graph(), "prism-tree:4", &keep, opts)?);

    let gc = g("gc:2,3");
    let star = labelled_set(&gc, |l| l == "w" || l.starts_with('x'));
    out.push(demo("convex family", "gc:2,3".into(), &gc, "star on w and x1..x6", &star, opts)?);

    let gg = g("gg:2,3");
    let k26 = labelled_set(&gg, |l| l == "x" || l == "y" || l.starts_with('v'));
    out.push(demo("gated family", "gg:2,3".into(), &gg, "K_{2,6} on x, y and v_ij", &k26, opts)?);

    let st = g("star:5");
    let path = VertexSet::from_vertices(st.order(), [0, 1, 2]);
    out.push(demo("tree with a gated path", "star:5".into(), &st, "path l1 v l2", &path, opts)?);
    Ok(out)
}
