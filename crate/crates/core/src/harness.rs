//! Verification campaigns over graph families and the report they emit.
//!
//! Every campaign walks its family in a fixed order and tallies named
//! checks. A check that fails is listed as a divergence together with the
//! graph id, and ids are enough to rebuild the graph (see [`graph_from_id`]).
//! The serialized report never contains timing information, so equal
//! arguments give byte-identical output.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{is_shellable, verify_certificate, Certificate, VdSolver};
use crate::error::{Error, Result};
use crate::generate::{bipartite_from_mask, random_graph, Family};
use crate::graph::{tree_canonical_code, CanonicalForm, Graph};
use crate::homology::{hochster_betti, is_cohen_macaulay, is_sequentially_cm, BettiTable, FieldSpec};
use crate::ideals::{cover_ideal_splitting, is_unmixed, minimal_vertex_covers, SquareFreeMonomialIdeal};
use crate::invariants::{a_invariant, matching_number, InducedMatching};
use crate::io::write_betti;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

pub const MAX_PART: usize = 4;
pub const MAX_STRUCTURE_N: usize = 8;
pub const MAX_EXHAUSTIVE_N: usize = 6;
pub const MAX_TREE_N: usize = 9;
pub const MAX_SPLITTING_N: usize = 7;

/// Identifier from which the graph can be rebuilt: `bip:<a>x<b>:<mask>` for
/// bipartite graphs with parts `0..a` and `a..a+b`, `g:<n>:<mask>` for a
/// graph on `0..n` given by its pair mask.
pub fn graph_id(g: &Graph) -> String {
    format!("g:{}:{:#x}", g.universe(), g.pair_mask())
}

fn bipartite_id(a: usize, b: usize, mask: u64) -> String {
    format!("bip:{a}x{b}:{mask:#x}")
}

pub fn graph_from_id(id: &str) -> Result<Graph> {
    let bad = || Error::InvalidParameter(format!("malformed graph id {id:?}"));
    let parts: Vec<&str> = id.split(':').collect();
    let [kind, shape, mask] = parts[..] else {
        return Err(bad());
    };
    let mask = u64::from_str_radix(mask.strip_prefix("0x").ok_or_else(bad)?, 16).map_err(|_| bad())?;
    match kind {
        "g" => {
            let n: usize = shape.parse().map_err(|_| bad())?;
            if n * n.saturating_sub(1) / 2 > 64 {
                return Err(bad());
            }
            Graph::from_pair_mask(n, mask)
        }
        "bip" => {
            let (a, b) = shape.split_once('x').ok_or_else(bad)?;
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            if a * b > 64 || a + b > crate::vertex_set::MAX_VERTICES {
                return Err(bad());
            }
            Ok(bipartite_from_mask(a, b, mask))
        }
        _ => Err(bad()),
    }
}

/// Projective dimension of `I` itself, `pd(R/I) - 1`; the unit ideal is
/// free and gets `0`.
pub fn ideal_pd(ideal: &SquareFreeMonomialIdeal, field: FieldSpec) -> Result<usize> {
    if ideal.is_unit() {
        return Ok(0);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(hochster_betti(ideal, field)?.projective_dimension()? - 1)
}

pub fn regularity_of(g: &Graph, field: FieldSpec) -> usize {
    hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(g), field)
        .and_then(|t| t.regularity())
        .expect("edge ideals are proper")
}

pub fn pd_cover_ideal(g: &Graph, field: FieldSpec) -> usize {
    ideal_pd(&SquareFreeMonomialIdeal::cover_ideal(g), field).expect("cover ideals are nonzero")
}

fn scm_of(g: &Graph, field: FieldSpec) -> bool {
    is_sequentially_cm(&SimplicialComplex::independence_complex(g), field)
        .expect("independence complexes are nonvoid")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
}

/// One graph's entry: its id and ordered key-value pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub id: String,
    pub fields: Vec<(String, String)>,
}

impl Record {
    fn new(id: String) -> Self {
        Record { id, fields: Vec::new() }
    }

    fn put(&mut self, key: &str, value: impl fmt::Display) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub campaign: String,
    pub family: String,
    pub field: FieldSpec,
    pub seed: Option<u64>,
    pub graphs: usize,
    pub checks: BTreeMap<String, Tally>,
    /// `(graph id, check name)` for every failed check.
    pub divergences: Vec<(String, String)>,
    /// Noteworthy graphs that are not violations.
    pub exhibits: Vec<(String, String)>,
    pub records: Vec<Record>,
    pub runtime: Duration,
}

impl VerificationReport {
    fn new(campaign: &str, family: String, field: FieldSpec, seed: Option<u64>, checks: &[&str]) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            family,
            field,
            seed,
            graphs: 0,
            checks: checks.iter().map(|c| (c.to_string(), Tally::default())).collect(),
            divergences: Vec::new(),
            exhibits: Vec::new(),
            records: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    fn check(&mut self, name: &str, id: &str, holds: bool) {
        let tally = self.checks.get_mut(name).expect("check declared up front");
        tally.checked += 1;
        if !holds {
            tally.violations += 1;
            self.divergences.push((id.to_string(), name.to_string()));
        }
    }

    pub fn all_agree(&self) -> bool {
        self.divergences.is_empty()
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.checks.get(name).copied().unwrap_or_default()
    }

    /// Machine-readable form: header lines, one `check` line per check,
    /// divergences, exhibits, then one `record ... end` block per graph.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "campaign {}", self.campaign).unwrap();
        writeln!(out, "family {}", self.family).unwrap();
        writeln!(out, "field {}", self.field).unwrap();
        match self.seed {
            Some(s) => writeln!(out, "seed {s}").unwrap(),
            None => writeln!(out, "seed none").unwrap(),
        }
        writeln!(out, "graphs {}", self.graphs).unwrap();
        for (name, t) in &self.checks {
            writeln!(out, "check {name} checked {} violations {}", t.checked, t.violations).unwrap();
        }
        writeln!(out, "all_agree {}", self.all_agree()).unwrap();
        for (id, name) in &self.divergences {
            writeln!(out, "divergence {id} {name}").unwrap();
        }
        for (id, note) in &self.exhibits {
            writeln!(out, "exhibit {id} {note}").unwrap();
        }
        for rec in &self.records {
            writeln!(out, "\nrecord {}", rec.id).unwrap();
            for (k, v) in &rec.fields {
                writeln!(out, "{k} {v}").unwrap();
            }
            out.push_str("end\n");
        }
        out
    }

    /// Human-readable summary, including the runtime.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        writeln!(out, "campaign {} over {} ({} graphs)", self.campaign, self.family, self.graphs).unwrap();
        for (name, t) in &self.checks {
            let verdict = if t.violations == 0 { "ok" } else { "FAILED" };
            writeln!(
                out,
                "  {name}: {} agree, {} violations [{verdict}]",
                t.checked - t.violations,
                t.violations
            )
            .unwrap();
        }
        if !self.exhibits.is_empty() {
            writeln!(out, "  exhibits: {}", self.exhibits.len()).unwrap();
        }
        writeln!(out, "  all_agree {}", self.all_agree()).unwrap();
        writeln!(out, "  runtime {:.3}s", self.runtime.as_secs_f64()).unwrap();
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CampaignOptions {
    pub field: FieldSpec,
    /// Replay every emitted certificate through the independent checker.
    pub recheck: bool,
}

fn bipartite_family(max_part: usize) -> Result<Vec<(usize, usize)>> {
    if !(1..=MAX_PART).contains(&max_part) {
        return Err(Error::InvalidParameter(format!(
            "max part {max_part} outside 1..={MAX_PART}"
        )));
    }
    Ok((1..=max_part)
        .flat_map(|a| (a..=max_part).map(move |b| (a, b)))
        .collect())
}

fn bipartite_family_name(max_part: usize) -> String {
    format!("all_bipartite 1<=a<=b<={max_part}")
}

/// VD, shellability, SCM and CM of one graph, with certificates.
struct Decidability {
    scm: bool,
    cm: bool,
    pure: bool,
    vd: Option<Certificate>,
    shelling: Option<Certificate>,
}

fn decide(g: &Graph, field: FieldSpec, solver: &VdSolver) -> (SimplicialComplex, Decidability) {
    let complex = SimplicialComplex::independence_complex(g);
    let d = Decidability {
        scm: is_sequentially_cm(&complex, field).expect("nonvoid"),
        cm: is_cohen_macaulay(&complex, field).expect("nonvoid"),
        pure: complex.is_pure(),
        vd: solver.decompose_graph(g).map(Certificate::Decomposition),
        shelling: is_shellable(&complex).map(Certificate::Shelling),
    };
    (complex, d)
}

fn record_decidability(rec: &mut Record, d: &Decidability) {
    rec.put("vd", d.vd.is_some());
    rec.put("shellable", d.shelling.is_some());
    rec.put("scm", d.scm);
    rec.put("cm", d.cm);
    rec.put("pure", d.pure);
    if let Some(c) = &d.vd {
        rec.put("vd_digest", c.digest());
    }
    if let Some(c) = &d.shelling {
        rec.put("shelling_digest", c.digest());
    }
}

fn recheck(report: &mut VerificationReport, id: &str, complex: &SimplicialComplex, d: &Decidability) {
    for cert in [&d.vd, &d.shelling].into_iter().flatten() {
        let ok = verify_certificate(complex, cert).unwrap_or(false);
        report.check("certificate_replay", id, ok);
    }
}

/// SCM, shellability and vertex decomposability coincide on bipartite
/// graphs; CM coincides with pure shellability and pure VD. Also checks
/// that SCM bipartite graphs with an edge have a degree-one vertex and that
/// deleting any closed neighborhood keeps SCM.
pub fn verify_thm1(max_part: usize, opts: &CampaignOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let shapes = bipartite_family(max_part)?;
    let mut checks = vec![
        "scm_shellable_vd",
        "cm_pure_shellable_pure_vd",
        "scm_has_degree_one_vertex",
        "scm_closed_under_neighborhood_deletion",
    ];
    if opts.recheck {
        checks.push("certificate_replay");
    }
    let mut report =
        VerificationReport::new("thm1", bipartite_family_name(max_part), opts.field, None, &checks);
    let solver = VdSolver::new();
    for (a, b) in shapes {
        for mask in 0..1u64 << (a * b) {
            let g = bipartite_from_mask(a, b, mask);
            let id = bipartite_id(a, b, mask);
            let (complex, d) = decide(&g, opts.field, &solver);
            let (vd, sh) = (d.vd.is_some(), d.shelling.is_some());
            report.graphs += 1;
            report.check("scm_shellable_vd", &id, d.scm == sh && sh == vd);
            report.check("cm_pure_shellable_pure_vd", &id, d.cm == (d.pure && sh) && d.cm == (d.pure && vd));
            let leaf = g.degree_one_vertex();
            if d.scm && g.edge_count() > 0 {
                report.check("scm_has_degree_one_vertex", &id, leaf.is_some());
            }
            if d.scm {
                let closed = g.vertices().iter().all(|x| {
                    scm_of(&g.closed_neighborhood_delete(x).unwrap(), opts.field)
                });
                report.check("scm_closed_under_neighborhood_deletion", &id, closed);
            }
            if opts.recheck {
                recheck(&mut report, &id, &complex, &d);
            }
            let mut rec = Record::new(id);
            rec.put("edges", g.edge_count());
            rec.put("degree_one_vertex", leaf.map_or("none".to_string(), |v| v.to_string()));
            record_decidability(&mut rec, &d);
            report.records.push(rec);
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// `reg(R/I(G)) = a(G)` on SCM bipartite graphs and `reg ≥ a(G)` on the
/// rest. Graphs with `reg > a(G)` are listed as exhibits.
pub fn verify_thm2(max_part: usize, opts: &CampaignOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let shapes = bipartite_family(max_part)?;
    let mut report = VerificationReport::new(
        "thm2",
        bipartite_family_name(max_part),
        opts.field,
        None,
        &["scm_reg_equals_a", "reg_at_least_a"],
    );
    for (a, b) in shapes {
        for mask in 0..1u64 << (a * b) {
            let g = bipartite_from_mask(a, b, mask);
            let id = bipartite_id(a, b, mask);
            let scm = scm_of(&g, opts.field);
            let reg = regularity_of(&g, opts.field);
            let av = a_invariant(&g).size();
            report.graphs += 1;
            if scm {
                report.check("scm_reg_equals_a", &id, reg == av);
            } else {
                report.check("reg_at_least_a", &id, reg >= av);
                if reg > av {
                    report.exhibits.push((id.clone(), format!("non_scm reg {reg} a {av}")));
                }
            }
            let mut rec = Record::new(id);
            rec.put("scm", scm);
            rec.put("reg", reg);
            rec.put("a", av);
            report.records.push(rec);
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// Every tree on `1..=max_n` vertices, enumerated by Prüfer sequence and
/// evaluated once per isomorphism class: SCM, `reg = a(G)`.
pub fn verify_trees(max_n: usize, opts: &CampaignOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    if !(1..=MAX_TREE_N).contains(&max_n) {
        return Err(Error::InvalidParameter(format!("max n {max_n} outside 1..={MAX_TREE_N}")));
    }
    let mut report = VerificationReport::new(
        "trees",
        format!("all_trees 1<=n<={max_n}"),
        opts.field,
        None,
        &["tree_scm", "tree_reg_equals_a"],
    );
    for n in 1..=max_n {
        let mut seen: HashMap<String, ()> = HashMap::new();
        for g in Family::AllTrees(n).graphs()? {
            report.graphs += 1;
            let code = tree_canonical_code(&g).expect("Prüfer sequences decode to trees");
            if seen.insert(code, ()).is_some() {
                continue;
            }
            let id = graph_id(&g);
            let scm = scm_of(&g, opts.field);
            let reg = regularity_of(&g, opts.field);
            let av = a_invariant(&g).size();
            report.check("tree_scm", &id, scm);
            report.check("tree_reg_equals_a", &id, reg == av);
            let mut rec = Record::new(id);
            rec.put("scm", scm);
            rec.put("reg", reg);
            rec.put("a", av);
            report.records.push(rec);
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

fn strip_isolated(g: &Graph) -> Graph {
    let keep: VertexSet = g.vertices().iter().filter(|&v| g.degree(v).unwrap() > 0).collect();
    g.induced(keep).unwrap().compacted()
}

/// `pd(I(G)^∨)` cached by isomorphism class; isolated vertices never
/// change it.
struct PdCache {
    field: FieldSpec,
    map: HashMap<CanonicalForm, usize>,
}

impl PdCache {
    fn get(&mut self, g: &Graph) -> usize {
        let core = strip_isolated(g);
        let key = core.canonical_form().expect("at most 16 vertices");
        let field = self.field;
        *self.map.entry(key).or_insert_with(|| pd_cover_ideal(&core, field))
    }
}

fn splitting_checks(
    report: &mut VerificationReport,
    id: &str,
    g: &Graph,
    pd: &mut dyn FnMut(&Graph) -> usize,
) -> Vec<usize> {
    let leaves: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v).unwrap() == 1).collect();
    if leaves.is_empty() {
        return leaves;
    }
    let pd_g = pd(g);
    let a_g = a_invariant(g).size();
    for &x in &leaves {
        let s = cover_ideal_splitting(g, x).expect("degree one");
        report.check("cover_sum_generators", id, s.sum_holds);
        report.check("cover_intersection", id, s.intersection_holds);
        let bound = (pd(&s.g_prime) + 1).max(pd(&s.g_dblprime));
        report.check("pd_short_exact_bound", id, pd_g <= bound);
        report.check("a_witness_extension", id, a_invariant(&s.g_prime).size() < a_g);
    }
    leaves
}

/// For every graph on at most `max_n` vertices and every degree-one vertex:
/// the two cover-ideal splitting identities, the projective dimension
/// bound they give, and `a(G ∖ N[y]) + 1 ≤ a(G)`. Only violations are
/// recorded.
pub fn verify_splitting(max_n: usize, opts: &CampaignOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    if max_n > MAX_SPLITTING_N {
        return Err(Error::InvalidParameter(format!("max n {max_n} exceeds {MAX_SPLITTING_N}")));
    }
    let mut report = VerificationReport::new(
        "splitting",
        format!("all_graphs 0<=n<={max_n}"),
        opts.field,
        None,
        &["cover_sum_generators", "cover_intersection", "pd_short_exact_bound", "a_witness_extension"],
    );
    let mut cache = PdCache { field: opts.field, map: HashMap::new() };
    for n in 0..=max_n {
        for g in Family::AllGraphs(n).graphs()? {
            report.graphs += 1;
            let id = graph_id(&g);
            let before = report.divergences.len();
            splitting_checks(&mut report, &id, &g, &mut |h| cache.get(h));
            if report.divergences.len() > before {
                let mut rec = Record::new(id);
                rec.put("edges", g.edge_count());
                report.records.push(rec);
            }
        }
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// Structural checks on all graphs with at most `min(max_n, 6)` vertices
/// plus `sample` seeded random graphs (edge probability 1/2) whose order
/// is uniform in `7..=max_n`, or equal to `max_n` when that is below 7:
///
/// * SCM bipartite graphs with an edge have a degree-one vertex;
/// * `G ∖ N[x]` is SCM for every vertex of an SCM graph;
/// * the cover-ideal splitting identities and pd bound at every leaf;
/// * `pd(I(G)^∨) = reg(R/I(G))`;
/// * `a(G) ≤ reg(R/I(G)) ≤ α'(G)`;
/// * VD ⇒ shellable ⇒ SCM.
pub fn verify_structure(
    max_n: usize,
    sample: usize,
    seed: u64,
    opts: &CampaignOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if max_n > MAX_STRUCTURE_N {
        return Err(Error::InvalidParameter(format!("max n {max_n} exceeds {MAX_STRUCTURE_N}")));
    }
    let exhaustive = max_n.min(MAX_EXHAUSTIVE_N);
    let random_lo = (MAX_EXHAUSTIVE_N + 1).min(max_n);
    let family = format!(
        "all_graphs 0<=n<={exhaustive}; random_graph {random_lo}<=n<={max_n} p=0.5 count={sample}"
    );
    let mut checks = vec![
        "a_scm_bipartite_has_degree_one_vertex",
        "b_scm_closed_under_neighborhood_deletion",
        "cover_sum_generators",
        "cover_intersection",
        "pd_short_exact_bound",
        "a_witness_extension",
        "d_pd_cover_equals_reg",
        "e_reg_at_least_a",
        "e_reg_at_most_matching_number",
        "f_vd_implies_shellable",
        "f_shellable_implies_scm",
    ];
    if opts.recheck {
        checks.push("certificate_replay");
    }
    let mut report = VerificationReport::new("structure", family, opts.field, Some(seed), &checks);
    let solver = VdSolver::new();

    let exhaustive_graphs = (0..=exhaustive).flat_map(|n| Family::AllGraphs(n).graphs().unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_graphs = (0..sample).map(move |_| {
        let n = rng.gen_range(random_lo..=max_n);
        random_graph(n, 0.5, &mut rng)
    });

    for g in exhaustive_graphs.chain(random_graphs) {
        let id = graph_id(&g);
        let field = opts.field;
        report.graphs += 1;
        let (complex, d) = decide(&g, field, &solver);
        let (vd, sh) = (d.vd.is_some(), d.shelling.is_some());
        let bipartite = g.is_bipartite();

        if d.scm && bipartite && g.edge_count() > 0 {
            let has_leaf = g.degree_one_vertex().is_some();
            report.check("a_scm_bipartite_has_degree_one_vertex", &id, has_leaf);
        }
        if d.scm {
            let closed = g
                .vertices()
                .iter()
                .all(|x| scm_of(&g.closed_neighborhood_delete(x).unwrap(), field));
            report.check("b_scm_closed_under_neighborhood_deletion", &id, closed);
        }
        let leaves = splitting_checks(&mut report, &id, &g, &mut |h| pd_cover_ideal(h, field));
        let reg = regularity_of(&g, field);
        let pd_cover = pd_cover_ideal(&g, field);
        let av = a_invariant(&g).size();
        let matching = matching_number(&g);
        report.check("d_pd_cover_equals_reg", &id, pd_cover == reg);
        report.check("e_reg_at_least_a", &id, reg >= av);
        report.check("e_reg_at_most_matching_number", &id, reg <= matching);
        if vd {
            report.check("f_vd_implies_shellable", &id, sh);
        }
        if sh {
            report.check("f_shellable_implies_scm", &id, d.scm);
        }
        if opts.recheck {
            recheck(&mut report, &id, &complex, &d);
        }

        let mut rec = Record::new(id);
        rec.put("bipartite", bipartite);
        rec.put("leaves", leaves.len());
        rec.put("reg", reg);
        rec.put("pd_cover", pd_cover);
        rec.put("a", av);
        rec.put("matching_number", matching);
        record_decidability(&mut rec, &d);
        report.records.push(rec);
    }
    report.runtime = start.elapsed();
    Ok(report)
}

/// Everything computed about a single graph.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub id: Option<String>,
    pub graph: Graph,
    pub field: FieldSpec,
    pub bipartite: bool,
    pub degree_one_vertex: Option<usize>,
    pub unmixed: bool,
    pub minimal_vertex_covers: Vec<VertexSet>,
    pub induced_matching: InducedMatching,
    pub matching_number: usize,
    pub vd_certificate: Option<Certificate>,
    pub shelling_certificate: Option<Certificate>,
    pub scm: bool,
    pub cm: bool,
    pub betti: BettiTable,
    pub regularity: usize,
    pub pd_cover_ideal: usize,
    /// `Some(all passed)` when certificates were replayed.
    pub recheck: Option<bool>,
}

pub fn analyze(g: &Graph, field: FieldSpec, recheck: bool) -> Analysis {
    let solver = VdSolver::new();
    let (complex, d) = decide(g, field, &solver);
    let betti = hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(g), field).expect("proper");
    let regularity = betti.regularity().expect("nonempty");
    let replay = recheck.then(|| {
        [&d.vd, &d.shelling]
            .into_iter()
            .flatten()
            .all(|c| verify_certificate(&complex, c).unwrap_or(false))
    });
    let mut covers = minimal_vertex_covers(g);
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    Analysis {
        id: (g.universe() * g.universe().saturating_sub(1) / 2 <= 64).then(|| graph_id(g)),
        graph: g.clone(),
        field,
        bipartite: g.is_bipartite(),
        degree_one_vertex: g.degree_one_vertex(),
        unmixed: is_unmixed(g),
        minimal_vertex_covers: covers,
        induced_matching: a_invariant(g),
        matching_number: matching_number(g),
        vd_certificate: d.vd,
        shelling_certificate: d.shelling,
        scm: d.scm,
        cm: d.cm,
        betti,
        regularity,
        pd_cover_ideal: pd_cover_ideal(g, field),
        recheck: replay,
    }
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
        if let Some(id) = &self.id {
            writeln!(f, "id {id}")?;
        }
        writeln!(f, "field {}", self.field)?;
        writeln!(f, "vertices {}", self.graph.order())?;
        writeln!(f, "edges {}", self.graph.edge_count())?;
        writeln!(f, "bipartite {}", self.bipartite)?;
        writeln!(f, "degree_one_vertex {}", opt(self.degree_one_vertex))?;
        writeln!(f, "unmixed {}", self.unmixed)?;
        write!(f, "minimal_vertex_covers")?;
        for c in &self.minimal_vertex_covers {
            write!(f, " {c}")?;
        }
        writeln!(f)?;
        writeln!(f, "a {}", self.induced_matching.size())?;
        write!(f, "a_witness")?;
        for (u, v) in &self.induced_matching.edges {
            write!(f, " {u}-{v}")?;
        }
        writeln!(f)?;
        writeln!(f, "matching_number {}", self.matching_number)?;
        for (key, cert) in [("vd", &self.vd_certificate), ("shellable", &self.shelling_certificate)] {
            writeln!(f, "{key} {}", cert.is_some())?;
            if let Some(c) = cert {
                writeln!(f, "{key}_certificate {c}")?;
                writeln!(f, "{key}_digest {}", c.digest())?;
            }
        }
        writeln!(f, "scm {}", self.scm)?;
        writeln!(f, "cm {}", self.cm)?;
        writeln!(f, "regularity {}", self.regularity)?;
        writeln!(f, "pd_quotient {}", self.betti.projective_dimension().unwrap())?;
        writeln!(f, "pd_cover_ideal {}", self.pd_cover_ideal)?;
        if let Some(ok) = self.recheck {
            writeln!(f, "certificate_replay {}", if ok { "pass" } else { "fail" })?;
        }
        f.write_str(&write_betti(&self.betti))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    #[test]
    fn ids_round_trip() {
        let g = cycle(5);
        assert_eq!(graph_from_id(&graph_id(&g)).unwrap(), g);
        assert_eq!(graph_from_id("bip:2x2:0x9").unwrap(), bipartite_from_mask(2, 2, 9));
        assert!(graph_from_id("g:5").is_err());
        assert!(graph_from_id("g:12:0x0").is_err());
        assert!(graph_from_id("h:2:0x1").is_err());
    }

    #[test]
    fn analysis_of_c8() {
        let a = analyze(&cycle(8), FieldSpec::Rationals, true);
        assert_eq!(a.regularity, 3);
        assert_eq!(a.induced_matching.size(), 2);
        assert_eq!(a.matching_number, 4);
        assert!(!a.scm && !a.unmixed);
        assert_eq!(a.degree_one_vertex, None);
        assert_eq!(a.pd_cover_ideal, 3);
        assert_eq!(a.recheck, Some(true));
    }

    #[test]
    fn analysis_of_p3() {
        let a = analyze(&path(3), FieldSpec::Rationals, false);
        assert_eq!(a.regularity, 1);
        assert!(a.scm);
        let covers: Vec<Vec<usize>> = a.minimal_vertex_covers.iter().map(|c| c.to_vec()).collect();
        assert_eq!(covers, vec![vec![1], vec![0, 2]]);
        let text = a.to_string();
        assert!(text.contains("minimal_vertex_covers {1} {0,2}\n"));
    }

    #[test]
    fn guard_rails() {
        let o = CampaignOptions::default();
        assert!(verify_thm1(5, &o).is_err());
        assert!(verify_thm2(0, &o).is_err());
        assert!(verify_structure(9, 1, 0, &o).is_err());
        assert!(verify_trees(10, &o).is_err());
        assert!(verify_splitting(8, &o).is_err());
    }

    #[test]
    fn small_campaigns_agree() {
        let o = CampaignOptions { field: FieldSpec::Rationals, recheck: true };
        let r = verify_thm1(2, &o).unwrap();
        assert_eq!(r.graphs, 2 + 4 + 16);
        assert!(r.all_agree(), "{}", r.to_text());
        let s = verify_structure(4, 3, 7, &o).unwrap();
        assert!(s.all_agree());
        assert_eq!(s.to_text(), verify_structure(4, 3, 7, &o).unwrap().to_text());
    }
}
