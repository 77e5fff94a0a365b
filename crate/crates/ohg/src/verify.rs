//! The executable verification suite: every structural theorem the crate
//! implements is checked here, exhaustively at desk scale and on seeded
//! random streams. The CLI `verify` subcommand and the acceptance test
//! target both run these criteria; a failing criterion is a failing build.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{self, Limits};
use crate::classifier::{self, Verdict};
use crate::format;
use crate::generate::{self, GeneratorParams};
use crate::hypergraph::{Incidence, IncidenceRef, OrientedHypergraph, Sign};
use crate::matrix::IncidenceMatrix;
use crate::transforms;

/// Knobs of the verification run; the defaults are the acceptance settings.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub limits: Limits,
    /// Exhaustive classification tier: all connected balanced structures
    /// with `|V| + |E|` up to this bound.
    pub exhaustive_max_size: usize,
    /// Random classification tier: number of seeded instances.
    pub random_count: usize,
    /// Invariance and duality tiers: checked instances per invariant.
    pub invariance_count: usize,
    /// Generated balanced flowers / hypercircles for the rank law.
    pub rank_law_count: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: Limits::default(),
            exhaustive_max_size: 9,
            random_count: 10_000,
            invariance_count: 1_000,
            rank_law_count: 200,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {}: {} — {}",
            if self.passed { "pass" } else { "FAIL" },
            self.index,
            self.name,
            self.summary
        )
    }
}

/// Runs all seven criteria in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    vec![
        criterion_1_classification(cfg),
        criterion_2_theta_parity(cfg),
        criterion_3_balanceability(cfg),
        criterion_4_invariance(cfg),
        criterion_5_rank_law(cfg),
        criterion_6_duality(cfg),
        criterion_7_oracle_self_check(cfg),
    ]
}

/// Random-tier generator profiles, cycled per instance index.
fn random_profile(seed: u64, index: usize) -> GeneratorParams {
    let profile = index % 4;
    GeneratorParams {
        vertex_range: (1, 7),
        edge_range: (1, 7),
        size_weights: match profile {
            0 => vec![0, 0, 1],          // signed graphs
            1 => vec![0, 1, 4, 3, 1],    // mixed small edges
            2 => vec![1, 2, 4, 3, 2, 1], // with 0-edges and larger edges
            _ => vec![0, 2, 5, 3],
        },
        sign_bias: 0.5,
        multiplicity_cap: match profile {
            2 => 2,
            3 => 3,
            _ => 1,
        },
        seed: seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
    }
}

/// Criterion 1 — classification theorem: the structural classifier and the
/// exact oracle agree on every connected balanced instance, exhaustively up
/// to `|V|+|E| <= 9` (each underlying structure taken in its canonical
/// balanced orientation; verdicts are switching-invariant) and on the seeded
/// random tier up to `|V|+|E| <= 14`.
pub fn criterion_1_classification(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut structures = 0usize;
    let mut compared = 0usize;
    let mut mismatches = 0usize;
    let mut exhaustive_unknowns = 0usize;
    generate::for_each_connected_structure(cfg.exhaustive_max_size, |g| {
        structures += 1;
        // The forest-gauge orientation is balanced exactly for balanceable
        // structures; unbalanceable ones come back unbalanced and are
        // skipped inside cross_validate, so the compared family is all
        // connected balanced structures up to switching.
        let candidate = analysis::forced_orientation(g);
        let report = classifier::cross_validate(&candidate, &cfg.limits);
        if report.verdict.verdict == Verdict::Unknown {
            exhaustive_unknowns += 1;
        } else if report.compared {
            compared += 1;
            if report.mismatch {
                mismatches += 1;
            }
        }
    });

    let mut random_compared = 0usize;
    let mut random_unknowns = 0usize;
    let mut random_skipped = 0usize;
    for i in 0..cfg.random_count {
        let params = random_profile(cfg.seed, i);
        let g = generate::random_instance(&params).expect("profiles are feasible");
        for candidate in instance_and_balanced(&g, &cfg.limits) {
            let report = classifier::cross_validate(&candidate, &cfg.limits);
            match report.verdict.verdict {
                Verdict::Unknown => random_unknowns += 1,
                _ if report.compared => {
                    random_compared += 1;
                    if report.mismatch {
                        mismatches += 1;
                    }
                }
                _ => random_skipped += 1,
            }
        }
    }
    CriterionOutcome {
        index: 1,
        name: "classification theorem (classifier vs exact oracle)",
        passed: mismatches == 0 && exhaustive_unknowns == 0,
        summary: format!(
            "exhaustive: {structures} connected structures, {compared} compared \
             (every balanced one among them), {exhaustive_unknowns} unknown; \
             random: {random_compared} compared, {random_unknowns} unknown, \
             {random_skipped} skipped; {mismatches} mismatches"
        ),
    }
}

/// The raw instance plus its canonical balanced re-orientation (when
/// balanceable and connected), for classifier coverage.
fn instance_and_balanced(g: &OrientedHypergraph, limits: &Limits) -> Vec<OrientedHypergraph> {
    let mut out = vec![g.clone()];
    if let Ok(Some(b)) = analysis::balanced_orientation(g, limits) {
        if b != *g {
            out.push(b);
        }
    }
    out
}

/// Criterion 2 — theta parity: over all orientations of one fixed
/// vertex-theta, edge-theta and cross-theta shape, the number of negative
/// circles among the three is even, even and odd respectively.
pub fn criterion_2_theta_parity(cfg: &VerifyConfig) -> CriterionOutcome {
    // Vertex-theta: u, w joined by two 2-edges and one path of length 2.
    let vertex_theta = OrientedHypergraph::from_edge_lists(
        &["u", "m", "w"],
        &[
            ("a", &[("u", Sign::Plus), ("w", Sign::Plus)]),
            ("b", &[("u", Sign::Plus), ("w", Sign::Plus)]),
            ("c1", &[("u", Sign::Plus), ("m", Sign::Plus)]),
            ("c2", &[("m", Sign::Plus), ("w", Sign::Plus)]),
        ],
    )
    .expect("fixture");
    // Edge-theta: the incidence dual of the vertex-theta.
    let edge_theta = vertex_theta.incidence_dual();
    // Cross-theta: v joined to the edge e by three 2-paths.
    let cross_theta = OrientedHypergraph::from_edge_lists(
        &["v", "w1", "w2", "w3"],
        &[
            ("f1", &[("v", Sign::Plus), ("w1", Sign::Plus)]),
            ("f2", &[("v", Sign::Plus), ("w2", Sign::Plus)]),
            ("f3", &[("v", Sign::Plus), ("w3", Sign::Plus)]),
            ("e", &[("w1", Sign::Plus), ("w2", Sign::Plus), ("w3", Sign::Plus)]),
        ],
    )
    .expect("fixture");

    let mut lines = Vec::new();
    let mut passed = true;
    for (name, g, want_odd) in [
        ("vertex-theta", &vertex_theta, false),
        ("edge-theta", &edge_theta, false),
        ("cross-theta", &cross_theta, true),
    ] {
        let circles = match analysis::enumerate_circles(g, &cfg.limits) {
            Ok(c) => c,
            Err(e) => {
                return CriterionOutcome {
                    index: 2,
                    name: "theta parity",
                    passed: false,
                    summary: format!("enumeration failed on {name}: {e}"),
                }
            }
        };
        if circles.len() != 3 {
            passed = false;
            lines.push(format!("{name}: expected 3 circles, found {}", circles.len()));
            continue;
        }
        let index_of = |r: &IncidenceRef| {
            g.incidences()
                .iter()
                .position(|i| &i.to_ref() == r)
                .expect("fixture incidence")
        };
        let masks: Vec<(u64, u32)> = circles
            .iter()
            .map(|c| {
                let mut m = 0u64;
                for r in c.incidences() {
                    m |= 1 << index_of(r);
                }
                (m, (c.circle_length() % 2) as u32)
            })
            .collect();
        let m = g.incidences().len();
        let mut violations = 0usize;
        for orientation in 0u64..(1u64 << m) {
            let negatives = masks
                .iter()
                .filter(|&&(mask, parity)| ((mask & orientation).count_ones() + parity) % 2 == 1)
                .count();
            if (negatives % 2 == 1) != want_odd {
                violations += 1;
            }
        }
        if violations > 0 {
            passed = false;
        }
        lines.push(format!(
            "{name}: 2^{m} orientations, {violations} parity violations"
        ));
    }
    CriterionOutcome {
        index: 2,
        name: "theta parity",
        passed,
        summary: lines.join("; "),
    }
}

/// Criterion 3 — balanceability: cross-theta absence coincides with the
/// existence of a balancing flip set, checked by brute force over every
/// connected structure with `|V|+|E| <= 6`, multiplicities up to 3, and at
/// most 10 incidences.
pub fn criterion_3_balanceability(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    let mut limit_skips = 0usize;
    generate::for_each_connected_multiplicity_structure(6, 10, 3, |g| {
        let structural = analysis::is_balanceable(g).balanceable;
        match analysis::brute_force_balanceable(g, &cfg.limits) {
            Ok(flips) => {
                checked += 1;
                if structural != flips.is_some() {
                    disagreements += 1;
                }
            }
            Err(_) => limit_skips += 1,
        }
    });
    CriterionOutcome {
        index: 3,
        name: "balanceability equals cross-theta absence (brute force)",
        passed: disagreements == 0 && limit_skips == 0,
        summary: format!(
            "{checked} structures with |I| <= 10 checked, {disagreements} disagreements, \
             {limit_skips} limit skips"
        ),
    }
}

/// Criterion 4 — invariance: circle signs under vertex and edge switching;
/// dependency status under switching, compatible subdivision, balanced
/// subdivision, and compatible 2-vertex-contraction.
pub fn criterion_4_invariance(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut lines = Vec::new();
    let mut passed = true;
    let target = cfg.invariance_count;
    let attempts_cap = target * 30;

    type Check = Box<dyn FnMut(&OrientedHypergraph, &mut ChaCha8Rng) -> Option<bool>>;
    let mut run = |name: &str, mut check: Check| {
        let mut checked = 0usize;
        let mut violations = 0usize;
        let mut attempt = 0usize;
        while checked < target && attempt < attempts_cap {
            let params = random_profile(cfg.seed ^ 0xABCD, attempt);
            attempt += 1;
            let g = generate::random_instance(&params).expect("profiles are feasible");
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x77);
            if let Some(ok) = check(&g, &mut rng) {
                checked += 1;
                if !ok {
                    violations += 1;
                }
            }
        }
        if violations > 0 || checked < target {
            passed = false;
        }
        lines.push(format!("{name}: {checked} checked, {violations} violations"));
    };

    let limits = cfg.limits;
    run(
        "circle signs under switching",
        Box::new(move |g, rng| {
            let circles = analysis::enumerate_circles(g, &limits).ok()?;
            if circles.is_empty() {
                return None;
            }
            let v = g.vertices().get(rng.gen_range(0..g.vertices().len().max(1)))?.clone();
            let e = g.edges().get(rng.gen_range(0..g.edges().len().max(1)))?.clone();
            let sv = transforms::switch(g, [v.as_str()]).ok()?;
            let se = transforms::switch(g, [e.as_str()]).ok()?;
            Some(circles.iter().all(|c| {
                let s = c.sign_unchecked(g);
                s == c.sign_unchecked(&sv) && s == c.sign_unchecked(&se)
            }))
        }),
    );
    run(
        "dependency status under switching",
        Box::new(move |g, rng| {
            let mut negate: Vec<String> = Vec::new();
            for v in g.vertices() {
                if rng.gen_bool(0.4) {
                    negate.push(v.as_str().to_owned());
                }
            }
            for e in g.edges() {
                if rng.gen_bool(0.4) {
                    negate.push(e.as_str().to_owned());
                }
            }
            let h = transforms::switch(g, negate.iter().map(String::as_str)).ok()?;
            let a = IncidenceMatrix::from_hypergraph(g).certificate().status;
            let b = IncidenceMatrix::from_hypergraph(&h).certificate().status;
            Some(a == b)
        }),
    );
    run(
        "dependency status under compatible subdivision",
        Box::new(move |g, rng| {
            let (e, parts) = random_bipartition(g, rng)?;
            let s1 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let r = transforms::subdivide_edge(g, &e, &parts.0, &parts.1, s1, s1.flip()).ok()?;
            let a = IncidenceMatrix::from_hypergraph(g).certificate().status;
            let b = IncidenceMatrix::from_hypergraph(&r.hypergraph).certificate().status;
            Some(a == b)
        }),
    );
    run(
        "dependency status under balanced subdivision",
        Box::new(move |g, rng| {
            let (e, parts) = random_bipartition(g, rng)?;
            let s1 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let s2 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let r = transforms::subdivide_edge(g, &e, &parts.0, &parts.1, s1, s2).ok()?;
            if !r.balanced {
                return None;
            }
            let a = IncidenceMatrix::from_hypergraph(g).certificate().status;
            let b = IncidenceMatrix::from_hypergraph(&r.hypergraph).certificate().status;
            Some(a == b)
        }),
    );
    run(
        "dependency status under compatible 2-vertex-contraction",
        Box::new(move |g, _| {
            let v = g.vertices().iter().find(|v| {
                let incs: Vec<&Incidence> = g.incidences_of_vertex(v).collect();
                incs.len() == 2
                    && incs[0].edge != incs[1].edge
                    && incs[0].sign.mul(incs[1].sign) == Sign::Minus
            })?;
            let h = transforms::contract_2vertex(g, v).ok()?;
            let a = IncidenceMatrix::from_hypergraph(g).certificate().status;
            let b = IncidenceMatrix::from_hypergraph(&h).certificate().status;
            Some(a == b)
        }),
    );

    CriterionOutcome {
        index: 4,
        name: "invariance suite (switching, subdivision, contraction)",
        passed,
        summary: lines.join("; "),
    }
}

type Bipartition = (Vec<IncidenceRef>, Vec<IncidenceRef>);

fn random_bipartition(
    g: &OrientedHypergraph,
    rng: &mut ChaCha8Rng,
) -> Option<(crate::hypergraph::EdgeId, Bipartition)> {
    if g.edges().is_empty() {
        return None;
    }
    let e = g.edges()[rng.gen_range(0..g.edges().len())].clone();
    let all: Vec<IncidenceRef> = g.incidences_of_edge(&e).map(|i| i.to_ref()).collect();
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for r in all {
        if rng.gen_bool(0.5) {
            p1.push(r);
        } else {
            p2.push(r);
        }
    }
    Some((e, (p1, p2)))
}

/// Criterion 5 — rank law: every generated balanced flower and balanced
/// hypercircle has exact rank `|V| - φ` and nullity 1, with the cyclomatic
/// formulas agreeing and exactly `φ` essential circles.
pub fn criterion_5_rank_law(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut flowers = 0usize;
    let mut hypercircles = 0usize;
    let mut violations = 0usize;
    let mut detail = String::new();
    for seed in 0..cfg.rank_law_count as u64 {
        let f = generate::random_balanced_flower(seed);
        flowers += 1;
        if let Err(why) = check_rank_law(&f, &cfg.limits, true) {
            violations += 1;
            if detail.is_empty() {
                detail = format!(" (first: flower seed {seed}: {why})");
            }
        }
        let h = generate::random_balanced_hypercircle(seed);
        hypercircles += 1;
        if let Err(why) = check_rank_law(&h, &cfg.limits, false) {
            violations += 1;
            if detail.is_empty() {
                detail = format!(" (first: hypercircle seed {seed}: {why})");
            }
        }
    }
    CriterionOutcome {
        index: 5,
        name: "rank law for balanced flowers and hypercircles",
        passed: violations == 0,
        summary: format!(
            "{flowers} flowers and {hypercircles} hypercircles checked, {violations} violations{detail}"
        ),
    }
}

fn check_rank_law(
    g: &OrientedHypergraph,
    limits: &Limits,
    expect_flower: bool,
) -> Result<(), String> {
    // cyclomatic_number asserts the three formulas agree internally.
    let phi = analysis::cyclomatic_number(g);
    let m = IncidenceMatrix::from_hypergraph(g);
    let (rank, nullity) = m.rank_nullity();
    if rank != g.vertices().len() - phi {
        return Err(format!(
            "rank {rank} != |V| - φ = {} - {phi}",
            g.vertices().len()
        ));
    }
    if nullity != 1 {
        return Err(format!("nullity {nullity} != 1"));
    }
    if analysis::essential_circles(g).len() != phi {
        return Err("essential circle count differs from φ".into());
    }
    if expect_flower {
        match analysis::flower_analysis(g, limits) {
            Ok(fa) if fa.verdict == analysis::FlowerVerdict::Flower => {}
            Ok(fa) => return Err(format!("expected a flower, got {:?}", fa.verdict)),
            Err(e) => return Err(format!("flower analysis failed: {e}")),
        }
    } else {
        match classifier::recognize_hypercircle(g, limits) {
            Ok(Some(_)) => {}
            Ok(None) => return Err("hypercircle not recognized".into()),
            Err(e) => return Err(format!("recognition failed: {e}")),
        }
    }
    Ok(())
}

/// Criterion 6 — duality: the incidence dual is an involution, preserves
/// the cyclomatic number, and preserves every circle's sign and purity.
pub fn criterion_6_duality(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut violations = 0usize;
    let mut attempt = 0usize;
    let cap = cfg.invariance_count * 30;
    while checked < cfg.invariance_count && attempt < cap {
        let params = random_profile(cfg.seed ^ 0xD0A1, attempt);
        attempt += 1;
        let g = generate::random_instance(&params).expect("profiles are feasible");
        let d = g.incidence_dual();
        let mut ok = d.incidence_dual() == g;
        ok &= analysis::cyclomatic_number(&g) == analysis::cyclomatic_number(&d);
        let circles_g = match analysis::enumerate_circles(&g, &cfg.limits) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let circles_d = match analysis::enumerate_circles(&d, &cfg.limits) {
            Ok(c) => c,
            Err(_) => continue,
        };
        ok &= circles_g.len() == circles_d.len();
        for c in &circles_g {
            let cd = c.dualize().normalized(&d);
            let a = analysis::classify_circle(&g, c).expect("own circle");
            match analysis::classify_circle(&d, &cd) {
                Ok(b) => ok &= a.sign == b.sign && a.pure == b.pure,
                Err(_) => ok = false,
            }
        }
        checked += 1;
        if !ok {
            violations += 1;
        }
    }
    CriterionOutcome {
        index: 6,
        name: "duality suite (involution, φ, circle sign and purity)",
        passed: violations == 0 && checked >= cfg.invariance_count,
        summary: format!("{checked} instances checked, {violations} violations"),
    }
}

/// Criterion 7 — oracle self-check: "nullity 1 with fully supported
/// generator" coincides with the brute-force circuit definition (dependent,
/// every proper column subset independent) on all enumerated structures with
/// at most 6 edges.
pub fn criterion_7_oracle_self_check(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    generate::for_each_connected_structure(7, |g| {
        if g.edges().len() > 6 {
            return;
        }
        let mut variants = vec![g.clone()];
        if let Ok(Some(b)) = analysis::balanced_orientation(g, &cfg.limits) {
            if b != *g {
                variants.push(b);
            }
        }
        for v in variants {
            let m = IncidenceMatrix::from_hypergraph(&v);
            let fast = m.certificate().is_circuit();
            let brute = brute_force_is_circuit(&m);
            checked += 1;
            if fast != brute {
                disagreements += 1;
            }
        }
    });
    CriterionOutcome {
        index: 7,
        name: "oracle self-check (nullity-1 support vs subset definition)",
        passed: disagreements == 0,
        summary: format!("{checked} instances with <= 6 edges, {disagreements} disagreements"),
    }
}

/// The definition, executed literally: dependent, and every proper column
/// subset independent (by exact rank).
fn brute_force_is_circuit(m: &IncidenceMatrix) -> bool {
    let n = m.cols();
    if n == 0 {
        return false;
    }
    let (rank, _) = m.rank_nullity();
    if rank == n {
        return false;
    }
    for mask in 1..((1usize << n) - 1) {
        let cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        let sub = m.column_submatrix(&cols);
        let (r, _) = sub.rank_nullity();
        if r < cols.len() {
            return false; // a proper dependent subset
        }
    }
    true
}

/// Per-instance invariant bundle used by `verify` over a file corpus.
/// Returns human-readable violations; an empty list means the instance
/// passes.
pub fn verify_instance(g: &OrientedHypergraph, limits: &Limits) -> Vec<String> {
    let mut violations = Vec::new();

    // Round trip.
    let text = format::serialize_hypergraph(g);
    match format::parse_hypergraph(&text, false) {
        Ok(back) if &back == g => {}
        Ok(_) => violations.push("serialize/parse round trip changed the value".into()),
        Err(e) => violations.push(format!("round trip failed to parse: {e}")),
    }

    // Duality.
    let d = g.incidence_dual();
    if d.incidence_dual() != *g {
        violations.push("dual of dual differs".into());
    }
    if analysis::cyclomatic_number(g) != analysis::cyclomatic_number(&d) {
        violations.push("cyclomatic number changes under duality".into());
    }
    for v in g.vertices() {
        for e in g.edges() {
            let m1 = g.multiplicity(v, e).expect("own pair");
            let m2 = d
                .multiplicity(&e.as_str().into(), &v.as_str().into())
                .expect("dual pair");
            if m1 != m2 {
                violations.push(format!("ι({v},{e}) differs in the dual"));
            }
        }
    }

    // Switching invariance on the first vertex and edge.
    if let Ok(circles) = analysis::enumerate_circles(g, limits) {
        let mut targets = Vec::new();
        if let Some(v) = g.vertices().first() {
            targets.push(v.as_str().to_owned());
        }
        if let Some(e) = g.edges().first() {
            targets.push(e.as_str().to_owned());
        }
        for t in targets {
            let h = transforms::switch(g, [t.as_str()]).expect("own id");
            for c in &circles {
                if c.sign_unchecked(g) != c.sign_unchecked(&h) {
                    violations.push(format!("circle sign changes when switching {t}"));
                }
            }
            let a = IncidenceMatrix::from_hypergraph(g).certificate().status;
            let b = IncidenceMatrix::from_hypergraph(&h).certificate().status;
            if a != b {
                violations.push(format!("dependency status changes when switching {t}"));
            }
        }
        // Circles of the dual correspond one-to-one.
        if let Ok(circles_d) = analysis::enumerate_circles(&d, limits) {
            if circles.len() != circles_d.len() {
                violations.push("circle counts differ between G and its dual".into());
            }
        }
    }

    // Deletion correspondence with the matrix.
    let m = IncidenceMatrix::from_hypergraph(g);
    if let Some(e) = g.edges().first() {
        let h = transforms::weak_delete_edge(g, e).expect("own edge");
        if IncidenceMatrix::from_hypergraph(&h) != m.without_col(0) {
            violations.push("weak edge deletion is not column deletion".into());
        }
    }
    if let Some(v) = g.vertices().first() {
        let h = transforms::weak_delete_vertex(g, v).expect("own vertex");
        if IncidenceMatrix::from_hypergraph(&h) != m.without_row(0) {
            violations.push("weak vertex deletion is not row deletion".into());
        }
    }

    // Classifier versus oracle.
    let report = classifier::cross_validate(g, limits);
    if report.mismatch {
        violations.push("classifier disagrees with the exact oracle".into());
    }
    violations
}
