//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use pancyclic::berge;
use pancyclic::constructions::{gen_construction3, gen_construction4, gen_g1, gen_g2, gen_g3};
use pancyclic::cycle::{self, find_cycle_covering_exactly};
use pancyclic::structure::{self, LemmaAudit};
use pancyclic::verify::{self, enumerate_canonical, ParameterBox, Theorem, VerifyOptions};
use pancyclic::{oracle, BipartiteGraph, BitSet};

struct Outcome {
    ok: bool,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { ok: true, details: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.ok = false;
            self.details.push(format!("failed: {what}"));
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }

    fn within(&mut self, elapsed: Duration, limit: Duration, what: &str) {
        self.check(elapsed <= limit, format!("{what} took {elapsed:.2?}, limit {limit:.2?}"));
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn longest(g: &BipartiteGraph) -> usize {
    cycle::longest_cycle(g).map_or(0, |c| c.len())
}

fn construction_certification() -> Outcome {
    let mut o = Outcome::new();
    for delta in 3..=5 {
        let (l, t) = timed(|| longest(&gen_g1(delta).unwrap()));
        o.check(l == delta - 1, format!("G1({delta}) longest cycle 2·{l}, expected 2·{}", delta - 1));
        o.within(t, secs(1), &format!("G1({delta})"));
    }
    for (a, b, delta) in [(2, 1, 3), (3, 1, 4), (2, 2, 4)] {
        let g = gen_g2(a, b, delta).unwrap();
        let ((l, cut), t) = timed(|| (longest(&g), !structure::cut_vertices(&g).is_empty()));
        o.check(l == a, format!("G2({a},{b}) δ={delta} longest cycle 2·{l}, expected 2·{a}"));
        o.check(cut, format!("G2({a},{b}) δ={delta} has a cut vertex"));
        o.within(t, secs(1), &format!("G2({a},{b})"));
    }
    for (n1, n2, n3, delta) in [(1, 1, 1, 3), (2, 1, 1, 3)] {
        let g = gen_g3(n1, n2, n3, delta).unwrap();
        let ((l, two), t) = timed(|| (longest(&g), structure::is_2connected(&g).unwrap()));
        o.check(l == n1 + n2, format!("G3({n1},{n2},{n3}) longest cycle 2·{l}, expected 2·{}", n1 + n2));
        o.check(two, format!("G3({n1},{n2},{n3}) δ={delta} is 2-connected"));
        if !two {
            let cuts = structure::cut_vertices(&g);
            o.note(format!(
                "G3({n1},{n2},{n3}) δ={delta}: cut vertices {cuts:?} (Y vertices of degree {:?})",
                g.y_degrees()
            ));
        }
        o.within(t, secs(1), &format!("G3({n1},{n2},{n3})"));
    }
    o
}

fn run_box(o: &mut Outcome, theorem: Theorem, n: usize, m: usize, delta: usize) -> verify::VerificationReport {
    let pbox = ParameterBox::new(theorem, n, m, delta).unwrap();
    let r = verify::verify_theorem(&pbox, &VerifyOptions::default()).unwrap();
    o.check(r.is_consistent(), format!("{theorem} ({n},{m},{delta}) pass + exceptions = hypothesis count"));
    o.note(format!(
        "{theorem} n={n} m={m} δ={delta}: {} classes, {} satisfy hypothesis, {} pass, {} exceptions",
        r.total_enumerated,
        r.hypothesis_count,
        r.pass_count,
        r.exception_count()
    ));
    r
}

fn jackson_box() -> Outcome {
    let mut o = Outcome::new();
    let (_, t) = timed(|| {
        for n in 2..=3 {
            let r = run_box(&mut o, Theorem::Jackson, n, 4, 3);
            o.check(r.exceptions.is_empty(), format!("jackson n={n}: zero exceptions"));
            o.check(r.hypothesis_count == r.total_enumerated, "every class satisfies the hypothesis");
        }
    });
    o.within(t, secs(1), "jackson box");
    o
}

fn jackson2_box() -> Outcome {
    let mut o = Outcome::new();
    let (r, t) = timed(|| run_box(&mut o, Theorem::Jackson2, 3, 5, 3));
    // independent check of the exception set: every class without a spanning
    // cycle by the sequence oracle, compared with the constructions by the
    // permutation oracle
    let mut without = Vec::new();
    for form in enumerate_canonical(3, 5, 3, &VerifyOptions::default()).unwrap() {
        let g = form.to_graph();
        if !oracle::has_cycle_covering_exactly(&g, &[0, 1, 2]) {
            without.push(g);
        }
    }
    let g1 = gen_g1(3).unwrap();
    let g2 = gen_g2(2, 1, 3).unwrap();
    o.check(without.len() == 2, format!("{} classes without a spanning cycle, expected 2", without.len()));
    o.check(without.iter().any(|g| oracle::isomorphic(g, &g1)), "G1(3) among them");
    o.check(without.iter().any(|g| oracle::isomorphic(g, &g2)), "G2(2,1) among them");
    let names: Vec<String> = r.exception_classes().iter().map(ToString::to_string).collect();
    o.check(names == ["iso-G1(3)", "iso-G2(2,1)"], format!("report classifies exceptions as {names:?}"));
    o.check(r.violations == 0, "no disallowed exceptions");
    o.within(t, secs(5), "jackson2 box");
    o
}

fn mainj_box() -> Outcome {
    let mut o = Outcome::new();
    for n in 3..=4 {
        for m in 4..=7 {
            let (r, t) = timed(|| run_box(&mut o, Theorem::Mainj, n, m, 4));
            o.check(r.exceptions.is_empty(), format!("mainj n={n} m={m}: zero exceptions"));
            o.within(t, secs(600), &format!("mainj n={n} m={m}"));
        }
    }
    o
}

fn mainpan_box() -> Outcome {
    let mut o = Outcome::new();
    for m in 4..=7 {
        let (r, t) = timed(|| run_box(&mut o, Theorem::Mainpan, 3, m, 4));
        o.check(r.exceptions.is_empty(), format!("mainpan m={m}: zero exceptions"));
        o.within(t, secs(600), &format!("mainpan m={m}"));
    }
    o
}

fn hypergraph_constructions() -> Outcome {
    let mut o = Outcome::new();
    for n in 5..=6 {
        let ((h, ham), t) = timed(|| {
            let h = gen_construction3(n).unwrap();
            let ham = berge::has_hamiltonian_berge_cycle(&h).unwrap();
            (h, ham)
        });
        let expected = (1usize << (n.div_ceil(2) - 1)) - 1;
        let observed = h.min_degree();
        o.check(observed == expected, format!("construction 3 n={n}: δ = {observed}, expected {expected}"));
        o.check(!ham, format!("construction 3 n={n}: no Hamiltonian Berge cycle"));
        o.within(t, secs(30), &format!("construction 3 n={n}"));
    }
    let n = 8;
    let ((h, ham, two, missing), t) = timed(|| {
        let h = gen_construction4(n).unwrap();
        let ham = berge::has_hamiltonian_berge_cycle(&h).unwrap();
        let two = structure::is_2connected_hypergraph(&h).unwrap();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| h.codegree(&[a, b]).unwrap() == 0)
            .collect();
        (h, ham, two, missing)
    });
    o.check(missing.is_empty(), format!("construction 4 n=8: every pair has positive codegree, uncovered pairs {missing:?}"));
    if !missing.is_empty() {
        o.note(format!(
            "construction 4 n=8: E1 edges have size {}, so each holds a single V2 vertex",
            h.edges()[0].len()
        ));
    }
    o.check(two, "construction 4 n=8: incidence graph 2-connected");
    o.check(!ham, "construction 4 n=8: no Hamiltonian Berge cycle");
    o.within(t, secs(30), "construction 4 n=8");
    o
}

fn lemma_audits() -> Outcome {
    let mut o = Outcome::new();
    let (audits, t) = timed(|| {
        let mut total = LemmaAudit::default();
        for (n, ms) in [(3, 3..=5), (4, 3..=6)] {
            let a = verify::audit_lemmas(n, ms, 3, &VerifyOptions::default()).unwrap();
            total += &a;
        }
        total
    });
    o.check(audits.violations() == 0, format!("lemma audit violations: {audits:?}"));
    o.check(audits.tight_pairs > 0 && audits.crossing_pairs > 0, "audits exercised tight pairs");
    o.note(format!(
        "{} classes, {} tight pairs, {} neighbour checks, {} pair checks, {} non-crossing pairs, \
         {} degree-bound cases, {} separation cases",
        audits.graphs,
        audits.tight_pairs,
        audits.neighbor_checks,
        audits.neighbor_pair_checks,
        audits.crossing_pairs,
        audits.degree_bound_applicable,
        audits.separation_applicable
    ));
    o.within(t, secs(300), "lemma audits");
    o
}

fn oracle_equivalences() -> Outcome {
    let mut o = Outcome::new();
    let opts = VerifyOptions::default();
    let mut classes = 0;
    let mut cycle_queries = 0;
    let mut lll_queries = 0;
    for n in 2..=4 {
        for m in 1..=6 {
            for form in enumerate_canonical(n, m, 0, &opts).unwrap() {
                classes += 1;
                let g = form.to_graph();
                for mask in 1u32..1 << n {
                    let xs: Vec<usize> = (0..n).filter(|x| mask >> x & 1 == 1).collect();
                    if xs.len() >= 2 {
                        cycle_queries += 1;
                        let set: BitSet = xs.iter().copied().collect();
                        let engine = find_cycle_covering_exactly(&g, &set).unwrap();
                        if engine.is_some() != oracle::has_cycle_covering_exactly(&g, &xs) {
                            o.check(false, format!("cycle engine disagrees on {form:?}, X' = {xs:?}"));
                        }
                        if engine.is_some_and(|c| c.x_set() != set) {
                            o.check(false, format!("witness covers the wrong set on {form:?}"));
                        }
                    }
                    if xs.len() >= 3 {
                        lll_queries += 1;
                        let fast = structure::check_condition_lll_for(&g, &xs).unwrap().is_some();
                        if fast != oracle::lll_for(&g, &xs) {
                            o.check(false, format!("condition (2) disagrees on {form:?}, A = {xs:?}"));
                        }
                    }
                }
            }
        }
    }
    o.note(format!("{classes} classes, {cycle_queries} cycle queries, {lll_queries} condition (2) queries"));
    for (n, m, delta) in [(2, 3, 2), (3, 4, 3)] {
        let canon = enumerate_canonical(n, m, delta, &opts).unwrap().len();
        let labeled = oracle::labeled_classes(n, m, delta).len();
        o.check(canon == labeled, format!("({n},{m},{delta}): {canon} canonical vs {labeled} labelled classes"));
        o.note(format!("({n},{m},{delta}): {canon} classes"));
    }
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    for (theorem, n, m, delta) in [("jackson2", "3", "5", "3"), ("mainj", "4", "6", "4"), ("mainpan", "3", "7", "4")] {
        let mut outputs = BTreeSet::new();
        for (run, workers) in ["1", "8", "1", "8"].into_iter().enumerate() {
            let path = dir.path().join(format!("{theorem}-{run}.json"));
            let status = Command::new(env!("CARGO_BIN_EXE_pancyclic"))
                .args(["verify", theorem, "--n", n, "--m", m, "--delta", delta, "--workers", workers, "--json", "-o"])
                .arg(&path)
                .output()
                .expect("binary runs")
                .status;
            o.check(status.success(), format!("verify {theorem} --workers {workers} exits 0"));
            outputs.insert(std::fs::read(&path).unwrap_or_default());
        }
        o.check(outputs.len() == 1, format!("{theorem}: {} distinct report byte strings", outputs.len()));
    }
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let criteria: [Criterion; 9] = [
        ("construction certification", construction_certification),
        ("jackson box", jackson_box),
        ("jackson2 box", jackson2_box),
        ("mainj box", mainj_box),
        ("mainpan box", mainpan_box),
        ("hypergraph constructions", hypergraph_constructions),
        ("lemma audits", lemma_audits),
        ("oracle equivalences", oracle_equivalences),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let (outcome, t) = timed(run);
        println!(
            "{} criterion {} ({name}) [{:.2?}]",
            if outcome.ok { "PASS" } else { "FAIL" },
            i + 1,
            t
        );
        for d in &outcome.details {
            println!("    {d}");
        }
        if !outcome.ok {
            failed += 1;
        }
    }
    println!("acceptance: {} failed", failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
