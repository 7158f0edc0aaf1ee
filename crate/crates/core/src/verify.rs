//! Exhaustive verification over small classes `𝒢(n, m, δ)`.
//!
//! Classes are enumerated as non-decreasing tuples of row masks, which removes
//! `X` permutations, and deduplicated by canonical form, which removes `Y`
//! permutations. Work is split by the first row mask and merged in canonical
//! order, so every report is independent of the worker count.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::berge;
use crate::canon::{canonical_unchecked, CanonLimits, CanonicalForm};
use crate::cycle;
use crate::error::{Error, Result};
use crate::format;
use crate::model::{BipartiteGraph, Hypergraph};
use crate::structure::{self, ExceptionClass, LemmaAudit};

/// Largest number of labelled tuples the labelled enumeration will visit.
pub const LABELED_LIMIT: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `n ≤ δ`, `m ≤ 2δ − 2`: a spanning `X` cycle exists.
    Jackson,
    /// `n ≤ δ ≤ m ≤ 3δ − 5`, 2-connected: a spanning `X` cycle exists.
    Mainj,
    /// `n ≤ δ`, `m ≤ 2δ − 1`: a spanning `X` cycle exists unless `G` is
    /// `G1(n)` or some `G2(a, b)`.
    Jackson2,
    /// `n ≤ δ`, `m ≤ 3δ − 5`, condition (2): `G` is X-super-pancyclic.
    Mainpan,
    /// Hypergraph form of `Mainj`: a Hamiltonian Berge cycle exists.
    Mainj2,
    /// Hypergraph form of `Jackson2`.
    Jackson22,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Jackson,
        Theorem::Mainj,
        Theorem::Jackson2,
        Theorem::Mainpan,
        Theorem::Mainj2,
        Theorem::Jackson22,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Jackson => "jackson",
            Theorem::Mainj => "mainj",
            Theorem::Jackson2 => "jackson2",
            Theorem::Mainpan => "mainpan",
            Theorem::Mainj2 => "mainj2",
            Theorem::Jackson22 => "jackson22",
        }
    }

    /// Whether `G1(n)` and `G2(a, b)` are permitted exceptions.
    pub fn allows_exceptions(self) -> bool {
        matches!(self, Theorem::Jackson2 | Theorem::Jackson22)
    }

    fn is_hypergraph(self) -> bool {
        matches!(self, Theorem::Mainj2 | Theorem::Jackson22)
    }

    pub fn hypothesis(self) -> &'static str {
        match self {
            Theorem::Jackson | Theorem::Jackson2 => "every graph in the class",
            Theorem::Mainj => "2-connected",
            Theorem::Mainpan => "condition (2) for every A ⊆ X with |A| ≥ 3",
            Theorem::Mainj2 => "2-connected incidence graph",
            Theorem::Jackson22 => "incidence graph of a hypergraph (no empty edge)",
        }
    }

    pub fn conclusion(self) -> &'static str {
        match self {
            Theorem::Jackson | Theorem::Mainj | Theorem::Jackson2 => "spanning X cycle",
            Theorem::Mainpan => "X-super-pancyclic",
            Theorem::Mainj2 | Theorem::Jackson22 => "Hamiltonian Berge cycle",
        }
    }

    fn check_box(self, n: usize, m: usize, delta: usize) -> std::result::Result<(), String> {
        let mut broken = Vec::new();
        if n < 2 {
            broken.push("n ≥ 2".to_string());
        }
        if n > delta {
            broken.push(format!("n ≤ δ (n = {n}, δ = {delta})"));
        }
        match self {
            Theorem::Jackson if m + 2 > 2 * delta => broken.push(format!("m ≤ 2δ − 2 (m = {m})")),
            Theorem::Jackson2 | Theorem::Jackson22 if m + 1 > 2 * delta => {
                broken.push(format!("m ≤ 2δ − 1 (m = {m})"))
            }
            Theorem::Mainj | Theorem::Mainpan | Theorem::Mainj2 if m + 5 > 3 * delta => {
                broken.push(format!("m ≤ 3δ − 5, i.e. δ ≥ (m + 5)/3 (m = {m})"))
            }
            _ => {}
        }
        if self == Theorem::Mainj && delta > m {
            broken.push(format!("δ ≤ m (δ = {delta}, m = {m})"));
        }
        if (self == Theorem::Mainpan || self.is_hypergraph()) && n < 3 {
            broken.push("n ≥ 3".to_string());
        }
        if broken.is_empty() {
            Ok(())
        } else {
            Err(format!("{}: requires {}", self.id(), broken.join(", ")))
        }
    }

    /// `None` when `G` falls outside the hypotheses, else whether the
    /// conclusion holds.
    pub fn evaluate(self, g: &BipartiteGraph) -> Result<Option<bool>> {
        let satisfied = match self {
            Theorem::Jackson | Theorem::Jackson2 => true,
            Theorem::Mainj | Theorem::Mainj2 => structure::is_2connected(g)?,
            Theorem::Mainpan => structure::satisfies_lll(g)?.holds(),
            Theorem::Jackson22 => g.y_degrees().iter().all(|&d| d > 0),
        };
        if !satisfied {
            return Ok(None);
        }
        let holds = match self {
            Theorem::Jackson | Theorem::Mainj | Theorem::Jackson2 => cycle::has_spanning_x_cycle(g),
            Theorem::Mainpan => cycle::is_x_super_pancyclic(g)?.holds(),
            Theorem::Mainj2 | Theorem::Jackson22 => {
                berge::has_hamiltonian_berge_cycle(&Hypergraph::from_incidence_graph(g)?)?
            }
        };
        Ok(Some(holds))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == lower)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown theorem `{s}`; expected one of {}",
                    Theorem::ALL.map(Theorem::id).join(", ")
                ))
            })
    }
}

/// A theorem together with the class `𝒢(n, m, δ)` it is checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterBox {
    pub theorem: Theorem,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
}

impl ParameterBox {
    pub fn new(theorem: Theorem, n: usize, m: usize, delta: usize) -> Result<Self> {
        theorem.check_box(n, m, delta).map_err(Error::OutsideHypotheses)?;
        Ok(Self { theorem, n, m, delta })
    }

    /// `n = 2` boxes of the exception theorems rest on a degenerate step of
    /// the argument and are reported separately.
    pub fn is_boundary(&self) -> bool {
        self.theorem.allows_exceptions() && self.n == 2
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMode {
    /// One representative per isomorphism class.
    #[default]
    Canonical,
    /// Every labelled graph; the independent check on the canonical mode.
    ExhaustiveLabeled,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the machine's parallelism.
    pub workers: Option<usize>,
    pub mode: EnumerationMode,
    pub limits: CanonLimits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { workers: None, mode: EnumerationMode::Canonical, limits: CanonLimits::default() }
    }
}

impl VerifyOptions {
    pub fn with_workers(workers: usize) -> Self {
        Self { workers: Some(workers), ..Self::default() }
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = self.workers {
            if w == 0 {
                return Err(Error::InvalidArgument("--workers must be at least 1".into()));
            }
            builder = builder.num_threads(w);
        }
        builder.build().map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))
    }
}

fn row_masks(m: usize, delta: usize) -> Vec<u64> {
    let mut masks: Vec<u64> = (0u64..1 << m)
        .filter(|w| w.count_ones() as usize >= delta)
        .collect();
    masks.sort_unstable();
    masks
}

/// Calls `visit` with every non-decreasing index tuple of length `n` over
/// `0..k` whose first entry is `first`.
fn for_each_tuple_from(first: usize, n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    let mut idx = vec![first; n];
    loop {
        visit(&idx);
        let Some(pos) = (1..n).rev().find(|&p| idx[p] + 1 < k) else {
            return;
        };
        idx[pos] += 1;
        let v = idx[pos];
        idx[pos + 1..].fill(v);
    }
}

/// Canonical forms of every class in `𝒢(n, m, δ)`, sorted.
pub fn enumerate_canonical(
    n: usize,
    m: usize,
    delta: usize,
    options: &VerifyOptions,
) -> Result<Vec<CanonicalForm>> {
    check_enumeration(n, m, options.limits)?;
    let masks = row_masks(m, delta);
    let pool = options.pool()?;
    let parts: Vec<Vec<CanonicalForm>> = pool.install(|| {
        (0..masks.len())
            .into_par_iter()
            .map(|first| {
                let mut seen = HashSet::new();
                let mut rows = vec![0u64; n];
                for_each_tuple_from(first, n, masks.len(), &mut |idx| {
                    for (r, &i) in rows.iter_mut().zip(idx) {
                        *r = masks[i];
                    }
                    let g = BipartiteGraph::from_masks(m, &rows).expect("masks fit in m columns");
                    seen.insert(canonical_unchecked(&g));
                });
                seen.into_iter().collect()
            })
            .collect()
    });
    let merged: BTreeSet<CanonicalForm> = parts.into_iter().flatten().collect();
    Ok(merged.into_iter().collect())
}

fn check_enumeration(n: usize, m: usize, limits: CanonLimits) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("enumeration needs n ≥ 1".into()));
    }
    limits.check(n, m).map_err(|_| Error::TooLarge {
        what: "enumeration",
        detail: format!(
            "n = {n}, m = {m} exceeds the guard n ≤ {}, m ≤ {}",
            limits.max_n, limits.max_m
        ),
    })?;
    if m > 24 {
        return Err(Error::TooLarge {
            what: "enumeration",
            detail: format!("m = {m}: row masks are enumerated up to m ≤ 24"),
        });
    }
    Ok(())
}

/// One representative per isomorphism class of `𝒢(n, m, δ)`, in canonical
/// order, using all available cores.
pub fn enumerate_gnmd(n: usize, m: usize, delta: usize) -> Result<Vec<BipartiteGraph>> {
    Ok(enumerate_canonical(n, m, delta, &VerifyOptions::default())?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Every labelled graph with `|X| = n`, `|Y| = m` and minimum `X` degree at
/// least `δ`, in odometer order.
pub fn enumerate_labeled(n: usize, m: usize, delta: usize) -> Result<Vec<BipartiteGraph>> {
    check_enumeration(n, m, CanonLimits::default())?;
    let masks = row_masks(m, delta);
    let total = (masks.len() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if total > LABELED_LIMIT {
        return Err(Error::TooLarge {
            what: "labelled enumeration",
            detail: format!("{total} labelled graphs exceed {LABELED_LIMIT}"),
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    if masks.is_empty() {
        return Ok(out);
    }
    let mut idx = vec![0usize; n];
    loop {
        let rows: Vec<u64> = idx.iter().map(|&i| masks[i]).collect();
        out.push(BipartiteGraph::from_masks(m, &rows)?);
        let Some(pos) = (0..n).find(|&p| idx[p] + 1 < masks.len()) else {
            return Ok(out);
        };
        idx[pos] += 1;
        idx[..pos].fill(0);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    /// Canonical form as hex.
    pub canonical: String,
    pub classification: ExceptionClass,
    /// Whether the theorem permits this exception.
    pub allowed: bool,
    /// Number of enumerated graphs in this class: 1 in canonical mode.
    pub multiplicity: usize,
    pub graph: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "box")]
    pub parameters: ParameterBox,
    pub mode: EnumerationMode,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    pub total_enumerated: usize,
    pub hypothesis_count: usize,
    pub pass_count: usize,
    pub exceptions: Vec<ExceptionRecord>,
    /// Exceptions the theorem does not permit.
    pub violations: usize,
    pub boundary_case: bool,
    pub notes: Vec<String>,
    /// Excluded from serialization so reports are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn exception_count(&self) -> usize {
        self.exceptions.iter().map(|e| e.multiplicity).sum()
    }

    /// `pass + |exceptions| = hypothesis count`.
    pub fn is_consistent(&self) -> bool {
        self.pass_count + self.exception_count() == self.hypothesis_count
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Distinct classifications among the exceptions.
    pub fn exception_classes(&self) -> BTreeSet<ExceptionClass> {
        self.exceptions.iter().map(|e| e.classification).collect()
    }

    pub fn to_table(&self) -> String {
        let p = &self.parameters;
        let mut rows = vec![
            ("theorem", p.theorem.id().to_string()),
            ("box", format!("n = {}, m = {}, δ = {}", p.n, p.m, p.delta)),
            (
                "mode",
                match self.mode {
                    EnumerationMode::Canonical => "canonical".into(),
                    EnumerationMode::ExhaustiveLabeled => "exhaustive-labeled".into(),
                },
            ),
            ("hypothesis", self.hypothesis.into()),
            ("conclusion", self.conclusion.into()),
            ("enumerated", self.total_enumerated.to_string()),
            ("satisfying hypothesis", self.hypothesis_count.to_string()),
            ("pass", self.pass_count.to_string()),
            ("exceptions", self.exception_count().to_string()),
            ("violations", self.violations.to_string()),
        ];
        if self.boundary_case {
            rows.push(("boundary", "boundary case per proof text".into()));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        for e in &self.exceptions {
            out.push_str(&format!(
                "  exception {} {}{}{}\n",
                e.canonical,
                e.classification,
                if e.allowed { "" } else { " NOT ALLOWED" },
                if e.multiplicity > 1 { format!(" ×{}", e.multiplicity) } else { String::new() },
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

/// Runs the theorem over every class of its box.
pub fn verify_theorem(pbox: &ParameterBox, options: &VerifyOptions) -> Result<VerificationReport> {
    pbox.theorem
        .check_box(pbox.n, pbox.m, pbox.delta)
        .map_err(Error::OutsideHypotheses)?;
    let start = Instant::now();
    let ParameterBox { theorem, n, m, delta } = *pbox;
    let graphs: Vec<BipartiteGraph> = match options.mode {
        EnumerationMode::Canonical => enumerate_canonical(n, m, delta, options)?
            .iter()
            .map(CanonicalForm::to_graph)
            .collect(),
        EnumerationMode::ExhaustiveLabeled => enumerate_labeled(n, m, delta)?,
    };
    let pool = options.pool()?;
    let outcomes: Vec<Option<bool>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| theorem.evaluate(g))
            .collect::<Result<_>>()
    })?;

    let mut hypothesis_count = 0;
    let mut pass_count = 0;
    let mut failing: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    for (g, outcome) in graphs.iter().zip(&outcomes) {
        match outcome {
            None => {}
            Some(true) => {
                hypothesis_count += 1;
                pass_count += 1;
            }
            Some(false) => {
                hypothesis_count += 1;
                *failing.entry(canonical_unchecked(g)).or_default() += 1;
            }
        }
    }
    let mut exceptions = Vec::new();
    for (form, multiplicity) in failing {
        let g = form.to_graph();
        let classification = structure::classify_exception_with(&g, options.limits)?;
        let allowed = theorem.allows_exceptions() && classification != ExceptionClass::Other;
        exceptions.push(ExceptionRecord {
            canonical: form.to_hex(),
            classification,
            allowed,
            multiplicity,
            graph: format::to_json_value(&g.into()),
        });
    }
    let violations = exceptions.iter().filter(|e| !e.allowed).map(|e| e.multiplicity).sum();
    let mut notes = Vec::new();
    if pbox.is_boundary() {
        notes.push(
            "n = 2: the argument treats an acyclic G as G2(1,1); boundary case per proof text"
                .to_string(),
        );
    }
    Ok(VerificationReport {
        parameters: *pbox,
        mode: options.mode,
        hypothesis: theorem.hypothesis(),
        conclusion: theorem.conclusion(),
        total_enumerated: graphs.len(),
        hypothesis_count,
        pass_count,
        exceptions,
        violations,
        boundary_case: pbox.is_boundary(),
        notes,
        elapsed: start.elapsed(),
    })
}

/// Graph properties usable in scan predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    Connected,
    TwoConnected,
    SpanningXCycle,
    Lll,
    XSuperPancyclic,
    IsoG1,
    IsoG2,
}

impl Atom {
    const NAMES: [(&'static str, Atom); 12] = [
        ("connected", Atom::Connected),
        ("2-connected", Atom::TwoConnected),
        ("2connected", Atom::TwoConnected),
        ("spanning-x-cycle", Atom::SpanningXCycle),
        ("hamiltonian", Atom::SpanningXCycle),
        ("lll", Atom::Lll),
        ("condition-2", Atom::Lll),
        ("x-super-pancyclic", Atom::XSuperPancyclic),
        ("super-pancyclic", Atom::XSuperPancyclic),
        ("iso-g1", Atom::IsoG1),
        ("iso-g2", Atom::IsoG2),
        ("g1", Atom::IsoG1),
    ];

    fn parse(word: &str) -> Option<Atom> {
        let lower = word.to_lowercase();
        Self::NAMES.iter().find(|(n, _)| *n == lower).map(|&(_, a)| a)
    }

    /// Subset conditions are vacuous below three `X` vertices, and 2-connectivity
    /// is false below three vertices in total.
    fn eval(self, g: &BipartiteGraph) -> Result<bool> {
        Ok(match self {
            Atom::Connected => structure::is_connected(g),
            Atom::TwoConnected => g.n() + g.m() >= 3 && structure::is_2connected(g)?,
            Atom::SpanningXCycle => cycle::has_spanning_x_cycle(g),
            Atom::Lll => g.n() < 3 || structure::satisfies_lll(g)?.holds(),
            Atom::XSuperPancyclic => g.n() < 3 || cycle::is_x_super_pancyclic(g)?.holds(),
            Atom::IsoG1 => matches!(structure::classify_exception(g)?, ExceptionClass::G1 { .. }),
            Atom::IsoG2 => matches!(structure::classify_exception(g)?, ExceptionClass::G2 { .. }),
        })
    }
}

/// Boolean combination of [`Atom`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    Const(bool),
    Atom(Atom),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Not,
    And,
    Or,
    Word(String),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '¬' | '!' | '~' | '∧' | '∨' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    '∧' => Token::And,
                    '∨' => Token::Or,
                    _ => Token::Not,
                });
            }
            '&' | '|' => {
                chars.next();
                if chars.peek() == Some(&c) {
                    chars.next();
                }
                out.push(if c == '&' { Token::And } else { Token::Or });
            }
            c if c.is_alphanumeric() || c == '-' || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if !(c.is_alphanumeric() || c == '-' || c == '_') {
                        break;
                    }
                    word.push(c);
                    chars.next();
                }
                out.push(match word.to_lowercase().as_str() {
                    "not" => Token::Not,
                    "and" => Token::And,
                    "or" => Token::Or,
                    _ => Token::Word(word),
                });
            }
            other => {
                return Err(Error::UnknownPredicate(format!("unexpected character `{other}`")))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn or(&mut self) -> Result<Predicate> {
        let mut left = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            left = Predicate::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Predicate> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = Predicate::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Predicate> {
        let token = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match token {
            Some(Token::Not) => Ok(Predicate::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let inner = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::UnknownPredicate("missing `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Word(w)) => match w.to_lowercase().as_str() {
                "true" => Ok(Predicate::Const(true)),
                "false" => Ok(Predicate::Const(false)),
                _ => Atom::parse(&w).map(Predicate::Atom).ok_or_else(|| {
                    Error::UnknownPredicate(format!(
                        "`{w}`; known names: true, false, {}",
                        Atom::NAMES.map(|(n, _)| n).join(", ")
                    ))
                }),
            },
            Some(t) => Err(Error::UnknownPredicate(format!("unexpected {t:?}"))),
            None => Err(Error::UnknownPredicate("unexpected end of predicate".into())),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { tokens: tokenize(s)?, pos: 0 };
        let pred = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(Error::UnknownPredicate(format!(
                "trailing input after position {}",
                p.pos
            )));
        }
        Ok(pred)
    }
}

impl Predicate {
    pub fn eval(&self, g: &BipartiteGraph) -> Result<bool> {
        Ok(match self {
            Predicate::Const(b) => *b,
            Predicate::Atom(a) => a.eval(g)?,
            Predicate::Not(p) => !p.eval(g)?,
            Predicate::And(a, b) => a.eval(g)? && b.eval(g)?,
            Predicate::Or(a, b) => a.eval(g)? || b.eval(g)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub n: usize,
    pub m: usize,
    pub canonical: String,
    #[serde(skip)]
    pub form: CanonicalForm,
}

impl ScanHit {
    pub fn graph(&self) -> BipartiteGraph {
        self.form.to_graph()
    }
}

/// Every class of `𝒢(n, m, δ)` over the given ranges satisfying `pred`,
/// ordered by `(n, m, canonical form)`.
pub fn scan(
    pred: &Predicate,
    ns: RangeInclusive<usize>,
    ms: RangeInclusive<usize>,
    delta: usize,
    options: &VerifyOptions,
) -> Result<Vec<ScanHit>> {
    let pool = options.pool()?;
    let mut hits = Vec::new();
    for n in ns {
        for m in ms.clone() {
            let forms = enumerate_canonical(n, m, delta, options)?;
            let keep: Vec<bool> = pool.install(|| {
                forms
                    .par_iter()
                    .map(|f| pred.eval(&f.to_graph()))
                    .collect::<Result<_>>()
            })?;
            hits.extend(forms.into_iter().zip(keep).filter(|(_, k)| *k).map(|(form, _)| ScanHit {
                n,
                m,
                canonical: form.to_hex(),
                form,
            }));
        }
    }
    Ok(hits)
}

/// Audits the tight pairs of every class of `𝒢(n, m, δ)` for each `m` in
/// `ms`.
pub fn audit_lemmas(
    n: usize,
    ms: RangeInclusive<usize>,
    delta: usize,
    options: &VerifyOptions,
) -> Result<LemmaAudit> {
    let pool = options.pool()?;
    let mut total = LemmaAudit::default();
    for m in ms {
        let forms = enumerate_canonical(n, m, delta, options)?;
        let audits: Vec<LemmaAudit> = pool.install(|| {
            forms
                .par_iter()
                .map(|f| structure::audit_tight_pairs(&f.to_graph()))
                .collect::<Result<_>>()
        })?;
        for a in &audits {
            total += a;
        }
    }
    Ok(total)
}
