//! Enumeration of candidate divisors and the self-verification suite.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::chern::{bundle_invariants, BundleInvariants};
use crate::error::{Error, Result};
use crate::expr::format_divisor;
use crate::lattice::{DivisorClass, LatticeContext, FAMILY, RANK};
use crate::predicates::{
    corollary_closed_form, no_invariant_subdivisor, prop_ex2_closed_form,
    theorem_check_with_budget, CheckReport, DEFAULT_BUDGET,
};

/// Shapes of divisors the enumerator walks through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Nonzero sums of nodes.
    Nodes,
    /// Nonzero sums of tropes.
    Tropes,
    /// Sums with at least one node and one trope, no node meeting a trope.
    MixedDisjoint,
    /// `sum a_i E_i + T`: one trope with coefficient 1, at least one node, none meeting `T`.
    PropEx2Shape,
    /// Every nonzero effective combination of the 32 curves.
    All,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Nodes, Family::Tropes, Family::MixedDisjoint, Family::PropEx2Shape, Family::All];

    pub fn name(self) -> &'static str {
        match self {
            Family::Nodes => "nodes",
            Family::Tropes => "tropes",
            Family::MixedDisjoint => "mixed_disjoint",
            Family::PropEx2Shape => "prop_ex2_shape",
            Family::All => "all",
        }
    }

    fn caps(self, max_coeff: i64) -> [i64; RANK] {
        std::array::from_fn(|i| {
            let node = i < FAMILY;
            match self {
                Family::Nodes => if node { max_coeff } else { 0 },
                Family::Tropes => if node { 0 } else { max_coeff },
                Family::PropEx2Shape => if node { max_coeff } else { 1 },
                Family::MixedDisjoint | Family::All => max_coeff,
            }
        })
    }

    /// Whether `d` belongs to this family under the given bounds.
    pub fn contains(self, ctx: &LatticeContext, d: &DivisorClass, max_degree: i64, max_coeff: i64) -> bool {
        let caps = self.caps(max_coeff);
        if d.is_zero() || !d.is_effective() || d.degree() > max_degree {
            return false;
        }
        if d.coeffs().iter().zip(caps.iter()).any(|(c, cap)| c > cap) {
            return false;
        }
        self.shape_ok(ctx, d)
    }

    fn shape_ok(self, ctx: &LatticeContext, d: &DivisorClass) -> bool {
        let nodes: Vec<usize> = d.support().filter(|&i| i < FAMILY).collect();
        let tropes: Vec<usize> = d.support().filter(|&i| i >= FAMILY).collect();
        let disjoint = || nodes.iter().all(|&n| tropes.iter().all(|&t| ctx.entry(n, t) == 0));
        match self {
            Family::Nodes => tropes.is_empty(),
            Family::Tropes => nodes.is_empty(),
            Family::All => true,
            Family::MixedDisjoint => !nodes.is_empty() && !tropes.is_empty() && disjoint(),
            Family::PropEx2Shape => {
                tropes.len() == 1 && d.coeff(tropes[0]) == 1 && !nodes.is_empty() && disjoint()
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub family: Family,
    /// Bound on the sum of the coefficients.
    pub max_degree: i64,
    pub max_coeff: i64,
    /// Subdivisor-sweep cap per divisor.
    pub budget: u64,
    /// Keep only the lexicographically smaller of `D`, `theta(D)` when both are enumerated.
    pub canonicalize: bool,
    /// Emit records whose overall verdict is not a pass.
    pub include_failures: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            family: Family::Nodes,
            max_degree: 3,
            max_coeff: 3,
            budget: DEFAULT_BUDGET,
            canonicalize: false,
            include_failures: false,
        }
    }
}

impl SearchParams {
    pub fn validate(&self) -> Result<()> {
        if self.max_degree < 1 {
            return Err(Error::InvalidParams("max_degree must be at least 1".into()));
        }
        if self.max_coeff < 1 {
            return Err(Error::InvalidParams("max_coeff must be at least 1".into()));
        }
        if self.budget < 1 {
            return Err(Error::InvalidParams("budget must be at least 1".into()));
        }
        Ok(())
    }
}

/// A checked divisor together with its bundle invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleRecord {
    pub divisor: String,
    pub report: CheckReport,
    pub invariants: BundleInvariants,
}

impl ExampleRecord {
    pub fn evaluate(ctx: &LatticeContext, d: &DivisorClass, budget: u64) -> Result<Self> {
        let report = theorem_check_with_budget(ctx, d, budget)?;
        let invariants = bundle_invariants(ctx, d)?;
        Ok(ExampleRecord { divisor: format_divisor(d), report, invariants })
    }
}

/// Effective vectors within per-coordinate caps and a degree bound, in
/// ascending lexicographic order, zero excluded.
#[derive(Debug, Clone)]
pub struct BoundedVectors {
    caps: [i64; RANK],
    max_degree: i64,
    current: [i64; RANK],
    done: bool,
}

impl BoundedVectors {
    pub fn new(caps: [i64; RANK], max_degree: i64) -> Self {
        BoundedVectors { caps, max_degree, current: [0; RANK], done: false }
    }
}

impl Iterator for BoundedVectors {
    type Item = DivisorClass;

    fn next(&mut self) -> Option<DivisorClass> {
        if self.done {
            return None;
        }
        // Successor: bump the rightmost coordinate that still has room, clear everything after it.
        let mut prefix = [0i64; RANK];
        let mut acc = 0;
        for (p, &c) in prefix.iter_mut().zip(self.current.iter()) {
            *p = acc;
            acc += c;
        }
        for i in (0..RANK).rev() {
            if self.current[i] < self.caps[i] && prefix[i] + self.current[i] < self.max_degree {
                self.current[i] += 1;
                self.current[i + 1..].iter_mut().for_each(|c| *c = 0);
                return Some(DivisorClass::from_raw(self.current));
            }
        }
        self.done = true;
        None
    }
}

/// Every divisor of the family within bounds, in ascending lexicographic order.
pub fn family_members(
    ctx: &'static LatticeContext,
    family: Family,
    max_degree: i64,
    max_coeff: i64,
) -> impl Iterator<Item = DivisorClass> {
    BoundedVectors::new(family.caps(max_coeff), max_degree).filter(move |d| family.shape_ok(ctx, d))
}

const CHUNK: usize = 4096;

/// Lazily evaluated stream of [`ExampleRecord`]s in deterministic order.
///
/// Candidates are checked in parallel chunks and re-emitted in enumeration order.
pub struct ExampleStream {
    ctx: &'static LatticeContext,
    params: SearchParams,
    candidates: Box<dyn Iterator<Item = DivisorClass> + Send>,
    buffer: VecDeque<Result<ExampleRecord>>,
    exhausted: bool,
}

impl ExampleStream {
    fn refill(&mut self) {
        while self.buffer.is_empty() && !self.exhausted {
            let chunk: Vec<DivisorClass> = self.candidates.by_ref().take(CHUNK).collect();
            if chunk.len() < CHUNK {
                self.exhausted = true;
            }
            let ctx = self.ctx;
            let params = &self.params;
            let out: Vec<Option<Result<ExampleRecord>>> = chunk
                .par_iter()
                .map(|d| {
                    if params.canonicalize {
                        let image = ctx.theta(d);
                        let twin_listed = params.family.contains(ctx, &image, params.max_degree, params.max_coeff);
                        if twin_listed && image < *d {
                            return None;
                        }
                    }
                    match ExampleRecord::evaluate(ctx, d, params.budget) {
                        Ok(rec) if !params.include_failures && !rec.report.passed() => None,
                        other => Some(other),
                    }
                })
                .collect();
            self.buffer.extend(out.into_iter().flatten());
        }
    }
}

impl Iterator for ExampleStream {
    type Item = Result<ExampleRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        self.refill();
        self.buffer.pop_front()
    }
}

/// Enumerates the family described by `params`, checking each divisor.
pub fn enumerate_examples(params: &SearchParams) -> Result<ExampleStream> {
    params.validate()?;
    let ctx = LatticeContext::global();
    let candidates = Box::new(family_members(ctx, params.family, params.max_degree, params.max_coeff));
    Ok(ExampleStream {
        ctx,
        params: params.clone(),
        candidates,
        buffer: VecDeque::new(),
        exhausted: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<VerificationCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(VerificationCheck { name, passed, detail: detail.into() });
    }
}

/// Tally of the closed-form versus brute-force comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AgreementSummary {
    pub cases: usize,
    pub prop_mismatches: usize,
    pub corollary_mismatches: usize,
}

/// Compares both closed forms with brute force on every `sum a_i E_i + T`
/// with at most `max_nodes` distinct nodes disjoint from `T` and `a_i <= max_coeff`.
pub fn closed_form_agreement(ctx: &LatticeContext, max_nodes: usize, max_coeff: i64) -> Result<AgreementSummary> {
    let mut shapes: Vec<(Vec<(usize, i64)>, usize)> = Vec::new();
    for trope in FAMILY..RANK {
        let free: Vec<usize> = (0..FAMILY).filter(|&n| ctx.entry(n, trope) == 0).collect();
        for size in 1..=max_nodes {
            for subset in combinations(&free, size) {
                for coeffs in coefficient_grid(size, max_coeff) {
                    shapes.push((subset.iter().copied().zip(coeffs).collect(), trope));
                }
            }
        }
    }
    shapes
        .par_iter()
        .map(|(nodes, trope)| -> Result<AgreementSummary> {
            let d = crate::predicates::node_trope_divisor(ctx, nodes, *trope)?;
            let prop = prop_ex2_closed_form(ctx, nodes, *trope)? == !ctx.is_theta_invariant(&d);
            let cor = corollary_closed_form(ctx, nodes, *trope)?
                == no_invariant_subdivisor(ctx, &d, DEFAULT_BUDGET)?.holds();
            Ok(AgreementSummary {
                cases: 1,
                prop_mismatches: usize::from(!prop),
                corollary_mismatches: usize::from(!cor),
            })
        })
        .try_reduce(AgreementSummary::default, |a, b| {
            Ok(AgreementSummary {
                cases: a.cases + b.cases,
                prop_mismatches: a.prop_mismatches + b.prop_mismatches,
                corollary_mismatches: a.corollary_mismatches + b.corollary_mismatches,
            })
        })
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn coefficient_grid(len: usize, max: i64) -> Vec<Vec<i64>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                (1..=max).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect()
    })
}

/// Runs the structural and cross-check suite on the shared context.
pub fn verify_configuration() -> VerificationReport {
    let ctx = LatticeContext::global();
    let g = ctx.gram();
    let perm = ctx.theta_perm();
    let mut report = VerificationReport::default();

    let incidences: Vec<i64> = (0..RANK)
        .map(|i| {
            let opposite = if i < FAMILY { FAMILY..RANK } else { 0..FAMILY };
            opposite.map(|j| g[i][j]).sum()
        })
        .collect();
    report.push(
        "incidence_16_6",
        incidences.iter().all(|&c| c == 6),
        format!("opposite-family incidence counts: {incidences:?}"),
    );

    let symmetric = (0..RANK).all(|i| (0..RANK).all(|j| g[i][j] == g[j][i]));
    report.push("gram_symmetric", symmetric, "");

    let entries_ok = (0..RANK).all(|i| {
        (0..RANK).all(|j| {
            let same_family = (i < FAMILY) == (j < FAMILY);
            match (i == j, same_family) {
                (true, _) => g[i][j] == -2,
                (false, true) => g[i][j] == 0,
                (false, false) => g[i][j] == 0 || g[i][j] == 1,
            }
        })
    });
    report.push("gram_entries", entries_ok, "diagonal -2, same family 0, node-trope in {0,1}");
    report.push("gram_even", (0..RANK).all(|i| g[i][i] % 2 == 0), "even diagonal");

    let involutive = (0..RANK).all(|i| perm[perm[i]] == i);
    let swaps = (0..RANK).all(|i| (i < FAMILY) != (perm[i] < FAMILY));
    report.push("theta_involution", involutive && swaps, "theta^2 = id, families exchanged");

    let isometry = (0..RANK).all(|i| (0..RANK).all(|j| g[perm[i]][perm[j]] == g[i][j]));
    report.push("theta_isometry", isometry, "P^T G P = G");

    let rank = ctx.gram_rank();
    report.push("gram_rank", rank == 17, format!("rank {rank}"));

    let parity = parity_sweep(ctx, 3, 2);
    report.push(
        "parity_sweep",
        parity.1 == 0,
        format!("{} divisors, {} with odd D.theta(D)", parity.0, parity.1),
    );

    match closed_form_agreement(ctx, 3, 3) {
        Ok(s) => report.push(
            "closed_form_agreement",
            s.prop_mismatches == 0 && s.corollary_mismatches == 0 && s.cases > 0,
            format!(
                "{} cases, {} closed-form invariance mismatches, {} subdivisor mismatches",
                s.cases, s.prop_mismatches, s.corollary_mismatches
            ),
        ),
        Err(e) => report.push("closed_form_agreement", false, e.to_string()),
    }

    report
}

/// Counts divisors with support size `<= max_support` and coefficients in
/// `1..=max_coeff`, and how many have odd `D.theta(D)`.
pub fn parity_sweep(ctx: &LatticeContext, max_support: usize, max_coeff: i64) -> (usize, usize) {
    let all: Vec<usize> = (0..RANK).collect();
    let mut total = 0;
    let mut odd = 0;
    for size in 1..=max_support {
        for subset in combinations(&all, size) {
            for coeffs in coefficient_grid(size, max_coeff) {
                let d = DivisorClass::from_terms(subset.iter().copied().zip(coeffs)).expect("small coefficients");
                total += 1;
                if ctx.pair(&d, &ctx.theta(&d)) % 2 != 0 {
                    odd += 1;
                }
            }
        }
    }
    (total, odd)
}
