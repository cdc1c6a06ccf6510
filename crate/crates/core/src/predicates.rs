//! Hypotheses of the Brill-Noether nonemptiness/properness criterion for a
//! nonzero effective divisor `D` on the Kummer surface:
//!
//! 1. `h^0(O(D)) = 1`, certified by a peeling order;
//! 2. no nonzero effective subdivisor `D'` has `theta(D') ~ D'`, decided by brute force;
//! 3. `D^2 < -4`.
//!
//! Also holds the closed-form criteria for divisors `sum a_i E_i + T` with
//! every node disjoint from the trope.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, LatticeContext, RANK};

/// Default cap on the number of vectors a subdivisor sweep may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Outcome of the `h^0 = 1` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H0Certificate {
    /// Curves `C_1, ..., C_n` (basis indices, repeated with multiplicity) with
    /// `C_k . (C_1 + ... + C_{k-1}) <= 0` for every `k >= 2`.
    Certified { peeling_order: Vec<usize> },
    /// No peeling order exists (or the search budget ran out). Says nothing
    /// about `h^0` itself.
    Unknown,
}

impl H0Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, H0Certificate::Certified { .. })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            H0Certificate::Certified { .. } => "certified",
            H0Certificate::Unknown => "unknown",
        }
    }
}

/// Result of the invariant-subdivisor sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SubdivisorVerdict {
    Holds,
    /// Lexicographically first invariant subdivisor.
    Fails { witness: DivisorClass },
    ExhaustedBudget { needed: u128, budget: u64 },
}

impl SubdivisorVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SubdivisorVerdict::Holds)
    }

    pub fn witness(&self) -> Option<&DivisorClass> {
        match self {
            SubdivisorVerdict::Fails { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SubdivisorVerdict::Holds => "holds",
            SubdivisorVerdict::Fails { .. } => "fails",
            SubdivisorVerdict::ExhaustedBudget { .. } => "budget",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub divisor: DivisorClass,
    pub cond_i: H0Certificate,
    pub cond_ii: SubdivisorVerdict,
    pub cond_iii: bool,
    pub self_int: i64,
    pub overall: Verdict,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }
}

fn require_effective_nonzero(d: &DivisorClass) -> Result<()> {
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(())
}

/// Number of vectors `0 <= D' <= d`, including zero.
pub fn box_size(d: &DivisorClass) -> u128 {
    d.coeffs()
        .iter()
        .map(|&a| a.max(0) as u128 + 1)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

/// Searches for a peeling order of `d` within [`DEFAULT_BUDGET`] visited states.
pub fn h0_one_certificate(ctx: &LatticeContext, d: &DivisorClass) -> Result<H0Certificate> {
    h0_one_certificate_with_budget(ctx, d, DEFAULT_BUDGET)
}

/// Depth-first search for a peeling order, working down from `d`: a curve `C`
/// may be removed from the current partial sum `S` when `C . (S - C) <= 0`.
/// Dead-end partial sums are memoized.
pub fn h0_one_certificate_with_budget(
    ctx: &LatticeContext,
    d: &DivisorClass,
    budget: u64,
) -> Result<H0Certificate> {
    require_effective_nonzero(d)?;

    struct Frame {
        sum: DivisorClass,
        next: usize,
    }

    let mut failed: HashSet<DivisorClass> = HashSet::new();
    let mut stack = vec![Frame { sum: *d, next: 0 }];
    // Curves removed so far, last curve of the order first.
    let mut removed: Vec<usize> = Vec::new();
    let mut visited: u64 = 1;

    while let Some(top) = stack.last_mut() {
        if top.sum.degree() == 1 {
            let first = top.sum.support().next().expect("degree-one sum has support");
            let mut order = vec![first];
            order.extend(removed.iter().rev());
            return Ok(H0Certificate::Certified { peeling_order: order });
        }

        let sum = top.sum;
        let candidate = (top.next..RANK).find(|&c| {
            // C . (S - C) = C . S + 2
            sum.coeff(c) > 0 && ctx.row_dot(c, &sum) - ctx.entry(c, c) <= 0
        });
        match candidate {
            Some(c) => {
                top.next = c + 1;
                let mut rest = *sum.coeffs();
                rest[c] -= 1;
                let rest = DivisorClass::from_raw(rest);
                if failed.contains(&rest) {
                    continue;
                }
                visited += 1;
                if visited > budget {
                    return Ok(H0Certificate::Unknown);
                }
                removed.push(c);
                stack.push(Frame { sum: rest, next: 0 });
            }
            None => {
                failed.insert(sum);
                stack.pop();
                removed.pop();
            }
        }
    }
    Ok(H0Certificate::Unknown)
}

/// Re-checks a peeling order against `d`.
pub fn verify_peeling(ctx: &LatticeContext, d: &DivisorClass, order: &[usize]) -> bool {
    let mut partial = [0i64; RANK];
    for (k, &c) in order.iter().enumerate() {
        if c >= RANK {
            return false;
        }
        if k > 0 && ctx.row_dot(c, &DivisorClass::from_raw(partial)) > 0 {
            return false;
        }
        partial[c] += 1;
    }
    !order.is_empty() && &partial == d.coeffs()
}

/// Every `D'` with `0 <= D' <= d`, `D' != 0`, in ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct Subdivisors {
    bound: DivisorClass,
    support: Vec<usize>,
    current: [i64; RANK],
    done: bool,
}

impl Iterator for Subdivisors {
    type Item = DivisorClass;

    fn next(&mut self) -> Option<DivisorClass> {
        if self.done {
            return None;
        }
        // Odometer over the support, last basis position fastest.
        for &i in self.support.iter().rev() {
            if self.current[i] < self.bound.coeff(i) {
                self.current[i] += 1;
                return Some(DivisorClass::from_raw(self.current));
            }
            self.current[i] = 0;
        }
        self.done = true;
        None
    }
}

/// Enumerates the nonzero effective subdivisors of `d`; refuses when the
/// sweep would exceed `budget` vectors.
pub fn subdivisors(d: &DivisorClass, budget: u64) -> Result<Subdivisors> {
    require_effective_nonzero(d)?;
    let needed = box_size(d) - 1;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(Subdivisors {
        bound: *d,
        support: d.support().collect(),
        current: [0; RANK],
        done: false,
    })
}

/// Brute force over all nonzero effective subdivisors.
pub fn no_invariant_subdivisor(
    ctx: &LatticeContext,
    d: &DivisorClass,
    budget: u64,
) -> Result<SubdivisorVerdict> {
    let iter = match subdivisors(d, budget) {
        Ok(it) => it,
        Err(Error::BudgetExceeded { needed, budget }) => {
            return Ok(SubdivisorVerdict::ExhaustedBudget { needed, budget })
        }
        Err(e) => return Err(e),
    };
    for sub in iter {
        if ctx.is_theta_invariant(&sub) {
            return Ok(SubdivisorVerdict::Fails { witness: sub });
        }
    }
    Ok(SubdivisorVerdict::Holds)
}

/// Evaluates all three hypotheses with [`DEFAULT_BUDGET`].
pub fn theorem_check(ctx: &LatticeContext, d: &DivisorClass) -> Result<CheckReport> {
    theorem_check_with_budget(ctx, d, DEFAULT_BUDGET)
}

pub fn theorem_check_with_budget(
    ctx: &LatticeContext,
    d: &DivisorClass,
    budget: u64,
) -> Result<CheckReport> {
    require_effective_nonzero(d)?;
    let self_int = ctx.self_int(d);
    let cond_iii = self_int < -4;
    // Condition (iii) is cheap; the sweeps still run so the report is complete.
    let cond_i = h0_one_certificate_with_budget(ctx, d, budget)?;
    let cond_ii = no_invariant_subdivisor(ctx, d, budget)?;

    let overall = if !cond_iii || matches!(cond_ii, SubdivisorVerdict::Fails { .. }) {
        Verdict::Fail
    } else if cond_i.is_certified() && cond_ii.holds() {
        Verdict::Pass
    } else {
        Verdict::Unknown
    };
    Ok(CheckReport { divisor: *d, cond_i, cond_ii, cond_iii, self_int, overall })
}

/// Validated `sum a_i E_i + T` with distinct nodes disjoint from `T`.
fn validate_shape(ctx: &LatticeContext, nodes: &[(usize, i64)], trope: usize) -> Result<()> {
    if trope >= RANK || !ctx.generator(trope).is_trope() {
        return Err(Error::NotATrope(label_or_index(ctx, trope)));
    }
    if nodes.is_empty() {
        return Err(Error::EmptyNodeSet);
    }
    let mut seen = [false; RANK];
    for &(n, a) in nodes {
        if n >= RANK || !ctx.generator(n).is_node() {
            return Err(Error::NotANode(label_or_index(ctx, n)));
        }
        let label = ctx.generator(n).label.to_string();
        if seen[n] {
            return Err(Error::DuplicateNode(label));
        }
        seen[n] = true;
        if a <= 0 {
            return Err(Error::NonPositive(label));
        }
        if ctx.entry(n, trope) != 0 {
            return Err(Error::Intersecting {
                node: label,
                trope: ctx.generator(trope).label.to_string(),
            });
        }
    }
    Ok(())
}

fn label_or_index(ctx: &LatticeContext, i: usize) -> String {
    if i < RANK {
        ctx.generator(i).label.to_string()
    } else {
        format!("#{i}")
    }
}

/// The divisor `sum a_i E_i + T`.
pub fn node_trope_divisor(
    ctx: &LatticeContext,
    nodes: &[(usize, i64)],
    trope: usize,
) -> Result<DivisorClass> {
    validate_shape(ctx, nodes, trope)?;
    DivisorClass::from_terms(nodes.iter().copied().chain([(trope, 1)]))
}

/// Closed-form test of `D !~ theta(D)` for `D = sum a_i E_i + T`: true iff
/// no `E_i` is `theta(T)`, or the node `theta(T)` has coefficient at least 2,
/// or it has coefficient 1 and other nodes are present.
pub fn prop_ex2_closed_form(
    ctx: &LatticeContext,
    nodes: &[(usize, i64)],
    trope: usize,
) -> Result<bool> {
    validate_shape(ctx, nodes, trope)?;
    let partner = ctx.theta_perm()[trope];
    Ok(match nodes.iter().find(|&&(n, _)| n == partner) {
        None => true,
        Some(&(_, a)) => a >= 2 || nodes.len() > 1,
    })
}

/// Closed-form test that `sum a_i E_i + T` has no invariant nonzero effective
/// subdivisor: true iff `theta(T)` is not among the nodes.
pub fn corollary_closed_form(
    ctx: &LatticeContext,
    nodes: &[(usize, i64)],
    trope: usize,
) -> Result<bool> {
    validate_shape(ctx, nodes, trope)?;
    let partner = ctx.theta_perm()[trope];
    Ok(nodes.iter().all(|&(n, _)| n != partner))
}
