//! The Picard lattice of a Jacobian Kummer surface, generated by its 16 nodes
//! and 16 tropes.
//!
//! Divisor classes are integer vectors over a fixed basis of the 32 curves.
//! Two vectors represent the same class iff their difference pairs to zero
//! with every generator; the pairing is nondegenerate on the Picard lattice,
//! so this decides linear equivalence exactly.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::involution::THETA_PAIRS;
use crate::linalg;

/// Number of basis curves.
pub const RANK: usize = 32;
/// Number of nodes (and of tropes).
pub const FAMILY: usize = 16;
/// Largest coefficient magnitude a [`DivisorClass`] may carry. Pairings of two
/// such vectors stay far inside `i64`.
pub const COEFF_LIMIT: i64 = 1_000_000;

const LABELS: [&str; RANK] = [
    "E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26", "E34", "E35", "E36",
    "E45", "E46", "E56", "T1", "T2", "T3", "T4", "T5", "T6", "T126", "T136", "T146", "T156",
    "T236", "T246", "T256", "T346", "T356", "T456",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Node,
    Trope,
}

/// One of the 32 basis (-2)-curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub kind: CurveKind,
    pub label: &'static str,
    pub index: usize,
}

impl Generator {
    pub fn is_node(&self) -> bool {
        self.kind == CurveKind::Node
    }

    pub fn is_trope(&self) -> bool {
        self.kind == CurveKind::Trope
    }

    /// Weierstrass indices carried by the label, e.g. `E25 -> {2,5}`,
    /// `T3 -> {3}`, `T146 -> {1,4,6}`, `E0 -> {}`.
    fn index_set(&self) -> Vec<u8> {
        self.label[1..].bytes().map(|b| b - b'0').filter(|&d| d != 0).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label)
    }
}

/// Intersection number of a node and a trope, read off the incidence rules of
/// the Kummer (16_6)-configuration.
fn node_trope_incidence(node: &Generator, trope: &Generator) -> i64 {
    let n = node.index_set();
    let t = trope.index_set();
    let hit = match (n.len(), t.len()) {
        // E0 meets the six tropes T_i and none of the T_ij6.
        (0, 1) => true,
        (0, _) => false,
        // E_ij meets T_k iff k is one of i, j.
        (_, 1) => n.contains(&t[0]),
        // E_ij meets T_kl6 iff {i,j} lies inside {k,l,6} or misses it entirely.
        _ => {
            let inside = n.iter().all(|i| t.contains(i));
            let apart = n.iter().all(|i| !t.contains(i));
            inside || apart
        }
    };
    hit as i64
}

/// Integer coefficient vector over the generator basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass([i64; RANK]);

impl DivisorClass {
    pub const fn zero() -> Self {
        DivisorClass([0; RANK])
    }

    /// The class of a single basis curve.
    pub fn generator(index: usize) -> Self {
        let mut c = [0; RANK];
        c[index] = 1;
        DivisorClass(c)
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != RANK {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!("expected {RANK} coefficients, got {}", coeffs.len()),
            });
        }
        let mut c = [0; RANK];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = check_bound(v as i128)?;
        }
        Ok(DivisorClass(c))
    }

    /// Builds a class from `(basis index, coefficient)` terms; repeated indices accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Result<Self> {
        let mut acc = [0i128; RANK];
        for (i, v) in terms {
            acc[i] += v as i128;
            check_bound(acc[i])?;
        }
        let mut c = [0; RANK];
        for (slot, v) in c.iter_mut().zip(acc) {
            *slot = v as i64;
        }
        Ok(DivisorClass(c))
    }

    pub fn coeffs(&self) -> &[i64; RANK] {
        &self.0
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Sum of the coefficients.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Basis indices with a nonzero coefficient, in basis order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..RANK).filter(move |&i| self.0[i] != 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DivisorClass) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let mut c = [0; RANK];
        for (slot, &a) in c.iter_mut().zip(self.0.iter()) {
            *slot = check_bound(a as i128 * k as i128)?;
        }
        Ok(DivisorClass(c))
    }

    /// Copy of `self` with one coefficient replaced.
    pub fn with(&self, index: usize, value: i64) -> Result<Self> {
        let mut c = self.0;
        c[index] = check_bound(value as i128)?;
        Ok(DivisorClass(c))
    }

    fn combine(&self, other: &DivisorClass, op: impl Fn(i128, i128) -> i128) -> Result<Self> {
        let mut c = [0; RANK];
        for ((slot, &a), &b) in c.iter_mut().zip(self.0.iter()).zip(other.0.iter()) {
            *slot = check_bound(op(a as i128, b as i128))?;
        }
        Ok(DivisorClass(c))
    }

    pub(crate) fn from_raw(c: [i64; RANK]) -> Self {
        DivisorClass(c)
    }
}

fn check_bound(v: i128) -> Result<i64> {
    if v.abs() > COEFF_LIMIT as i128 {
        Err(Error::CoefficientOverflow(v))
    } else {
        Ok(v as i64)
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorClass({})", crate::expr::format_divisor(self))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_divisor(self))
    }
}

/// Gram matrix, basis and involution of the Kummer Picard lattice.
///
/// Immutable once built; [`LatticeContext::global`] hands out a shared instance.
#[derive(Debug, Clone)]
pub struct LatticeContext {
    basis: [Generator; RANK],
    gram: [[i64; RANK]; RANK],
    theta: [usize; RANK],
}

impl Default for LatticeContext {
    fn default() -> Self {
        Self::new()
    }
}

impl LatticeContext {
    pub fn new() -> Self {
        let basis: [Generator; RANK] = std::array::from_fn(|index| Generator {
            kind: if index < FAMILY { CurveKind::Node } else { CurveKind::Trope },
            label: LABELS[index],
            index,
        });

        let mut gram = [[0i64; RANK]; RANK];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = -2;
        }
        for n in 0..FAMILY {
            for t in FAMILY..RANK {
                let v = node_trope_incidence(&basis[n], &basis[t]);
                gram[n][t] = v;
                gram[t][n] = v;
            }
        }

        let mut theta = [usize::MAX; RANK];
        for (node, trope) in THETA_PAIRS {
            let n = label_index(node).expect("theta table names a basis node");
            let t = label_index(trope).expect("theta table names a basis trope");
            theta[n] = t;
            theta[t] = n;
        }
        debug_assert!(theta.iter().all(|&i| i < RANK));

        LatticeContext { basis, gram, theta }
    }

    /// Process-wide shared context.
    pub fn global() -> &'static LatticeContext {
        static CTX: OnceLock<LatticeContext> = OnceLock::new();
        CTX.get_or_init(LatticeContext::new)
    }

    pub fn basis(&self) -> &[Generator; RANK] {
        &self.basis
    }

    pub fn generator(&self, index: usize) -> &Generator {
        &self.basis[index]
    }

    /// Basis index of a canonical label such as `E13` or `T246`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        label_index(label)
    }

    /// Class of the generator with the given label. Panics on an unknown label.
    pub fn class(&self, label: &str) -> DivisorClass {
        DivisorClass::generator(label_index(label).unwrap_or_else(|| panic!("no generator {label}")))
    }

    pub fn gram(&self) -> &[[i64; RANK]; RANK] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    /// Basis permutation induced by the Enriques involution.
    pub fn theta_perm(&self) -> &[usize; RANK] {
        &self.theta
    }

    /// Intersection number `a . b`.
    pub fn pair(&self, a: &DivisorClass, b: &DivisorClass) -> i64 {
        let mut total = 0;
        for i in a.support() {
            total += a.0[i] * self.row_dot(i, b);
        }
        total
    }

    pub fn self_int(&self, d: &DivisorClass) -> i64 {
        self.pair(d, d)
    }

    /// `generator(i) . b`.
    pub fn row_dot(&self, i: usize, b: &DivisorClass) -> i64 {
        let row = &self.gram[i];
        b.support().map(|j| row[j] * b.0[j]).sum()
    }

    /// Linear equivalence: `a - b` pairs to zero with every generator.
    pub fn equiv(&self, a: &DivisorClass, b: &DivisorClass) -> bool {
        (0..RANK).all(|i| {
            let row = &self.gram[i];
            let diff: i64 = (0..RANK).map(|j| row[j] * (a.0[j] - b.0[j])).sum();
            diff == 0
        })
    }

    /// Exact rank of the Gram matrix.
    pub fn gram_rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.gram.iter().map(|r| r.to_vec()).collect();
        linalg::integer_rank(&rows).expect("Gram minors fit in i128")
    }
}

fn label_index(label: &str) -> Option<usize> {
    LABELS.iter().position(|&l| l == label)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> &'static LatticeContext {
        LatticeContext::global()
    }

    fn g(l: &str) -> usize {
        ctx().index_of(l).unwrap()
    }

    #[test]
    fn basis_order_is_fixed() {
        let b = ctx().basis();
        assert_eq!(b[0].label, "E0");
        assert_eq!(b[15].label, "E56");
        assert_eq!(b[16].label, "T1");
        assert_eq!(b[31].label, "T456");
        assert_eq!(b.iter().filter(|g| g.is_node()).count(), 16);
        assert_eq!(b.iter().filter(|g| g.is_trope()).count(), 16);
    }

    #[test]
    fn gram_lemma_entries() {
        let c = ctx();
        assert_eq!(c.entry(g("E0"), g("T1")), 1);
        assert_eq!(c.entry(g("E0"), g("E0")), -2);
        assert_eq!(c.entry(g("E12"), g("T456")), 1);
        assert_eq!(c.entry(g("E12"), g("T3")), 0);
        assert_eq!(c.entry(g("E0"), g("T126")), 0);
        assert_eq!(c.entry(g("E12"), g("T126")), 1);
        assert_eq!(c.entry(g("E16"), g("T126")), 1);
        assert_eq!(c.entry(g("E13"), g("T126")), 0);
    }

    #[test]
    fn families_are_disjoint() {
        let c = ctx();
        for i in 0..RANK {
            for j in 0..RANK {
                if i != j && c.generator(i).kind == c.generator(j).kind {
                    assert_eq!(c.entry(i, j), 0);
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let c = ctx();
        let e0 = c.class("E0");
        assert_eq!(c.pair(&e0, &c.class("T3")), 1);
        assert_eq!(c.pair(&e0, &DivisorClass::zero()), 0);
        assert_eq!(c.self_int(&e0), -2);
    }

    #[test]
    fn equiv_distinguishes_nodes() {
        let c = ctx();
        assert!(!c.equiv(&c.class("E0"), &c.class("E12")));
        assert!(c.equiv(&c.class("E0"), &c.class("E0")));
    }

    #[test]
    fn coefficient_bound_is_enforced() {
        let big = DivisorClass::generator(0).checked_scale(COEFF_LIMIT).unwrap();
        assert!(big.checked_add(&DivisorClass::generator(0)).is_err());
        assert!(big.checked_scale(-1).is_ok());
        assert!(DivisorClass::from_terms([(3, COEFF_LIMIT), (3, 1)]).is_err());
        assert!(DivisorClass::from_coeffs(&[1; 31]).is_err());
    }

    #[test]
    fn extreme_pairing_fits() {
        let c = ctx();
        let big = DivisorClass::from_coeffs(&[COEFF_LIMIT; RANK]).unwrap();
        // 32 diagonal entries of -2 plus 2 * 96 node-trope incidences.
        assert_eq!(c.self_int(&big), 128 * COEFF_LIMIT * COEFF_LIMIT);
    }
}
