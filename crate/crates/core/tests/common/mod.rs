//! Independent reference data and brute-force routines for the integration
//! tests. Nothing here calls into the library's lattice code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

pub const LABELS: [&str; 32] = [
    "E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24", "E25", "E26", "E34", "E35", "E36",
    "E45", "E46", "E56", "T1", "T2", "T3", "T4", "T5", "T6", "T126", "T136", "T146", "T156",
    "T236", "T246", "T256", "T346", "T356", "T456",
];

/// For each node, the six tropes it meets.
pub const INCIDENCE: [(&str, [&str; 6]); 16] = [
    ("E0", ["T1", "T2", "T3", "T4", "T5", "T6"]),
    ("E12", ["T1", "T2", "T126", "T346", "T356", "T456"]),
    ("E13", ["T1", "T3", "T136", "T246", "T256", "T456"]),
    ("E14", ["T1", "T4", "T146", "T236", "T256", "T356"]),
    ("E15", ["T1", "T5", "T156", "T236", "T246", "T346"]),
    ("E16", ["T1", "T6", "T126", "T136", "T146", "T156"]),
    ("E23", ["T2", "T3", "T146", "T156", "T236", "T456"]),
    ("E24", ["T2", "T4", "T136", "T156", "T246", "T356"]),
    ("E25", ["T2", "T5", "T136", "T146", "T256", "T346"]),
    ("E26", ["T2", "T6", "T126", "T236", "T246", "T256"]),
    ("E34", ["T3", "T4", "T126", "T156", "T256", "T346"]),
    ("E35", ["T3", "T5", "T126", "T146", "T246", "T356"]),
    ("E36", ["T3", "T6", "T136", "T236", "T346", "T356"]),
    ("E45", ["T4", "T5", "T126", "T136", "T236", "T456"]),
    ("E46", ["T4", "T6", "T146", "T246", "T346", "T456"]),
    ("E56", ["T5", "T6", "T156", "T256", "T356", "T456"]),
];

pub const THETA: [(&str, &str); 16] = [
    ("E0", "T456"), ("E12", "T3"), ("E13", "T2"), ("E14", "T156"),
    ("E15", "T146"), ("E16", "T236"), ("E23", "T1"), ("E24", "T256"),
    ("E25", "T246"), ("E26", "T136"), ("E34", "T356"), ("E35", "T346"),
    ("E36", "T126"), ("E45", "T6"), ("E46", "T5"), ("E56", "T4"),
];

pub fn idx(label: &str) -> usize {
    LABELS.iter().position(|&l| l == label).unwrap_or_else(|| panic!("{label}"))
}

pub fn oracle_gram() -> [[i64; 32]; 32] {
    let mut g = [[0; 32]; 32];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (node, tropes) in INCIDENCE {
        for t in tropes {
            g[idx(node)][idx(t)] = 1;
            g[idx(t)][idx(node)] = 1;
        }
    }
    g
}

pub fn oracle_perm() -> [usize; 32] {
    let mut p = [0; 32];
    for (n, t) in THETA {
        p[idx(n)] = idx(t);
        p[idx(t)] = idx(n);
    }
    p
}

pub fn vec_of(terms: &[(&str, i64)]) -> [i64; 32] {
    let mut v = [0; 32];
    for &(l, c) in terms {
        v[idx(l)] += c;
    }
    v
}

pub fn oracle_pair(a: &[i64; 32], b: &[i64; 32]) -> i64 {
    let g = oracle_gram();
    let mut s = 0;
    for i in 0..32 {
        for j in 0..32 {
            s += a[i] * g[i][j] * b[j];
        }
    }
    s
}

pub fn oracle_theta(v: &[i64; 32]) -> [i64; 32] {
    let p = oracle_perm();
    let mut out = [0; 32];
    for i in 0..32 {
        out[p[i]] = v[i];
    }
    out
}

pub fn oracle_invariant(v: &[i64; 32]) -> bool {
    let g = oracle_gram();
    let t = oracle_theta(v);
    (0..32).all(|i| (0..32).map(|j| g[i][j] * (v[j] - t[j])).sum::<i64>() == 0)
}

/// Rank over the rationals by plain Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&r| m[r][c] != BigRational::from_integer(0.into())) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..nr {
            if r != rank {
                let f = m[r][c].clone() / pivot.clone();
                for k in 0..nc {
                    let sub = f.clone() * m[rank][k].clone();
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether some ordering of the curves of `v` (with multiplicity) pairs each
/// curve non-positively with the sum of those before it. Tries every distinct
/// permutation; only for tiny divisors.
pub fn brute_peelable(v: &[i64; 32]) -> bool {
    let g = oracle_gram();
    let mut remaining = *v;
    let mut partial = [0i64; 32];
    fn go(g: &[[i64; 32]; 32], remaining: &mut [i64; 32], partial: &mut [i64; 32], first: bool) -> bool {
        if remaining.iter().all(|&c| c == 0) {
            return true;
        }
        for c in 0..32 {
            if remaining[c] == 0 {
                continue;
            }
            let dot: i64 = (0..32).map(|j| g[c][j] * partial[j]).sum();
            if !first && dot > 0 {
                continue;
            }
            remaining[c] -= 1;
            partial[c] += 1;
            let ok = go(g, remaining, partial, false);
            remaining[c] += 1;
            partial[c] -= 1;
            if ok {
                return true;
            }
        }
        false
    }
    go(&g, &mut remaining, &mut partial, true)
}

/// Multisets of size `n` drawn from `items`, as coefficient vectors.
pub fn multisets(items: &[usize], n: usize) -> Vec<[i64; 32]> {
    fn rec(items: &[usize], n: usize, start: usize, cur: &mut [i64; 32], out: &mut Vec<[i64; 32]>) {
        if n == 0 {
            out.push(*cur);
            return;
        }
        for k in start..items.len() {
            cur[items[k]] += 1;
            rec(items, n - 1, k, cur, out);
            cur[items[k]] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(items, n, 0, &mut [0; 32], &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
