mod common;

use common::*;
use kummer_bn::*;
use proptest::prelude::*;

fn ctx() -> &'static LatticeContext {
    LatticeContext::global()
}

fn class(v: &[i64; 32]) -> DivisorClass {
    DivisorClass::from_coeffs(v).unwrap()
}

#[test]
fn gram_matches_reference_table() {
    assert_eq!(ctx().gram(), &oracle_gram());
    for (i, l) in LABELS.iter().enumerate() {
        assert_eq!(ctx().generator(i).label, *l);
    }
}

#[test]
fn theta_matches_reference_table() {
    assert_eq!(ctx().theta_perm(), &oracle_perm());
}

#[test]
fn rank_agrees_with_rational_elimination() {
    let rows: Vec<Vec<i64>> = oracle_gram().iter().map(|r| r.to_vec()).collect();
    assert_eq!(rational_rank(&rows), 17);
    assert_eq!(ctx().gram_rank(), 17);
    assert_eq!(linalg::integer_rank(&rows).unwrap(), rational_rank(&rows));

    // Conjugating by theta leaves the rank alone.
    let p = oracle_perm();
    let conj: Vec<Vec<i64>> = (0..32).map(|i| (0..32).map(|j| rows[p[i]][p[j]]).collect()).collect();
    assert_eq!(linalg::integer_rank(&conj).unwrap(), 17);

    // Node block alone is -2 * identity.
    let nodes: Vec<Vec<i64>> = rows[..16].iter().map(|r| r[..16].to_vec()).collect();
    assert_eq!(linalg::integer_rank(&nodes).unwrap(), 16);
}

#[test]
fn nine_entry_pairing() {
    let a = vec_of(&[("E0", 1), ("E12", 1), ("E13", 1)]);
    let b = vec_of(&[("T456", 1), ("T3", 1), ("T2", 1)]);
    let expected = oracle_pair(&a, &b);
    assert_eq!(expected, 6);
    assert_eq!(ctx().pair(&class(&a), &class(&b)), expected);
}

#[test]
fn self_intersections() {
    let c = ctx();
    assert_eq!(c.self_int(&parse_divisor("E0 + E12 + E13").unwrap()), -6);
    // -2 (1^2 + 2^2), not -2 * 3.
    assert_eq!(c.self_int(&parse_divisor("E0 + 2E13").unwrap()), -10);
}

#[test]
fn relation_lattice_has_rank_15() {
    let rows: Vec<Vec<i64>> = oracle_gram().iter().map(|r| r.to_vec()).collect();
    assert_eq!(32 - rational_rank(&rows), 15);
}

const LHS: &str = "E23 + E24 + E25 + E26 + 2T2";
const RHS: &str = "E13 + E14 + E15 + E16 + 2T1";

#[test]
fn distinct_vectors_can_be_equivalent() {
    let (a, b) = (parse_divisor(LHS).unwrap(), parse_divisor(RHS).unwrap());
    assert_ne!(a, b);
    assert!(ctx().equiv(&a, &b));
    let diff = a.checked_sub(&b).unwrap();
    assert!(oracle_gram().iter().all(|row| (0..32).map(|j| row[j] * diff.coeff(j)).sum::<i64>() == 0));
    assert_eq!(ctx().self_int(&a), ctx().self_int(&b));
}

#[test]
fn peeling_search_matches_exhaustive_orders() {
    // Every divisor with support of size <= 3 drawn from a mixed pool and
    // coefficients <= 2: the DFS certifies exactly when some order works.
    let pool: Vec<usize> = ["E0", "E12", "E14", "E25", "T1", "T3", "T4", "T456"].iter().map(|l| idx(l)).collect();
    let mut checked = 0;
    for a in 0..pool.len() {
        for b in a..pool.len() {
            for c in b..pool.len() {
                let mut v = [0i64; 32];
                for &k in &[a, b, c] {
                    v[pool[k]] += 1;
                }
                for extra in [0, 1] {
                    let mut w = v;
                    w[pool[a]] += extra;
                    let d = class(&w);
                    let cert = h0_one_certificate(ctx(), &d).unwrap();
                    assert_eq!(cert.is_certified(), brute_peelable(&w), "{d}");
                    if let H0Certificate::Certified { peeling_order } = cert {
                        assert!(verify_peeling(ctx(), &d, &peeling_order));
                        assert_eq!(peeling_order.len() as i64, d.degree());
                    }
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 240);
}

#[test]
fn subdivisor_sweep_matches_oracle_on_mixed_divisors() {
    let cases = ["2E12 + T3", "E12 + E14 + T3", "E14 + E25 + T3", "E0 + T456 + E12", "E23 + T1 + T2 + E13"];
    for s in cases {
        let d = parse_effective(s).unwrap();
        let mut first = None;
        for sub in subdivisors(&d, DEFAULT_BUDGET).unwrap() {
            if oracle_invariant(sub.coeffs()) {
                first = Some(sub);
                break;
            }
        }
        let got = no_invariant_subdivisor(ctx(), &d, DEFAULT_BUDGET).unwrap();
        assert_eq!(got.witness().copied(), first, "{s}");
    }
}

fn small_vec() -> impl Strategy<Value = [i64; 32]> {
    proptest::array::uniform32(-4i64..=4)
}

fn effective_vec() -> impl Strategy<Value = [i64; 32]> {
    proptest::collection::vec((0usize..32, 1i64..=2), 1..=4).prop_map(|terms| {
        let mut v = [0; 32];
        for (i, c) in terms {
            v[i] += c;
        }
        v
    })
}

proptest! {
    #[test]
    fn pairing_is_symmetric_bilinear_and_even(a in small_vec(), b in small_vec(), c in small_vec()) {
        let cx = ctx();
        let (da, db, dc) = (class(&a), class(&b), class(&c));
        prop_assert_eq!(cx.pair(&da, &db), cx.pair(&db, &da));
        prop_assert_eq!(cx.pair(&da, &db), oracle_pair(&a, &b));
        let sum = da.checked_add(&db).unwrap();
        prop_assert_eq!(cx.pair(&sum, &dc), cx.pair(&da, &dc) + cx.pair(&db, &dc));
        prop_assert_eq!(cx.self_int(&da).rem_euclid(2), 0);
    }

    #[test]
    fn theta_is_an_involutive_isometry(a in small_vec(), b in small_vec()) {
        let cx = ctx();
        let (da, db) = (class(&a), class(&b));
        prop_assert_eq!(cx.theta(&cx.theta(&da)), da);
        prop_assert_eq!(cx.pair(&cx.theta(&da), &cx.theta(&db)), cx.pair(&da, &db));
        prop_assert_eq!(*cx.theta(&da).coeffs(), oracle_theta(&a));
    }

    #[test]
    fn equivalence_is_kernel_membership(a in small_vec(), x in small_vec()) {
        let cx = ctx();
        let da = class(&a);
        // Adding a Gram-kernel vector keeps the class.
        let rel = parse_divisor(LHS).unwrap().checked_sub(&parse_divisor(RHS).unwrap()).unwrap();
        prop_assert!(cx.equiv(&da, &da.checked_add(&rel).unwrap()));
        prop_assert!(cx.equiv(&da, &da));
        let b = da.checked_add(&class(&x)).unwrap();
        let eq = cx.equiv(&da, &b);
        if eq {
            prop_assert_eq!(cx.pair(&da, &class(&x)), cx.pair(&b, &class(&x)));
        }
        prop_assert_eq!(cx.equiv(&da, &b), cx.equiv(&cx.theta(&da), &cx.theta(&b)));
        prop_assert_eq!(cx.is_theta_invariant(&da), oracle_invariant(&a));
    }

    #[test]
    fn certificates_reverify(v in effective_vec()) {
        let d = class(&v);
        if let H0Certificate::Certified { peeling_order } = h0_one_certificate(ctx(), &d).unwrap() {
            let mut partial = [0i64; 32];
            for (k, &c) in peeling_order.iter().enumerate() {
                let mut unit = [0i64; 32];
                unit[c] = 1;
                if k > 0 {
                    prop_assert!(oracle_pair(&unit, &partial) <= 0);
                }
                partial[c] += 1;
            }
            prop_assert_eq!(partial, v);
        }
    }

    #[test]
    fn no_invariant_subdivisor_is_monotone(v in effective_vec()) {
        let d = class(&v);
        if no_invariant_subdivisor(ctx(), &d, DEFAULT_BUDGET).unwrap().holds() {
            for sub in subdivisors(&d, DEFAULT_BUDGET).unwrap() {
                prop_assert!(no_invariant_subdivisor(ctx(), &sub, DEFAULT_BUDGET).unwrap().holds());
            }
        }
    }

    #[test]
    fn failure_witness_is_valid(v in effective_vec()) {
        let d = class(&v);
        if let SubdivisorVerdict::Fails { witness } = no_invariant_subdivisor(ctx(), &d, DEFAULT_BUDGET).unwrap() {
            prop_assert!(!witness.is_zero());
            prop_assert!(DivisorClass::zero().le(&witness) && witness.le(&d));
            prop_assert!(oracle_invariant(witness.coeffs()));
        }
    }

    #[test]
    fn gap_check_matches_condition_three(v in effective_vec()) {
        let d = class(&v);
        let inv = bundle_invariants(ctx(), &d).unwrap();
        prop_assert_eq!(theorem_gap_check(&inv), ctx().self_int(&d) < -4);
        let report = theorem_check(ctx(), &d).unwrap();
        prop_assert_eq!(report.cond_iii, theorem_gap_check(&inv));
        if report.passed() {
            prop_assert!(inv.dim_m_lower > inv.dim_p_upper);
        }
    }
}
