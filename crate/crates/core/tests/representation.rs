//! Representation-theoretic data across liedata, kostant, branching,
//! plancherel and cfunc: worked values and invariants.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Signed;
use proptest::prelude::*;

use hypertorsion::branching;
use hypertorsion::cfunc;
use hypertorsion::kostant;
use hypertorsion::liedata::{self, Parity};
use hypertorsion::plancherel;
use hypertorsion::rational::{q, qr};
use hypertorsion::{RankData, RatPoly, Role, Weight, Q};

fn odd(n: usize) -> RankData {
    RankData::odd(n).unwrap()
}

fn w(role: Role, s: &str) -> Weight {
    Weight::parse(role, s).unwrap()
}

#[test]
fn rho_values() {
    assert_eq!(liedata::rho_values(2, Parity::Odd).unwrap(), vec![q(2), q(1), q(0)]);
    assert_eq!(liedata::rho_values(1, Parity::Odd).unwrap(), vec![q(1), q(0)]);
    assert_eq!(liedata::rho_values(1, Parity::Even).unwrap(), vec![qr(3, 2), qr(1, 2)]);
}

#[test]
fn weight_validation() {
    let r = odd(2);
    assert!(liedata::validate_weight(&w(Role::G, "3,2,1"), &r).unwrap());
    assert!(!liedata::validate_weight(&w(Role::G, "1,2,0"), &r).unwrap());
    assert!(liedata::validate_weight(&w(Role::M, "1/2,-1/2"), &r).unwrap());
}

#[test]
fn w0_and_theta() {
    let r = odd(1);
    assert_eq!(liedata::w0_action(&w(Role::M, "2"), &r).unwrap(), w(Role::M, "-2"));
    assert_eq!(liedata::w0_action(&w(Role::M, "0"), &r).unwrap(), w(Role::M, "0"));
    let r2 = odd(2);
    assert_eq!(liedata::w0_action(&w(Role::M, "2,1"), &r2).unwrap(), w(Role::M, "2,-1"));
    let re = RankData::even(2).unwrap();
    assert_eq!(liedata::w0_action(&w(Role::M, "2,1"), &re).unwrap(), w(Role::M, "2,1"));
    assert_eq!(liedata::theta_twist(&w(Role::G, "3,2,1"), &r2).unwrap(), w(Role::G, "3,2,-1"));
    assert_eq!(liedata::theta_twist(&w(Role::G, "3,2,0"), &r2).unwrap(), w(Role::G, "3,2,0"));
    let t = liedata::tau_m(&[q(2), q(1)], 3).unwrap();
    assert_eq!(t.entries, vec![q(5), q(4)]);
    assert_ne!(liedata::theta_twist(&t, &r).unwrap(), t);
}

#[test]
fn dimensions() {
    let r1 = odd(1);
    let r2 = odd(2);
    assert_eq!(liedata::dim_m(&w(Role::M, "0,0"), &r2).unwrap(), 1);
    assert_eq!(liedata::dim_m(&w(Role::M, "1,0"), &r2).unwrap(), 4);
    assert_eq!(liedata::dim_m(&w(Role::M, "1,1"), &r2).unwrap(), 3);
    assert_eq!(liedata::dim_k(&w(Role::K, "0,0"), &r2).unwrap(), 1);
    assert_eq!(liedata::dim_k(&w(Role::K, "1"), &r1).unwrap(), 3);
    assert_eq!(liedata::dim_k(&w(Role::K, "1/2"), &r1).unwrap(), 2);
    assert_eq!(liedata::dim_g(&w(Role::G, "0,0"), &r1).unwrap(), 1);
    assert_eq!(liedata::dim_g(&w(Role::G, "1,0"), &r1).unwrap(), 4);
    assert_eq!(liedata::dim_g(&w(Role::G, "1,1"), &r1).unwrap(), 3);
}

#[test]
fn dim_tau_m_polynomial_interpolates() {
    let r = odd(1);
    let p = liedata::dim_tau_m_polynomial(&[q(1), q(1)], &r).unwrap();
    assert_eq!(p.degree(), Some(1));
    assert!(p.leading() > q(0));
    for m in 0..=20 {
        let t = liedata::tau_m(&[q(1), q(1)], m).unwrap();
        assert_eq!(p.eval(&q(m as i64)), q(liedata::dim_g(&t, &r).unwrap() as i64));
    }
}

#[test]
fn casimirs() {
    let r1 = odd(1);
    let r2 = odd(2);
    assert_eq!(liedata::casimir_m(&w(Role::M, "1"), &r1).unwrap(), q(0));
    assert_eq!(liedata::casimir_m(&w(Role::M, "0"), &r1).unwrap(), q(-1));
    assert_eq!(liedata::casimir_m(&w(Role::M, "0,0"), &r2).unwrap(), q(-4));
    assert_eq!(liedata::casimir_g(&w(Role::G, "0,0,0"), &r2).unwrap(), q(0));
    assert_eq!(liedata::casimir_g(&w(Role::G, "2,1"), &r1).unwrap(), q(9));
    // |(3,2,1)|² − |ρ|² = 14 − 5
    assert_eq!(liedata::casimir_g(&w(Role::G, "1,1,1"), &r2).unwrap(), q(9));
    assert_eq!(liedata::casimir_principal(&w(Role::M, "1"), 0.0, &r1).unwrap(), 0.0);
    assert_eq!(liedata::casimir_principal(&w(Role::M, "0"), 1.0, &r1).unwrap(), -2.0);
}

fn kostant_triples(tau: &Weight, r: &RankData) -> Vec<(usize, Weight, Q)> {
    kostant::kostant_data(tau, r).unwrap().into_iter().map(|d| (d.k, d.sigma, d.lambda)).collect()
}

#[test]
fn kostant_values() {
    let r1 = odd(1);
    assert_eq!(
        kostant_triples(&w(Role::G, "2,1"), &r1),
        vec![(0, w(Role::M, "1"), q(3)), (1, w(Role::M, "3"), q(1))]
    );
    assert_eq!(
        kostant_triples(&w(Role::G, "0,0"), &r1),
        vec![(0, w(Role::M, "0"), q(1)), (1, w(Role::M, "1"), q(0))]
    );
    let r2 = odd(2);
    assert_eq!(
        kostant_triples(&w(Role::G, "1,1,1"), &r2),
        vec![(0, w(Role::M, "1,1"), q(3)), (1, w(Role::M, "2,1"), q(2)), (2, w(Role::M, "2,2"), q(1))]
    );
    let full = kostant::full_decomposition(&w(Role::G, "0,0"), &r1).unwrap();
    let mut levels: Vec<usize> = full.iter().map(|e| e.level).collect();
    levels.sort();
    assert_eq!(levels, vec![0, 1, 1, 2]);
    assert!(kostant::casimir_identity_check(&w(Role::G, "2,1"), &r1).unwrap());
    assert_eq!(kostant::alternating_dim_sum(&w(Role::G, "1,1,1"), &r2).unwrap(), 0);
}

#[test]
fn branching_values() {
    let r1 = odd(1);
    let ms = branching::branch_k_to_m(&w(Role::K, "1"), &r1).unwrap();
    let mut got: Vec<Q> = ms.iter().map(|s| s.entries[0].clone()).collect();
    got.sort();
    assert_eq!(got, vec![q(-1), q(0), q(1)]);
    assert_eq!(branching::mult_k_m(&w(Role::K, "1"), &w(Role::M, "1"), &r1).unwrap(), 1);
    assert_eq!(branching::mult_k_m(&w(Role::K, "1"), &w(Role::M, "2"), &r1).unwrap(), 0);

    let m2 = branching::m_nu(&w(Role::M, "2"), &r1).unwrap();
    let want: BTreeMap<Weight, i64> = [(w(Role::K, "2"), 1), (w(Role::K, "1"), -1)].into_iter().collect();
    assert_eq!(m2, want);
    let t0 = branching::nu_of_sigma(&w(Role::M, "0"), &r1).unwrap();
    assert_eq!(t0.entries, [(w(Role::K, "0"), 1)].into_iter().collect());
    // at the fixed point σ = w0σ the multiplicities double
    let m0 = branching::m_nu(&w(Role::M, "0"), &r1).unwrap();
    assert_eq!(m0, [(w(Role::K, "0"), 2)].into_iter().collect());
    assert!(branching::verify_iota(&w(Role::M, "2"), &r1).unwrap());
    assert!(branching::verify_iota(&w(Role::M, "0"), &r1).unwrap());

    let (l, r) = branching::alternating_p_identity(&w(Role::G, "1,1"), &w(Role::K, "2"), &r1).unwrap();
    assert_eq!(l, r);
    assert_eq!(branching::alternating_p_identity(&w(Role::G, "1,1"), &w(Role::K, "7"), &r1).unwrap(), (0, 0));
    assert!(branching::max_casimir_gap(&w(Role::G, "1,1"), &r1).unwrap() >= q(1));
    assert!(branching::max_casimir_gap(&w(Role::G, "1,0"), &r1).unwrap() >= q(0));
}

#[test]
fn plancherel_values() {
    assert_eq!(plancherel::pi_polynomial(&[q(1), q(0)]), q(1));
    assert_eq!(plancherel::pi_polynomial(&[]), q(1));
    assert_eq!(plancherel::pi_polynomial(&[q(2), q(1), q(0)]), q(12));
    let r1 = odd(1);
    assert_eq!(plancherel::p_j(&w(Role::M, "3"), 2, &r1).unwrap(), RatPoly::one());
    assert_eq!(plancherel::q_from_poly(&RatPoly::one(), &q(2)).unwrap(), RatPoly::zero());
    let l = qr(5, 2);
    assert_eq!(
        plancherel::q_from_poly(&RatPoly::from_ints(&[0, 0, 1]), &l).unwrap(),
        RatPoly::constant(q(2) * &l)
    );
}

#[test]
fn omega_reconstruction_at_fixed_points() {
    for (n, s) in [(1, "2"), (2, "3,1"), (2, "2,-2"), (3, "4,2,1")] {
        let r = odd(n);
        let sigma = w(Role::M, s);
        let dec = plancherel::omega_decomposition(&sigma, &r).unwrap();
        let dec_w0 = plancherel::omega_decomposition(&liedata::w0_action(&sigma, &r).unwrap(), &r).unwrap();
        for lambda in [0.3, 1.7] {
            let direct = plancherel::omega_direct(&sigma, lambda, &r).unwrap();
            assert!((dec.eval(lambda) - direct).abs() <= 1e-10 * direct.abs(), "{s} at {lambda}");
            assert!((dec_w0.eval(lambda) - direct).abs() <= 1e-10 * direct.abs());
        }
    }
}

#[test]
fn omega_rejects_self_conjugate() {
    assert!(plancherel::omega_decomposition(&w(Role::M, "1,0"), &odd(2)).is_err());
}

#[test]
fn c_function_n1_pole_list() {
    let r1 = odd(1);
    let pl = cfunc::c_log_derivative(&w(Role::M, "0"), &w(Role::K, "1"), &r1).unwrap();
    let z = Complex64::new(0.3, 0.7);
    let i = Complex64::i();
    let by_hand = i / (i * z - 1.0) - i / (i * z) - i / (i * z + 1.0);
    assert!((pl.eval(z) - by_hand).norm() < 1e-12);
    let num = cfunc::c_log_derivative_numeric(&w(Role::M, "0"), &w(Role::K, "1"), z, &r1).unwrap();
    assert!((num - by_hand).norm() < 1e-8);
}

#[test]
fn truncation_agrees_with_untruncated_merge() {
    for n in 1..=2 {
        let r = odd(n);
        let base = vec![q(1); n + 1];
        for m in 1..=4 {
            for k in 0..n {
                for s in cfunc::support_sigmas(&base, m, k, &r).unwrap() {
                    assert_eq!(
                        cfunc::f_km(&s, &base, m, k, &r).unwrap(),
                        cfunc::f_km_untruncated(&s, &base, m, k, &r).unwrap(),
                        "n={n} m={m} k={k} σ={}",
                        s.key()
                    );
                }
            }
        }
    }
}

fn dominant_d(len: usize) -> impl Strategy<Value = Vec<Q>> {
    (prop::collection::vec(0i64..6, len), any::<bool>(), any::<bool>()).prop_map(|(mut v, half, neg)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut e: Vec<Q> = v.into_iter().map(|x| if half { q(x) + qr(1, 2) } else { q(x) }).collect();
        if neg {
            let last = e.len() - 1;
            e[last] = -e[last].clone();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dims_and_casimirs_are_w0_invariant((n, e) in (1usize..=4).prop_flat_map(|n| (Just(n), dominant_d(n)))) {
        let r = odd(n);
        let s = Weight::new(Role::M, e);
        let s0 = liedata::w0_action(&s, &r).unwrap();
        prop_assert_eq!(liedata::dim_m(&s, &r).unwrap(), liedata::dim_m(&s0, &r).unwrap());
        prop_assert_eq!(liedata::casimir_m(&s, &r).unwrap(), liedata::casimir_m(&s0, &r).unwrap());
        prop_assert!(liedata::dim_m(&s, &r).unwrap() >= 1);
    }

    #[test]
    fn kostant_lambdas_strictly_decrease((n, e) in (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(0i64..6, n + 1)))) {
        let mut e = e;
        e.sort_unstable_by(|a, b| b.cmp(a));
        let r = odd(n);
        let tau = Weight::from_ints(Role::G, &e);
        let data = kostant::kostant_data(&tau, &r).unwrap();
        for pair in data.windows(2) {
            prop_assert!(pair[0].lambda > pair[1].lambda);
        }
        if e[n] >= 1 {
            for d in &data {
                prop_assert_ne!(&d.sigma, &liedata::w0_action(&d.sigma, &r).unwrap());
            }
        }
        prop_assert!(kostant::casimir_identity_check(&tau, &r).unwrap());
    }

    #[test]
    fn plancherel_even_and_w0_invariant((n, e) in (1usize..=3).prop_flat_map(|n| (Just(n), dominant_d(n)))) {
        let r = odd(n);
        let s = Weight::new(Role::M, e);
        let p = plancherel::plancherel_polynomial(&s, &r).unwrap();
        prop_assert!(p.is_even());
        prop_assert_eq!(p.degree(), Some(2 * n));
        let p0 = plancherel::plancherel_polynomial(&liedata::w0_action(&s, &r).unwrap(), &r).unwrap();
        prop_assert_eq!(p, p0);
    }

    #[test]
    fn leading_nu_of_sigma_key_contains_sigma((n, e) in (1usize..=3).prop_flat_map(|n| (Just(n), dominant_d(n)))) {
        // lower keys need not contain σ: ν(1,1) ∋ +(0,0) at n = 2
        let r = odd(n);
        let s = Weight::new(Role::M, e);
        let s0 = liedata::w0_action(&s, &r).unwrap();
        let mut lead = s.entries.clone();
        let last = lead.len() - 1;
        lead[last] = lead[last].abs();
        let lead = Weight::new(Role::K, lead);
        prop_assert_eq!(branching::m_nu(&s, &r).unwrap().get(&lead).copied().map(|c| c > 0), Some(true));
        prop_assert_eq!(branching::mult_k_m(&lead, &s, &r).unwrap() + branching::mult_k_m(&lead, &s0, &r).unwrap() >= 1, true);
        prop_assert!(branching::verify_iota(&s, &r).unwrap());
    }
}
