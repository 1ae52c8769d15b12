//! Randomized and exhaustive properties of the ring arithmetic, the
//! recognizer, the expansions and the families, checked against the oracle.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use phi3::eisenstein::{recognize, table_entry, EisensteinInt};
use phi3::families::{
    compute_x, eisenstein_product, expand_product, four_factor_family, four_factor_solution,
    quadratic_root_x, solve_x, three_factor_family, two_factor_family, FourFamily,
    SelectionVector, Solution,
};
use phi3::oracle::enumerate_solutions;
use phi3::primality::{is_prime_u128, phi3, phi3_u64};

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn selection(n: usize, mask: u32) -> SelectionVector {
    let s: String = (0..n).map(|i| if mask >> i & 1 == 1 { 't' } else { 'd' }).collect();
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn norm_is_multiplicative(m1 in -1_000_000_000i64..1_000_000_000, n1 in -1_000_000_000i64..1_000_000_000,
                              m2 in -1_000_000_000i64..1_000_000_000, n2 in -1_000_000_000i64..1_000_000_000) {
        let u = EisensteinInt::from_i64(m1, n1);
        let v = EisensteinInt::from_i64(m2, n2);
        prop_assert_eq!(u.mul(&v).norm(), u.norm() * v.norm());
        prop_assert_eq!(u.conj().norm(), u.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn recognizer_is_sound(m in -300i64..300, n in -300i64..300) {
        let u = EisensteinInt::from_i64(m, n);
        if let Some(r) = recognize(&u) {
            prop_assert_eq!(table_entry(&r.x, r.form_index), u.clone());
            prop_assert_eq!(u.norm(), phi3(&r.x));
        } else {
            // Every table entry has a coefficient or coefficient sum of ±1.
            prop_assert!(m.abs() != 1 && n.abs() != 1 && (m + n).abs() != 1);
        }
    }

    #[test]
    fn recognizer_is_complete_at_scale(digits in "[1-9][0-9]{0,60}", idx in 0usize..12) {
        let x: BigUint = digits.parse().unwrap();
        let r = recognize(&table_entry(&x, idx)).expect("table entries are recognized");
        prop_assert_eq!(&r.x, &x);
        if x > big(1) {
            prop_assert_eq!(r.form_index, idx);
        }
    }

    #[test]
    fn recognizer_is_conjugation_symmetric(m in -500i64..500, n in -500i64..500) {
        let u = EisensteinInt::from_i64(m, n);
        let a = recognize(&u).map(|r| r.x);
        let b = recognize(&u.conj()).map(|r| r.x);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn expansion_agrees_with_multiplication(n in 2usize..=4, mask in 0u32..16,
                                            vals in proptest::array::uniform4(0u64..1_000_000)) {
        let sel = selection(n, mask & ((1 << n) - 1));
        let (pm, pn) = expand_product(&sel).unwrap();
        let point = vals.map(BigInt::from);
        let args: Vec<BigUint> = vals[..n].iter().map(|&v| big(v)).collect();
        let prod = eisenstein_product(&args, &sel);
        prop_assert_eq!(pm.eval(&point), prod.m);
        prop_assert_eq!(pn.eval(&point), prod.n);
    }

    #[test]
    fn four_families_satisfy_the_identity(k in 1u8..=4, a in 1u64..400, b in 1u64..400, c in 1u64..400) {
        let k = FourFamily::from_index(k).unwrap();
        let (a, b, c) = (big(a), big(b), big(c));
        if let Some(d) = four_factor_family(k, &a, &b, &c) {
            let sol = four_factor_solution(k, &a, &b, &c).expect("family values give solutions");
            let mut args = vec![a, b, c, d];
            args.sort();
            prop_assert_eq!(sol.args(), args.as_slice());
            prop_assert!(Solution::from_identity(sol.x().clone(), args).is_ok());
        }
    }

    #[test]
    fn two_and_three_factor_families_satisfy_the_identity(a in 1u64..100_000, b in 1u64..100_000) {
        prop_assert!(two_factor_family(&big(a)).is_ok());
        let (lo, hi) = (a.min(b), a.max(b));
        if let Some(sol) = three_factor_family(&big(lo), &big(hi)) {
            prop_assert!(Solution::from_identity(sol.x().clone(), sol.args().to_vec()).is_ok());
        }
    }

    #[test]
    fn both_x_paths_agree(k in 1u8..=4, a in 1u64..200, b in 1u64..200, c in 1u64..200) {
        let k = FourFamily::from_index(k).unwrap();
        if let Some(d) = four_factor_family(k, &big(a), &big(b), &big(c)) {
            let args = vec![big(a), big(b), big(c), d];
            let q = quadratic_root_x(&args);
            prop_assert!(q.is_some());
            prop_assert_eq!(solve_x(&args).unwrap(), q.clone());
            for sel in SelectionVector::enumerate(4).unwrap() {
                if let Some(x) = compute_x(&args, &sel).unwrap() {
                    prop_assert_eq!(Some(x), q.clone());
                }
            }
        }
    }
}

#[test]
fn families_three_and_four_force_an_even_entry() {
    for k in [FourFamily::Three, FourFamily::Four] {
        for a in (1..=99u64).step_by(2) {
            for b in (1..=99u64).step_by(2) {
                for c in (1..=99u64).step_by(2) {
                    if let Some(d) = four_factor_family(k, &big(a), &big(b), &big(c)) {
                        assert!(!d.bit(0), "{k} at odd ({a},{b},{c}) gave odd d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn family_two_is_never_integral_on_two_mod_three() {
    let vals: Vec<u64> = (2..=200).filter(|v| v % 3 == 2).collect();
    for &a in &vals {
        for &b in vals.iter().filter(|&&b| b >= a) {
            for &c in vals.iter().filter(|&&c| c >= b) {
                assert_eq!(four_factor_family(FourFamily::Two, &big(a), &big(b), &big(c)), None);
            }
        }
    }
}

#[test]
fn phi3_congruences() {
    for x in 0..=200_000u64 {
        let v = phi3_u64(x);
        assert_eq!(v.is_multiple_of(3), x % 3 == 1, "x={x}");
        assert_ne!(v % 9, 0, "x={x}");
    }
}

/// Every family member with prime `Φ₃` values and `x` in range is found by
/// the oracle, and (in the acceptance harness) every oracle solution is a
/// family member.
#[test]
fn oracle_contains_every_family_member() {
    const X_MAX: u64 = 200_000;
    let oracle: BTreeSet<Solution> = enumerate_solutions(X_MAX).unwrap().into_iter().collect();
    let prime_phi3 = |v: &[u64]| v.iter().all(|&a| is_prime_u128(phi3_u64(a)));
    let check = |sol: Solution| {
        if sol.x() <= &big(X_MAX) {
            assert!(oracle.contains(&sol), "oracle misses x={} args={{{}}}", sol.x(), sol.args_string());
        }
    };

    let mut members = 0;
    for a in 1..=X_MAX {
        if prime_phi3(&[a, a + 1]) && (a + 1) * (a + 1) <= X_MAX {
            check(two_factor_family(&big(a)).unwrap());
            members += 1;
        }
    }
    for a in 1..=600u64 {
        for b in a..=600 {
            if let Some(sol) = three_factor_family(&big(a), &big(b)) {
                let args: Vec<u64> = sol.args().iter().map(|v| v.try_into().unwrap()).collect();
                if prime_phi3(&args) {
                    check(sol);
                    members += 1;
                }
            }
        }
    }
    for k in FourFamily::ALL {
        for a in 1..=60u64 {
            for b in 1..=60u64 {
                for c in 1..=60u64 {
                    if let Some(sol) = four_factor_solution(k, &big(a), &big(b), &big(c)) {
                        let args: Vec<u64> = sol.args().iter().map(|v| v.try_into().unwrap()).collect();
                        if prime_phi3(&args) {
                            check(sol);
                            members += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(members > 20, "only {members} members checked");
}
