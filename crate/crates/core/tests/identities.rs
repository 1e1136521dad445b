use num_traits::{One, Zero};
use proptest::prelude::*;
use scatalan::bisnomial::{
    absorption_check, bisnomial_at, bisnomial_row, expand_by_multiplication, rows,
};
use scatalan::Natural;

fn factorial(n: u64) -> Natural {
    (1..=n).fold(Natural::one(), |acc, i| acc * i)
}

#[test]
fn symmetry_up_to_thirty() {
    for s in 1..=4u32 {
        for row in rows(s).unwrap().take(31) {
            let c = row.coeffs();
            assert!(c.iter().eq(c.iter().rev()), "s={s} n={}", row.n());
            assert!(c.iter().all(|v| !v.is_zero()));
            assert!(c[0].is_one() && c[c.len() - 1].is_one());
        }
    }
}

#[test]
fn recurrence_matches_polynomial_powering() {
    for s in 1..=4u32 {
        for (n, row) in rows(s).unwrap().take(16).enumerate() {
            assert_eq!(
                row.coeffs(),
                expand_by_multiplication(s, n as u32).unwrap(),
                "s={s} n={n}"
            );
        }
    }
}

#[test]
fn absorption_up_to_twenty() {
    for s in 1..=4u32 {
        for n in 1..=20u32 {
            for k in 0..=i64::from(s * n) {
                let (lhs, rhs) = absorption_check(s, n, k).unwrap();
                assert_eq!(lhs, rhs, "s={s} n={n} k={k}");
            }
        }
    }
}

#[test]
fn row_sums_are_powers() {
    for s in 1..=4u32 {
        for row in rows(s).unwrap().take(31) {
            let sum: Natural = row.coeffs().iter().sum();
            assert_eq!(sum, Natural::from(s + 1).pow(row.n()));
        }
    }
}

#[test]
fn s_one_is_binomial() {
    for n in 0..=20u64 {
        for k in 0..=n {
            let expected = factorial(n) / (factorial(k) * factorial(n - k));
            assert_eq!(bisnomial_at(1, n as u32, k as i64).unwrap(), expected);
        }
    }
}

#[test]
fn entries_outgrow_machine_words() {
    let row = bisnomial_row(3, 40).unwrap();
    assert!(row.get(60) > Natural::from(u64::MAX));
}

proptest! {
    #[test]
    fn symmetric_entries(s in 1u32..=4, n in 0u32..=30, k in -5i64..130) {
        let mirrored = i64::from(s * n) - k;
        prop_assert_eq!(bisnomial_at(s, n, k).unwrap(), bisnomial_at(s, n, mirrored).unwrap());
    }
}
