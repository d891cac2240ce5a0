use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;
use qtrinomial_core::qcomb::{qtrinomial_t_explicit, qtrinomial_t_via_round};
use qtrinomial_core::{
    qbinomial, qbinomial_vector, qtrinomial2, qtrinomial_t, refined_t, refined_t_dual_check, Error, QExponent,
    QPoly, RefinedArgs,
};

fn p(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn half(n: i64) -> QExponent {
    QExponent::new(n, 2)
}

/// `[n, k]` from the q-Pascal rule `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
fn pascal(n: i64, k: i64) -> QPoly {
    if k < 0 || k > n {
        return QPoly::zero();
    }
    if k == 0 || k == n {
        return QPoly::one();
    }
    pascal(n - 1, k - 1) + pascal(n - 1, k).shift(&QExponent::from_int(k))
}

/// Coefficient of `x^{L+a}` in `(1 + x + x^2)^L`.
fn trinomial_coefficient(l: i64, a: i64) -> BigInt {
    let mut c = vec![BigInt::from(1)];
    for _ in 0..l {
        let mut d = vec![BigInt::from(0); c.len() + 2];
        for (i, x) in c.iter().enumerate() {
            for j in 0..3 {
                d[i + j] += x;
            }
        }
        c = d;
    }
    c.get((l + a) as usize).cloned().unwrap_or_default()
}

#[test]
fn gaussian_polynomials_match_pascal() {
    for n in 0..=12 {
        for k in -1..=n + 1 {
            assert_eq!(qbinomial(n, k), pascal(n, k), "[{n},{k}]");
            assert_eq!(qbinomial(n, k).eval_q1(), if (0..=n).contains(&k) { binomial(BigInt::from(n), BigInt::from(k)) } else { BigInt::from(0) });
        }
    }
}

#[test]
fn vector_binomial() {
    assert_eq!(qbinomial_vector(&[1, 2], &[1, 0]).unwrap(), qbinomial(2, 1));
    assert!(matches!(qbinomial_vector(&[1], &[1, 2]), Err(Error::DimensionMismatch { expected: 1, got: 2 })));
}

#[test]
fn q_trinomials() {
    assert_eq!(qtrinomial_t(4, 2), p("1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"));
    assert_eq!(qtrinomial_t(4, 2).eval_q1(), BigInt::from(10));
    assert_eq!(qtrinomial_t(5, 2), qtrinomial_t(5, -2));
    assert_eq!(qtrinomial2(4, 3), qtrinomial2(4, -3));
    assert!(qtrinomial_t(3, 5).is_zero());
    for l in 0..=10 {
        for a in -l..=l {
            assert_eq!(qtrinomial_t_explicit(l, a), qtrinomial_t_via_round(l, a), "T({l},{a})");
            assert_eq!(qtrinomial_t(l, a).eval_q1(), trinomial_coefficient(l, a));
            assert_eq!(qtrinomial2(l, a).eval_q1(), trinomial_coefficient(l, a));
        }
    }
}

#[test]
fn refined_examples() {
    assert_eq!(refined_t(RefinedArgs::new(2, 2, 2, 0)), p("1 + q + 2*q^2 + q^3 + q^4"));
    assert_eq!(refined_t(RefinedArgs::new(1, 3, 1, 1)), p("1 + q + q^2"));
    assert_eq!(refined_t(RefinedArgs::new(0, 4, 0, 2)), QPoly::one());
    assert!(refined_t(RefinedArgs::new(5, 2, 6, 0)).is_zero());
    for (l, m, a, b) in [(4, 0, 2, 0), (2, 2, 2, 0), (3, 2, 1, 1)] {
        assert!(refined_t_dual_check(RefinedArgs::new(l, m, a, b)));
    }
}

// Each summand of the three refinement sums, and the expanded forms they are
// displayed as, for T(4,2).
#[test]
fn t42_three_ways() {
    let t = |l, m, a, b| refined_t(RefinedArgs::new(l, m, a, b));
    let target = qtrinomial_t(4, 2);

    let b0 = [t(4, 0, 2, 0), t(3, 1, 2, 0).shift(&half(1)), t(2, 2, 2, 0).shift(&half(4))];
    let q = |n: i64, f: QPoly| f.shift(&QExponent::from_int(n));
    let b0_shown = [p("1"), q(1, p("1+q+q^2")), q(2, p("1+q+2*q^2+q^3+q^4"))];
    assert_eq!(b0, b0_shown);

    let b1 = [t(3, 1, 1, 1), t(2, 2, 1, 1).shift(&half(3)), t(1, 3, 1, 1).shift(&half(8))];
    let b1_shown = [p("1+q+q^2"), q(2, p("1+q").pow(2)), q(4, p("1+q+q^2"))];
    assert_eq!(b1, b1_shown);

    let b2 = [t(2, 2, 0, 2), t(1, 3, 0, 2).shift(&half(5)), t(0, 4, 0, 2).shift(&half(12))];
    let b2_shown = [p("1+q+2*q^2+q^3+q^4"), q(3, p("1+q+q^2")), p("q^6")];
    assert_eq!(b2, b2_shown);

    for parts in [b0, b1, b2] {
        let sum = parts.iter().fold(QPoly::zero(), |acc, x| acc + x.clone());
        assert_eq!(sum, target);
    }
}

/// `𝒯` at `q = 1` from ordinary binomials.
fn refined_at_one(l: i64, m: i64, a: i64, b: i64) -> BigInt {
    let c = |n: i64, k: i64| if k < 0 || n < 0 || k > n { BigInt::from(0) } else { binomial(BigInt::from(n), BigInt::from(k)) };
    let mut s = BigInt::from(0);
    let mut n = 0;
    while n <= (l - a.abs()).min(m) {
        if (n + a + l) % 2 == 0 {
            s += c(m, n) * c(m + b + (l - a - n) / 2, m + b) * c(m - b + (l + a - n) / 2, m - b);
        }
        n += 1;
    }
    s
}

proptest! {
    #[test]
    fn refined_symmetry_duality_and_value_at_one(l in 0i64..7, m in 0i64..7, a in -8i64..9, b in -8i64..9) {
        let args = RefinedArgs::new(l, m, a, b);
        let v = refined_t(args);
        prop_assert_eq!(&v, &refined_t(RefinedArgs::new(l, m, -a, -b)));
        prop_assert!(refined_t_dual_check(args));
        prop_assert_eq!(v.eval_q1(), refined_at_one(l, m, a, b));
        if a.abs() > l || b.abs() > m {
            prop_assert!(v.is_zero());
        }
        prop_assert!(v.has_nonnegative_coeffs());
    }

    #[test]
    fn gaussian_symmetry(n in 0i64..20, k in 0i64..20) {
        prop_assert_eq!(qbinomial(n, k), qbinomial(n, n - k));
    }
}
