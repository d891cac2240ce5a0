use num_bigint::BigInt;
use qtrinomial_core::bosonic::{
    self, branching_function, branching_function_widened, conj_terms, kseries_terms, string_function, theta_lhs,
    virasoro_char, virasoro_char_widened, BranchParams, CharParams,
};
use qtrinomial_core::fermionic::{
    conj_rhs, f_poly, fermionic_char_sum, fermionic_char_sum_boxed, fsum_family_lhs, kseries_rhs, CharFamily,
    Conjecture, FPolyArgs, FSumFamily, KFamily, KSeriesArgs,
};
use qtrinomial_core::liealg::Algebra;
use qtrinomial_core::qpoly::{inverse_q_pochhammer, pochhammer};
use qtrinomial_core::{qbinomial, Error, QExponent, QPoly, QSeries};

fn q(n: i64, d: i64) -> QPoly {
    QPoly::q_pow(QExponent::new(n, d))
}

fn o(n: i64) -> QExponent {
    QExponent::from_int(n)
}

#[test]
fn f_e7_at_m3_expands_as_displayed() {
    let b = qbinomial;
    let even = q(6, 1) + &q(6, 1) * &b(5, 2) + &q(4, 1) * &b(5, 1) + &q(2, 1) * &b(3, 1) + QPoly::one();
    let odd = q(27, 2)
        + &q(19, 2) * &b(3, 1)
        + q(15, 2)
        + &q(11, 2) * &b(5, 1)
        + &q(7, 2) * &b(3, 1)
        + &q(3, 2) * &b(7, 1);
    assert_eq!(f_poly(FPolyArgs { g: Algebra::E7, m: 3, sigma: 0 }).unwrap(), even);
    assert_eq!(f_poly(FPolyArgs { g: Algebra::E7, m: 3, sigma: 1 }).unwrap(), odd);
}

#[test]
fn f_polynomials_small_cases() {
    for g in [Algebra::A5, Algebra::D6, Algebra::E7] {
        assert_eq!(f_poly(FPolyArgs { g, m: 0, sigma: 0 }).unwrap(), QPoly::one());
        assert!(f_poly(FPolyArgs { g, m: 0, sigma: 1 }).unwrap().is_zero());
        for m in 1..=3 {
            for sigma in 0..2 {
                assert!(f_poly(FPolyArgs { g, m, sigma }).unwrap().has_nonnegative_coeffs());
            }
        }
    }
    assert!(f_poly(FPolyArgs { g: Algebra::E8, m: 1, sigma: 0 }).is_err());
    assert!(f_poly(FPolyArgs { g: Algebra::E7, m: 1, sigma: 2 }).is_err());
}

#[test]
fn conjectures_on_the_full_grid() {
    for c in [Conjecture::One, Conjecture::Two, Conjecture::Three] {
        for l in 0..=5 {
            for m in 0..=5 {
                assert_eq!(bosonic::conj_lhs(c, l, m), conj_rhs(c, l, m), "{c:?} L={l} M={m}");
            }
        }
    }
}

#[test]
fn k_series_at_k3() {
    for family in KFamily::ALL {
        for l in 0..=2 {
            for m in 0..=2 {
                let a = KSeriesArgs { family, k: 3, l, m };
                assert_eq!(bosonic::kseries_lhs(a).unwrap(), kseries_rhs(a).unwrap(), "{family} L={l} M={m}");
            }
        }
    }
    let bad = KSeriesArgs { family: KFamily::Flower, k: 0, l: 1, m: 1 };
    assert!(bosonic::kseries_lhs(bad).is_err());
}

#[test]
fn theta_sums_are_stable_under_widening() {
    for c in [Conjecture::One, Conjecture::Two, Conjecture::Three] {
        let t = conj_terms(c);
        for (l, m) in [(3, 2), (5, 5), (0, 4)] {
            assert_eq!(theta_lhs(l, m, &t, 0), theta_lhs(l, m, &t, 2));
        }
    }
    for f in KFamily::ALL {
        let t = kseries_terms(f, 2);
        assert_eq!(theta_lhs(3, 3, &t, 0), theta_lhs(3, 3, &t, 2));
    }
    for (p, pp, r, s) in [(3, 4, 1, 1), (4, 5, 3, 1), (6, 7, 5, 1), (9, 13, 2, 3)] {
        let c = CharParams::new(p, pp, r, s).unwrap();
        assert_eq!(virasoro_char(c, &o(15)), virasoro_char_widened(c, &o(15), 2));
    }
    for (p, pp, r, s, sigma) in [(3, 5, 1, 1, 0), (4, 6, 1, 1, 1), (6, 8, 1, 7, 0), (5, 13, 1, 3, 1)] {
        let b = BranchParams::new(p, pp, r, s, sigma).unwrap();
        assert_eq!(branching_function(b, &o(12)), branching_function_widened(b, &o(12), 2));
    }
}

#[test]
fn lattice_box_doubling_changes_nothing() {
    let fams = [
        CharFamily::E8,
        CharFamily::E6,
        CharFamily::E7 { sigma: 0 },
        CharFamily::E7 { sigma: 1 },
        CharFamily::D6B46 { sigma: 0 },
        CharFamily::D6B46 { sigma: 1 },
        CharFamily::A5B68 { sigma: 0 },
        CharFamily::A5B68 { sigma: 1 },
    ];
    for f in fams {
        assert_eq!(fermionic_char_sum(f, &o(10)), fermionic_char_sum_boxed(f, &o(10), 2), "{f:?}");
    }
}

/// `sum_{n >= 0} q^{n^2 + c n} / (q)_n` below `order`.
fn rr_sum(c: i64, order: &QExponent) -> QSeries {
    let mut acc = QSeries::zero(order.clone());
    let mut n = 0;
    while QExponent::from_int(n * n + c * n) < *order {
        let t = inverse_q_pochhammer(Some(n as u64), order).shift(&o(n * n + c * n)).truncate(order);
        acc = acc.add(&t);
        n += 1;
    }
    acc
}

#[test]
fn rogers_ramanujan_characters() {
    let order = o(25);
    let prod = |a: i64| {
        let x = pochhammer(&o(a), 1, &o(5), None, &order).unwrap();
        let y = pochhammer(&o(5 - a), 1, &o(5), None, &order).unwrap();
        x.mul(&y).inverse().unwrap()
    };
    let g = virasoro_char(CharParams::new(2, 5, 1, 2).unwrap(), &order);
    assert_eq!(g, rr_sum(0, &order));
    assert_eq!(g, prod(1));
    let h = virasoro_char(CharParams::new(2, 5, 1, 1).unwrap(), &order);
    let want = rr_sum(1, &order).shift(&QExponent::new(1, 5));
    assert_eq!(h, want.truncate(&order));
    assert_eq!(rr_sum(1, &order), prod(2));
}

#[test]
fn string_function_three_forms_to_order_30() {
    for sigma in 0..2 {
        let c = string_function(sigma, &o(30)).unwrap();
        assert!(c.has_nonnegative_coeffs());
    }
    let c0 = string_function(0, &o(6)).unwrap();
    assert_eq!(c0.poly(), &"1 + q + 3*q^2 + 5*q^3 + 10*q^4 + 16*q^5".parse::<QPoly>().unwrap());
    assert!(string_function(2, &o(6)).is_err());
}

#[test]
fn unshifted_branching_label_swaps_sigma_in_the_e7_family() {
    let order = o(8);
    for sigma in 0..2u8 {
        let lhs = fsum_family_lhs(FSumFamily::One, 2, sigma, &order).unwrap();
        let literal = branching_function(BranchParams::new(5, 13, 1, 3, sigma as i64).unwrap(), &order);
        let swapped = branching_function(BranchParams::new(5, 13, 1, 3, 1 - sigma as i64).unwrap(), &order);
        assert_ne!(lhs, literal);
        assert_eq!(lhs, swapped);
        assert_eq!(lhs, bosonic::fsum_family_rhs(FSumFamily::One, 2, sigma, &order).unwrap());
    }
}

#[test]
fn b46_closed_forms() {
    let order = o(30);
    for sigma in 0..2u8 {
        let b = branching_function(BranchParams::new(4, 6, 1, 1, sigma as i64).unwrap(), &order);
        assert_eq!(b, bosonic::b46_closed_form(sigma, &order));
        assert_eq!(b, fermionic_char_sum(CharFamily::D6B46 { sigma }, &order).truncate(b.order()));
    }
    assert_eq!(bosonic::b46_closed_form(1, &order), bosonic::b46_product(&order));
}

#[test]
fn label_validation() {
    assert!(matches!(CharParams::new(4, 2, 1, 1), Err(Error::InvalidCharLabel(_))));
    assert!(matches!(CharParams::new(3, 4, 3, 1), Err(Error::InvalidCharLabel(_))));
    assert!(matches!(CharParams::new(4, 6, 1, 1), Err(Error::InvalidCharLabel(_))));
    assert!(matches!(BranchParams::new(3, 5, 1, 2, 0), Err(Error::InvalidBranchLabel(_))));
    // a label pair written with p > p' is read with the roles swapped
    let a = virasoro_char(CharParams::normalized(13, 4, 3, 1).unwrap(), &o(10));
    assert_eq!(a, virasoro_char(CharParams::new(4, 13, 1, 3).unwrap(), &o(10)));
}

#[test]
fn theorem1_rejects_mixed_signs() {
    assert!(matches!(bosonic::theorem1_check(4, 4, 2, -1), Err(Error::PreconditionViolation(_))));
    assert!(bosonic::theorem1_check(6, 5, -3, -2).unwrap());
    assert_eq!(bosonic::abp_sides(2, &o(10), 0).0.coeff(&o(2)), BigInt::from(1));
}

#[test]
fn round_trinomial_prefix_agreement_is_tight() {
    use qtrinomial_core::bosonic::limits::{tlim_prefix, tlim_prefix_check};
    use qtrinomial_core::qtrinomial2;
    for l in 1..=14 {
        for a in -l..=l {
            assert!(tlim_prefix_check(l, a), "({l},{a})");
            let o = o(tlim_prefix(l, a) + 2);
            let longer = QSeries::from_poly(&qtrinomial2(l, a), o.clone()) == inverse_q_pochhammer(None, &o);
            assert!(!longer, "({l},{a}) agrees further than claimed");
        }
    }
    assert!(!tlim_prefix_check(2, 3));
}
