//! The fixed identity table.

use crate::bosonic::{self, limits, BranchParams, CharParams};
use crate::error::Result;
use crate::fermionic::{
    self, CharFamily, Conjecture, FSumFamily, KFamily, KSeriesArgs, XFamily,
};
use crate::qcomb::{qbinomial, refined_t, RefinedArgs};
use crate::qpoly::{QExponent, QPoly, QSeries};

use super::grid::Point;
use super::{IdentityDescriptor, Kind, Sides, Status};

type Eval = fn(&Point, Option<&QExponent>) -> Result<Vec<Sides>>;

fn all(_: &Point) -> bool {
    true
}

fn ord(o: Option<&QExponent>) -> &QExponent {
    o.expect("series identity evaluated without an order")
}

fn poly(l: QPoly, r: QPoly) -> Sides {
    Sides::Poly(l, r)
}

fn ser(l: QSeries, r: QSeries) -> Sides {
    Sides::Series(l, r)
}

fn t4(p: &Point) -> RefinedArgs {
    RefinedArgs::new(p.get("L"), p.get("M"), p.get("a"), p.get("b"))
}

/// The defining sum of `𝒯` evaluated literally, with no early exit on the
/// parameter bounds.
fn refined_t_literal(l: i64, m: i64, a: i64, b: i64) -> QPoly {
    let mut acc = QPoly::zero();
    let mut n = 0;
    while n <= (l - a.abs()).min(m) {
        if (n + a + l) % 2 == 0 {
            let t = &(&qbinomial(m, n) * &qbinomial(m + b + (l - a - n) / 2, m + b))
                * &qbinomial(m - b + (l + a - n) / 2, m - b);
            acc += t.shift(&QExponent::new(n * n, 2));
        }
        n += 1;
    }
    acc
}

fn dual(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let args = t4(p);
    let t = refined_t(args);
    let e = QExponent::from_int(args.a * args.b - args.m * args.l);
    Ok(vec![poly(t.substitute_qinv(), t.shift(&e))])
}

fn symmetry(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let a = t4(p);
    Ok(vec![poly(refined_t(a), refined_t(RefinedArgs::new(a.l, a.m, -a.a, -a.b)))])
}

fn out_of_bounds(p: &Point) -> bool {
    let a = t4(p);
    a.a.abs() > a.l || a.b.abs() > a.m
}

fn vanish(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let a = t4(p);
    Ok(vec![
        poly(refined_t_literal(a.l, a.m, a.a, a.b), QPoly::zero()),
        poly(refined_t(a), QPoly::zero()),
    ])
}

fn same_sign_nested(p: &Point) -> bool {
    let (l, a, b) = (p.get("L"), p.get("a"), p.get("b"));
    a.abs() <= l && ((0 <= b && b <= a) || (a <= b && b <= 0))
}

fn m_t_to_t(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (l, r) = bosonic::refinement_to_t_sides(p.get("L"), p.get("a"), p.get("b"));
    Ok(vec![poly(l, r)])
}

fn m_t_to_round(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (l, r) = bosonic::refinement_to_round_sides(p.get("L"), p.get("a"), p.get("b"));
    Ok(vec![poly(l, r)])
}

fn same_sign(p: &Point) -> bool {
    p.get("a") * p.get("b") >= 0
}

fn thm1(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let a = t4(p);
    let (l, r) = bosonic::theorem1_sides(a.l, a.m, a.a, a.b)?;
    Ok(vec![poly(l, r)])
}

fn b_within_l(p: &Point) -> bool {
    p.get("b").abs() <= p.get("L")
}

fn con(p: &Point, _: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (l, r) = bosonic::con_sides(p.get("L"), p.get("b"));
    Ok(vec![poly(l, r)])
}

fn abp(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (l, r) = bosonic::abp_sides(p.get("b"), ord(o), 0);
    Ok(vec![ser(l, r)])
}

fn conj(which: Conjecture, p: &Point) -> Vec<Sides> {
    let (l, m) = (p.get("L"), p.get("M"));
    vec![poly(bosonic::conj_lhs(which, l, m), fermionic::conj_rhs(which, l, m))]
}

fn kseries(family: KFamily, k: i64, p: &Point) -> Result<Vec<Sides>> {
    let args = KSeriesArgs { family, k, l: p.get("L"), m: p.get("M") };
    Ok(vec![poly(bosonic::kseries_lhs(args)?, fermionic::kseries_rhs(args)?)])
}

fn chi(p: i64, pp: i64, r: i64, s: i64, o: &QExponent) -> Result<QSeries> {
    Ok(bosonic::virasoro_char(CharParams::new(p, pp, r, s)?, o))
}

fn branch(p: i64, pp: i64, r: i64, s: i64, sigma: i64, o: &QExponent) -> Result<QSeries> {
    Ok(bosonic::branching_function(BranchParams::new(p, pp, r, s, sigma)?, o))
}

fn e8(_: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let o = ord(o);
    let c = chi(3, 4, 1, 1, o)?;
    Ok(vec![
        ser(fermionic::fermionic_char_sum(CharFamily::E8, o), c.clone()),
        ser(c, bosonic::e8_product(o)),
    ])
}

fn e7(sigma: u8, o: &QExponent) -> Result<Vec<Sides>> {
    let lhs = chi(4, 5, 2 * sigma as i64 + 1, 1, o)?;
    Ok(vec![ser(lhs, fermionic::fermionic_char_sum(CharFamily::E7 { sigma }, o))])
}

fn e6(_: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let o = ord(o);
    let lhs = chi(6, 7, 1, 1, o)?.add(&chi(6, 7, 5, 1, o)?);
    Ok(vec![ser(lhs, fermionic::fermionic_char_sum(CharFamily::E6, o))])
}

fn sigma(p: &Point) -> u8 {
    p.get("sigma").rem_euclid(2) as u8
}

fn b35(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (o, s) = (ord(o), p.get("sigma"));
    Ok(vec![ser(branch(3, 5, 1, 1, s, o)?, chi(4, 5, 2 * s.rem_euclid(2) + 1, 1, o)?)])
}

fn b46(sigma: u8, o: &QExponent) -> Result<Vec<Sides>> {
    let b = branch(4, 6, 1, 1, sigma as i64, o)?;
    let closed = bosonic::b46_closed_form(sigma, o);
    let mut out = vec![ser(b, closed.clone())];
    if sigma == 1 {
        out.push(ser(closed, bosonic::b46_product(o)));
    }
    Ok(out)
}

fn d6_fermionic(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (o, s) = (ord(o), sigma(p));
    Ok(vec![ser(branch(4, 6, 1, 1, s as i64, o)?, fermionic::fermionic_char_sum(CharFamily::D6B46 { sigma: s }, o))])
}

fn a5_fermionic(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (o, s) = (ord(o), sigma(p) as i64);
    let lhs = branch(6, 8, 1, 1, s, o)?.add(&branch(6, 8, 1, 7, 1 - s, o)?);
    let rhs = fermionic::fermionic_char_sum(CharFamily::A5B68 { sigma: s as u8 }, o);
    Ok(vec![ser(lhs, rhs)])
}

fn fam(family: FSumFamily, k: i64, p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let (o, s) = (ord(o), sigma(p));
    Ok(vec![ser(fermionic::fsum_family_lhs(family, k, s, o)?, bosonic::fsum_family_rhs(family, k, s, o)?)])
}

fn x(family: XFamily, k: i64, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    let o = ord(o);
    Ok(vec![ser(fermionic::x_series_lhs(family, k, o)?, bosonic::x_series_rhs(family, k, o)?)])
}

fn chain([a, b, c]: [QSeries; 3]) -> Vec<Sides> {
    vec![ser(a, b.clone()), ser(b, c)]
}

fn tlim(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    Ok(chain(limits::tlim(p.get("a"), ord(o))))
}

fn t_lim(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    Ok(chain(limits::t_lim(p.get("a"), sigma(p), ord(o))?))
}

fn a_within_l(p: &Point) -> bool {
    p.get("a").abs() <= p.get("L")
}

fn m_t_lim(p: &Point, o: Option<&QExponent>) -> Result<Vec<Sides>> {
    Ok(chain(limits::m_t_lim(p.get("L"), p.get("a"), p.get("b"), ord(o))))
}

const TQ: &str = "L=0..5,M=0..5,a=-3..3,b=-3..3";
const TF: &str = "L=0..8,M=0..8,a=-4..4,b=-4..4";

#[allow(clippy::too_many_arguments)]
fn d(
    name: &'static str,
    kind: Kind,
    status: Status,
    summary: &'static str,
    grids: (&'static str, &'static str),
    orders: Option<(i64, i64)>,
    admissible: fn(&Point) -> bool,
    eval: Eval,
) -> IdentityDescriptor {
    IdentityDescriptor {
        name,
        kind,
        status,
        summary,
        note: None,
        quick_grid: grids.0,
        full_grid: grids.1,
        quick_order: orders.map(|o| o.0),
        full_order: orders.map(|o| o.1),
        admissible,
        eval,
    }
}

pub(super) fn build() -> Vec<IdentityDescriptor> {
    use Kind::{PolynomialExact as P, SeriesTruncated as S};
    use Status::{Conjectured as C, Derived as D, Proved as Pr};

    let mut v = vec![
        d("dual", P, Pr, "𝒯(L,M,a,b;1/q) = q^(ab-ML) 𝒯(L,M,a,b;q)", (TQ, TF), None, all, dual),
        d("symmetry", P, Pr, "𝒯(L,M,a,b) = 𝒯(L,M,-a,-b)", (TQ, TF), None, all, symmetry),
        d(
            "vanish",
            P,
            Pr,
            "𝒯(L,M,a,b) = 0 when |a| > L or |b| > M",
            ("L=0..5,M=0..5,a=-7..7,b=-7..7", "L=0..8,M=0..8,a=-10..10,b=-10..10"),
            None,
            out_of_bounds,
            vanish,
        ),
        d(
            "mTtoT",
            P,
            Pr,
            "sum_i q^((i^2-b^2)/2) 𝒯(L-i,i,a-b,b) = T(L,a)",
            ("L=0..5,a=-5..5,b=-5..5", "L=0..8,a=-8..8,b=-8..8"),
            None,
            same_sign_nested,
            m_t_to_t,
        ),
        d(
            "mTtot",
            P,
            Pr,
            "sum_i q^((i^2-b^2)/2) 𝒯(i,L-i,b,a-b) = (L;a)_2",
            ("L=0..5,a=-5..5,b=-5..5", "L=0..8,a=-8..8,b=-8..8"),
            None,
            same_sign_nested,
            m_t_to_round,
        ),
        d(
            "thm1",
            P,
            Pr,
            "sum_i q^(i^2/2) [L+M-i,L] 𝒯(L-i,i,a,b) = q^(b^2/2) 𝒯(L,M,a+b,b)",
            (TQ, TF),
            None,
            same_sign,
            thm1,
        ),
        d(
            "con10",
            P,
            Pr,
            "sum_i q^(i^2/2) [L,i] T(i,b) = q^(b^2/2) [2L,L-b]",
            ("L=0..5,b=-5..5", "L=0..8,b=-8..8"),
            None,
            b_within_l,
            con,
        ),
        d(
            "abp",
            S,
            Pr,
            "sum_i q^(i^2/2) T(i,b)/(q)_i = q^(b^2/2)/(q)_inf",
            ("b=-4..4", "b=-4..4"),
            Some((8, 12)),
            all,
            abp,
        ),
    ];
    let conjs: [(&'static str, &'static str, Eval); 3] = [
        ("conj1", "E7 theta sum of 𝒯 = F^E7_{M;σ}, σ = L mod 2", |p, _| Ok(conj(Conjecture::One, p))),
        ("conj2", "D6 theta sum of 𝒯 = F^D6_{M;σ}, σ = L mod 2", |p, _| Ok(conj(Conjecture::Two, p))),
        ("conj3", "A5 pair of theta sums of 𝒯 = F^A5_{M;σ}, σ = L mod 2", |p, _| Ok(conj(Conjecture::Three, p))),
    ];
    for (name, summary, eval) in conjs {
        v.push(d(name, P, C, summary, ("L=0..3,M=0..3", "L=0..5,M=0..5"), None, all, eval));
    }
    let ks: [(&'static str, &'static str, Eval); 6] = [
        ("flower-k1", "E8 k-series at k=1", |p, _| kseries(KFamily::Flower, 1, p)),
        ("flower-k2", "E8 k-series at k=2", |p, _| kseries(KFamily::Flower, 2, p)),
        ("flower2-k1", "E7 k-series at k=1", |p, _| kseries(KFamily::Flower2, 1, p)),
        ("flower2-k2", "E7 k-series at k=2", |p, _| kseries(KFamily::Flower2, 2, p)),
        ("monster-k1", "E6 k-series at k=1", |p, _| kseries(KFamily::Monster, 1, p)),
        ("monster-k2", "E6 k-series at k=2", |p, _| kseries(KFamily::Monster, 2, p)),
    ];
    for (name, summary, eval) in ks {
        v.push(d(name, P, D, summary, ("L=0..2,M=0..2", "L=0..3,M=0..3"), None, all, eval));
    }
    type SeriesRow = (&'static str, Status, &'static str, &'static str, (i64, i64), fn(&Point) -> bool, Eval);
    let ser_ids: [SeriesRow; 8] = [
        ("E8", D, "E8 fermionic sum = chi^(3,4)_{1,1} = product", "", (8, 12), all, e8),
        ("E7conj-s0", D, "chi^(4,5)_{1,1} = E7 fermionic sum, n1+n3+n7 even", "", (8, 12), all, |_, o| e7(0, ord(o))),
        ("E7conj-s1", D, "chi^(4,5)_{3,1} = E7 fermionic sum, n1+n3+n7 odd", "", (8, 12), all, |_, o| e7(1, ord(o))),
        ("E6", D, "chi^(6,7)_{1,1} + chi^(6,7)_{5,1} = E6 fermionic sum", "", (8, 12), all, e6),
        ("B35-eq-chi45", Pr, "B^(3,5)_{1,1;σ} = chi^(4,5)_{2σ+1,1}", "sigma=0..1", (8, 12), all, b35),
        ("B46-simplification-s0", C, "B^(4,6)_{1,1;0} closed form", "", (12, 20), all, |_, o| b46(0, ord(o))),
        ("B46-simplification-s1", C, "B^(4,6)_{1,1;1} closed form and product", "", (12, 20), all, |_, o| b46(1, ord(o))),
        ("D6-B46-fermionic", D, "B^(4,6)_{1,1;σ} = D6 fermionic sum", "sigma=0..1", (8, 12), all, d6_fermionic),
    ];
    for (name, status, summary, grid, orders, adm, eval) in ser_ids {
        v.push(d(name, S, status, summary, (grid, grid), Some(orders), adm, eval));
    }
    v.push(d(
        "A5-B68-fermionic",
        S,
        D,
        "B^(6,8)_{1,1;σ} + B^(6,8)_{1,7;1-σ} = A5 fermionic sum",
        ("sigma=0..1", "sigma=0..1"),
        Some((8, 12)),
        all,
        a5_fermionic,
    ));
    let fams: [(&'static str, &'static str, Eval); 6] = [
        ("fam1-k1", "E7 F-sum family, k=1", |p, o| fam(FSumFamily::One, 1, p, o)),
        ("fam1-k2", "E7 F-sum family, k=2", |p, o| fam(FSumFamily::One, 2, p, o)),
        ("fam2-k1", "D6 F-sum family, k=1", |p, o| fam(FSumFamily::Two, 1, p, o)),
        ("fam2-k2", "D6 F-sum family, k=2", |p, o| fam(FSumFamily::Two, 2, p, o)),
        ("fam3-k1", "A5 F-sum family, k=1", |p, o| fam(FSumFamily::Three, 1, p, o)),
        ("fam3-k2", "A5 F-sum family, k=2", |p, o| fam(FSumFamily::Three, 2, p, o)),
    ];
    for (name, summary, eval) in fams {
        let mut e = d(name, S, D, summary, ("sigma=0..1", "sigma=0..1"), Some((6, 8)), all, eval);
        if name == "fam1-k2" {
            e.note = Some("branching label taken as sigma + k/2; the unshifted label swaps the two sigma values");
        }
        v.push(e);
    }
    let xs: [(&'static str, &'static str, Eval); 6] = [
        ("X-k2", "E8 dual series, k=2", |_, o| x(XFamily::One, 2, o)),
        ("X-k3", "E8 dual series, k=3", |_, o| x(XFamily::One, 3, o)),
        ("X2-k2", "E7 dual series, k=2", |_, o| x(XFamily::Two, 2, o)),
        ("X2-k3", "E7 dual series, k=3", |_, o| x(XFamily::Two, 3, o)),
        ("X3-k2", "E6 dual series, k=2", |_, o| x(XFamily::Three, 2, o)),
        ("X3-k3", "E6 dual series, k=3", |_, o| x(XFamily::Three, 3, o)),
    ];
    for (name, summary, eval) in xs {
        v.push(d(name, S, D, summary, ("", ""), Some((6, 8)), all, eval));
    }
    v.push(d("limit-tlim", S, Pr, "(L;a)_2 -> 1/(q)_inf", ("a=-2..2", "a=-3..3"), Some((6, 10)), all, tlim));
    v.push(d(
        "limit-Tlim",
        S,
        Pr,
        "T(L,a) -> c_σ over L+a+σ even",
        ("a=-2..2,sigma=0..1", "a=-3..3,sigma=0..1"),
        Some((6, 10)),
        all,
        t_lim,
    ));
    v.push(d(
        "limit-mTlim",
        S,
        Pr,
        "𝒯(L,M,a,b) -> T(L,a)/(q)_L as M grows",
        ("L=0..3,a=-3..3,b=-1..1", "L=0..4,a=-4..4,b=-2..2"),
        Some((6, 10)),
        a_within_l,
        m_t_lim,
    ));
    v
}
