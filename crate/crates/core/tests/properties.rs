use std::cmp::Ordering;

use lexval::exactfield::{rat, ExtInt, Rat, RatFunc, UniPoly};
use lexval::valgroup::{coordinates, monoid_member, quotient_class, ExtValue, MonoidMode, ValuePair};
use lexval::valuation::presets::{ex52, ex55};
use lexval::ypoly::{YPoly, YPowerTable};
use lexval::Degree;
use num_traits::One;
use proptest::prelude::*;

fn unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 0..=max_len).prop_map(|cs| UniPoly::from_ints(&cs))
}

fn nonzero_unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// A numerator/denominator pair before reduction, kept for oracles that read
/// degrees and leading coefficients off the unreduced form.
fn raw_fraction() -> impl Strategy<Value = (UniPoly, UniPoly)> {
    (unipoly(5), nonzero_unipoly(4))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    raw_fraction().prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn ypoly(max_deg_y: usize) -> impl Strategy<Value = YPoly> {
    prop::collection::vec((0..=max_deg_y, ratfunc()), 0..=4)
        .prop_map(|terms| terms.into_iter().fold(YPoly::zero(), |acc, (k, c)| &acc + &YPoly::term(c, k)))
}

fn xy_poly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec((0usize..=4, 0usize..=4, -3i64..=3), 1..=4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(YPoly::zero(), |acc, (a, b, c)| &acc + &YPoly::monomial(rat(c), a, b))
    })
}

fn value_pair() -> impl Strategy<Value = ValuePair> {
    (-50i64..=50, -50i64..=50).prop_map(|(a, b)| ValuePair::new(a, b))
}

fn deg(p: &UniPoly) -> i64 {
    p.coeffs().len() as i64 - 1
}

fn oracle_v_inf(num: &UniPoly, den: &UniPoly) -> ExtInt {
    if num.is_zero() {
        ExtInt::Infinity
    } else {
        ExtInt::Finite(deg(den) - deg(num))
    }
}

fn oracle_residue(num: &UniPoly, den: &UniPoly) -> Rat {
    num.coeffs().last().unwrap() / den.coeffs().last().unwrap()
}

/// Expansion of `y^e` obtained by multiplying the expansion of `y^{e−1}` by
/// `y` and rewriting `y^m = w − Σ_{k<m} w_k y^k`.
fn power_rows_by_recurrence(w: &YPoly, m: usize, e_max: usize) -> Vec<Vec<Vec<RatFunc>>> {
    let mut all = vec![vec![vec![RatFunc::one()]
        .into_iter()
        .chain(std::iter::repeat(RatFunc::zero()).take(m - 1))
        .collect::<Vec<_>>()]];
    for _ in 1..=e_max {
        let prev = all.last().unwrap();
        let mut next = vec![vec![RatFunc::zero(); m]; prev.len() + 1];
        for (i, row) in prev.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if j + 1 < m {
                    next[i][j + 1] = &next[i][j + 1] + c;
                } else {
                    next[i + 1][0] = &next[i + 1][0] + c;
                    for k in 0..m {
                        next[i][k] = &next[i][k] - &(c * &w.coeff(k));
                    }
                }
            }
        }
        while next.len() > 1 && next.last().unwrap().iter().all(RatFunc::is_zero) {
            next.pop();
        }
        all.push(next);
    }
    all
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn v_inf_matches_unreduced_degrees((n, d) in raw_fraction()) {
        let h = RatFunc::new(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(h.v_inf(), oracle_v_inf(&n, &d));
        prop_assert!(h.is_canonical());
        if !n.is_zero() {
            prop_assert_eq!(h.residue_at_inf().unwrap(), oracle_residue(&n, &d));
        }
    }

    #[test]
    fn v_inf_is_a_valuation(f in ratfunc(), g in ratfunc()) {
        prop_assert_eq!((&f * &g).v_inf(), f.v_inf() + g.v_inf());
        let sum = (&f + &g).v_inf();
        prop_assert!(sum >= f.v_inf().min(g.v_inf()));
        if f.v_inf() != g.v_inf() {
            prop_assert_eq!(sum, f.v_inf().min(g.v_inf()));
        }
    }

    #[test]
    fn residue_is_multiplicative(f in ratfunc(), g in ratfunc()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lhs = (&f * &g).residue_at_inf().unwrap();
        prop_assert_eq!(lhs, f.residue_at_inf().unwrap() * g.residue_at_inf().unwrap());
    }

    #[test]
    fn corrector_properties(h in ratfunc(), p in unipoly(4)) {
        let c = h.corrector();
        let corrected = &h + &RatFunc::from(c.clone());
        prop_assert!(corrected.v_inf() > ExtInt::Finite(0));
        prop_assert!(corrected.corrector().is_zero());
        let shifted = &h + &RatFunc::from(p.clone());
        prop_assert_eq!(shifted.corrector(), &c - &p);
    }

    #[test]
    fn field_arithmetic_is_canonical(f in ratfunc(), g in ratfunc()) {
        for h in [&f + &g, &f - &g, &f * &g] {
            prop_assert!(h.is_canonical());
        }
        if !g.is_zero() {
            let q = f.checked_div(&g).unwrap();
            prop_assert!(q.is_canonical());
            prop_assert_eq!(&q * &g, f);
        }
    }

    #[test]
    fn divmod_identity(a in unipoly(7), b in nonzero_unipoly(4)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_reconstructs(f in ypoly(12)) {
        for w in [ex55().w().clone(), ex52().w().clone()] {
            let e = f.w_expand(&w).unwrap();
            prop_assert_eq!(e.reconstruct(&w), f.clone());
            prop_assert!(e.rows().iter().all(|r| r.len() == 2));
            if let Some(d) = f.deg_y().finite() {
                prop_assert_eq!(e.ell(), d / 2);
            }
        }
    }

    #[test]
    fn expansion_is_linear(f in ypoly(8), g in ypoly(8), c in ratfunc()) {
        let w = ex55().w().clone();
        let lhs = (&f + &g.scale(&c)).w_expand(&w).unwrap();
        let (ef, eg) = (f.w_expand(&w).unwrap(), g.w_expand(&w).unwrap());
        for i in 0..=lhs.ell().max(ef.ell()).max(eg.ell()) {
            for j in 0..2 {
                prop_assert_eq!(lhs.cell(i, j), &ef.cell(i, j) + &(&eg.cell(i, j) * &c));
            }
        }
    }

    #[test]
    fn expansion_is_unique(cells in prop::collection::vec(ratfunc(), 2..=8)) {
        // Σ c_{i,j} y^j w^i with j < 2 must expand back to exactly the same cells.
        let w = ex55().w().clone();
        let f = cells.iter().enumerate().fold(YPoly::zero(), |acc, (idx, c)| {
            &acc + &(&YPoly::term(c.clone(), idx % 2) * &w.pow((idx / 2) as u32))
        });
        let e = f.w_expand(&w).unwrap();
        for (idx, c) in cells.iter().enumerate() {
            prop_assert_eq!(e.cell(idx / 2, idx % 2), c.clone());
        }
    }

    #[test]
    fn valuation_is_multiplicative(f in xy_poly(), g in xy_poly()) {
        for s in [ex55(), ex52()] {
            prop_assert_eq!(s.value(&(&f * &g)), s.value(&f) + s.value(&g));
        }
    }

    #[test]
    fn valuation_triangle(f in xy_poly(), g in xy_poly()) {
        for s in [ex55(), ex52()] {
            let (vf, vg) = (s.value(&f), s.value(&g));
            let vs = s.value(&(&f + &g));
            prop_assert!(vs >= vf.min(vg));
            if vf != vg {
                prop_assert_eq!(vs, vf.min(vg));
            }
        }
    }

    #[test]
    fn valuation_ignores_constants(f in xy_poly(), c in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 7])) {
        let s = ex55();
        prop_assert_eq!(s.value(&f.scale_rat(&rat(c))), s.value(&f));
    }

    #[test]
    fn valuation_on_rational_elements(f in ypoly(5), g in ypoly(5)) {
        let s = ex55();
        prop_assert_eq!(s.value(&(&f * &g)), s.value(&f) + s.value(&g));
    }
}

proptest! {
    #[test]
    fn monomial_values(a in 0usize..=8, b in 0usize..=8) {
        for s in [ex55(), ex52()] {
            let f = YPoly::monomial(Rat::one(), a, b);
            let expected = (2 * a as i64 + 3 * b as i64) * s.alpha();
            prop_assert_eq!(s.value(&f), ExtValue::Finite(expected));
        }
    }

    #[test]
    fn y_w_monomial_values(i in 0u32..=5, j in 0usize..2) {
        for s in [ex55(), ex52()] {
            let f = s.w().pow(i).shift_y(j);
            let expected = (3 * j as i64) * s.alpha() + i as i64 * s.beta();
            prop_assert_eq!(s.value(&f), ExtValue::Finite(expected));
        }
    }

    #[test]
    fn lex_order_oracle(u in value_pair(), v in value_pair(), z in value_pair()) {
        let oracle = if u.a != v.a { u.a.cmp(&v.a) } else { u.b.cmp(&v.b) };
        prop_assert_eq!(u.cmp(&v), oracle);
        prop_assert_eq!((u + z).cmp(&(v + z)), oracle);
        prop_assert!(ExtValue::Finite(u) < ExtValue::Infinity);
        prop_assert_eq!(ExtValue::Finite(u).cmp(&ExtValue::Finite(v)), oracle);
        if u.cmp(&v) == Ordering::Less {
            prop_assert!(-v < -u);
        }
    }

    #[test]
    fn quotient_class_is_invariant(g in value_pair(), k in -10i64..=10) {
        let (alpha, beta) = (ValuePair::new(-1, -1), ValuePair::new(0, 1));
        let shift = (2 * k) * alpha;
        prop_assert_eq!(
            quotient_class(g + shift, 2, alpha, beta).unwrap(),
            quotient_class(g, 2, alpha, beta).unwrap()
        );
    }

    #[test]
    fn quotient_class_matches_difference(g in value_pair(), h in value_pair()) {
        let (alpha, beta) = (ValuePair::new(-1, -1), ValuePair::new(0, 1));
        let same = quotient_class(g, 2, alpha, beta).unwrap() == quotient_class(h, 2, alpha, beta).unwrap();
        // γ − η ∈ Z·(2α) iff both coordinates of the difference agree with k·(2, 0).
        let d = g - h;
        let in_subgroup = d.a == d.b && d.a % 2 == 0;
        prop_assert_eq!(same, in_subgroup);
    }

    #[test]
    fn monoid_membership_oracle(a in -12i64..=12, b in -12i64..=12) {
        let g = ValuePair::new(a, b);
        for (alpha, beta) in [
            (ValuePair::new(-1, -1), ValuePair::new(0, 1)),
            (ValuePair::new(-1, -1), ValuePair::new(0, -1)),
            (ValuePair::new(-1, -1), ValuePair::new(1, 2)),
        ] {
            let span = |s_lo: i64, t_lo: i64| {
                (s_lo..=80).any(|s| (t_lo..=80).any(|t| s * alpha + t * beta == g))
            };
            let ex55_oracle = g.is_zero() || span(1, 0);
            prop_assert_eq!(monoid_member(g, alpha, beta, MonoidMode::Ex55).unwrap(), ex55_oracle);
            prop_assert_eq!(monoid_member(g, alpha, beta, MonoidMode::Cone).unwrap(), span(0, 0));
            let ray = (0..=80).any(|s| s * alpha == g);
            prop_assert_eq!(monoid_member(g, alpha, beta, MonoidMode::Ray).unwrap(), ray);
            let half = (-80..=80).any(|s| (0..=80).any(|t| s * alpha + t * beta == g));
            prop_assert_eq!(monoid_member(g, alpha, beta, MonoidMode::HalfLattice).unwrap(), half);
        }
    }

    #[test]
    fn coordinates_reconstruct(g in value_pair()) {
        let (alpha, beta) = (ValuePair::new(-1, -1), ValuePair::new(0, 1));
        let (s, t) = coordinates(g, alpha, beta).unwrap().unwrap();
        prop_assert_eq!(s * alpha + t * beta, g);
    }
}

#[test]
fn power_table_matches_recurrence() {
    for s in [ex55(), ex52()] {
        let w = s.w();
        let table = YPowerTable::build(w, 12).unwrap();
        let rows = power_rows_by_recurrence(w, 2, 12);
        for (e, expected) in rows.iter().enumerate() {
            let got = y_power_rows(&YPoly::term(RatFunc::one(), e), w);
            assert_eq!(&got, expected, "y^{e}");
            for t in 0..=e {
                assert_eq!(table.get(e, t), expected[t / 2][t % 2], "y^{e}, index {t}");
            }
            assert!(table.get(e, e + 1).is_zero());
        }
    }
}

fn y_power_rows(f: &YPoly, w: &YPoly) -> Vec<Vec<RatFunc>> {
    f.w_expand(w).unwrap().rows().to_vec()
}

#[test]
fn degree_ordering() {
    assert!(Degree::NegInf < Degree::Finite(0));
    assert!(Degree::Finite(2) < Degree::Finite(3));
}
