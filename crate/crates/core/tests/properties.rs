//! Property tests for the algebraic invariants the library relies on.

use std::sync::Arc;

use proptest::prelude::*;

use h1curves::algebra::{
    factor_univariate_poly, rat, resultant, Field, MultiPoly, NumberField, RationalField, UPoly,
};
use h1curves::cli::parse::parse_polynomial;
use h1curves::derham::h1_dimension;
use h1curves::groebner::{groebner_basis, normal_form, quotient_dimension, Ideal, MonomialOrder};
use h1curves::oracle::{semigroup_data, truncated_h1, truncated_mu_prime, AlgebraPresentation};
use h1curves::singular::{branch_count, delta_invariant, local_milnor, AlgebraicPoint};
use h1curves::topology::CurveSpec;

fn ring() -> Arc<[String]> {
    MultiPoly::ring(&["x", "y"])
}

fn poly_from(terms: &[(i64, u32, u32)]) -> MultiPoly {
    let t: Vec<(i64, Vec<u32>)> = terms.iter().map(|&(c, i, j)| (c, vec![i, j])).collect();
    let refs: Vec<(i64, &[u32])> = t.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    MultiPoly::from_int_terms(&ring(), &refs)
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..=3, 0u32..=3), 0..5).prop_map(|t| poly_from(&t))
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn number_field_inverses(c in prop::collection::vec(-6i64..=6, 1..3)) {
        let k = NumberField::new(UPoly::from_coeffs(&RationalField, vec![rat(-2), rat(0), rat(1)])).unwrap();
        let e = k.element_from_coeffs(c.iter().map(|&v| rat(v)).collect());
        prop_assume!(!e.is_zero());
        prop_assert!(k.is_one(&k.mul(&e, &k.inv(&e).unwrap())));
    }

    #[test]
    fn expression_round_trip(p in small_poly()) {
        let text = p.to_expr_string();
        prop_assert_eq!(parse_polynomial(&ring(), &text, 1, 1).unwrap(), p);
    }

    #[test]
    fn resultant_lies_in_the_ideal(f in nonzero_poly(), g in nonzero_poly()) {
        prop_assume!(f.degree_in(1).unwrap_or(0) > 0 && g.degree_in(1).unwrap_or(0) > 0);
        let r = resultant(&f, &g, 1).unwrap();
        prop_assert!(r.degree_in(1).unwrap_or(0) == 0);
        let gb = groebner_basis(&Ideal::new(&ring(), [f, g]), &MonomialOrder::grevlex(2)).unwrap();
        prop_assert!(normal_form(&r, &gb).is_zero());
    }

    #[test]
    fn factorization_multiplies_back(roots in prop::collection::vec(-4i64..=4, 1..4), extra in prop::collection::vec(-3i64..=3, 0..4)) {
        let k = RationalField;
        let mut f = UPoly::from_coeffs(&k, extra.iter().map(|&c| rat(c)).chain([rat(1)]).collect());
        for r in &roots {
            f = f.mul(&k, &UPoly::from_coeffs(&k, vec![rat(-r), rat(1)]));
        }
        let factors = factor_univariate_poly(&f).unwrap();
        let mut prod = UPoly::constant(&k, f.lead().unwrap().clone());
        for (g, e) in &factors {
            prod = prod.mul(&k, &g.pow(&k, *e as u32));
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn groebner_basis_ignores_generator_order(gens in prop::collection::vec(nonzero_poly(), 1..4)) {
        let order = MonomialOrder::grevlex(2);
        let a = groebner_basis(&Ideal::new(&ring(), gens.clone()), &order).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let b = groebner_basis(&Ideal::new(&ring(), rev), &order).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(nonzero_poly(), 1..3), p in small_poly()) {
        let gb = groebner_basis(&Ideal::new(&ring(), gens), &MonomialOrder::lex(2)).unwrap();
        let nf = normal_form(&p, &gb);
        prop_assert_eq!(normal_form(&nf, &gb), nf.clone());
        prop_assert!(normal_form(&(&p - &nf), &gb).is_zero());
    }

    #[test]
    fn quotient_dimension_of_triangular_systems(
        a in 1u32..=4, b in 1u32..=3,
        fx in prop::collection::vec(-3i64..=3, 4),
        gy in prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=2), 0..4),
    ) {
        // f ∈ ℚ[x] of degree a, g = y^b + (lower in y): the quotient has dimension a·b
        let mut f = vec![(1, a, 0)];
        f.extend(fx.iter().enumerate().filter(|(i, _)| (*i as u32) < a).map(|(i, &c)| (c, i as u32, 0)));
        let mut g = vec![(1, 0, b)];
        g.extend(gy.iter().filter(|t| t.2 < b).copied());
        let ideal = Ideal::new(&ring(), [poly_from(&f), poly_from(&g)]);
        for order in [MonomialOrder::grevlex(2), MonomialOrder::lex(2)] {
            let gb = groebner_basis(&ideal, &order).unwrap();
            prop_assert_eq!(quotient_dimension(&gb).dimension(), Some((a * b) as usize));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn invariants_survive_affine_changes(which in 0usize..5, c in -2i64..=2, d in -3i64..=3, e in -3i64..=3) {
        let curves = [
            vec![poly_from(&[(1, 0, 2), (-1, 3, 0)])],
            vec![poly_from(&[(1, 0, 2), (-1, 3, 0), (-1, 2, 0)])],
            vec![poly_from(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)])],
            vec![poly_from(&[(1, 1, 1), (-1, 0, 0)])],
            vec![poly_from(&[(1, 1, 0)]), poly_from(&[(1, 0, 1)]), poly_from(&[(1, 1, 0), (1, 0, 1)])],
        ];
        let x = MultiPoly::var(&ring(), 0);
        let y = MultiPoly::var(&ring(), 1);
        // x ↦ x + c y + d, y ↦ y + e
        let xs = &(&x + &y.scale(&rat(c))) + &MultiPoly::constant(&ring(), rat(d));
        let ys = &y + &MultiPoly::constant(&ring(), rat(e));
        let moved: Vec<MultiPoly> = curves[which].iter().map(|f| f.substitute(&[xs.clone(), ys.clone()])).collect();
        let a = h1_dimension(&CurveSpec::new(curves[which].clone()).unwrap(), false, 0).unwrap();
        let b = h1_dimension(&CurveSpec::new(moved).unwrap(), false, 0).unwrap();
        prop_assert_eq!(
            (a.b0(), a.b1(), a.chi(), a.sum_mu_prime, a.h1_formula),
            (b.b0(), b.b1(), b.chi(), b.sum_mu_prime, b.h1_formula)
        );
    }

    #[test]
    fn quasi_homogeneous_germs(p in 2u32..=4, q in 3u32..=7) {
        prop_assume!(p < q && num_integer::gcd(p, q) == 1);
        // y^p - x^q: one branch, μ = (p-1)(q-1), δ = number of gaps of ⟨p, q⟩
        let f = poly_from(&[(1, 0, p), (-1, q, 0)]);
        let o = AlgebraicPoint::origin();
        let mu = local_milnor(&f, &o).unwrap();
        prop_assert_eq!(mu as u32, (p - 1) * (q - 1));
        prop_assert_eq!(branch_count(&f, &o).unwrap(), 1);
        let delta = delta_invariant(mu, 1).unwrap();
        prop_assert_eq!(delta, semigroup_data(&[p, q]).unwrap().gaps.len());
        let germ = AlgebraPresentation::plane_curve(&f, Some(vec![p, q])).unwrap();
        let r = truncated_mu_prime(&germ, 2 * p * q + 4).unwrap();
        prop_assert!(r.stabilized);
        prop_assert_eq!(r.value, mu);
    }

    #[test]
    fn disjoint_hyperbolas_add_up(c1 in 1i64..=6, c2 in 1i64..=6) {
        prop_assume!(c1 != c2);
        let h = |c: i64| poly_from(&[(1, 1, 1), (-c, 0, 0)]);
        let one = h1_dimension(&CurveSpec::single(h(c1)).unwrap(), false, 0).unwrap();
        let both = h1_dimension(&CurveSpec::new(vec![h(c1), h(c2)]).unwrap(), false, 0).unwrap();
        prop_assert_eq!(both.b0(), 2);
        prop_assert_eq!(both.h1_formula, 2 * one.h1_formula);
    }
}

#[test]
fn oracle_ignores_variable_order() {
    let f = poly_from(&[(1, 0, 2), (-1, 3, 0), (-1, 2, 0)]);
    let swapped = f.substitute(&[MultiPoly::var(&ring(), 1), MultiPoly::var(&ring(), 0)]);
    let a = truncated_h1(&AlgebraPresentation::plane_curve(&f, None).unwrap(), 16).unwrap();
    let b = truncated_h1(&AlgebraPresentation::plane_curve(&swapped, None).unwrap(), 16).unwrap();
    assert_eq!(a.per_degree, b.per_degree);
    let cusp = poly_from(&[(1, 0, 2), (-1, 3, 0)]);
    let cusp_swapped = cusp.substitute(&[MultiPoly::var(&ring(), 1), MultiPoly::var(&ring(), 0)]);
    let a = truncated_h1(&AlgebraPresentation::plane_curve(&cusp, Some(vec![2, 3])).unwrap(), 20).unwrap();
    let b = truncated_h1(&AlgebraPresentation::plane_curve(&cusp_swapped, Some(vec![3, 2])).unwrap(), 20).unwrap();
    assert_eq!(a.per_degree, b.per_degree);
}
