//! Property tests for the invariants the library promises.

use jordan_core::algebra::jalg::{parse_algebra, write_algebra};
use jordan_core::algebra::{
    annihilator, change_of_basis, direct_sum, find_unit, power_filtration, radical, unitalize,
    Algebra,
};
use jordan_core::catalog::{
    self, classify_nilpotent_21, fingerprint, nilpotent_21_family, verify_iso,
};
use jordan_core::cohomology::{
    apply_cochain, cohomology_dims, z2_basis, CoboundaryMap, CocycleSystem,
};
use jordan_core::deformation::{
    conjugate_family, derived_witness, explicit_witnesses, limit_algebra, scaling_witness, Witness,
    BY_REFERENCE_EDGES,
};
use jordan_core::exactla::{add_vec, int, integer_rank, sub_vec};
use jordan_core::{RatMatrix, Rational, RationalFunction, UniPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(small_rational(), rows * cols).prop_map(move |v| {
        RatMatrix::from_rows(cols, v.chunks(cols).map(<[Rational]>::to_vec).collect())
    })
}

fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
    matrix(n, n).prop_filter("invertible", |m| m.det().is_ok_and(|d| !d.is_zero()))
}

fn catalog_id() -> impl Strategy<Value = &'static str> {
    prop::sample::select(catalog::classification_ids())
}

fn three_dim_id() -> impl Strategy<Value = &'static str> {
    prop::sample::select(catalog::jordan3_ids())
}

fn alg(id: &str) -> &'static Algebra {
    &catalog::get(id).unwrap().algebra
}

fn poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 0..4).prop_map(UniPoly::from_coeffs)
}

/// `(h(a,a)b)a + h(a²,b)a + h(a²b,a) − a²h(b,a) − h(a,a)(ba) − h(a²,ba)`,
/// the derivative of the Jordan identity along `h`.
fn cocycle_defect(alg: &Algebra, h: &[Rational], a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let m = |x: &[Rational], y: &[Rational]| alg.multiply(x, y).unwrap();
    let hh = |x: &[Rational], y: &[Rational]| apply_cochain(h, x, y);
    let a2 = m(a, a);
    let ba = m(b, a);
    let lhs = add_vec(
        &add_vec(&m(&m(&hh(a, a), b), a), &m(&hh(&a2, b), a)),
        &hh(&m(&a2, b), a),
    );
    let rhs = add_vec(
        &add_vec(&m(&a2, &hh(b, a)), &m(&hh(a, a), &ba)),
        &hh(&a2, &ba),
    );
    sub_vec(&lhs, &rhs)
}

fn all_witnesses() -> Vec<Witness> {
    let mut ws = explicit_witnesses();
    ws.extend(
        BY_REFERENCE_EDGES
            .iter()
            .filter_map(|(s, t)| derived_witness(s, t)),
    );
    ws.extend(
        catalog::jordan3_ids()
            .into_iter()
            .map(|id| scaling_witness(id).unwrap()),
    );
    ws
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in matrix(4, 5)) {
        let rank = m.rank();
        prop_assert_eq!(rank + m.kernel_basis().len(), 5);
        prop_assert_eq!(rank, m.rref().1.len());
    }

    #[test]
    fn integer_rank_matches_rational_rank(m in matrix(6, 4)) {
        let rows: Vec<Vec<BigInt>> = (0..6)
            .map(|i| m.row(i).iter().map(|x| x.numer() * (BigInt::from(6) / x.denom())).collect())
            .collect();
        prop_assert_eq!(integer_rank(rows, 4), m.rank());
    }

    #[test]
    fn signature_is_congruence_invariant(v in prop::collection::vec(small_rational(), 6), p in invertible(3)) {
        let s = RatMatrix::from_rows(3, vec![
            vec![v[0].clone(), v[1].clone(), v[2].clone()],
            vec![v[1].clone(), v[3].clone(), v[4].clone()],
            vec![v[2].clone(), v[4].clone(), v[5].clone()],
        ]);
        let moved = p.transpose().mul(&s).unwrap().mul(&p).unwrap();
        prop_assert_eq!(moved.signature().unwrap(), s.signature().unwrap());
    }

    #[test]
    fn polynomial_text_round_trip(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<UniPoly>().unwrap(), p);
    }

    #[test]
    fn limits_are_multiplicative(a in poly(), b in poly(), c in poly(), d in poly()) {
        let shift = |p: &UniPoly| p + &UniPoly::constant(int(5));
        let f = RationalFunction::new(a, shift(&b)).unwrap_or_else(RationalFunction::zero);
        let g = RationalFunction::new(c, shift(&d)).unwrap_or_else(RationalFunction::zero);
        if let (Ok(lf), Ok(lg)) = (f.limit_at_zero(), g.limit_at_zero()) {
            prop_assert_eq!((&f * &g).limit_at_zero().unwrap(), lf * lg);
        }
    }

    #[test]
    fn algebra_text_round_trip(id in catalog_id(), g in invertible(3)) {
        let a = alg(id);
        let b = if a.dim() == 3 { change_of_basis(a, &g).unwrap() } else { a.clone() };
        prop_assert!(parse_algebra(&write_algebra(&b)).unwrap().same_constants(&b));
    }

    #[test]
    fn unitalization_has_a_unit(id in catalog_id()) {
        prop_assert!(find_unit(&unitalize(alg(id))).is_some());
    }

    #[test]
    fn direct_sums_add_dimensions(x in catalog_id(), y in catalog_id()) {
        let (a, b) = (alg(x), alg(y));
        let s = direct_sum(a, b);
        prop_assert_eq!(radical(&s).unwrap().dim(), radical(a).unwrap().dim() + radical(b).unwrap().dim());
        prop_assert_eq!(annihilator(&s).dim(), annihilator(a).dim() + annihilator(b).dim());
        let (ps, pa, pb) = (power_filtration(&s), power_filtration(a), power_filtration(b));
        for r in 1..=4 {
            prop_assert_eq!(ps.power_dim(r), pa.power_dim(r) + pb.power_dim(r));
        }
    }

    #[test]
    fn classifier_witness_verifies(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero() && c.is_zero()));
        let r = classify_nilpotent_21(&a, &b, &c).unwrap();
        let fam = nilpotent_21_family(&a, &b, &c);
        prop_assert_eq!(fingerprint(&fam).unwrap(), fingerprint(alg(r.id)).unwrap());
        if let Some(w) = &r.witness {
            prop_assert!(verify_iso(w).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fingerprint_is_basis_independent(id in three_dim_id(), g in invertible(3)) {
        let a = alg(id);
        prop_assert_eq!(fingerprint(&change_of_basis(a, &g).unwrap()).unwrap(), fingerprint(a).unwrap());
    }

    #[test]
    fn cohomology_is_basis_independent(id in three_dim_id(), g in invertible(3)) {
        let a = alg(id);
        prop_assert_eq!(cohomology_dims(&change_of_basis(a, &g).unwrap()).unwrap(), cohomology_dims(a).unwrap());
    }

    #[test]
    fn cocycles_are_symmetric_and_solve_the_identity(
        id in three_dim_id(),
        x in prop::collection::vec(small_rational(), 3),
        y in prop::collection::vec(small_rational(), 3),
    ) {
        let a = alg(id);
        for h in z2_basis(a).unwrap() {
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        prop_assert_eq!(&h[(i * 3 + j) * 3 + k], &h[(j * 3 + i) * 3 + k]);
                    }
                }
            }
            prop_assert!(cocycle_defect(a, &h, &x, &y).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn coboundaries_are_cocycles(id in three_dim_id(), g in invertible(3)) {
        let b = change_of_basis(alg(id), &g).unwrap();
        let (cob, sys) = (CoboundaryMap::assemble(&b), CocycleSystem::assemble(&b));
        for p in 0..3 {
            for q in 0..3 {
                prop_assert!(sys.is_cocycle(&cob.generator(p, q)));
            }
        }
    }

    #[test]
    fn curves_stay_in_the_source_orbit(idx in 0usize..42, t0 in small_rational()) {
        let ws = all_witnesses();
        let w = &ws[idx % ws.len()];
        let source = alg(&w.source);
        let family = conjugate_family(source, &w.g).unwrap();
        if let Some(member) = family.specialize(&t0) {
            if !w.g.eval(&t0).det().unwrap().is_zero() {
                prop_assert_eq!(fingerprint(&member).unwrap(), fingerprint(source).unwrap());
            }
        }
        let limit = limit_algebra(&family).unwrap();
        prop_assert_eq!(fingerprint(&limit).unwrap(), fingerprint(alg(&w.target)).unwrap());
    }
}
