use super::*;
use proptest::prelude::*;

fn ctx(p: i64) -> FieldContext {
    make_context(p, None).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn context_shapes() {
    let c = ctx(5);
    assert_eq!((c.root_order(), c.degree()), (10, 4));
    let c = ctx(8);
    assert_eq!((c.root_order(), c.degree()), (16, 8));
    assert_eq!(make_context(7, Some(28)).unwrap().degree(), 12);
    assert!(matches!(make_context(2, None), Err(Error::InvalidLevel(2))));
    assert!(matches!(make_context(6, Some(24)), Err(Error::InvalidConfiguration(_))));
    assert!(matches!(make_context(5, Some(12)), Err(Error::InvalidConfiguration(_))));
}

#[test]
fn root_relations() {
    let c = ctx(5);
    assert_eq!(c.a_pow(5), c.int(-1));
    assert_eq!(&c.a_pow(5) + &c.one(), c.zero());
    assert_eq!(c.a_pow(-1), c.a_pow(9));
}

#[test]
fn eta_squares_to_eta_square() {
    for p in 3..=12 {
        let c = ctx(p);
        let e = c.eta();
        assert_eq!(&e * &e, c.eta_square(), "p = {p}");
        assert!((&e.inv().unwrap() * &e).is_one());
    }
}

#[test]
fn eta_lands_in_base_field_exactly_when_expected() {
    // √(−p) ∈ Q(ζ_2p) exactly when the discriminant of Q(√−p) divides 2p
    let in_base: Vec<i64> = (3..=16).filter(|&p| ctx(p).eta_in_base_field()).collect();
    assert_eq!(in_base, vec![3, 4, 7, 8, 11, 12, 15, 16]);
    // i ∈ Q(ζ_20) supplies the missing sign
    assert!(make_context(5, Some(20)).unwrap().eta_in_base_field());
}

#[test]
fn eta_embeds_positive() {
    for p in [3, 5, 7, 8, 9, 12] {
        let c = ctx(p);
        let z = c.embed_complex(&c.eta(), 20);
        let n = c.root_order() as f64;
        let expect = 2.0 * (4.0 * std::f64::consts::PI / n).sin().abs() / (p as f64).sqrt();
        assert!((z.re_f64() - expect).abs() < 1e-12, "p = {p}: {z:?}");
        assert!(z.im_f64().abs() < 1e-15);
    }
}

#[test]
fn embedding_of_a() {
    let c = ctx(5);
    let z = c.embed_complex(&c.a_pow(1), 5);
    assert_eq!((z.re.as_str(), z.im.as_str()), ("0.80902", "0.58779"));
    let z = c.embed_complex(&c.one(), 3);
    assert_eq!((z.re.as_str(), z.im.as_str()), ("1.000", "0.000"));
}

#[test]
fn kappa_convention_small_levels() {
    // single color: Σ μ_c Δ_c² = 1, so ηκ⁻³ = 1
    for p in [3, 4] {
        assert!(ctx(p).eta_kappa_inv3().unwrap().is_one());
    }
    let c = ctx(5);
    let d2 = recoupling::delta(&c, 2);
    let sum = &c.one() + &(&c.a_pow(8) * &(&d2 * &d2));
    assert_eq!(c.eta_kappa_inv3().unwrap(), sum.inv().unwrap());
}

#[test]
fn display_forms() {
    let c = ctx(5);
    let x = &(&(&c.one() - &c.a_pow(2)) * &c.eta()) + &c.a_pow(3);
    assert_eq!(x.to_string(), "(1 - A^2)·η + A^3");
    assert_eq!(c.zero().to_string(), "0");
    assert_eq!(c.rational(&q(-3, 2)).to_string(), "-3/2");
    assert_eq!((&c.a_pow(1) * &c.int(2)).to_string(), "2·A");
}

#[test]
fn repr_round_trip() {
    let c = ctx(5);
    let x = &(&c.a_pow(3) * &c.eta()) + &c.rational(&q(1, 3));
    let r = x.to_repr();
    assert_eq!(r.base, vec![["1".to_string(), "3".to_string()]]);
    assert_eq!(c.scalar_from_repr(&r).unwrap(), x);
    let json = serde_json::to_string(&r).unwrap();
    let back: ScalarRepr = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    assert!(c.zero().to_repr().base.is_empty());
}

#[test]
fn division_by_zero() {
    let c = ctx(5);
    assert!(matches!(c.zero().inv(), Err(Error::Division)));
    assert!(matches!(c.one().try_div(&c.zero()), Err(Error::Division)));
}

fn arb_scalar(c: &FieldContext, v: &[(i64, i64)]) -> Scalar {
    let base: Vec<BigRational> = v.iter().map(|&(a, _)| q(a, 1)).collect();
    let eta: Vec<BigRational> = v.iter().map(|&(_, b)| q(b, 2)).collect();
    &c.poly_in_a(&base) + &(&c.poly_in_a(&eta) * &c.eta())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(
        p in prop::sample::select(vec![5i64, 7, 8]),
        x in prop::collection::vec((-4i64..5, -4i64..5), 1..8),
        y in prop::collection::vec((-4i64..5, -4i64..5), 1..8),
        z in prop::collection::vec((-4i64..5, -4i64..5), 1..8),
    ) {
        let c = ctx(p);
        let (x, y, z) = (arb_scalar(&c, &x), arb_scalar(&c, &y), arb_scalar(&c, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x.inv().unwrap() * &x).is_one());
        }
    }

    #[test]
    fn embedding_is_multiplicative(
        x in prop::collection::vec((-3i64..4, -3i64..4), 1..6),
        y in prop::collection::vec((-3i64..4, -3i64..4), 1..6),
    ) {
        let c = ctx(5);
        let (x, y) = (arb_scalar(&c, &x), arb_scalar(&c, &y));
        let digits = 12;
        let ex = c.embed_complex(&x, digits);
        let ey = c.embed_complex(&y, digits);
        let exy = c.embed_complex(&(&x * &y), digits);
        let re = ex.re_f64() * ey.re_f64() - ex.im_f64() * ey.im_f64();
        let im = ex.re_f64() * ey.im_f64() + ex.im_f64() * ey.re_f64();
        let scale = 1.0 + ex.abs_f64() * ey.abs_f64();
        prop_assert!((exy.re_f64() - re).abs() < 1e-9 * scale);
        prop_assert!((exy.im_f64() - im).abs() < 1e-9 * scale);
    }

    #[test]
    fn repr_is_canonical(x in prop::collection::vec((-5i64..6, -5i64..6), 1..12)) {
        let c = ctx(7);
        let s = arb_scalar(&c, &x);
        let again = c.scalar_from_repr(&s.to_repr()).unwrap();
        prop_assert_eq!(again.to_repr(), s.to_repr());
    }
}
