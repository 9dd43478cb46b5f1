use super::*;
use crate::scalars::make_context;
use proptest::prelude::*;

fn ctx(p: i64) -> FieldContext {
    make_context(p, None).unwrap()
}

#[test]
fn quantum_integers() {
    let c = ctx(7);
    assert!(qint(&c, 0).is_zero());
    assert!(qint(&c, 1).is_one());
    assert_eq!(qint(&c, 2), &c.a_pow(2) + &c.a_pow(-2));
    assert_eq!(qint(&c, -3), -qint(&c, 3));
    // [p] vanishes since A^{2p} = 1
    assert!(qint(&c, 7).is_zero());
    assert!(qfact(&c, 0).is_one());
    assert_eq!(qfact(&c, 3), qint(&c, 1) * qint(&c, 2) * qint(&c, 3));
}

#[test]
fn delta_values() {
    let c = ctx(5);
    assert!(delta(&c, 0).is_one());
    assert_eq!(delta(&c, 1), -(&c.a_pow(2) + &c.a_pow(-2)));
    let expect = &(&c.a_pow(4) + &c.one()) + &c.a_pow(6);
    assert_eq!(delta(&c, 2), expect);
}

#[test]
fn delta_recursion() {
    for p in 5..=12 {
        let c = ctx(p);
        let d1 = delta(&c, 1);
        let max = *c.colors().colors().last().unwrap();
        for n in 1..max {
            assert_eq!(delta(&c, n + 1), &(&d1 * &delta(&c, n)) - &delta(&c, n - 1));
        }
    }
}

#[test]
fn twist_values_at_five() {
    let c = ctx(5);
    assert!(mu(&c, 0).is_one());
    assert_eq!(mu(&c, 2), c.a_pow(8));
    assert_eq!(mu(&c, 2).inv().unwrap(), c.a_pow(2));
    let l = lambda_coef(&c, 2, 2, 2).unwrap();
    assert_eq!(l, -c.a_pow(4));
    assert_eq!((mu(&c, 2) * l).inv().unwrap(), c.a_pow(3));
    assert!(lambda_coef(&c, 0, 0, 0).unwrap().is_one());
    assert!(matches!(lambda_coef(&c, 0, 0, 2), Err(Error::Inadmissible(0, 0, 2))));
}

#[test]
fn lambda_reduces_to_mu() {
    for p in 5..=12 {
        let c = ctx(p);
        for &a in c.colors().colors() {
            assert_eq!(lambda_coef(&c, a, a, 0).unwrap(), mu(&c, a));
        }
    }
}

#[test]
fn hopf_reductions() {
    let c = ctx(5);
    assert!(hopf(&c, 0, 0).is_one());
    assert_eq!(hopf(&c, 2, 2), qint(&c, 9));
    assert_eq!(hopf(&c, 2, 2), c.int(-1));
    for p in 5..=9 {
        let c = ctx(p);
        for &a in c.colors().colors() {
            assert_eq!(hopf(&c, a, 0), delta(&c, a));
            for &t in c.colors().colors() {
                assert_eq!(hopf(&c, a, t), hopf(&c, t, a));
            }
        }
    }
}

#[test]
fn theta_and_tet_reductions() {
    for p in [5, 7, 8, 9] {
        let c = ctx(p);
        let cd = c.colors().clone();
        for &a in cd.colors() {
            assert_eq!(theta(&c, a, 0, a).unwrap(), delta(&c, a));
            assert_eq!(theta(&c, a, a, 0).unwrap(), delta(&c, a));
        }
        for &t in cd.colors() {
            for &i in cd.colors() {
                for &j in cd.colors() {
                    if cd.admissible(t, i, j) {
                        let th = theta(&c, i, j, t).unwrap();
                        assert!(!th.is_zero());
                        assert_eq!(tet(&c, t, i, i, 0, j, j).unwrap(), th, "p={p} ({t},{i},{j})");
                    }
                }
            }
        }
    }
    let c = ctx(5);
    assert!(tet(&c, 0, 0, 0, 0, 0, 0).unwrap().is_one());
    assert!(matches!(theta(&c, 0, 0, 2), Err(Error::Inadmissible(..))));
    assert!(matches!(theta(&c, 0, 0, 4), Err(Error::NotAColor(4, 5))));
}

#[test]
fn oracle_agrees_at_five() {
    let c = ctx(5);
    let o = TlOracle::new(&c);
    assert_eq!(o.evaluate(&Network::Unknot(2)).unwrap(), delta(&c, 2));
    assert_eq!(o.evaluate(&Network::Theta(2, 2, 2)).unwrap(), theta(&c, 2, 2, 2).unwrap());
    assert_eq!(o.evaluate(&Network::Tet(2, 2, 2, 2, 2, 2)).unwrap(), tet(&c, 2, 2, 2, 2, 2, 2).unwrap());
    assert_eq!(o.evaluate(&Network::Hopf(2, 2)).unwrap(), hopf(&c, 2, 2));
    assert_eq!(o.evaluate(&Network::Curl(2)).unwrap(), mu(&c, 2) * delta(&c, 2));
}

#[test]
fn oracle_agrees_on_odd_colors() {
    let c = ctx(12);
    let o = TlOracle::new(&c);
    for (a, b, t) in [(1, 1, 2), (1, 2, 1), (3, 1, 2), (3, 3, 2)] {
        assert_eq!(o.evaluate(&Network::Theta(a, b, t)).unwrap(), theta(&c, a, b, t).unwrap());
    }
    assert_eq!(o.evaluate(&Network::Tet(1, 1, 1, 2, 2, 2)).unwrap(), tet(&c, 1, 1, 1, 2, 2, 2).unwrap());
    assert_eq!(o.evaluate(&Network::Tet(2, 1, 3, 2, 1, 3)).unwrap(), tet(&c, 2, 1, 3, 2, 1, 3).unwrap());
    assert_eq!(o.evaluate(&Network::Hopf(1, 3)).unwrap(), hopf(&c, 1, 3));
    assert_eq!(o.evaluate(&Network::Curl(3)).unwrap(), mu(&c, 3) * delta(&c, 3));
}

#[test]
fn omega_and_kappa_consistency() {
    for p in [3, 5, 7, 8] {
        let c = ctx(p);
        let om = omega_coeffs(&c);
        let mut s = c.zero();
        for (k, &col) in c.colors().colors().iter().enumerate() {
            s += &(&om[k] * &(mu(&c, col) * delta(&c, col)));
        }
        // Σ ω_c μ_c Δ_c = κ³
        assert!((s * c.kappa_inv3().unwrap()).is_one(), "p = {p}");
    }
}

#[test]
fn dimension_counts() {
    for p in [3, 5, 7, 8, 12] {
        let c = ctx(p);
        assert_eq!(verlinde_dim(&c, 0, 0), 1);
        assert_eq!(verlinde_dim(&c, 1, 0), c.colors().colors().len() as u128);
    }
    let c = ctx(5);
    assert_eq!(verlinde_dim(&c, 1, 2), 1);
    assert_eq!(verlinde_dim(&c, 0, 2), 0);
    // genus two at p = 5: admissible triples with tadpole weights
    assert_eq!(verlinde_dim(&c, 2, 0), 5);
}

fn tet_layout() -> impl Strategy<Value = (i64, [u32; 6])> {
    (prop::sample::select(vec![5i64, 7, 9, 12]), prop::array::uniform6(0u32..6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tet_symmetries((p, e) in tet_layout()) {
        let c = ctx(p);
        let [t, i1, i2, cc, j1, j2] = e;
        if let Ok(v) = tet(&c, t, i1, i2, cc, j1, j2) {
            prop_assert_eq!(&tet(&c, t, i2, i1, cc, j2, j1).unwrap(), &v);
            prop_assert_eq!(&tet(&c, cc, i1, j1, t, i2, j2).unwrap(), &v);
            prop_assert_eq!(&tet(&c, t, j1, j2, cc, i1, i2).unwrap(), &v);
        }
    }
}
