use super::*;
use crate::scalars::make_context;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ctx(p: i64) -> FieldContext {
    make_context(p, None).unwrap()
}

fn m(c: &FieldContext, rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_rows(c, rows.iter().map(|r| r.iter().map(|&x| c.int(x)).collect()).collect()).unwrap()
}

/// Random matrix with small entries in `Z[A]`, a fraction of them zero.
fn random_matrix(c: &FieldContext, rng: &mut ChaCha8Rng, n: usize, sparsity: f64) -> ExactMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(sparsity) {
                        c.zero()
                    } else {
                        &c.int(rng.gen_range(-2..=2)) + &c.a_pow(rng.gen_range(0..c.root_order() as i64))
                    }
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(c, rows).unwrap()
}

/// Random nilpotent-heavy matrix: `P (J ⊕ N) P⁻¹` with a strictly triangular `N`.
fn random_singular(c: &FieldContext, rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let k = rng.gen_range(0..=n);
    let mut core = ExactMatrix::zeros(c, n, n);
    for i in 0..n {
        for j in 0..n {
            if i < k && j < k {
                if i == j {
                    core.set(i, j, c.a_pow(rng.gen_range(0..6)));
                } else if rng.gen_bool(0.3) {
                    core.set(i, j, c.int(rng.gen_range(-1..=1)));
                }
            } else if i >= k && j > i && rng.gen_bool(0.6) {
                core.set(i, j, c.int(1));
            }
        }
    }
    loop {
        let p = random_matrix(c, rng, n, 0.3);
        if let Ok(pi) = p.inverse() {
            return p.mul(&core).unwrap().mul(&pi).unwrap();
        }
    }
}

#[test]
fn tensor_and_dsum_shapes() {
    let c = ctx(5);
    let i2 = ExactMatrix::identity(&c, 2);
    let i3 = ExactMatrix::identity(&c, 3);
    assert_eq!(i2.tensor(&i3), ExactMatrix::identity(&c, 6));
    let g = ExactMatrix::diagonal(&c, &[c.a_pow(1), c.a_pow(-1)]);
    let want = ExactMatrix::diagonal(&c, &[c.a_pow(2), c.one(), c.one(), c.a_pow(-2)]);
    assert_eq!(g.tensor(&g), want);
    let empty = ExactMatrix::zeros(&c, 0, 0);
    assert_eq!(empty.dsum(&g), g);
    assert!(matches!(i2.mul(&i3), Err(Error::Dimension(_))));
}

#[test]
fn charpoly_basics() {
    let c = ctx(5);
    let one = c.one();
    let cp = ExactMatrix::identity(&c, 2).charpoly().unwrap();
    assert_eq!(cp, CharPoly::from_roots(&c, &[one.clone(), one.clone()]));
    // companion of x² − A x + 1
    let comp = ExactMatrix::from_rows(&c, vec![vec![c.zero(), c.int(-1)], vec![one.clone(), c.a_pow(1)]]).unwrap();
    let cp = comp.charpoly().unwrap();
    assert_eq!(cp.coeffs(), &[one.clone(), -c.a_pow(1), one.clone()]);
    assert!(ExactMatrix::zeros(&c, 2, 3).charpoly().is_err());
    assert_eq!(ExactMatrix::zeros(&c, 0, 0).charpoly().unwrap().degree(), 0);
}

#[test]
fn rank_and_kernel() {
    let c = ctx(5);
    let (r, k) = ExactMatrix::identity(&c, 3).rank_kernel();
    assert_eq!((r, k.len()), (3, 0));
    let (r, k) = ExactMatrix::zeros(&c, 3, 3).rank_kernel();
    assert_eq!((r, k.len()), (0, 3));
    let (r, k) = m(&c, &[&[1, 1], &[1, 1]]).rank_kernel();
    assert_eq!(r, 1);
    assert_eq!(k, vec![vec![c.int(-1), c.int(1)]]);
}

#[test]
fn flat_examples() {
    let c = ctx(5);
    let nil = m(&c, &[&[0, 1], &[0, 0]]);
    assert_eq!(nil.flat().unwrap().rows(), 0);
    let a = ExactMatrix::scalar(&c, c.a_pow(1));
    assert_eq!(nil.dsum(&a).flat().unwrap(), a);
    let inv = m(&c, &[&[2, 1], &[1, 1]]);
    assert_eq!(inv.flat().unwrap(), inv);
}

#[test]
fn roots_and_products() {
    let c = ctx(5);
    let x_minus_a = CharPoly::linear(&c, &c.a_pow(1));
    assert!(charpoly_root_check(&x_minus_a, &c.a_pow(1)));
    let prod = expand_product(&[CharPoly::linear(&c, &c.one()), CharPoly::linear(&c, &c.int(-1))]).unwrap();
    assert_eq!(prod, CharPoly::binomial(&c, 2, &c.one()));
    assert!(!prod.is_divisible_by(&x_minus_a.mul(&x_minus_a)));
    assert_eq!(prod.divide(&CharPoly::linear(&c, &c.one())).unwrap(), CharPoly::linear(&c, &c.int(-1)));
}

#[test]
fn newton_traces_match_powers() {
    let c = ctx(7);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mat = random_matrix(&c, &mut rng, 4, 0.2);
    let cp = mat.charpoly().unwrap();
    let traces = cp.power_traces(9);
    for (k, t) in traces.iter().enumerate() {
        assert_eq!(&mat.pow(k as u32 + 1).unwrap().trace().unwrap(), t, "k = {}", k + 1);
    }
}

#[test]
fn json_round_trip() {
    let c = ctx(5);
    let mat = m(&c, &[&[1, 2], &[3, 4]]).with_basis(vec!["e0".into(), "e2".into()]).unwrap();
    let json = serde_json::to_string(&mat.to_repr()).unwrap();
    let back = ExactMatrix::from_repr(&c, &serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, mat);
    assert_eq!(back.row_labels().unwrap(), &["e0", "e2"]);
    let cp = mat.charpoly().unwrap();
    let json = serde_json::to_string(&cp.to_repr()).unwrap();
    assert!(json.starts_with(r#"{"var":"x","monic":true"#));
    assert_eq!(CharPoly::from_repr(&c, &serde_json::from_str(&json).unwrap()).unwrap(), cp);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flat_law(seed in any::<u64>(), n in 1usize..5, p in prop::sample::select(vec![5i64, 8])) {
        let c = ctx(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mat = random_singular(&c, &mut rng, n);
        let f = mat.flat().unwrap();
        let cp = mat.charpoly().unwrap();
        let fcp = f.charpoly().unwrap();
        let j = n - f.rows();
        prop_assert_eq!(cp, CharPoly::binomial(&c, j, &c.zero()).mul(&fcp));
        prop_assert!(!fcp.constant_term().is_zero());
        prop_assert_eq!(f.flat().unwrap().charpoly().unwrap(), fcp);
    }

    #[test]
    fn similarity_invariance(seed in any::<u64>(), n in 1usize..5) {
        let c = ctx(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mat = random_matrix(&c, &mut rng, n, 0.4);
        let p = random_matrix(&c, &mut rng, n, 0.2);
        if let Ok(pi) = p.inverse() {
            let conj = pi.mul(&mat).unwrap().mul(&p).unwrap();
            prop_assert_eq!(conj.charpoly().unwrap(), mat.charpoly().unwrap());
            prop_assert_eq!(conj.trace().unwrap(), -mat.charpoly().unwrap().coeffs()[n - 1].clone());
        }
    }

    #[test]
    fn flat_respects_sums_and_products(seed in any::<u64>()) {
        let c = ctx(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_singular(&c, &mut rng, 3);
        let b = random_singular(&c, &mut rng, 2);
        let (fa, fb) = (a.flat().unwrap(), b.flat().unwrap());
        prop_assert_eq!(a.dsum(&b).flat().unwrap().charpoly().unwrap(), fa.dsum(&fb).charpoly().unwrap());
        prop_assert_eq!(a.tensor(&b).flat().unwrap().charpoly().unwrap(), fa.tensor(&fb).charpoly().unwrap());
    }
}
