use branch_tensor::*;
use gt_core::rational::{frac, int, is_prime, p_valuation};
use gt_core::{enumerate_patterns, interlaces, weyl_dim, GTPattern, RepVector, Weight};
use proptest::prelude::*;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn pat(s: &str) -> GTPattern {
    GTPattern::parse(s).unwrap()
}

/// All `μ ⪯ λ`.
fn interlacing(lambda: &Weight) -> Vec<Weight> {
    enumerate_patterns(lambda)
        .unwrap()
        .into_iter()
        .map(|m| m.hat().top())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[test]
fn branching_examples() {
    let l = w(&[2, 0]);
    let x = RepVector::basis(&pat("(1)"));
    assert_eq!(branch_inject(&l, &w(&[1]), &x).unwrap(), RepVector::basis(&pat("(2,0;1)")));
    let y = RepVector::basis(&pat("(2,0;1)"));
    assert_eq!(branch_restrict(&l, &w(&[1]), &y).unwrap(), x);
    assert!(branch_restrict(&l, &w(&[2]), &y).unwrap().is_zero());
    assert!(matches!(
        branch_inject(&l, &w(&[3]), &RepVector::basis(&pat("(3)"))),
        Err(BranchError::NotInterlacing { .. })
    ));
    let mu = w(&[2, 1]);
    let big = w(&[3, 1, 0]);
    let h = RepVector::basis(&GTPattern::extremal(&mu));
    assert_eq!(
        branch_inject(&big, &mu, &h).unwrap(),
        RepVector::basis(&GTPattern::extremal(&mu).stack(&big).unwrap())
    );
}

#[test]
fn branching_decomposes_dimension() {
    for l in [w(&[2, 0]), w(&[2, 1, -1]), w(&[3, 1, 0]), w(&[1, 1, 0, -1])] {
        let all = RepVector::from_coords(&l, enumerate_patterns(&l).unwrap().into_iter().map(|m| (m, int(1))));
        let mut total = 0u128;
        for mu in interlacing(&l) {
            let part = branch_restrict(&l, &mu, &all).unwrap();
            total += part.coords.len() as u128;
            for m in enumerate_patterns(&mu).unwrap() {
                let v = RepVector::basis(&m);
                assert_eq!(branch_restrict(&l, &mu, &branch_inject(&l, &mu, &v).unwrap()).unwrap(), v);
            }
        }
        assert_eq!(total, weyl_dim(&l));
    }
}

#[test]
fn r_factorises_along_branching() {
    for l in [w(&[3, 1, 0]), w(&[2, 1, 0, -1])] {
        for m in enumerate_patterns(&l).unwrap() {
            let small = m.hat();
            let mu = small.top();
            let h = GTPattern::extremal(&mu).stack(&l).unwrap();
            assert_eq!(m.r(), h.r() * small.r(), "{m}");
        }
    }
}

#[test]
fn cartan_examples() {
    let l = w(&[1, 0]);
    let t = cartan_table(&l, &l).unwrap();
    assert_eq!(t.coefficient(&pat("(1,0;1)"), &pat("(1,0;0)"), &pat("(2,0;1)")), frac(1, 2));
    let l = w(&[2, 1, -1]);
    let lp = w(&[1, 0, 0]);
    let t = cartan_table(&l, &lp).unwrap();
    let total = l.add(&lp);
    for mpp in enumerate_patterns(&total).unwrap() {
        for m in enumerate_patterns(&l).unwrap() {
            for mp in enumerate_patterns(&lp).unwrap() {
                let c = t.coefficient(&m, &mp, &mpp);
                if m.weight().add(&mp.weight()) != mpp.weight() {
                    assert_eq!(c, int(0));
                }
                let sum = GTPattern::from_flat(3, m.flat().iter().zip(mp.flat()).map(|(a, b)| a + b).collect());
                if sum == mpp {
                    assert_eq!(c, sum.r() / (m.r() * mp.r()), "{m} {mp}");
                }
            }
        }
    }
    let h = RepVector::basis(&GTPattern::extremal(&total));
    assert_eq!(
        cartan_inject(&l, &lp, &h).unwrap(),
        TensorVector::basis(&GTPattern::extremal(&l), &GTPattern::extremal(&lp))
    );
}

#[test]
fn project_after_inject_is_identity() {
    for (l, lp) in [
        (w(&[1, 0]), w(&[1, 0])),
        (w(&[2, 0, -1]), w(&[1, 1, 0])),
        (w(&[1, 0, 0]), w(&[0, 0, -1])),
        (w(&[1, 0, 0, -1]), w(&[1, 0, 0, 0])),
    ] {
        assert!(verify_cartan_table(&l, &lp).unwrap(), "{l} {lp}");
    }
}

#[test]
fn projection_of_highest_vectors() {
    let l = w(&[2, 1, -1]);
    let lp = w(&[1, 0, 0]);
    assert_eq!(
        cartan_project(
            &l,
            &lp,
            &TensorVector::basis(&GTPattern::extremal(&l), &GTPattern::extremal(&lp))
        )
        .unwrap(),
        RepVector::basis(&GTPattern::extremal(&l.add(&lp)))
    );
    for mu in interlacing(&l) {
        for mup in interlacing(&lp) {
            let a = GTPattern::extremal(&mu).stack(&l).unwrap();
            let b = GTPattern::extremal(&mup).stack(&lp).unwrap();
            let c = GTPattern::extremal(&mu.add(&mup)).stack(&l.add(&lp)).unwrap();
            assert_eq!(
                cartan_project(&l, &lp, &TensorVector::basis(&a, &b)).unwrap(),
                RepVector::basis(&c)
            );
        }
    }
}

#[test]
fn extremal_injector() {
    let l = w(&[2, 1, 0]);
    let lp = w(&[1, 1, -1]);
    let t = cartan_table(&l, &lp).unwrap();
    let sigmas: [[usize; 3]; 6] = [[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 1, 2], [2, 3, 1], [3, 2, 1]];
    for s in sigmas {
        let perm = |x: &Weight| {
            let mut g = vec![0; 3];
            for i in 0..3 {
                g[s[i] - 1] = x.0[i];
            }
            Weight(g)
        };
        let (g, gp) = (perm(&l), perm(&lp));
        let hh = GTPattern::extremal(&g.add(&gp));
        assert_eq!(
            t.images[&hh],
            TensorVector::basis(&GTPattern::extremal(&g), &GTPattern::extremal(&gp))
        );
    }
}

#[test]
fn nested_coefficients() {
    let l = w(&[2, 1, -1]);
    let lp = w(&[1, 0, 0]);
    let big = cartan_table(&l, &lp).unwrap();
    for mu in interlacing(&l) {
        for mup in interlacing(&lp) {
            let small = cartan_table(&mu, &mup).unwrap();
            let f = GTPattern::extremal(&mu.add(&mup)).stack(&l.add(&lp)).unwrap().r()
                / (GTPattern::extremal(&mu).stack(&l).unwrap().r()
                    * GTPattern::extremal(&mup).stack(&lp).unwrap().r());
            for (mpp, img) in &small.images {
                for ((m, mp), c) in &img.coords {
                    let lhs = big.coefficient(
                        &m.stack(&l).unwrap(),
                        &mp.stack(&lp).unwrap(),
                        &mpp.stack(&l.add(&lp)).unwrap(),
                    );
                    assert_eq!(lhs, c * &f);
                }
            }
        }
    }
}

#[test]
fn coefficients_are_integral_above_bound() {
    let l = w(&[2, 0, -1]);
    let lp = w(&[1, 1, 0]);
    let bound = l.at(1) + lp.at(1) - l.at(3) - lp.at(3) + 3 - 2;
    let t = cartan_table(&l, &lp).unwrap();
    for p in (2..20u64).filter(|&p| is_prime(p) && p as i64 > bound) {
        for img in t.images.values() {
            for c in img.coords.values() {
                assert!(p_valuation(c, p).unwrap() >= 0);
            }
        }
    }
}

#[test]
fn table_json_shape() {
    let l = w(&[1, 0]);
    let s = serde_json::to_string(&*cartan_table(&l, &w(&[0, 0])).unwrap()).unwrap();
    assert_eq!(
        s,
        r#"{"(1,0;1)":[{"left":[[1,0],[1]],"right":[[0,0],[0]],"coeff":"1/1"}],"(1,0;0)":[{"left":[[1,0],[0]],"right":[[0,0],[0]],"coeff":"1/1"}]}"#
    );
}

fn weight2() -> impl Strategy<Value = Weight> {
    (0i64..=2, -1i64..=1).prop_map(|(a, c)| w(&[c + a, c]))
}

fn weight3() -> impl Strategy<Value = Weight> {
    (0i64..=1, 0i64..=1, -1i64..=0).prop_map(|(a, b, c)| w(&[c + a + b, c + b, c]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn shift_invariance(l in weight3(), lp in weight3(), s in -2i64..=2) {
        let base = cartan_table(&l, &lp).unwrap();
        let left = cartan_table(&l.shift(s), &lp).unwrap();
        let right = cartan_table(&l, &lp.shift(s)).unwrap();
        for (mpp, img) in &base.images {
            for ((m, mp), c) in &img.coords {
                prop_assert_eq!(&left.coefficient(&m.shift(s), mp, &mpp.shift(s)), c);
                prop_assert_eq!(&right.coefficient(m, &mp.shift(s), &mpp.shift(s)), c);
            }
            prop_assert_eq!(left.images[&mpp.shift(s)].coords.len(), img.coords.len());
        }
    }

    #[test]
    fn rank_two_round_trip(l in weight2(), lp in weight2()) {
        prop_assert!(verify_cartan_table(&l, &lp).unwrap());
    }

    #[test]
    fn restrict_inject_identity(l in weight3()) {
        for m in enumerate_patterns(&l).unwrap() {
            let mu = m.hat().top();
            prop_assert!(interlaces(&l, &mu).unwrap());
            let v = RepVector::basis(&m.hat());
            prop_assert_eq!(branch_restrict(&l, &mu, &branch_inject(&l, &mu, &v).unwrap()).unwrap(), v);
        }
    }
}
