use arch_constants::*;
use gt_core::rational::{frac, int, p_valuation};
use gt_core::{enumerate_patterns, GTPattern, Rational, Weight};
use proptest::prelude::*;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn g(re: Rational, im: Rational) -> GaussianRational {
    GaussianRational::new(re, im)
}

#[test]
fn archzeta_examples() {
    assert_eq!(archzeta_constant(2, 0, 0, 0, Epsilon::Plus), g(frac(-1, 4), int(0)));
    assert_eq!(archzeta_constant(2, 1, 0, 0, Epsilon::Plus), g(int(0), frac(-1, 4)));
    for (n, ww, wp, m) in [(2, 1, 0, 0), (3, 2, -1, 1), (4, 1, 0, -2), (3, 0, 3, 0)] {
        let p = archzeta_constant(n, ww, wp, m, Epsilon::Plus);
        let q = archzeta_constant(n, ww, wp, m, Epsilon::Minus);
        let rest = archzeta_constant(n, 0, 0, m, Epsilon::Plus);
        let factor = GaussianRational::eps_i_pow(Epsilon::Plus, b(n) * (ww - wp));
        assert_eq!(p, &rest * &factor);
        assert_eq!(q, &rest * &factor.conj());
    }
}

#[test]
fn global_constant_examples() {
    let per = archzeta_constant(2, 1, 0, 0, Epsilon::Plus);
    let c = global_constant_c(1, 2, 1, 0, 0, Epsilon::Plus, 7);
    assert_eq!(c.discriminant_part, SymbolicValue::one());
    assert_eq!(c.archimedean_part, per);
    let c2 = global_constant_c(2, 2, 1, 0, 0, Epsilon::Plus, 7);
    assert_eq!(c2.archimedean_part, &per * &per);
    assert_eq!(global_constant_c(1, 2, 0, 0, 1, Epsilon::Plus, 3).discriminant_part.rational, int(3));
    assert_eq!(global_constant_c(1, 3, 0, 0, -1, Epsilon::Plus, 5).discriminant_part.rational, frac(1, 125));
    assert!(c.excludes_central_character);
}

#[test]
fn gamma_c_values() {
    let v = |a: Rational| eval_gamma_c(&a).unwrap();
    assert_eq!(v(int(1)), SymbolicValue { rational: int(1), pi_power: -1, sqrt2: false });
    assert_eq!(v(frac(1, 2)), SymbolicValue { rational: int(1), pi_power: 0, sqrt2: true });
    assert_eq!(v(int(2)), SymbolicValue { rational: frac(1, 2), pi_power: -2, sqrt2: false });
    // Γ_C(3/2) = 2(2π)^{-3/2} √π / 2 = π^{-1}/√2
    assert_eq!(v(frac(3, 2)), SymbolicValue { rational: frac(1, 4), pi_power: -1, sqrt2: true });
    // Γ_C(s+1) = s Γ_C(s) / 2π
    for k in 1..8 {
        let s = frac(k, 2);
        let lhs = v(&s + int(1));
        let rhs = &v(s.clone()) * &SymbolicValue { rational: s / int(2), pi_power: -1, sqrt2: false };
        assert_eq!(lhs, rhs);
    }
    for bad in [int(0), frac(-1, 2), frac(1, 3)] {
        assert!(matches!(eval_gamma_c(&bad), Err(ArchError::GammaArgument(_))));
    }
    let root = &v(frac(1, 2)) * &v(frac(1, 2));
    assert_eq!(root, SymbolicValue::rational(int(2)));
}

#[test]
fn gamma_factor_examples() {
    assert!(gamma_n_factor(&[int(0)], &[4]).unwrap().is_empty());
    let g2 = gamma_n_factor(&[frac(1, 2), frac(-1, 2)], &[3, 1]).unwrap();
    assert_eq!(g2.to_vec(), vec![int(3)]);
    assert!(matches!(gamma_n_factor(&[int(0)], &[1, 2]), Err(ArchError::LengthMismatch { .. })));
    let l = l_factor_arch(&[1, -1], &[int(0), int(0)], &[0], &[int(0)]).unwrap();
    assert_eq!(l.to_vec(), vec![frac(1, 2), frac(1, 2)]);
    assert_eq!(l.len(), 2);
    assert!(l_factor_arch(&[], &[], &[], &[]).unwrap().is_empty());
    assert!(l_factor_arch(&[1, 2], &[int(0), int(0)], &[0, 1], &[int(0), int(0)]).is_err());
    let prod = g2.product(&l);
    assert_eq!(prod.len(), 3);
    assert_eq!(serde_json::to_string(&prod).unwrap(), r#"["1/2","1/2","3/1"]"#);
}

#[test]
fn whittaker_prefactor_examples() {
    assert_eq!(whittaker_prefactor(&[0, 0, 0], Epsilon::Plus), GaussianRational::one());
    assert_eq!(whittaker_prefactor(&[1, 0], Epsilon::Plus), GaussianRational::one());
    assert_eq!(whittaker_prefactor(&[0, 1], Epsilon::Plus), GaussianRational::i());
    for d in [vec![3, 1], vec![4, 0, -2], vec![5, 3, 1, -1]] {
        let s: i64 = d.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
        for eps in [Epsilon::Plus, Epsilon::Minus] {
            assert_eq!(whittaker_prefactor(&d, eps), GaussianRational::eps_i_pow(eps.flip(), s));
        }
    }
}

#[test]
fn pre_class_rank_one() {
    for (l, ww) in [(1, 0), (-2, 3), (0, 1)] {
        let pc = pre_class(&w(&[l]), ww).unwrap();
        assert_eq!(pc.coeffs.len(), 1);
        let c = pc.coeffs.values().next().unwrap();
        assert!(*c == int(1) || *c == int(-1));
    }
}

#[test]
fn pre_class_extremal_column() {
    // Only one quadruple starting at H(d) survives, with a pure sign.
    for (mu, wp) in [(w(&[1, 0]), 0), (w(&[2, -1]), 1), (w(&[0]), 2), (w(&[1]), -1), (w(&[1, 1, 0]), 0)] {
        let pc = pre_class(&mu, wp).unwrap();
        let n = mu.len();
        let hd = GTPattern::extremal(&pc.d);
        let hits: Vec<_> = pc.coeffs.iter().filter(|((m, ..), _)| *m == hd).collect();
        assert_eq!(hits.len(), 1, "μ={mu}");
        let ((_, nn, p, q), c) = hits[0];
        let muw = mu.shift(-wp);
        assert_eq!(*nn, GTPattern::extremal(&Weight::two_rho(n).neg()));
        assert_eq!(*p, GTPattern::extremal(&mu.neg()));
        assert_eq!(*q, GTPattern::extremal(&muw));
        assert_eq!(*c, gt_core::rational::sign_pow(hd.q() + q.q()));
    }
}

#[test]
fn pre_class_weight_compatibility_and_size() {
    let pc = pre_class(&w(&[1, 0]), 1).unwrap();
    assert_eq!(pc.d, w(&[2, -2]));
    assert!(!pc.coeffs.is_empty());
    let bound = enumerate_patterns(&pc.d).unwrap().len() * 2 * 2 * 2;
    assert!(pc.coeffs.len() <= bound);
    for l in [w(&[1, 0]), w(&[2, -1]), w(&[1, 0, -1]), w(&[1, 1, 0])] {
        for ww in [0, 1] {
            let pc = pre_class(&l, ww).unwrap();
            for (m, nn, p, q) in pc.coeffs.keys() {
                // wt(M^∨) = wt(N) + wt(P) + wt(Q^∨)
                let lhs = m.dual().weight();
                let rhs = nn.weight().add(&p.weight()).add(&q.dual().weight());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn pre_class_twisting() {
    // c(M+a−b, N, P−a, Q−b) = (−1)^{b_n a} c(M, N, P, Q) for (λ+a, w+a+b)
    for (l, ww) in [(w(&[1, 0]), 0), (w(&[2, -1]), 1), (w(&[1, 0, -1]), 0)] {
        let base = pre_class(&l, ww).unwrap();
        let n = l.len() as i64;
        for (a, bb) in [(1, 0), (0, 1), (-1, 2)] {
            let tw = pre_class(&l.shift(a), ww + a + bb).unwrap();
            assert_eq!(tw.coeffs.len(), base.coeffs.len());
            let sign = gt_core::rational::sign_pow(n * (n - 1) / 2 * a);
            for ((m, nn, p, q), c) in &base.coeffs {
                let got = tw.coefficient(&m.shift(a - bb), nn, &p.shift(-a), &q.shift(-bb));
                assert_eq!(got, &sign * c);
            }
        }
    }
}

#[test]
fn pre_class_integral_above_bound() {
    for (l, ww) in [(w(&[1, 0]), 0), (w(&[2, 0]), 1), (w(&[3, 0]), 0), (w(&[1, 0, -1]), 0)] {
        let pc = pre_class(&l, ww).unwrap();
        let n = l.len() as i64;
        let bound = pc.d.at(1) - pc.d.at(l.len()) + n - 2;
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
            if (p as i64) <= bound {
                continue;
            }
            for c in pc.coeffs.values() {
                assert!(p_valuation(c, p).unwrap() >= 0, "λ={l} p={p}");
            }
        }
    }
}

#[test]
fn pre_class_json() {
    let pc = pre_class(&w(&[0]), 0).unwrap();
    let s = serde_json::to_string(&pc).unwrap();
    assert_eq!(s, r#"{"lambda":[0],"w":0,"d":[0],"coeffs":[{"m":[[0]],"n":[[0]],"p":[[0]],"q":[[0]],"coeff":"1/1"}]}"#);
}

#[test]
fn extraction_examples() {
    let t = |l: &[i64], ww, mu: &[i64], wp, m| Tuple::new(w(l), ww, w(mu), wp, m);
    let cases = [
        (t(&[0, 0], 0, &[0], 0, 0), -1),
        (t(&[0, -1], 0, &[1], 0, 0), 1),
        (t(&[1, 0], 0, &[0], 1, -1), -1),
        (t(&[1, 0], 1, &[0], -1, 0), 1),
    ];
    for (tp, c) in cases {
        assert_eq!(extract_cm(&tp, Exec::Sequential).unwrap(), int(c), "{tp:?}");
        assert_eq!(closed_form(&tp), int(c));
    }
    let bad = t(&[1, 0], 1, &[0], 1, 0);
    assert!(matches!(extract_cm(&bad, Exec::Sequential), Err(ArchError::NotCritical { .. })));
    assert_eq!(bad.check().unwrap_err().code(), "E_NOT_CRITICAL");
}

#[test]
fn pairing_lies_on_invariant_line() {
    let tp = Tuple::new(w(&[1, 0, -1]), 0, w(&[1, 0]), 0, 0);
    let v = psi_pairing(&tp, Exec::Sequential).unwrap();
    let line = invariant_line(&tp.d(), &tp.d_prime()).unwrap();
    assert_eq!(v.coords.len(), line.coords.len());
    let c = proportionality(&v, &line).unwrap();
    assert_eq!(v, line.scaled(&c));
    let mut off = v.clone();
    assert!(v.coords.len() > 1);
    let k = off.coords.keys().next_back().unwrap().clone();
    off.coords.insert(k, int(17));
    assert!(matches!(proportionality(&off, &line), Err(ArchError::Proportionality(_))));
}

#[test]
fn rank_two_grid() {
    let mut count = 0;
    for a in -1..=2i64 {
        for s in 0..=3 {
            let l = w(&[a, a - s]);
            for ww in -1..=2 {
                for wp in -1..=2 {
                    for tp in critical_tuples(&l, ww, wp) {
                        let c = extract_cm(&tp, Exec::Sequential).unwrap();
                        assert_eq!(c, closed_form(&tp), "{tp:?}");
                        assert_eq!(wedge_reduction(&tp).unwrap(), c);
                        count += 1;
                    }
                }
            }
        }
    }
    assert!(count > 200, "{count}");
}

fn rank_three_tuples() -> Vec<Tuple> {
    let mut ts = vec![
        Tuple::new(w(&[1, 0, -1]), 0, w(&[1, 0]), 0, 0),
        Tuple::new(w(&[1, 0, -1]), 0, w(&[0, 0]), 0, 0),
    ];
    for (l, ww, wp) in [(w(&[0, -1, -2]), 0, 0), (w(&[0, -1, -1]), 1, -1), (w(&[0, 0, -2]), -1, 1), (w(&[0, 0, -1]), 2, 0)] {
        ts.extend(critical_tuples(&l, ww, wp).into_iter().take(2));
    }
    ts
}

#[test]
fn rank_three_tuples_match() {
    let ts = rank_three_tuples();
    assert!(ts.len() >= 8);
    for tp in ts {
        let c = extract_cm(&tp, Exec::Parallel { jobs: 2 }).unwrap();
        assert_eq!(c, closed_form(&tp), "{tp:?}");
        assert_eq!(wedge_reduction(&tp).unwrap(), c);
    }
}

#[test]
fn parallel_matches_sequential() {
    let tp = Tuple::new(w(&[1, 0, -1]), 0, w(&[1, 0]), 0, 0);
    let a = psi_pairing(&tp, Exec::Sequential).unwrap();
    let b2 = psi_pairing(&tp, Exec::Parallel { jobs: 3 }).unwrap();
    let c = psi_pairing(&tp, Exec::Parallel { jobs: 0 }).unwrap();
    assert_eq!(a, b2);
    assert_eq!(a, c);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&c).unwrap());
}

#[test]
fn rank_four_sign_differs_from_closed_form() {
    let tp = Tuple::new(w(&[0, 0, 0, 0]), 0, w(&[0, 0, 0]), 0, 0);
    let c = extract_cm(&tp, Exec::Parallel { jobs: 0 }).unwrap();
    assert_eq!(c, wedge_reduction(&tp).unwrap());
    assert_eq!(c, int(-1));
    assert_eq!(closed_form(&tp), int(1));
}

#[test]
fn critical_tuples_are_admissible() {
    let l = w(&[2, 0, -1]);
    let ts = critical_tuples(&l, 1, 0);
    assert!(!ts.is_empty());
    for t in &ts {
        t.check().unwrap();
    }
    assert!(critical_tuples(&w(&[1]), 0, 0).is_empty());
    let zero = critical_tuples(&w(&[0, 0]), 0, 0);
    assert_eq!(zero, vec![Tuple::new(w(&[0, 0]), 0, w(&[0]), 0, 0)]);
}

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_n_shift_invariance(
        nu in prop::collection::vec(rat(), 1..5),
        d in prop::collection::vec(-4i64..=4, 4),
        s in rat(),
        l in -3i64..=3,
    ) {
        let n = nu.len();
        let d = &d[..n];
        let base = gamma_n_factor(&nu, d).unwrap();
        let nu2: Vec<Rational> = nu.iter().map(|x| x + &s).collect();
        let d2: Vec<i64> = d.iter().map(|x| x + l).collect();
        prop_assert_eq!(gamma_n_factor(&nu2, &d2).unwrap(), base.clone());
        prop_assert_eq!(base.len(), n * (n - 1) / 2);
    }

    #[test]
    fn l_factor_permutation_invariance(
        pairs in prop::collection::vec((-4i64..=4, rat()), 2..5),
        rot in 0usize..4,
        swap in 0usize..4,
    ) {
        let n = pairs.len();
        let d: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        let nu: Vec<Rational> = pairs.iter().map(|p| p.1.clone()).collect();
        let dp: Vec<i64> = d[..n - 1].iter().map(|x| x - 1).collect();
        let nup: Vec<Rational> = nu[1..].to_vec();
        let base = l_factor_arch(&d, &nu, &dp, &nup).unwrap();
        prop_assert_eq!(base.len(), n * (n - 1));
        let mut idx: Vec<usize> = (0..n).collect();
        idx.rotate_left(rot % n);
        let d2: Vec<i64> = idx.iter().map(|&i| d[i]).collect();
        let nu2: Vec<Rational> = idx.iter().map(|&i| nu[i].clone()).collect();
        let mut jdx: Vec<usize> = (0..n - 1).collect();
        let k = swap % (n - 1);
        jdx.swap(0, k);
        let dp2: Vec<i64> = jdx.iter().map(|&j| dp[j]).collect();
        let nup2: Vec<Rational> = jdx.iter().map(|&j| nup[j].clone()).collect();
        prop_assert_eq!(l_factor_arch(&d2, &nu2, &dp2, &nup2).unwrap(), base);
    }

    #[test]
    fn gaussian_powers(k in -12i64..=12, j in -12i64..=12) {
        for eps in [Epsilon::Plus, Epsilon::Minus] {
            let a = GaussianRational::eps_i_pow(eps, k);
            let b2 = GaussianRational::eps_i_pow(eps, j);
            prop_assert_eq!(&a * &b2, GaussianRational::eps_i_pow(eps, k + j));
            prop_assert_eq!(a.conj(), GaussianRational::eps_i_pow(eps.flip(), k));
            prop_assert!(!a.is_zero());
        }
    }
}
