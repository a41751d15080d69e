use det_model::generators::{inversion_count, permute_family};
use det_model::matrices::{diagonal, identity, longest, mul, permutation, unipotent};
use det_model::*;
use gt_core::rational::{frac, int};
use gt_core::{enumerate_patterns, GTPattern, Rational, RepVector, Weight};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn pat(s: &str) -> GTPattern {
    GTPattern::parse(s).unwrap()
}

fn mono(n: usize, pairs: &[((usize, usize), u32)]) -> PolyVector {
    let mut e = vec![0; n * n];
    for &((r, c), d) in pairs {
        e[(r - 1) * n + c - 1] = d;
    }
    let mut p = PolyVector::zero(n, 0);
    p.add_term(e, Rational::one());
    p
}

#[test]
fn generators_in_rank_two() {
    let l = w(&[2, 0]);
    assert_eq!(generator_f(&l, &h_lambda(&l)).unwrap(), mono(2, &[((1, 1), 2)]));
    let hm = h_lambda_mu(&l, &w(&[1]));
    assert_eq!(generator_f(&l, &hm).unwrap(), mono(2, &[((1, 1), 1), ((1, 2), 1)]));
    let l1 = w(&[3]);
    assert_eq!(generator_f(&l1, &h_lambda(&l1)).unwrap().det_offset, 3);
    let mut bad = ExponentFamily::new();
    bad.insert(vec![1], 1);
    assert!(matches!(generator_f(&l, &bad), Err(DetError::InvalidExponent(_))));
}

#[test]
fn elementary_action_examples() {
    let p = mono(2, &[((1, 1), 1), ((1, 2), 1)]);
    assert_eq!(p.act_elementary(1, 1).unwrap(), p);
    assert_eq!(p.act_elementary(1, 2).unwrap(), mono(2, &[((1, 1), 2)]));
    let q = mono(2, &[((1, 1), 2)]);
    assert_eq!(q.act_elementary(2, 1).unwrap(), p.scaled(&int(2)));
    assert!(p.act_elementary(3, 1).is_err());
}

#[test]
fn group_action_examples() {
    let q = mono(2, &[((1, 1), 2)]);
    assert_eq!(q.act_group(&identity(2)).unwrap(), q);
    assert_eq!(q.act_group(&longest(2)).unwrap(), mono(2, &[((1, 2), 2)]));
    let p = mono(2, &[((1, 1), 1), ((1, 2), 1)]);
    let g = diagonal(&[int(3), frac(1, 2)]);
    assert_eq!(p.act_group(&g).unwrap(), p.scaled(&frac(3, 2)));
    let mut sing = identity(2);
    sing[1][1] = int(0);
    assert_eq!(p.act_group(&sing), Err(DetError::Singular));
}

#[test]
fn determinant_power_is_folded_into_coefficients() {
    let mut p = PolyVector::one(2);
    p.det_offset = 2;
    let g = diagonal(&[int(2), int(3)]);
    assert_eq!(p.act_group(&g).unwrap(), p.scaled(&int(36)));
}

#[test]
fn xi_polynomials_in_rank_two() {
    let l = w(&[2, 0]);
    assert_eq!(
        xi_polynomial(&l, &pat("(2,0;1)")).unwrap(),
        mono(2, &[((1, 1), 1), ((1, 2), 1)])
    );
    assert_eq!(xi_polynomial(&l, &pat("(2,0;2)")).unwrap(), mono(2, &[((1, 1), 2)]));
    // ξ_{(λ1,λ2;μ1)} = z11^{μ1−λ2} z12^{λ1−μ1} det^{λ2}
    let l = w(&[3, -1]);
    for m in enumerate_patterns(&l).unwrap() {
        let mu = m.m(1, 1);
        let mut expect = mono(2, &[((1, 1), (mu + 1) as u32), ((1, 2), (3 - mu) as u32)]);
        expect.det_offset = -1;
        assert_eq!(xi_polynomial(&l, &m).unwrap(), expect);
    }
    assert!(xi_polynomial(&l, &pat("(2,0;1)")).is_err());
}

#[test]
fn extremal_vectors_are_generators() {
    for l in [w(&[2, 1, 0]), w(&[1, 1, -1]), w(&[2, 0, 0, -1])] {
        let mut g = l.0.clone();
        g.sort();
        loop {
            let gamma = Weight(g.clone());
            let h = GTPattern::extremal(&gamma);
            assert_eq!(
                xi_polynomial(&l, &h).unwrap(),
                generator_f(&l, &h_gamma(&gamma)).unwrap(),
                "{gamma}"
            );
            if !next_perm(&mut g) {
                break;
            }
        }
    }
}

fn next_perm(p: &mut [i64]) -> bool {
    let n = p.len();
    let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn branching_highest_vectors_are_generators() {
    let l = w(&[2, 1, -1]);
    for mu in [w(&[2, 1]), w(&[1, 0]), w(&[2, -1]), w(&[1, -1])] {
        let m = GTPattern::extremal(&mu).stack(&l).unwrap();
        assert_eq!(
            xi_polynomial(&l, &m).unwrap(),
            generator_f(&l, &h_lambda_mu(&l, &mu)).unwrap()
        );
    }
}

#[test]
fn coordinates_round_trip() {
    let l = w(&[2, 0]);
    let v = mono(2, &[((1, 1), 1), ((1, 2), 1)]);
    assert_eq!(coords_in_xi(&l, &v).unwrap(), RepVector::basis(&pat("(2,0;1)")));
    assert!(coords_in_xi(&l, &PolyVector::zero(2, 0)).unwrap().is_zero());
    let e = xi_polynomial(&l, &pat("(2,0;1)")).unwrap().act_elementary(1, 2).unwrap();
    assert_eq!(coords_in_xi(&l, &e).unwrap(), RepVector::basis(&pat("(2,0;2)")));
    let outside = mono(2, &[((2, 1), 2)]);
    assert_eq!(coords_in_xi(&l, &outside), Err(DetError::NotInModule));
    for l in [w(&[2, 1, 0]), w(&[1, 0, -2]), w(&[3, 1, 0])] {
        for m in enumerate_patterns(&l).unwrap() {
            let p = xi_polynomial(&l, &m).unwrap();
            assert_eq!(coords_in_xi(&l, &p).unwrap(), RepVector::basis(&m));
        }
    }
}

#[test]
fn coordinates_accept_expanded_determinants() {
    // det(z)·z11 is ξ_{H(2,1)} written without a recorded determinant power.
    let l = w(&[2, 1]);
    let mut v = mono(2, &[((1, 1), 1)]);
    v.det_offset = 1;
    let expanded = v.lower_offset(1);
    assert_eq!(expanded.det_offset, 0);
    assert_eq!(
        coords_in_xi(&l, &expanded).unwrap(),
        RepVector::basis(&GTPattern::extremal(&l))
    );
}

#[test]
fn permutation_law_on_generators() {
    let l = w(&[2, 1, -1]);
    let sigmas = [[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 1, 2], [2, 3, 1], [3, 2, 1]];
    for s in sigmas {
        for mu in [w(&[2, 1]), w(&[1, -1]), w(&[2, 0])] {
            let hl = h_lambda_mu(&l, &mu);
            let f = generator_f(&l, &hl).unwrap();
            let img = f.act_group(&permutation(&s)).unwrap();
            let sign = if inversion_count(&hl, &s) % 2 == 0 { 1 } else { -1 };
            let expect = generator_f(&l, &permute_family(&hl, &s)).unwrap().scaled(&int(sign));
            assert_eq!(img, expect, "σ = {s:?}");
        }
    }
}

#[test]
fn determinant_shift_moves_patterns() {
    let l = w(&[2, 1, 0]);
    for m in enumerate_patterns(&l).unwrap() {
        let mut p = xi_polynomial(&l, &m).unwrap();
        p.det_offset -= 2;
        assert_eq!(p, xi_polynomial(&l.shift(-2), &m.shift(-2)).unwrap());
    }
}

#[test]
fn poly_json_shape() {
    let p = mono(2, &[((1, 2), 1)]).scaled(&frac(-1, 2));
    let s = serde_json::to_string(&p).unwrap();
    assert_eq!(s, r#"{"det_offset":0,"terms":[{"exponents":[[0,1],[0,0]],"coeff":"-1/2"}]}"#);
}

fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), n), n).prop_map(|rows| {
        rows.into_iter()
            .map(|r| r.into_iter().map(|(p, q)| frac(p, q)).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cauchy_binet_composition(g in small_matrix(3), h in small_matrix(3), k in 0usize..8) {
        let l = w(&[2, 1, 0]);
        let m = enumerate_patterns(&l).unwrap()[k].clone();
        let v = xi_polynomial(&l, &m).unwrap();
        prop_assume!(!det_model::poly::determinant(&g).is_zero());
        prop_assume!(!det_model::poly::determinant(&h).is_zero());
        let gh = mul(&g, &h);
        let lhs = v.act_group(&gh).unwrap();
        let rhs = v.act_group(&h).unwrap().act_group(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unipotents_stay_in_module(i in 1usize..=3, j in 1usize..=3, t in -2i64..=2, k in 0usize..8) {
        prop_assume!(i != j);
        let l = w(&[2, 1, 0]);
        let m = enumerate_patterns(&l).unwrap()[k].clone();
        let v = xi_polynomial(&l, &m).unwrap().act_group(&unipotent(3, i, j, t)).unwrap();
        prop_assert!(coords_in_xi(&l, &v).is_ok());
    }
}
