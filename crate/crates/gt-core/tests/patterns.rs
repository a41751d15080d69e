use gt_core::family::single_critical_range;
use gt_core::rational::{frac, int};
use gt_core::*;
use proptest::prelude::*;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn pat(s: &str) -> GTPattern {
    GTPattern::parse(s).unwrap()
}

#[test]
fn small_enumerations() {
    let ps = enumerate_patterns(&w(&[1, 0])).unwrap();
    let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["(1,0;1)", "(1,0;0)"]);
    assert_eq!(enumerate_patterns(&w(&[1, 0, 0])).unwrap().len(), 3);
    let mids: Vec<i64> = enumerate_patterns(&w(&[2, 0]))
        .unwrap()
        .iter()
        .map(|p| p.m(1, 1))
        .collect();
    assert_eq!(mids, [2, 1, 0]);
    assert!(matches!(
        enumerate_patterns(&w(&[0, 1])),
        Err(GtError::InvalidWeight(_))
    ));
}

#[test]
fn enumeration_leads_with_highest_pattern() {
    let l = w(&[2, 1, -1]);
    let ps = enumerate_patterns(&l).unwrap();
    assert_eq!(ps[0], GTPattern::extremal(&l));
    assert!(ps.windows(2).all(|p| p[0] > p[1]));
}

#[test]
fn statistics_of_a_small_pattern() {
    let m = pat("(2,0;1)");
    assert_eq!(m.weight(), w(&[1, 1]));
    assert_eq!(m.r(), frac(1, 2));
    assert_eq!(m.q(), 1);
    assert_eq!(m.r1(), int(2));
    assert_eq!(m.r2(), int(1));
    assert_eq!(m.dual().to_string(), "(0,-2;-1)");
    assert_eq!(m.shift(-1).to_string(), "(1,-1;0)");
    assert_eq!(GTPattern::extremal(&w(&[2, 1, 0])).q(), 5);
}

#[test]
fn r1_r2_for_size_two_by_hand() {
    for p in enumerate_patterns(&w(&[3, -1])).unwrap() {
        assert_eq!(p.r2(), int(factorial_i(p.m(1, 2) - p.m(1, 1))));
        let top = factorial_i(p.m(1, 2) - p.m(2, 2));
        let bottom = factorial_i(p.m(1, 1) - p.m(2, 2));
        assert_eq!(p.r1(), int(top / bottom));
    }
}

fn factorial_i(k: i64) -> i64 {
    (1..=k).product()
}

#[test]
fn extremal_patterns() {
    let l = w(&[2, 0]);
    let h = GTPattern::extremal_checked(&l, &w(&[0, 2])).unwrap();
    assert_eq!(h.to_string(), "(2,0;0)");
    assert!(GTPattern::extremal_checked(&l, &w(&[1, 1])).is_err());
    assert_eq!(GTPattern::extremal(&l).rows(), vec![vec![2, 0], vec![2]]);
}

#[test]
fn interlacing_examples() {
    assert!(interlaces(&w(&[1, 0]), &w(&[0])).unwrap());
    assert!(!interlaces(&w(&[1, 0]), &w(&[2])).unwrap());
    assert!(interlaces(&w(&[1, 0]).dual(), &w(&[0]).shift(0)).unwrap());
    assert!(interlaces(&w(&[1, 0]), &w(&[0, 0])).is_err());
}

#[test]
fn weyl_dimension_examples() {
    assert_eq!(weyl_dim(&w(&[1, 0, 0])), 3);
    assert_eq!(weyl_dim(&w(&[2, 0])), 3);
    assert_eq!(weyl_dim(&w(&[1, 0, -1])), 8);
}

#[test]
fn critical_points_examples() {
    let lf = EmbeddingWeightFamily::uniform(2, &w(&[1, 0])).unwrap();
    let mf = EmbeddingWeightFamily::uniform(2, &w(&[0])).unwrap();
    assert_eq!(critical_points(&lf, &mf).unwrap(), Some((-1, 0)));
    let lf = EmbeddingWeightFamily::uniform(1, &w(&[0, 0])).unwrap();
    let mf = EmbeddingWeightFamily::uniform(1, &w(&[5])).unwrap();
    assert_eq!(critical_points(&lf, &mf).unwrap(), Some((-5, -5)));
    let other = EmbeddingWeightFamily::uniform(2, &w(&[5])).unwrap();
    assert_eq!(critical_points(&lf, &other), Err(GtError::LabelMismatch));
}

#[test]
fn purity_weight_examples() {
    let f = EmbeddingWeightFamily::uniform(1, &w(&[1, 0, -1])).unwrap();
    assert_eq!(f.purity_weight(), Some(0));
    let f = EmbeddingWeightFamily::new(vec![(
        "s".into(),
        w(&[2, 0]),
        "t".into(),
        w(&[1, -1]),
    )])
    .unwrap();
    assert_eq!(f.purity_weight(), Some(1));
    let f = EmbeddingWeightFamily::new(vec![(
        "s".into(),
        w(&[2, 0]),
        "t".into(),
        w(&[1, 0]),
    )])
    .unwrap();
    assert_eq!(f.purity_weight(), None);
}

#[test]
fn pattern_json_round_trip() {
    let m = pat("(2,1,-1;2,0;1)");
    let s = serde_json::to_string(&m).unwrap();
    assert_eq!(s, "[[2,1,-1],[2,0],[1]]");
    let back: GTPattern = serde_json::from_str(&s).unwrap();
    assert_eq!(back, m);
    assert!(serde_json::from_str::<GTPattern>("[[0,1],[0]]").is_err());
}

fn dominant(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    (1..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(lo..=hi, n))
        .prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Weight(v)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_matches_weyl(l in dominant(5, -2, 2)) {
        prop_assert_eq!(enumerate_patterns(&l).unwrap().len() as u128, weyl_dim(&l));
    }

    #[test]
    fn dual_identities(l in dominant(4, -2, 2)) {
        for m in enumerate_patterns(&l).unwrap() {
            let d = m.dual();
            prop_assert!(d.is_valid());
            prop_assert_eq!(d.weight(), m.weight().neg());
            prop_assert_eq!(d.r(), m.r());
            prop_assert_eq!(d.q(), -m.q());
            prop_assert_eq!(d.dual(), m.clone());
            prop_assert_eq!(d.top(), l.dual());
        }
    }

    #[test]
    fn extremal_is_unique_of_its_weight(l in dominant(4, -2, 2), seed in any::<u64>()) {
        let mut g = l.0.clone();
        let mut s = seed;
        for i in (1..g.len()).rev() {
            g.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let g = Weight(g);
        let h = GTPattern::extremal_checked(&l, &g).unwrap();
        let hits = patterns_of_weight(&l, &g).unwrap();
        prop_assert_eq!(hits, vec![h.clone()]);
        prop_assert_eq!(h.r(), int(1));
    }

    #[test]
    fn shift_preserves_statistics(l in dominant(4, -2, 2), k in -3i64..=3) {
        for m in enumerate_patterns(&l).unwrap() {
            let s = m.shift(k);
            prop_assert!(s.is_valid());
            prop_assert_eq!(s.r(), m.r());
            prop_assert_eq!(s.r1(), m.r1());
            prop_assert_eq!(s.r2(), m.r2());
        }
    }

    #[test]
    fn critical_interval_matches_scan(
        places in prop::collection::vec((dominant(3, -4, 4), dominant(2, -4, 4)), 1..4),
    ) {
        let n = places[0].0.len().max(2);
        let fit = |v: &Weight, len: usize| {
            let mut e = v.0.clone();
            e.resize(len, *v.0.last().unwrap());
            Weight(e)
        };
        let lam = places
            .iter()
            .enumerate()
            .map(|(k, (l, _))| (format!("s{k}"), fit(l, n), format!("t{k}"), fit(l, n).dual()))
            .collect();
        let mu = places
            .iter()
            .enumerate()
            .map(|(k, (_, m))| {
                (format!("s{k}"), fit(m, n - 1), format!("t{k}"), fit(m, n - 1).dual())
            })
            .collect();
        let lf = EmbeddingWeightFamily::new(lam).unwrap();
        let mf = EmbeddingWeightFamily::new(mu).unwrap();
        let got = critical_points(&lf, &mf).unwrap();
        let scan: Vec<i64> = (-50..=50)
            .filter(|&m| {
                lf.labels().all(|s| {
                    let l = lf.weight(s).unwrap();
                    interlaces(&l.dual(), &mf.weight(s).unwrap().shift(m)).unwrap()
                })
            })
            .collect();
        match got {
            None => prop_assert!(scan.is_empty()),
            Some((a, b)) => prop_assert_eq!(scan, (a..=b).collect::<Vec<_>>()),
        }
    }

    #[test]
    fn single_range_is_contiguous(l in dominant(4, -3, 3), mv in prop::collection::vec(-3i64..=3, 3)) {
        let n = l.len();
        prop_assume!(n >= 2);
        let mut mu = mv[..n - 1].to_vec();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Weight(mu);
        let (lo, hi) = single_critical_range(&l, &mu);
        for m in -20..=20 {
            let ok = interlaces(&l.dual(), &mu.shift(m)).unwrap();
            prop_assert_eq!(ok, lo <= m && m <= hi);
        }
    }
}
