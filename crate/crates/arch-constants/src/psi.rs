use crate::constants::{b, coefc_closed_form};
use crate::error::ArchError;
use crate::exec::{map_reduce, Exec};
use crate::preclass::{add, pre_class_with, weight_d, PreClass};
use branch_tensor::TensorVector;
use gt_core::rational::{fmt_rational, sign_pow};
use gt_core::{enumerate_patterns, interlaces, GTPattern, Rational, RepVector, Weight};
use num_traits::Zero;
use pairings::pair_lambda_mu;
use std::collections::{BTreeMap, HashMap};
use wedge::{inject_2rho_table, s_pairing};

/// A point `(λ, w, μ, w′, m)` of the critical grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tuple {
    pub lambda: Weight,
    pub w: i64,
    pub mu: Weight,
    pub wp: i64,
    pub m: i64,
}

impl Tuple {
    pub fn new(lambda: Weight, w: i64, mu: Weight, wp: i64, m: i64) -> Self {
        Tuple { lambda, w, mu, wp, m }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// `λ^∨ ⪰ μ + m` and `λ − w ⪰ μ^∨ + w′ + m`.
    pub fn check(&self) -> Result<(), ArchError> {
        let n = self.n();
        if n < 2 || self.mu.len() + 1 != n {
            return Err(ArchError::LengthMismatch { expected: n.saturating_sub(1), got: self.mu.len() });
        }
        if !self.lambda.is_dominant() {
            return Err(gt_core::GtError::InvalidWeight(self.lambda.0.clone()).into());
        }
        if !self.mu.is_dominant() {
            return Err(gt_core::GtError::InvalidWeight(self.mu.0.clone()).into());
        }
        let not = |reason: String| ArchError::NotCritical { m: self.m, reason };
        let a = self.mu.shift(self.m);
        if !interlaces(&self.lambda.dual(), &a)? {
            return Err(not(format!("{} does not interlace {}", self.lambda.dual(), a)));
        }
        let l2 = self.lambda.shift(-self.w);
        let b2 = self.mu.dual().shift(self.wp + self.m);
        if !interlaces(&l2, &b2)? {
            return Err(not(format!("{l2} does not interlace {b2}")));
        }
        Ok(())
    }

    pub fn d(&self) -> Weight {
        weight_d(&self.lambda, self.w)
    }

    pub fn d_prime(&self) -> Weight {
        weight_d(&self.mu, self.wp)
    }
}

/// `s_n(I(ξ_N), I(ξ_{N′}))` for all nonzero pairs, keyed by `N′`.
fn wedge_table(n: usize) -> Result<HashMap<GTPattern, Vec<(GTPattern, Rational)>>, ArchError> {
    let big = inject_2rho_table(n);
    let small = inject_2rho_table(n - 1);
    let mut out: HashMap<GTPattern, Vec<(GTPattern, Rational)>> = HashMap::new();
    for (np, wp) in small.iter() {
        for (nn, w) in big.iter() {
            let s = s_pairing(w, wp)?;
            if !s.is_zero() {
                out.entry(np.clone()).or_default().push((nn.clone(), s));
            }
        }
    }
    Ok(out)
}

type Key3 = (GTPattern, GTPattern, GTPattern);

/// `Ψ^{(m)}([π]^pre ⊗ [π′]^pre) ∈ V_d ⊗ V_{d′}`.
pub fn psi_pairing(t: &Tuple, exec: Exec) -> Result<TensorVector, ArchError> {
    t.check()?;
    let pre = pre_class_with(&t.lambda, t.w, exec)?;
    let pre_p = pre_class_with(&t.mu, t.wp, exec)?;
    psi_from_tables(t, &pre, &pre_p, exec)
}

/// [`psi_pairing`] with both pre-classes supplied.
pub fn psi_from_tables(t: &Tuple, pre: &PreClass, pre_p: &PreClass, exec: Exec) -> Result<TensorVector, ArchError> {
    t.check()?;
    let n = t.n();
    let ld = t.lambda.dual();
    let lw = t.lambda.shift(-t.w);
    let mud = t.mu.dual();
    let muw = t.mu.shift(-t.wp);
    // The wedge pairing is the sparsest factor, so it is contracted first.
    let wedge = wedge_table(n)?;
    let mut by_npq: HashMap<Key3, Vec<(&GTPattern, &Rational)>> = HashMap::new();
    for ((m, nn, p, q), c) in &pre.coeffs {
        by_npq.entry((nn.clone(), p.clone(), q.clone())).or_default().push((m, c));
    }
    let mut pair_cache: HashMap<(bool, GTPattern), Option<(GTPattern, Rational)>> = HashMap::new();
    let mut partner = |second: bool, x: &GTPattern| -> Result<Option<(GTPattern, Rational)>, ArchError> {
        if let Some(v) = pair_cache.get(&(second, x.clone())) {
            return Ok(v.clone());
        }
        let (top, lam, mu) = if second { (&lw, &lw, &muw) } else { (&ld, &ld, &mud) };
        let y = x.dual().shift(t.m).stack(top)?;
        let v = pair_lambda_mu(lam, mu, t.m, &RepVector::basis(&y), &RepVector::basis(x))?;
        let r = (!v.is_zero()).then_some((y, v));
        pair_cache.insert((second, x.clone()), r.clone());
        Ok(r)
    };
    // Resolve the GT pairings up front; the outer sum then only reads shared data.
    let mut work = Vec::new();
    for ((mp, np, pp, qp), c) in &pre_p.coeffs {
        let (Some((p, vp)), Some((q, vq))) = (partner(false, pp)?, partner(true, qp)?) else {
            continue;
        };
        let Some(ns) = wedge.get(np) else { continue };
        work.push((mp, c * vp * vq, p, q, ns));
    }
    let coords = map_reduce(
        exec,
        &work,
        BTreeMap::new,
        |acc, (mp, c, p, q, ns)| {
            for (nn, s) in ns.iter() {
                let Some(terms) = by_npq.get(&(nn.clone(), p.clone(), q.clone())) else {
                    continue;
                };
                let f = c * s;
                for (m, cm) in terms {
                    add(acc, ((*m).clone(), (*mp).clone()), &f * *cm);
                }
            }
        },
        |mut a, b| {
            for (k, v) in b {
                add(&mut a, k, v);
            }
            a
        },
    );
    let mut out = TensorVector::zero(&pre.d, &pre_p.d);
    out.coords = coords;
    Ok(out)
}

/// `Σ_{K ∈ G(d′^∨)} (−1)^{q(K)} r(K)^{−1} ξ_{K[d]} ⊗ ξ_{K^∨}`, the invariant line.
pub fn invariant_line(d: &Weight, dp: &Weight) -> Result<TensorVector, ArchError> {
    let mut out = TensorVector::zero(d, dp);
    for k in enumerate_patterns(&dp.dual())? {
        let c = sign_pow(k.q()) / k.r();
        out.add_term(k.stack(d)?, k.dual(), c);
    }
    Ok(out)
}

/// The scalar `c` with `v = c · line`, checked at every coordinate.
pub fn proportionality(v: &TensorVector, line: &TensorVector) -> Result<Rational, ArchError> {
    let Some(((k0, k1), l0)) = line.coords.iter().next() else {
        return Err(ArchError::Proportionality("empty invariant line".into()));
    };
    let c = v.get(k0, k1) / l0;
    if c.is_zero() {
        return Err(ArchError::Proportionality("pairing vanishes on the invariant line".into()));
    }
    for ((a, bb), x) in &v.coords {
        let l = line.get(a, bb);
        if l.is_zero() {
            return Err(ArchError::Proportionality(format!(
                "coordinate ({a}, {bb}) = {} lies off the invariant line",
                fmt_rational(x)
            )));
        }
        if &(x / &l) != &c {
            return Err(ArchError::Proportionality(format!(
                "ratio at ({a}, {bb}) is {}, expected {}",
                fmt_rational(&(x / &l)),
                fmt_rational(&c)
            )));
        }
    }
    if v.coords.len() != line.coords.len() {
        return Err(ArchError::Proportionality("coordinates missing from the pairing".into()));
    }
    Ok(c)
}

/// `c^{(m)}_{λ,w,μ,w′}` from the full pairing.
pub fn extract_cm(t: &Tuple, exec: Exec) -> Result<Rational, ArchError> {
    let v = psi_pairing(t, exec)?;
    proportionality(&v, &invariant_line(&t.d(), &t.d_prime())?)
}

/// `(−1)^{(n−1)w′ + (m+1)b_n + ℓ(μ)}`.
pub fn closed_form(t: &Tuple) -> Rational {
    coefc_closed_form(t.n(), t.wp, t.m, t.mu.total())
}

/// The reduction of `c^{(m)}` to the wedge pairing:
/// `(−1)^{(n−1)w′ + m b_n + ℓ(μ) + n(n−1)(n−2)/6} s_n(I(ξ_{H(2ρ_{n−1})[2ρ_n]}), I(ξ_{H(−2ρ_{n−1})})) / r(H(2ρ_{n−1})[2ρ_n])`.
pub fn wedge_reduction(t: &Tuple) -> Result<Rational, ArchError> {
    let n = t.n();
    let top = Weight::two_rho(n);
    let low = Weight::two_rho(n - 1);
    let h = GTPattern::extremal(&low).stack(&top)?;
    let hm = GTPattern::extremal(&low.neg());
    let s = s_pairing(&inject_2rho_table(n)[&h], &inject_2rho_table(n - 1)[&hm])?;
    let n3 = (n * (n - 1) * (n.saturating_sub(2)) / 6) as i64;
    let e = (n as i64 - 1) * t.wp + t.m * b(n) + t.mu.total() + n3;
    Ok(sign_pow(e) * s / h.r())
}

/// Every `(μ, m)` making `(λ, w, μ, w′, m)` admissible, in increasing `m`
/// then decreasing `μ` order.
pub fn critical_tuples(lambda: &Weight, w: i64, wp: i64) -> Vec<Tuple> {
    let n = lambda.len();
    if n < 2 || !lambda.is_dominant() {
        return Vec::new();
    }
    let ld = lambda.dual();
    let bound = 2 * lambda.0.iter().map(|x| x.abs()).max().unwrap_or(0) + w.abs() + wp.abs() + 2;
    let mut out = Vec::new();
    for m in -bound..=bound {
        // μ_i + m lies between λ^∨_{i+1} and λ^∨_i
        let ranges: Vec<(i64, i64)> = (0..n - 1).map(|i| (ld.0[i + 1] - m, ld.0[i] - m)).collect();
        let mut found = Vec::new();
        let mut cur: Vec<i64> = ranges.iter().map(|r| r.1).collect();
        'outer: loop {
            let t = Tuple::new(lambda.clone(), w, Weight(cur.clone()), wp, m);
            if t.mu.is_dominant() && t.check().is_ok() {
                found.push(t);
            }
            let mut k = n - 1;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                if cur[k] > ranges[k].0 {
                    cur[k] -= 1;
                    for j in k + 1..n - 1 {
                        cur[j] = ranges[j].1;
                    }
                    break;
                }
            }
        }
        out.extend(found);
    }
    out
}
