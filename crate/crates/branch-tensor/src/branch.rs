use crate::error::BranchError;
use gt_core::{interlaces, RepVector, Weight};

fn check(lambda: &Weight, mu: &Weight) -> Result<(), BranchError> {
    if !interlaces(lambda, mu)? {
        return Err(BranchError::NotInterlacing {
            lambda: lambda.0.clone(),
            mu: mu.0.clone(),
        });
    }
    Ok(())
}

fn expect_module(v: &RepVector, w: &Weight) -> Result<(), BranchError> {
    if v.lambda != *w {
        return Err(BranchError::WrongModule {
            expected: w.0.clone(),
            got: v.lambda.0.clone(),
        });
    }
    Ok(())
}

/// `ξ_M ↦ ξ_{M[λ]}` from `V_μ` into `V_λ`.
pub fn branch_inject(lambda: &Weight, mu: &Weight, v: &RepVector) -> Result<RepVector, BranchError> {
    check(lambda, mu)?;
    expect_module(v, mu)?;
    let mut out = RepVector::zero(lambda);
    for (m, c) in &v.coords {
        out.add_term(m.stack(lambda)?, c.clone());
    }
    Ok(out)
}

/// `ξ_M ↦ ξ_{M̂}` when `M̂ ∈ G(μ)`, else `0`.
pub fn branch_restrict(lambda: &Weight, mu: &Weight, v: &RepVector) -> Result<RepVector, BranchError> {
    check(lambda, mu)?;
    expect_module(v, lambda)?;
    let mut out = RepVector::zero(mu);
    for (m, c) in &v.coords {
        let h = m.hat();
        if h.top() == *mu {
            out.add_term(h, c.clone());
        }
    }
    Ok(out)
}
