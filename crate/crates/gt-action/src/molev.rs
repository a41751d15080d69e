use crate::error::ActionError;
use crate::matrix::matrix_e;
use gt_core::lie::{apply_dminus, apply_dplus, LieModule};
use gt_core::{GTPattern, Rational, RepVector, Weight};

/// `V_λ` in ξ-coordinates as a [`LieModule`].
#[derive(Debug, Clone)]
pub struct RepModule {
    pub lambda: Weight,
}

impl RepModule {
    pub fn new(lambda: &Weight) -> Result<Self, ActionError> {
        if !lambda.is_dominant() {
            return Err(gt_core::GtError::InvalidWeight(lambda.0.clone()).into());
        }
        Ok(RepModule {
            lambda: lambda.clone(),
        })
    }
}

impl LieModule for RepModule {
    type Vector = RepVector;

    fn rank(&self) -> usize {
        self.lambda.len()
    }

    fn zero(&self) -> RepVector {
        RepVector::zero(&self.lambda)
    }

    fn is_zero(&self, v: &RepVector) -> bool {
        v.is_zero()
    }

    fn add_assign(&self, acc: &mut RepVector, v: &RepVector) {
        acc.add_scaled(v, &Rational::from_integer(1.into()));
    }

    fn scale(&self, v: &RepVector, c: &Rational) -> RepVector {
        v.scaled(c)
    }

    fn act(&self, i: usize, j: usize, v: &RepVector) -> RepVector {
        matrix_e(&self.lambda, i, j)
            .expect("generator index within rank")
            .apply(v)
    }

    fn weight_components(&self, v: &RepVector) -> Vec<(Weight, RepVector)> {
        v.weight_components()
    }
}

fn check(lambda: &Weight, m: &GTPattern, v: &RepVector) -> Result<RepModule, ActionError> {
    if m.top() != *lambda || !m.is_valid() {
        return Err(gt_core::GtError::InvalidPattern(format!("{m} is not in G{lambda}")).into());
    }
    if v.lambda != *lambda {
        return Err(ActionError::WrongModule {
            expected: lambda.0.clone(),
            got: v.lambda.0.clone(),
        });
    }
    RepModule::new(lambda)
}

/// `τ_λ(𝒟⁻_M) v`.
pub fn apply_dminus_rep(lambda: &Weight, m: &GTPattern, v: &RepVector) -> Result<RepVector, ActionError> {
    let module = check(lambda, m, v)?;
    Ok(apply_dminus(&module, m, v))
}

/// `τ_λ(𝒟⁺_M) v`.
pub fn apply_dplus_rep(lambda: &Weight, m: &GTPattern, v: &RepVector) -> Result<RepVector, ActionError> {
    let module = check(lambda, m, v)?;
    Ok(apply_dplus(&module, m, v))
}
