use crate::error::GtError;
use crate::pattern::GTPattern;
use crate::weight::Weight;

/// All of `G(λ)`, largest first in the lexicographic order (so `H(λ)` leads).
pub fn enumerate_patterns(lambda: &Weight) -> Result<Vec<GTPattern>, GtError> {
    if !lambda.is_dominant() {
        return Err(GtError::InvalidWeight(lambda.0.clone()));
    }
    let n = lambda.len();
    let mut out = Vec::new();
    let mut flat = lambda.0.clone();
    descend(n, n, 0, &mut flat, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Fill row `j−1` below the row of length `j` that starts at `above`.
fn descend(n: usize, j: usize, above: usize, flat: &mut Vec<i64>, out: &mut Vec<GTPattern>) {
    if j <= 1 {
        out.push(GTPattern::from_flat(n, flat.clone()));
        return;
    }
    let start = flat.len();
    fill(n, j, above, 0, start, flat, out);
}

fn fill(
    n: usize,
    j: usize,
    above: usize,
    i: usize,
    start: usize,
    flat: &mut Vec<i64>,
    out: &mut Vec<GTPattern>,
) {
    if i == j - 1 {
        descend(n, j - 1, start, flat, out);
        return;
    }
    let hi = flat[above + i];
    let lo = flat[above + i + 1];
    for v in lo..=hi {
        flat.push(v);
        fill(n, j, above, i + 1, start, flat, out);
        flat.pop();
    }
}

/// Patterns of `G(λ)` whose weight is `γ`.
pub fn patterns_of_weight(lambda: &Weight, gamma: &Weight) -> Result<Vec<GTPattern>, GtError> {
    Ok(enumerate_patterns(lambda)?
        .into_iter()
        .filter(|p| &p.weight() == gamma)
        .collect())
}
