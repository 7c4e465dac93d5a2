use serde::{Deserialize, Serialize};

use crate::ball::{OrbitBall, DEFAULT_NODE_CAP};
use crate::coset::Coset;
use crate::error::{Error, Result};

use super::genset::GenSet;
use super::operator::{norm_lower_bound, SparseOperator};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KestenOptions {
    pub iterations: usize,
    pub tol: f64,
    pub cap: usize,
}

impl Default for KestenOptions {
    fn default() -> Self {
        KestenOptions {
            iterations: 20_000,
            tol: 1e-13,
            cap: DEFAULT_NODE_CAP,
        }
    }
}

/// Lower bounds on the Markov operator norm over growing balls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralProfile {
    pub generators: String,
    pub base: Coset,
    pub radii: Vec<usize>,
    pub estimates: Vec<f64>,
    pub nodes: Vec<usize>,
}

impl SpectralProfile {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("radius,nodes,estimate\n");
        for ((r, n), e) in self.radii.iter().zip(&self.nodes).zip(&self.estimates) {
            out.push_str(&format!("{r},{n},{e:.12}\n"));
        }
        out
    }

    pub fn last(&self) -> Option<f64> {
        self.estimates.last().copied()
    }
}

/// Builds one ball at the largest radius and reads every smaller radius off
/// its breadth-first prefix.
///
/// The ball of radius `r - 1` sits inside the ball of radius `r`, so any
/// vector certifying a bound at `r - 1` also certifies it at `r`; the
/// reported sequence is the running maximum and therefore nondecreasing.
pub fn kesten_profile(base: &Coset, gens: &GenSet, radii: &[usize], opts: KestenOptions) -> Result<SpectralProfile> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("radii must be strictly increasing".into()));
    }
    let max_radius = radii.last().copied().unwrap_or(0);
    let ball = OrbitBall::build(base.clone(), gens.elements(), max_radius, opts.cap)?;
    let mut estimates = Vec::with_capacity(radii.len());
    let mut nodes = Vec::with_capacity(radii.len());
    let mut best = 0.0f64;
    for &r in radii {
        let prefix = ball.len_within(r);
        let op = SparseOperator::markov_within(&ball, prefix)?;
        best = best.max(norm_lower_bound(&op, opts.iterations, opts.tol));
        estimates.push(best);
        nodes.push(prefix);
    }
    Ok(SpectralProfile {
        generators: gens.to_string(),
        base: base.clone(),
        radii: radii.to_vec(),
        estimates,
        nodes,
    })
}
