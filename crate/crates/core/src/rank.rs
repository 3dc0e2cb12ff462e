use crate::error::{Error, Result};

/// Dense per-node scores.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    scores: Vec<f64>,
    normalized: bool,
}

impl RankVector {
    /// Wraps raw non-negative scores without normalizing them.
    pub fn from_raw(scores: Vec<f64>) -> Result<Self> {
        if let Some((i, s)) = scores.iter().enumerate().find(|(_, s)| !(s.is_finite() && **s >= 0.0)) {
            return Err(Error::param(format!("score {s} of node {i} is negative or not finite")));
        }
        Ok(RankVector {
            scores,
            normalized: false,
        })
    }

    /// Scales raw scores so they sum to one. Fails when the total is zero.
    pub fn normalize(scores: Vec<f64>) -> Result<Self> {
        RankVector::from_raw(scores)?.into_normalized()
    }

    pub fn into_normalized(mut self) -> Result<Self> {
        if self.normalized {
            return Ok(self);
        }
        let total: f64 = self.scores.iter().sum();
        if total <= 0.0 {
            return Err(Error::EmptyField);
        }
        for s in &mut self.scores {
            *s /= total;
        }
        self.normalized = true;
        Ok(self)
    }

    pub(crate) fn normalized_unchecked(scores: Vec<f64>) -> Self {
        RankVector {
            scores,
            normalized: true,
        }
    }

    pub fn uniform(node_count: usize) -> Self {
        RankVector::normalized_unchecked(vec![1.0 / node_count as f64; node_count])
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn into_scores(self) -> Vec<f64> {
        self.scores
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.scores.iter().sum()
    }
}

impl AsRef<[f64]> for RankVector {
    fn as_ref(&self) -> &[f64] {
        &self.scores
    }
}

impl std::ops::Index<usize> for RankVector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.scores[index]
    }
}
