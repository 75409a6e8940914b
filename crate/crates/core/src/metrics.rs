//! Information content of composition chains.
//!
//! `I(R) = 1 − |R|/|Rel|` measures how much a relation says. The averages
//! `I_C^k` and `O_C^k` are taken over all `|Rel|^(k+1)` chains of base
//! relations `r0 ⋄ r1 ⋄ … ⋄ rk`, composed left to right. Chains with the same
//! result are merged into one weighted bucket, so the work per step is the
//! number of distinct results times `|Rel|`, not the number of chains.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::calculus::CalculusSpec;
use crate::error::MetricsError;
use crate::relation::Relation;

/// Default cap on distinct relations in a chain distribution.
pub const DEFAULT_BUCKET_CAP: usize = 1 << 20;

/// `1 − |R|/|Rel|`.
pub fn information_content(r: &Relation, calc: &CalculusSpec) -> f64 {
    1.0 - r.len() as f64 / calc.len() as f64
}

/// `|A ∩ B| / |Rel|`.
pub fn overlap(a: &Relation, b: &Relation, calc: &CalculusSpec) -> f64 {
    a.intersection_len(b) as f64 / calc.len() as f64
}

/// Results of all chains of `k` compositions with their share of chains.
#[derive(Debug, Clone)]
pub struct ChainDistribution {
    pub k: usize,
    /// Buckets sorted by relation, weights summing to 1.
    pub buckets: Vec<(Relation, f64)>,
}

impl ChainDistribution {
    /// `k = 0`: every base relation with weight `1/|Rel|`.
    pub fn initial(calc: &CalculusSpec) -> Self {
        let w = 1.0 / calc.len() as f64;
        ChainDistribution {
            k: 0,
            buckets: (0..calc.len()).map(|i| (calc.base(i), w)).collect(),
        }
    }

    /// Composes every bucket with every base relation on the right.
    pub fn step(&self, calc: &CalculusSpec, cap: usize) -> Result<Self, MetricsError> {
        let n = calc.len();
        let w_step = 1.0 / n as f64;
        let partial: Vec<HashMap<Relation, f64>> = self
            .buckets
            .par_chunks(64)
            .map(|chunk| {
                let mut acc: HashMap<Relation, f64> = HashMap::new();
                for (rel, w) in chunk {
                    for t in 0..n {
                        let next = calc.compose(rel, &calc.base(t));
                        *acc.entry(next).or_insert(0.0) += w * w_step;
                    }
                }
                acc
            })
            .collect();
        let mut merged: HashMap<Relation, f64> = HashMap::new();
        for map in partial {
            for (rel, w) in map {
                *merged.entry(rel).or_insert(0.0) += w;
            }
            if merged.len() > cap {
                return Err(MetricsError::Capacity { k: self.k + 1, cap });
            }
        }
        let mut buckets: Vec<(Relation, f64)> = merged.into_iter().collect();
        buckets.sort_by(|a, b| a.0.cmp(&b.0));
        let total: f64 = buckets.iter().map(|(_, w)| w).sum();
        for (_, w) in buckets.iter_mut() {
            *w /= total;
        }
        Ok(ChainDistribution {
            k: self.k + 1,
            buckets,
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.buckets.iter().map(|(_, w)| w).sum()
    }

    pub fn weight_of(&self, r: &Relation) -> f64 {
        self.buckets
            .binary_search_by(|(b, _)| b.cmp(r))
            .map_or(0.0, |i| self.buckets[i].1)
    }

    /// `Σ w · I(R)`.
    pub fn avg_information(&self, calc: &CalculusSpec) -> f64 {
        self.buckets
            .iter()
            .map(|(r, w)| w * information_content(r, calc))
            .sum()
    }

    /// `Σ_{A,B} w_A · w_B · |A ∩ B| / |Rel|`, computed per base relation as
    /// `Σ_r (Σ_{A ∋ r} w_A)² / |Rel|`.
    pub fn avg_overlap(&self, calc: &CalculusSpec) -> f64 {
        let n = calc.len();
        let mut mass = vec![0.0; n];
        for (r, w) in &self.buckets {
            for i in r {
                mass[i] += w;
            }
        }
        mass.iter().map(|m| m * m).sum::<f64>() / n as f64
    }
}

/// Distribution after `k` compositions.
pub fn chain_distribution(calc: &CalculusSpec, k: usize) -> Result<ChainDistribution, MetricsError> {
    chain_distribution_capped(calc, k, DEFAULT_BUCKET_CAP)
}

pub fn chain_distribution_capped(calc: &CalculusSpec, k: usize, cap: usize) -> Result<ChainDistribution, MetricsError> {
    let mut d = ChainDistribution::initial(calc);
    for _ in 0..k {
        d = d.step(calc, cap)?;
    }
    Ok(d)
}

/// `I_C^k`.
pub fn avg_information(calc: &CalculusSpec, k: usize) -> Result<f64, MetricsError> {
    Ok(chain_distribution(calc, k)?.avg_information(calc))
}

/// `O_C^k`.
pub fn avg_overlap(calc: &CalculusSpec, k: usize) -> Result<f64, MetricsError> {
    Ok(chain_distribution(calc, k)?.avg_overlap(calc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    MaxK,
    Threshold,
    Capacity,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsSeries {
    pub calculus: String,
    /// `I_C^k` for `k = 0, 1, …`, as fractions.
    pub information: Vec<f64>,
    /// `O_C^k`, same length as `information`.
    pub overlap: Vec<f64>,
    pub stop_reason: StopReason,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub max_k: usize,
    /// Stop once `I_C^k` falls below this fraction; the value itself is kept.
    pub stop_below: f64,
    pub bucket_cap: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            max_k: 14,
            stop_below: 0.005,
            bucket_cap: DEFAULT_BUCKET_CAP,
        }
    }
}

/// `I_C^k` and `O_C^k` for `k = 0..=max_k`, stopping early below the threshold
/// or when the distribution outgrows the bucket cap.
pub fn metrics_series(calc: &CalculusSpec, opts: &SeriesOptions) -> MetricsSeries {
    let mut series = MetricsSeries {
        calculus: calc.name().to_string(),
        information: Vec::new(),
        overlap: Vec::new(),
        stop_reason: StopReason::MaxK,
    };
    let mut d = ChainDistribution::initial(calc);
    loop {
        let info = d.avg_information(calc);
        series.information.push(info);
        series.overlap.push(d.avg_overlap(calc));
        if info < opts.stop_below {
            series.stop_reason = StopReason::Threshold;
            break;
        }
        if d.k >= opts.max_k {
            break;
        }
        match d.step(calc, opts.bucket_cap) {
            Ok(next) => d = next,
            Err(_) => {
                series.stop_reason = StopReason::Capacity;
                break;
            }
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_calculus;

    #[test]
    fn information_extremes() {
        let allen = builtin_calculus("allen").unwrap();
        assert_eq!(information_content(&allen.universal(), &allen), 0.0);
        assert_eq!(information_content(&allen.empty_relation(), &allen), 1.0);
        assert!((information_content(&allen.base(3), &allen) - 12.0 / 13.0).abs() < 1e-15);
    }

    #[test]
    fn point_calculus_k1_buckets() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let d = chain_distribution(&pc, 1).unwrap();
        let w = |names: &[&str]| d.weight_of(&pc.relation(names).unwrap());
        assert!((w(&["<"]) - 3.0 / 9.0).abs() < 1e-12);
        assert!((w(&[">"]) - 3.0 / 9.0).abs() < 1e-12);
        assert!((w(&["="]) - 1.0 / 9.0).abs() < 1e-12);
        assert!((w(&["<", "=", ">"]) - 2.0 / 9.0).abs() < 1e-12);
        assert!((d.avg_overlap(&pc) - 59.0 / 243.0).abs() < 1e-12);
    }

    #[test]
    fn point_calculus_first_values() {
        let pc = builtin_calculus("point-calculus").unwrap();
        assert!((avg_information(&pc, 0).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((avg_information(&pc, 1).unwrap() - 14.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn all_universal_collapses() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let flat = pc.with_composition(vec![pc.universal(); 9]).unwrap();
        let d = chain_distribution(&flat, 2).unwrap();
        assert_eq!(d.buckets.len(), 1);
        assert!(d.buckets[0].0.is_universal());
        assert!((d.buckets[0].1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn series_shape() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let s = metrics_series(&pc, &SeriesOptions { max_k: 0, ..Default::default() });
        assert_eq!(s.information.len(), 1);
        assert_eq!(s.stop_reason, StopReason::MaxK);
        let rcc5 = builtin_calculus("rcc5").unwrap();
        let s = metrics_series(&rcc5, &SeriesOptions::default());
        assert_eq!(s.stop_reason, StopReason::Threshold);
        assert!(*s.information.last().unwrap() < 0.005);
        assert_eq!(s.information.len(), s.overlap.len());
    }

    #[test]
    fn capacity_is_reported() {
        let allen = builtin_calculus("allen").unwrap();
        assert!(matches!(
            chain_distribution_capped(&allen, 3, 5),
            Err(MetricsError::Capacity { k: 1, cap: 5 })
        ));
        let s = metrics_series(&allen, &SeriesOptions { bucket_cap: 5, ..Default::default() });
        assert_eq!(s.stop_reason, StopReason::Capacity);
        assert_eq!(s.information.len(), 1);
    }
}
