//! Observed bounding boxes against the guaranteed grid sizes.

use crate::bounds::{self, PiSq};
use crate::error::{Error, Result};
use crate::generate::{generate_random, GenKind, GenParams, SplitMix64};
use crate::pipeline::{draw_graph, DEFAULT_MAX_COORD_BITS};
use crate::verify::Structure;
use serde::Serialize;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchClass {
    Star,
    Tree,
    Balanced,
    /// Cycles of mixed lengths, some of them triangles.
    Cactus,
    /// No triangles: δ = 0.
    CactusNoTriangles,
    /// About n/4 cycles, all triangles.
    CactusTriangles,
}

impl BenchClass {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "star" => BenchClass::Star,
            "tree" => BenchClass::Tree,
            "balanced" => BenchClass::Balanced,
            "cactus" => BenchClass::Cactus,
            "cactus-no-triangles" => BenchClass::CactusNoTriangles,
            "cactus-triangles" => BenchClass::CactusTriangles,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BenchClass::Star => "star",
            BenchClass::Tree => "tree",
            BenchClass::Balanced => "balanced",
            BenchClass::Cactus => "cactus",
            BenchClass::CactusNoTriangles => "cactus-no-triangles",
            BenchClass::CactusTriangles => "cactus-triangles",
        }
    }

    fn instance(self, n: usize) -> (GenKind, GenParams) {
        let base = GenParams::default();
        match self {
            BenchClass::Star => (GenKind::Star, base),
            BenchClass::Tree => (GenKind::Tree, base),
            BenchClass::Balanced => (GenKind::Balanced, base),
            BenchClass::Cactus => (GenKind::Cactus, GenParams { cycles: Some((n - 1) / 10), ..base }),
            BenchClass::CactusNoTriangles => {
                (GenKind::Cactus, GenParams { cycles: Some((n - 1) / 10), triangle_percent: 0, ..base })
            }
            BenchClass::CactusTriangles => {
                (GenKind::Cactus, GenParams { cycles: Some((n - 1) / 4), triangle_percent: 100, ..base })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub class: BenchClass,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    /// t
    pub leaves: u64,
    /// height for trees, diameter for cacti
    pub depth: u64,
    pub cycles: u64,
    pub triangles: u64,
    pub side: u64,
    pub bound: f64,
    pub slack: f64,
    /// side / bound, exact
    pub slack_exact: String,
}

/// Per-trial seed: the first output of SplitMix64 seeded with
/// `seed ⊕ (n ≪ 32) ⊕ trial`.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    SplitMix64::new(seed ^ ((n as u64) << 32) ^ trial as u64).next_u64()
}

/// One row per (n, trial), sorted by n then trial.
pub fn bench_bounds(class: BenchClass, sizes: &[usize], trials: usize, seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(sizes.len() * trials);
    for &n in sizes {
        if n == 0 {
            return Err(Error::Infeasible("sizes must be positive".into()));
        }
        let (kind, params) = class.instance(n);
        for trial in 0..trials {
            let s = trial_seed(seed, n, trial);
            let g = generate_random(kind, n, s, &params)?;
            let drawn = draw_graph(&g.graph, None, DEFAULT_MAX_COORD_BITS)?;
            let (leaves, depth, cycles, triangles) = match &drawn.structure {
                Structure::Star { n } => ((*n as u64).saturating_sub(1), u64::from(*n > 1), 0, 0),
                Structure::Tree { tree, .. } => (tree.leaf_count(), tree.height(), 0, 0),
                Structure::Cactus { decomp, .. } => {
                    (decomp.leaf_count(), decomp.diameter(), decomp.cycle_count(), decomp.triangle_count())
                }
            };
            let side = drawn.drawing.bbox().max_side();
            let slack = bounds::linear_slack(side as u128, &drawn.grid_bound);
            rows.push(BenchRow {
                class,
                n,
                trial,
                seed: s,
                leaves,
                depth,
                cycles,
                triangles,
                side,
                bound: bounds::to_f64(&drawn.grid_bound),
                slack: bounds::to_f64(&slack),
                slack_exact: format!("{}/{}", slack.numer(), slack.denom()),
            });
        }
    }
    rows.sort_by_key(|r| (r.n, r.trial));
    Ok(rows)
}

pub fn write_csv(rows: &[BenchRow], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Format(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Least-squares slope of ln(side) against ln(n) over all rows with a
/// positive side: the fitted growth exponent.
pub fn fit_exponent(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows.iter().filter(|r| r.side > 0).map(|r| ((r.n as f64).ln(), (r.side as f64).ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Worst-case bound of a star, for reference.
pub fn star_bound(n: usize) -> f64 {
    bounds::to_f64(&bounds::star_grid(n as u64, PiSq::Upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, side: u64) -> BenchRow {
        BenchRow {
            class: BenchClass::Tree,
            n,
            trial: 0,
            seed: 0,
            leaves: 0,
            depth: 0,
            cycles: 0,
            triangles: 0,
            side,
            bound: 0.0,
            slack: 0.0,
            slack_exact: String::new(),
        }
    }

    #[test]
    fn exponent_of_exact_powers() {
        let quad: Vec<BenchRow> = [10usize, 20, 40, 80].iter().map(|&n| row(n, (n * n) as u64)).collect();
        assert!((fit_exponent(&quad).unwrap() - 2.0).abs() < 1e-9);
        let lin: Vec<BenchRow> = [10usize, 100, 1000].iter().map(|&n| row(n, 3 * n as u64)).collect();
        assert!((fit_exponent(&lin).unwrap() - 1.0).abs() < 1e-9);
        assert!(fit_exponent(&[row(5, 5)]).is_none());
    }

    #[test]
    fn tree_rows_within_bound() {
        let rows = bench_bounds(BenchClass::Tree, &[100, 1000], 10, 7).unwrap();
        assert_eq!(rows.len(), 20);
        assert!(rows.iter().all(|r| r.slack <= 1.0));
        assert!(rows.windows(2).all(|w| (w[0].n, w[0].trial) < (w[1].n, w[1].trial)));
    }

    #[test]
    fn star_thirteen() {
        let rows = bench_bounds(BenchClass::Star, &[13], 1, 1).unwrap();
        assert!(rows[0].side as f64 <= star_bound(13));
        assert_eq!(rows[0].side, 24);
    }

    #[test]
    fn triangle_free_cacti() {
        let rows = bench_bounds(BenchClass::CactusNoTriangles, &[1000], 5, 3).unwrap();
        assert!(rows.iter().all(|r| r.triangles == 0 && r.cycles == 99 && r.slack <= 1.0));
    }

    #[test]
    fn csv_is_deterministic() {
        let a = bench_bounds(BenchClass::Cactus, &[60, 30], 3, 9).unwrap();
        let b = bench_bounds(BenchClass::Cactus, &[30, 60], 3, 9).unwrap();
        let (mut x, mut y) = (Vec::new(), Vec::new());
        write_csv(&a, &mut x).unwrap();
        write_csv(&b, &mut y).unwrap();
        assert_eq!(x, y);
        assert!(String::from_utf8(x).unwrap().starts_with("class,n,trial,seed,leaves,depth"));
    }
}
