//! Approximation versus exact optimum over generated instances.

use std::fmt::Write as _;

use maxleaf_core::approx::approximate;
use maxleaf_core::exact::maxleaf_exact_with_limit;
use maxleaf_core::gen::GenSpec;
use maxleaf_core::Error;
use rayon::prelude::*;

pub const CSV_HEADER: &str = "instance,n,m,l,h,exact,approx,ratio";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub instance: usize,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub h: usize,
    /// `None` above the exact oracle's size limit.
    pub exact: Option<usize>,
    pub approx: usize,
}

impl BenchRow {
    pub fn ratio(&self) -> Option<f64> {
        self.exact.map(|e| if self.approx == 0 { 1.0 } else { e as f64 / self.approx as f64 })
    }

    pub fn csv(&self) -> String {
        let exact = self.exact.map_or(String::new(), |e| e.to_string());
        let ratio = self.ratio().map_or(String::new(), |r| format!("{r:.4}"));
        format!("{},{},{},{},{},{exact},{},{ratio}", self.instance, self.n, self.m, self.l, self.h, self.approx)
    }
}

/// Instance `i` uses seed `spec.seed + i`. Instances run in parallel;
/// rows come back in instance order.
pub fn run(spec: GenSpec, count: usize, exact_limit: usize) -> Result<Vec<BenchRow>, Error> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let d = GenSpec { seed: spec.seed.wrapping_add(i as u64), ..spec }.generate()?;
            let (_, rep) = approximate(&d)?;
            let exact = match maxleaf_exact_with_limit(&d, exact_limit) {
                Ok(r) => Some(r.maxleaf),
                Err(Error::TooLarge { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok(BenchRow {
                instance: i,
                n: d.vertex_count(),
                m: d.arc_count(),
                l: rep.special,
                h: rep.weak_bipaths,
                exact,
                approx: rep.leaves,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{CSV_HEADER}").unwrap();
    for r in rows {
        writeln!(s, "{}", r.csv()).unwrap();
    }
    s
}

pub fn worst_ratio(rows: &[BenchRow]) -> Option<f64> {
    rows.iter().filter_map(BenchRow::ratio).fold(None, |a, r| Some(a.map_or(r, |a: f64| a.max(r))))
}
