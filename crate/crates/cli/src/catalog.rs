//! Batch enumeration over user-supplied grids, and catalog comparison.

use std::collections::{BTreeMap, BTreeSet};

use chowcalc::bounds::{ch2_of_classes, ch3_bound, ch3_of_classes, enumerate_admissible_c3, euler_bound, worst_case_report, Mode};
use chowcalc::monad::{monad_shape, partition_types};
use chowcalc::resolution::{admissible_s, c3_of, presentation_report, verify_resolution_chern};
use chowcalc::{Rational, Result};
use serde::Serialize;

use crate::config::IntRange;
use crate::entry::{Catalog, CatalogEntry, EntryKind};

fn params(pairs: &[(&str, IntRange)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, r)| (k.to_string(), r.to_string())).collect()
}

/// One entry per `(c_2, s, c_3, partition type)` with `c_2` in `c2s` and
/// quotient length in `lengths`. Empty when no `c_2 > 4` is in range.
pub fn strata(c2s: IntRange, lengths: IntRange) -> Result<Catalog> {
    let mut types = Vec::new();
    for l in lengths.iter().filter(|&l| l >= 0) {
        types.push((l, partition_types(l)?));
    }
    let mut entries = Vec::new();
    for c2 in c2s.iter() {
        for s in admissible_s(c2) {
            let c3 = c3_of(c2, s)?;
            let pres = presentation_report(c2, s)?;
            let bound = ch3_bound(2, -1, &ch2_of_classes(-1, c2))?;
            for (l, lambdas) in &types {
                for lambda in lambdas {
                    entries.push(
                        CatalogEntry::new(EntryKind::Stratum)
                            .input("c2", c2)
                            .input("s", s)
                            .input("l", *l)
                            .input("partition", lambda.clone())
                            .output("c3", c3)
                            .output("ch3", ch3_of_classes(-1, c2, c3))
                            .output("ch3_bound", bound.clone())
                            .output("dim_hom", pres.dim_hom.clone())
                            .output("dim_pv", pres.dim_pv.clone())
                            .output("dim_g", pres.dim_g.clone())
                            .output("points", lambda.points() as u64)
                            .output("aut_lambda", lambda.reduced_aut_dim()),
                    );
                }
            }
        }
    }
    Ok(Catalog::new("strata", params(&[("c2", c2s), ("l", lengths)]), entries))
}

/// One entry per admissible `(c_2, s)`.
pub fn resolutions(c2s: IntRange) -> Result<Catalog> {
    let mut entries = Vec::new();
    for c2 in c2s.iter() {
        for s in admissible_s(c2) {
            let c3 = c3_of(c2, s)?;
            let pres = presentation_report(c2, s)?;
            entries.push(
                CatalogEntry::new(EntryKind::Resolution)
                    .input("c2", c2)
                    .input("s", s)
                    .output("c3", c3)
                    .output("chern_consistent", verify_resolution_chern(c2, s)?)
                    .output("dim_hom", pres.dim_hom)
                    .output("dim_pv", pres.dim_pv)
                    .output("dim_g", pres.dim_g),
            );
        }
    }
    Ok(Catalog::new("resolutions", params(&[("c2", c2s)]), entries))
}

/// Worst-case bounds and the admissible `c_3` interval over a `(rank, c_1, c_2)` grid.
/// Non-positive ranks are skipped.
pub fn bounds(ranks: IntRange, c1s: IntRange, c2s: IntRange) -> Result<Catalog> {
    let mut entries = Vec::new();
    for r in ranks.iter().filter(|&r| r >= 1) {
        for c1 in c1s.iter() {
            for c2 in c2s.iter() {
                let ch2 = ch2_of_classes(c1, c2);
                let report = worst_case_report(r, c1, &ch2, Mode::Clamped)?;
                let iv = enumerate_admissible_c3(r, c1, c2)?;
                entries.push(
                    CatalogEntry::new(EntryKind::Bound)
                        .input("rank", r)
                        .input("c1", c1)
                        .input("c2", c2)
                        .output("ch2", ch2.clone())
                        .output("q", report.q)
                        .output("euler_bound", euler_bound(r, c1, &ch2)?)
                        .output("ch3_bound", report.ch3_bound)
                        .output("c3_min", iv.min)
                        .output("c3_max", iv.max),
                );
            }
        }
    }
    Ok(Catalog::new("bounds", params(&[("rank", ranks), ("c1", c1s), ("c2", c2s)]), entries))
}

/// Monad shapes for every normalized `(r, d)` with `r` in `ranks` and charge in `charges`.
pub fn monads(ranks: IntRange, charges: IntRange) -> Result<Catalog> {
    let mut entries = Vec::new();
    for r in ranks.iter().filter(|&r| r >= 1) {
        for d in (-r + 1)..=0 {
            for c in charges.iter().filter(|&c| c >= 0 && c + d >= 0) {
                let ch2 = Rational::from(-c) - Rational::from(d) / Rational::from(2);
                let m = monad_shape(r, d, &ch2)?;
                entries.push(
                    CatalogEntry::new(EntryKind::Monad)
                        .input("rank", r)
                        .input("d", d)
                        .input("charge", c)
                        .output("ch2", ch2)
                        .output("v", m.v)
                        .output("w", m.w)
                        .output("u", m.u),
                );
            }
        }
    }
    Ok(Catalog::new("monads", params(&[("rank", ranks), ("charge", charges)]), entries))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogDiff {
    pub identical: bool,
    pub params_differ: bool,
    pub only_left: Vec<CatalogEntry>,
    pub only_right: Vec<CatalogEntry>,
}

pub fn diff(left: &Catalog, right: &Catalog) -> CatalogDiff {
    let l: BTreeSet<&CatalogEntry> = left.entries.iter().collect();
    let r: BTreeSet<&CatalogEntry> = right.entries.iter().collect();
    let only_left: Vec<CatalogEntry> = l.difference(&r).map(|e| (*e).clone()).collect();
    let only_right: Vec<CatalogEntry> = r.difference(&l).map(|e| (*e).clone()).collect();
    let params_differ = left.params != right.params || left.catalog != right.catalog;
    CatalogDiff { identical: only_left.is_empty() && only_right.is_empty() && !params_differ, params_differ, only_left, only_right }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(a: i64, b: i64) -> IntRange {
        IntRange { start: a, end: b }
    }

    #[test]
    fn strata_cross_product() {
        let cat = strata(range(5, 10), range(0, 3)).unwrap();
        // c2 = 5..7 admit s = 1; c2 = 8..10 admit s = 1, 2 since 25 <= 4 c2 - 7
        let pairs = 3 + 3 * 2;
        let types = 1 + 1 + 3 + 6;
        assert_eq!(cat.entries.len(), pairs * types);
        assert!(cat.entries.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn strata_below_threshold_is_empty() {
        let cat = strata(range(4, 4), range(0, 3)).unwrap();
        assert!(cat.entries.is_empty());
    }

    #[test]
    fn resolution_catalog_is_consistent() {
        let cat = resolutions(range(5, 12)).unwrap();
        assert!(cat
            .entries
            .iter()
            .all(|e| e.outputs["chern_consistent"] == crate::entry::Value::Flag(true)));
    }

    #[test]
    fn diff_of_identical_catalogs_is_empty() {
        let a = monads(range(1, 3), range(0, 4)).unwrap();
        let d = diff(&a, &a.clone());
        assert!(d.identical && d.only_left.is_empty() && d.only_right.is_empty());
        let b = monads(range(1, 3), range(0, 5)).unwrap();
        let d = diff(&a, &b);
        assert!(!d.identical);
        assert!(d.only_left.is_empty());
        assert!(!d.only_right.is_empty());
    }

    #[test]
    fn bound_catalog_contains_constructed_c3() {
        let cat = bounds(range(2, 2), range(-1, -1), range(5, 5)).unwrap();
        let e = &cat.entries[0];
        let lo = e.outputs["c3_min"].clone();
        let hi = e.outputs["c3_max"].clone();
        let c3 = crate::entry::Value::from(19i64);
        assert!(lo <= c3 && c3 <= hi);
    }
}
