//! Brute-force tallies over all intervals of a size, classified twice: once
//! on the interval and once on its blossoming tree.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::blossoming::{interval_to_blossoming, BlossomingTree};
use crate::error::{Error, Result};
use crate::intervals::{enumerate_intervals, TamariInterval};

use super::Family;

/// Family memberships of one interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub families: BTreeMap<Family, bool>,
    pub self_dual: bool,
    /// Numbers of canopy positions of types `S11`, `S00` and `M10`.
    pub canopy: (usize, usize, usize),
}

impl Classification {
    pub fn is(&self, family: Family) -> bool {
        self.families[&family]
    }
}

fn on_interval(i: &TamariInterval) -> Classification {
    let families = Family::ALL
        .into_iter()
        .map(|f| {
            let v = match f {
                Family::General => true,
                Family::Synchronized => i.is_synchronized(),
                Family::Modern => i.is_modern(),
                Family::New => i.is_new(),
                Family::ModernSynchronized => i.is_modern() && i.is_synchronized(),
                Family::InfinitelyModern => i.is_infinitely_modern(),
                Family::Kreweras => i.is_kreweras(),
            };
            (f, v)
        })
        .collect();
    Classification {
        families,
        self_dual: i.is_self_dual(),
        canopy: i.canopy_type_counts(),
    }
}

/// New intervals are the rises of modern ones, so membership is read on the
/// blossoming tree of the derised interval.
fn blossoming_is_new(i: &TamariInterval) -> bool {
    if i.size() == 1 {
        return true;
    }
    i.derise().is_ok_and(|j| interval_to_blossoming(&j).is_modern())
}

fn on_blossoming(i: &TamariInterval, b: &BlossomingTree) -> Classification {
    let families = Family::ALL
        .into_iter()
        .map(|f| {
            let v = match f {
                Family::General => true,
                Family::Synchronized => b.is_synchronized(),
                Family::Modern => b.is_modern(),
                Family::New => blossoming_is_new(i),
                Family::ModernSynchronized => b.is_modern() && b.is_synchronized(),
                Family::InfinitelyModern => b.is_infinitely_modern(),
                Family::Kreweras => b.is_kreweras(),
            };
            (f, v)
        })
        .collect();
    Classification {
        families,
        self_dual: b.is_half_turn_symmetric(),
        canopy: b.node_type_counts(),
    }
}

/// Classifies `i` with both methods, failing when they disagree.
pub fn classify(i: &TamariInterval) -> Result<Classification> {
    let direct = on_interval(i);
    let via_tree = on_blossoming(i, &interval_to_blossoming(i));
    if direct != via_tree {
        return Err(Error::OracleDisagreement(format!(
            "classifiers disagree on {i}: {direct:?} vs {via_tree:?}"
        )));
    }
    Ok(direct)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CanopyTally {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub count: u64,
}

/// Counts of all intervals of one size, by family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TallyReport {
    pub n: usize,
    pub families: BTreeMap<Family, u64>,
    pub self_dual: BTreeMap<Family, u64>,
    pub canopy: Vec<CanopyTally>,
}

impl TallyReport {
    pub fn family(&self, f: Family) -> u64 {
        self.families[&f]
    }

    pub fn self_dual(&self, f: Family) -> u64 {
        self.self_dual[&f]
    }

    pub fn canopy_count(&self, i: usize, j: usize, m: usize) -> u64 {
        self.canopy
            .iter()
            .find(|c| (c.i, c.j, c.m) == (i, j, m))
            .map_or(0, |c| c.count)
    }
}

#[derive(Default)]
struct Acc {
    families: BTreeMap<Family, u64>,
    self_dual: BTreeMap<Family, u64>,
    canopy: BTreeMap<(usize, usize, usize), u64>,
}

impl Acc {
    fn add(mut self, c: &Classification) -> Self {
        for (&f, &v) in &c.families {
            *self.families.entry(f).or_default() += v as u64;
            *self.self_dual.entry(f).or_default() += (v && c.self_dual) as u64;
        }
        *self.canopy.entry(c.canopy).or_default() += 1;
        self
    }

    fn merge(mut self, other: Acc) -> Self {
        for (f, v) in other.families {
            *self.families.entry(f).or_default() += v;
        }
        for (f, v) in other.self_dual {
            *self.self_dual.entry(f).or_default() += v;
        }
        for (k, v) in other.canopy {
            *self.canopy.entry(k).or_default() += v;
        }
        self
    }
}

/// Enumerates every interval of size `n`, classifies each with both methods
/// and tallies the results.
pub fn tally(n: usize) -> Result<TallyReport> {
    let intervals = enumerate_intervals(n)?;
    let acc = intervals
        .par_iter()
        .map(classify)
        .try_fold(Acc::default, |acc, c| c.map(|c| acc.add(&c)))
        .try_reduce(Acc::default, |a, b| Ok(a.merge(b)))?;
    let mut families = acc.families;
    let mut self_dual = acc.self_dual;
    for f in Family::ALL {
        families.entry(f).or_default();
        self_dual.entry(f).or_default();
    }
    Ok(TallyReport {
        n,
        families,
        self_dual,
        canopy: acc
            .canopy
            .into_iter()
            .map(|((i, j, m), count)| CanopyTally { i, j, m, count })
            .collect(),
    })
}
