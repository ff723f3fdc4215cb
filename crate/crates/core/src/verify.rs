//! Exhaustive cross-checks between independent computations, up to a size
//! bound. Each check reports pass or fail with a short detail line.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::blossoming::{blossoming_to_interval, delta, gamma, interval_to_blossoming, rho, BlossomingTree};
use crate::counting::{
    count, count_general, count_j, count_self_dual, count_sync_ij, narayana, tally, trivariate_coefficients, Family,
};
use crate::intervals::{enumerate_intervals, TamariInterval};
use crate::meandering::{count_meandering_trees, phi, phi_interval, psi};
use crate::render::{arcs_disjoint, emitted_arcs, render_blossoming, render_meandering, render_smooth};
use crate::sampler::{enumerate_marked_sequences, vec, vec_inverse};

pub type CheckResult = std::result::Result<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub max_n: usize,
    pub passed: bool,
    pub detail: String,
}

/// Runs `f` on every interval of every size `1..=max_n`, stopping at the
/// first failure. Returns the number of intervals checked.
pub fn each_interval<F>(max_n: usize, f: F) -> std::result::Result<usize, String>
where
    F: Fn(&TamariInterval) -> std::result::Result<(), String> + Sync,
{
    let mut total = 0;
    for n in 1..=max_n {
        let all = enumerate_intervals(n).map_err(|e| e.to_string())?;
        if let Some(err) = all.par_iter().map(&f).find_map_any(|r| r.err()) {
            return Err(err);
        }
        total += all.len();
    }
    Ok(total)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn interval_counts(max_n: usize) -> CheckResult {
    let mut seen = Vec::new();
    for n in 1..=max_n {
        let got = enumerate_intervals(n).map_err(|e| e.to_string())?.len();
        ensure(BigUint::from(got) == count_general(n), || {
            format!("n={n}: enumerated {got}, formula {}", count_general(n))
        })?;
        seen.push(got.to_string());
    }
    Ok(seen.join(", "))
}

pub fn round_trips(max_n: usize) -> CheckResult {
    let checked = each_interval(max_n, |i| {
        let m = phi(i.lower(), i.upper()).map_err(|e| e.to_string())?;
        ensure(psi(&m) == (i.lower().clone(), i.upper().clone()), || format!("psi(phi) differs at {i}"))?;
        let b = gamma(&m).map_err(|e| e.to_string())?;
        ensure(delta(&b).as_ref() == Ok(&m), || format!("delta(gamma) differs at {i}"))?;
        ensure(blossoming_to_interval(&b).as_ref() == Ok(i), || format!("Psi(Phi) differs at {i}"))
    })?;
    for n in 1..=max_n {
        let all = enumerate_intervals(n).map_err(|e| e.to_string())?;
        let codes: HashSet<Vec<u8>> = all
            .par_iter()
            .map(|i| interval_to_blossoming(i).canonical_encode().unwrap_or_default())
            .collect();
        ensure(codes.len() == all.len(), || format!("Phi is not injective at n={n}"))?;
    }
    Ok(format!("{checked} intervals"))
}

pub fn transfer_lemmas(max_n: usize) -> CheckResult {
    let mut checked = 0;
    for n in 1..=max_n {
        let t = tally(n).map_err(|e| e.to_string())?;
        checked += t.family(Family::General);
    }
    Ok(format!("{checked} intervals, both classifiers agree"))
}

pub fn duality(max_n: usize) -> CheckResult {
    each_interval(max_n, |i| {
        let b = interval_to_blossoming(i);
        ensure(b.dual() == interval_to_blossoming(&i.dual()), || format!("dual(Phi) differs at {i}"))?;
        ensure(b.is_half_turn_symmetric() == i.is_self_dual(), || format!("symmetry differs at {i}"))
    })?;
    let mut general = Vec::new();
    for n in 1..=max_n {
        let t = tally(n).map_err(|e| e.to_string())?;
        for f in Family::ALL {
            let formula = count_self_dual(f, n).map_err(|e| e.to_string())?;
            ensure(BigUint::from(t.self_dual(f)) == formula, || {
                format!("self-dual {f} at n={n}: tally {}, formula {formula}", t.self_dual(f))
            })?;
        }
        general.push(t.self_dual(Family::General).to_string());
    }
    Ok(format!("self-dual general: {}", general.join(", ")))
}

pub fn refined_counts(max_n: usize) -> CheckResult {
    for n in 1..=max_n.max(10) {
        let sum: BigUint = (0..n).map(|k| count_j(n, k)).sum();
        ensure(sum == count_general(n), || format!("sum of J_k differs at n={n}"))?;
    }
    let f = trivariate_coefficients(max_n).map_err(|e| e.to_string())?;
    for n in 1..=max_n {
        let t = tally(n).map_err(|e| e.to_string())?;
        for k in 0..n {
            let got: u64 = t.canopy.iter().filter(|c| c.i + c.j == k + 2).map(|c| c.count).sum();
            ensure(BigUint::from(got) == count_j(n, k), || format!("J_{k}({n}): tally {got}"))?;
        }
        for i in 1..=n {
            let j = n + 1 - i;
            ensure(BigUint::from(t.canopy_count(i, j, 0)) == count_sync_ij(i, j), || {
                format!("S_({i},{j}) differs")
            })?;
        }
        let mut by_size = BigInt::default();
        for (&[i, j, m], c) in f.terms() {
            if (i + j + m) as usize == n + 1 {
                by_size += c;
                ensure(*c == BigInt::from(t.canopy_count(i as usize, j as usize, m as usize)), || {
                    format!("I_({i},{j},{m}) differs from the tally")
                })?;
            }
        }
        ensure(by_size == BigInt::from(count_general(n)), || format!("trivariate total differs at n={n}"))?;
        ensure(t.canopy.iter().all(|c| f.coeff(c.i as u32, c.j as u32, c.m as u32) == BigInt::from(c.count)), || {
            format!("tally at n={n} has a class missing from the series")
        })?;
    }
    for n in 1..=max_n {
        let mut by_ij: HashMap<(usize, usize), u64> = HashMap::new();
        for i in enumerate_intervals(n).map_err(|e| e.to_string())? {
            if i.is_modern() && i.is_synchronized() {
                let (a, b, _) = i.canopy_type_counts();
                *by_ij.entry((a, b)).or_default() += 1;
            }
        }
        for i in 1..=n {
            let j = n + 1 - i;
            let got = by_ij.get(&(i, j)).copied().unwrap_or(0);
            ensure(BigUint::from(got) == narayana(i, j), || format!("Narayana({i},{j}): tally {got}"))?;
        }
    }
    Ok(format!("J_k, S_(i,j), Narayana and I_(i,j,m) up to n={max_n}"))
}

pub fn parameter_transfer(max_n: usize) -> CheckResult {
    let checked = each_interval(max_n, |i| {
        let b = interval_to_blossoming(i);
        let mut lengths = i.bi_length_vector();
        let mut degrees: Vec<_> = (0..=i.size()).map(|v| b.bi_degree(v)).collect();
        lengths.sort_unstable();
        degrees.sort_unstable();
        ensure(lengths == degrees, || format!("bi-degrees differ at {i}"))?;
        ensure(b.node_type_counts() == i.canopy_type_counts(), || format!("node types differ at {i}"))
    })?;
    Ok(format!("{checked} intervals"))
}

pub fn dyck_identities(max_n: usize) -> CheckResult {
    let checked = each_interval(max_n, |i| {
        let m = phi_interval(i);
        ensure(m.upper_degrees() == i.upper().to_dyck().contact_vector(), || {
            format!("contact vector differs at {i}")
        })?;
        ensure(m.lower_degrees() == i.lower().to_dyck().descent_vector(), || {
            format!("descent vector differs at {i}")
        })
    })?;
    Ok(format!("{checked} intervals"))
}

pub fn recursive_count(max_n: usize) -> CheckResult {
    let counts = count_meandering_trees(max_n);
    for n in 1..=max_n {
        ensure(BigUint::from(counts[n]) == count_general(n), || {
            format!("n={n}: recursive count {}, formula {}", counts[n], count_general(n))
        })?;
    }
    Ok(format!("{:?}", &counts[1..]))
}

pub fn sampler_bijection(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let mut multiset: HashMap<BlossomingTree, usize> = HashMap::new();
        let all = enumerate_marked_sequences(n).map_err(|e| e.to_string())?;
        for s in &all {
            let t = vec_inverse(s).map_err(|e| e.to_string())?;
            ensure(vec(&t.tree, t.edge).as_ref() == Ok(s), || format!("vec(vec_inverse) differs at {s}"))?;
            *multiset.entry(t.tree).or_default() += 1;
        }
        let intervals = enumerate_intervals(n).map_err(|e| e.to_string())?;
        ensure(multiset.len() == intervals.len(), || format!("n={n}: {} distinct trees", multiset.len()))?;
        for i in &intervals {
            let got = multiset.get(&interval_to_blossoming(i)).copied().unwrap_or(0);
            ensure(got == n, || format!("Phi({i}) reached {got} times, expected {n}"))?;
        }
    }
    Ok(format!("all marked sequences up to n={max_n}"))
}

pub fn rho_involution(max_n: usize) -> CheckResult {
    for n in 1..=max_n {
        let all = enumerate_intervals(n).map_err(|e| e.to_string())?;
        let images: Vec<TamariInterval> = all.par_iter().map(rho).collect();
        let mut trivial = HashSet::new();
        for (i, r) in all.iter().zip(&images) {
            ensure(rho(r) == *i, || format!("rho is not an involution at {i}"))?;
            ensure(rho(&i.dual()) == r.dual(), || format!("rho does not commute with duality at {i}"))?;
            ensure(r.is_synchronized() == i.is_synchronized(), || format!("synchronized not preserved at {i}"))?;
            ensure(r.is_kreweras() == i.is_infinitely_modern(), || format!("Kreweras exchange fails at {i}"))?;
            let modern_sync = i.is_modern() && i.is_synchronized();
            ensure(modern_sync == r.is_trivial(), || format!("modern-synchronized exchange fails at {i}"))?;
            if modern_sync {
                trivial.insert(r.clone());
            }
        }
        let expected = count(Family::ModernSynchronized, n).map_err(|e| e.to_string())?;
        ensure(BigUint::from(trivial.len()) == expected, || format!("n={n}: {} trivial images", trivial.len()))?;
    }
    Ok(format!("up to n={max_n}"))
}

pub fn rendering(max_n: usize) -> CheckResult {
    let checked = each_interval(max_n, |i| {
        let m = render_meandering(&phi_interval(i));
        ensure(arcs_disjoint(&emitted_arcs(&m.svg)), || format!("meandering arcs cross at {i}"))?;
        ensure(arcs_disjoint(&emitted_arcs(&render_smooth(i).svg)), || format!("smooth arcs cross at {i}"))?;
        let b = render_blossoming(&interval_to_blossoming(i)).map_err(|e| e.to_string())?;
        ensure(arcs_disjoint(&emitted_arcs(&b.svg)), || format!("blossoming arcs cross at {i}"))?;
        ensure(m == render_meandering(&phi_interval(i)), || format!("output not deterministic at {i}"))
    })?;
    Ok(format!("{checked} intervals"))
}

type NamedCheck = (&'static str, fn(usize) -> CheckResult, usize);

/// The checks run by [`run_all`], each with the largest size it accepts.
pub const CHECKS: [NamedCheck; 11] = [
    ("interval-counts", interval_counts, 9),
    ("round-trips", round_trips, 8),
    ("transfer-lemmas", transfer_lemmas, 8),
    ("duality", duality, 8),
    ("refined-counts", refined_counts, 8),
    ("parameter-transfer", parameter_transfer, 8),
    ("dyck-identities", dyck_identities, 8),
    ("recursive-count", recursive_count, 9),
    ("sampler-bijection", sampler_bijection, 5),
    ("rho-involution", rho_involution, 7),
    ("rendering", rendering, 6),
];

/// Runs every check with `min(max_n, cap)` as its size bound.
pub fn run_all(max_n: usize) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(name, check, cap)| {
            let bound = max_n.min(cap);
            let (passed, detail) = match check(bound) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                name,
                max_n: bound,
                passed,
                detail,
            }
        })
        .collect()
}
