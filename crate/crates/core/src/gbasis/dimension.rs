//! Staircase combinatorics of monomial ideals: standard monomials and Krull
//! dimension via maximal independent variable sets.

use alloc::vec;
use alloc::vec::Vec;

use crate::polyring::Monomial;

/// Krull dimension of `k[x_1..x_n] / (leads)`; `None` when the quotient is
/// zero (some lead is `1`).
pub(crate) fn krull_dimension(leads: &[Monomial], nvars: usize) -> Option<usize> {
    if leads.iter().any(Monomial::is_one) {
        return None;
    }
    let supports: Vec<u64> = leads.iter().map(Monomial::support_mask).collect();
    let mut best = 0;
    independent_search(&supports, nvars, 0, 0, 0, &mut best);
    Some(best)
}

/// Grows a set of variables containing no lead support; `chosen` is a bitmask.
fn independent_search(supports: &[u64], nvars: usize, var: usize, chosen: u64, size: usize, best: &mut usize) {
    if size + (nvars - var) <= *best {
        return;
    }
    if var == nvars {
        *best = size;
        return;
    }
    let with = chosen | (1 << var);
    if supports.iter().all(|&s| s & !with != 0) {
        independent_search(supports, nvars, var + 1, with, size + 1, best);
    }
    independent_search(supports, nvars, var + 1, chosen, size, best);
}

/// Per-variable pure-power bounds; `None` if some variable has no pure power
/// among the leads (infinite staircase).
pub(crate) fn pure_power_bounds(leads: &[Monomial], nvars: usize) -> Option<Vec<u32>> {
    let mut bounds = vec![u32::MAX; nvars];
    for m in leads {
        if m.is_one() {
            return Some(vec![0; nvars]);
        }
        if let Some(v) = m.pure_power_var() {
            bounds[v] = bounds[v].min(m.exponent(v));
        }
    }
    bounds.iter().all(|&b| b != u32::MAX).then_some(bounds)
}

/// Monomials not divisible by any lead, when there are finitely many.
pub(crate) fn standard_monomials(leads: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let bounds = pure_power_bounds(leads, nvars)?;
    if bounds.contains(&0) {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    enumerate(leads, &bounds, 0, &mut exps, &mut out);
    Some(out)
}

fn enumerate(leads: &[Monomial], bounds: &[u32], var: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == bounds.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        // divisibility only gets worse as exponents grow
        let probe = Monomial::new(exps.clone());
        if leads.iter().any(|l| l.divides(&probe)) {
            break;
        }
        enumerate(leads, bounds, var + 1, exps, out);
    }
    exps[var] = 0;
}
