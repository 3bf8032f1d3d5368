//! Exhaustive census of involutive non-degenerate Yang-Baxter maps.
//!
//! Any `r` satisfying the non-degeneracy axiom determines permutations
//! `τ_a(c) = second(r(c, a))`, and involutivity forces
//! `r(c, a) = (τ_{τ_a(c)}⁻¹(a), τ_a(c))`. Conversely every family
//! `(τ_a)` gives an involutive map through that formula. So the search runs
//! over the `(n!)^n` families and keeps the maps passing all three axioms.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::types::{Gen, Perm};

use super::{check_involutive, check_nondegenerate, check_yb, PairMap};

pub const MAX_ENUMERATION_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    /// Every solution, sorted by table.
    pub solutions: Vec<PairMap>,
    /// One canonical representative per relabeling class, sorted.
    pub classes: Vec<PairMap>,
}

/// Least table among all relabelings of `r`.
pub fn canonical_form(r: &PairMap) -> PairMap {
    Perm::all(r.n())
        .iter()
        .map(|p| r.relabel(p))
        .min()
        .expect("Sym_n is non-empty")
}

fn map_from_taus(n: usize, taus: &[&Perm], inverses: &[Perm]) -> PairMap {
    PairMap::from_fn(n, |c, a| {
        let b = taus[a.zero()].apply(c.zero());
        let d = inverses[b].apply(a.zero());
        (Gen::from_zero(d), Gen::from_zero(b))
    })
}

pub fn enumerate_solutions(n: usize) -> Result<Census> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    let perms = Perm::all(n);
    let mut solutions = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let taus: Vec<&Perm> = choice.iter().map(|&k| &perms[k]).collect();
        let inverses: Vec<Perm> = taus.iter().map(|t| t.inverse()).collect();
        let r = map_from_taus(n, &taus, &inverses);
        if check_involutive(&r).passed() && check_nondegenerate(&r).passed() && check_yb(&r).passed() {
            solutions.push(r);
        }
        // odometer over (n!)^n choices
        let mut k = 0;
        while k < n {
            choice[k] += 1;
            if choice[k] < perms.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    solutions.sort();
    let classes: BTreeSet<PairMap> = solutions.iter().map(canonical_form).collect();
    Ok(Census {
        n,
        solutions,
        classes: classes.into_iter().collect(),
    })
}
