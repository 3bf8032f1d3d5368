//! The permutation-valued map `φ : U → Sym_n` with `v(ab) = v(φ(b)(a)) v(b)`,
//! read directly from the rows of an [`ITable`]:
//! `φ(b)(i) = σ⁻¹(index of x_{b,i})`.
//!
//! `φ(b)` acts on `U` by relabeling, `u_i ↦ u_{φ(b)(i)}`. It satisfies the
//! cocycle identity `φ(bc) = φ(φ(c)(b)) ∘ φ(c)` with `∘` as in
//! [`Perm::compose`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::istructure::ITable;
use crate::report::Verdict;
use crate::types::{ExpVec, Gen, Perm};

#[derive(Clone, Debug)]
pub struct PhiMap {
    table: ITable,
    /// `phis[k]` is `φ` of the `k`-th table row.
    phis: Vec<Perm>,
}

/// Minimal kernel exponents and the image group of `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelData {
    /// `t[i]` is the least `t ≥ 1` with `φ(u_{i+1}^t) = id`.
    pub t: Vec<u32>,
    /// The image of `φ` closed under composition, sorted.
    pub group: Vec<Perm>,
}

impl KernelData {
    /// Generators `u_i^{t_i}` of `P₀`.
    pub fn p0_generators(&self) -> Vec<ExpVec> {
        let n = self.t.len();
        Gen::all(n).map(|g| ExpVec::power(n, g, self.t[g.zero()])).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetReport {
    /// `u_1^{p_1} ... u_n^{p_n}` with `0 <= p_i < t_i`, graded-lex.
    pub representatives: Vec<ExpVec>,
    pub elements_checked: usize,
    /// Unique factorization `c = a p` with `v(c) = v(a) v(p)` in `S`.
    pub factorization: Verdict<String>,
    /// `v(u_i^{t_i})` commute pairwise in `S`.
    pub commute: Verdict<String>,
    /// Pairs whose commutation lies beyond the degree bound.
    pub commute_skipped: usize,
}

impl CosetReport {
    pub fn passed(&self) -> bool {
        self.factorization.passed() && self.commute.passed()
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl PhiMap {
    pub fn new(table: ITable) -> Self {
        let sigma_inv = table.sigma().inverse();
        let phis = table
            .rows()
            .iter()
            .map(|b| {
                let row = table.row(b).expect("row keys are within the bound");
                let images = row.iter().map(|x| sigma_inv.apply(x.zero())).collect();
                Perm::from_zero_images(images).expect("table rows are permutations")
            })
            .collect();
        PhiMap { table, phis }
    }

    pub fn table(&self) -> &ITable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    /// Largest degree at which `φ` is available.
    pub fn max_degree(&self) -> usize {
        self.table.bound() - 1
    }

    pub fn phi_of(&self, b: &ExpVec) -> Result<&Perm> {
        if b.degree() > self.max_degree() {
            return Err(Error::DegreeBound {
                degree: b.degree(),
                bound: self.max_degree(),
            });
        }
        let k = self
            .table
            .rows()
            .binary_search_by(|row| graded_lex_cmp(row, b))
            .expect("every exponent vector within the bound has a row");
        Ok(&self.phis[k])
    }

    /// `φ(bc) = φ(φ(c)(b)) ∘ φ(c)`.
    pub fn check_cocycle(&self, b: &ExpVec, c: &ExpVec) -> Result<bool> {
        let lhs = self.phi_of(&b.mul(c))?;
        let phi_c = self.phi_of(c)?;
        let rhs = self.phi_of(&b.relabel(phi_c))?.compose(phi_c)?;
        Ok(*lhs == rhs)
    }

    /// The cocycle identity for all `b, c` with `deg b + deg c <= max`.
    pub fn check_cocycle_all(&self, max: usize) -> Result<Verdict<(ExpVec, ExpVec)>> {
        for db in 0..=max {
            for b in ExpVec::all_of_degree(self.n(), db) {
                for c in ExpVec::all_up_to(self.n(), max - db) {
                    if !self.check_cocycle(&b, &c)? {
                        return Ok(Verdict::Fail((b, c)));
                    }
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// `v(ab) = v(φ(b)(a)) v(b)` in `S`.
    pub fn check_defining_identity(&self, a: &ExpVec, b: &ExpVec) -> Result<bool> {
        let t = &self.table;
        let left = t.v_of(&a.mul(b))?;
        let right = t.v_of(&a.relabel(self.phi_of(b)?))?.concat(&t.v_of(b)?);
        t.words_equal(&left, &right)
    }

    pub fn in_kernel(&self, b: &ExpVec) -> Result<bool> {
        Ok(self.phi_of(b)?.is_identity())
    }

    pub fn kernel_exponents(&self) -> Result<KernelData> {
        let n = self.n();
        let mut t = Vec::with_capacity(n);
        for g in Gen::all(n) {
            let found = (1..=self.max_degree() as u32)
                .find(|&k| self.phis_power_is_identity(g, k));
            match found {
                Some(k) => t.push(k),
                None => {
                    return Err(Error::DegreeBound {
                        degree: self.max_degree() + 1,
                        bound: self.max_degree(),
                    })
                }
            }
        }
        let nf = factorial(n);
        if let Some((i, &ti)) = t.iter().enumerate().find(|(_, &ti)| !nf.is_multiple_of(ti as u64)) {
            return Err(Error::Consistency(format!(
                "kernel exponent t_{} = {ti} does not divide {n}!",
                i + 1
            )));
        }
        let group = close_under_composition(self.phis.iter().cloned())?;
        for p in &group {
            if group.binary_search(&p.inverse()).is_err() {
                return Err(Error::Consistency("image of phi is not closed under inverses".into()));
            }
        }
        Ok(KernelData { t, group })
    }

    fn phis_power_is_identity(&self, g: Gen, k: u32) -> bool {
        self.phi_of(&ExpVec::power(self.n(), g, k))
            .map(Perm::is_identity)
            .unwrap_or(false)
    }

    /// The cosets `v(a) v(P₀)` over the box `0 <= p_i < t_i`, checked for every
    /// element of `U` of degree at most `m`.
    pub fn coset_decomposition(&self, kernel: &KernelData, m: usize) -> Result<CosetReport> {
        let t_bound = self.table.bound();
        if m > t_bound {
            return Err(Error::DegreeBound { degree: m, bound: t_bound });
        }
        let n = self.n();
        let tab = &self.table;
        let representatives: Vec<ExpVec> = ExpVec::all_up_to(n, kernel.t.iter().map(|&t| (t - 1) as usize).sum())
            .into_iter()
            .filter(|a| a.exps().iter().zip(&kernel.t).all(|(&p, &t)| p < t))
            .collect();

        let mut factorization = Verdict::Pass;
        let mut elements_checked = 0;
        for c in ExpVec::all_up_to(n, m) {
            elements_checked += 1;
            let fits: Vec<&ExpVec> = representatives
                .iter()
                .filter(|a| {
                    c.exps()
                        .iter()
                        .zip(a.exps())
                        .zip(&kernel.t)
                        .all(|((&ci, &ai), &t)| ci >= ai && (ci - ai) % t == 0)
                })
                .collect();
            if fits.len() != 1 {
                factorization = Verdict::Fail(format!("{c} has {} box factorizations", fits.len()));
                break;
            }
            let a = fits[0];
            let p = ExpVec::new(c.exps().iter().zip(a.exps()).map(|(ci, ai)| ci - ai).collect());
            if p.degree() <= self.max_degree() && !self.in_kernel(&p)? {
                factorization = Verdict::Fail(format!("{p} is not in the kernel"));
                break;
            }
            let split = tab.v_of(a)?.concat(&tab.v_of(&p)?);
            if !tab.words_equal(&tab.v_of(&c)?, &split)? {
                factorization = Verdict::Fail(format!("v({c}) != v({a}) v({p})"));
                break;
            }
            if c.degree() <= self.max_degree() && self.phi_of(&c)? != self.phi_of(a)? {
                factorization = Verdict::Fail(format!("phi({c}) != phi({a})"));
                break;
            }
        }

        let gens = kernel.p0_generators();
        let mut commute = Verdict::Pass;
        let mut commute_skipped = 0;
        for (k, gi) in gens.iter().enumerate() {
            for gj in &gens[k + 1..] {
                if gi.degree() + gj.degree() > t_bound {
                    commute_skipped += 1;
                    continue;
                }
                let (wi, wj) = (tab.v_of(gi)?, tab.v_of(gj)?);
                if !tab.words_equal(&wi.concat(&wj), &wj.concat(&wi))? {
                    commute = Verdict::Fail(format!("v({gi}) and v({gj}) do not commute"));
                }
            }
        }
        Ok(CosetReport {
            representatives,
            elements_checked,
            factorization,
            commute,
            commute_skipped,
        })
    }

    /// For all `a, b` with `deg a + deg b <= max`:
    /// if `b ∈ P` then `φ(ab) = φ(a)` and `v(ab) = v(a) v(b)`;
    /// if `a ∈ P` then `ab ∈ P ⇔ b ∈ P`;
    /// if `a ∈ P` and `g ∈ im φ` then `g(a) ∈ P`.
    pub fn check_kernel_properties(&self, kernel: &KernelData, max: usize) -> Result<Verdict<String>> {
        let n = self.n();
        let max = max.min(self.max_degree());
        let tab = &self.table;
        for a in ExpVec::all_up_to(n, max) {
            let a_in = self.in_kernel(&a)?;
            if a_in {
                for g in &kernel.group {
                    if !self.in_kernel(&a.relabel(g))? {
                        return Ok(Verdict::Fail(format!("{g}({a}) is not in the kernel")));
                    }
                }
            }
            for b in ExpVec::all_up_to(n, max - a.degree()) {
                let ab = a.mul(&b);
                let b_in = self.in_kernel(&b)?;
                if b_in {
                    if self.phi_of(&ab)? != self.phi_of(&a)? {
                        return Ok(Verdict::Fail(format!("phi({a}{b}) != phi({a}) with {b} in the kernel")));
                    }
                    let split = tab.v_of(&a)?.concat(&tab.v_of(&b)?);
                    if !tab.words_equal(&tab.v_of(&ab)?, &split)? {
                        return Ok(Verdict::Fail(format!("v({a} * {b}) != v({a}) v({b})")));
                    }
                }
                if a_in && self.in_kernel(&ab)? != b_in {
                    return Ok(Verdict::Fail(format!("kernel is not saturated at a = {a}, b = {b}")));
                }
            }
        }
        Ok(Verdict::Pass)
    }
}

fn graded_lex_cmp(x: &ExpVec, y: &ExpVec) -> std::cmp::Ordering {
    x.degree()
        .cmp(&y.degree())
        .then_with(|| y.exps().cmp(x.exps()))
}

/// Closure of a set of permutations under composition.
pub fn close_under_composition(seed: impl IntoIterator<Item = Perm>) -> Result<Vec<Perm>> {
    let mut group: BTreeSet<Perm> = seed.into_iter().collect();
    let mut frontier: Vec<Perm> = group.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let current: Vec<Perm> = group.iter().cloned().collect();
        for p in &frontier {
            for q in &current {
                for prod in [p.compose(q)?, q.compose(p)?] {
                    if group.insert(prod.clone()) {
                        next.push(prod);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(group.into_iter().collect())
}
