//! The I-structure of the semigroup `S = ⟨X; x_i x_j = r(x_i x_j)⟩`.
//!
//! [`build_itable`] runs the degree-by-degree construction of the letters
//! `x_{b,i}` with `v(u_i b) = x_{b,i} v(b)`:
//!
//! * degree 0: `x_{1,i} = x_{σ(i)}`;
//! * `a = b u_j` with `j ≠ i`: `x_{a,i}` is the unique `p` with
//!   `r(p x_{b,j}) = * x_{b,i}`, and it must not depend on the choice of `j`;
//! * `a = u_i^m`: `x_{a,i}` is the one letter missing from the rest of the row.
//!
//! Every row is a permutation of `X`, and neighbouring rows satisfy
//! `r(x_{b u_j, i} x_{b, j}) = x_{b u_i, j} x_{b, i}` for all `i, j`. Both are
//! verified after the build rather than assumed.
//!
//! Decoding a word reads it right to left: the last letter picks `i_m` in the
//! row of `1`, the next one picks `i_{m-1}` in the row of `u_{i_m}`, and so
//! on. The exponent vector of the indices read is the element of `U`
//! representing the word's class, which decides the word problem.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::types::{Alphabet, ExpVec, Gen, Perm, Word};
use crate::ybr::{check_involutive, check_nondegenerate, check_yb, PairMap};

pub const DEFAULT_DEGREE: usize = 8;

/// The letters `x_{b,i}` for every `b` of degree at most `bound - 1`.
#[derive(Clone, Debug)]
pub struct ITable {
    n: usize,
    bound: usize,
    sigma: Perm,
    r: PairMap,
    /// Graded-lex, degree 0 first.
    rows: Vec<ExpVec>,
    index: HashMap<ExpVec, usize>,
    /// `entries[row * n + i]` is `x_{b,i+1}`.
    entries: Vec<Gen>,
    /// `positions[row * n + letter]` is the `i` with `x_{b,i} = letter`.
    positions: Vec<Gen>,
}

/// A canonical form: the element of `U` and its word `v(exps)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub exps: ExpVec,
    pub word: Word,
}

pub fn build_itable(r: &PairMap, bound: usize, sigma: &Perm) -> Result<ITable> {
    let n = r.n();
    if bound < 2 {
        return Err(Error::OutOfRange(format!("degree bound must be at least 2, got {bound}")));
    }
    if sigma.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: sigma.n(),
        });
    }
    if !check_involutive(r).passed() {
        return Err(Error::Precondition("r is not involutive".into()));
    }
    if !check_yb(r).passed() {
        return Err(Error::Precondition("r does not satisfy the braid relation".into()));
    }
    if !check_nondegenerate(r).passed() {
        return Err(Error::Precondition("r is degenerate".into()));
    }

    let rows = ExpVec::all_up_to(n, bound - 1);
    let index: HashMap<ExpVec, usize> = rows.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let mut table = ITable {
        n,
        bound,
        sigma: sigma.clone(),
        r: r.clone(),
        entries: Vec::with_capacity(rows.len() * n),
        positions: vec![Gen::new(1); rows.len() * n],
        rows,
        index,
    };

    for i in Gen::all(n) {
        table.entries.push(sigma.apply_gen(i));
    }
    for row in 1..table.rows.len() {
        let a = table.rows[row].clone();
        let mut letters: Vec<Option<Gen>> = vec![None; n];
        for i in Gen::all(n) {
            if a.is_pure_power_of(i) {
                continue;
            }
            let mut chosen: Option<(Gen, Gen)> = None;
            for j in a.support().filter(|&j| j != i) {
                let b = a.divide(j).expect("j is in the support");
                let (bj, bi) = (table.entry_unchecked(&b, j), table.entry_unchecked(&b, i));
                let p = solve_left(r, bj, bi)?;
                match chosen {
                    None => chosen = Some((j, p)),
                    Some((j0, p0)) if p0 != p => {
                        return Err(Error::Consistency(format!(
                            "x_{{{a},{}}} is {} via u_{} but {} via u_{}",
                            i.index(),
                            p0,
                            j0.index(),
                            p,
                            j.index()
                        )))
                    }
                    Some(_) => {}
                }
            }
            letters[i.zero()] = chosen.map(|(_, p)| p);
        }
        // the pure power u_i^m, if present, takes the remaining letter
        if let Some(k) = letters.iter().position(Option::is_none) {
            let used: HashSet<Gen> = letters.iter().flatten().copied().collect();
            let missing: Vec<Gen> = Gen::all(n).filter(|g| !used.contains(g)).collect();
            if missing.len() != 1 || letters.iter().filter(|l| l.is_none()).count() != 1 {
                return Err(Error::Consistency(format!(
                    "row {a} cannot be completed to a permutation of X"
                )));
            }
            letters[k] = Some(missing[0]);
        }
        table.entries.extend(letters.into_iter().map(|l| l.expect("row filled")));
    }
    for row in 0..table.rows.len() {
        for i in 0..n {
            let letter = table.entries[row * n + i];
            table.positions[row * n + letter.zero()] = Gen::from_zero(i);
        }
    }
    table.verify()?;
    Ok(table)
}

/// The unique `p` with `r(p · left) = * · right`.
fn solve_left(r: &PairMap, left: Gen, right: Gen) -> Result<Gen> {
    let mut found = Gen::all(r.n()).filter(|&p| r.get(p, left).1 == right);
    match (found.next(), found.next()) {
        (Some(p), None) => Ok(p),
        _ => Err(Error::Consistency(format!(
            "r(p {left}) = * {right} does not have a unique solution"
        ))),
    }
}

impl ITable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The degree bound `D`: rows exist up to degree `D - 1` and words
    /// up to degree `D` can be decoded.
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn r(&self) -> &PairMap {
        &self.r
    }

    /// Row keys in graded-lex order.
    pub fn rows(&self) -> &[ExpVec] {
        &self.rows
    }

    fn check_degree(&self, degree: usize, bound: usize) -> Result<()> {
        if degree > bound {
            Err(Error::DegreeBound { degree, bound })
        } else {
            Ok(())
        }
    }

    fn entry_unchecked(&self, b: &ExpVec, i: Gen) -> Gen {
        self.entries[self.index[b] * self.n + i.zero()]
    }

    /// `x_{b,i}`.
    pub fn entry(&self, b: &ExpVec, i: Gen) -> Result<Gen> {
        self.check_degree(b.degree(), self.bound - 1)?;
        Ok(self.entry_unchecked(b, i))
    }

    /// `[x_{b,1}, ..., x_{b,n}]`.
    pub fn row(&self, b: &ExpVec) -> Result<&[Gen]> {
        self.check_degree(b.degree(), self.bound - 1)?;
        let k = self.index[b];
        Ok(&self.entries[k * self.n..(k + 1) * self.n])
    }

    /// Row bijectivity, the compatibility relation for all `i, j` (including
    /// `i = j`), distinctness of `x_{a,i}` and `x_{a,j}` away from pure powers,
    /// and the degree-0 row.
    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        for i in Gen::all(n) {
            if self.entry_unchecked(&ExpVec::zero(n), i) != self.sigma.apply_gen(i) {
                return Err(Error::Consistency("degree-0 row differs from sigma".into()));
            }
        }
        for b in &self.rows {
            let letters: HashSet<Gen> = Gen::all(n).map(|i| self.entry_unchecked(b, i)).collect();
            if letters.len() != n {
                return Err(Error::Consistency(format!("row {b} is not a permutation of X")));
            }
            for i in Gen::all(n) {
                for j in Gen::all(n).filter(|&j| j != i) {
                    if !b.is_pure_power_of(i)
                        && !b.is_pure_power_of(j)
                        && self.entry_unchecked(b, i) == self.entry_unchecked(b, j)
                    {
                        return Err(Error::Consistency(format!(
                            "x_{{{b},{}}} = x_{{{b},{}}}",
                            i.index(),
                            j.index()
                        )));
                    }
                }
            }
            if b.degree() + 2 > self.bound {
                continue;
            }
            if let Verdict::Fail(msg) = self.compatibility_at(b) {
                return Err(Error::Consistency(msg));
            }
        }
        Ok(())
    }

    /// `r(x_{b u_j, i} x_{b, j}) = x_{b u_i, j} x_{b, i}` for all `i, j`.
    fn compatibility_at(&self, b: &ExpVec) -> Verdict<String> {
        for i in Gen::all(self.n) {
            for j in Gen::all(self.n) {
                let lhs = (self.entry_unchecked(&b.times(j), i), self.entry_unchecked(b, j));
                let rhs = (self.entry_unchecked(&b.times(i), j), self.entry_unchecked(b, i));
                if self.r.get(lhs.0, lhs.1) != rhs {
                    return Verdict::Fail(format!(
                        "compatibility fails at b = {b}, i = {}, j = {}",
                        i.index(),
                        j.index()
                    ));
                }
            }
        }
        Verdict::Pass
    }

    /// `v(a)`, peeling the largest generator index present at each step.
    pub fn v_of(&self, a: &ExpVec) -> Result<Word> {
        self.check_degree(a.degree(), self.bound)?;
        let mut letters = Vec::with_capacity(a.degree());
        let mut cur = a.clone();
        while let Some(k) = cur.support().last() {
            let b = cur.divide(k).expect("k is in the support");
            letters.push(self.entry_unchecked(&b, k));
            cur = b;
        }
        Ok(Word::new(letters))
    }

    /// `v(a)` built by peeling generators in the given order; `order` must
    /// list each `u_i` exactly `a_i` times.
    pub fn v_of_peeling(&self, a: &ExpVec, order: &[Gen]) -> Result<Word> {
        self.check_degree(a.degree(), self.bound)?;
        let mut letters = Vec::with_capacity(a.degree());
        let mut cur = a.clone();
        for &k in order {
            let b = cur
                .divide(k)
                .ok_or_else(|| Error::Precondition(format!("u_{} does not divide {cur}", k.index())))?;
            letters.push(self.entry_unchecked(&b, k));
            cur = b;
        }
        if cur.degree() != 0 {
            return Err(Error::Precondition("peeling order does not exhaust a".into()));
        }
        Ok(Word::new(letters))
    }

    /// The unique `a ∈ U` with `v(a) = w` in `S`.
    pub fn v_inverse(&self, w: &Word) -> Result<ExpVec> {
        self.check_degree(w.degree(), self.bound)?;
        if !w.in_range(self.n) {
            return Err(Error::OutOfRange("word uses a generator outside the alphabet".into()));
        }
        let mut b = ExpVec::zero(self.n);
        for &letter in w.letters().iter().rev() {
            let row = self.index[&b];
            let i = self.positions[row * self.n + letter.zero()];
            b = b.times(i);
        }
        Ok(b)
    }

    pub fn normal_form(&self, w: &Word) -> Result<NormalForm> {
        let exps = self.v_inverse(w)?;
        let word = self.v_of(&exps)?;
        Ok(NormalForm { exps, word })
    }

    /// Decides `w1 = w2` in `S`.
    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.v_inverse(w1)? == self.v_inverse(w2)?)
    }

    /// Number of distinct elements of `S` of degree `m`.
    pub fn hilbert_count(&self, m: usize) -> Result<usize> {
        self.check_degree(m, self.bound)?;
        let classes: HashSet<ExpVec> = Word::all_of_degree(self.n, m)
            .iter()
            .map(|w| self.v_inverse(w))
            .collect::<Result<_>>()?;
        Ok(classes.len())
    }

    /// `x_{u_i,j} x_{1,i} = x_{u_j,i} x_{1,j}` for `i < j`.
    pub fn degree2_relations(&self) -> Vec<(Word, Word)> {
        let one = ExpVec::zero(self.n);
        let mut out = Vec::new();
        for i in Gen::all(self.n) {
            let ui = ExpVec::unit(self.n, i);
            for j in Gen::all(self.n).filter(|&j| j > i) {
                let uj = ExpVec::unit(self.n, j);
                out.push((
                    Word::new(vec![self.entry_unchecked(&ui, j), self.entry_unchecked(&one, i)]),
                    Word::new(vec![self.entry_unchecked(&uj, i), self.entry_unchecked(&one, j)]),
                ));
            }
        }
        out
    }

    /// The text dump: a header line, then `(b) i -> letter` per entry in
    /// graded-lex row order.
    pub fn dump(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        writeln!(out, "itable n={} D={} sigma={}", self.n, self.bound, self.sigma).unwrap();
        for b in &self.rows {
            for i in Gen::all(self.n) {
                writeln!(
                    out,
                    "{b} {} -> {}",
                    i.index(),
                    alphabet.name(self.entry_unchecked(b, i))
                )
                .unwrap();
            }
        }
        out
    }
}
