//! Exact foundational values: generators, words over the generators,
//! exponent vectors of the free commutative semigroup, and permutations.
//!
//! Generators are 1-based. Permutations compose right-to-left,
//! `(p ∘ q)(i) = p(q(i))`, and every module uses [`Perm::compose`] with that
//! meaning.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A generator `x_i`, stored by its 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(usize);

impl Gen {
    /// Panics if `index == 0`.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Gen(index)
    }

    pub fn from_zero(i: usize) -> Self {
        Gen(i + 1)
    }

    /// 1-based index.
    pub fn index(self) -> usize {
        self.0
    }

    /// 0-based index, for array lookup.
    pub fn zero(self) -> usize {
        self.0 - 1
    }

    pub fn all(n: usize) -> impl Iterator<Item = Gen> + Clone {
        (1..=n).map(Gen)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A word in the free monoid on the generators. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn new(letters: Vec<Gen>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| Gen::new(i)).collect())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn in_range(&self, n: usize) -> bool {
        self.0.iter().all(|g| g.index() <= n)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    /// All `n^m` words of degree `m`, in lexicographic order of indices.
    pub fn all_of_degree(n: usize, m: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|w| {
                    Gen::all(n).map(move |g| {
                        let mut w = w.clone();
                        w.push(g);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Vec<Gen>> for Word {
    fn from(letters: Vec<Gen>) -> Self {
        Word(letters)
    }
}

/// Letter counts: entry `i` is the number of occurrences of generator `i + 1`.
pub fn abelianize(w: &Word, n: usize) -> ExpVec {
    let mut exps = vec![0u32; n];
    for g in w.letters() {
        exps[g.zero()] += 1;
    }
    ExpVec(exps)
}

/// The sorted representative `x_{a_1} ... x_{a_m}` with `a_1 <= ... <= a_m`.
pub fn sort_word(w: &Word) -> Word {
    let mut letters = w.0.clone();
    letters.sort_unstable();
    Word(letters)
}

/// An element `u_1^{a_1} ... u_n^{a_n}` of the free commutative semigroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// `u_i` as an exponent vector.
    pub fn unit(n: usize, g: Gen) -> Self {
        let mut e = ExpVec::zero(n);
        e.0[g.zero()] = 1;
        e
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn get(&self, g: Gen) -> u32 {
        self.0[g.zero()]
    }

    pub fn times(&self, g: Gen) -> ExpVec {
        let mut e = self.clone();
        e.0[g.zero()] += 1;
        e
    }

    /// `self / u_g`, or `None` when `u_g` does not divide.
    pub fn divide(&self, g: Gen) -> Option<ExpVec> {
        let mut e = self.clone();
        let slot = &mut e.0[g.zero()];
        if *slot == 0 {
            return None;
        }
        *slot -= 1;
        Some(e)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `u_g^k`.
    pub fn power(n: usize, g: Gen, k: u32) -> ExpVec {
        let mut e = ExpVec::zero(n);
        e.0[g.zero()] = k;
        e
    }

    /// Relabeling by a permutation acting on the generators of `U`:
    /// `u_i ↦ u_{p(i)}`, so the result has entry `p(i)` equal to entry `i`.
    pub fn relabel(&self, p: &Perm) -> ExpVec {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[p.apply(i)] = e;
        }
        ExpVec(out)
    }

    /// Generators present, in increasing index order.
    pub fn support(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| Gen::from_zero(i))
    }

    /// Whether `self == u_g^{deg}` for some degree.
    pub fn is_pure_power_of(&self, g: Gen) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| i == g.zero() || e == 0)
    }

    /// All exponent vectors of degree `m`, in graded-lex order
    /// (lexicographically decreasing, so `u_1^m` comes first).
    pub fn all_of_degree(n: usize, m: usize) -> Vec<ExpVec> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExpVec>) {
            if prefix.len() + 1 == n {
                prefix.push(left);
                out.push(ExpVec(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(n, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if m == 0 {
                out.push(ExpVec(Vec::new()));
            }
            return out;
        }
        rec(n, m as u32, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All exponent vectors of degree `<= max`, graded-lex.
    pub fn all_up_to(n: usize, max: usize) -> Vec<ExpVec> {
        (0..=max).flat_map(|m| ExpVec::all_of_degree(n, m)).collect()
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A permutation of `{1..n}`, stored as 0-based images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// From 1-based images, e.g. `[2, 1]` for the transposition of 1 and 2.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<usize> = images
            .iter()
            .map(|&i| i.checked_sub(1).ok_or_else(|| Error::InvalidPerm(images.to_vec())))
            .collect::<Result<_>>()?;
        Perm::from_zero_images(zero).map_err(|_| Error::InvalidPerm(images.to_vec()))
    }

    pub fn from_zero_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPerm(images.iter().map(|i| i + 1).collect()));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// The transposition of two 1-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn apply_gen(&self, g: Gen) -> Gen {
        Gen::from_zero(self.0[g.zero()])
    }

    pub fn zero_images(&self) -> &[usize] {
        &self.0
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(Perm(other.0.iter().map(|&i| self.0[i]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles of length >= 2, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }

    /// All `n!` permutations, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, used, cur, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", imgs.join(","))
    }
}

/// Printable generator names. Declaration order fixes the indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, Gen>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut lookup = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), Gen::from_zero(i)).is_some() {
                return Err(Error::Syntax {
                    line: 1,
                    message: format!("generator `{name}` declared twice"),
                });
            }
        }
        Ok(Alphabet { names, lookup })
    }

    /// `x1 .. xn`, or `x, y, z, w` for `n <= 4`.
    pub fn standard(n: usize) -> Self {
        let names = if n <= 4 {
            ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Alphabet::new(names).expect("standard names are distinct")
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.zero()]
    }

    pub fn gen(&self, name: &str) -> Result<Gen> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Parses space-separated generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| self.gen(tok))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&g| self.name(g))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelianize_counts_letters() {
        assert_eq!(abelianize(&Word::empty(), 2), ExpVec::new(vec![0, 0]));
        assert_eq!(
            abelianize(&Word::from_indices(&[2, 1, 1]), 2),
            ExpVec::new(vec![2, 1])
        );
        assert_eq!(
            abelianize(&Word::from_indices(&[3, 3, 1]), 3),
            ExpVec::new(vec![1, 0, 2])
        );
    }

    #[test]
    fn sort_word_examples() {
        assert_eq!(
            sort_word(&Word::from_indices(&[2, 1])),
            Word::from_indices(&[1, 2])
        );
        assert_eq!(sort_word(&Word::empty()), Word::empty());
        assert_eq!(
            sort_word(&Word::from_indices(&[3, 1, 2])),
            Word::from_indices(&[1, 2, 3])
        );
    }

    #[test]
    fn compose_convention() {
        let id = Perm::identity(3);
        let c = Perm::from_images(&[2, 3, 1]).unwrap(); // (1 2 3)
        let t = Perm::transposition(3, 1, 2);
        assert_eq!(id.compose(&c).unwrap(), c);
        let t2 = Perm::transposition(2, 1, 2);
        assert!(t2.compose(&t2).unwrap().is_identity());
        // (1 2 3) ∘ (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        assert_eq!(c.compose(&t).unwrap().images(), vec![3, 2, 1]);
        assert!(matches!(
            id.compose(&Perm::identity(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn perm_validation() {
        assert!(Perm::from_images(&[1, 1]).is_err());
        assert!(Perm::from_images(&[0, 1]).is_err());
        assert!(Perm::from_images(&[3, 1]).is_err());
        assert_eq!(Perm::from_images(&[2, 1]).unwrap().cycle_string(), "(1 2)");
    }

    #[test]
    fn graded_lex_order() {
        let d2: Vec<String> = ExpVec::all_of_degree(2, 2)
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(d2, ["(2,0)", "(1,1)", "(0,2)"]);
        assert_eq!(ExpVec::all_of_degree(3, 3).len(), 10);
        assert_eq!(ExpVec::all_up_to(2, 3).len(), 1 + 2 + 3 + 4);
    }

    #[test]
    fn relabel_moves_exponents() {
        let p = Perm::from_images(&[2, 3, 1]).unwrap();
        let a = ExpVec::new(vec![5, 0, 1]);
        assert_eq!(a.relabel(&p), ExpVec::new(vec![1, 5, 0]));
    }

    #[test]
    fn alphabet_words() {
        let a = Alphabet::new(vec!["x".into(), "y".into()]).unwrap();
        let w = a.parse_word("y x x").unwrap();
        assert_eq!(w, Word::from_indices(&[2, 1, 1]));
        assert_eq!(a.format_word(&w), "y x x");
        assert!(matches!(a.parse_word("x z"), Err(Error::UnknownGenerator(_))));
        assert!(Alphabet::new(vec!["x".into(), "x".into()]).is_err());
    }
}
