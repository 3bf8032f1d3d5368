//! Set-theoretic Yang-Baxter maps `r : X² → X²`.
//!
//! A [`PairMap`] is built from a presentation (swap the two sides of every
//! relation, fix everything else) or read directly from an r-table file. The
//! three axioms checked here are involutivity, the braid relation
//! `r1 r2 r1 = r2 r1 r2` on `X³`, and non-degeneracy in the form: for all
//! `a, b` there is exactly one `(c, d)` with `r(x_c x_a) = x_d x_b`, and
//! `c = d` when `a = b`.

mod enumerate;
mod orbits;

pub use enumerate::{enumerate_solutions, Census, MAX_ENUMERATION_N};
pub use orbits::{classify_orbits3, Orbit, OrbitKind, OrbitReport, StarCountFailure};

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::presentation::{strip_comment, Presentation};
use crate::report::Verdict;
use crate::types::{Alphabet, Gen, Perm, Word};

/// A total self-map of `X²`, indexed by `(a, b)` for the word `x_a x_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMap {
    n: usize,
    table: Vec<(Gen, Gen)>,
}

impl PairMap {
    pub fn from_table(n: usize, table: Vec<(Gen, Gen)>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                got: table.len(),
            });
        }
        if table.iter().any(|(c, d)| c.index() > n || d.index() > n) {
            return Err(Error::OutOfRange("r-table value outside the alphabet".into()));
        }
        Ok(PairMap { n, table })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Gen, Gen) -> (Gen, Gen)) -> Self {
        let table = Gen::all(n)
            .flat_map(|a| Gen::all(n).map(move |b| (a, b)))
            .map(|(a, b)| f(a, b))
            .collect();
        PairMap { n, table }
    }

    pub fn identity(n: usize) -> Self {
        PairMap::from_fn(n, |a, b| (a, b))
    }

    /// `x_a x_b ↦ x_b x_a`; the map of the commutative presentation.
    pub fn flip(n: usize) -> Self {
        PairMap::from_fn(n, |a, b| (b, a))
    }

    /// Swaps the two sides of every relation and fixes all other pairs.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        let n = p.n();
        let mut r = PairMap::identity(n);
        let mut touched = HashSet::new();
        for rel in p.relations() {
            for (from, to) in [(rel.lhs_pair(), rel.rhs_pair()), (rel.rhs_pair(), rel.lhs_pair())] {
                if !touched.insert(from) {
                    return Err(Error::AmbiguousRelation {
                        word: p.alphabet().format_word(&Word::new(vec![from.0, from.1])),
                    });
                }
                r.table[from.0.zero() * n + from.1.zero()] = to;
            }
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Gen, b: Gen) -> (Gen, Gen) {
        self.table[a.zero() * self.n + b.zero()]
    }

    pub fn table(&self) -> &[(Gen, Gen)] {
        &self.table
    }

    /// Applies `r` to the letters at 0-based positions `pos, pos + 1`.
    /// `apply_at(w, 0)` is `r1`, `apply_at(w, 1)` is `r2`.
    pub fn apply_at(&self, w: &Word, pos: usize) -> Word {
        let mut letters = w.letters().to_vec();
        let (c, d) = self.get(letters[pos], letters[pos + 1]);
        letters[pos] = c;
        letters[pos + 1] = d;
        Word::new(letters)
    }

    /// The conjugate map `(π a, π b) ↦ (π × π)(r(a, b))`.
    pub fn relabel(&self, p: &Perm) -> PairMap {
        let mut table = vec![(Gen::new(1), Gen::new(1)); self.n * self.n];
        for a in Gen::all(self.n) {
            for b in Gen::all(self.n) {
                let (c, d) = self.get(a, b);
                let (pa, pb) = (p.apply_gen(a), p.apply_gen(b));
                table[pa.zero() * self.n + pb.zero()] = (p.apply_gen(c), p.apply_gen(d));
            }
        }
        PairMap { n: self.n, table }
    }

    /// Pairs moved by `r`, each unordered relation listed once as
    /// `(w, r(w))` with `w < r(w)`.
    pub fn moved_pairs(&self) -> Vec<((Gen, Gen), (Gen, Gen))> {
        Gen::all(self.n)
            .flat_map(|a| Gen::all(self.n).map(move |b| (a, b)))
            .filter_map(|ab| {
                let cd = self.get(ab.0, ab.1);
                (ab < cd).then_some((ab, cd))
            })
            .collect()
    }

    /// Compact one-line form: the images `cd` of all pairs in table order, as
    /// 1-based digits.
    pub fn fingerprint(&self) -> String {
        self.table
            .iter()
            .map(|(c, d)| format!("{}{}", c.index(), d.index()))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_rtable(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        writeln!(out, "gens {}", alphabet.names().join(" ")).unwrap();
        writeln!(out, "rtable").unwrap();
        for a in Gen::all(self.n) {
            for b in Gen::all(self.n) {
                let (c, d) = self.get(a, b);
                writeln!(
                    out,
                    "{} {} -> {} {}",
                    alphabet.name(a),
                    alphabet.name(b),
                    alphabet.name(c),
                    alphabet.name(d)
                )
                .unwrap();
            }
        }
        out
    }
}

/// Parses an r-table file: a `gens` line, an `rtable` line, then exactly
/// `n²` lines `a b -> c d`, one per pair.
pub fn parse_rtable(text: &str) -> Result<(Alphabet, PairMap)> {
    let mut alphabet: Option<Alphabet> = None;
    let mut in_table = false;
    let mut entries: Vec<Option<(Gen, Gen)>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| Error::Syntax {
            line: line_no,
            message: message.to_string(),
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (toks[0], &alphabet, in_table) {
            ("gens", None, _) => {
                let a = Alphabet::new(toks[1..].iter().map(|s| s.to_string()).collect())?;
                if a.n() == 0 {
                    return Err(syntax("`gens` needs at least one name"));
                }
                entries = vec![None; a.n() * a.n()];
                alphabet = Some(a);
            }
            ("rtable", Some(_), false) if toks.len() == 1 => in_table = true,
            (_, Some(a), true) => {
                if toks.len() != 5 || toks[2] != "->" {
                    return Err(syntax("expected `a b -> c d`"));
                }
                let g = |t: &str| a.gen(t);
                let (x, y, c, d) = (g(toks[0])?, g(toks[1])?, g(toks[3])?, g(toks[4])?);
                let slot = &mut entries[x.zero() * a.n() + y.zero()];
                if slot.is_some() {
                    return Err(syntax("pair listed twice"));
                }
                *slot = Some((c, d));
            }
            _ => return Err(syntax("expected `gens`, then `rtable`, then table lines")),
        }
    }
    let alphabet = alphabet.ok_or_else(|| Error::Syntax {
        line: 1,
        message: "missing `gens` line".into(),
    })?;
    if !in_table {
        return Err(Error::Syntax {
            line: 1,
            message: "missing `rtable` directive".into(),
        });
    }
    let n = alphabet.n();
    let got = entries.iter().filter(|e| e.is_some()).count();
    let table: Option<Vec<(Gen, Gen)>> = entries.into_iter().collect();
    let table = table.ok_or(Error::SizeMismatch { expected: n * n, got })?;
    let r = PairMap::from_table(n, table)?;
    Ok((alphabet, r))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbFailure {
    pub word: Word,
    pub left: Word,
    pub right: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NondegenerateFailure {
    /// The number of `(c, d)` with `r(x_c x_a) = x_d x_b` is not one.
    NotUnique { a: Gen, b: Gen, solutions: Vec<(Gen, Gen)> },
    /// `a = b` but the unique solution has `c ≠ d`.
    Diagonal { a: Gen, c: Gen, d: Gen },
}

/// `r(r(a, b)) = (a, b)` for all pairs; the witness is a pair where it fails.
pub fn check_involutive(r: &PairMap) -> Verdict<(Gen, Gen)> {
    for a in Gen::all(r.n) {
        for b in Gen::all(r.n) {
            let (c, d) = r.get(a, b);
            if r.get(c, d) != (a, b) {
                return Verdict::Fail((a, b));
            }
        }
    }
    Verdict::Pass
}

/// `r1 r2 r1 = r2 r1 r2` on all `n³` words of degree 3.
pub fn check_yb(r: &PairMap) -> Verdict<YbFailure> {
    for w in Word::all_of_degree(r.n, 3) {
        let left = r.apply_at(&r.apply_at(&r.apply_at(&w, 0), 1), 0);
        let right = r.apply_at(&r.apply_at(&r.apply_at(&w, 1), 0), 1);
        if left != right {
            return Verdict::Fail(YbFailure { word: w, left, right });
        }
    }
    Verdict::Pass
}

pub fn check_nondegenerate(r: &PairMap) -> Verdict<NondegenerateFailure> {
    for a in Gen::all(r.n) {
        for b in Gen::all(r.n) {
            let solutions: Vec<(Gen, Gen)> = Gen::all(r.n)
                .filter_map(|c| {
                    let (d, b2) = r.get(c, a);
                    (b2 == b).then_some((c, d))
                })
                .collect();
            if solutions.len() != 1 {
                return Verdict::Fail(NondegenerateFailure::NotUnique { a, b, solutions });
            }
            let (c, d) = solutions[0];
            if a == b && c != d {
                return Verdict::Fail(NondegenerateFailure::Diagonal { a, c, d });
            }
        }
    }
    Verdict::Pass
}

/// All three axioms at once; the first failure is returned as a message.
pub fn check_axioms(r: &PairMap, alphabet: &Alphabet) -> Verdict<String> {
    if let Verdict::Fail(w) = check_involutive(r) {
        return Verdict::Fail(format!("involutive: {}", describe_pair_failure(r, w, alphabet)));
    }
    if let Verdict::Fail(w) = check_yb(r) {
        return Verdict::Fail(format!("yang-baxter: {}", w.describe(alphabet)));
    }
    if let Verdict::Fail(w) = check_nondegenerate(r) {
        return Verdict::Fail(format!("nondegenerate: {}", w.describe(alphabet)));
    }
    Verdict::Pass
}

pub fn describe_pair_failure(r: &PairMap, (a, b): (Gen, Gen), alphabet: &Alphabet) -> String {
    let (c, d) = r.get(a, b);
    let (e, f) = r.get(c, d);
    let n = |g: Gen| alphabet.name(g).to_string();
    format!(
        "r({} {}) = {} {} but r({} {}) = {} {}",
        n(a),
        n(b),
        n(c),
        n(d),
        n(c),
        n(d),
        n(e),
        n(f)
    )
}

impl YbFailure {
    pub fn describe(&self, a: &Alphabet) -> String {
        format!(
            "on `{}`: r1 r2 r1 gives `{}`, r2 r1 r2 gives `{}`",
            a.format_word(&self.word),
            a.format_word(&self.left),
            a.format_word(&self.right)
        )
    }
}

impl NondegenerateFailure {
    pub fn describe(&self, al: &Alphabet) -> String {
        match self {
            NondegenerateFailure::NotUnique { a, b, solutions } => {
                let sols: Vec<String> = solutions
                    .iter()
                    .map(|(c, d)| format!("(c,d)=({},{})", al.name(*c), al.name(*d)))
                    .collect();
                format!(
                    "r(x_c {}) = x_d {} has {} solutions [{}]",
                    al.name(*a),
                    al.name(*b),
                    solutions.len(),
                    sols.join(" ")
                )
            }
            NondegenerateFailure::Diagonal { a, c, d } => format!(
                "a = b = {} but the solution is (c,d)=({},{})",
                al.name(*a),
                al.name(*c),
                al.name(*d)
            ),
        }
    }
}

/// The bijections of `X²` induced by `r(z t) = x y`, each tabulated over
/// `(z, t)` in pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedBijections {
    pub zt_to_ty: Vec<(Gen, Gen)>,
    pub zt_to_xy: Vec<(Gen, Gen)>,
    pub zt_to_zx: Vec<(Gen, Gen)>,
}

pub fn derived_bijections(r: &PairMap) -> Result<DerivedBijections> {
    let n = r.n;
    let mut out = DerivedBijections {
        zt_to_ty: Vec::with_capacity(n * n),
        zt_to_xy: Vec::with_capacity(n * n),
        zt_to_zx: Vec::with_capacity(n * n),
    };
    for z in Gen::all(n) {
        for t in Gen::all(n) {
            let (x, y) = r.get(z, t);
            out.zt_to_ty.push((t, y));
            out.zt_to_xy.push((x, y));
            out.zt_to_zx.push((z, x));
        }
    }
    for (name, table) in [
        ("(z,t) -> (t,y)", &out.zt_to_ty),
        ("(z,t) -> (x,y)", &out.zt_to_xy),
        ("(z,t) -> (z,x)", &out.zt_to_zx),
    ] {
        let distinct: HashSet<_> = table.iter().collect();
        if distinct.len() != n * n {
            return Err(Error::Consistency(format!("{name} is not a bijection")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn g(i: usize) -> Gen {
        Gen::new(i)
    }

    pub(crate) fn square_map() -> PairMap {
        PairMap::from_presentation(&parse_presentation("gens x y\nrel y y = x x").unwrap()).unwrap()
    }

    #[test]
    fn build_from_square_relation() {
        let r = square_map();
        assert_eq!(r.get(g(1), g(1)), (g(2), g(2)));
        assert_eq!(r.get(g(2), g(2)), (g(1), g(1)));
        assert_eq!(r.get(g(1), g(2)), (g(1), g(2)));
        assert_eq!(r.get(g(2), g(1)), (g(2), g(1)));
    }

    #[test]
    fn build_commutative_and_trivial() {
        let r = PairMap::from_presentation(&Presentation::commutative(2)).unwrap();
        assert_eq!(r, PairMap::flip(2));
        let r1 = PairMap::from_presentation(&parse_presentation("gens x").unwrap()).unwrap();
        assert_eq!(r1, PairMap::identity(1));
    }

    #[test]
    fn build_rejects_shared_word() {
        let p = parse_presentation("gens x y\nrel y y = x x\nrel x x = x y").unwrap();
        assert!(matches!(
            PairMap::from_presentation(&p),
            Err(Error::AmbiguousRelation { .. })
        ));
    }

    #[test]
    fn involutive_examples() {
        assert!(check_involutive(&square_map()).passed());
        assert!(check_involutive(&PairMap::identity(3)).passed());
        // (1,1) -> (1,2) -> (2,1) -> (1,1)
        let cyc = PairMap::from_fn(2, |a, b| match (a.index(), b.index()) {
            (1, 1) => (g(1), g(2)),
            (1, 2) => (g(2), g(1)),
            (2, 1) => (g(1), g(1)),
            _ => (a, b),
        });
        assert_eq!(check_involutive(&cyc), Verdict::Fail((g(1), g(1))));
    }

    #[test]
    fn yb_examples() {
        assert!(check_yb(&PairMap::flip(3)).passed());
        assert!(check_yb(&square_map()).passed());
        let bad = PairMap::from_fn(2, |a, b| match (a.index(), b.index()) {
            (1, 1) => (g(1), g(2)),
            (1, 2) => (g(1), g(1)),
            _ => (a, b),
        });
        assert!(check_involutive(&bad).passed());
        let w = check_yb(&bad);
        let f = w.witness().expect("braid relation fails");
        assert_ne!(f.left, f.right);
    }

    #[test]
    fn nondegenerate_examples() {
        assert!(check_nondegenerate(&square_map()).passed());
        assert!(check_nondegenerate(&PairMap::flip(3)).passed());
        match check_nondegenerate(&PairMap::identity(2)) {
            Verdict::Fail(NondegenerateFailure::NotUnique { a, b, solutions }) => {
                assert_eq!((a, b), (g(1), g(1)));
                assert_eq!(solutions.len(), 2);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn nondegenerate_square_unique_solution() {
        // (a,b) = (x,y): only c = x works, via r(x x) = y y
        let r = square_map();
        let sols: Vec<_> = Gen::all(2)
            .filter_map(|c| {
                let (d, b2) = r.get(c, g(1));
                (b2 == g(2)).then_some((c, d))
            })
            .collect();
        assert_eq!(sols, vec![(g(1), g(2))]);
    }

    #[test]
    fn derived_bijection_tables() {
        let flip = derived_bijections(&PairMap::flip(2)).unwrap();
        // r(z t) = t z, so (t, y) = (t, z)
        assert_eq!(flip.zt_to_ty, vec![(g(1), g(1)), (g(2), g(1)), (g(1), g(2)), (g(2), g(2))]);

        let sq = derived_bijections(&square_map()).unwrap();
        // (z,t) = (x,x) has r = y y, so (t,y) = (x,y)
        assert_eq!(sq.zt_to_xy[0], (g(2), g(2)));
        assert_eq!(sq.zt_to_ty[0], (g(1), g(2)));
        let from_xy: Vec<_> = sq
            .zt_to_ty
            .iter()
            .enumerate()
            .filter(|(_, &ty)| ty == (g(1), g(2)))
            .collect();
        assert_eq!(from_xy.len(), 1);

        let one = derived_bijections(&PairMap::identity(1)).unwrap();
        assert_eq!(one.zt_to_zx, vec![(g(1), g(1))]);

        assert!(derived_bijections(&PairMap::identity(2)).is_err());
    }

    #[test]
    fn rtable_roundtrip() {
        let alpha = Alphabet::standard(2);
        let text = square_map().format_rtable(&alpha);
        assert_eq!(
            text,
            "gens x y\nrtable\nx x -> y y\nx y -> x y\ny x -> y x\ny y -> x x\n"
        );
        let (a2, r2) = parse_rtable(&text).unwrap();
        assert_eq!(a2, alpha);
        assert_eq!(r2, square_map());
    }

    #[test]
    fn rtable_errors() {
        assert!(matches!(
            parse_rtable("gens x y\nrtable\nx x -> y y\n"),
            Err(Error::SizeMismatch { expected: 4, got: 1 })
        ));
        assert!(matches!(
            parse_rtable("gens x\nrtable\nx x -> x x\nx x -> x x"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_rtable("gens x\nrtable\nx x => x x"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_rtable("gens x\nx x -> x x"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn relabel_conjugates() {
        let swap = Perm::transposition(2, 1, 2);
        assert_eq!(square_map().relabel(&swap), square_map());
        let r = PairMap::from_fn(3, |a, b| if (a.index(), b.index()) == (1, 2) { (g(2), g(1)) } else if (a.index(), b.index()) == (2, 1) { (g(1), g(2)) } else { (a, b) });
        let c = Perm::from_images(&[3, 1, 2]).unwrap();
        let rc = r.relabel(&c);
        assert_eq!(rc.get(g(3), g(1)), (g(1), g(3)));
    }
}
