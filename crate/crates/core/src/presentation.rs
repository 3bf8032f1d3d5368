//! Quadratic presentations `⟨X; R⟩`: parsing, formatting, and the three
//! shape conditions on the relations together with the cyclic condition.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::types::{sort_word, Alphabet, Gen, Word};
use crate::ybr::PairMap;

/// A defining relation `lhs = rhs` between two degree-2 words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    fn pair(w: &Word) -> (Gen, Gen) {
        (w.letters()[0], w.letters()[1])
    }

    pub fn lhs_pair(&self) -> (Gen, Gen) {
        Self::pair(&self.lhs)
    }

    pub fn rhs_pair(&self) -> (Gen, Gen) {
        Self::pair(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Validates that every relation is quadratic, in range, non-trivial, and
    /// not repeated as an unordered pair.
    pub fn new(alphabet: Alphabet, relations: Vec<Relation>) -> Result<Self> {
        let n = alphabet.n();
        let mut seen = HashSet::new();
        for (k, rel) in relations.iter().enumerate() {
            for side in [&rel.lhs, &rel.rhs] {
                if side.degree() != 2 {
                    return Err(Error::NotQuadratic {
                        line: k + 2,
                        degree: side.degree(),
                    });
                }
                if !side.in_range(n) {
                    return Err(Error::OutOfRange(format!("relation {} uses a generator beyond {n}", k + 1)));
                }
            }
            if rel.lhs == rel.rhs {
                return Err(Error::Syntax {
                    line: k + 2,
                    message: "relation has identical sides".into(),
                });
            }
            let key = if rel.lhs < rel.rhs {
                (rel.lhs.clone(), rel.rhs.clone())
            } else {
                (rel.rhs.clone(), rel.lhs.clone())
            };
            if !seen.insert(key) {
                return Err(Error::Syntax {
                    line: k + 2,
                    message: "duplicate relation".into(),
                });
            }
        }
        Ok(Presentation { alphabet, relations })
    }

    pub fn n(&self) -> usize {
        self.alphabet.n()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The commutative presentation `x_j x_i = x_i x_j`, `j > i`.
    pub fn commutative(n: usize) -> Self {
        let mut rels = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                rels.push(Relation {
                    lhs: Word::from_indices(&[j, i]),
                    rhs: Word::from_indices(&[i, j]),
                });
            }
        }
        Presentation::new(Alphabet::standard(n), rels).expect("commutative presentation is valid")
    }

    pub fn format_relation(&self, rel: &Relation) -> String {
        format!(
            "{} = {}",
            self.alphabet.format_word(&rel.lhs),
            self.alphabet.format_word(&rel.rhs)
        )
    }

    /// Re-emits the file format: declaration order and relation order preserved,
    /// comments dropped.
    pub fn format(&self) -> String {
        let mut out = String::new();
        writeln!(out, "gens {}", self.alphabet.names().join(" ")).unwrap();
        for rel in &self.relations {
            writeln!(out, "rel {}", self.format_relation(rel)).unwrap();
        }
        out
    }
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses `gens` on the first directive line followed by `rel a b = c d` lines.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let directive = toks.next().unwrap();
        match (directive, &alphabet) {
            ("gens", None) => {
                let names: Vec<String> = toks.map(str::to_string).collect();
                if names.is_empty() {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: "`gens` needs at least one name".into(),
                    });
                }
                alphabet = Some(Alphabet::new(names).map_err(|e| match e {
                    Error::Syntax { message, .. } => Error::Syntax {
                        line: line_no,
                        message,
                    },
                    other => other,
                })?);
            }
            ("gens", Some(_)) => {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "`gens` declared twice".into(),
                })
            }
            ("rel", Some(alpha)) => {
                let body = line["rel".len()..].trim();
                let (l, r) = body.split_once('=').ok_or_else(|| Error::Syntax {
                    line: line_no,
                    message: "expected `rel <word> = <word>`".into(),
                })?;
                let lhs = alpha.parse_word(l)?;
                let rhs = alpha.parse_word(r)?;
                for side in [&lhs, &rhs] {
                    if side.degree() != 2 {
                        return Err(Error::NotQuadratic {
                            line: line_no,
                            degree: side.degree(),
                        });
                    }
                }
                relations.push((line_no, Relation { lhs, rhs }));
            }
            (_, None) => {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "expected `gens` as the first directive".into(),
                })
            }
            (other, Some(_)) => {
                return Err(Error::Syntax {
                    line: line_no,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let alphabet = alphabet.ok_or_else(|| Error::Syntax {
        line: 1,
        message: "missing `gens` line".into(),
    })?;
    let lines: Vec<usize> = relations.iter().map(|(l, _)| *l).collect();
    Presentation::new(alphabet, relations.into_iter().map(|(_, r)| r).collect()).map_err(|e| match e {
        // report the file line rather than the relation ordinal
        Error::Syntax { line, message } => Error::Syntax {
            line: lines.get(line - 2).copied().unwrap_or(line),
            message,
        },
        other => other,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Star1Failure {
    /// Relation index (0-based) whose sides are not `x_j x_i = x_i' x_j'`
    /// with `j > i`, `i' < j'`, `i' < j`.
    BadShape { relation: usize },
    /// Two relations share the left side `x_j x_i`.
    DuplicateLeft { j: Gen, i: Gen },
    /// No relation has left side `x_j x_i`.
    MissingLeft { j: Gen, i: Gen },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Star2Failure {
    Duplicated { i: Gen, j: Gen },
    Missing { i: Gen, j: Gen },
}

/// A degree-3 class without exactly one sorted member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star3Failure {
    pub class: Vec<Word>,
    pub sorted_members: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicFailure {
    /// `r1 r2 (x_a x_a x_b)` is not of the form `x_c x_d x_d`.
    NotDiagonal { source: Word, image: Word },
    /// This element of `X × Δ2` is not reached.
    NotOnto { missing: Word },
}

pub fn check_star1(p: &Presentation) -> Verdict<Star1Failure> {
    let n = p.n();
    let mut seen: HashMap<(Gen, Gen), usize> = HashMap::new();
    for (k, rel) in p.relations().iter().enumerate() {
        let (j, i) = rel.lhs_pair();
        let (ip, jp) = rel.rhs_pair();
        if !(j > i && ip < jp && ip < j) {
            return Verdict::Fail(Star1Failure::BadShape { relation: k });
        }
        if seen.insert((j, i), k).is_some() {
            return Verdict::Fail(Star1Failure::DuplicateLeft { j, i });
        }
    }
    for i in Gen::all(n) {
        for j in Gen::all(n).filter(|&j| j > i) {
            if !seen.contains_key(&(j, i)) {
                return Verdict::Fail(Star1Failure::MissingLeft { j, i });
            }
        }
    }
    Verdict::Pass
}

/// Assumes [`check_star1`] passed.
pub fn check_star2(p: &Presentation) -> Verdict<Star2Failure> {
    let n = p.n();
    let mut count: HashMap<(Gen, Gen), usize> = HashMap::new();
    for rel in p.relations() {
        *count.entry(rel.rhs_pair()).or_default() += 1;
    }
    for i in Gen::all(n) {
        for j in Gen::all(n).filter(|&j| j > i) {
            match count.get(&(i, j)).copied().unwrap_or(0) {
                1 => {}
                0 => return Verdict::Fail(Star2Failure::Missing { i, j }),
                _ => return Verdict::Fail(Star2Failure::Duplicated { i, j }),
            }
        }
    }
    Verdict::Pass
}

/// Rewriting classes of `X^m` under the relations applied in both directions
/// at every position. Classes are sorted, and listed by least member.
pub fn relation_classes(p: &Presentation, m: usize) -> Vec<Vec<Word>> {
    let mut neighbours: HashMap<(Gen, Gen), Vec<(Gen, Gen)>> = HashMap::new();
    for rel in p.relations() {
        neighbours.entry(rel.lhs_pair()).or_default().push(rel.rhs_pair());
        neighbours.entry(rel.rhs_pair()).or_default().push(rel.lhs_pair());
    }
    let mut assigned: HashSet<Word> = HashSet::new();
    let mut classes = Vec::new();
    for w in Word::all_of_degree(p.n(), m) {
        if assigned.contains(&w) {
            continue;
        }
        let mut class = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        class.insert(w);
        while let Some(cur) = queue.pop_front() {
            let letters = cur.letters();
            for pos in 0..m.saturating_sub(1) {
                let key = (letters[pos], letters[pos + 1]);
                for &(a, b) in neighbours.get(&key).into_iter().flatten() {
                    let mut next = letters.to_vec();
                    next[pos] = a;
                    next[pos + 1] = b;
                    let next = Word::new(next);
                    if class.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        assigned.extend(class.iter().cloned());
        classes.push(class.into_iter().collect());
    }
    classes
}

/// Exhaustive overlap check in degree 3: every class of `X^3` must contain
/// exactly one sorted word.
pub fn check_star3(p: &Presentation) -> Verdict<Star3Failure> {
    for class in relation_classes(p, 3) {
        let sorted_members = class.iter().filter(|w| sort_word(w) == **w).count();
        if sorted_members != 1 {
            return Verdict::Fail(Star3Failure { class, sorted_members });
        }
    }
    Verdict::Pass
}

/// `r1 r2 (Δ2 × X) = X × Δ2`.
pub fn check_cyclic(r: &PairMap) -> Verdict<CyclicFailure> {
    let n = r.n();
    let mut reached = HashSet::new();
    for a in Gen::all(n) {
        for b in Gen::all(n) {
            let source = Word::new(vec![a, a, b]);
            let image = r.apply_at(&r.apply_at(&source, 1), 0);
            let l = image.letters();
            if l[1] != l[2] {
                return Verdict::Fail(CyclicFailure::NotDiagonal { source, image });
            }
            reached.insert(image);
        }
    }
    for c in Gen::all(n) {
        for d in Gen::all(n) {
            let target = Word::new(vec![c, d, d]);
            if !reached.contains(&target) {
                return Verdict::Fail(CyclicFailure::NotOnto { missing: target });
            }
        }
    }
    Verdict::Pass
}

impl Star1Failure {
    pub fn describe(&self, p: &Presentation) -> String {
        let a = p.alphabet();
        match self {
            Star1Failure::BadShape { relation } => format!(
                "relation {} `{}` is not of the form x_j x_i = x_i' x_j' with j > i, i' < j', i' < j",
                relation + 1,
                p.format_relation(&p.relations()[*relation])
            ),
            Star1Failure::DuplicateLeft { j, i } => {
                format!("left side `{} {}` occurs twice", a.name(*j), a.name(*i))
            }
            Star1Failure::MissingLeft { j, i } => {
                format!("no relation with left side `{} {}`", a.name(*j), a.name(*i))
            }
        }
    }
}

impl Star2Failure {
    pub fn describe(&self, a: &Alphabet) -> String {
        match self {
            Star2Failure::Duplicated { i, j } => {
                format!("right side `{} {}` occurs more than once", a.name(*i), a.name(*j))
            }
            Star2Failure::Missing { i, j } => {
                format!("right side `{} {}` never occurs", a.name(*i), a.name(*j))
            }
        }
    }
}

impl Star3Failure {
    pub fn describe(&self, a: &Alphabet) -> String {
        let words: Vec<String> = self.class.iter().map(|w| a.format_word(w)).collect();
        format!(
            "class {{{}}} has {} sorted members",
            words.join(", "),
            self.sorted_members
        )
    }
}

impl CyclicFailure {
    pub fn describe(&self, a: &Alphabet) -> String {
        match self {
            CyclicFailure::NotDiagonal { source, image } => format!(
                "r1 r2 maps `{}` to `{}`, which does not end in a square",
                a.format_word(source),
                a.format_word(image)
            ),
            CyclicFailure::NotOnto { missing } => {
                format!("`{}` is not reached", a.format_word(missing))
            }
        }
    }
}

/// Every presentation on `n` generators passing all three shape conditions,
/// with relations listed by increasing `i`, then `j`.
pub fn star_presentations(n: usize) -> Vec<Presentation> {
    let lefts: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (j, i)))
        .collect();
    let rights: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();

    fn rec(
        k: usize,
        lefts: &[(usize, usize)],
        rights: &[(usize, usize)],
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == lefts.len() {
            out.push(chosen.clone());
            return;
        }
        let (j, _) = lefts[k];
        for (t, &(ip, _)) in rights.iter().enumerate() {
            if !used[t] && ip < j {
                used[t] = true;
                chosen.push(t);
                rec(k + 1, lefts, rights, used, chosen, out);
                chosen.pop();
                used[t] = false;
            }
        }
    }
    let mut assignments = Vec::new();
    rec(
        0,
        &lefts,
        &rights,
        &mut vec![false; rights.len()],
        &mut Vec::new(),
        &mut assignments,
    );
    assignments
        .into_iter()
        .filter_map(|choice| {
            let rels = lefts
                .iter()
                .zip(&choice)
                .map(|(&(j, i), &t)| Relation {
                    lhs: Word::from_indices(&[j, i]),
                    rhs: Word::from_indices(&[rights[t].0, rights[t].1]),
                })
                .collect();
            let p = Presentation::new(Alphabet::standard(n), rels).ok()?;
            check_star3(&p).passed().then_some(p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        parse_presentation(text).unwrap()
    }

    #[test]
    fn parses_examples() {
        let p = pres("gens x y\nrel y y = x x");
        assert_eq!(p.n(), 2);
        assert_eq!(p.relations()[0].lhs, Word::from_indices(&[2, 2]));
        assert_eq!(p.relations()[0].rhs, Word::from_indices(&[1, 1]));

        let p = pres("gens x y\nrel y x = x y");
        assert_eq!(p.relations()[0].lhs, Word::from_indices(&[2, 1]));
        assert_eq!(p.relations()[0].rhs, Word::from_indices(&[1, 2]));

        let p = pres("gens x\n");
        assert_eq!(p.n(), 1);
        assert!(p.relations().is_empty());
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(
            parse_presentation("gens x y\n\nrel x = y y"),
            Err(Error::NotQuadratic { line: 3, degree: 1 })
        ));
        assert!(matches!(
            parse_presentation("gens x y\nrel x z = y y"),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("rel x x = y y"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_presentation("gens x y\nrel x y x y"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens x y\n# c\nrel x x = y y\nrel y y = x x"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_presentation("gens x y\nrel x y = x y"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn comments_and_format() {
        let p = pres("# header\ngens a b   # names\nrel b a = a b # the only one\n");
        assert_eq!(p.format(), "gens a b\nrel b a = a b\n");
        assert_eq!(parse_presentation(&p.format()).unwrap(), p);
    }

    #[test]
    fn star1_examples() {
        assert!(check_star1(&pres("gens x y\nrel y x = x y")).passed());
        assert_eq!(
            check_star1(&pres("gens x y\nrel y y = x x")),
            Verdict::Fail(Star1Failure::BadShape { relation: 0 })
        );
        assert!(check_star1(&pres("gens x")).passed());
        assert!(matches!(
            check_star1(&pres("gens x y z\nrel y x = x y")),
            Verdict::Fail(Star1Failure::MissingLeft { .. })
        ));
    }

    #[test]
    fn star2_examples() {
        assert!(check_star2(&pres("gens x y\nrel y x = x y")).passed());
        // both z y and z x rewrite to x y; x z is never produced
        let dup = pres("gens x y z\nrel y x = x y\nrel z x = x y\nrel z y = x z");
        assert!(check_star1(&dup).passed());
        let dup2 = pres("gens x y z\nrel y x = x z\nrel z x = x y\nrel z y = x y");
        assert!(check_star1(&dup2).passed());
        assert_eq!(
            check_star2(&dup2),
            Verdict::Fail(Star2Failure::Duplicated {
                i: Gen::new(1),
                j: Gen::new(2)
            })
        );
        assert!(check_star2(&Presentation::commutative(3)).passed());
        assert!(!check_star2(&dup).passed());
    }

    #[test]
    fn star3_examples() {
        assert!(check_star3(&Presentation::commutative(2)).passed());
        assert!(check_star3(&Presentation::commutative(3)).passed());
        // shape-valid and bijective on pairs, but one degree-3 class holds
        // two sorted words
        let bad = pres("gens x y z\nrel y x = x z\nrel z x = y z\nrel z y = x y");
        assert!(check_star1(&bad).passed());
        assert!(check_star2(&bad).passed());
        let v = check_star3(&bad);
        let w = v.witness().expect("overlap failure");
        assert_eq!(w.sorted_members, 2);
        assert!(w.class.contains(&Word::from_indices(&[1, 1, 3])));
    }

    #[test]
    fn cyclic_commutative_and_trivial() {
        let r = PairMap::from_presentation(&Presentation::commutative(2)).unwrap();
        assert!(check_cyclic(&r).passed());
        let xxy = Word::from_indices(&[1, 1, 2]);
        assert_eq!(
            r.apply_at(&r.apply_at(&xxy, 1), 0),
            Word::from_indices(&[2, 1, 1])
        );
        assert!(check_cyclic(&PairMap::identity(1)).passed());
    }

    #[test]
    fn cyclic_square_relation() {
        let r = PairMap::from_presentation(&pres("gens x y\nrel y y = x x")).unwrap();
        assert!(check_cyclic(&r).passed());
        // x x y -> (r2) x x y -> (r1) y y y
        let xxy = Word::from_indices(&[1, 1, 2]);
        assert_eq!(
            r.apply_at(&r.apply_at(&xxy, 1), 0),
            Word::from_indices(&[2, 2, 2])
        );
        assert!(!check_cyclic(&PairMap::identity(2)).passed());
    }

    #[test]
    fn star_search_finds_commutative() {
        for n in 1..=4 {
            let found = star_presentations(n);
            assert!(found.contains(&Presentation::commutative(n)), "n = {n}");
            for p in &found {
                assert_eq!(p.relations().len(), n * (n - 1) / 2);
            }
        }
    }

    #[test]
    fn star_consequence_indices() {
        // j, j' > i, i' on every relation of a passing presentation
        for n in 2..=4 {
            for p in star_presentations(n) {
                for rel in p.relations() {
                    let (j, i) = rel.lhs_pair();
                    let (ip, jp) = rel.rhs_pair();
                    assert!(j > i && j > ip && jp > i && jp > ip, "{}", p.format());
                }
            }
        }
    }
}
