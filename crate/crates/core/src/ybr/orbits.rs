//! Orbits of the group generated by `r1`, `r2` on `X³`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::report::Verdict;
use crate::types::{Alphabet, Word};

use super::PairMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitKind {
    /// Meets the diagonal `Δ3`.
    A,
    /// Meets `(Δ2 × X ∪ X × Δ2) ∖ Δ3` but not `Δ3`.
    B,
    /// Misses `Δ2 × X ∪ X × Δ2`.
    C,
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrbitKind::A => "A",
            OrbitKind::B => "B",
            OrbitKind::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted; the first element is the least.
    pub elements: Vec<Word>,
    pub kind: OrbitKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub n: usize,
    /// Ordered by least element.
    pub orbits: Vec<Orbit>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarCountFailure {
    Count { kind: OrbitKind, expected: usize, got: usize },
    Size { kind: OrbitKind, expected: usize, orbit: Vec<Word> },
    Identity { total: usize, a: usize, b: usize, c: usize },
}

fn is_diagonal(w: &Word) -> bool {
    let l = w.letters();
    l[0] == l[1] && l[1] == l[2]
}

fn has_square(w: &Word) -> bool {
    let l = w.letters();
    l[0] == l[1] || l[1] == l[2]
}

/// Breadth-first closure of every word of `X³` under `r1` and `r2`.
pub fn classify_orbits3(r: &PairMap) -> OrbitReport {
    let mut assigned = HashSet::new();
    let mut orbits = Vec::new();
    for w in Word::all_of_degree(r.n(), 3) {
        if assigned.contains(&w) {
            continue;
        }
        let mut orbit = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w]);
        while let Some(cur) = queue.pop_front() {
            for pos in 0..2 {
                let next = r.apply_at(&cur, pos);
                if orbit.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let kind = if orbit.iter().any(is_diagonal) {
            OrbitKind::A
        } else if orbit.iter().any(has_square) {
            OrbitKind::B
        } else {
            OrbitKind::C
        };
        assigned.extend(orbit.iter().cloned());
        orbits.push(Orbit {
            elements: orbit.into_iter().collect(),
            kind,
        });
    }
    OrbitReport { n: r.n(), orbits }
}

impl OrbitReport {
    pub fn count(&self, kind: OrbitKind) -> usize {
        self.orbits.iter().filter(|o| o.kind == kind).count()
    }

    pub fn total_elements(&self) -> usize {
        self.orbits.iter().map(|o| o.elements.len()).sum()
    }

    /// Whether every orbit size divides 6.
    pub fn sizes_divide_six(&self) -> bool {
        self.orbits.iter().all(|o| 6 % o.elements.len() == 0)
    }

    /// The census expected of maps coming from presentations with the three
    /// shape conditions: `n` orbits of type A with one element, `n(n-1)` of
    /// type B with three, `n(n-1)(n-2)/6` of type C with six, and
    /// `n³ = #A + 3 #B + 6 #C`.
    pub fn check_star_counts(&self) -> Verdict<StarCountFailure> {
        let n = self.n;
        let expected = [
            (OrbitKind::A, n, 1),
            (OrbitKind::B, n * n.saturating_sub(1), 3),
            (OrbitKind::C, n * n.saturating_sub(1) * n.saturating_sub(2) / 6, 6),
        ];
        for (kind, count, size) in expected {
            let got = self.count(kind);
            if got != count {
                return Verdict::Fail(StarCountFailure::Count { kind, expected: count, got });
            }
            if let Some(o) = self
                .orbits
                .iter()
                .find(|o| o.kind == kind && o.elements.len() != size)
            {
                return Verdict::Fail(StarCountFailure::Size {
                    kind,
                    expected: size,
                    orbit: o.elements.clone(),
                });
            }
        }
        let (a, b, c) = (
            self.count(OrbitKind::A),
            self.count(OrbitKind::B),
            self.count(OrbitKind::C),
        );
        if n * n * n != a + 3 * b + 6 * c {
            return Verdict::Fail(StarCountFailure::Identity {
                total: n * n * n,
                a,
                b,
                c,
            });
        }
        Verdict::Pass
    }

    /// The counting line: `n^3 = 1*#A + 3*#B + 6*#C` with the numbers filled in.
    /// The type-B coefficient is the type-B orbit size, three.
    pub fn identity_line(&self) -> String {
        let (a, b, c) = (
            self.count(OrbitKind::A),
            self.count(OrbitKind::B),
            self.count(OrbitKind::C),
        );
        let n3 = self.n.pow(3);
        let rhs = a + 3 * b + 6 * c;
        format!(
            "n^3 = 1*#A + 3*#B + 6*#C: {n3} {} {a} + {} + {} (type-B coefficient is the orbit size 3, not 2)",
            if n3 == rhs { "=" } else { "!=" },
            3 * b,
            6 * c
        )
    }

    pub fn describe_orbit(&self, o: &Orbit, alphabet: &Alphabet) -> String {
        let words: Vec<String> = o.elements.iter().map(|w| alphabet.format_word(w)).collect();
        format!("type {} size {} {{{}}}", o.kind, o.elements.len(), words.join(", "))
    }
}

impl StarCountFailure {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            StarCountFailure::Count { kind, expected, got } => {
                format!("expected {expected} orbits of type {kind}, found {got}")
            }
            StarCountFailure::Size { kind, expected, orbit } => {
                let words: Vec<String> = orbit.iter().map(|w| alphabet.format_word(w)).collect();
                format!(
                    "type {kind} orbit {{{}}} has size {}, expected {expected}",
                    words.join(", "),
                    orbit.len()
                )
            }
            StarCountFailure::Identity { total, a, b, c } => {
                format!("{total} != {a} + 3*{b} + 6*{c}")
            }
        }
    }
}
