//! Shared fixtures and independent reference implementations.
//!
//! The oracles below only read a map through `PairMap::get` and work on raw
//! `usize` tuples, so they share no code with the library's own checks.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use itype::presentation::{parse_presentation, star_presentations, Presentation};
use itype::ybr::{enumerate_solutions, PairMap};
use itype::{Alphabet, Gen, Word};

pub const SQUARE: &str = "gens x y\nrel y y = x x\n";

pub fn square_presentation() -> Presentation {
    parse_presentation(SQUARE).unwrap()
}

pub fn square_r() -> PairMap {
    PairMap::from_presentation(&square_presentation()).unwrap()
}

pub fn flip(n: usize) -> PairMap {
    PairMap::from_presentation(&Presentation::commutative(n)).unwrap()
}

/// A named input of the test corpus.
pub struct Case {
    pub name: String,
    pub alphabet: Alphabet,
    pub r: PairMap,
}

/// Flip maps for n = 2..4, the square relation, every census solution for
/// n <= 3, and every shape-valid presentation for n <= 3. Duplicates removed.
pub fn corpus() -> Vec<Case> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut add = |name: String, r: PairMap| {
        if seen.insert(r.clone()) {
            out.push(Case {
                name,
                alphabet: Alphabet::standard(r.n()),
                r,
            });
        }
    };
    for n in 2..=4 {
        add(format!("flip{n}"), flip(n));
    }
    add("square".into(), square_r());
    for n in 1..=3 {
        for (k, r) in enumerate_solutions(n).unwrap().solutions.into_iter().enumerate() {
            add(format!("census{n}.{k}"), r);
        }
        for (k, p) in star_presentations(n).iter().enumerate() {
            add(format!("star{n}.{k}"), PairMap::from_presentation(p).unwrap());
        }
    }
    out
}

/// Raw 0-based table, indexed `a * n + b`.
pub fn raw(r: &PairMap) -> Vec<(usize, usize)> {
    let n = r.n();
    let mut t = Vec::with_capacity(n * n);
    for a in 1..=n {
        for b in 1..=n {
            let (c, d) = r.get(Gen::new(a), Gen::new(b));
            t.push((c.index() - 1, d.index() - 1));
        }
    }
    t
}

pub fn from_raw(n: usize, t: &[(usize, usize)]) -> PairMap {
    PairMap::from_fn(n, |a, b| {
        let (c, d) = t[(a.index() - 1) * n + (b.index() - 1)];
        (Gen::new(c + 1), Gen::new(d + 1))
    })
}

pub fn oracle_involutive(n: usize, t: &[(usize, usize)]) -> bool {
    (0..n * n).all(|k| {
        let (c, d) = t[k];
        let (e, f) = t[c * n + d];
        e * n + f == k
    })
}

pub fn oracle_braid(n: usize, t: &[(usize, usize)]) -> bool {
    let r1 = |w: [usize; 3]| {
        let (c, d) = t[w[0] * n + w[1]];
        [c, d, w[2]]
    };
    let r2 = |w: [usize; 3]| {
        let (c, d) = t[w[1] * n + w[2]];
        [w[0], c, d]
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let w = [a, b, c];
                if r1(r2(r1(w))) != r2(r1(r2(w))) {
                    return false;
                }
            }
        }
    }
    true
}

/// For every `(a, b)` exactly one `c` has `r(c, a)` ending in `b`, and when
/// `a = b` that `c` also starts the image.
pub fn oracle_nondegenerate(n: usize, t: &[(usize, usize)]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let hits: Vec<usize> = (0..n).filter(|&c| t[c * n + a].1 == b).collect();
            if hits.len() != 1 {
                return false;
            }
            if a == b && t[hits[0] * n + a].0 != hits[0] {
                return false;
            }
        }
    }
    true
}

pub fn oracle_axioms(n: usize, t: &[(usize, usize)]) -> bool {
    oracle_involutive(n, t) && oracle_braid(n, t) && oracle_nondegenerate(n, t)
}

/// Every involution of `X²`, as a table.
pub fn all_involutions(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(k: usize, n: usize, img: &mut Vec<Option<usize>>, out: &mut Vec<Vec<(usize, usize)>>) {
        let size = n * n;
        let Some(first) = (k..size).find(|&i| img[i].is_none()) else {
            out.push(
                img.iter()
                    .map(|x| {
                        let x = x.unwrap();
                        (x / n, x % n)
                    })
                    .collect(),
            );
            return;
        };
        img[first] = Some(first);
        go(first + 1, n, img, out);
        for other in first + 1..size {
            if img[other].is_none() {
                img[first] = Some(other);
                img[other] = Some(first);
                go(first + 1, n, img, out);
                img[other] = None;
            }
        }
        img[first] = None;
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![None; n * n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `(p × p) ∘ r ∘ (p × p)⁻¹`.
fn relabel_raw(n: usize, t: &[(usize, usize)], p: &[usize]) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0); n * n];
    for a in 0..n {
        for b in 0..n {
            let (c, d) = t[a * n + b];
            out[p[a] * n + p[b]] = (p[c], p[d]);
        }
    }
    out
}

/// Solutions among all involutions, and the number of relabeling classes.
pub fn involution_census(n: usize) -> (BTreeSet<Vec<(usize, usize)>>, usize) {
    let sols: BTreeSet<_> = all_involutions(n)
        .into_iter()
        .filter(|t| oracle_braid(n, t) && oracle_nondegenerate(n, t))
        .collect();
    let perms = permutations(n);
    let classes: BTreeSet<Vec<(usize, usize)>> = sols
        .iter()
        .map(|t| perms.iter().map(|p| relabel_raw(n, t, p)).min().unwrap())
        .collect();
    (sols, classes.len())
}

/// Class labels of all words of length `m` under the rewriting `ab ↔ r(ab)`
/// at any position.
pub fn closure_classes(r: &PairMap, m: usize) -> HashMap<Vec<usize>, usize> {
    let n = r.n();
    let t = raw(r);
    let mut label = HashMap::new();
    let mut next_label = 0;
    let total = n.pow(m as u32);
    for k in 0..total {
        let mut rest = k;
        let mut w = vec![0; m];
        for slot in w.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        if label.contains_key(&w) {
            continue;
        }
        let mut queue = VecDeque::from([w.clone()]);
        label.insert(w, next_label);
        while let Some(cur) = queue.pop_front() {
            for pos in 0..m.saturating_sub(1) {
                let (c, d) = t[cur[pos] * n + cur[pos + 1]];
                let mut nw = cur.clone();
                nw[pos] = c;
                nw[pos + 1] = d;
                if !label.contains_key(&nw) {
                    label.insert(nw.clone(), next_label);
                    queue.push_back(nw);
                }
            }
        }
        next_label += 1;
    }
    label
}

pub fn to_raw_word(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|g| g.index() - 1).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
