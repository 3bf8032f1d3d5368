//! The right action of the quotient group of `S` on `Zⁿ` (and `Rⁿ`) by
//! Euclidean transformations.
//!
//! Identifying `a ∈ Nⁿ` with `u_1^{a_1} ... u_n^{a_n}`, right multiplication
//! by `x_i` becomes the affine map
//!
//! ```text
//! (a · x_i)_j = a_{π_i(j)} + δ_{ij}
//! ```
//!
//! where `π_i` is `φ(u_i)` or its inverse. Which of the two is fixed once per
//! build by checking the map against `v⁻¹(v(a) x_i)` on all small `a`.
//! All arithmetic is exact: integer points, and rationals where fixed
//! points or glide axes need halves.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num::rational::Rational64;

use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::structuremaps::PhiMap;
use crate::types::{Alphabet, ExpVec, Gen, Perm, Word};

/// `a ↦ (a_{perm(1)} + shift_1, ..., a_{perm(n)} + shift_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineIso {
    pub perm: Perm,
    pub shift: Vec<i64>,
}

impl AffineIso {
    pub fn identity(n: usize) -> Self {
        AffineIso {
            perm: Perm::identity(n),
            shift: vec![0; n],
        }
    }

    pub fn translation(shift: Vec<i64>) -> Self {
        AffineIso {
            perm: Perm::identity(shift.len()),
            shift,
        }
    }

    pub fn new(perm: Perm, shift: Vec<i64>) -> Result<Self> {
        if perm.n() != shift.len() {
            return Err(Error::SizeMismatch {
                expected: perm.n(),
                got: shift.len(),
            });
        }
        Ok(AffineIso { perm, shift })
    }

    pub fn n(&self) -> usize {
        self.shift.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.shift.iter().all(|&s| s == 0)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got,
            });
        }
        Ok(())
    }

    pub fn act(&self, a: &[i64]) -> Result<Vec<i64>> {
        self.check_dim(a.len())?;
        Ok((0..self.n())
            .map(|j| a[self.perm.apply(j)] + self.shift[j])
            .collect())
    }

    pub fn act_rational(&self, a: &[Rational64]) -> Result<Vec<Rational64>> {
        self.check_dim(a.len())?;
        Ok((0..self.n())
            .map(|j| a[self.perm.apply(j)] + Rational64::from_integer(self.shift[j]))
            .collect())
    }

    /// First `self`, then `other`: `a · (gh) = (a · g) · h`.
    pub fn compose(&self, other: &AffineIso) -> Result<AffineIso> {
        self.check_dim(other.n())?;
        let perm = self.perm.compose(&other.perm)?;
        let shift = (0..self.n())
            .map(|j| self.shift[other.perm.apply(j)] + other.shift[j])
            .collect();
        Ok(AffineIso { perm, shift })
    }

    pub fn invert(&self) -> AffineIso {
        let inv = self.perm.inverse();
        let shift = (0..self.n()).map(|k| -self.shift[inv.apply(k)]).collect();
        AffineIso { perm: inv, shift }
    }
}

impl fmt::Display for AffineIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shift.iter().map(|x| x.to_string()).collect();
        write!(f, "perm={} shift=[{}]", self.perm, s.join(","))
    }
}

/// `x_i` or `x_i⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

pub fn format_group_word(word: &[Letter], alphabet: &Alphabet) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|l| {
            let name = alphabet.name(l.gen);
            if l.inverse {
                format!("{name}^-1")
            } else {
                name.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A group element: a word in the generators and their inverses, with its
/// isometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub word: Vec<Letter>,
    pub iso: AffineIso,
}

/// Which permutation stands in front of the unit shift in each generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermPart {
    Phi,
    PhiInverse,
}

impl fmt::Display for PermPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PermPart::Phi => "phi",
            PermPart::PhiInverse => "phi_inverse",
        })
    }
}

/// The isometry of a single generator: permutation part `φ(u_i)` (or its
/// inverse) and the unit shift in coordinate `i`.
pub fn generator_isometry(pm: &PhiMap, i: Gen, part: PermPart) -> Result<AffineIso> {
    let n = pm.n();
    let phi = pm.phi_of(&ExpVec::unit(n, i))?;
    let perm = match part {
        PermPart::Phi => phi.clone(),
        PermPart::PhiInverse => phi.inverse(),
    };
    let mut shift = vec![0; n];
    shift[i.zero()] = 1;
    AffineIso::new(perm, shift)
}

/// The generator isometries of the lattice action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAction {
    pub generators: Vec<AffineIso>,
    pub part: PermPart,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyFailure {
    pub point: ExpVec,
    pub gen: Gen,
    pub affine: Vec<i64>,
    pub multiplied: ExpVec,
}

impl LatticeAction {
    pub fn n(&self) -> usize {
        self.generators.len()
    }

    pub fn with_part(pm: &PhiMap, part: PermPart) -> Result<Self> {
        let generators = Gen::all(pm.n())
            .map(|i| generator_isometry(pm, i, part))
            .collect::<Result<_>>()?;
        Ok(LatticeAction { generators, part })
    }

    /// Picks the permutation part that agrees with right multiplication in `S`
    /// for every point of degree at most `D - 1`. The backing table must use
    /// `sigma = id`.
    pub fn from_phi(pm: &PhiMap) -> Result<Self> {
        if !pm.table().sigma().is_identity() {
            return Err(Error::Precondition(
                "the lattice action needs an I-structure with v(u_i) = x_i (sigma = id)".into(),
            ));
        }
        let bound = pm.table().bound() - 1;
        for part in [PermPart::Phi, PermPart::PhiInverse] {
            let action = LatticeAction::with_part(pm, part)?;
            if check_action_consistency(pm, &action, bound)?.passed() {
                return Ok(action);
            }
        }
        Err(Error::Consistency(
            "neither phi nor its inverse reproduces right multiplication".into(),
        ))
    }

    pub fn generator(&self, i: Gen) -> &AffineIso {
        &self.generators[i.zero()]
    }

    pub fn letter(&self, l: Letter) -> AffineIso {
        let g = self.generator(l.gen);
        if l.inverse {
            g.invert()
        } else {
            g.clone()
        }
    }

    pub fn evaluate(&self, word: &[Letter]) -> Result<GroupElement> {
        let mut iso = AffineIso::identity(self.n());
        for &l in word {
            iso = iso.compose(&self.letter(l))?;
        }
        Ok(GroupElement {
            word: word.to_vec(),
            iso,
        })
    }

    /// One line per generator, then one line per relation.
    pub fn export(&self, alphabet: &Alphabet, relations: &[Vec<Letter>]) -> String {
        let mut out = String::new();
        for (i, g) in self.generators.iter().enumerate() {
            out.push_str(&format!("gen {} {g}\n", alphabet.name(Gen::from_zero(i))));
        }
        for rel in relations {
            out.push_str(&format!("rel {} = 1\n", format_group_word(rel, alphabet)));
        }
        out
    }
}

/// Checks `a · x_i = v⁻¹(v(a) x_i)` for every `a` of degree at most `bound`.
pub fn check_action_consistency(
    pm: &PhiMap,
    action: &LatticeAction,
    bound: usize,
) -> Result<Verdict<ConsistencyFailure>> {
    let t = pm.table();
    if bound + 1 > t.bound() {
        return Err(Error::DegreeBound {
            degree: bound + 1,
            bound: t.bound(),
        });
    }
    let n = pm.n();
    for a in ExpVec::all_up_to(n, bound) {
        let point: Vec<i64> = a.exps().iter().map(|&e| e as i64).collect();
        let va = t.v_of(&a)?;
        for i in Gen::all(n) {
            let affine = action.generator(i).act(&point)?;
            let mut w = va.clone();
            w.push(i);
            let multiplied = t.v_inverse(&w)?;
            let same = affine
                .iter()
                .zip(multiplied.exps())
                .all(|(&x, &y)| x == y as i64);
            if !same {
                return Ok(Verdict::Fail(ConsistencyFailure {
                    point: a,
                    gen: i,
                    affine,
                    multiplied,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Solution set of `a · g = a` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPoints {
    /// A cycle of the permutation part whose shifts do not sum to zero.
    Empty { cycle: Vec<usize>, shift_sum: i64 },
    /// `point + span`, one free parameter per cycle of the permutation part
    /// (coordinates in a cycle move together). `point` is integral.
    Affine { point: Vec<i64>, cycles: Vec<Vec<usize>> },
}

impl FixedPoints {
    pub fn is_empty(&self) -> bool {
        matches!(self, FixedPoints::Empty { .. })
    }

    pub fn dimension(&self) -> usize {
        match self {
            FixedPoints::Empty { .. } => 0,
            FixedPoints::Affine { cycles, .. } => cycles.len(),
        }
    }
}

fn all_cycles(p: &Perm) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.n()];
    let mut out = Vec::new();
    for start in 0..p.n() {
        let mut cycle = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            cycle.push(j);
            j = p.apply(j);
        }
        if !cycle.is_empty() {
            out.push(cycle);
        }
    }
    out
}

/// Cycle-sum analysis of `a_{perm(j)} + shift_j = a_j`: along a cycle
/// `j → perm(j) → ...` the equations telescope, so a cycle admits solutions
/// iff its shifts sum to zero.
pub fn fixed_points(g: &AffineIso) -> FixedPoints {
    let cycles = all_cycles(&g.perm);
    let mut point = vec![0i64; g.n()];
    for cycle in &cycles {
        let shift_sum: i64 = cycle.iter().map(|&j| g.shift[j]).sum();
        if shift_sum != 0 {
            return FixedPoints::Empty {
                cycle: cycle.clone(),
                shift_sum,
            };
        }
        // a_{perm(j)} = a_j - shift_j, starting from a_{start} = 0
        for w in cycle.windows(2) {
            point[w[1]] = point[w[0]] - g.shift[w[0]];
        }
    }
    FixedPoints::Affine { point, cycles }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessFailure {
    pub word: Vec<Letter>,
    pub iso: AffineIso,
    pub fixed_point: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub verdict: Verdict<FreenessFailure>,
    pub words_checked: usize,
    pub distinct_isometries: usize,
    /// Non-empty reduced words acting as the identity, by length then word.
    pub relations: Vec<Vec<Letter>>,
}

/// Walks every reduced word of length at most `max_len`; every non-identity
/// isometry reached must be fixed-point free.
pub fn freeness_check(action: &LatticeAction, max_len: usize) -> Result<FreenessReport> {
    let n = action.n();
    let letters: Vec<Letter> = Gen::all(n)
        .flat_map(|g| [false, true].map(|inverse| Letter { gen: g, inverse }))
        .collect();
    let isos: HashMap<Letter, AffineIso> = letters.iter().map(|&l| (l, action.letter(l))).collect();

    let mut report = FreenessReport {
        verdict: Verdict::Pass,
        words_checked: 0,
        distinct_isometries: 1,
        relations: Vec::new(),
    };
    let mut seen: HashSet<AffineIso> = HashSet::from([AffineIso::identity(n)]);
    let mut stack: Vec<(Vec<Letter>, AffineIso)> = vec![(Vec::new(), AffineIso::identity(n))];
    while let Some((word, iso)) = stack.pop() {
        if word.len() == max_len {
            continue;
        }
        for &l in &letters {
            if word.last() == Some(&l.inv()) {
                continue;
            }
            let next = iso.compose(&isos[&l])?;
            let mut w = word.clone();
            w.push(l);
            report.words_checked += 1;
            if next.is_identity() {
                report.relations.push(w.clone());
            } else if seen.insert(next.clone()) {
                report.distinct_isometries += 1;
                if let FixedPoints::Affine { point, .. } = fixed_points(&next) {
                    if report.verdict.passed() {
                        report.verdict = Verdict::Fail(FreenessFailure {
                            word: w.clone(),
                            iso: next.clone(),
                            fixed_point: point,
                        });
                    }
                }
            }
            stack.push((w, next));
        }
    }
    report
        .relations
        .sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coverage {
    Complete,
    /// Some box points were not reached within the word length.
    Inconclusive { missed: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainReport {
    /// Two distinct isometries sending the origin to the same point.
    pub injective: Verdict<(GroupElement, GroupElement)>,
    pub coverage: Coverage,
    pub box_points: usize,
    pub covered: usize,
    pub orbit_size: usize,
}

impl DomainReport {
    pub fn passed(&self) -> bool {
        self.injective.passed() && self.coverage == Coverage::Complete
    }
}

/// The orbit of the origin over group elements of word length at most
/// `max_len`: distinct isometries must give distinct points, and every lattice
/// point of `[-radius, radius]ⁿ` should be reached.
pub fn fundamental_domain_check(action: &LatticeAction, radius: i64, max_len: usize) -> Result<DomainReport> {
    let n = action.n();
    let letters: Vec<Letter> = Gen::all(n)
        .flat_map(|g| [false, true].map(|inverse| Letter { gen: g, inverse }))
        .collect();
    let origin = vec![0i64; n];
    let start = GroupElement {
        word: Vec::new(),
        iso: AffineIso::identity(n),
    };
    let mut by_iso: HashSet<AffineIso> = HashSet::from([start.iso.clone()]);
    let mut by_point: BTreeMap<Vec<i64>, GroupElement> = BTreeMap::from([(origin.clone(), start.clone())]);
    let mut injective = Verdict::Pass;
    let mut queue = VecDeque::from([start]);
    while let Some(el) = queue.pop_front() {
        if el.word.len() == max_len {
            continue;
        }
        for &l in &letters {
            let iso = el.iso.compose(&action.letter(l))?;
            if !by_iso.insert(iso.clone()) {
                continue;
            }
            let mut word = el.word.clone();
            word.push(l);
            let next = GroupElement { word, iso };
            let point = next.iso.act(&origin)?;
            match by_point.get(&point) {
                Some(prev) => {
                    if injective.passed() {
                        injective = Verdict::Fail((prev.clone(), next.clone()));
                    }
                }
                None => {
                    by_point.insert(point, next.clone());
                }
            }
            queue.push_back(next);
        }
    }

    let mut box_points = 0;
    let mut missed = Vec::new();
    let side = 2 * radius + 1;
    let total = (side as usize).pow(n as u32);
    for k in 0..total {
        let mut rest = k;
        let p: Vec<i64> = (0..n)
            .map(|_| {
                let c = (rest % side as usize) as i64 - radius;
                rest /= side as usize;
                c
            })
            .rev()
            .collect();
        box_points += 1;
        if !by_point.contains_key(&p) {
            missed.push(p);
        }
    }
    missed.sort();
    let covered = box_points - missed.len();
    Ok(DomainReport {
        injective,
        coverage: if missed.is_empty() {
            Coverage::Complete
        } else {
            Coverage::Inconclusive { missed }
        },
        box_points,
        covered,
        orbit_size: by_iso.len(),
    })
}

/// Planar isometries with permutation part in `{id, swap}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isometry2d {
    Identity,
    Translation { shift: [i64; 2] },
    /// Reflection in the line `a_2 - a_1 = offset` (direction `(1,1)`),
    /// followed by the glide `glide`, which is parallel to the axis. A pure
    /// reflection has zero glide.
    GlideReflection { offset: Rational64, glide: [Rational64; 2] },
}

impl fmt::Display for Isometry2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isometry2d::Identity => f.write_str("identity"),
            Isometry2d::Translation { shift } => write!(f, "translation ({},{})", shift[0], shift[1]),
            Isometry2d::GlideReflection { offset, glide } => write!(
                f,
                "glide-reflection axis a2 - a1 = {offset} direction (1,1) glide ({},{})",
                glide[0], glide[1]
            ),
        }
    }
}

pub fn classify_isometry_2d(g: &AffineIso) -> Result<Isometry2d> {
    if g.n() != 2 {
        return Err(Error::SizeMismatch {
            expected: 2,
            got: g.n(),
        });
    }
    let (s1, s2) = (g.shift[0], g.shift[1]);
    if g.perm.is_identity() {
        return Ok(if s1 == 0 && s2 == 0 {
            Isometry2d::Identity
        } else {
            Isometry2d::Translation { shift: [s1, s2] }
        });
    }
    // (a1, a2) ↦ (a2 + s1, a1 + s2)
    let half = Rational64::new(s1 + s2, 2);
    let offset = Rational64::new(s2 - s1, 2);
    Ok(Isometry2d::GlideReflection {
        offset,
        glide: [half, half],
    })
}

/// Builds a group word from text such as `x y^-1 x`.
pub fn parse_group_word(text: &str, alphabet: &Alphabet) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|tok| match tok.strip_suffix("^-1") {
            Some(name) => Ok(Letter {
                gen: alphabet.gen(name)?,
                inverse: true,
            }),
            None => Ok(Letter {
                gen: alphabet.gen(tok)?,
                inverse: false,
            }),
        })
        .collect()
}

/// Word in `S` for a positive group word.
pub fn positive_word(word: &[Letter]) -> Option<Word> {
    word.iter()
        .map(|l| (!l.inverse).then_some(l.gen))
        .collect::<Option<Vec<_>>>()
        .map(Word::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::istructure::build_itable;
    use crate::presentation::parse_presentation;
    use crate::ybr::PairMap;

    fn square_phi(bound: usize) -> PhiMap {
        let p = parse_presentation("gens x y\nrel y y = x x").unwrap();
        let r = PairMap::from_presentation(&p).unwrap();
        PhiMap::new(build_itable(&r, bound, &Perm::identity(2)).unwrap())
    }

    fn flip_phi(n: usize, bound: usize) -> PhiMap {
        PhiMap::new(build_itable(&PairMap::flip(n), bound, &Perm::identity(n)).unwrap())
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn generator_isometries() {
        let pm = square_phi(6);
        let action = LatticeAction::from_phi(&pm).unwrap();
        let x = action.generator(Gen::new(1));
        assert_eq!(x.act(&[3, 7]).unwrap(), vec![8, 3]);
        let y = action.generator(Gen::new(2));
        assert_eq!(y.act(&[3, 7]).unwrap(), vec![7, 4]);

        let flip = LatticeAction::from_phi(&flip_phi(3, 4)).unwrap();
        for (k, g) in flip.generators.iter().enumerate() {
            let mut e = vec![0; 3];
            e[k] = 1;
            assert_eq!(g, &AffineIso::translation(e));
        }
    }

    #[test]
    fn act_examples() {
        let id = AffineIso::identity(2);
        assert_eq!(id.act(&[4, -1]).unwrap(), vec![4, -1]);
        let action = LatticeAction::from_phi(&square_phi(4)).unwrap();
        let x = action.generator(Gen::new(1));
        assert_eq!(x.act(&[0, 0]).unwrap(), vec![1, 0]);
        assert_eq!(x.act(&x.act(&[5, 2]).unwrap()).unwrap(), vec![6, 3]);
        assert!(matches!(x.act(&[1, 2, 3]), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn compose_and_invert() {
        let action = LatticeAction::from_phi(&square_phi(4)).unwrap();
        let x = action.generator(Gen::new(1)).clone();
        let y = action.generator(Gen::new(2)).clone();
        assert!(x.compose(&x.invert()).unwrap().is_identity());
        assert!(x.invert().compose(&x).unwrap().is_identity());
        assert_eq!(x.compose(&x).unwrap(), AffineIso::translation(vec![1, 1]));
        let xy = x.compose(&y.invert()).unwrap();
        let a = [2, -5];
        assert_eq!(xy.act(&a).unwrap(), y.invert().act(&x.act(&a).unwrap()).unwrap());
        assert_eq!(xy, AffineIso::translation(vec![-1, 1]));
        assert!(x.compose(&AffineIso::identity(3)).is_err());
    }

    #[test]
    fn consistency_checks() {
        let pm = square_phi(6);
        let action = LatticeAction::from_phi(&pm).unwrap();
        assert_eq!(action.part, PermPart::Phi);
        assert!(check_action_consistency(&pm, &action, 5).unwrap().passed());
        assert!(check_action_consistency(&pm, &action, 6).is_err());

        let flip = flip_phi(2, 5);
        let fa = LatticeAction::from_phi(&flip).unwrap();
        assert!(check_action_consistency(&flip, &fa, 4).unwrap().passed());

        // a bad permutation part is caught
        let bad = LatticeAction {
            generators: vec![
                AffineIso::translation(vec![1, 0]),
                AffineIso::translation(vec![0, 1]),
            ],
            part: PermPart::Phi,
        };
        let v = check_action_consistency(&pm, &bad, 3).unwrap();
        assert!(!v.passed());
    }

    #[test]
    fn rejects_nonidentity_sigma() {
        let p = parse_presentation("gens x y\nrel y y = x x").unwrap();
        let r = PairMap::from_presentation(&p).unwrap();
        let pm = PhiMap::new(build_itable(&r, 4, &Perm::transposition(2, 1, 2)).unwrap());
        assert!(matches!(LatticeAction::from_phi(&pm), Err(Error::Precondition(_))));
    }

    #[test]
    fn fixed_point_cases() {
        let fp = fixed_points(&AffineIso::identity(3));
        assert_eq!(fp.dimension(), 3);
        assert!(fixed_points(&AffineIso::translation(vec![1, 0])).is_empty());
        let glide = AffineIso::new(Perm::transposition(2, 1, 2), vec![1, 0]).unwrap();
        assert_eq!(
            fixed_points(&glide),
            FixedPoints::Empty {
                cycle: vec![0, 1],
                shift_sum: 1
            }
        );
        let refl = AffineIso::new(Perm::transposition(2, 1, 2), vec![1, -1]).unwrap();
        match fixed_points(&refl) {
            FixedPoints::Affine { point, cycles } => {
                assert_eq!(refl.act(&point).unwrap(), point);
                assert_eq!(cycles.len(), 1);
            }
            other => panic!("expected a fixed line, got {other:?}"),
        }
        let c3 = AffineIso::new(Perm::from_images(&[2, 3, 1]).unwrap(), vec![4, -1, -3]).unwrap();
        if let FixedPoints::Affine { point, .. } = fixed_points(&c3) {
            assert_eq!(c3.act(&point).unwrap(), point);
        } else {
            panic!("cycle sum is zero");
        }
    }

    #[test]
    fn freeness_square_relation() {
        let action = LatticeAction::from_phi(&square_phi(6)).unwrap();
        let rep = freeness_check(&action, 4).unwrap();
        assert!(rep.verdict.passed());
        let alpha = Alphabet::standard(2);
        let x2y2 = parse_group_word("x x y^-1 y^-1", &alpha).unwrap();
        assert!(rep.relations.contains(&x2y2));
    }

    #[test]
    fn freeness_flip_and_corrupted() {
        let flip = LatticeAction::from_phi(&flip_phi(2, 4)).unwrap();
        let rep = freeness_check(&flip, 3).unwrap();
        assert!(rep.verdict.passed());
        let alpha = Alphabet::standard(2);
        // the commutator has length 4
        assert!(!rep
            .relations
            .contains(&parse_group_word("x y x^-1 y^-1", &alpha).unwrap()));
        assert!(freeness_check(&flip, 4)
            .unwrap()
            .relations
            .contains(&parse_group_word("x y x^-1 y^-1", &alpha).unwrap()));

        let mut bad = LatticeAction::from_phi(&square_phi(4)).unwrap();
        bad.generators[0].shift = vec![0, 0];
        let rep = freeness_check(&bad, 2).unwrap();
        let f = rep.verdict.witness().expect("a reflection has fixed points");
        assert_eq!(f.iso.act(&f.fixed_point).unwrap(), f.fixed_point);
    }

    #[test]
    fn tiling() {
        let flip = LatticeAction::from_phi(&flip_phi(2, 4)).unwrap();
        let rep = fundamental_domain_check(&flip, 2, 4).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.box_points, 25);
        assert_eq!(rep.covered, 25);

        let sq = LatticeAction::from_phi(&square_phi(6)).unwrap();
        let rep = fundamental_domain_check(&sq, 2, 6).unwrap();
        assert!(rep.injective.passed());
        assert_eq!(rep.coverage, Coverage::Complete);

        let short = fundamental_domain_check(&sq, 2, 2).unwrap();
        assert!(short.injective.passed());
        assert!(matches!(short.coverage, Coverage::Inconclusive { .. }));
    }

    #[test]
    fn planar_classification() {
        let action = LatticeAction::from_phi(&square_phi(4)).unwrap();
        let x = action.generator(Gen::new(1));
        let y = action.generator(Gen::new(2));
        assert_eq!(
            classify_isometry_2d(x).unwrap(),
            Isometry2d::GlideReflection {
                offset: r(-1, 2),
                glide: [r(1, 2), r(1, 2)]
            }
        );
        assert_eq!(
            classify_isometry_2d(y).unwrap(),
            Isometry2d::GlideReflection {
                offset: r(1, 2),
                glide: [r(1, 2), r(1, 2)]
            }
        );
        assert_eq!(
            classify_isometry_2d(&x.compose(x).unwrap()).unwrap(),
            Isometry2d::Translation { shift: [1, 1] }
        );
        assert_eq!(
            classify_isometry_2d(&AffineIso::identity(2)).unwrap(),
            Isometry2d::Identity
        );
        assert!(classify_isometry_2d(&AffineIso::identity(3)).is_err());
    }

    #[test]
    fn glide_axis_is_preserved() {
        // points on the axis move by the glide vector
        let g = AffineIso::new(Perm::transposition(2, 1, 2), vec![3, -2]).unwrap();
        let Isometry2d::GlideReflection { offset, glide } = classify_isometry_2d(&g).unwrap() else {
            panic!("swap part");
        };
        for t in -3..=3 {
            let a1 = Rational64::from_integer(t);
            let p = [a1, a1 + offset];
            let img = g.act_rational(&p).unwrap();
            assert_eq!(img, vec![p[0] + glide[0], p[1] + glide[1]]);
        }
    }

    #[test]
    fn group_word_text() {
        let alpha = Alphabet::standard(2);
        let w = parse_group_word("x y^-1", &alpha).unwrap();
        assert_eq!(format_group_word(&w, &alpha), "x y^-1");
        assert_eq!(positive_word(&w), None);
        assert_eq!(
            positive_word(&parse_group_word("y x", &alpha).unwrap()),
            Some(Word::from_indices(&[2, 1]))
        );
    }
}
