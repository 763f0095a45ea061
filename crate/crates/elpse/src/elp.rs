//! Epistemic layer: guesses, epistemic reducts, compatibility,
//! realizability, candidate world views, world views, and SE-functions.

use crate::asp::{
    answer_sets_of_rules, models_of_rules, se_models_of_rules, SeModelSet,
};
use crate::syntax::{AtomSet, Elit, ElpRule, PlainRule, Program};
use crate::{Caps, Error, Result};
use std::collections::BTreeMap;

/// A guess: subset of the epistemic-literal domain, one bit per literal
/// index.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Guess(pub u64);

impl Guess {
    pub const EMPTY: Guess = Guess(0);

    pub fn contains(self, idx: usize) -> bool {
        self.0 & (1 << idx) != 0
    }

    pub fn insert(&mut self, idx: usize) {
        self.0 |= 1 << idx;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Guess) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Guess) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn text(self, p: &Program) -> String {
        let parts: Vec<String> = self
            .indices()
            .map(|i| p.elit_text(p.elits()[i]))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Canonical guess order: subsets of the literal domain by increasing
/// cardinality, then lexicographically on their ascending index sequences.
pub fn guess_order(n_elits: usize) -> Vec<Guess> {
    let mut out = Vec::with_capacity(1 << n_elits);
    for k in 0..=n_elits {
        // standard lexicographic k-combinations of 0..n_elits
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut g = Guess::EMPTY;
            for &i in &idx {
                g.insert(i);
            }
            out.push(g);
            if k == 0 {
                break;
            }
            let mut j = k;
            while j > 0 && idx[j - 1] == n_elits - (k - (j - 1)) {
                j -= 1;
            }
            if j == 0 {
                break;
            }
            idx[j - 1] += 1;
            for l in j..k {
                idx[l] = idx[l - 1] + 1;
            }
        }
    }
    out
}

/// A candidate world view: a guess together with the answer sets of the
/// epistemic reduct under that guess (non-empty and compatible with it).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WorldView {
    pub guess: Guess,
    pub interps: Vec<AtomSet>,
}

/// The SE-function of a program: a total map from guesses over its
/// epistemic-literal domain to SE-model sets. Unrealizable guesses map to
/// the empty set; realizable ones to the SE-models of the reduct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeFunction {
    pub atom_count: usize,
    pub elits: Vec<Elit>,
    entries: BTreeMap<u64, SeModelSet>,
}

impl SeFunction {
    pub fn entry(&self, phi: Guess) -> &SeModelSet {
        &self.entries[&phi.0]
    }

    pub fn guesses(&self) -> Vec<Guess> {
        guess_order(self.elits.len())
    }
}

/// True in `i`: the literal of the epistemic negation `not l`.
fn literal_holds(i: AtomSet, e: Elit) -> bool {
    if e.negated {
        !i.contains(e.atom)
    } else {
        i.contains(e.atom)
    }
}

/// The epistemic reduct of a program with respect to a guess, as a plain
/// program over the same atoms.
///
/// A rule vanishes when a guessed literal makes one of its `~not` body
/// parts false. Otherwise guessed literals are replaced by truth and the
/// remaining epistemic negations become default negation; the triple
/// negation arising from `~ not ~ g` collapses to `~ g`.
pub fn epistemic_reduct(p: &Program, phi: Guess) -> Program {
    let mut guessed_not: AtomSet = AtomSet::EMPTY; // atoms a with `not a` guessed
    let mut guessed_not_neg: AtomSet = AtomSet::EMPTY; // atoms a with `not ~ a` guessed
    for i in phi.indices() {
        let e = p.elits()[i];
        if e.negated {
            guessed_not_neg.insert(e.atom);
        } else {
            guessed_not.insert(e.atom);
        }
    }
    let mut rules = Vec::new();
    for r in p.rules() {
        if r.known.intersects(guessed_not) || r.impossible.intersects(guessed_not_neg) {
            continue;
        }
        let unknown_left = r.unknown.minus(guessed_not);
        let possible_left = r.possible.minus(guessed_not_neg);
        rules.push(ElpRule {
            head: r.head,
            pos: r.pos,
            neg: r.neg.union(unknown_left).union(r.impossible),
            dneg: r.dneg.union(possible_left).union(r.known),
            ..ElpRule::default()
        });
    }
    Program::new(p.atom_names().to_vec(), Vec::new(), rules)
}

pub(crate) fn reduct_plain_rules(p: &Program, phi: Guess) -> Vec<PlainRule> {
    epistemic_reduct(p, phi)
        .plain_rules()
        .expect("epistemic reduct is plain by construction")
}

/// Compatibility of a set of interpretations with a guess: the set is
/// non-empty, every guessed `not l` has a falsifying interpretation, and
/// every unguessed `l` holds everywhere.
pub fn compatible(ms: &[AtomSet], phi: Guess, elits: &[Elit]) -> bool {
    if ms.is_empty() {
        return false;
    }
    for (idx, e) in elits.iter().enumerate() {
        if phi.contains(idx) {
            if ms.iter().all(|i| literal_holds(*i, *e)) {
                return false;
            }
        } else if ms.iter().any(|i| !literal_holds(*i, *e)) {
            return false;
        }
    }
    true
}

/// Interpretations satisfying every literal outside the guess; any
/// compatible subset of `ms` is a subset of this one.
fn compatible_candidates(ms: &[AtomSet], phi: Guess, elits: &[Elit]) -> Vec<AtomSet> {
    ms.iter()
        .copied()
        .filter(|i| {
            elits
                .iter()
                .enumerate()
                .all(|(idx, e)| phi.contains(idx) || literal_holds(*i, *e))
        })
        .collect()
}

/// A guess is realizable in a set of interpretations iff some subset is
/// compatible with it. Computed without subset enumeration: filtering to
/// the interpretations that satisfy all unguessed literals preserves every
/// witness for the guessed ones, so the filtered set is the unique maximal
/// candidate.
pub fn realizable(phi: Guess, ms: &[AtomSet], elits: &[Elit]) -> bool {
    let mstar = compatible_candidates(ms, phi, elits);
    compatible(&mstar, phi, elits)
}

/// A compatible subset of `ms` with at most `max(|phi|, 1)` elements: the
/// canonically smallest falsifier for each guessed literal, or a canonical
/// singleton when the guess is empty.
pub fn minimal_compatible_witness(
    phi: Guess,
    ms: &[AtomSet],
    elits: &[Elit],
) -> Result<Vec<AtomSet>> {
    let mstar = compatible_candidates(ms, phi, elits);
    if !compatible(&mstar, phi, elits) {
        return Err(Error::NotRealizable);
    }
    let mut picked: Vec<AtomSet> = Vec::new();
    if phi.is_empty() {
        picked.push(*mstar.iter().min().expect("mstar non-empty"));
    } else {
        for idx in phi.indices() {
            let e = elits[idx];
            let w = mstar
                .iter()
                .copied()
                .filter(|i| !literal_holds(*i, e))
                .min()
                .expect("witness exists by realizability");
            picked.push(w);
        }
    }
    picked.sort();
    picked.dedup();
    Ok(picked)
}

/// A guess is consistent iff it contains at least one of `not a`,
/// `not ~ a` whenever the domain contains both; otherwise no non-empty set
/// of interpretations can satisfy both remaining literals everywhere.
pub fn consistent_guess(phi: Guess, elits: &[Elit]) -> bool {
    for (i, e) in elits.iter().enumerate() {
        if e.negated {
            continue;
        }
        if let Ok(j) = elits.binary_search(&Elit::not_neg(e.atom)) {
            if !phi.contains(i) && !phi.contains(j) {
                return false;
            }
        }
    }
    true
}

/// One SE-function entry: the SE-models of the reduct when the guess is
/// realizable there, the empty set otherwise.
pub(crate) fn se_entry(p: &Program, phi: Guess, caps: &Caps) -> Result<SeModelSet> {
    let rules = reduct_plain_rules(p, phi);
    let n = p.atom_count();
    let ms = models_of_rules(n, &rules, caps)?;
    if realizable(phi, &ms, p.elits()) {
        se_models_of_rules(n, &rules, caps)
    } else {
        Ok(SeModelSet::empty(n))
    }
}

/// The SE-function of a program: an entry for every guess over its
/// epistemic-literal domain.
pub fn se_function(p: &Program, caps: &Caps) -> Result<SeFunction> {
    caps.check_elits(p.elits().len())?;
    caps.check_pair_atoms(p.atom_count())?;
    let mut entries = BTreeMap::new();
    for phi in guess_order(p.elits().len()) {
        entries.insert(phi.0, se_entry(p, phi, caps)?);
    }
    Ok(SeFunction {
        atom_count: p.atom_count(),
        elits: p.elits().to_vec(),
        entries,
    })
}

/// Candidate world views: for every guess, the answer sets of the
/// epistemic reduct, kept when compatible with the guess. Guesses are
/// enumerated in canonical order.
pub fn cwvs(p: &Program, caps: &Caps) -> Result<Vec<WorldView>> {
    caps.check_elits(p.elits().len())?;
    let mut out = Vec::new();
    for phi in guess_order(p.elits().len()) {
        let rules = reduct_plain_rules(p, phi);
        let asets = answer_sets_of_rules(p.atom_count(), &rules, caps)?;
        if compatible(&asets, phi, p.elits()) {
            out.push(WorldView {
                guess: phi,
                interps: asets,
            });
        }
    }
    Ok(out)
}

/// World views: candidate world views whose guess is subset-maximal among
/// the candidate guesses.
pub fn wvs(p: &Program, caps: &Caps) -> Result<Vec<WorldView>> {
    let all = cwvs(p, caps)?;
    Ok(all
        .iter()
        .filter(|wv| {
            !all.iter()
                .any(|other| wv.guess.is_proper_subset(other.guess))
        })
        .cloned()
        .collect())
}

/// Recovers the candidate world view for a guess from the SE-function
/// alone: models whose only pair is reflexive, provided the resulting set
/// is compatible with the guess.
pub fn cwv_from_se(f: &SeFunction, phi: Guess, elits: &[Elit]) -> Option<Vec<AtomSet>> {
    let entry = f.entry(phi);
    let mut by_y: BTreeMap<AtomSet, usize> = BTreeMap::new();
    for pr in entry.pairs() {
        *by_y.entry(pr.y).or_insert(0) += 1;
    }
    let m: Vec<AtomSet> = by_y
        .iter()
        .filter(|(y, count)| {
            **count == 1
                && entry.contains(crate::asp::SePair {
                    x: **y,
                    y: **y,
                })
        })
        .map(|(y, _)| *y)
        .collect();
    if compatible(&m, phi, elits) {
        Some(m)
    } else {
        None
    }
}

/// Deduplicated interpretation-set projection of a view collection, for
/// comparisons that ignore the associated guesses.
pub fn view_projection(views: &[WorldView]) -> Vec<Vec<AtomSet>> {
    let mut sets: Vec<Vec<AtomSet>> = views.iter().map(|wv| wv.interps.clone()).collect();
    sets.sort();
    sets.dedup();
    sets
}
