//! Classical and stable-model semantics for plain programs by exhaustive
//! enumeration, plus SE-models and strong equivalence for plain ASP.
//!
//! Interpretations are atom-id bitmasks, so the canonical order on models
//! is simply the numeric order of the masks. All functions are pure and
//! deterministic.

use crate::syntax::{align_domains, AtomSet, PlainRule, Program};
use crate::{Caps, Result};

/// An SE-pair `(x, y)` with `x` a subset of `y`. Pairs order by `(y, x)`,
/// which groups the pairs of one model together.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SePair {
    pub x: AtomSet,
    pub y: AtomSet,
}

impl Ord for SePair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for SePair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A set of SE-pairs over a fixed atom domain, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeModelSet {
    pub atom_count: usize,
    pairs: Vec<SePair>,
}

impl SeModelSet {
    pub fn new(atom_count: usize, mut pairs: Vec<SePair>) -> SeModelSet {
        pairs.sort();
        pairs.dedup();
        SeModelSet { atom_count, pairs }
    }

    pub fn empty(atom_count: usize) -> SeModelSet {
        SeModelSet {
            atom_count,
            pairs: Vec::new(),
        }
    }

    /// The full pair set over `n` atoms: every `(x, y)` with `x ⊆ y`,
    /// `3^n` pairs in total.
    pub fn full(atom_count: usize) -> SeModelSet {
        let mut pairs = Vec::new();
        for y in 0u64..(1 << atom_count) {
            let y = AtomSet(y);
            for x in submasks_ascending(y) {
                pairs.push(SePair { x, y });
            }
        }
        SeModelSet {
            atom_count,
            pairs,
        }
    }

    pub fn pairs(&self) -> &[SePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, p: SePair) -> bool {
        self.pairs.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &SeModelSet) -> bool {
        self.pairs.iter().all(|p| other.contains(*p))
    }

    pub fn intersection(&self, other: &SeModelSet) -> SeModelSet {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|p| other.contains(*p))
            .collect();
        SeModelSet {
            atom_count: self.atom_count,
            pairs,
        }
    }

    /// Models represented in the set: the `y` components.
    pub fn y_projection(&self) -> Vec<AtomSet> {
        let mut ys: Vec<AtomSet> = self.pairs.iter().map(|p| p.y).collect();
        ys.sort();
        ys.dedup();
        ys
    }

    /// First pair present in exactly one of the two sets, with the side it
    /// came from (`true` = self).
    pub fn first_difference(&self, other: &SeModelSet) -> Option<(SePair, bool)> {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => return Some((*a, true)),
                (Some(_), Some(b)) => return Some((*b, false)),
                (Some(a), None) => return Some((*a, true)),
                (None, Some(b)) => return Some((*b, false)),
                (None, None) => return None,
            }
        }
    }
}

/// All submasks of `m` in ascending numeric order, including `0` and `m`.
pub(crate) fn submasks_ascending(m: AtomSet) -> Vec<AtomSet> {
    let mut out = Vec::with_capacity(1 << m.len());
    let mut s: u64 = 0;
    loop {
        out.push(AtomSet(s));
        if s == m.0 {
            break;
        }
        s = (s.wrapping_sub(m.0)) & m.0;
    }
    out.sort();
    out
}

fn body_holds(i: AtomSet, r: &PlainRule) -> bool {
    r.pos.is_subset(i) && !r.neg.intersects(i) && r.dneg.is_subset(i)
}

/// Rule satisfaction: the body fails or some head atom is true. A
/// constraint (empty head) is satisfied exactly when its body fails.
pub fn satisfies(i: AtomSet, r: &PlainRule) -> bool {
    !body_holds(i, r) || r.head.intersects(i)
}

fn satisfies_all(i: AtomSet, rules: &[PlainRule]) -> bool {
    rules.iter().all(|r| satisfies(i, r))
}

pub(crate) fn models_of_rules(
    atom_count: usize,
    rules: &[PlainRule],
    caps: &Caps,
) -> Result<Vec<AtomSet>> {
    caps.check_model_atoms(atom_count)?;
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << atom_count) {
        let i = AtomSet(bits);
        if satisfies_all(i, rules) {
            out.push(i);
        }
    }
    Ok(out)
}

/// All classical models of a plain program, in canonical order.
pub fn models(p: &Program, caps: &Caps) -> Result<Vec<AtomSet>> {
    let rules = p.plain_rules()?;
    models_of_rules(p.atom_count(), &rules, caps)
}

/// Reduct of the rules with respect to `i`: a rule survives as
/// `head <- pos` iff every negated body part holds in `i`, i.e. `neg`
/// is disjoint from `i` and `dneg` is contained in it.
pub(crate) fn reduct_rules(rules: &[PlainRule], i: AtomSet) -> Vec<PlainRule> {
    rules
        .iter()
        .filter(|r| !r.neg.intersects(i) && r.dneg.is_subset(i))
        .map(|r| PlainRule {
            head: r.head,
            pos: r.pos,
            neg: AtomSet::EMPTY,
            dneg: AtomSet::EMPTY,
        })
        .collect()
}

/// The reduct of a plain program with respect to an interpretation, as a
/// positive program over the same domains.
pub fn gl_reduct(p: &Program, i: AtomSet) -> Result<Program> {
    let rules = reduct_rules(&p.plain_rules()?, i);
    Ok(Program::new(
        p.atom_names().to_vec(),
        p.elits().to_vec(),
        rules.into_iter().map(Into::into).collect(),
    ))
}

pub(crate) fn answer_sets_of_rules(
    atom_count: usize,
    rules: &[PlainRule],
    caps: &Caps,
) -> Result<Vec<AtomSet>> {
    let models = models_of_rules(atom_count, rules, caps)?;
    Ok(models
        .into_iter()
        .filter(|&m| {
            if m.is_empty() {
                return true;
            }
            let reduct = reduct_rules(rules, m);
            // minimality only quantifies over proper subsets of m
            let mut s = m.0.wrapping_sub(1) & m.0;
            loop {
                if satisfies_all(AtomSet(s), &reduct) {
                    return false;
                }
                if s == 0 {
                    break;
                }
                s = s.wrapping_sub(1) & m.0;
            }
            true
        })
        .collect())
}

/// Answer sets of a plain program: models that are subset-minimal models
/// of their own reduct.
pub fn answer_sets(p: &Program, caps: &Caps) -> Result<Vec<AtomSet>> {
    let rules = p.plain_rules()?;
    answer_sets_of_rules(p.atom_count(), &rules, caps)
}

pub(crate) fn se_models_of_rules(
    atom_count: usize,
    rules: &[PlainRule],
    caps: &Caps,
) -> Result<SeModelSet> {
    caps.check_pair_atoms(atom_count)?;
    let models = models_of_rules(atom_count, rules, caps)?;
    let mut pairs = Vec::new();
    for y in models {
        let reduct = reduct_rules(rules, y);
        for x in submasks_ascending(y) {
            if satisfies_all(x, &reduct) {
                pairs.push(SePair { x, y });
            }
        }
    }
    // models ascend and submasks ascend per model, so this is already sorted
    Ok(SeModelSet {
        atom_count,
        pairs,
    })
}

/// SE-models of a plain program: all pairs `(x, y)` with `x ⊆ y`, `y` a
/// model of the program, and `x` a model of the reduct w.r.t. `y`.
pub fn se_models(p: &Program, caps: &Caps) -> Result<SeModelSet> {
    let rules = p.plain_rules()?;
    se_models_of_rules(p.atom_count(), &rules, caps)
}

/// Plain programs are strongly equivalent iff they have the same SE-models.
/// Domains are aligned first.
pub fn asp_strong_equiv(p1: &Program, p2: &Program, caps: &Caps) -> Result<bool> {
    let (a1, a2) = align_domains(p1, p2);
    Ok(se_models(&a1, caps)? == se_models(&a2, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_program, parse_program_with, ParseMode, ParseOptions};

    fn plain(text: &str) -> Program {
        parse_program_with(
            text,
            ParseOptions {
                mode: ParseMode::Plain,
                ..Default::default()
            },
        )
        .unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn named_sets(p: &Program, sets: &[AtomSet]) -> Vec<String> {
        sets.iter().map(|s| p.set_text(*s)).collect()
    }

    #[test]
    fn satisfaction() {
        let p = plain("p' :- ~ p.");
        let r = p.plain_rules().unwrap()[0];
        let id = |n: &str| p.atom_id(n).unwrap();
        let i_p = AtomSet::singleton(id("p"));
        let i_q = AtomSet::singleton(id("p'"));
        assert!(satisfies(i_q, &r)); // body true, head true
        assert!(satisfies(i_p, &r)); // body false
        let c = plain(":- p.");
        let r = c.plain_rules().unwrap()[0];
        assert!(!satisfies(AtomSet::singleton(c.atom_id("p").unwrap()), &r));
    }

    #[test]
    fn models_enumeration() {
        let p = plain("#atoms p, p'.\np'.");
        let ms = models(&p, &caps()).unwrap();
        assert_eq!(named_sets(&p, &ms), vec!["{p'}", "{p, p'}"]);

        let p = plain("#atoms p.");
        let ms = models(&p, &caps()).unwrap();
        assert_eq!(named_sets(&p, &ms), vec!["{}", "{p}"]);

        let p = plain(".");
        assert!(models(&p, &caps()).unwrap().is_empty());
    }

    #[test]
    fn models_resource_limit() {
        let p = plain("#atoms a.");
        let tight = Caps {
            max_model_atoms: 0,
            ..caps()
        };
        assert!(matches!(
            models(&p, &tight),
            Err(crate::Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn reduct() {
        let p = plain("p' :- ~ p.");
        let id = |n: &str| p.atom_id(n).unwrap();
        let r = gl_reduct(&p, AtomSet::singleton(id("p"))).unwrap();
        assert!(r.rules().is_empty());
        let r = gl_reduct(&p, AtomSet::singleton(id("p'"))).unwrap();
        assert_eq!(r.rules().len(), 1);
        assert!(r.rules()[0].neg.is_empty());
        assert_eq!(r.rule_text(0), "p'.");

        // double default negation requires the atom to be true
        let p = plain("a :- b, ~ ~ c.");
        let bc: AtomSet = [p.atom_id("b").unwrap(), p.atom_id("c").unwrap()]
            .into_iter()
            .collect();
        let r = gl_reduct(&p, bc).unwrap();
        assert_eq!(r.rule_text(0), "a :- b.");
        let r = gl_reduct(&p, AtomSet::singleton(p.atom_id("b").unwrap())).unwrap();
        assert!(r.rules().is_empty());
    }

    #[test]
    fn stable_models() {
        let p = plain("p' :- ~ p.\np :- ~ p'.");
        let asets = answer_sets(&p, &caps()).unwrap();
        assert_eq!(named_sets(&p, &asets), vec!["{p}", "{p'}"]);

        let p = plain("p :- ~ p.");
        assert!(answer_sets(&p, &caps()).unwrap().is_empty());

        let p = plain("p.");
        let asets = answer_sets(&p, &caps()).unwrap();
        assert_eq!(named_sets(&p, &asets), vec!["{p}"]);
    }

    #[test]
    fn se_model_sets() {
        let p = plain("#atoms p, p'.\np'.");
        let se = se_models(&p, &caps()).unwrap();
        let texts: Vec<String> = se
            .pairs()
            .iter()
            .map(|pr| format!("({},{})", p.set_text(pr.x), p.set_text(pr.y)))
            .collect();
        assert_eq!(texts, vec!["({p'},{p'})", "({p'},{p, p'})", "({p, p'},{p, p'})"]);

        let p = plain("#atoms p.");
        assert_eq!(se_models(&p, &caps()).unwrap(), SeModelSet::full(1));

        let p = plain("p :- ~ p.");
        let se = se_models(&p, &caps()).unwrap();
        assert_eq!(se.len(), 2);
        assert!(se.contains(SePair {
            x: AtomSet::EMPTY,
            y: AtomSet(1)
        }));
        assert!(se.contains(SePair {
            x: AtomSet(1),
            y: AtomSet(1)
        }));
    }

    #[test]
    fn strong_equivalence_for_plain_programs() {
        let taut = plain("p :- p.");
        let empty = plain("#atoms p.");
        assert!(asp_strong_equiv(&taut, &empty, &caps()).unwrap());

        let fact = plain("p.");
        let loopy = plain("p :- ~ p.");
        assert!(!asp_strong_equiv(&fact, &loopy, &caps()).unwrap());

        let p = plain("a :- ~ b, ~ ~ a.");
        assert!(asp_strong_equiv(&p, &p, &caps()).unwrap());
    }

    #[test]
    fn every_model_yields_reflexive_se_pair() {
        let p = plain("a :- ~ b.\nb :- ~ a.\nc :- a, ~ ~ c.");
        let se = se_models(&p, &caps()).unwrap();
        for y in models(&p, &caps()).unwrap() {
            assert!(se.contains(SePair { x: y, y }));
        }
    }

    #[test]
    fn answer_sets_are_models() {
        let p = plain("a :- ~ b.\nb :- ~ a.\n:- b.");
        let ms = models(&p, &caps()).unwrap();
        for a in answer_sets(&p, &caps()).unwrap() {
            assert!(ms.contains(&a));
        }
    }

    #[test]
    fn union_intersects_se_models() {
        let p1 = plain("#atoms a, b.\na :- ~ b.");
        let p2 = plain("#atoms a, b.\nb :- a.");
        let u = p1.union(&p2);
        let se_u = se_models(&u, &caps()).unwrap();
        let se_1 = se_models(&p1, &caps()).unwrap();
        let se_2 = se_models(&p2, &caps()).unwrap();
        assert_eq!(se_u, se_1.intersection(&se_2));
    }

    #[test]
    fn positive_programs_have_minimal_models_as_answer_sets() {
        let p = plain("a | b.\nc :- a.");
        let ms = models(&p, &caps()).unwrap();
        let minimal: Vec<AtomSet> = ms
            .iter()
            .copied()
            .filter(|m| !ms.iter().any(|o| o.is_proper_subset(*m)))
            .collect();
        assert_eq!(answer_sets(&p, &caps()).unwrap(), minimal);
        for m in &ms {
            let r = gl_reduct(&p, *m).unwrap();
            assert_eq!(r.rules(), p.rules());
        }
    }

    #[test]
    fn full_pair_set_has_power_of_three_size() {
        assert_eq!(SeModelSet::full(0).len(), 1);
        assert_eq!(SeModelSet::full(3).len(), 27);
    }

    #[test]
    fn rejects_epistemic_programs() {
        let p = parse_program("p :- not q.").unwrap();
        assert!(matches!(models(&p, &caps()), Err(crate::Error::NotPlain)));
    }
}
