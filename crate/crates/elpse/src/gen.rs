//! Seeded random program generators, used to drive the differential and
//! property checks. Programs come out over a fixed alphabetically ordered
//! atom pool, so atom ids are stable.

use crate::simplify;
use crate::syntax::{AtomSet, Elit, ElpRule, Program};
use rand::prelude::*;

const POOL: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn random_subset(rng: &mut impl Rng, atoms: usize, density: f64) -> AtomSet {
    let mut s = AtomSet::EMPTY;
    for id in 0..atoms as u32 {
        if rng.gen_bool(density) {
            s.insert(id);
        }
    }
    s
}

/// A random rule in seven-set form over `atoms` pool atoms.
pub fn random_elp_rule(rng: &mut impl Rng, atoms: usize) -> ElpRule {
    let d = 0.22;
    ElpRule {
        head: random_subset(rng, atoms, d),
        pos: random_subset(rng, atoms, d),
        neg: random_subset(rng, atoms, d),
        dneg: AtomSet::EMPTY,
        unknown: random_subset(rng, atoms, d),
        possible: random_subset(rng, atoms, d),
        known: random_subset(rng, atoms, d),
        impossible: random_subset(rng, atoms, d),
    }
}

/// A random plain rule; `allow_dneg` admits double default negation.
pub fn random_plain_rule(rng: &mut impl Rng, atoms: usize, allow_dneg: bool) -> ElpRule {
    let d = 0.3;
    ElpRule {
        head: random_subset(rng, atoms, d),
        pos: random_subset(rng, atoms, d),
        neg: random_subset(rng, atoms, d),
        dneg: if allow_dneg {
            random_subset(rng, atoms, 0.15)
        } else {
            AtomSet::EMPTY
        },
        ..ElpRule::default()
    }
}

fn pool_atoms(atoms: usize) -> Vec<String> {
    POOL[..atoms].iter().map(|s| s.to_string()).collect()
}

/// A random epistemic program. Roughly one rule in three carries epistemic
/// literals; occasionally an extra epistemic literal is declared beyond the
/// ones occurring in rules, exercising explicit domain extensions.
pub fn random_elp(rng: &mut impl Rng, atoms: usize, max_rules: usize) -> Program {
    assert!(atoms <= POOL.len());
    let n_rules = rng.gen_range(0..=max_rules);
    let mut rules = Vec::new();
    for _ in 0..n_rules {
        if rng.gen_bool(0.6) {
            rules.push(random_elp_rule(rng, atoms));
        } else {
            rules.push(random_plain_rule(rng, atoms, false));
        }
    }
    let mut declared = Vec::new();
    if atoms > 0 && rng.gen_bool(0.3) {
        declared.push(Elit {
            atom: rng.gen_range(0..atoms as u32),
            negated: rng.gen_bool(0.5),
        });
    }
    Program::new(pool_atoms(atoms), declared, rules)
}

/// A random plain program (empty epistemic-literal domain unless a literal
/// is declared explicitly, which never happens here).
pub fn random_plain(
    rng: &mut impl Rng,
    atoms: usize,
    max_rules: usize,
    allow_dneg: bool,
) -> Program {
    assert!(atoms <= POOL.len());
    let n_rules = rng.gen_range(0..=max_rules);
    let rules = (0..n_rules)
        .map(|_| random_plain_rule(rng, atoms, allow_dneg))
        .collect();
    Program::new(pool_atoms(atoms), Vec::new(), rules)
}

/// A random epistemic program whose literal domain is exactly `pool`:
/// plain base rules with epistemic body parts sprinkled in from the pool.
/// Keeps the guess space small independently of the atom count.
pub fn random_elp_sparse(
    rng: &mut impl Rng,
    atoms: usize,
    max_rules: usize,
    pool: &[Elit],
) -> Program {
    assert!(atoms <= POOL.len());
    let n_rules = rng.gen_range(0..=max_rules);
    let mut rules = Vec::new();
    for _ in 0..n_rules {
        let mut r = random_plain_rule(rng, atoms, false);
        for e in pool {
            if rng.gen_bool(0.35) {
                match (e.negated, rng.gen_bool(0.5)) {
                    (false, true) => r.unknown.insert(e.atom),
                    (false, false) => r.known.insert(e.atom),
                    (true, true) => r.possible.insert(e.atom),
                    (true, false) => r.impossible.insert(e.atom),
                }
            }
        }
        rules.push(r);
    }
    Program::new(pool_atoms(atoms), pool.to_vec(), rules)
}

/// `k` distinct epistemic literals over the first `atoms` pool atoms.
pub fn random_elit_pool(rng: &mut impl Rng, atoms: usize, k: usize) -> Vec<Elit> {
    let mut all: Vec<Elit> = (0..atoms as u32)
        .flat_map(|a| [Elit::not(a), Elit::not_neg(a)])
        .collect();
    all.shuffle(rng);
    let mut pool: Vec<Elit> = all.into_iter().take(k).collect();
    pool.sort();
    pool
}

/// A random guess over the program's epistemic literals.
pub fn random_guess(rng: &mut impl Rng, p: &Program) -> crate::elp::Guess {
    let mut g = crate::elp::Guess::EMPTY;
    for i in 0..p.elits().len() {
        if rng.gen_bool(0.5) {
            g.insert(i);
        }
    }
    g
}

/// A strong-equivalence-preserving variant of `p`, produced by a few random
/// edits that are sound by construction: duplicating rules, permuting the
/// rule order, widening a rule's positive body (the original subsumes the
/// widened copy), and inserting syntactically tautological rules. Plain
/// programs stay plain.
pub fn equivalent_variant(rng: &mut impl Rng, p: &Program) -> Program {
    let atoms = p.atom_count();
    let plain = p.is_plain();
    let mut rules: Vec<ElpRule> = p.rules().to_vec();
    for _ in 0..rng.gen_range(1..=3) {
        match rng.gen_range(0..4) {
            0 if !rules.is_empty() => {
                let r = rules[rng.gen_range(0..rules.len())];
                rules.push(r);
            }
            1 => {
                rules.shuffle(rng);
            }
            2 if !rules.is_empty() && atoms > 0 => {
                // a copy with a wider positive body is subsumed by the original
                let mut wide = rules[rng.gen_range(0..rules.len())];
                wide.pos.insert(rng.gen_range(0..atoms as u32));
                rules.push(wide);
            }
            _ if atoms > 0 => {
                // tautological via the head-meets-body condition
                let mut r = if plain {
                    random_plain_rule(rng, atoms, false)
                } else {
                    random_elp_rule(rng, atoms)
                };
                let a = rng.gen_range(0..atoms as u32);
                r.head.insert(a);
                r.pos.insert(a);
                debug_assert!(if r.dneg.is_empty() && r.is_plain() {
                    simplify::asp_tautological(0, &r.as_plain().unwrap()).tautological
                } else {
                    simplify::elp_tautological(0, &r).tautological
                });
                rules.push(r);
            }
            _ => {}
        }
    }
    Program::new(p.atom_names().to_vec(), p.elits().to_vec(), rules)
}
