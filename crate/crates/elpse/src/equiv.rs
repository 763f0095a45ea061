//! Equivalence decisions for epistemic programs.
//!
//! Ordinary equivalence compares (candidate) world views directly. Strong
//! equivalence — invariance under forming unions with arbitrary extension
//! programs — is decided by comparing SE-functions entry by entry. When two
//! programs are not strongly equivalent, [`construct_witness`] turns the
//! differing SE-function entry into a concrete plain program whose union
//! with the inputs yields different world views.

use crate::asp::{models_of_rules, SeModelSet, SePair};
use crate::elp::{
    self, guess_order, minimal_compatible_witness, se_entry, view_projection, Guess,
};
use crate::syntax::{align_domains, AtomSet, Elit, ElpRule, Program};
use crate::{Caps, Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EquivMode {
    Strong,
    Cwv,
    Wv,
}

impl EquivMode {
    pub fn label(self) -> &'static str {
        match self {
            EquivMode::Strong => "strong",
            EquivMode::Cwv => "cwv",
            EquivMode::Wv => "wv",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    /// An SE-pair lies in exactly one program's entry for the guess.
    PairMismatch,
    /// The guess is realizable in exactly one of the programs.
    RealizabilityMismatch,
    /// A (candidate) world view exists in exactly one program.
    CwvMismatch,
}

impl WitnessKind {
    pub fn label(self) -> &'static str {
        match self {
            WitnessKind::PairMismatch => "pair-mismatch",
            WitnessKind::RealizabilityMismatch => "realizability-mismatch",
            WitnessKind::CwvMismatch => "cwv-mismatch",
        }
    }
}

/// Evidence for a failed equivalence check. Guesses, pairs, and views are
/// recorded by atom name so the witness stays meaningful independently of
/// any particular domain alignment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferenceWitness {
    pub kind: WitnessKind,
    pub side: Side,
    /// The guess at which the difference shows, as (atom, negated) pairs.
    pub guess: Vec<(String, bool)>,
    /// For SE-level mismatches: the pair present only on `side`.
    pub pair: Option<(Vec<String>, Vec<String>)>,
    /// For view-level mismatches: the interpretation set present only on
    /// `side`.
    pub views: Option<Vec<Vec<String>>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivVerdict {
    pub equivalent: bool,
    pub mode: EquivMode,
    pub difference: Option<DifferenceWitness>,
}

fn guess_names(p: &Program, phi: Guess) -> Vec<(String, bool)> {
    phi.indices()
        .map(|i| {
            let e = p.elits()[i];
            (p.atom_name(e.atom).to_string(), e.negated)
        })
        .collect()
}

fn set_names(p: &Program, s: AtomSet) -> Vec<String> {
    s.iter().map(|id| p.atom_name(id).to_string()).collect()
}

fn pair_names(p: &Program, pr: SePair) -> (Vec<String>, Vec<String>) {
    (set_names(p, pr.x), set_names(p, pr.y))
}

/// WV- or CWV-equivalence: the deduplicated interpretation-set projections
/// of the views must coincide. Domains are aligned first.
pub fn ordinary_equiv(
    p1: &Program,
    p2: &Program,
    mode: EquivMode,
    caps: &Caps,
) -> Result<EquivVerdict> {
    assert!(mode != EquivMode::Strong, "use strong_equiv");
    let (a1, a2) = align_domains(p1, p2);
    let views = |p: &Program| -> Result<Vec<elp::WorldView>> {
        match mode {
            EquivMode::Cwv => elp::cwvs(p, caps),
            EquivMode::Wv => elp::wvs(p, caps),
            EquivMode::Strong => unreachable!(),
        }
    };
    let v1 = views(&a1)?;
    let v2 = views(&a2)?;
    let proj1 = view_projection(&v1);
    let proj2 = view_projection(&v2);
    if proj1 == proj2 {
        return Ok(EquivVerdict {
            equivalent: true,
            mode,
            difference: None,
        });
    }
    // first projection present on exactly one side, in canonical order
    let (set, side, owner_views) = proj1
        .iter()
        .filter(|s| !proj2.contains(s))
        .map(|s| (s, Side::Left, &v1))
        .chain(
            proj2
                .iter()
                .filter(|s| !proj1.contains(s))
                .map(|s| (s, Side::Right, &v2)),
        )
        .min_by(|a, b| a.0.cmp(b.0))
        .expect("projections differ");
    let guess = owner_views
        .iter()
        .find(|wv| &wv.interps == set)
        .map(|wv| guess_names(&a1, wv.guess))
        .unwrap_or_default();
    Ok(EquivVerdict {
        equivalent: false,
        mode,
        difference: Some(DifferenceWitness {
            kind: WitnessKind::CwvMismatch,
            side,
            guess,
            pair: None,
            views: Some(set.iter().map(|i| set_names(&a1, *i)).collect()),
        }),
    })
}

fn entry_difference(
    aligned: &Program,
    phi: Guess,
    e1: &SeModelSet,
    e2: &SeModelSet,
) -> Option<DifferenceWitness> {
    match (e1.is_empty(), e2.is_empty()) {
        (true, true) => None,
        (false, true) | (true, false) => {
            let (owner, side) = if e2.is_empty() {
                (e1, Side::Left)
            } else {
                (e2, Side::Right)
            };
            Some(DifferenceWitness {
                kind: WitnessKind::RealizabilityMismatch,
                side,
                guess: guess_names(aligned, phi),
                pair: Some(pair_names(aligned, owner.pairs()[0])),
                views: None,
            })
        }
        (false, false) => e1.first_difference(e2).map(|(pair, left)| DifferenceWitness {
            kind: WitnessKind::PairMismatch,
            side: if left { Side::Left } else { Side::Right },
            guess: guess_names(aligned, phi),
            pair: Some(pair_names(aligned, pair)),
            views: None,
        }),
    }
}

/// Strong equivalence: the SE-functions must agree on every guess. On
/// failure the verdict carries the difference at the first guess (in
/// canonical order) where the entries diverge.
pub fn strong_equiv(p1: &Program, p2: &Program, caps: &Caps) -> Result<EquivVerdict> {
    let (a1, a2) = align_domains(p1, p2);
    let f1 = elp::se_function(&a1, caps)?;
    let f2 = elp::se_function(&a2, caps)?;
    for phi in f1.guesses() {
        if let Some(d) = entry_difference(&a1, phi, f1.entry(phi), f2.entry(phi)) {
            return Ok(EquivVerdict {
                equivalent: false,
                mode: EquivMode::Strong,
                difference: Some(d),
            });
        }
    }
    Ok(EquivVerdict {
        equivalent: true,
        mode: EquivMode::Strong,
        difference: None,
    })
}

/// Searches for an SE-function difference directly, following the
/// guess-and-check shape of the NP procedure for non-equivalence but with
/// the nondeterministic choices replaced by ordered loops:
///
/// 1. iterate guesses in canonical order;
/// 2. compute a small compatible witness set per side (bounded by the
///    guess size), which decides realizability;
/// 3. confirm the witness interpretations are models of their reduct;
/// 4. scan pairs over the atom domain, and
/// 5. report the first pair accepted by exactly one side.
///
/// The result agrees with [`strong_equiv`]: a witness exists iff the
/// programs are not strongly equivalent.
pub fn find_se_difference(
    p1: &Program,
    p2: &Program,
    caps: &Caps,
) -> Result<Option<DifferenceWitness>> {
    let (a1, a2) = align_domains(p1, p2);
    caps.check_elits(a1.elits().len())?;
    caps.check_pair_atoms(a1.atom_count())?;
    let n = a1.atom_count();
    for phi in guess_order(a1.elits().len()) {
        let rules1 = elp::reduct_plain_rules(&a1, phi);
        let rules2 = elp::reduct_plain_rules(&a2, phi);
        let ms1 = models_of_rules(n, &rules1, caps)?;
        let ms2 = models_of_rules(n, &rules2, caps)?;
        let w1 = minimal_compatible_witness(phi, &ms1, a1.elits()).ok();
        let w2 = minimal_compatible_witness(phi, &ms2, a2.elits()).ok();
        // the witness interpretations are models of their own reduct by
        // construction; their existence decides realizability per side
        debug_assert!(w1
            .iter()
            .flatten()
            .all(|i| rules1.iter().all(|r| crate::asp::satisfies(*i, r))));
        debug_assert!(w2
            .iter()
            .flatten()
            .all(|i| rules2.iter().all(|r| crate::asp::satisfies(*i, r))));
        match (w1.is_some(), w2.is_some()) {
            (false, false) => continue,
            (realizable1, _) => {
                let e1 = if realizable1 {
                    crate::asp::se_models_of_rules(n, &rules1, caps)?
                } else {
                    SeModelSet::empty(n)
                };
                let e2 = if w2.is_some() {
                    crate::asp::se_models_of_rules(n, &rules2, caps)?
                } else {
                    SeModelSet::empty(n)
                };
                if let Some(d) = entry_difference(&a1, phi, &e1, &e2) {
                    return Ok(Some(d));
                }
            }
        }
    }
    Ok(None)
}

struct ResolvedWitness {
    owner: Program,
    other: Program,
    phi: Guess,
    pair: SePair,
}

/// Re-checks a claimed difference witness against the two programs and
/// resolves it into aligned form. The pair must lie in the owning side's
/// SE-function entry for the guess and not in the other side's.
fn resolve_witness(
    p1: &Program,
    p2: &Program,
    d: &DifferenceWitness,
    caps: &Caps,
) -> Result<ResolvedWitness> {
    let (a1, a2) = align_domains(p1, p2);
    let Some((x_names, y_names)) = &d.pair else {
        return Err(Error::NoDifference(
            "witness carries no SE-pair".to_string(),
        ));
    };
    let mut phi = Guess::EMPTY;
    for (name, negated) in &d.guess {
        let atom = a1
            .atom_id(name)
            .ok_or_else(|| Error::NoDifference(format!("unknown atom `{name}` in guess")))?;
        let idx = a1
            .elit_index(Elit {
                atom,
                negated: *negated,
            })
            .ok_or_else(|| Error::NoDifference(format!("unknown literal over `{name}`")))?;
        phi.insert(idx);
    }
    let to_set = |names: &[String]| -> Result<AtomSet> {
        names
            .iter()
            .map(|n| {
                a1.atom_id(n)
                    .ok_or_else(|| Error::NoDifference(format!("unknown atom `{n}` in pair")))
            })
            .collect()
    };
    let pair = SePair {
        x: to_set(x_names)?,
        y: to_set(y_names)?,
    };
    if !pair.x.is_subset(pair.y) {
        return Err(Error::NoDifference("pair is not nested".to_string()));
    }
    let e1 = se_entry(&a1, phi, caps)?;
    let e2 = se_entry(&a2, phi, caps)?;
    let (owner, other, owner_side) = match (e1.contains(pair), e2.contains(pair)) {
        (true, false) => (a1, a2, Side::Left),
        (false, true) => (a2, a1, Side::Right),
        (true, true) => {
            return Err(Error::NoDifference(
                "pair is in both SE-function entries".to_string(),
            ))
        }
        (false, false) => {
            return Err(Error::NoDifference(
                "pair is in neither SE-function entry".to_string(),
            ))
        }
    };
    if owner_side != d.side {
        return Err(Error::NoDifference(format!(
            "pair belongs to the {} program, witness claims {}",
            owner_side.label(),
            d.side.label()
        )));
    }
    Ok(ResolvedWitness {
        owner,
        other,
        phi,
        pair,
    })
}

/// Builds a plain program that makes an SE-function difference observable:
/// the union of the witness with each input yields different world views.
///
/// The construction realizes the potential world view behind the differing
/// entry. With `C = {Y_1..Y_m}` a minimal compatible witness for the guess
/// and `Y_{m+1}..Y_n` the remaining interpretations, it introduces one
/// fresh atom `__wi` per interpretation `Y_i` and emits
///
/// * the disjunction `__w1 | .. | __wn.`,
/// * per `i`, constraints pinning the original atoms to `Y_i` when `__wi`
///   holds,
/// * rules `a :- __wi` realizing every `Y_i` in `C` as an answer set, and
///   constraints killing every interpretation outside `C`,
///
/// while the interpretation `Y_k = Y` of the differing pair `(X, Y)` gets
/// special treatment: if some member of `C` is not a model of the other
/// side's reduct, `Y_k` is realized or killed like the rest; otherwise it
/// is pinned between `X` and `Y` so that exactly one of the two unions
/// accepts `Y_k` as an answer set.
///
/// The size is exponential in the atom count. The result is verified by
/// enumerating the world views of both unions before it is returned.
pub fn construct_witness(
    p1: &Program,
    p2: &Program,
    d: &DifferenceWitness,
    caps: &Caps,
) -> Result<Program> {
    let resolved = resolve_witness(p1, p2, d, caps)?;
    let ResolvedWitness {
        owner,
        other,
        phi,
        pair,
    } = resolved;
    let base = owner.atom_count();
    let count = 1usize << base;
    caps.check_model_atoms(base + count)?;

    let owner_rules = elp::reduct_plain_rules(&owner, phi);
    let other_rules = elp::reduct_plain_rules(&other, phi);
    let owner_models = models_of_rules(base, &owner_rules, caps)?;
    let compatible_set = minimal_compatible_witness(phi, &owner_models, owner.elits())
        .expect("guess is realizable on the owning side");

    // enumerate the compatible set first, then the rest of 2^A
    let mut order: Vec<AtomSet> = compatible_set.clone();
    for bits in 0..count as u64 {
        let i = AtomSet(bits);
        if !compatible_set.contains(&i) {
            order.push(i);
        }
    }
    let m = compatible_set.len();
    let k = order
        .iter()
        .position(|y| *y == pair.y)
        .expect("every interpretation occurs in the enumeration");

    // fresh atoms __w1..__wn; ids shift under the united sorted domain
    let mut atoms: Vec<String> = owner.atom_names().to_vec();
    for i in 1..=count {
        atoms.push(format!("__w{i}"));
    }
    atoms.sort();
    let witness_skeleton = Program::new(atoms.clone(), Vec::new(), Vec::new());
    let old_id = |id: u32| -> u32 {
        witness_skeleton
            .atom_id(owner.atom_name(id))
            .expect("base atom present")
    };
    let fresh: Vec<u32> = (1..=count)
        .map(|i| {
            witness_skeleton
                .atom_id(&format!("__w{i}"))
                .expect("fresh atom present")
        })
        .collect();

    let mut rules: Vec<ElpRule> = Vec::new();
    let plain = |head: AtomSet, pos: AtomSet, neg: AtomSet| ElpRule {
        head,
        pos,
        neg,
        ..ElpRule::default()
    };

    // __w1 | ... | __wn.
    rules.push(plain(
        fresh.iter().copied().collect(),
        AtomSet::EMPTY,
        AtomSet::EMPTY,
    ));
    // pin the original atoms to Y_i whenever __wi holds
    let universe = owner.universe();
    for (i, y) in order.iter().enumerate() {
        let w = AtomSet::singleton(fresh[i]);
        for a in y.iter() {
            rules.push(plain(
                AtomSet::EMPTY,
                w,
                AtomSet::singleton(old_id(a)),
            ));
        }
        for a in universe.minus(*y).iter() {
            rules.push(plain(
                AtomSet::EMPTY,
                w.union(AtomSet::singleton(old_id(a))),
                AtomSet::EMPTY,
            ));
        }
    }

    let realize = |rules: &mut Vec<ElpRule>, i: usize| {
        let w = AtomSet::singleton(fresh[i]);
        for a in order[i].iter() {
            rules.push(plain(AtomSet::singleton(old_id(a)), w, AtomSet::EMPTY));
        }
    };
    let destroy = |rules: &mut Vec<ElpRule>, i: usize| {
        rules.push(plain(
            AtomSet::EMPTY,
            AtomSet::singleton(fresh[i]),
            AtomSet::EMPTY,
        ));
    };

    for i in 0..count {
        if i == k {
            continue;
        }
        if i < m {
            realize(&mut rules, i);
        } else {
            destroy(&mut rules, i);
        }
    }

    let other_has_all = compatible_set
        .iter()
        .all(|y| other_rules.iter().all(|r| crate::asp::satisfies(*y, r)));
    if !other_has_all {
        // some compatible interpretation already separates the reducts
        if k < m {
            realize(&mut rules, k);
        } else {
            destroy(&mut rules, k);
        }
    } else if !other_rules.iter().all(|r| crate::asp::satisfies(pair.y, r)) {
        // Y is a model on the owning side only: realize it
        let w = AtomSet::singleton(fresh[k]);
        for a in pair.y.iter() {
            rules.push(plain(AtomSet::singleton(old_id(a)), w, AtomSet::EMPTY));
        }
    } else {
        // Y models both reducts but X separates the two reducts' reducts:
        // fix X under __wk and collapse Y \ X into a loop
        let w = AtomSet::singleton(fresh[k]);
        for a in pair.x.iter() {
            rules.push(plain(AtomSet::singleton(old_id(a)), w, AtomSet::EMPTY));
        }
        let frontier = pair.y.minus(pair.x);
        for a in frontier.iter() {
            for b in frontier.iter() {
                if a != b {
                    rules.push(plain(
                        AtomSet::singleton(old_id(a)),
                        w.union(AtomSet::singleton(old_id(b))),
                        AtomSet::EMPTY,
                    ));
                }
            }
        }
    }

    let witness = Program::new(atoms, Vec::new(), rules);

    // fail loudly rather than hand back an unverified program
    let u_owner = owner.union(&witness);
    let u_other = other.union(&witness);
    let verdict = ordinary_equiv(&u_owner, &u_other, EquivMode::Wv, caps)?;
    if verdict.equivalent {
        return Err(Error::WitnessVerification(format!(
            "unions share their world views at guess {}",
            phi.text(&owner)
        )));
    }
    Ok(witness)
}
