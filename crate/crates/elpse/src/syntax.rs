//! Core syntax: atoms, epistemic literals, rules in seven-set normal form,
//! and programs with explicit atom and epistemic-literal domains.
//!
//! A program is a triple of an atom domain, an epistemic-literal domain,
//! and a rule list. Domains are inferred from rule occurrences and may be
//! extended by `#atoms` / `#elits` directives; extending a domain never
//! changes the program's world views, so two programs can always be brought
//! onto common domains with [`align_domains`].

use std::fmt;

/// Dense index into a program's atom domain; the id of an atom is the rank
/// of its name in lexicographic order.
pub type AtomId = u32;

/// A set of atoms, one bit per atom id. The canonical order on
/// interpretations is the numeric order of this encoding.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomSet(pub u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn singleton(id: AtomId) -> AtomSet {
        AtomSet(1 << id)
    }

    pub fn insert(&mut self, id: AtomId) {
        self.0 |= 1 << id;
    }

    pub fn contains(self, id: AtomId) -> bool {
        self.0 & (1 << id) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn inter(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn minus(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: AtomSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: AtomSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Member ids in ascending order.
    pub fn iter(self) -> impl Iterator<Item = AtomId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let id = bits.trailing_zeros();
                bits &= bits - 1;
                Some(id)
            }
        })
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AtomSet({:b})", self.0)
    }
}

impl FromIterator<AtomId> for AtomSet {
    fn from_iter<I: IntoIterator<Item = AtomId>>(iter: I) -> Self {
        let mut s = AtomSet::EMPTY;
        for id in iter {
            s.insert(id);
        }
        s
    }
}

/// An epistemic literal `not l` where `l` is the atom itself
/// (`negated == false`) or its default negation (`negated == true`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elit {
    pub atom: AtomId,
    pub negated: bool,
}

impl Elit {
    pub fn not(atom: AtomId) -> Elit {
        Elit {
            atom,
            negated: false,
        }
    }

    pub fn not_neg(atom: AtomId) -> Elit {
        Elit {
            atom,
            negated: true,
        }
    }
}

/// An ELP rule in seven-set normal form:
///
/// ```text
/// head <- pos, ~neg, not unknown, not ~possible, ~not known, ~not ~impossible
/// ```
///
/// The epistemic body parts read naturally in modal terms: `not d` holds
/// when `d` is not provably true, `not ~e` when `e` is possible, `~not f`
/// when `f` is provably true, and `~not ~g` when `g` is provably false.
/// `dneg` carries double default negation `~ ~` for rules embedded from
/// plain programs; rules written in epistemic syntax keep it empty.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct ElpRule {
    pub head: AtomSet,
    pub pos: AtomSet,
    pub neg: AtomSet,
    pub dneg: AtomSet,
    pub unknown: AtomSet,
    pub possible: AtomSet,
    pub known: AtomSet,
    pub impossible: AtomSet,
}

impl ElpRule {
    /// All atoms occurring anywhere in the rule.
    pub fn atoms(&self) -> AtomSet {
        self.head
            .union(self.pos)
            .union(self.neg)
            .union(self.dneg)
            .union(self.unknown)
            .union(self.possible)
            .union(self.known)
            .union(self.impossible)
    }

    /// True when no epistemic negation occurs in the rule.
    pub fn is_plain(&self) -> bool {
        self.unknown.is_empty()
            && self.possible.is_empty()
            && self.known.is_empty()
            && self.impossible.is_empty()
    }

    /// Epistemic literals occurring in the rule.
    pub fn elits(&self) -> impl Iterator<Item = Elit> + '_ {
        self.unknown
            .iter()
            .map(Elit::not)
            .chain(self.possible.iter().map(Elit::not_neg))
            .chain(self.known.iter().map(Elit::not))
            .chain(self.impossible.iter().map(Elit::not_neg))
    }

    /// Plain projection of an epistemic-free rule.
    pub fn as_plain(&self) -> Option<PlainRule> {
        if self.is_plain() {
            Some(PlainRule {
                head: self.head,
                pos: self.pos,
                neg: self.neg,
                dneg: self.dneg,
            })
        } else {
            None
        }
    }
}

impl From<PlainRule> for ElpRule {
    fn from(r: PlainRule) -> ElpRule {
        ElpRule {
            head: r.head,
            pos: r.pos,
            neg: r.neg,
            dneg: r.dneg,
            ..ElpRule::default()
        }
    }
}

/// A plain rule `head <- pos, ~neg, ~ ~dneg`. An empty head is a constraint.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct PlainRule {
    pub head: AtomSet,
    pub pos: AtomSet,
    pub neg: AtomSet,
    pub dneg: AtomSet,
}

impl PlainRule {
    pub fn atoms(&self) -> AtomSet {
        self.head.union(self.pos).union(self.neg).union(self.dneg)
    }
}

/// A ground epistemic logic program: atom domain, epistemic-literal domain,
/// and rules. Plain logic programs are the special case where no rule
/// mentions an epistemic literal.
///
/// Programs are immutable after construction; every operation takes shared
/// references and returns fresh values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Program {
    atoms: Vec<String>,
    elits: Vec<Elit>,
    rules: Vec<ElpRule>,
}

impl Program {
    /// Builds a program from sorted unique atom names, extra declared
    /// epistemic literals, and rules. Literals occurring in rules are added
    /// to the domain automatically.
    ///
    /// Panics if the atom list is not sorted and unique or a rule refers to
    /// an atom outside the domain; callers (parser, generators) establish
    /// these invariants.
    pub fn new(atoms: Vec<String>, declared_elits: Vec<Elit>, rules: Vec<ElpRule>) -> Program {
        assert!(
            atoms.windows(2).all(|w| w[0] < w[1]),
            "atom names must be sorted and unique"
        );
        assert!(atoms.len() <= 64, "atom domain exceeds supported width");
        let universe: AtomSet = (0..atoms.len() as u32).collect();
        let mut elits = declared_elits;
        for r in &rules {
            assert!(
                r.atoms().is_subset(universe),
                "rule mentions an atom outside the domain"
            );
            elits.extend(r.elits());
        }
        for e in &elits {
            assert!(
                universe.contains(e.atom),
                "epistemic literal over an atom outside the domain"
            );
        }
        elits.sort();
        elits.dedup();
        Program {
            atoms,
            elits,
            rules,
        }
    }

    pub fn empty() -> Program {
        Program {
            atoms: Vec::new(),
            elits: Vec::new(),
            rules: Vec::new(),
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_name(&self, id: AtomId) -> &str {
        &self.atoms[id as usize]
    }

    pub fn atom_id(&self, name: &str) -> Option<AtomId> {
        self.atoms
            .binary_search_by(|a| a.as_str().cmp(name))
            .ok()
            .map(|i| i as AtomId)
    }

    pub fn elits(&self) -> &[Elit] {
        &self.elits
    }

    pub fn elit_index(&self, e: Elit) -> Option<usize> {
        self.elits.binary_search(&e).ok()
    }

    pub fn rules(&self) -> &[ElpRule] {
        &self.rules
    }

    /// True iff no rule mentions an epistemic literal. Double default
    /// negation is plain, so it does not disqualify a program.
    pub fn is_plain(&self) -> bool {
        self.rules.iter().all(ElpRule::is_plain)
    }

    /// Plain projections of all rules; fails when epistemic literals occur.
    pub fn plain_rules(&self) -> crate::Result<Vec<PlainRule>> {
        self.rules
            .iter()
            .map(|r| r.as_plain().ok_or(crate::Error::NotPlain))
            .collect()
    }

    /// The full set over the atom domain, `{0, .., n-1}` as a mask.
    pub fn universe(&self) -> AtomSet {
        (0..self.atoms.len() as u32).collect()
    }

    /// Remaps this program onto superset domains. `atoms` must be sorted,
    /// unique, and contain every atom of `self`.
    fn remap(&self, atoms: &[String], extra_elits: &[Elit]) -> Program {
        let map: Vec<AtomId> = self
            .atoms
            .iter()
            .map(|name| {
                atoms
                    .binary_search(name)
                    .expect("remap target must contain all atoms") as AtomId
            })
            .collect();
        let remap_set = |s: AtomSet| s.iter().map(|id| map[id as usize]).collect::<AtomSet>();
        let rules = self
            .rules
            .iter()
            .map(|r| ElpRule {
                head: remap_set(r.head),
                pos: remap_set(r.pos),
                neg: remap_set(r.neg),
                dneg: remap_set(r.dneg),
                unknown: remap_set(r.unknown),
                possible: remap_set(r.possible),
                known: remap_set(r.known),
                impossible: remap_set(r.impossible),
            })
            .collect();
        let mut elits: Vec<Elit> = self
            .elits
            .iter()
            .map(|e| Elit {
                atom: map[e.atom as usize],
                negated: e.negated,
            })
            .collect();
        elits.extend_from_slice(extra_elits);
        Program::new(atoms.to_vec(), elits, rules)
    }

    /// Union of two programs: domains are united, rules concatenated with
    /// exact duplicates dropped (rule lists denote sets).
    pub fn union(&self, other: &Program) -> Program {
        let (a, b) = align_domains(self, other);
        let mut rules = a.rules;
        for r in b.rules {
            if !rules.contains(&r) {
                rules.push(r);
            }
        }
        Program::new(a.atoms, a.elits, rules)
    }

    /// Renders one rule in canonical concrete syntax.
    pub fn rule_text(&self, idx: usize) -> String {
        let r = &self.rules[idx];
        let name = |id: AtomId| self.atom_name(id).to_string();
        let mut parts: Vec<String> = Vec::new();
        for a in r.pos.iter() {
            parts.push(name(a));
        }
        for a in r.neg.iter() {
            parts.push(format!("~ {}", name(a)));
        }
        for a in r.dneg.iter() {
            parts.push(format!("~ ~ {}", name(a)));
        }
        for a in r.unknown.iter() {
            parts.push(format!("not {}", name(a)));
        }
        for a in r.possible.iter() {
            parts.push(format!("not ~ {}", name(a)));
        }
        for a in r.known.iter() {
            parts.push(format!("~ not {}", name(a)));
        }
        for a in r.impossible.iter() {
            parts.push(format!("~ not ~ {}", name(a)));
        }
        let head = r
            .head
            .iter()
            .map(name)
            .collect::<Vec<_>>()
            .join(" | ");
        match (head.is_empty(), parts.is_empty()) {
            (true, true) => ".".to_string(),
            (false, true) => format!("{head}."),
            (true, false) => format!(":- {}.", parts.join(", ")),
            (false, false) => format!("{head} :- {}.", parts.join(", ")),
        }
    }

    /// Renders a set of atoms as `{a, b}`.
    pub fn set_text(&self, s: AtomSet) -> String {
        let names: Vec<&str> = s.iter().map(|id| self.atom_name(id)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Renders one epistemic literal as `not a` or `not ~ a`.
    pub fn elit_text(&self, e: Elit) -> String {
        if e.negated {
            format!("not ~ {}", self.atom_name(e.atom))
        } else {
            format!("not {}", self.atom_name(e.atom))
        }
    }
}

/// Canonical rendering: domain directives first, then rules in stored
/// order; atoms within each set appear in lexicographic order. Parsing the
/// output reproduces the program exactly.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.atoms.is_empty() {
            writeln!(f, "#atoms {}.", self.atoms.join(", "))?;
        }
        if !self.elits.is_empty() {
            let elits: Vec<String> = self.elits.iter().map(|e| self.elit_text(*e)).collect();
            writeln!(f, "#elits {}.", elits.join(", "))?;
        }
        for i in 0..self.rules.len() {
            writeln!(f, "{}", self.rule_text(i))?;
        }
        Ok(())
    }
}

/// Extends both programs to their united atom and epistemic-literal
/// domains. Rules are unchanged, and no world view of either side changes,
/// so equivalence checks may assume common domains.
pub fn align_domains(p1: &Program, p2: &Program) -> (Program, Program) {
    let mut atoms: Vec<String> = p1.atoms.iter().chain(p2.atoms.iter()).cloned().collect();
    atoms.sort();
    atoms.dedup();
    let a1 = p1.remap(&atoms, &[]);
    let a2 = p2.remap(&atoms, &[]);
    // elit domains must agree as well: inject each side's literals into the other
    let e1 = a1.elits.clone();
    let e2 = a2.elits.clone();
    let b1 = a1.remap(&atoms, &e2);
    let b2 = a2.remap(&atoms, &e1);
    (b1, b2)
}

/// True iff the program is plain, i.e. mentions no epistemic literal in
/// any rule.
pub fn is_plain(p: &Program) -> bool {
    p.is_plain()
}
