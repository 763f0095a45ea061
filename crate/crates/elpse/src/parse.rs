//! Lexer and recursive-descent parser for the `.elp` concrete syntax.
//!
//! ```text
//! program   := { directive | rule }
//! directive := "#atoms" ident { "," ident } "." | "#elits" elit { "," elit } "."
//! rule      := [ head ] [ ":-" body ] "."
//! head      := ident { "|" ident }
//! body      := belem { "," belem }
//! belem     := ident | "~" ident | "~" "~" ident          (plain mode only, last form)
//!            | "not" ident | "not" "~" ident
//!            | "~" "not" ident | "~" "not" "~" ident
//! elit      := "not" ident | "not" "~" ident
//! ident     := [a-z][A-Za-z0-9_']*
//! comment   := "%" to end of line
//! ```
//!
//! Epistemic mode is the default. Plain mode additionally accepts default
//! negation chains of any depth (collapsed modulo two) and rejects `not`.
//! Identifiers with the reserved `__w` prefix are refused unless the caller
//! opts in; witness programs use that prefix for their fresh atoms.

use crate::syntax::{Elit, ElpRule, Program};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Elp,
    Plain,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub mode: ParseMode,
    /// Accept atoms of the form `__w<digits>`; used when reading back
    /// generated witness programs.
    pub allow_reserved: bool,
}

/// Parses a program in epistemic mode, rejecting reserved-prefix atoms.
pub fn parse_program(text: &str) -> Result<Program> {
    parse_program_with(text, ParseOptions::default())
}

pub fn parse_program_with(text: &str, opts: ParseOptions) -> Result<Program> {
    let tokens = lex(text)?;
    let raw = RawParser {
        tokens,
        pos: 0,
        mode: opts.mode,
    }
    .parse()?;
    build_program(raw, opts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    Tilde,
    Pipe,
    Comma,
    Dot,
    ColonDash,
    DirAtoms,
    DirElits,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax_err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        line,
        col,
        msg: msg.into(),
    })
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => bump(&mut i, &mut line, &mut col),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    bump(&mut i, &mut line, &mut col);
                }
            }
            '~' => {
                out.push(Token {
                    tok: Tok::Tilde,
                    line: tl,
                    col: tc,
                });
                bump(&mut i, &mut line, &mut col);
            }
            '|' => {
                out.push(Token {
                    tok: Tok::Pipe,
                    line: tl,
                    col: tc,
                });
                bump(&mut i, &mut line, &mut col);
            }
            ',' => {
                out.push(Token {
                    tok: Tok::Comma,
                    line: tl,
                    col: tc,
                });
                bump(&mut i, &mut line, &mut col);
            }
            '.' => {
                out.push(Token {
                    tok: Tok::Dot,
                    line: tl,
                    col: tc,
                });
                bump(&mut i, &mut line, &mut col);
            }
            ':' => {
                bump(&mut i, &mut line, &mut col);
                if i < chars.len() && chars[i] == '-' {
                    bump(&mut i, &mut line, &mut col);
                    out.push(Token {
                        tok: Tok::ColonDash,
                        line: tl,
                        col: tc,
                    });
                } else {
                    return syntax_err(tl, tc, "expected `:-`");
                }
            }
            '#' => {
                bump(&mut i, &mut line, &mut col);
                let start = i;
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    bump(&mut i, &mut line, &mut col);
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "atoms" => Tok::DirAtoms,
                    "elits" => Tok::DirElits,
                    _ => return syntax_err(tl, tc, format!("unknown directive `#{word}`")),
                };
                out.push(Token {
                    tok,
                    line: tl,
                    col: tc,
                });
            }
            c if c.is_ascii_lowercase() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    bump(&mut i, &mut line, &mut col);
                }
                let word: String = chars[start..i].iter().collect();
                let tok = if word == "not" {
                    Tok::Not
                } else {
                    Tok::Ident(word)
                };
                out.push(Token {
                    tok,
                    line: tl,
                    col: tc,
                });
            }
            other => {
                return syntax_err(tl, tc, format!("unexpected character `{other}`"));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// One parsed body element before slot assignment: `tildes` default
/// negations, then optionally `not`, then optionally one inner `~`.
#[derive(Debug, Clone)]
struct RawElem {
    tildes: usize,
    epistemic: bool,
    inner_neg: bool,
    atom: String,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone)]
struct RawRule {
    head: Vec<(String, usize, usize)>,
    body: Vec<RawElem>,
}

#[derive(Debug, Default)]
struct RawProgram {
    atom_directives: Vec<(String, usize, usize)>,
    elit_directives: Vec<(String, bool, usize, usize)>,
    rules: Vec<RawRule>,
}

struct RawParser {
    tokens: Vec<Token>,
    pos: usize,
    mode: ParseMode,
}

impl RawParser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Ident(name) => Ok((name, t.line, t.col)),
            _ => syntax_err(t.line, t.col, format!("expected {what}")),
        }
    }

    fn expect_dot(&mut self) -> Result<()> {
        let t = self.next();
        if t.tok == Tok::Dot {
            Ok(())
        } else {
            syntax_err(t.line, t.col, "expected `.`")
        }
    }

    fn parse(mut self) -> Result<RawProgram> {
        let mut raw = RawProgram::default();
        loop {
            match self.peek().tok {
                Tok::Eof => return Ok(raw),
                Tok::DirAtoms => {
                    self.next();
                    loop {
                        raw.atom_directives.push(self.expect_ident("atom name")?);
                        match self.next() {
                            Token { tok: Tok::Comma, .. } => continue,
                            Token { tok: Tok::Dot, .. } => break,
                            t => return syntax_err(t.line, t.col, "expected `,` or `.`"),
                        }
                    }
                }
                Tok::DirElits => {
                    self.next();
                    loop {
                        let t = self.next();
                        if t.tok != Tok::Not {
                            return syntax_err(t.line, t.col, "expected `not`");
                        }
                        let negated = if self.peek().tok == Tok::Tilde {
                            self.next();
                            true
                        } else {
                            false
                        };
                        let (name, l, c) = self.expect_ident("atom name")?;
                        raw.elit_directives.push((name, negated, l, c));
                        match self.next() {
                            Token { tok: Tok::Comma, .. } => continue,
                            Token { tok: Tok::Dot, .. } => break,
                            t => return syntax_err(t.line, t.col, "expected `,` or `.`"),
                        }
                    }
                }
                _ => raw.rules.push(self.parse_rule()?),
            }
        }
    }

    fn parse_rule(&mut self) -> Result<RawRule> {
        let mut head = Vec::new();
        if let Tok::Ident(_) = self.peek().tok {
            loop {
                head.push(self.expect_ident("atom name")?);
                if self.peek().tok == Tok::Pipe {
                    self.next();
                } else {
                    break;
                }
            }
        }
        let mut body = Vec::new();
        if self.peek().tok == Tok::ColonDash {
            self.next();
            loop {
                body.push(self.parse_belem()?);
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect_dot()?;
        Ok(RawRule { head, body })
    }

    fn parse_belem(&mut self) -> Result<RawElem> {
        let start = self.peek().clone();
        let mut tildes = 0;
        while self.peek().tok == Tok::Tilde {
            self.next();
            tildes += 1;
        }
        let epistemic = if self.peek().tok == Tok::Not {
            if self.mode == ParseMode::Plain {
                let t = self.peek();
                return syntax_err(
                    t.line,
                    t.col,
                    "epistemic negation `not` is not allowed in plain mode",
                );
            }
            self.next();
            true
        } else {
            false
        };
        let inner_neg = if epistemic && self.peek().tok == Tok::Tilde {
            self.next();
            true
        } else {
            false
        };
        let (atom, line, col) = self.expect_ident("atom name")?;
        // Epistemic mode has no slot for chains of two or more `~`.
        if self.mode == ParseMode::Elp && tildes >= 2 {
            return Err(Error::DoubleDefaultNegation {
                line: start.line,
                col: start.col,
            });
        }
        if epistemic && tildes >= 2 {
            return Err(Error::DoubleDefaultNegation {
                line: start.line,
                col: start.col,
            });
        }
        Ok(RawElem {
            tildes,
            epistemic,
            inner_neg,
            atom,
            line,
            col,
        })
    }
}

/// Slot of one normalized body element in the seven-set rule form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Pos,
    Neg,
    Dneg,
    Unknown,
    Possible,
    Known,
    Impossible,
}

/// Maps negation shape to a rule slot; plain chains of depth three or more
/// collapse modulo two.
fn classify(tildes: usize, epistemic: bool, inner_neg: bool) -> Slot {
    match (tildes, epistemic, inner_neg) {
        (0, false, _) => Slot::Pos,
        (1, false, _) => Slot::Neg,
        (n, false, _) => {
            if n % 2 == 1 {
                Slot::Neg
            } else {
                Slot::Dneg
            }
        }
        (0, true, false) => Slot::Unknown,
        (0, true, true) => Slot::Possible,
        (1, true, false) => Slot::Known,
        (1, true, true) => Slot::Impossible,
        _ => unreachable!("deep chains in front of `not` are rejected while parsing"),
    }
}

fn check_name(name: &str, line: usize, col: usize, opts: ParseOptions) -> Result<()> {
    if !name.starts_with('_') {
        return Ok(());
    }
    let reserved_form = name
        .strip_prefix("__w")
        .map(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
        .unwrap_or(false);
    if reserved_form && opts.allow_reserved {
        Ok(())
    } else if reserved_form || name.starts_with("__w") {
        Err(Error::ReservedAtom {
            line,
            col,
            name: name.to_string(),
        })
    } else {
        syntax_err(line, col, "identifiers must start with a lowercase letter")
    }
}

fn build_program(raw: RawProgram, opts: ParseOptions) -> Result<Program> {
    let mut names: Vec<(String, usize, usize)> = Vec::new();
    for r in &raw.rules {
        names.extend(r.head.iter().cloned());
        names.extend(r.body.iter().map(|e| (e.atom.clone(), e.line, e.col)));
    }
    names.extend(raw.atom_directives.iter().cloned());
    for (name, line, col) in &names {
        check_name(name, *line, *col, opts)?;
    }
    let mut atoms: Vec<String> = names.into_iter().map(|(n, _, _)| n).collect();
    atoms.sort();
    atoms.dedup();
    if atoms.len() > 64 {
        return Err(Error::ResourceLimit {
            what: "atom domain width",
            need: atoms.len() as u64,
            cap: 64,
        });
    }

    let atom_id = |name: &str| atoms.binary_search_by(|a| a.as_str().cmp(name)).ok();

    let mut declared = Vec::new();
    for (name, negated, line, col) in &raw.elit_directives {
        check_name(name, *line, *col, opts)?;
        let Some(id) = atom_id(name) else {
            return Err(Error::UndeclaredElitAtom {
                line: *line,
                col: *col,
                name: name.clone(),
            });
        };
        declared.push(Elit {
            atom: id as u32,
            negated: *negated,
        });
    }

    let mut rules = Vec::new();
    for r in &raw.rules {
        let mut rule = ElpRule::default();
        for (name, _, _) in &r.head {
            rule.head.insert(atom_id(name).unwrap() as u32);
        }
        for e in &r.body {
            let id = atom_id(&e.atom).unwrap() as u32;
            match classify(e.tildes, e.epistemic, e.inner_neg) {
                Slot::Pos => rule.pos.insert(id),
                Slot::Neg => rule.neg.insert(id),
                Slot::Dneg => rule.dneg.insert(id),
                Slot::Unknown => rule.unknown.insert(id),
                Slot::Possible => rule.possible.insert(id),
                Slot::Known => rule.known.insert(id),
                Slot::Impossible => rule.impossible.insert(id),
            }
        }
        rules.push(rule);
    }

    Ok(Program::new(atoms, declared, rules))
}
