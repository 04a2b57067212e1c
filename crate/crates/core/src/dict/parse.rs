//! Text format for dictionary files.
//!
//! ```text
//! # comments start with '#'
//! alphabet 2
//! A0 = { 010, 011 }
//! A1 = A0 | { 00, 100 }
//! X  = ext(11) | re(1 0* 1 1*)
//! main = star(A1) \ star(A0)
//! ```
//!
//! `.` concatenates and binds tighter than `|` (union) and `\` (difference),
//! which share one precedence level and associate to the left. `re(..)`
//! takes a regular expression over letters with `|`, juxtaposition, postfix
//! `* + ?`, parentheses and `e` for the empty word.
//! The dictionary is the binding named `main`, or the last binding if there
//! is none.

use std::collections::HashMap;

use crate::dict::expr::{DictionaryExpression, Expr};
use crate::error::{Error, Result};
use crate::words::{parse_letter, Alphabet, Word};

pub fn parse_dictionary(src: &str) -> Result<DictionaryExpression> {
    let mut alphabet = Alphabet::BINARY;
    let mut env: HashMap<String, Expr> = HashMap::new();
    let mut last: Option<String> = None;
    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet") {
            if rest.starts_with(char::is_whitespace) {
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad alphabet size {:?}", rest.trim())))?;
                alphabet = Alphabet::new(n).map_err(|e| Error::parse(lineno, e.to_string()))?;
                continue;
            }
        }
        let (name, body) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(lineno, "expected NAME = expression"))?;
        let name = name.trim();
        if !is_ident(name) {
            return Err(Error::parse(lineno, format!("bad name {name:?}")));
        }
        let mut p = Parser {
            chars: body.chars().collect(),
            pos: 0,
            line: lineno,
            env: &env,
        };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        env.insert(name.to_string(), expr);
        last = Some(name.to_string());
    }
    let key = if env.contains_key("main") {
        "main".to_string()
    } else {
        last.ok_or_else(|| Error::parse(0, "no dictionary defined"))?
    };
    let expr = env.remove(&key).expect("binding exists");
    DictionaryExpression::new(alphabet, expr).map_err(|e| Error::parse(0, e.to_string()))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    env: &'a HashMap<String, Expr>,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::parse(self.line, format!("{msg} at column {}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.concat()?;
        loop {
            if self.eat('|') {
                let rhs = self.concat()?;
                acc = match acc {
                    Expr::Union(mut parts) => {
                        parts.push(rhs);
                        Expr::Union(parts)
                    }
                    other => Expr::Union(vec![other, rhs]),
                };
            } else if self.eat('\\') {
                acc = Expr::diff(acc, self.concat()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn concat(&mut self) -> Result<Expr> {
        let mut parts = vec![self.term()?];
        while self.eat('.') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Concat(parts) })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.is_empty() {
            return Err(self.error("expected a word"));
        }
        text.parse().map_err(|_| self.error(&format!("bad word {text:?}")))
    }

    fn term(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('{') => {
                self.pos += 1;
                let mut words = Vec::new();
                if !self.eat('}') {
                    loop {
                        words.push(self.word()?);
                        if self.eat('}') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::finite(words))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.ident();
                self.skip_ws();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    let e = match name.as_str() {
                        "ext" => Expr::Ext(self.word()?),
                        "star" => Expr::star_words(self.expr()?),
                        "re" => self.regex_alt()?,
                        _ => return Err(self.error(&format!("unknown function {name:?}"))),
                    };
                    self.expect(')')?;
                    Ok(e)
                } else {
                    self.env
                        .get(&name)
                        .cloned()
                        .ok_or_else(|| self.error(&format!("undefined name {name:?}")))
                }
            }
            _ => Err(self.error("expected an expression")),
        }
    }

    fn regex_alt(&mut self) -> Result<Expr> {
        let mut parts = vec![self.regex_cat()?];
        while self.eat('|') {
            parts.push(self.regex_cat()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Union(parts)
        })
    }

    fn regex_cat(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('|') | Some(')') | None => break,
                _ => parts.push(self.regex_postfix()?),
            }
        }
        Ok(match parts.len() {
            0 => Expr::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Expr::Concat(parts),
        })
    }

    fn regex_postfix(&mut self) -> Result<Expr> {
        let mut atom = self.regex_atom()?;
        loop {
            if self.eat('*') {
                atom = Expr::star(atom);
            } else if self.eat('+') {
                atom = Expr::Concat(vec![atom.clone(), Expr::star(atom)]);
            } else if self.eat('?') {
                atom = Expr::Union(vec![atom, Expr::Epsilon]);
            } else {
                return Ok(atom);
            }
        }
    }

    fn regex_atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.regex_alt()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('e') => {
                self.pos += 1;
                Ok(Expr::Epsilon)
            }
            Some(c) => match parse_letter(c) {
                Some(a) => {
                    self.pos += 1;
                    Ok(Expr::Letter(a))
                }
                None => Err(self.error(&format!("unexpected {c:?} in regular expression"))),
            },
            None => Err(self.error("unterminated regular expression")),
        }
    }
}
