//! Text forms of lattice classes, value-group elements and Weyl words.
//!
//! Lattices: `<a|b|c>` with components `P(i,j)`, `Q(j)`, `O`, `M`, `Oc`,
//! `Mc`, `K` (dim 2) or `O1`, `m^i`, `F` (dim 1). A bare `O` fits either
//! dimension; without other hints it means dim 2. Whitespace is ignored
//! and `−` is accepted for a minus sign.
//!
//! Value-group elements are `i` or `(i,j)`; a bare `n` where dim 2 is
//! expected means `(0,n)`.
//!
//! Weyl words: generators `s1`, `s2`, `w1`, `w2` and translations
//! `T(g1;...;gm)`, multiplied left to right with `*`.

use crate::error::{Error, Result};
use crate::gamma::{Full, Gamma, IdealClass, PartialInfinite, Principal};
use crate::lattice::{Config, LatticeClass, RayBase};
use crate::weyl::{weyl_mul, WeylElement};

struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(p, c)| (p, if c == '−' { '-' } else { c }))
            .collect();
        Cursor {
            chars,
            at: 0,
            len: text.chars().count(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |c| c.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|c| c.1)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(x) => self.error(format!("expected '{c}', found '{x}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(x) => self.error(format!("unexpected '{x}'")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.at;
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            self.at = start;
            return self.error("expected an integer");
        }
        let v: i64 = match digits.parse() {
            Ok(v) => v,
            Err(_) => {
                self.at = start;
                return self.error("integer out of range");
            }
        };
        Ok(if neg { -v } else { v })
    }

    /// `i` or `(i,j)`.
    fn gamma(&mut self) -> Result<Gamma> {
        if self.eat('(') {
            let i = self.int()?;
            self.expect(',')?;
            let j = self.int()?;
            self.expect(')')?;
            Ok(Gamma::d2(i, j))
        } else {
            Ok(Gamma::d1(self.int()?))
        }
    }

    fn word(&mut self) -> String {
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '^') {
            w.push(c);
            self.at += 1;
            if c == '^' {
                break;
            }
        }
        w
    }
}

/// A component together with the dimension it forces, if any.
fn component(cur: &mut Cursor) -> Result<(IdealClass, Option<u8>, usize)> {
    let pos = cur.pos();
    let start = cur.at;
    let w = cur.word();
    let parsed = match w.as_str() {
        "P" => {
            cur.expect('(')?;
            let i = cur.int()?;
            cur.expect(',')?;
            let j = cur.int()?;
            cur.expect(')')?;
            (Principal(Gamma::d2(i, j)), Some(2))
        }
        "Q" => {
            cur.expect('(')?;
            let j = cur.int()?;
            cur.expect(')')?;
            (PartialInfinite(j), Some(2))
        }
        "O" => (Principal(Gamma::zero(2)), None),
        "M" => (Principal(Gamma::d2(1, 0)), Some(2)),
        "Oc" => (PartialInfinite(0), Some(2)),
        "Mc" => (PartialInfinite(1), Some(2)),
        "K" => (Full, Some(2)),
        "O1" => (Principal(Gamma::d1(0)), Some(1)),
        "m^" => (Principal(Gamma::d1(cur.int()?)), Some(1)),
        "F" => (Full, Some(1)),
        _ => {
            cur.at = start;
            return cur.error(if w.is_empty() {
                "expected a component".to_string()
            } else {
                format!("unknown component '{w}'")
            });
        }
    };
    Ok((parsed.0, parsed.1, pos))
}

fn to_dim(c: IdealClass, dim: u8) -> IdealClass {
    match c {
        Principal(g) if dim == 1 => Principal(Gamma::d1(g.coords()[0])),
        other => other,
    }
}

/// Parses a lattice class; `dim` overrides the inferred dimension.
pub fn parse_lattice(text: &str, dim: Option<u8>) -> Result<LatticeClass> {
    let mut cur = Cursor::new(text);
    cur.expect('<')?;
    let mut comps = vec![component(&mut cur)?];
    while cur.eat('|') {
        comps.push(component(&mut cur)?);
    }
    cur.expect('>')?;
    cur.finish()?;
    let mut inferred = dim;
    for &(_, d, pos) in &comps {
        if let Some(d) = d {
            match inferred {
                Some(e) if e != d => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("component needs dim {d}, but the class has dim {e}"),
                    })
                }
                _ => inferred = Some(d),
            }
        }
    }
    let dim = inferred.unwrap_or(2);
    let config = Config::new(comps.len(), dim);
    config.check_supported()?;
    LatticeClass::new(comps.into_iter().map(|(c, _, _)| to_dim(c, dim)).collect(), config)
}

fn split_items<T>(text: &str, mut item: impl FnMut(&mut Cursor) -> Result<T>) -> Result<Vec<T>> {
    let mut cur = Cursor::new(text);
    let mut out = vec![item(&mut cur)?];
    while cur.eat(';') {
        out.push(item(&mut cur)?);
    }
    cur.finish()?;
    Ok(out)
}

/// A bare integer `n` in dim 2 stands for `t2^n`.
fn lift(g: Gamma, dim: u8) -> Gamma {
    if dim == 2 && g.dim() == 1 {
        Gamma::d2(0, g.outer())
    } else {
        g
    }
}

fn check_dims(gs: &[Gamma], dim: u8) -> Result<()> {
    match gs.iter().find(|g| g.dim() != dim) {
        Some(g) => Err(Error::Semantic(format!("value {g} does not have dim {dim}"))),
        None => Ok(()),
    }
}

/// `g1;...;gm` with `g = i` or `(i,j)`.
pub fn parse_gammas(text: &str, dim: u8) -> Result<Vec<Gamma>> {
    let gs: Vec<Gamma> = split_items(text, Cursor::gamma)?.into_iter().map(|g| lift(g, dim)).collect();
    check_dims(&gs, dim)?;
    Ok(gs)
}

/// Ray base points: like `parse_gammas`, with `F` or `K` for a full component.
pub fn parse_ray_base(text: &str, dim: u8) -> Result<Vec<RayBase>> {
    let base = split_items(text, |cur| {
        if cur.eat('F') || cur.eat('K') {
            Ok(None)
        } else {
            cur.gamma().map(|g| Some(lift(g, dim)))
        }
    })?;
    check_dims(&base.iter().flatten().copied().collect::<Vec<_>>(), dim)?;
    Ok(base)
}

/// Parses a word in the Weyl generators for the given configuration.
pub fn parse_weyl(text: &str, config: Config) -> Result<WeylElement> {
    let mut cur = Cursor::new(text);
    let mut acc = WeylElement::identity(config)?;
    loop {
        let pos = cur.pos();
        let start = cur.at;
        let w = cur.word();
        let factor = match w.as_str() {
            "T" => {
                cur.expect('(')?;
                let mut gs = vec![lift(cur.gamma()?, config.dim)];
                while cur.eat(';') {
                    gs.push(lift(cur.gamma()?, config.dim));
                }
                cur.expect(')')?;
                check_dims(&gs, config.dim)?;
                WeylElement::translation(config, gs)
            }
            "id" | "e" => WeylElement::identity(config),
            _ if w.len() >= 2 && (w.starts_with('s') || w.starts_with('w')) => match w[1..].parse::<usize>() {
                Ok(i) if w.starts_with('s') => WeylElement::s(config, i),
                Ok(i) if i <= 2 => WeylElement::w(config, i as u8),
                _ => {
                    cur.at = start;
                    return cur.error(format!("unknown generator '{w}'"));
                }
            },
            _ => {
                cur.at = start;
                return cur.error(if w.is_empty() {
                    "expected a generator".to_string()
                } else {
                    format!("unknown generator '{w}'")
                });
            }
        };
        let factor = factor.map_err(|e| Error::Syntax {
            pos,
            msg: e.to_string(),
        })?;
        acc = weyl_mul(&acc, &factor)?;
        if !cur.eat('*') {
            break;
        }
    }
    cur.finish()?;
    Ok(acc)
}
