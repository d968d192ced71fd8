//! Named semigroup constructors, the semigroup spec grammar and the Cayley file format.
//!
//! Grammar: `IDENT(":" INT)* | "prod(" spec ("," spec)+ ")" | "file:" path`.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, DEFAULT_ORDER_CAP};

/// Label of the absorbing overflow element of `freetrunc`.
pub const OVERFLOW_LABEL: &str = "bot";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupSpec {
    Named { name: String, args: Vec<usize> },
    Product(Vec<SemigroupSpec>),
    File(String),
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupSpec::Named { name, args } => {
                write!(f, "{name}")?;
                for a in args {
                    write!(f, ":{a}")?;
                }
                Ok(())
            }
            SemigroupSpec::Product(parts) => {
                write!(f, "prod(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            SemigroupSpec::File(p) => write!(f, "file:{p}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn spec(&mut self, nested: bool) -> Result<SemigroupSpec> {
        if self.rest().starts_with("prod(") {
            self.pos += 5;
            let mut parts = vec![self.spec(true)?];
            loop {
                match self.rest().chars().next() {
                    Some(',') => {
                        self.pos += 1;
                        parts.push(self.spec(true)?);
                    }
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
            if parts.len() < 2 {
                return Err(self.err("prod needs at least two factors"));
            }
            return Ok(SemigroupSpec::Product(parts));
        }
        if self.rest().starts_with("file:") {
            self.pos += 5;
            let rest = self.rest();
            let end = if nested {
                rest.find([',', ')']).unwrap_or(rest.len())
            } else {
                rest.len()
            };
            if end == 0 {
                return Err(self.err("empty file path"));
            }
            self.pos += end;
            return Ok(SemigroupSpec::File(rest[..end].to_string()));
        }
        let rest = self.rest();
        let end = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        let name = &rest[..end];
        if name.is_empty() || !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(self.err("expected identifier"));
        }
        self.pos += end;
        let mut args = Vec::new();
        while self.rest().starts_with(':') {
            self.pos += 1;
            let rest = self.rest();
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let n = rest[..end].parse().map_err(|_| self.err("expected integer"))?;
            self.pos += end;
            args.push(n);
        }
        Ok(SemigroupSpec::Named { name: name.to_string(), args })
    }
}

impl SemigroupSpec {
    pub fn parse(text: &str) -> Result<SemigroupSpec> {
        let text = text.trim();
        let mut p = Parser { src: text, pos: 0 };
        let spec = p.spec(false)?;
        if p.pos != text.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Semigroup> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<Semigroup> {
        match self {
            SemigroupSpec::Named { name, args } => named(name, args, cap),
            SemigroupSpec::Product(parts) => {
                let factors = parts.iter().map(|p| p.build_capped(cap)).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&Semigroup> = factors.iter().collect();
                Semigroup::direct_product(&refs, cap)
            }
            SemigroupSpec::File(path) => {
                let sg = read_cayley_file(Path::new(path))?;
                if sg.order() > cap {
                    return Err(Error::Oversize { order: sg.order(), cap });
                }
                Ok(sg)
            }
        }
    }
}

/// Parses and builds a semigroup spec with the default order cap.
pub fn make_catalog(spec: &str) -> Result<Semigroup> {
    SemigroupSpec::parse(spec)?.build()
}

fn expect_args<const N: usize>(name: &str, args: &[usize]) -> Result<[usize; N]> {
    args.try_into()
        .map_err(|_| Error::Parse(format!("`{name}` takes {N} integer argument(s), got {}", args.len())))
}

fn positive(name: &str, n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::Parse(format!("`{name}` needs a positive order")))
    } else {
        Ok(n)
    }
}

fn capped(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::Oversize { order, cap })
    } else {
        Ok(())
    }
}

fn build(labels: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Semigroup> {
    let n = labels.len();
    let table = (0..n).map(|i| (0..n).map(|j| op(i, j)).collect()).collect();
    Semigroup::from_cayley(labels, table)
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn named(name: &str, args: &[usize], cap: usize) -> Result<Semigroup> {
    match name {
        "zadd" => {
            let [n] = expect_args(name, args)?;
            capped(positive(name, n)?, cap)?;
            build(numbered("", n), |a, b| (a + b) % n)
        }
        "zmul" => {
            let [n] = expect_args(name, args)?;
            capped(positive(name, n)?, cap)?;
            build(numbered("", n), |a, b| (a * b) % n)
        }
        "leftzero" => {
            let [n] = expect_args(name, args)?;
            capped(positive(name, n)?, cap)?;
            build(numbered("x", n), |a, _| a)
        }
        "rightzero" => {
            let [n] = expect_args(name, args)?;
            capped(positive(name, n)?, cap)?;
            build(numbered("y", n), |_, b| b)
        }
        "lz1" => {
            // left-zero band x0..x{n-1} with an identity `e` appended last
            let [n] = expect_args(name, args)?;
            capped(positive(name, n)? + 1, cap)?;
            let mut labels = numbered("x", n);
            labels.push("e".into());
            build(labels, |a, b| if a == n { b } else { a })
        }
        "freetrunc" => {
            let [letters, max_len] = expect_args(name, args)?;
            freetrunc(letters, max_len, cap)
        }
        "bool2x2" => {
            expect_args::<0>(name, args)?;
            bool2x2()
        }
        _ => Err(Error::Parse(format!("unknown semigroup `{name}`"))),
    }
}

/// Words of length 1..=max_len over `letters` letters under concatenation,
/// with an absorbing element for words that would be longer.
fn freetrunc(letters: usize, max_len: usize, cap: usize) -> Result<Semigroup> {
    if letters == 0 || letters > 26 || max_len == 0 {
        return Err(Error::Parse("freetrunc needs 1..=26 letters and a positive length".into()));
    }
    let mut order: usize = 1;
    let mut layer: usize = 1;
    for _ in 0..max_len {
        layer = layer.checked_mul(letters).ok_or(Error::Oversize { order: usize::MAX, cap })?;
        order = order.checked_add(layer).ok_or(Error::Oversize { order: usize::MAX, cap })?;
    }
    capped(order, cap)?;
    let mut words: Vec<Vec<u8>> = Vec::with_capacity(order);
    let mut frontier: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                (0..letters as u8).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let bot = words.len();
    let index: std::collections::HashMap<Vec<u8>, usize> =
        words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut labels: Vec<String> =
        words.iter().map(|w| w.iter().map(|&c| (b'a' + c) as char).collect()).collect();
    labels.push(OVERFLOW_LABEL.into());
    build(labels, |a, b| {
        if a == bot || b == bot || words[a].len() + words[b].len() > max_len {
            return bot;
        }
        let mut w = words[a].clone();
        w.extend_from_slice(&words[b]);
        index[&w]
    })
}

/// 2x2 Boolean matrices under multiplication; label `abcd` is the row-major entry list.
fn bool2x2() -> Result<Semigroup> {
    let entries = |m: usize| [m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1];
    let labels = (0..16)
        .map(|m| entries(m).iter().map(|b| b.to_string()).collect())
        .collect();
    build(labels, |x, y| {
        let [a, b, c, d] = entries(x);
        let [e, f, g, h] = entries(y);
        let r = [(a & e) | (b & g), (a & f) | (b & h), (c & e) | (d & g), (c & f) | (d & h)];
        r.iter().fold(0, |acc, &v| acc << 1 | v)
    })
}

/// Parses the Cayley text format: the order, then the labels, then one row of labels per element.
pub fn parse_cayley(text: &str) -> Result<Semigroup> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Cayley file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the order".into()))?;
    let labels: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::Parse("missing label line".into()))?
        .split_whitespace()
        .map(String::from)
        .collect();
    if labels.len() != n {
        return Err(Error::Parse(format!("expected {n} labels, found {}", labels.len())));
    }
    let lookup = |l: &str| {
        labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };
    let mut table = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing table row {r}")))?;
        let row = line.split_whitespace().map(lookup).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("row {r} has {} entries, expected {n}", row.len())));
        }
        table.push(row);
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after table".into()));
    }
    Semigroup::from_cayley(labels, table)
}

pub fn read_cayley_file(path: &Path) -> Result<Semigroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::File { path: path.display().to_string(), message: e.to_string() })?;
    parse_cayley(&text)
}

pub fn write_cayley(s: &Semigroup) -> String {
    let mut out = format!("{}\n{}\n", s.order(), s.labels().join(" "));
    for a in s.elements() {
        let row: Vec<&str> = s.row(a).map(|x| s.label(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
