//! Coefficient config files. The grammar is described in `docs/config.md`.

use std::fmt;
use std::str::FromStr;

use continuants::continuant::PeriodicAlpha;
use continuants::ring::{LaurentPoly, ModInt61, Rational, Ring};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Rational,
    Laurent,
    ModInt,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Rational => "rational",
            RingKind::Laurent => "laurent",
            RingKind::ModInt => "modint",
        }
    }
}

impl FromStr for RingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rational" => Ok(RingKind::Rational),
            "laurent" => Ok(RingKind::Laurent),
            "modint" => Ok(RingKind::ModInt),
            _ => Err(format!("unknown ring {s:?} (expected rational, laurent or modint)")),
        }
    }
}

/// Where a config error was found. `line` is 1-based; `None` means the
/// problem is a missing key, detected at end of input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{}, field `{field}`: {message}", match .line { Some(n) => format!("line {n}"), None => "end of input".to_string() })]
pub struct ConfigError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

/// A validated config. Elements are kept as their canonical printed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaConfig {
    pub ring: RingKind,
    pub l: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub p: i64,
}

/// A config turned into coefficients of its declared ring.
#[derive(Clone, Debug)]
pub enum AnyAlpha {
    Rational(PeriodicAlpha<Rational>),
    Laurent(PeriodicAlpha<LaurentPoly>),
    ModInt(PeriodicAlpha<ModInt61>),
}

const KEYS: [&str; 6] = ["ring", "l", "a", "b", "c", "p"];

pub fn parse_config(text: &str) -> Result<AlphaConfig, ConfigError> {
    let mut seen: [Option<(usize, String)>; 6] = Default::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |field: &str, message: String| ConfigError { line: Some(line_no), field: field.into(), message };
        let (key, value) = line.split_once('=').ok_or_else(|| err("?", format!("expected `key = value`, got {line:?}")))?;
        let key = key.trim();
        let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| err(key, "unknown key".into()))?;
        if let Some((first, _)) = &seen[slot] {
            return Err(err(key, format!("duplicate key (first set on line {first})")));
        }
        seen[slot] = Some((line_no, value.trim().to_string()));
    }

    let take = |i: usize| -> Result<(usize, String), ConfigError> {
        seen[i].clone().ok_or_else(|| ConfigError {
            line: None,
            field: KEYS[i].into(),
            message: "missing required key".into(),
        })
    };
    let at = |line: usize, field: &str, message: String| ConfigError { line: Some(line), field: field.into(), message };

    let (ring_line, ring) = take(0)?;
    let ring: RingKind = ring.parse().map_err(|m| at(ring_line, "ring", m))?;
    let (l_line, l) = take(1)?;
    let l: usize = l.parse().map_err(|_| at(l_line, "l", format!("expected a positive integer, got {l:?}")))?;
    if l == 0 {
        return Err(at(l_line, "l", "period must be at least 1".into()));
    }
    let p = match &seen[5] {
        Some((line, v)) => v.parse().map_err(|_| at(*line, "p", format!("expected an integer, got {v:?}")))?,
        None => 1,
    };

    let mut arrays = Vec::new();
    for (slot, name) in [(2, "a"), (3, "b"), (4, "c")] {
        let (line, value) = take(slot)?;
        let items = split_array(&value).map_err(|m| at(line, name, m))?;
        if items.len() != l {
            return Err(at(line, name, format!("length mismatch: expected {l} elements, got {}", items.len())));
        }
        let canonical = items
            .iter()
            .enumerate()
            .map(|(i, s)| canonical_element(ring, s).map_err(|m| at(line, name, format!("element {}: {m}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        arrays.push(canonical);
    }
    let c = arrays.pop().unwrap();
    let b = arrays.pop().unwrap();
    let a = arrays.pop().unwrap();
    Ok(AlphaConfig { ring, l, a, b, c, p })
}

/// Splits `[x, y, z]` at top-level commas.
fn split_array(value: &str) -> Result<Vec<String>, String> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| format!("expected `[...]`, got {value:?}"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(inner[start..i].trim().to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(inner[start..].trim().to_string());
    if let Some(pos) = items.iter().position(|s| s.is_empty()) {
        return Err(format!("element {} is empty", pos + 1));
    }
    Ok(items)
}

fn canonical_element(ring: RingKind, s: &str) -> Result<String, String> {
    fn canon<R: FromStr + fmt::Display>(s: &str) -> Result<String, String>
    where
        R::Err: fmt::Display,
    {
        s.parse::<R>().map(|x| x.to_string()).map_err(|e| format!("cannot parse {s:?}: {e}"))
    }
    match ring {
        RingKind::Rational => canon::<Rational>(s),
        RingKind::Laurent => canon::<LaurentPoly>(s),
        RingKind::ModInt => canon::<ModInt61>(s),
    }
}

fn build<R: Ring + FromStr>(cfg: &AlphaConfig) -> PeriodicAlpha<R>
where
    R::Err: fmt::Debug,
{
    let conv = |v: &[String]| v.iter().map(|s| s.parse().expect("validated")).collect();
    PeriodicAlpha::new(conv(&cfg.a), conv(&cfg.b), conv(&cfg.c), cfg.p).expect("validated lengths")
}

impl AlphaConfig {
    pub fn alpha(&self) -> AnyAlpha {
        match self.ring {
            RingKind::Rational => AnyAlpha::Rational(build(self)),
            RingKind::Laurent => AnyAlpha::Laurent(build(self)),
            RingKind::ModInt => AnyAlpha::ModInt(build(self)),
        }
    }
}

impl fmt::Display for AlphaConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring = {}", self.ring.name())?;
        writeln!(f, "l = {}", self.l)?;
        writeln!(f, "a = [{}]", self.a.join(", "))?;
        writeln!(f, "b = [{}]", self.b.join(", "))?;
        writeln!(f, "c = [{}]", self.c.join(", "))?;
        writeln!(f, "p = {}", self.p)
    }
}
