//! Strings of the associated string algebra and generalized strings.
//!
//! A generalized string is a sequence of letters, each a nonzero path class
//! of positive length read forwards (direct) or backwards (inverse).

use std::fmt;

use thiserror::Error;

use crate::classify::{string_quotient, ZeroIdeal};
use crate::homalg::QuiverRep;
use crate::linalg::Mat;
use crate::pathalg::{Algebra, Path, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub class: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(class: usize) -> Self {
        Letter { class, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter {
            class: self.class,
            inverse: !self.inverse,
        }
    }

    pub fn source(&self, alg: &Algebra) -> usize {
        let c = &alg.basis[self.class];
        if self.inverse {
            c.target
        } else {
            c.source
        }
    }

    pub fn target(&self, alg: &Algebra) -> usize {
        let c = &alg.basis[self.class];
        if self.inverse {
            c.source
        } else {
            c.target
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenString {
    Word(Vec<Letter>),
    /// `1_v^n`, the word of `n` trivial letters at `v`.
    TrivialPower { vertex: usize, n: usize },
}

impl GenString {
    /// `η(0) = 0`, then `+1` for a direct letter and `-1` for an inverse one.
    pub fn eta(&self) -> Vec<i64> {
        match self {
            GenString::Word(ls) => {
                let mut out = vec![0];
                for l in ls {
                    let last = *out.last().unwrap();
                    out.push(if l.inverse { last - 1 } else { last + 1 });
                }
                out
            }
            GenString::TrivialPower { n, .. } => vec![0; n + 1],
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            GenString::Word(_) => *self.eta().iter().max().unwrap(),
            GenString::TrivialPower { n, .. } => *n as i64,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GenString::Word(ls) => ls.len(),
            GenString::TrivialPower { .. } => 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            GenString::Word(ls) => ls,
            GenString::TrivialPower { .. } => &[],
        }
    }

    pub fn inverse(&self) -> GenString {
        match self {
            GenString::Word(ls) => GenString::Word(ls.iter().rev().map(|l| l.inv()).collect()),
            t => t.clone(),
        }
    }

    fn key(&self) -> Vec<(usize, bool)> {
        self.letters().iter().map(|l| (l.class, l.inverse)).collect()
    }

    /// True when this word, not its inverse, is the chosen representative.
    pub fn is_canonical(&self) -> bool {
        self.key() <= self.inverse().key()
    }

    pub fn canonical(&self) -> GenString {
        if self.is_canonical() {
            self.clone()
        } else {
            self.inverse()
        }
    }

    pub fn display<'a>(&'a self, alg: &'a Algebra) -> StringDisplay<'a> {
        StringDisplay { s: self, alg }
    }
}

pub struct StringDisplay<'a> {
    s: &'a GenString,
    alg: &'a Algebra,
}

impl fmt::Display for StringDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s {
            GenString::TrivialPower { vertex, n } => {
                write!(f, "1_{}", self.alg.pres.vertices[*vertex])?;
                if *n != 1 {
                    write!(f, "^{n}")?;
                }
                Ok(())
            }
            GenString::Word(ls) => {
                for (k, l) in ls.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    let w = self.alg.class_word(l.class);
                    if self.alg.basis[l.class].len > 1 {
                        write!(f, "({w})")?;
                    } else {
                        f.write_str(&w)?;
                    }
                    if l.inverse {
                        f.write_str("^-1")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Which adjacency condition a word violates.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty word")]
    Empty,
    #[error("letter {0} is not a nonzero class of positive length")]
    BadLetter(usize),
    #[error("letters {0} and {next} do not compose", next = .0 + 1)]
    NotComposable(usize),
    #[error("direct letters {0}, {next}: no representative product lies in the zero ideal", next = .0 + 1)]
    DirectDirect(usize),
    #[error("inverse letters {0}, {next}: no reversed representative product lies in the zero ideal", next = .0 + 1)]
    InverseInverse(usize),
    #[error("mixed letters {0}, {next}: no representative walk is a string of the string algebra", next = .0 + 1)]
    Mixed(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {col}: {msg}")]
pub struct StringParseError {
    pub col: usize,
    pub msg: String,
}

/// A single arrow walked forwards or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: usize,
    pub inverse: bool,
}

/// Walk of the associated string algebra: a start vertex and signed arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn end(&self, pres: &Presentation) -> usize {
        let mut at = self.start;
        for s in &self.steps {
            let a = &pres.arrows[s.arrow];
            at = if s.inverse { a.source } else { a.target };
        }
        at
    }

    pub fn inverse(&self, pres: &Presentation) -> Walk {
        Walk {
            start: self.end(pres),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    arrow: s.arrow,
                    inverse: !s.inverse,
                })
                .collect(),
        }
    }

    pub fn display(&self, pres: &Presentation) -> String {
        if self.steps.is_empty() {
            return format!("1_{}", pres.vertices[self.start]);
        }
        self.steps
            .iter()
            .map(|s| {
                let l = &pres.arrows[s.arrow].label;
                if s.inverse {
                    format!("{l}^-1")
                } else {
                    l.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Composable, reduced, and no direct or inverse run contains a monomial relation.
pub fn is_string_walk(tilde: &Presentation, walk: &Walk) -> bool {
    let mut at = walk.start;
    for (k, s) in walk.steps.iter().enumerate() {
        let a = &tilde.arrows[s.arrow];
        let (from, to) = if s.inverse { (a.target, a.source) } else { (a.source, a.target) };
        if from != at {
            return false;
        }
        at = to;
        if k > 0 {
            let p = walk.steps[k - 1];
            if p.arrow == s.arrow && p.inverse != s.inverse {
                return false;
            }
        }
    }
    let monomials: Vec<&Path> = tilde.monomials().collect();
    let mut k = 0;
    while k < walk.steps.len() {
        let dir = walk.steps[k].inverse;
        let mut run: Vec<usize> = Vec::new();
        while k < walk.steps.len() && walk.steps[k].inverse == dir {
            run.push(walk.steps[k].arrow);
            k += 1;
        }
        if dir {
            run.reverse();
        }
        if monomials
            .iter()
            .any(|m| run.len() >= m.len() && run.windows(m.len()).any(|w| w == m.arrows.as_slice()))
        {
            return false;
        }
    }
    true
}

/// All string walks with `1..=max_arrows` steps, one per inversion class.
pub fn enumerate_string_walks(tilde: &Presentation, max_arrows: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    if max_arrows == 0 {
        return out;
    }
    let mut stack: Vec<Walk> = Vec::new();
    for a in 0..tilde.arrows.len() {
        for inverse in [false, true] {
            let start = if inverse { tilde.arrows[a].target } else { tilde.arrows[a].source };
            stack.push(Walk {
                start,
                steps: vec![Step { arrow: a, inverse }],
            });
        }
    }
    while let Some(w) = stack.pop() {
        if !is_string_walk(tilde, &w) {
            continue;
        }
        let inv = w.inverse(tilde);
        if w.steps <= inv.steps {
            out.push(w.clone());
        }
        if w.steps.len() < max_arrows {
            for a in 0..tilde.arrows.len() {
                for inverse in [false, true] {
                    let mut n = w.clone();
                    n.steps.push(Step { arrow: a, inverse });
                    stack.push(n);
                }
            }
        }
    }
    out.sort_by(|a, b| (a.steps.len(), &a.steps).cmp(&(b.steps.len(), &b.steps)));
    out
}

/// The string module `M[s]`: one basis vector per vertex of the walk, with
/// arrows acting along the walk. Arrows act on the left, so an arrow
/// `α: x -> y` maps the space at `y` to the space at `x`.
pub fn string_module(tilde: &Algebra, walk: &Walk) -> Option<QuiverRep> {
    let pres = &tilde.pres;
    if !walk.steps.is_empty() && !is_string_walk(pres, walk) {
        return None;
    }
    let field = tilde.field;
    let mut verts = vec![walk.start];
    for s in &walk.steps {
        let a = &pres.arrows[s.arrow];
        verts.push(if s.inverse { a.source } else { a.target });
    }
    let mut dims = vec![0; pres.vertices.len()];
    let mut local = Vec::new();
    for &v in &verts {
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut maps: Vec<Mat> = pres
        .arrows
        .iter()
        .map(|a| Mat::zeros(field, dims[a.source], dims[a.target]))
        .collect();
    for (k, s) in walk.steps.iter().enumerate() {
        // basis vector k at one end, k+1 at the other
        let (src_pos, tgt_pos) = if s.inverse { (k + 1, k) } else { (k, k + 1) };
        maps[s.arrow].set(local[src_pos], local[tgt_pos], field.one());
    }
    Some(QuiverRep::new(field, dims, maps))
}

/// The string `s` with `m ≅ M[s]`, searching walks with at most `max_arrows`
/// steps whose dimension vector matches.
pub fn identify_string(tilde: &Algebra, m: &QuiverRep, max_arrows: usize, seed: u64) -> Option<Walk> {
    let pres = &tilde.pres;
    let trivial = (0..pres.vertices.len()).map(|v| Walk { start: v, steps: Vec::new() });
    let walks = trivial.chain(enumerate_string_walks(pres, max_arrows));
    walks
        .filter(|w| w.steps.len() + 1 == m.dim())
        .find(|w| {
            let s = string_module(tilde, w).expect("enumerated walks are strings");
            s.dims == m.dims && s.is_isomorphic(m, pres, seed)
        })
}

/// Generalized-string machinery for one algebra.
pub struct StringContext<'a> {
    pub alg: &'a Algebra,
    pub tilde: Presentation,
    pub zero: ZeroIdeal,
}

impl<'a> StringContext<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        let tilde = string_quotient(&alg.pres).unwrap_or_else(|_| alg.pres.clone());
        StringContext {
            zero: ZeroIdeal::new(&alg.pres),
            tilde,
            alg,
        }
    }

    fn letter_walks(&self, l: Letter) -> Vec<Walk> {
        self.alg
            .words_of(l.class)
            .iter()
            .map(|p| {
                let w = Walk {
                    start: p.start,
                    steps: p
                        .arrows
                        .iter()
                        .map(|&a| Step { arrow: a, inverse: false })
                        .collect(),
                };
                if l.inverse {
                    w.inverse(&self.alg.pres)
                } else {
                    w
                }
            })
            .collect()
    }

    /// Adjacency conditions (i)-(iii) for consecutive letters `a`, `b`.
    fn adjacent(&self, a: Letter, b: Letter) -> Result<(), fn(usize) -> Violation> {
        if a.target(self.alg) != b.source(self.alg) {
            return Err(Violation::NotComposable);
        }
        let words = |l: Letter| self.alg.words_of(l.class);
        let in_j = |x: &Path, y: &Path| {
            x.concat(y, &self.alg.pres)
                .is_some_and(|p| self.zero.contains(&p))
        };
        match (a.inverse, b.inverse) {
            (false, false) => {
                let ok = words(a).iter().any(|x| words(b).iter().any(|y| in_j(x, y)));
                ok.then_some(()).ok_or(Violation::DirectDirect)
            }
            (true, true) => {
                let ok = words(b).iter().any(|y| words(a).iter().any(|x| in_j(y, x)));
                ok.then_some(()).ok_or(Violation::InverseInverse)
            }
            _ => {
                let ok = self.letter_walks(a).iter().any(|x| {
                    self.letter_walks(b).iter().any(|y| {
                        let mut w = x.clone();
                        w.steps.extend_from_slice(&y.steps);
                        is_string_walk(&self.tilde, &w)
                    })
                });
                ok.then_some(()).ok_or(Violation::Mixed)
            }
        }
    }

    pub fn check(&self, letters: &[Letter]) -> Result<(), Violation> {
        if letters.is_empty() {
            return Err(Violation::Empty);
        }
        for (j, l) in letters.iter().enumerate() {
            if l.class >= self.alg.dim() || self.alg.basis[l.class].len == 0 {
                return Err(Violation::BadLetter(j + 1));
            }
        }
        for j in 0..letters.len() - 1 {
            self.adjacent(letters[j], letters[j + 1]).map_err(|f| f(j + 1))?;
        }
        Ok(())
    }

    pub fn is_generalized_string(&self, letters: &[Letter]) -> bool {
        self.check(letters).is_ok()
    }

    pub fn all_letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for c in 0..self.alg.dim() {
            if self.alg.basis[c].len > 0 {
                out.push(Letter::direct(c));
                out.push(Letter::direct(c).inv());
            }
        }
        out
    }

    /// Generalized strings with at most `max` letters, one per inversion class.
    /// With `max = 0` this is the list of trivial words.
    pub fn enumerate(&self, max: usize) -> Vec<GenString> {
        if max == 0 {
            return (0..self.alg.num_vertices())
                .map(|v| GenString::TrivialPower { vertex: v, n: 1 })
                .collect();
        }
        let letters = self.all_letters();
        let follows: Vec<Vec<Letter>> = letters
            .iter()
            .map(|&a| letters.iter().copied().filter(|&b| self.adjacent(a, b).is_ok()).collect())
            .collect();
        let pos = |l: Letter| letters.iter().position(|&x| x == l).unwrap();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
        while let Some(w) = stack.pop() {
            let g = GenString::Word(w.clone());
            if g.is_canonical() {
                out.push(g);
            }
            if w.len() < max {
                for &b in &follows[pos(*w.last().unwrap())] {
                    let mut n = w.clone();
                    n.push(b);
                    stack.push(n);
                }
            }
        }
        out.sort_by_key(|a| (a.len(), a.key()));
        out
    }

    /// The generalized string whose letters are the maximal direct and
    /// inverse runs of a string walk.
    pub fn from_walk(&self, walk: &Walk) -> Option<GenString> {
        if walk.steps.is_empty() {
            return Some(GenString::TrivialPower {
                vertex: walk.start,
                n: 0,
            });
        }
        let mut letters = Vec::new();
        let mut k = 0;
        let mut at = walk.start;
        while k < walk.steps.len() {
            let dir = walk.steps[k].inverse;
            let mut run = Vec::new();
            while k < walk.steps.len() && walk.steps[k].inverse == dir {
                run.push(walk.steps[k].arrow);
                k += 1;
            }
            let end = {
                let last = &self.alg.pres.arrows[*run.last().unwrap()];
                if dir {
                    last.source
                } else {
                    last.target
                }
            };
            let path = if dir {
                run.reverse();
                Path { start: end, arrows: run }
            } else {
                Path { start: at, arrows: run }
            };
            let class = self.alg.as_class(&self.alg.reduce(&path))?;
            letters.push(Letter { class, inverse: dir });
            at = end;
        }
        Some(GenString::Word(letters))
    }

    /// Parses `z0^-1*t0*t1`, `(t0*g1)^-1*...` or `1_v^n`.
    pub fn parse(&self, text: &str) -> Result<GenString, StringParseError> {
        let t = text.trim();
        let base = text.len() - text.trim_start().len();
        let err = |col: usize, msg: String| StringParseError { col: col + 1, msg };
        if let Some(rest) = t.strip_prefix("1_") {
            let (v, n) = match rest.split_once('^') {
                Some((v, n)) => (
                    v,
                    n.parse::<usize>()
                        .map_err(|_| err(base + 3 + v.len(), format!("bad exponent `{n}`")))?,
                ),
                None => (rest, 1),
            };
            let vertex = self
                .alg
                .pres
                .vertex_index(v)
                .ok_or_else(|| err(base + 2, format!("unknown vertex `{v}`")))?;
            return Ok(GenString::TrivialPower { vertex, n });
        }
        let mut letters = Vec::new();
        let bytes: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let start = i;
            let word: String;
            if bytes[i] == '(' {
                let close = bytes[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| err(base + i, "unclosed parenthesis".into()))?;
                word = bytes[i + 1..i + close].iter().collect();
                i += close + 1;
            } else {
                let mut j = i;
                while j < bytes.len() && bytes[j] != '*' && bytes[j] != '^' {
                    j += 1;
                }
                word = bytes[i..j].iter().collect();
                i = j;
            }
            let mut inverse = false;
            let rest: String = bytes[i..].iter().collect();
            if rest.starts_with("^-1") {
                inverse = true;
                i += 3;
            } else if rest.starts_with('^') {
                return Err(err(base + i, "only `^-1` exponents are allowed on letters".into()));
            }
            if i < bytes.len() {
                if bytes[i] != '*' {
                    return Err(err(base + i, format!("expected `*`, found `{}`", bytes[i])));
                }
                i += 1;
                if i == bytes.len() {
                    return Err(err(base + i, "trailing `*`".into()));
                }
            }
            let labels: Vec<&str> = word.split('*').map(str::trim).collect();
            if labels.iter().any(|l| l.is_empty()) {
                return Err(err(base + start, "empty letter".into()));
            }
            for l in &labels {
                if self.alg.pres.arrow_index(l).is_none() {
                    return Err(err(base + start, format!("unknown arrow `{l}`")));
                }
            }
            let e = self
                .alg
                .reduce_word(&labels)
                .ok_or_else(|| err(base + start, format!("`{word}` is not a path")))?;
            let class = self
                .alg
                .as_class(&e)
                .ok_or_else(|| err(base + start, format!("`{word}` is zero in the algebra")))?;
            letters.push(Letter { class, inverse });
        }
        if letters.is_empty() {
            return Err(err(base, "empty string".into()));
        }
        Ok(GenString::Word(letters))
    }
}
