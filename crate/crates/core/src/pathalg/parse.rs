//! Line-oriented presentation format.
//!
//! ```text
//! quiver L3
//! field q
//! vertices: 0 1 2
//! arrows: z0: 0 -> 0, t0: 0 -> 1
//! relations: z0*t0 = 0; t0*g1 = z0*z0
//! bound: 8
//! ```
//!
//! `#` starts a comment. Lines that do not begin with a keyword continue
//! the previous `vertices:`, `arrows:` or `relations:` section.

use thiserror::Error;

use super::{Arrow, Path, Presentation, Relation};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate label `{0}`")]
    Duplicate(String),
    #[error("relation word `{0}` is not composable")]
    NotComposable(String),
    #[error("binomial `{0} = {1}` is not parallel")]
    NotParallel(String, String),
    #[error("missing `{0}` line")]
    Missing(&'static str),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Vertices,
    Arrows,
    Relations,
}

/// A fragment of source text with its 1-based position.
#[derive(Clone, Copy)]
struct Frag<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

impl<'a> Frag<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    /// Leading/trailing whitespace removed, column adjusted.
    fn trim(self) -> Frag<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Frag {
            text: self.text.trim(),
            line: self.line,
            col: self.col + self.text[..lead].chars().count(),
        }
    }

    fn split(self, sep: char) -> Vec<Frag<'a>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, c) in self.text.char_indices() {
            if c == sep {
                out.push(self.sub(start, i));
                start = i + c.len_utf8();
            }
        }
        out.push(self.sub(start, self.text.len()));
        out
    }

    fn split_once(self, pat: &str) -> Option<(Frag<'a>, Frag<'a>)> {
        let i = self.text.find(pat)?;
        Some((self.sub(0, i), self.sub(i + pat.len(), self.text.len())))
    }

    fn sub(&self, a: usize, b: usize) -> Frag<'a> {
        Frag {
            text: &self.text[a..b],
            line: self.line,
            col: self.col + self.text[..a].chars().count(),
        }
    }
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut name: Option<String> = None;
    let mut field: Option<Field> = None;
    let mut bound: Option<usize> = None;
    let mut vertex_frags: Vec<Frag> = Vec::new();
    let mut arrow_frags: Vec<Frag> = Vec::new();
    let mut relation_frags: Vec<Frag> = Vec::new();
    let mut section = Section::None;

    for (lineno, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let frag = Frag {
            text: content,
            line: lineno + 1,
            col: 1,
        }
        .trim();
        if frag.text.is_empty() {
            continue;
        }
        let keyword = frag
            .text
            .split(|c: char| c.is_whitespace() || c == ':')
            .next()
            .unwrap_or("");
        let rest = |kw: &str| frag.sub(kw.len(), frag.text.len());
        match keyword {
            "quiver" => {
                let r = rest("quiver").trim();
                if name.is_some() {
                    return Err(frag.syntax("repeated `quiver` line"));
                }
                if !is_label(r.text) {
                    return Err(r.syntax("expected a quiver name"));
                }
                name = Some(r.text.to_string());
                section = Section::None;
            }
            "field" => {
                let r = rest("field").trim();
                if field.is_some() {
                    return Err(frag.syntax("repeated `field` line"));
                }
                field = Some(r.text.parse::<Field>().map_err(|e| r.syntax(e))?);
                section = Section::None;
            }
            "vertices" | "arrows" | "relations" | "bound" => {
                let r = rest(keyword).trim();
                let body = r
                    .text
                    .strip_prefix(':')
                    .map(|_| r.sub(1, r.text.len()).trim())
                    .ok_or_else(|| r.syntax(format!("expected `:` after `{keyword}`")))?;
                section = match keyword {
                    "vertices" => Section::Vertices,
                    "arrows" => Section::Arrows,
                    "relations" => Section::Relations,
                    _ => Section::None,
                };
                if keyword == "bound" {
                    let n: usize = body
                        .text
                        .parse()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| body.syntax("bound must be a positive integer"))?;
                    bound = Some(n);
                } else {
                    push_section(section, body, &mut vertex_frags, &mut arrow_frags, &mut relation_frags);
                }
            }
            _ => {
                if section == Section::None {
                    return Err(frag.syntax(format!("unexpected `{keyword}`")));
                }
                push_section(section, frag, &mut vertex_frags, &mut arrow_frags, &mut relation_frags);
            }
        }
    }

    let eof = Frag {
        text: "",
        line: text.lines().count().max(1),
        col: 1,
    };
    let name = name.ok_or_else(|| eof.err(ParseErrorKind::Missing("quiver")))?;
    if vertex_frags.is_empty() {
        return Err(eof.err(ParseErrorKind::Missing("vertices")));
    }

    let mut pres = Presentation {
        name,
        field: field.unwrap_or(Field::Rational),
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
        bound,
    };

    for f in &vertex_frags {
        for tok in f.split(' ').into_iter().flat_map(|t| t.split(',')) {
            let tok = tok.trim();
            if tok.text.is_empty() {
                continue;
            }
            if !is_label(tok.text) {
                return Err(tok.syntax(format!("invalid vertex label `{}`", tok.text)));
            }
            if pres.vertex_index(tok.text).is_some() {
                return Err(tok.err(ParseErrorKind::Duplicate(tok.text.into())));
            }
            pres.vertices.push(tok.text.to_string());
        }
    }
    if pres.vertices.is_empty() {
        return Err(vertex_frags[0].syntax("no vertices listed"));
    }

    for f in &arrow_frags {
        for item in f.split(',') {
            let item = item.trim();
            if item.text.is_empty() {
                continue;
            }
            let (label, ends) = item
                .split_once(":")
                .ok_or_else(|| item.syntax("expected `label: source -> target`"))?;
            let label = label.trim();
            if !is_label(label.text) {
                return Err(label.syntax(format!("invalid arrow label `{}`", label.text)));
            }
            if pres.arrow_index(label.text).is_some() {
                return Err(label.err(ParseErrorKind::Duplicate(label.text.into())));
            }
            let (src, tgt) = ends
                .split_once("->")
                .ok_or_else(|| ends.syntax("expected `source -> target`"))?;
            let vertex = |f: Frag| {
                let f = f.trim();
                pres.vertex_index(f.text)
                    .ok_or_else(|| f.err(ParseErrorKind::UnknownVertex(f.text.into())))
            };
            let arrow = Arrow {
                label: label.text.to_string(),
                source: vertex(src)?,
                target: vertex(tgt)?,
            };
            pres.arrows.push(arrow);
        }
    }

    for f in &relation_frags {
        for item in f.split(';') {
            let item = item.trim();
            if item.text.is_empty() {
                continue;
            }
            let (lhs, rhs) = item
                .split_once("=")
                .ok_or_else(|| item.syntax("expected `word = 0` or `word = word`"))?;
            let p = parse_word(&pres, lhs.trim())?;
            let rhs = rhs.trim();
            if rhs.text == "0" {
                pres.relations.push(Relation::Monomial(p));
            } else {
                let q = parse_word(&pres, rhs)?;
                if p.source() != q.source() || p.target(&pres) != q.target(&pres) {
                    return Err(item.err(ParseErrorKind::NotParallel(
                        lhs.trim().text.into(),
                        rhs.text.into(),
                    )));
                }
                pres.relations.push(Relation::Binomial(p, q));
            }
        }
    }
    Ok(pres)
}

fn push_section<'a>(
    s: Section,
    f: Frag<'a>,
    v: &mut Vec<Frag<'a>>,
    a: &mut Vec<Frag<'a>>,
    r: &mut Vec<Frag<'a>>,
) {
    match s {
        Section::Vertices => v.push(f),
        Section::Arrows => a.push(f),
        Section::Relations => r.push(f),
        Section::None => {}
    }
}

fn parse_word(pres: &Presentation, f: Frag) -> Result<Path, ParseError> {
    if f.text.is_empty() {
        return Err(f.syntax("empty relation word"));
    }
    let mut arrows = Vec::new();
    for tok in f.split('*') {
        let tok = tok.trim();
        if tok.text.is_empty() {
            return Err(tok.syntax("empty factor in word"));
        }
        let a = pres
            .arrow_index(tok.text)
            .ok_or_else(|| tok.err(ParseErrorKind::UnknownArrow(tok.text.into())))?;
        arrows.push(a);
    }
    let p = Path {
        start: pres.arrows[arrows[0]].source,
        arrows,
    };
    if !pres.is_composable(&p) {
        return Err(f.err(ParseErrorKind::NotComposable(f.text.into())));
    }
    Ok(p)
}
