//! Quiver presentations and the finite-dimensional algebras they define.
//!
//! Paths compose left to right: `a*b` is "a then b". The projective `P_v`
//! is spanned by the path classes ending at `v`, and a path `w: a -> b`
//! acts as the module map `P_a -> P_b`, `u |-> u w`.

mod algebra;
mod parse;

use std::fmt;

use crate::field::Field;

pub use algebra::{Algebra, BasisClass, BuildError, Elem};
pub use parse::{parse_presentation, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A path in the quiver: a start vertex and a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self, quiver: &Presentation) -> usize {
        self.arrows
            .last()
            .map_or(self.start, |&a| quiver.arrows[a].target)
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, other: &Path, quiver: &Presentation) -> Option<Path> {
        if self.target(quiver) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    /// True when `needle` occurs as a consecutive block of arrows.
    pub fn contains_subword(&self, needle: &[usize]) -> bool {
        !needle.is_empty() && self.arrows.windows(needle.len()).any(|w| w == needle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Monomial(Path),
    Binomial(Path, Path),
}

impl Relation {
    pub fn paths(&self) -> Vec<&Path> {
        match self {
            Relation::Monomial(p) => vec![p],
            Relation::Binomial(p, q) => vec![p, q],
        }
    }
}

/// Raw data of `kQ/I`: vertices, arrows and the relation generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub bound: Option<usize>,
}

impl Presentation {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Search cutoff for admissibility; defaults to `2 * #arrows + 2`.
    pub fn nilpotency_bound(&self) -> usize {
        self.bound.unwrap_or(2 * self.arrows.len() + 2)
    }

    /// Builds a path from arrow labels; `None` for unknown or non-composable input.
    pub fn path(&self, labels: &[&str]) -> Option<Path> {
        let idx: Option<Vec<usize>> = labels.iter().map(|l| self.arrow_index(l)).collect();
        let arrows = idx?;
        let first = *arrows.first()?;
        let p = Path {
            start: self.arrows[first].source,
            arrows,
        };
        self.is_composable(&p).then_some(p)
    }

    pub fn is_composable(&self, p: &Path) -> bool {
        let mut at = p.start;
        for &a in &p.arrows {
            if self.arrows[a].source != at {
                return false;
            }
            at = self.arrows[a].target;
        }
        true
    }

    pub fn word(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("1_{}", self.vertices[p.start]);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Path> {
        self.relations.iter().filter_map(|r| match r {
            Relation::Monomial(p) => Some(p),
            Relation::Binomial(..) => None,
        })
    }

    /// Serializes back into the text format accepted by [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut s = format!("quiver {}\nfield {}\n", self.name, self.field);
        s += &format!("vertices: {}\n", self.vertices.join(" "));
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| {
                format!(
                    "{}: {} -> {}",
                    a.label, self.vertices[a.source], self.vertices[a.target]
                )
            })
            .collect();
        s += &format!("arrows: {}\n", arrows.join(", "));
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monomial(p) => format!("{} = 0", self.word(p)),
                Relation::Binomial(p, q) => format!("{} = {}", self.word(p), self.word(q)),
            })
            .collect();
        s += &format!("relations: {}\n", rels.join("; "));
        if let Some(b) = self.bound {
            s += &format!("bound: {b}\n");
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
