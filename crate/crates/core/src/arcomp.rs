//! String complexes, top-to-socle maps, stalk towers, rim towers and
//! cohomology diagrams.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::homalg::rep::{cohomology, dim_vector, QuiverRep};
use crate::homalg::{cone, is_indecomposable, minimal_form, split_off, ChainMap, ElemMat, HomalgError, ProjComplex};
use crate::pathalg::Algebra;
use crate::strings::{identify_string, GenString, StringContext};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArcompError {
    #[error("string complexes need a word of positive length")]
    TrivialWord,
    #[error("not a generalized string: {0}")]
    NotString(String),
    #[error("the differential does not square to zero in degree {0}")]
    NotComplex(i64),
    #[error("degree {0} is outside the support of the complex")]
    OutsideSupport(i64),
    #[error("P_{0} has no one-dimensional socle")]
    NoSocle(String),
    #[error("level {level}: the cone does not split off the shifted level {prev}")]
    SplitNotFound { level: usize, prev: usize },
    #[error("level {0}: the complement in the cone is decomposable")]
    Decomposable(usize),
    #[error(transparent)]
    Homalg(#[from] HomalgError),
}

impl ArcompError {
    /// True for failures of the statements being checked rather than bad input.
    pub fn is_theorem_failure(&self) -> bool {
        matches!(
            self,
            ArcompError::NotComplex(_) | ArcompError::SplitNotFound { .. } | ArcompError::Decomposable(_)
        )
    }
}

/// `P[w]•`: the summand for position `j` sits in degree `η(j)`, and each
/// letter contributes its path class between consecutive positions.
pub fn string_complex(ctx: &StringContext, w: &GenString) -> Result<ProjComplex, ArcompError> {
    let alg = ctx.alg;
    let letters = w.letters();
    if letters.is_empty() {
        return Err(ArcompError::TrivialWord);
    }
    ctx.check(letters).map_err(|v| ArcompError::NotString(v.to_string()))?;
    let eta = w.eta();
    let mut verts = vec![letters[0].source(alg)];
    verts.extend(letters.iter().map(|l| l.target(alg)));
    let low = *eta.iter().min().unwrap();
    let high = *eta.iter().max().unwrap();
    // position of each index inside its term
    let mut slot = vec![0; verts.len()];
    let mut terms: Vec<Vec<usize>> = vec![Vec::new(); (high - low + 1) as usize];
    for (j, &v) in verts.iter().enumerate() {
        let t = &mut terms[(eta[j] - low) as usize];
        slot[j] = t.len();
        t.push(v);
    }
    let mut diffs: Vec<ElemMat> = (0..terms.len() - 1)
        .map(|k| ElemMat::zeros(terms[k].len(), terms[k + 1].len()))
        .collect();
    for (j, l) in letters.iter().enumerate() {
        // letter j+1 joins positions j and j+1; the arrow of the complex
        // runs from the lower degree to the higher one
        let (from, to) = if l.inverse { (j + 1, j) } else { (j, j + 1) };
        let k = (eta[from] - low) as usize;
        diffs[k].set(slot[from], slot[to], alg.class(l.class));
    }
    let c = ProjComplex::new(low, terms, diffs);
    check_complex(alg, &c)?;
    Ok(c)
}

fn check_complex(alg: &Algebra, c: &ProjComplex) -> Result<(), ArcompError> {
    for (k, w) in c.diffs.windows(2).enumerate() {
        if !w[0].mul(&w[1], alg).is_zero() {
            return Err(ArcompError::NotComplex(c.low + k as i64));
        }
    }
    Ok(())
}

/// The map `⁻C -> C` that is zero outside degree `ell` and sends the top of
/// each summand of `C^ell` to its socle.
pub fn f_top_socle(alg: &Algebra, c: &ProjComplex, ell: i64) -> Result<ChainMap, ArcompError> {
    let term = c.term(ell);
    if term.is_empty() {
        return Err(ArcompError::OutsideSupport(ell));
    }
    let mut m = ElemMat::zeros(term.len(), term.len());
    for (i, &v) in term.iter().enumerate() {
        let s = alg
            .socle_element(v)
            .ok_or_else(|| ArcompError::NoSocle(alg.pres.vertices[v].clone()))?;
        m.set(i, i, s);
    }
    let mut f = ChainMap::default();
    f.comps.insert(ell, m);
    Ok(f)
}

/// `n + 1` copies of `P_v` in degrees `-n..=0`, each differential the
/// top-to-socle map.
pub fn stalk_tower(alg: &Algebra, v: usize, n: usize) -> Result<ProjComplex, ArcompError> {
    let s = alg
        .socle_element(v)
        .ok_or_else(|| ArcompError::NoSocle(alg.pres.vertices[v].clone()))?;
    let mut d = ElemMat::zeros(1, 1);
    d.set(0, 0, s);
    let c = ProjComplex::new(-(n as i64), vec![vec![v]; n + 1], vec![d; n]);
    check_complex(alg, &c)?;
    Ok(c)
}

/// One step of a tower: the minimized cone and the complement of the
/// shifted level two below.
#[derive(Clone, Debug)]
pub struct ArStep {
    pub map: ChainMap,
    pub cone: ProjComplex,
    pub next: ProjComplex,
}

/// `cone(f_top_socle(prev, ell))`, minimized, with `T(prevprev)` split off.
/// The complement is checked to be indecomposable.
pub fn ar_successor(
    alg: &Algebra,
    prev: &ProjComplex,
    prevprev: &ProjComplex,
    ell: i64,
    level: usize,
    seed: u64,
) -> Result<ArStep, ArcompError> {
    let f = f_top_socle(alg, prev, ell)?;
    let src = prev.negate(alg);
    let raw = cone(alg, &f, &src, prev);
    check_complex(alg, &raw)?;
    let cone_min = minimal_form(alg, &raw).complex;
    let next = if prevprev.is_zero() {
        cone_min.clone()
    } else {
        let shifted = prevprev.shift(1, alg);
        split_off(alg, &cone_min, &shifted, seed).ok_or(ArcompError::SplitNotFound {
            level,
            prev: level.saturating_sub(2),
        })?
    };
    if !is_indecomposable(alg, &next)? {
        return Err(ArcompError::Decomposable(level));
    }
    Ok(ArStep {
        map: f,
        cone: cone_min,
        next,
    })
}

/// Levels `P_0[w]•, …, P_K[w]•` of the component through a string complex.
#[derive(Clone, Debug)]
pub struct RimTower {
    pub word: GenString,
    pub degree: i64,
    pub levels: Vec<ProjComplex>,
    /// `steps[k - 1]` certifies level `k`.
    pub steps: Vec<ArStep>,
}

pub fn rim_tower(ctx: &StringContext, w: &GenString, k: usize, seed: u64) -> Result<RimTower, ArcompError> {
    let alg = ctx.alg;
    let p0 = string_complex(ctx, w)?;
    let ell = w.degree();
    let mut levels = vec![p0];
    let mut steps = Vec::new();
    for level in 1..=k {
        let prev = &levels[level - 1];
        let prevprev = if level >= 2 { levels[level - 2].clone() } else { ProjComplex::zero() };
        let step = ar_successor(alg, prev, &prevprev, ell, level, seed.wrapping_add(level as u64))?;
        levels.push(step.next.clone());
        steps.push(step);
    }
    Ok(RimTower {
        word: w.clone(),
        degree: ell,
        levels,
        steps,
    })
}

/// One cohomology group with its summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub dims: Vec<usize>,
    pub summands: Vec<String>,
}

impl Cell {
    pub fn label(&self) -> String {
        self.summands.join("+")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramRow {
    pub level: usize,
    pub entries: BTreeMap<i64, Cell>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyDiagram {
    pub rows: Vec<DiagramRow>,
    /// First level at which two neighbouring interior entries agree, and that entry.
    pub sigma: Option<(usize, i64, Cell)>,
}

/// Label of one indecomposable summand: `S0` for simples, `M[...]` for
/// string modules, the dimension vector otherwise.
fn summand_label(tilde: &Algebra, m: &QuiverRep, seed: u64) -> String {
    match identify_string(tilde, m, m.dim().saturating_sub(1), seed) {
        Some(w) if w.steps.is_empty() => format!("S{}", tilde.pres.vertices[w.start]),
        Some(w) => format!("M[{}]", w.display(&tilde.pres)),
        None => dim_vector(m),
    }
}

pub fn cohomology_cell(alg: &Algebra, tilde: &Algebra, h: &QuiverRep, seed: u64) -> Result<Cell, ArcompError> {
    let parts = h.decompose(&alg.pres, seed)?;
    let mut summands: Vec<String> = parts.iter().map(|p| summand_label(tilde, p, seed)).collect();
    summands.sort();
    Ok(Cell {
        dims: h.dims.clone(),
        summands,
    })
}

/// Cohomology of each level, decomposed and labelled.
pub fn cohomology_diagram(
    alg: &Algebra,
    tilde: &Algebra,
    levels: &[ProjComplex],
    seed: u64,
) -> Result<CohomologyDiagram, ArcompError> {
    let mut rows = Vec::new();
    for (level, c) in levels.iter().enumerate() {
        let mut entries = BTreeMap::new();
        for (d, h) in cohomology(alg, c) {
            entries.insert(d, cohomology_cell(alg, tilde, &h, seed)?);
        }
        rows.push(DiagramRow { level, entries });
    }
    let sigma = find_sigma(&rows);
    Ok(CohomologyDiagram { rows, sigma })
}

fn find_sigma(rows: &[DiagramRow]) -> Option<(usize, i64, Cell)> {
    for row in rows {
        let degs: Vec<i64> = row.entries.keys().copied().collect();
        if degs.len() < 4 {
            continue;
        }
        // skip the outermost entries, which persist from level 0
        for w in degs[1..degs.len() - 1].windows(2) {
            let (a, b) = (&row.entries[&w[0]], &row.entries[&w[1]]);
            if w[1] == w[0] + 1 && a == b {
                return Some((row.level, w[0], a.clone()));
            }
        }
    }
    None
}

impl CohomologyDiagram {
    fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.rows.iter().filter_map(|r| r.entries.keys().next()).min()?;
        let hi = self.rows.iter().filter_map(|r| r.entries.keys().next_back()).max()?;
        Some((*lo, *hi))
    }

    /// Rows are levels, columns are degrees, cells are labels.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("level");
        let range = self.degree_range();
        if let Some((lo, hi)) = range {
            for d in lo..=hi {
                write!(s, "\t{d}").unwrap();
            }
        }
        s.push('\n');
        for row in &self.rows {
            write!(s, "{}", row.level).unwrap();
            if let Some((lo, hi)) = range {
                for d in lo..=hi {
                    let cell = row.entries.get(&d).map_or("0".to_string(), Cell::label);
                    write!(s, "\t{cell}").unwrap();
                }
            }
            s.push('\n');
        }
        if let Some((level, d, cell)) = &self.sigma {
            writeln!(s, "# sigma\tlevel {level}\tdegree {d}\t{}\t{}", cell.label(), fmt_dims(&cell.dims)).unwrap();
        }
        s
    }

    /// A grid graph: one node per nonzero cell, edges to the right
    /// neighbour and to the cells diagonally above and below.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph cohomology {\n  node [shape=box];\n");
        let id = |level: usize, d: i64| format!("n{level}_{}", d.to_string().replace('-', "m"));
        for row in &self.rows {
            for (d, cell) in &row.entries {
                writeln!(
                    s,
                    "  {} [label=\"{}\", pos=\"{},{}!\"];",
                    id(row.level, *d),
                    cell.label(),
                    2 * d - row.level as i64,
                    -(row.level as i64)
                )
                .unwrap();
            }
        }
        for row in &self.rows {
            for d in row.entries.keys() {
                if row.entries.contains_key(&(d + 1)) {
                    writeln!(s, "  {} -> {};", id(row.level, *d), id(row.level, d + 1)).unwrap();
                }
                if let Some(next) = self.rows.get(row.level + 1) {
                    if next.entries.contains_key(d) {
                        writeln!(s, "  {} -> {};", id(row.level, *d), id(row.level + 1, *d)).unwrap();
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

pub fn fmt_dims(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Euler characteristic of the terms, `Σ (-1)^d dim C^d`.
pub fn euler_terms(alg: &Algebra, c: &ProjComplex) -> i64 {
    c.degrees()
        .map(|d| if d % 2 == 0 { 1 } else { -1 } * c.term_dim(alg, d) as i64)
        .sum()
}

/// Euler characteristic of the cohomology.
pub fn euler_cohomology(alg: &Algebra, c: &ProjComplex) -> i64 {
    cohomology(alg, c)
        .iter()
        .map(|(d, h)| if d % 2 == 0 { 1 } else { -1 } * h.dim() as i64)
        .sum()
}
