use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::{Path, Presentation, Relation};
use crate::field::{Field, Scalar};
use crate::linalg::{axpy, kernel, Echelon, SparseVec};

/// An algebra element: sparse coordinates over the path-class basis.
pub type Elem = SparseVec;

const PATH_LIMIT: usize = 400_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("relation {index} has length {len}; generators must lie in the square of the arrow ideal")]
    GeneratorTooShort { index: usize, len: usize },
    #[error("not admissible within bound {bound}: the path {witness} is nonzero")]
    NotAdmissible { bound: usize, witness: String },
    #[error("more than {PATH_LIMIT} relation-free paths below the bound")]
    TooLarge,
}

/// A nonzero path class together with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClass {
    pub rep: Path,
    pub source: usize,
    pub target: usize,
    pub len: usize,
}

/// `kQ/I` realized with an explicit path-class basis and structure constants.
///
/// Basis order: trivial classes `1_v` first (index `v`), then by length and
/// lexicographically in arrow-declaration order.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub pres: Presentation,
    pub field: Field,
    pub basis: Vec<BasisClass>,
    table: Vec<Vec<Elem>>,
    arrow_elems: Vec<Elem>,
    words: Vec<Vec<Path>>,
    columns: HashMap<Path, usize>,
    col_basis: HashMap<usize, usize>,
    echelon: Echelon,
    bound: usize,
}

fn path_key(p: &Path) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<Vec<usize>>, usize) {
    (
        std::cmp::Reverse(p.len()),
        std::cmp::Reverse(p.arrows.clone()),
        p.start,
    )
}

impl Algebra {
    pub fn build(pres: &Presentation) -> Result<Algebra, BuildError> {
        Self::build_inner(pres, true)
    }

    /// Like [`Algebra::build`], but keeps surviving classes at the bound
    /// instead of reporting non-admissibility. Products are then only
    /// meaningful below the bound.
    pub fn build_unchecked(pres: &Presentation) -> Result<Algebra, BuildError> {
        Self::build_inner(pres, false)
    }

    fn build_inner(pres: &Presentation, admissible: bool) -> Result<Algebra, BuildError> {
        let field = pres.field;
        for (index, r) in pres.relations.iter().enumerate() {
            for p in r.paths() {
                if p.len() < 2 {
                    return Err(BuildError::GeneratorTooShort { index, len: p.len() });
                }
            }
        }
        let bound = pres.nilpotency_bound();
        let monomials: Vec<&Path> = pres.monomials().collect();
        let ends_in_monomial = |p: &Path| {
            monomials
                .iter()
                .any(|m| p.arrows.len() >= m.len() && p.arrows.ends_with(&m.arrows))
        };

        // relation-free paths up to the bound, layer by layer
        let mut paths: Vec<Path> = (0..pres.vertices.len()).map(Path::trivial).collect();
        let mut layer = paths.clone();
        for _ in 0..bound {
            let mut next = Vec::new();
            for p in &layer {
                let t = p.target(pres);
                for (a, arrow) in pres.arrows.iter().enumerate() {
                    if arrow.source != t {
                        continue;
                    }
                    let mut q = p.clone();
                    q.arrows.push(a);
                    if !ends_in_monomial(&q) {
                        next.push(q);
                    }
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() > PATH_LIMIT {
                return Err(BuildError::TooLarge);
            }
            layer = next;
        }
        paths.sort_by_key(path_key);
        let columns: HashMap<Path, usize> =
            paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        let to_vec = |terms: &[(Path, Scalar)]| -> SparseVec {
            let mut v: SparseVec = Vec::new();
            for (p, c) in terms {
                if let Some(&col) = columns.get(p) {
                    v = axpy(&v, c, &vec![(col, field.one())]);
                }
            }
            v
        };

        let mut echelon = Echelon::new(field);
        let mut queue: VecDeque<SparseVec> = VecDeque::new();
        for r in &pres.relations {
            if let Relation::Binomial(p, q) = r {
                let v = to_vec(&[(p.clone(), field.one()), (q.clone(), field.from_i64(-1))]);
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            let red = echelon.reduce(&v);
            if red.is_empty() {
                continue;
            }
            echelon.insert(&red);
            for (a, arrow) in pres.arrows.iter().enumerate() {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (col, c) in &red {
                    let p = &paths[*col];
                    if arrow.target == p.start {
                        let mut arrows = vec![a];
                        arrows.extend_from_slice(&p.arrows);
                        left.push((Path { start: arrow.source, arrows }, c.clone()));
                    }
                    if p.target(pres) == arrow.source {
                        let mut q = p.clone();
                        q.arrows.push(a);
                        right.push((q, c.clone()));
                    }
                }
                for terms in [left, right] {
                    let w = to_vec(&terms);
                    if !w.is_empty() {
                        queue.push_back(w);
                    }
                }
            }
        }

        // surviving columns, smallest first
        let mut survivors: Vec<usize> = (0..paths.len()).filter(|&c| !echelon.is_pivot(c)).collect();
        survivors.sort_by_key(|&c| (paths[c].len(), paths[c].arrows.clone(), paths[c].start));
        let mut basis = Vec::new();
        let mut col_basis = HashMap::new();
        for (i, &c) in survivors.iter().enumerate() {
            let p = paths[c].clone();
            if admissible && p.len() >= bound {
                return Err(BuildError::NotAdmissible {
                    bound,
                    witness: pres.word(&p),
                });
            }
            col_basis.insert(c, i);
            basis.push(BasisClass {
                source: p.source(),
                target: p.target(pres),
                len: p.len(),
                rep: p,
            });
        }

        let mut alg = Algebra {
            pres: pres.clone(),
            field,
            basis,
            table: Vec::new(),
            arrow_elems: Vec::new(),
            words: Vec::new(),
            columns,
            col_basis,
            echelon,
            bound,
        };
        let n = alg.basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = alg.basis[i].rep.concat(&alg.basis[j].rep, pres) {
                    table[i][j] = alg.reduce(&p);
                }
            }
        }
        alg.table = table;
        alg.arrow_elems = (0..pres.arrows.len())
            .map(|a| {
                alg.reduce(&Path {
                    start: pres.arrows[a].source,
                    arrows: vec![a],
                })
            })
            .collect();
        let mut words = vec![Vec::new(); n];
        for p in &paths {
            let e = alg.reduce(p);
            if e.len() == 1 && e[0].1.is_one() {
                words[e[0].0].push(p.clone());
            }
        }
        for w in words.iter_mut() {
            w.sort_by_key(|p| std::cmp::Reverse(path_key(p)));
        }
        alg.words = words;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.pres.vertices.len()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Class of a path: zero iff the path lies in the ideal.
    pub fn reduce(&self, p: &Path) -> Elem {
        let Some(&col) = self.columns.get(p) else {
            return Vec::new();
        };
        let red = self.echelon.reduce(&vec![(col, self.field.one())]);
        let mut out: Elem = red.into_iter().map(|(c, x)| (self.col_basis[&c], x)).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Reduces a word given by arrow labels; `None` for unknown labels or
    /// non-composable words.
    pub fn reduce_word(&self, labels: &[&str]) -> Option<Elem> {
        self.pres.path(labels).map(|p| self.reduce(&p))
    }

    pub fn class(&self, i: usize) -> Elem {
        vec![(i, self.field.one())]
    }

    pub fn unit(&self, v: usize) -> Elem {
        self.class(v)
    }

    pub fn arrow(&self, a: usize) -> &Elem {
        &self.arrow_elems[a]
    }

    /// Index of the basis class equal to `e`, if `e` is exactly one class.
    pub fn as_class(&self, e: &Elem) -> Option<usize> {
        (e.len() == 1 && e[0].1.is_one()).then(|| e[0].0)
    }

    /// All relation-free paths that represent class `i` on the nose.
    pub fn words_of(&self, i: usize) -> &[Path] {
        &self.words[i]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let t = &self.table[*i][*j];
                if !t.is_empty() {
                    out = axpy(&out, &(a * b), t);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        axpy(x, &self.field.one(), y)
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        axpy(x, &self.field.from_i64(-1), y)
    }

    pub fn scale(&self, x: &Elem, c: &Scalar) -> Elem {
        crate::linalg::scale(x, c)
    }

    /// Coefficient of `1_v` in `x`.
    pub fn unit_coefficient(&self, x: &Elem, v: usize) -> Scalar {
        x.iter()
            .find(|(i, _)| *i == v)
            .map_or(self.field.zero(), |(_, c)| c.clone())
    }

    /// True when every class in `x` has positive length.
    pub fn is_radical(&self, x: &Elem) -> bool {
        x.iter().all(|(i, _)| self.basis[*i].len > 0)
    }

    /// Inverse of a unit of `1_v Λ 1_v`.
    pub fn local_inverse(&self, x: &Elem, v: usize) -> Option<Elem> {
        let lambda = self.unit_coefficient(x, v);
        let li = lambda.inv()?;
        // x = λ(1 - n) with n nilpotent, so x^{-1} = λ^{-1} Σ n^k
        let n = self.sub(&self.unit(v), &self.scale(x, &li));
        let mut acc = self.unit(v);
        let mut pw = self.unit(v);
        for _ in 0..=self.bound {
            pw = self.mul(&pw, &n);
            if pw.is_empty() {
                break;
            }
            acc = self.add(&acc, &pw);
        }
        Some(self.scale(&acc, &li))
    }

    /// Basis classes with source `a` and target `b`; these are the maps `P_a -> P_b`.
    pub fn hom_basis(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == a && self.basis[i].target == b)
            .collect()
    }

    /// Basis of `P_v`: classes ending at `v`.
    pub fn projective_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target == v).collect()
    }

    /// Classes starting at `v`.
    pub fn right_projective_basis(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v).collect()
    }

    /// Socle of `P_v`: elements killed by every arrow acting on the left.
    pub fn socle(&self, v: usize) -> Vec<Elem> {
        let pb = self.projective_basis(v);
        let mut rows: Vec<SparseVec> = Vec::new();
        // one equation per (arrow, output class)
        for a in 0..self.pres.arrows.len() {
            let mut eqs: HashMap<usize, SparseVec> = HashMap::new();
            for (k, &u) in pb.iter().enumerate() {
                for (out, c) in self.mul(self.arrow(a), &self.class(u)) {
                    let e = eqs.entry(out).or_default();
                    *e = axpy(e, &c, &vec![(k, self.field.one())]);
                }
            }
            let mut keys: Vec<_> = eqs.keys().copied().collect();
            keys.sort();
            rows.extend(keys.into_iter().map(|k| eqs[&k].clone()));
        }
        kernel(self.field, &rows, pb.len())
            .into_iter()
            .map(|v| v.into_iter().map(|(k, c)| (pb[k], c)).collect())
            .collect()
    }

    /// The socle generator of `P_v` when the socle is one-dimensional.
    pub fn socle_element(&self, v: usize) -> Option<Elem> {
        let s = self.socle(v);
        (s.len() == 1).then(|| s.into_iter().next().unwrap())
    }

    /// Classes `w` of positive length with `αw = 0` and `wβ = 0` for all arrows.
    pub fn maximal_paths(&self) -> Vec<usize> {
        let arrows = 0..self.pres.arrows.len();
        (0..self.dim())
            .filter(|&i| {
                let w = self.class(i);
                self.basis[i].len > 0
                    && arrows.clone().all(|a| {
                        self.mul(self.arrow(a), &w).is_empty() && self.mul(&w, self.arrow(a)).is_empty()
                    })
            })
            .collect()
    }

    pub fn class_word(&self, i: usize) -> String {
        self.pres.word(&self.basis[i].rep)
    }

    /// Human-readable element, e.g. `z0*z0 - 2*t0`.
    pub fn format_elem(&self, x: &Elem) -> String {
        if x.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in x.iter().enumerate() {
            let w = self.class_word(*i);
            let c_str = c.to_string();
            let (neg, mag) = match c_str.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c_str),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s += if neg { " - " } else { " + " };
            }
            if mag != "1" {
                s += &format!("{mag}*");
            }
            s += &w;
        }
        s
    }

    /// Checks `(xy)z = x(yz)` on all basis triples and that `Σ 1_v` is the identity.
    pub fn check_associative(&self) -> bool {
        let n = self.dim();
        let one: Elem = (0..self.num_vertices()).map(|v| (v, self.field.one())).collect();
        for i in 0..n {
            let x = self.class(i);
            if self.mul(&one, &x) != x || self.mul(&x, &one) != x {
                return false;
            }
            for j in 0..n {
                for k in 0..n {
                    let l = self.mul(&self.table[i][j], &self.class(k));
                    let r = self.mul(&self.class(i), &self.table[j][k]);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}
