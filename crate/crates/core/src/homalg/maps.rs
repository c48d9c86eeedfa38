//! Chain maps and homotopies as solutions of sparse linear systems, and
//! everything built from them: endomorphism algebras, indecomposability,
//! splitting of summands and homotopy equivalence.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::{ChainMap, ProjComplex};
use super::elemmat::ElemMat;
use super::finalg::FinAlgebra;
use super::minimal::minimal_form;
use super::HomalgError;
use crate::field::Scalar;
use crate::linalg::{axpy, kernel, Echelon, SparseVec};
use crate::pathalg::{Algebra, Elem};

/// Number of random combinations tried before a search gives up.
pub const RANDOM_TRIES: usize = 32;

/// Coordinates for maps `C^d -> D^{d+s}`: one variable per degree, matrix
/// position and basis path class.
#[derive(Clone, Debug)]
pub struct MapCoords {
    pub shift: i64,
    vars: Vec<(i64, usize, usize, usize)>,
    index: HashMap<(i64, usize, usize, usize), usize>,
}

impl MapCoords {
    pub fn new(alg: &Algebra, c: &ProjComplex, d: &ProjComplex, shift: i64) -> Self {
        let mut vars = Vec::new();
        let mut index = HashMap::new();
        for deg in c.degrees() {
            let (src, tgt) = (c.term(deg), d.term(deg + shift));
            for (r, &v) in src.iter().enumerate() {
                for (col, &u) in tgt.iter().enumerate() {
                    for b in alg.hom_basis(v, u) {
                        index.insert((deg, r, col, b), vars.len());
                        vars.push((deg, r, col, b));
                    }
                }
            }
        }
        MapCoords { shift, vars, index }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    fn elem_vec(&self, deg: i64, r: usize, c: usize, x: &Elem) -> SparseVec {
        let mut out: SparseVec = x
            .iter()
            .map(|(b, s)| (self.index[&(deg, r, c, *b)], s.clone()))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn to_map(&self, alg: &Algebra, v: &SparseVec, c: &ProjComplex, d: &ProjComplex) -> ChainMap {
        let mut comps: std::collections::BTreeMap<i64, ElemMat> = c
            .degrees()
            .filter(|&deg| !d.term(deg + self.shift).is_empty())
            .map(|deg| (deg, ElemMat::zeros(c.term(deg).len(), d.term(deg + self.shift).len())))
            .collect();
        for (i, s) in v {
            let (deg, r, col, b) = self.vars[*i];
            let m = comps.get_mut(&deg).expect("variable degree");
            let cur = m.get(r, col).clone();
            m.set(r, col, axpy(&cur, s, &alg.class(b)));
        }
        ChainMap { comps }
    }

    pub fn from_map(&self, f: &ChainMap) -> SparseVec {
        let mut out = Vec::new();
        for (&deg, m) in &f.comps {
            for r in 0..m.rows {
                for col in 0..m.cols {
                    let x = m.get(r, col);
                    if !x.is_empty() {
                        let v = self.elem_vec(deg, r, col, x);
                        out = axpy(&out, &v[0].1.field().one(), &v);
                    }
                }
            }
        }
        out
    }
}

/// Chain maps `C -> D` and the null-homotopic ones, as coordinate vectors.
#[derive(Clone, Debug)]
pub struct HomData {
    pub coords: MapCoords,
    pub cycles: Vec<SparseVec>,
    pub boundaries: Vec<SparseVec>,
}

impl HomData {
    /// Dimension of the morphism space in the homotopy category.
    pub fn dim_homotopy(&self) -> usize {
        self.cycles.len() - self.boundaries.len()
    }
}

pub fn chain_maps(alg: &Algebra, c: &ProjComplex, d: &ProjComplex) -> HomData {
    let field = alg.field;
    let coords = MapCoords::new(alg, c, d, 0);
    // columns of the commutation system: variable -> [(equation, coefficient)]
    let mut eq_index: HashMap<(i64, usize, usize, usize), usize> = HashMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    let mut add = |eq: (i64, usize, usize, usize), var: usize, s: Scalar, rows: &mut Vec<SparseVec>| {
        let n = eq_index.len();
        let e = *eq_index.entry(eq).or_insert(n);
        if e == rows.len() {
            rows.push(Vec::new());
        }
        rows[e] = axpy(&rows[e], &s, &vec![(var, field.one())]);
    };
    for (var, &(deg, r, col, b)) in coords.vars.iter().enumerate() {
        let cls = alg.class(b);
        // δ_C^{deg-1} f^{deg}: contributes to equation (deg-1, r0, col)
        if let Some(dc) = c.diff_ref(deg - 1) {
            for r0 in 0..dc.rows {
                let x = alg.mul(dc.get(r0, r), &cls);
                for (o, s) in x {
                    add((deg - 1, r0, col, o), var, s, &mut rows);
                }
            }
        }
        // - f^{deg} δ_D^{deg}: contributes to equation (deg, r, c2)
        if let Some(dd) = d.diff_ref(deg) {
            for c2 in 0..dd.cols {
                let x = alg.mul(&cls, dd.get(col, c2));
                for (o, s) in x {
                    add((deg, r, c2, o), var, -&s, &mut rows);
                }
            }
        }
    }
    let cycles = kernel(field, &rows, coords.len());

    // images of the basis homotopies h: C^deg -> D^{deg-1}
    let hc = MapCoords::new(alg, c, d, -1);
    let mut bnd = Echelon::new(field);
    for &(deg, r, col, b) in &hc.vars {
        let cls = alg.class(b);
        let mut img: SparseVec = Vec::new();
        // δ_C^{deg-1} h^{deg} lands in f^{deg-1}
        if let Some(dc) = c.diff_ref(deg - 1) {
            for r0 in 0..dc.rows {
                let x = alg.mul(dc.get(r0, r), &cls);
                if !x.is_empty() {
                    img = axpy(&img, &field.one(), &coords.elem_vec(deg - 1, r0, col, &x));
                }
            }
        }
        // h^{deg} δ_D^{deg-1} lands in f^{deg}
        if let Some(dd) = d.diff_ref(deg - 1) {
            for c2 in 0..dd.cols {
                let x = alg.mul(&cls, dd.get(col, c2));
                if !x.is_empty() {
                    img = axpy(&img, &field.one(), &coords.elem_vec(deg, r, c2, &x));
                }
            }
        }
        if !img.is_empty() {
            bnd.insert(&img);
        }
    }
    let boundaries = bnd.basis().cloned().collect();
    HomData {
        coords,
        cycles,
        boundaries,
    }
}

/// True when `f: C -> D` is null-homotopic.
pub fn is_null_homotopic(alg: &Algebra, c: &ProjComplex, d: &ProjComplex, f: &ChainMap) -> bool {
    let h = chain_maps(alg, c, d);
    let mut e = Echelon::new(alg.field);
    for b in &h.boundaries {
        e.insert(b);
    }
    e.contains(&h.coords.from_map(f))
}

/// Strict endomorphisms modulo null-homotopic ones, with multiplication
/// "first then second".
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub hom: HomData,
    /// Cycles representing a basis of the quotient.
    pub reps: Vec<SparseVec>,
    pub algebra: FinAlgebra,
}

pub fn end_algebra(alg: &Algebra, c: &ProjComplex) -> EndAlgebra {
    let field = alg.field;
    let hom = chain_maps(alg, c, c);
    let mut ech = Echelon::tracking(field);
    for b in &hom.boundaries {
        ech.insert(b);
    }
    let nb = hom.boundaries.len();
    let mut reps = Vec::new();
    for z in &hom.cycles {
        if !ech.contains(z) {
            ech.insert(z);
            reps.push(z.clone());
        }
    }
    let maps: Vec<ChainMap> = reps.iter().map(|z| hom.coords.to_map(alg, z, c, c)).collect();
    let n = reps.len();
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = maps[i].then(&maps[j], alg, c, c, c);
            let v = hom.coords.from_map(&prod);
            let coords = ech.coordinates(&v).expect("composite of chain maps is a chain map");
            table[i][j] = coords
                .into_iter()
                .filter(|(g, _)| *g >= nb)
                .map(|(g, s)| (g - nb, s))
                .collect();
        }
    }
    EndAlgebra {
        hom,
        reps,
        algebra: FinAlgebra::new(field, table),
    }
}

/// Indecomposable in the homotopy category: the endomorphism ring modulo
/// its radical is one-dimensional.
pub fn is_indecomposable(alg: &Algebra, c: &ProjComplex) -> Result<bool, HomalgError> {
    let m = minimal_form(alg, c).complex;
    if m.is_zero() {
        return Ok(false);
    }
    Ok(end_algebra(alg, &m).algebra.semisimple_dim()? == 1)
}

fn random_scalar(alg: &Algebra, rng: &mut ChaCha8Rng) -> Scalar {
    let mut x = 0;
    while x == 0 {
        x = rng.gen_range(-9..=9);
    }
    alg.field.from_i64(x)
}

fn random_combination(alg: &Algebra, basis: &[SparseVec], rng: &mut ChaCha8Rng) -> SparseVec {
    let mut v = Vec::new();
    for b in basis {
        v = axpy(&v, &random_scalar(alg, rng), b);
    }
    v
}

/// Complement of `s` in `c` when `s` is a summand in the homotopy category.
///
/// Both complexes must be minimal. The result is minimal and `c` is
/// isomorphic, as a complex, to `s ⊕ result`.
pub fn split_off(alg: &Algebra, c: &ProjComplex, s: &ProjComplex, seed: u64) -> Option<ProjComplex> {
    if s.is_zero() {
        return Some(c.clone());
    }
    if c.is_zero() {
        return None;
    }
    let into = chain_maps(alg, s, c);
    let back = chain_maps(alg, c, s);
    if into.cycles.is_empty() || back.cycles.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(SparseVec, SparseVec)> = Vec::new();
    for a in into.cycles.iter().take(8) {
        for b in back.cycles.iter().take(8) {
            candidates.push((a.clone(), b.clone()));
        }
    }
    for _ in 0..RANDOM_TRIES {
        candidates.push((
            random_combination(alg, &into.cycles, &mut rng),
            random_combination(alg, &back.cycles, &mut rng),
        ));
    }
    for (a, b) in candidates {
        let i = into.coords.to_map(alg, &a, s, c);
        let r = back.coords.to_map(alg, &b, c, s);
        let u = i.then(&r, alg, s, c, s);
        if !u.is_isomorphism(alg, s, s) {
            continue;
        }
        // r' = r u^{-1} makes i r' the identity of s
        let mut u_inv = ChainMap::default();
        for d in s.degrees() {
            let m = u.comp(d, s, s).inverse(alg, s.term(d))?;
            u_inv.comps.insert(d, m);
        }
        let r2 = r.then(&u_inv, alg, c, s, s);
        let e = r2.then(&i, alg, c, s, c);
        return Some(idempotent_complement(alg, c, &e));
    }
    None
}

/// The image of `1 - e` for a strict idempotent chain endomorphism `e`.
fn idempotent_complement(alg: &Algebra, c: &ProjComplex, e: &ChainMap) -> ProjComplex {
    let field = alg.field;
    let mut incl: Vec<(i64, ElemMat, ElemMat, Vec<usize>)> = Vec::new();
    for d in c.degrees() {
        let t = c.term(d);
        let n = t.len();
        let id = ElemMat::identity(alg, t);
        let proj = id.sub(&e.comp(d, c, c), alg);
        // rows with independent tops span the image
        let top = proj.top(alg, t, t);
        let mut ech = Echelon::new(field);
        let mut rows_kept = Vec::new();
        for r in 0..n {
            let row = crate::linalg::sparse_from_dense(top.row(r));
            if !row.is_empty() && !ech.contains(&row) {
                ech.insert(&row);
                rows_kept.push(r);
            }
        }
        let iota = proj.select(&rows_kept, &(0..n).collect::<Vec<_>>());
        let verts: Vec<usize> = rows_kept.iter().map(|&r| t[r]).collect();
        // columns where iota restricts to an invertible square
        let itop = iota.top(alg, &verts, t);
        let mut cech = Echelon::new(field);
        let mut cols_kept = Vec::new();
        for col in 0..n {
            let column = crate::linalg::sparse_from_dense(&itop.column(col));
            if !column.is_empty() && !cech.contains(&column) {
                cech.insert(&column);
                cols_kept.push(col);
            }
        }
        let square = iota.select(&(0..rows_kept.len()).collect::<Vec<_>>(), &cols_kept);
        let col_verts: Vec<usize> = cols_kept.iter().map(|&k| t[k]).collect();
        let sq_inv = square
            .inverse_between(alg, &verts, &col_verts)
            .expect("image of an idempotent is free on the chosen rows");
        let mut x = ElemMat::zeros(n, rows_kept.len());
        for (s_idx, &col) in cols_kept.iter().enumerate() {
            for t2 in 0..rows_kept.len() {
                x.set(col, t2, sq_inv.get(s_idx, t2).clone());
            }
        }
        let pi = proj.mul(&x, alg);
        incl.push((d, iota, pi, verts));
    }
    let low = c.low;
    let terms: Vec<Vec<usize>> = incl.iter().map(|(_, _, _, v)| v.clone()).collect();
    let diffs: Vec<ElemMat> = (0..incl.len().saturating_sub(1))
        .map(|k| {
            let (d, iota, _, _) = &incl[k];
            let (_, _, pi_next, _) = &incl[k + 1];
            iota.mul(&c.diff(*d), alg).mul(pi_next, alg)
        })
        .collect();
    ProjComplex::new(low, terms, diffs)
}

/// An isomorphism of complexes `c -> d` built from chain maps, if one is found.
pub fn find_isomorphism(alg: &Algebra, c: &ProjComplex, d: &ProjComplex, seed: u64) -> Option<ChainMap> {
    if c.term_multisets() != d.term_multisets() {
        return None;
    }
    if c.is_zero() {
        return Some(ChainMap::default());
    }
    let h = chain_maps(alg, c, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<SparseVec> = h.cycles.clone();
    for _ in 0..RANDOM_TRIES {
        candidates.push(random_combination(alg, &h.cycles, &mut rng));
    }
    candidates
        .into_iter()
        .map(|v| h.coords.to_map(alg, &v, c, d))
        .find(|f| f.is_isomorphism(alg, c, d))
}

/// Homotopy equivalence, decided by comparing minimal forms up to isomorphism.
pub fn homotopy_equivalent(alg: &Algebra, c: &ProjComplex, d: &ProjComplex, seed: u64) -> bool {
    let mc = minimal_form(alg, c).complex;
    let md = minimal_form(alg, d).complex;
    find_isomorphism(alg, &mc, &md, seed).is_some()
}
