//! Finite-dimensional representations of the quiver of an algebra.
//!
//! `maps[α]` is a `dims[s(α)] × dims[t(α)]` matrix: arrows act on the left,
//! sending the space at `t(α)` to the space at `s(α)`. The matrix of a path
//! is the product of its arrow matrices in path order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::ProjComplex;
use super::finalg::FinAlgebra;
use super::HomalgError;
use crate::field::{rational_roots, Field, Scalar};
use crate::linalg::{axpy, kernel, sparse_from_dense, sparse_to_dense, Echelon, Mat, SparseVec};
use crate::pathalg::{Algebra, Path, Presentation, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    pub field: Field,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

/// A morphism of representations: one `dim N_x × dim M_x` matrix per vertex.
pub type RepMap = Vec<Mat>;

/// Subspaces given by spanning column vectors, one list per vertex.
pub type Subspaces = Vec<Vec<Vec<Scalar>>>;

fn mat_vec(m: &Mat, v: &[Scalar], field: Field) -> Vec<Scalar> {
    (0..m.rows)
        .map(|i| (0..m.cols).fold(field.zero(), |acc, j| &acc + &(m.get(i, j) * &v[j])))
        .collect()
}

/// Independent subset of `vs` with the same span.
fn independent(vs: &[Vec<Scalar>], field: Field) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(field);
    vs.iter().filter(|v| e.insert(&sparse_from_dense(v))).cloned().collect()
}

impl QuiverRep {
    pub fn new(field: Field, dims: Vec<usize>, maps: Vec<Mat>) -> Self {
        QuiverRep { field, dims, maps }
    }

    pub fn zero(field: Field, pres: &Presentation) -> Self {
        let dims = vec![0; pres.vertices.len()];
        let maps = pres.arrows.iter().map(|_| Mat::zeros(field, 0, 0)).collect();
        QuiverRep { field, dims, maps }
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn simple(field: Field, pres: &Presentation, v: usize) -> Self {
        let mut dims = vec![0; pres.vertices.len()];
        dims[v] = 1;
        let maps = pres
            .arrows
            .iter()
            .map(|a| Mat::zeros(field, dims[a.source], dims[a.target]))
            .collect();
        QuiverRep { field, dims, maps }
    }

    /// Matrix of a path, `dims[source] × dims[target]`.
    pub fn path_matrix(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.field, self.dims[p.start]);
        for &a in &p.arrows {
            m = m.mul(&self.maps[a], self.field);
        }
        m
    }

    pub fn satisfies_relations(&self, pres: &Presentation) -> bool {
        pres.relations.iter().all(|r| match r {
            Relation::Monomial(p) => self.path_matrix(p).is_zero(),
            Relation::Binomial(p, q) => self.path_matrix(p) == self.path_matrix(q),
        })
    }

    /// Representation of `P_v`: basis the classes ending at `v`, graded by source.
    pub fn projective(alg: &Algebra, v: usize) -> Self {
        Self::from_projectives(alg, &[v])
    }

    fn from_projectives(alg: &Algebra, vs: &[usize]) -> Self {
        let (dims, index) = projective_index(alg, vs);
        let field = alg.field;
        let mut maps: Vec<Mat> = alg
            .pres
            .arrows
            .iter()
            .map(|a| Mat::zeros(field, dims[a.source], dims[a.target]))
            .collect();
        for (a, arrow) in alg.pres.arrows.iter().enumerate() {
            for (r, &v) in vs.iter().enumerate() {
                for b in alg.hom_basis(arrow.target, v) {
                    let j = index[&(r, b)];
                    for (o, s) in alg.mul(alg.arrow(a), &alg.class(b)) {
                        maps[a].set(index[&(r, o)], j, s);
                    }
                }
            }
        }
        QuiverRep { field, dims, maps }
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> QuiverRep {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = Mat::zeros(self.field, a.rows + b.rows, a.cols + b.cols);
                for i in 0..a.rows {
                    for j in 0..a.cols {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        QuiverRep {
            field: self.field,
            dims,
            maps,
        }
    }

    /// Basis of the morphisms `self -> other`.
    pub fn hom(&self, other: &QuiverRep, pres: &Presentation) -> Vec<RepMap> {
        let field = self.field;
        // variable for entry (i, j) of φ_x
        let mut offset = vec![0; self.dims.len() + 1];
        for x in 0..self.dims.len() {
            offset[x + 1] = offset[x] + other.dims[x] * self.dims[x];
        }
        let var = |x: usize, i: usize, j: usize| offset[x] + i * self.dims[x] + j;
        let mut rows: Vec<SparseVec> = Vec::new();
        for (a, arrow) in pres.arrows.iter().enumerate() {
            let (s, t) = (arrow.source, arrow.target);
            let (an, am) = (&other.maps[a], &self.maps[a]);
            // (A^N φ_t - φ_s A^M)[i][j] = 0
            for i in 0..other.dims[s] {
                for j in 0..self.dims[t] {
                    let mut row: SparseVec = Vec::new();
                    for k in 0..other.dims[t] {
                        let c = an.get(i, k);
                        if !c.is_zero() {
                            row = axpy(&row, c, &vec![(var(t, k, j), field.one())]);
                        }
                    }
                    for k in 0..self.dims[s] {
                        let c = am.get(k, j);
                        if !c.is_zero() {
                            row = axpy(&row, &-c, &vec![(var(s, i, k), field.one())]);
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        kernel(field, &rows, offset[self.dims.len()])
            .into_iter()
            .map(|v| {
                let dense = sparse_to_dense(&v, offset[self.dims.len()], field);
                (0..self.dims.len())
                    .map(|x| {
                        let mut m = Mat::zeros(field, other.dims[x], self.dims[x]);
                        for i in 0..other.dims[x] {
                            for j in 0..self.dims[x] {
                                m.set(i, j, dense[var(x, i, j)].clone());
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect()
    }

    /// An isomorphism `self -> other`, searched among basis morphisms and
    /// random combinations.
    pub fn isomorphism(&self, other: &QuiverRep, pres: &Presentation, seed: u64) -> Option<RepMap> {
        if self.dims != other.dims {
            return None;
        }
        if self.dim() == 0 {
            return Some(self.dims.iter().map(|_| Mat::zeros(self.field, 0, 0)).collect());
        }
        let basis = self.hom(other, pres);
        if basis.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let is_iso = |f: &RepMap| f.iter().all(|m| m.rank(self.field) == m.rows);
        for f in &basis {
            if is_iso(f) {
                return Some(f.clone());
            }
        }
        for _ in 0..super::maps::RANDOM_TRIES {
            let f = random_map(&basis, self.field, &mut rng);
            if is_iso(&f) {
                return Some(f);
            }
        }
        None
    }

    pub fn is_isomorphic(&self, other: &QuiverRep, pres: &Presentation, seed: u64) -> bool {
        self.isomorphism(other, pres, seed).is_some()
    }

    /// Subrepresentation on invariant subspaces; `sub[x]` must be independent.
    pub fn restrict(&self, pres: &Presentation, sub: &Subspaces) -> QuiverRep {
        let field = self.field;
        let dims: Vec<usize> = sub.iter().map(|s| s.len()).collect();
        let maps = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut ech = Echelon::tracking(field);
                for v in &sub[arrow.source] {
                    ech.insert(&sparse_from_dense(v));
                }
                let mut m = Mat::zeros(field, dims[arrow.source], dims[arrow.target]);
                for (j, v) in sub[arrow.target].iter().enumerate() {
                    let img = mat_vec(&self.maps[a], v, field);
                    let c = ech
                        .coordinates(&sparse_from_dense(&img))
                        .expect("subspace is invariant");
                    for (i, s) in c {
                        m.set(i, j, s);
                    }
                }
                m
            })
            .collect();
        QuiverRep { field, dims, maps }
    }

    /// Quotient by invariant subspaces, with basis a complement made of
    /// standard vectors.
    pub fn quotient(&self, pres: &Presentation, sub: &Subspaces) -> QuiverRep {
        let field = self.field;
        let mut echs = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for (x, s) in sub.iter().enumerate() {
            let s = independent(s, field);
            let mut ech = Echelon::tracking(field);
            for v in &s {
                ech.insert(&sparse_from_dense(v));
            }
            let mut comp = Vec::new();
            for k in 0..self.dims[x] {
                if ech.insert(&vec![(k, field.one())]) {
                    comp.push(k);
                }
            }
            echs.push((s.len(), ech));
            comps.push(comp);
        }
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let maps = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (ns, ech) = &echs[arrow.source];
                let mut m = Mat::zeros(field, dims[arrow.source], dims[arrow.target]);
                for (j, &k) in comps[arrow.target].iter().enumerate() {
                    let img: Vec<Scalar> = (0..self.dims[arrow.source])
                        .map(|i| self.maps[a].get(i, k).clone())
                        .collect();
                    let c = ech.coordinates(&sparse_from_dense(&img)).expect("full span");
                    for (g, s) in c {
                        if g >= *ns {
                            // generator ns + k is the standard vector k
                            let t = comp_position(&comps[arrow.source], *ns, g);
                            m.set(t, j, s);
                        }
                    }
                }
                m
            })
            .collect();
        QuiverRep { field, dims, maps }
    }

    /// `soc_x`: vectors at `x` killed by every arrow ending at `x`.
    pub fn socle(&self, pres: &Presentation) -> Subspaces {
        (0..self.dims.len())
            .map(|x| {
                let mut rows = Vec::new();
                for (a, arrow) in pres.arrows.iter().enumerate() {
                    if arrow.target == x {
                        for i in 0..self.maps[a].rows {
                            rows.push(sparse_from_dense(self.maps[a].row(i)));
                        }
                    }
                }
                kernel(self.field, &rows, self.dims[x])
                    .iter()
                    .map(|v| sparse_to_dense(v, self.dims[x], self.field))
                    .collect()
            })
            .collect()
    }

    /// Image of a morphism `self -> other`, as subspaces of `other`.
    pub fn image(&self, f: &RepMap) -> Subspaces {
        f.iter()
            .map(|m| {
                let cols: Vec<Vec<Scalar>> = (0..m.cols).map(|j| m.column(j)).collect();
                independent(&cols, self.field)
            })
            .collect()
    }

    /// Kernel of a morphism out of `self`, as subspaces of `self`.
    pub fn kernel_of(&self, f: &RepMap) -> Subspaces {
        f.iter().map(|m| m.kernel(self.field)).collect()
    }

    /// Cosyzygy `Ω⁻¹`: cokernel of an injective envelope, realised by a
    /// random injective map into a sum of indecomposable projectives. Valid
    /// for self-injective algebras whose `P_x` has simple socle at `x`.
    pub fn omega_inverse(&self, alg: &Algebra, seed: u64) -> Result<QuiverRep, HomalgError> {
        let pres = &alg.pres;
        let soc = self.socle(pres);
        let mut vs = Vec::new();
        for (x, s) in soc.iter().enumerate() {
            vs.extend(std::iter::repeat_n(x, s.len()));
        }
        let inj = QuiverRep::from_projectives(alg, &vs);
        if self.dim() == 0 {
            return Ok(self.clone());
        }
        let basis = self.hom(&inj, pres);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let injective = |f: &RepMap| f.iter().all(|m| m.rank(self.field) == m.cols);
        for _ in 0..super::maps::RANDOM_TRIES {
            let f = random_map(&basis, self.field, &mut rng);
            if injective(&f) {
                return Ok(inj.quotient(pres, &self.image(&f)));
            }
        }
        Err(HomalgError::NoInjectiveExtension)
    }

    fn identity_map(&self) -> RepMap {
        self.dims.iter().map(|&d| Mat::identity(self.field, d)).collect()
    }

    /// Splits into indecomposable summands using Fitting decompositions of
    /// endomorphisms.
    pub fn decompose(&self, pres: &Presentation, seed: u64) -> Result<Vec<QuiverRep>, HomalgError> {
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        let basis = self.hom(self, pres);
        if end_algebra(&basis, self.field).semisimple_dim()? == 1 {
            return Ok(vec![self.clone()]);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut candidates: Vec<RepMap> = basis.clone();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                candidates.push(add_maps(&basis[i], &basis[j], self.field));
            }
        }
        for _ in 0..super::maps::RANDOM_TRIES {
            candidates.push(random_map(&basis, self.field, &mut rng));
        }
        let n = self.dim();
        for x in candidates {
            for lambda in self.eigenvalue_candidates(&x) {
                let psi: RepMap = x
                    .iter()
                    .zip(self.identity_map())
                    .map(|(m, id)| m.sub(&id.scaled(&lambda)))
                    .collect();
                let mut pw = self.identity_map();
                for _ in 0..n {
                    pw = compose(&pw, &psi, self.field);
                }
                let ker = self.kernel_of(&pw);
                let img = self.image(&pw);
                let kd: usize = ker.iter().map(|k| k.len()).sum();
                if kd == 0 || kd == n {
                    continue;
                }
                let mut out = self.restrict(pres, &ker).decompose(pres, rng.gen())?;
                out.extend(self.restrict(pres, &img).decompose(pres, rng.gen())?);
                return Ok(out);
            }
        }
        Err(HomalgError::DecompositionFailed)
    }

    fn eigenvalue_candidates(&self, x: &RepMap) -> Vec<Scalar> {
        let field = self.field;
        match field {
            Field::Rational => {
                // minimal polynomial of the block-diagonal matrix via Krylov
                let flat = |m: &RepMap| -> SparseVec {
                    sparse_from_dense(&m.iter().flat_map(|a| a.data.iter().cloned()).collect::<Vec<_>>())
                };
                let mut ech = Echelon::tracking(field);
                let mut pw = self.identity_map();
                let mut k = 0;
                loop {
                    let v = flat(&pw);
                    if let Some(c) = ech.coordinates(&v) {
                        // x^k = Σ c_i x^i
                        let mut coeffs = vec![field.zero(); k + 1];
                        coeffs[k] = field.one();
                        for (i, s) in c {
                            coeffs[i] = -&s;
                        }
                        return rational_roots(&coeffs);
                    }
                    ech.insert(&v);
                    pw = compose(&pw, x, field);
                    k += 1;
                }
            }
            Field::Prime(_) => (-20..=20).map(|n| field.from_i64(n)).collect(),
        }
    }
}

/// Position of generator `g` among the complement vectors.
fn comp_position(comp: &[usize], ns: usize, g: usize) -> usize {
    let k = g - ns;
    comp.iter().position(|&c| c == k).expect("complement generator")
}

fn projective_index(alg: &Algebra, vs: &[usize]) -> (Vec<usize>, std::collections::HashMap<(usize, usize), usize>) {
    let mut dims = vec![0; alg.num_vertices()];
    let mut index = std::collections::HashMap::new();
    for (r, &v) in vs.iter().enumerate() {
        for b in alg.projective_basis(v) {
            let x = alg.basis[b].source;
            index.insert((r, b), dims[x]);
            dims[x] += 1;
        }
    }
    (dims, index)
}

fn compose(f: &RepMap, g: &RepMap, field: Field) -> RepMap {
    // f then g
    f.iter().zip(g).map(|(a, b)| b.mul(a, field)).collect()
}

fn add_maps(f: &RepMap, g: &RepMap, field: Field) -> RepMap {
    f.iter()
        .zip(g)
        .map(|(a, b)| a.sub(&b.scaled(&field.from_i64(-1))))
        .collect()
}

fn random_map(basis: &[RepMap], field: Field, rng: &mut ChaCha8Rng) -> RepMap {
    let mut out: RepMap = basis[0].iter().map(|m| Mat::zeros(field, m.rows, m.cols)).collect();
    for b in basis {
        let c = field.from_i64(rng.gen_range(-7..=7));
        out = add_maps(&out, &b.iter().map(|m| m.scaled(&c)).collect::<Vec<_>>(), field);
    }
    out
}

fn end_algebra(basis: &[RepMap], field: Field) -> FinAlgebra {
    let flat = |m: &RepMap| -> SparseVec {
        sparse_from_dense(&m.iter().flat_map(|a| a.data.iter().cloned()).collect::<Vec<_>>())
    };
    let mut ech = Echelon::tracking(field);
    for b in basis {
        ech.insert(&flat(b));
    }
    let table = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| ech.coordinates(&flat(&compose(a, b, field))).expect("closed under composition"))
                .collect()
        })
        .collect();
    FinAlgebra::new(field, table)
}

/// Cohomology representations `H^d(C)` in every degree where they are nonzero.
pub fn cohomology(alg: &Algebra, c: &ProjComplex) -> Vec<(i64, QuiverRep)> {
    let pres = &alg.pres;
    let field = alg.field;
    let mut out = Vec::new();
    for d in c.degrees() {
        let term = QuiverRep::from_projectives(alg, c.term(d));
        let z = match c.diff_ref(d) {
            Some(delta) => term.kernel_of(&differential_map(alg, c.term(d), c.term(d + 1), delta)),
            None => term.dims.iter().map(|&n| (0..n).map(|k| unit(field, n, k)).collect()).collect(),
        };
        let b: Subspaces = match c.diff_ref(d - 1) {
            Some(delta) => {
                let prev = QuiverRep::from_projectives(alg, c.term(d - 1));
                prev.image(&differential_map(alg, c.term(d - 1), c.term(d), delta))
            }
            None => term.dims.iter().map(|_| Vec::new()).collect(),
        };
        let zrep = term.restrict(pres, &z);
        // boundaries in the coordinates of the cycles
        let bz: Subspaces = z
            .iter()
            .zip(&b)
            .map(|(zs, bs)| {
                let mut ech = Echelon::tracking(field);
                for v in zs {
                    ech.insert(&sparse_from_dense(v));
                }
                bs.iter()
                    .map(|v| {
                        let c = ech.coordinates(&sparse_from_dense(v)).expect("boundary is a cycle");
                        sparse_to_dense(&c, zs.len(), field)
                    })
                    .collect()
            })
            .collect();
        let h = zrep.quotient(pres, &bz);
        if h.dim() > 0 {
            out.push((d, h));
        }
    }
    out
}

fn unit(field: Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

/// Per-vertex matrices of the map of representations induced by a
/// differential `⊕ P_{v_r} -> ⊕ P_{u_c}`.
fn differential_map(alg: &Algebra, src: &[usize], tgt: &[usize], delta: &super::ElemMat) -> RepMap {
    let field = alg.field;
    let (sd, si) = projective_index(alg, src);
    let (td, ti) = projective_index(alg, tgt);
    let mut maps: RepMap = sd.iter().zip(&td).map(|(&a, &b)| Mat::zeros(field, b, a)).collect();
    for (r, &v) in src.iter().enumerate() {
        for b in alg.projective_basis(v) {
            let x = alg.basis[b].source;
            let j = si[&(r, b)];
            for (col, _) in tgt.iter().enumerate() {
                for (o, s) in alg.mul(&alg.class(b), delta.get(r, col)) {
                    let i = ti[&(col, o)];
                    let cur = maps[x].get(i, j).clone();
                    maps[x].set(i, j, &cur + &s);
                }
            }
        }
    }
    maps
}

/// Dimension vector of a representation as a tuple-like string.
pub fn dim_vector(rep: &QuiverRep) -> String {
    let parts: Vec<String> = rep.dims.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Basis vectors spanning all of each space.
pub fn whole(rep: &QuiverRep) -> Subspaces {
    rep.dims
        .iter()
        .map(|&n| (0..n).map(|k| unit(rep.field, n, k)).collect())
        .collect()
}
