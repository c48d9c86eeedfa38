//! Gaussian elimination of invertible differential entries.

use super::complex::{ChainMap, ProjComplex};
use super::elemmat::ElemMat;
use crate::pathalg::Algebra;

/// Result of [`minimal_form`]: the minimal complex and maps `to: C -> M`,
/// `from: M -> C` whose composites are homotopic to the identities.
#[derive(Clone, Debug)]
pub struct MinimalForm {
    pub complex: ProjComplex,
    pub to: ChainMap,
    pub from: ChainMap,
}

fn find_unit(alg: &Algebra, c: &ProjComplex) -> Option<(usize, usize, usize)> {
    for (k, d) in c.diffs.iter().enumerate() {
        for i in 0..d.rows {
            for j in 0..d.cols {
                let v = c.terms[k][i];
                if v == c.terms[k + 1][j] && !alg.unit_coefficient(d.get(i, j), v).is_zero() {
                    return Some((k, i, j));
                }
            }
        }
    }
    None
}

fn selection(n: usize, keep: &[usize], alg: &Algebra, vertices: &[usize]) -> ElemMat {
    // n x keep.len(), row keep[t] -> column t
    let mut m = ElemMat::zeros(n, keep.len());
    for (t, &r) in keep.iter().enumerate() {
        m.set(r, t, alg.unit(vertices[r]));
    }
    m
}

/// Removes one contractible summand `P_v -φ-> P_v` with `φ` invertible.
fn eliminate(alg: &Algebra, c: &ProjComplex, k: usize, i: usize, j: usize) -> (ProjComplex, ChainMap, ChainMap) {
    let d = c.low + k as i64;
    let v = c.terms[k][i];
    let delta = &c.diffs[k];
    let phi_inv = alg
        .local_inverse(delta.get(i, j), v)
        .expect("unit entry is invertible");
    let rest_d: Vec<usize> = (0..c.terms[k].len()).filter(|&x| x != i).collect();
    let rest_d1: Vec<usize> = (0..c.terms[k + 1].len()).filter(|&x| x != j).collect();
    let mut pinv = ElemMat::zeros(1, 1);
    pinv.set(0, 0, phi_inv);
    let beta = delta.select(&[i], &rest_d1);
    let gamma = delta.select(&rest_d, &[j]);
    let eps = delta.select(&rest_d, &rest_d1);
    let pinv_beta = pinv.mul(&beta, alg);
    let gamma_pinv = gamma.mul(&pinv, alg);

    let mut terms = c.terms.clone();
    let mut diffs = c.diffs.clone();
    let vk: Vec<usize> = rest_d.iter().map(|&x| c.terms[k][x]).collect();
    let vk1: Vec<usize> = rest_d1.iter().map(|&x| c.terms[k + 1][x]).collect();
    diffs[k] = eps.sub(&gamma.mul(&pinv_beta, alg), alg);
    if k >= 1 {
        let prev = &c.diffs[k - 1];
        diffs[k - 1] = prev.select(&(0..prev.rows).collect::<Vec<_>>(), &rest_d);
    }
    if k + 1 < c.diffs.len() {
        let next = &c.diffs[k + 1];
        diffs[k + 1] = next.select(&rest_d1, &(0..next.cols).collect::<Vec<_>>());
    }
    terms[k] = vk.clone();
    terms[k + 1] = vk1.clone();

    let mut to = ChainMap::identity(c, alg);
    let mut from = ChainMap::identity(c, alg);
    to.comps.insert(d, selection(c.terms[k].len(), &rest_d, alg, &c.terms[k]));
    let mut f1 = selection(c.terms[k + 1].len(), &rest_d1, alg, &c.terms[k + 1]);
    let neg = pinv_beta.neg(alg);
    for t in 0..rest_d1.len() {
        f1.set(j, t, neg.get(0, t).clone());
    }
    to.comps.insert(d + 1, f1);

    let mut g0 = ElemMat::zeros(rest_d.len(), c.terms[k].len());
    let neg_gp = gamma_pinv.neg(alg);
    for (t, &r) in rest_d.iter().enumerate() {
        g0.set(t, r, alg.unit(c.terms[k][r]));
        g0.set(t, i, neg_gp.get(t, 0).clone());
    }
    from.comps.insert(d, g0);
    let mut g1 = ElemMat::zeros(rest_d1.len(), c.terms[k + 1].len());
    for (t, &r) in rest_d1.iter().enumerate() {
        g1.set(t, r, alg.unit(c.terms[k + 1][r]));
    }
    from.comps.insert(d + 1, g1);

    let out = ProjComplex::new(c.low, terms, diffs);
    // drop components in degrees that were trimmed away
    to.comps.retain(|deg, _| !out.term(*deg).is_empty());
    from.comps.retain(|deg, _| !out.term(*deg).is_empty());
    (out, to, from)
}

/// Homotopy-equivalent minimal complex, by repeated elimination of
/// invertible entries.
pub fn minimal_form(alg: &Algebra, c: &ProjComplex) -> MinimalForm {
    let mut cur = c.clone();
    let mut to = ChainMap::identity(c, alg);
    let mut from = ChainMap::identity(c, alg);
    while let Some((k, i, j)) = find_unit(alg, &cur) {
        let (next, f, g) = eliminate(alg, &cur, k, i, j);
        to = to.then(&f, alg, c, &cur, &next);
        from = g.then(&from, alg, &next, &cur, c);
        cur = next;
    }
    MinimalForm {
        complex: cur,
        to,
        from,
    }
}
