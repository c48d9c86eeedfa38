//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use biserial::pathalg::{Presentation, Relation};

const P: i64 = 1_000_000_007;

fn pow(mut b: i64, mut e: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank of integer rows modulo a large prime, by plain elimination.
fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = pow(rows[rank][col], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..ncols {
                    rows[r][c] = (rows[r][c] - f * rows[rank][c]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every path of the quiver with at most `max_len` arrows, as (start, arrows).
fn all_paths(pres: &Presentation, max_len: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out: Vec<(usize, Vec<usize>)> = (0..pres.vertices.len()).map(|v| (v, Vec::new())).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, arrows) in &frontier {
            let end = arrows.last().map_or(*s, |&a| pres.arrows[a].target);
            for (a, arr) in pres.arrows.iter().enumerate() {
                if arr.source == end {
                    let mut w = arrows.clone();
                    w.push(a);
                    next.push((*s, w));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Dimensions of `1_a (kQ / (I + J^{m+1})) 1_b`, keyed by `(a, b)`: the ideal
/// is spanned by `u r v` for paths `u`, `v` and relations `r`, truncated above
/// length `m`.
pub fn truncated_block_dims(pres: &Presentation, m: usize) -> HashMap<(usize, usize), usize> {
    let paths = all_paths(pres, m);
    let index: HashMap<(usize, Vec<usize>), usize> =
        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let end = |p: &(usize, Vec<usize>)| p.1.last().map_or(p.0, |&a| pres.arrows[a].target);
    let mut rows: HashMap<(usize, usize), Vec<Vec<i64>>> = HashMap::new();
    for rel in &pres.relations {
        let terms: Vec<(&biserial::pathalg::Path, i64)> = match rel {
            Relation::Monomial(p) => vec![(p, 1)],
            Relation::Binomial(p, q) => vec![(p, 1), (q, -1)],
        };
        let rs = terms[0].0.start;
        let rt = {
            let p = terms[0].0;
            p.arrows.last().map_or(p.start, |&a| pres.arrows[a].target)
        };
        for u in paths.iter().filter(|u| end(u) == rs) {
            for v in paths.iter().filter(|v| v.0 == rt) {
                let mut row = vec![0i64; paths.len()];
                let mut any = false;
                for (p, c) in &terms {
                    let mut w = u.1.clone();
                    w.extend_from_slice(&p.arrows);
                    w.extend_from_slice(&v.1);
                    if w.len() <= m {
                        let i = index[&(u.0, w)];
                        row[i] = (row[i] + c).rem_euclid(P);
                        any = true;
                    }
                }
                if any {
                    rows.entry((u.0, end(v))).or_default().push(row);
                }
            }
        }
    }
    let mut out = HashMap::new();
    for p in &paths {
        *out.entry((p.0, end(p))).or_insert(0) += 1;
    }
    for (block, rs) in rows {
        *out.get_mut(&block).unwrap() -= rank_mod_p(rs);
    }
    out
}

/// `1_a Λ 1_b` dimensions once two further truncation levels leave them unchanged.
pub fn brute_force_blocks(pres: &Presentation) -> HashMap<(usize, usize), usize> {
    let mut prev = truncated_block_dims(pres, 1);
    let mut stable = 0;
    for m in 2..12 {
        let d = truncated_block_dims(pres, m);
        stable = if d == prev { stable + 1 } else { 0 };
        if stable == 2 {
            return d;
        }
        prev = d;
    }
    panic!("quotient dimension did not stabilise");
}

/// Dimension of the algebra by brute-force ideal closure.
pub fn brute_force_dim(pres: &Presentation) -> usize {
    brute_force_blocks(pres).values().sum()
}
