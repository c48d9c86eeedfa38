//! Bounded complexes of projectives and chain maps between them.

use std::collections::BTreeMap;

use super::elemmat::ElemMat;
use crate::pathalg::Algebra;

/// A bounded complex `... -> C^d -> C^{d+1} -> ...` of sums of the `P_v`.
///
/// `terms[k]` lists the summands of the term in degree `low + k`, and
/// `diffs[k]` is the differential from that term to the next one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    pub low: i64,
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<ElemMat>,
}

impl ProjComplex {
    pub fn zero() -> Self {
        ProjComplex {
            low: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    pub fn stalk(v: usize, degree: i64) -> Self {
        ProjComplex {
            low: degree,
            terms: vec![vec![v]],
            diffs: Vec::new(),
        }
    }

    /// Builds a complex and trims zero terms at both ends.
    pub fn new(low: i64, terms: Vec<Vec<usize>>, diffs: Vec<ElemMat>) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1), "one differential between consecutive terms");
        for (k, d) in diffs.iter().enumerate() {
            assert_eq!((d.rows, d.cols), (terms[k].len(), terms[k + 1].len()), "differential shape");
        }
        let mut c = ProjComplex { low, terms, diffs };
        c.trim();
        c
    }

    fn trim(&mut self) {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.low += 1;
        }
        if self.terms.is_empty() {
            self.low = 0;
            self.diffs.clear();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree with a term (meaningless for the zero complex).
    pub fn high(&self) -> i64 {
        self.low + self.terms.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        if self.is_zero() {
            #[allow(clippy::reversed_empty_ranges)]
            return 1..=0;
        }
        self.low..=self.high()
    }

    pub fn term(&self, d: i64) -> &[usize] {
        let k = d - self.low;
        if k < 0 || k >= self.terms.len() as i64 {
            return &[];
        }
        &self.terms[k as usize]
    }

    /// Differential `C^d -> C^{d+1}` (a zero matrix outside the support).
    pub fn diff(&self, d: i64) -> ElemMat {
        let k = d - self.low;
        if k >= 0 && (k as usize) < self.diffs.len() {
            return self.diffs[k as usize].clone();
        }
        ElemMat::zeros(self.term(d).len(), self.term(d + 1).len())
    }

    pub fn diff_ref(&self, d: i64) -> Option<&ElemMat> {
        let k = d - self.low;
        (k >= 0 && (k as usize) < self.diffs.len()).then(|| &self.diffs[k as usize])
    }

    /// Number of degrees with a nonzero term.
    pub fn length(&self) -> usize {
        self.terms.iter().filter(|t| !t.is_empty()).count()
    }

    pub fn num_summands(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// `T^m`: the term in degree `d` is the old term in degree `d + m`, and
    /// the differential changes sign once per single shift.
    pub fn shift(&self, m: i64, alg: &Algebra) -> ProjComplex {
        let mut c = self.clone();
        if c.is_zero() {
            return c;
        }
        c.low -= m;
        if m % 2 != 0 {
            c.diffs = c.diffs.iter().map(|d| d.neg(alg)).collect();
        }
        c
    }

    /// Same terms with every differential negated.
    pub fn negate(&self, alg: &Algebra) -> ProjComplex {
        let mut c = self.clone();
        c.diffs = c.diffs.iter().map(|d| d.neg(alg)).collect();
        c
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let terms: Vec<Vec<usize>> = (low..=high)
            .map(|d| [self.term(d), other.term(d)].concat())
            .collect();
        let diffs = (low..high)
            .map(|d| {
                let a = self.diff(d);
                let b = other.diff(d);
                ElemMat::block(
                    &a,
                    &ElemMat::zeros(a.rows, b.cols),
                    &ElemMat::zeros(b.rows, a.cols),
                    &b,
                )
            })
            .collect();
        ProjComplex::new(low, terms, diffs)
    }

    /// `δ^d δ^{d+1} = 0` in every degree.
    pub fn check_d2(&self, alg: &Algebra) -> bool {
        self.diffs
            .windows(2)
            .all(|w| w[0].mul(&w[1], alg).is_zero())
    }

    /// Every differential entry lies in the radical.
    pub fn is_minimal(&self, alg: &Algebra) -> bool {
        self.diffs.iter().all(|d| d.is_radical(alg))
    }

    /// Total dimension of the term in degree `d`.
    pub fn term_dim(&self, alg: &Algebra, d: i64) -> usize {
        self.term(d).iter().map(|&v| alg.projective_basis(v).len()).sum()
    }

    /// Per-degree sorted summand lists, for comparing term multisets.
    pub fn term_multisets(&self) -> BTreeMap<i64, Vec<usize>> {
        self.degrees()
            .map(|d| {
                let mut t = self.term(d).to_vec();
                t.sort();
                (d, t)
            })
            .filter(|(_, t)| !t.is_empty())
            .collect()
    }

    /// `P0 | P0+P1 | P2` style summary, lowest degree first.
    pub fn describe(&self, alg: &Algebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.degrees()
            .map(|d| {
                let t = self.term(d);
                if t.is_empty() {
                    "0".to_string()
                } else {
                    t.iter()
                        .map(|&v| format!("P{}", alg.pres.vertices[v]))
                        .collect::<Vec<_>>()
                        .join("+")
                }
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

/// A degree-preserving map of complexes, one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChainMap {
    pub comps: BTreeMap<i64, ElemMat>,
}

impl ChainMap {
    /// Component in degree `d`, zero when absent.
    pub fn comp(&self, d: i64, src: &ProjComplex, tgt: &ProjComplex) -> ElemMat {
        self.comps
            .get(&d)
            .cloned()
            .unwrap_or_else(|| ElemMat::zeros(src.term(d).len(), tgt.term(d).len()))
    }

    pub fn identity(c: &ProjComplex, alg: &Algebra) -> ChainMap {
        ChainMap {
            comps: c
                .degrees()
                .map(|d| (d, ElemMat::identity(alg, c.term(d))))
                .collect(),
        }
    }

    /// `self` then `g`.
    pub fn then(&self, g: &ChainMap, alg: &Algebra, a: &ProjComplex, b: &ProjComplex, c: &ProjComplex) -> ChainMap {
        let mut comps = BTreeMap::new();
        for d in a.degrees() {
            if c.term(d).is_empty() {
                continue;
            }
            let m = self.comp(d, a, b).mul(&g.comp(d, b, c), alg);
            comps.insert(d, m);
        }
        ChainMap { comps }
    }

    pub fn add(&self, other: &ChainMap, alg: &Algebra, a: &ProjComplex, b: &ProjComplex) -> ChainMap {
        let mut comps = BTreeMap::new();
        for d in a.degrees() {
            if b.term(d).is_empty() {
                continue;
            }
            comps.insert(d, self.comp(d, a, b).add(&other.comp(d, a, b), alg));
        }
        ChainMap { comps }
    }

    pub fn scaled(&self, c: &crate::field::Scalar, alg: &Algebra) -> ChainMap {
        ChainMap {
            comps: self.comps.iter().map(|(d, m)| (*d, m.scaled(c, alg))).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|m| m.is_zero())
    }

    /// `δ_C^d f^{d+1} = f^d δ_D^d` for every degree.
    pub fn is_chain_map(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> bool {
        let lo = src.low.min(tgt.low) - 1;
        let hi = src.high().max(tgt.high()) + 1;
        if src.is_zero() || tgt.is_zero() {
            return true;
        }
        (lo..=hi).all(|d| {
            let l = src.diff(d).mul(&self.comp(d + 1, src, tgt), alg);
            let r = self.comp(d, src, tgt).mul(&tgt.diff(d), alg);
            l == r
        })
    }

    /// True when every component is invertible (an isomorphism of complexes).
    pub fn is_isomorphism(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> bool {
        if src.term_multisets().len() != tgt.term_multisets().len() {
            return false;
        }
        src.degrees().chain(tgt.degrees()).all(|d| {
            let (a, b) = (src.term(d), tgt.term(d));
            if a.len() != b.len() {
                return false;
            }
            if a.is_empty() {
                return true;
            }
            let top = self.comp(d, src, tgt).top(alg, a, b);
            top.rank(alg.field) == a.len()
        })
    }
}

/// Mapping cone of `f: X -> Y`: degree `d` holds `X^{d+1} ⊕ Y^d` with
/// differential `[[-δ_X, f], [0, δ_Y]]` in the row convention.
pub fn cone(alg: &Algebra, f: &ChainMap, x: &ProjComplex, y: &ProjComplex) -> ProjComplex {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.shift(1, alg);
    }
    let low = (x.low - 1).min(y.low);
    let high = (x.high() - 1).max(y.high());
    let terms: Vec<Vec<usize>> = (low..=high)
        .map(|d| [x.term(d + 1), y.term(d)].concat())
        .collect();
    let diffs = (low..high)
        .map(|d| {
            let dx = x.diff(d + 1).neg(alg);
            let fd = f.comp(d + 1, x, y);
            let dy = y.diff(d);
            ElemMat::block(&dx, &fd, &ElemMat::zeros(dy.rows, dx.cols), &dy)
        })
        .collect();
    ProjComplex::new(low, terms, diffs)
}
