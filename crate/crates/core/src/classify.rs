//! Structural classes of a presentation: special biserial, condition (C),
//! symmetric, the associated string algebra and membership in class C.

use serde::Serialize;

use crate::field::Scalar;
use crate::linalg::Mat;
use crate::pathalg::{Algebra, BuildError, Elem, Path, Presentation, Relation};

/// A concrete counterexample for a failed flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub flag: String,
    pub kind: String,
    pub item: String,
    pub reason: String,
}

impl Witness {
    fn new(flag: &str, kind: &str, item: impl Into<String>, reason: impl Into<String>) -> Self {
        Witness {
            flag: flag.into(),
            kind: kind.into(),
            item: item.into(),
            reason: reason.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub special_biserial: bool,
    pub condition_c: bool,
    pub symmetric: bool,
    pub class_c: bool,
    pub witnesses: Vec<Witness>,
    pub string_quotient: Option<String>,
    pub zero_ideal: Vec<String>,
    pub zero_ideal_reading: String,
}

pub fn classify(pres: &Presentation, strict: bool) -> Result<ClassificationReport, BuildError> {
    let alg = Algebra::build(pres)?;
    let mut witnesses = Vec::new();
    let (sb, w) = check_special_biserial(&alg);
    witnesses.extend(w);
    let (cc, w) = check_condition_c(pres, strict);
    witnesses.extend(w);
    let sym = check_symmetric(&alg);
    witnesses.extend(sym.witness.clone());
    let (class_c, w) = check_class_c(pres)?;
    // class_c failures caused by a prerequisite are already witnessed above
    witnesses.extend(w.filter(|w| w.kind != "prerequisite"));
    Ok(ClassificationReport {
        special_biserial: sb,
        condition_c: cc,
        symmetric: sym.symmetric,
        class_c,
        witnesses,
        string_quotient: string_quotient(pres).ok().map(|p| p.to_text()),
        zero_ideal: ZeroIdeal::new(pres)
            .generators
            .iter()
            .map(|p| pres.word(p))
            .collect(),
        zero_ideal_reading: "ideal generated by the monomial relations; membership by consecutive subword".into(),
    })
}

/// (SB1): at most two arrows start and at most two end at each vertex.
/// (SB2): for each arrow at most one arrow extends it nontrivially on each side.
pub fn check_special_biserial(alg: &Algebra) -> (bool, Option<Witness>) {
    let pres = &alg.pres;
    for (v, label) in pres.vertices.iter().enumerate() {
        let out = pres.arrows.iter().filter(|a| a.source == v).count();
        let inc = pres.arrows.iter().filter(|a| a.target == v).count();
        if out > 2 {
            return (false, Some(Witness::new("special_biserial", "vertex", label, format!("{out} arrows start here (SB1)"))));
        }
        if inc > 2 {
            return (false, Some(Witness::new("special_biserial", "vertex", label, format!("{inc} arrows end here (SB1)"))));
        }
    }
    let n = pres.arrows.len();
    for a in 0..n {
        let after = (0..n).filter(|&b| !alg.mul(alg.arrow(a), alg.arrow(b)).is_empty()).count();
        let before = (0..n).filter(|&b| !alg.mul(alg.arrow(b), alg.arrow(a)).is_empty()).count();
        if after > 1 || before > 1 {
            let side = if after > 1 { "after" } else { "before" };
            return (
                false,
                Some(Witness::new(
                    "special_biserial",
                    "arrow",
                    &pres.arrows[a].label,
                    format!("{} arrows compose nontrivially {side} it (SB2)", after.max(before)),
                )),
            );
        }
    }
    (true, None)
}

/// Every generator is a length-2 monomial or a binomial of two paths of
/// length at least 2. Strict mode also rejects generators implied by the others.
pub fn check_condition_c(pres: &Presentation, strict: bool) -> (bool, Option<Witness>) {
    for (i, r) in pres.relations.iter().enumerate() {
        let bad = match r {
            Relation::Monomial(p) => p.len() != 2,
            Relation::Binomial(p, q) => p.len() < 2 || q.len() < 2,
        };
        if bad {
            let item = match r {
                Relation::Monomial(p) => pres.word(p),
                Relation::Binomial(p, q) => format!("{} - {}", pres.word(p), pres.word(q)),
            };
            return (false, Some(Witness::new("condition_c", "relation", item, format!("generator {i} has the wrong shape"))));
        }
    }
    if strict {
        for i in 0..pres.relations.len() {
            let mut others = pres.clone();
            others.relations.remove(i);
            let Ok(alg) = Algebra::build_unchecked(&others) else {
                continue;
            };
            let implied = match &pres.relations[i] {
                Relation::Monomial(p) => alg.reduce(p).is_empty(),
                Relation::Binomial(p, q) => alg.reduce(p) == alg.reduce(q),
            };
            if implied {
                return (false, Some(Witness::new("condition_c", "relation", i.to_string(), "generator lies in the ideal of the others")));
            }
        }
    }
    (true, None)
}

/// The presentation of the associated string algebra: each binomial
/// `p1 - p2` is replaced, in place, by the two monomials `p1` and `p2`.
pub fn string_quotient(pres: &Presentation) -> Result<Presentation, Witness> {
    if let (false, Some(w)) = check_condition_c(pres, false) {
        return Err(w);
    }
    let mut out = pres.clone();
    if !out.name.ends_with("_string") {
        out.name = format!("{}_string", pres.name);
    }
    out.relations = pres
        .relations
        .iter()
        .flat_map(|r| match r {
            Relation::Monomial(p) => vec![Relation::Monomial(p.clone())],
            Relation::Binomial(p, q) => vec![Relation::Monomial(p.clone()), Relation::Monomial(q.clone())],
        })
        .collect();
    Ok(out)
}

/// The monomial ideal generated by the zero relations of the presentation.
#[derive(Clone, Debug)]
pub struct ZeroIdeal {
    pub generators: Vec<Path>,
}

impl ZeroIdeal {
    pub fn new(pres: &Presentation) -> Self {
        ZeroIdeal {
            generators: pres.monomials().cloned().collect(),
        }
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.generators.iter().any(|g| p.contains_subword(&g.arrows))
    }
}

/// The functional picking socle coefficients, and the form `θ(a, b) = λ(ab)`.
#[derive(Clone, Debug)]
pub struct SymmetricForm {
    /// For each vertex, the basis class whose coefficient `λ` reads.
    pub pivots: Vec<usize>,
}

impl SymmetricForm {
    pub fn lambda(&self, alg: &Algebra, x: &Elem) -> Scalar {
        let mut s = alg.field.zero();
        for (i, c) in x {
            if self.pivots.contains(i) {
                s = &s + c;
            }
        }
        s
    }

    pub fn theta(&self, alg: &Algebra, x: &Elem, y: &Elem) -> Scalar {
        self.lambda(alg, &alg.mul(x, y))
    }

    pub fn gram(&self, alg: &Algebra) -> Mat {
        let n = alg.dim();
        let mut g = Mat::zeros(alg.field, n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, self.lambda(alg, alg.mul_basis(i, j)));
            }
        }
        g
    }
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub gram_rank: usize,
    pub form: Option<SymmetricForm>,
    pub witness: Option<Witness>,
}

pub fn check_symmetric(alg: &Algebra) -> SymmetryReport {
    let mut pivots = Vec::new();
    for v in 0..alg.num_vertices() {
        match alg.socle_element(v) {
            Some(s) => pivots.push(s.last().expect("nonzero socle").0),
            None => {
                return SymmetryReport {
                    symmetric: false,
                    gram_rank: 0,
                    form: None,
                    witness: Some(Witness::new(
                        "symmetric",
                        "vertex",
                        &alg.pres.vertices[v],
                        format!("socle of the projective has dimension {}", alg.socle(v).len()),
                    )),
                }
            }
        }
    }
    let form = SymmetricForm { pivots };
    let g = form.gram(alg);
    let rank = g.rank(alg.field);
    let n = alg.dim();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..i {
            if g.get(i, j) != g.get(j, i) {
                witness = Some(Witness::new(
                    "symmetric",
                    "path",
                    format!("{}, {}", alg.class_word(i), alg.class_word(j)),
                    "form is not symmetric on this pair",
                ));
                break 'outer;
            }
        }
    }
    if witness.is_none() && rank < n {
        witness = Some(Witness::new("symmetric", "form", format!("rank {rank}"), format!("Gram matrix is singular (dimension {n})")));
    }
    SymmetryReport {
        symmetric: witness.is_none(),
        gram_rank: rank,
        form: Some(form),
        witness,
    }
}

/// Every arrow occurs exactly once among the maximal paths of the string algebra.
pub fn check_class_c(pres: &Presentation) -> Result<(bool, Option<Witness>), BuildError> {
    let prereq = |reason: &str| Ok((false, Some(Witness::new("class_c", "prerequisite", "", reason))));
    if !check_condition_c(pres, false).0 {
        return prereq("condition (C) fails");
    }
    let alg = Algebra::build(pres)?;
    if !check_special_biserial(&alg).0 {
        return prereq("not special biserial");
    }
    if !check_symmetric(&alg).symmetric {
        return prereq("not symmetric");
    }
    let sq = string_quotient(pres).expect("shape checked above");
    let tilde = Algebra::build(&sq)?;
    let maximal: Vec<&Path> = tilde.maximal_paths().into_iter().map(|i| &tilde.basis[i].rep).collect();
    for (a, arrow) in pres.arrows.iter().enumerate() {
        let hits: Vec<&&Path> = maximal.iter().filter(|p| p.arrows.contains(&a)).collect();
        let occurrences: usize = maximal.iter().map(|p| p.arrows.iter().filter(|&&x| x == a).count()).sum();
        if occurrences != 1 {
            let names: Vec<String> = hits.iter().map(|p| sq.word(p)).collect();
            return Ok((
                false,
                Some(Witness::new(
                    "class_c",
                    "arrow",
                    &arrow.label,
                    format!("occurs {occurrences} times among maximal paths [{}]", names.join(", ")),
                )),
            ));
        }
    }
    Ok((true, None))
}
