//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_GAPS` are computed in full and reported like the
//! others, but their failure does not fail the run. README.md describes both.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use biserial::arcomp::{
    cohomology_diagram, euler_cohomology, euler_terms, fmt_dims, rim_tower, stalk_tower, string_complex, RimTower,
};
use biserial::classify::{check_symmetric, classify, string_quotient};
use biserial::fixtures;
use biserial::homalg::rep::{cohomology, QuiverRep};
use biserial::homalg::{end_algebra, homotopy_equivalent, is_indecomposable, minimal_form, ProjComplex};
use biserial::pathalg::{Algebra, Presentation};
use biserial::strings::{enumerate_string_walks, identify_string, string_module, StringContext};

const SEED: u64 = 0x5eed;
/// Letters per generalized string in the suites.
const MAX_LETTERS: usize = 4;
/// Highest tower level in the cone suite.
const MAX_LEVEL: usize = 4;
/// Arrows per string walk of the string algebra.
const MAX_ARROWS: usize = 4;
/// Every comparison below is exact; no numerical tolerance applies.
const TOLERANCE: usize = 0;
const KNOWN_GAPS: [usize; 2] = [6, 9];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn build(pres: &Presentation) -> Algebra {
    Algebra::build(pres).expect("fixture builds")
}

fn criterion_1() -> Outcome {
    let cases = [
        (fixtures::lambda1(), 10),
        (fixtures::lambda3(), 12),
        (fixtures::lambda2(3), 12),
        (fixtures::lambda4(), 15),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (pres, expected) in cases {
        let got = build(&pres).dim();
        let oracle = common::brute_force_dim(&pres);
        pass &= got == expected && oracle == expected;
        parts.push(format!("{} {got}/{oracle}/{expected}", pres.name));
    }
    outcome(pass, format!("dim built/oracle/expected: {}", parts.join(", ")))
}

fn criterion_2() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for pres in [fixtures::lambda1(), fixtures::lambda2(3), fixtures::lambda3()] {
        let r = classify(&pres, false).expect("classifies");
        pass &= r.class_c;
        parts.push(format!("{} class_c={}", pres.name, r.class_c));
    }
    let l4 = fixtures::lambda4();
    let r = classify(&l4, false).expect("classifies");
    let witness = r.witnesses.iter().find(|w| w.flag == "class_c");
    let item = witness.map(|w| w.item.clone()).unwrap_or_default();
    // the witness arrow must lie on two maximal paths of the string algebra
    let on_two = string_quotient(&l4)
        .ok()
        .and_then(|t| Algebra::build_unchecked(&t).ok())
        .map(|t| {
            let a = t.pres.arrow_index(&item);
            t.maximal_paths()
                .iter()
                .filter(|&&i| a.is_some_and(|a| t.basis[i].rep.arrows.contains(&a)))
                .count()
                == 2
        })
        .unwrap_or(false);
    pass &= r.condition_c && r.symmetric && !r.class_c && on_two;
    parts.push(format!(
        "{} condition_c={} symmetric={} class_c={} witness={item} on two maximal paths={on_two}",
        l4.name, r.condition_c, r.symmetric, r.class_c
    ));
    outcome(pass, parts.join("; "))
}

fn quotient_words(pres: &Presentation) -> BTreeSet<String> {
    let t = string_quotient(pres).expect("string quotient exists");
    t.monomials().map(|p| t.word(p)).collect()
}

fn words(ws: &[&str]) -> BTreeSet<String> {
    ws.iter().map(|s| s.to_string()).collect()
}

fn expected_lambda2(m: usize) -> BTreeSet<String> {
    let next = |i: usize| (i + 1) % m;
    let prev = |i: usize| (i + m - 1) % m;
    (0..m)
        .flat_map(|i| {
            [
                format!("a{i}*a{}", next(i)),
                format!("b{i}*b{}", prev(i)),
                format!("a{i}*b{i}"),
                format!("b{}*a{}", prev(i), prev(i)),
            ]
        })
        .collect()
}

fn criterion_3() -> Outcome {
    // tau = t, gamma = g, zeta = z; the barred arrows of the cyclic family are b
    let cases = [
        (fixtures::lambda1(), words(&["t0*t1", "g2*g1", "g1*t0", "t1*g2"])),
        (
            fixtures::lambda3(),
            words(&[
                "g1*z0", "z0*t0", "t0*t1", "g2*g1", "t1*z2", "z2*g2", "t0*g1", "z0*z0", "g2*t1", "z2*z2", "g1*t0",
                "t1*g2",
            ]),
        ),
        (
            fixtures::lambda4(),
            words(&[
                "z0*t0", "t0*z1", "z1*t1", "t1*z2", "z2*t2", "t2*z0", "t0*t1*t2", "z0*z0", "t1*t2*t0", "z1*z1",
                "t2*t0*t1", "z2*z2",
            ]),
        ),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (pres, expected) in cases {
        let got = quotient_words(&pres);
        pass &= got == expected;
        parts.push(format!("{} {}/{}", pres.name, got.len(), expected.len()));
    }
    for m in 2..=5 {
        let pres = fixtures::lambda2(m);
        let got = quotient_words(&pres);
        let expected = expected_lambda2(m);
        pass &= got == expected;
        parts.push(format!("{} {}/{}", pres.name, got.len(), expected.len()));
    }
    outcome(pass, format!("generators got/expected: {}", parts.join(", ")))
}

fn terms(alg: &Algebra, c: &ProjComplex) -> BTreeMap<i64, Vec<String>> {
    c.degrees()
        .map(|d| (d, c.term(d).iter().map(|&v| alg.pres.vertices[v].clone()).collect()))
        .collect()
}

fn sorted(m: &BTreeMap<i64, Vec<String>>) -> BTreeMap<i64, Vec<String>> {
    m.iter()
        .map(|(d, t)| {
            let mut t = t.clone();
            t.sort();
            (*d, t)
        })
        .collect()
}

fn display(rows: &[(i64, &[&str])]) -> BTreeMap<i64, Vec<String>> {
    rows.iter()
        .map(|(d, t)| (*d, t.iter().map(|s| s.to_string()).collect()))
        .collect()
}

/// Terms of `P_k` for `k >= 4`, from the closed formula.
fn closed_formula(k: i64) -> BTreeMap<i64, Vec<String>> {
    let mut rows: Vec<(i64, &[&str])> = vec![(-(k + 1), &["0"]), (-k, &["0", "1", "0"])];
    for l in (-k + 1)..=-1 {
        rows.push((l, &["2", "0", "1", "0"]));
    }
    rows.push((0, &["2", "0", "1"]));
    rows.push((1, &["2"]));
    display(&rows)
}

fn example_tower(alg: &Algebra, levels: usize) -> RimTower {
    let ctx = StringContext::new(alg);
    let w = ctx.parse("z0^-1*t0*t1").expect("example string parses");
    rim_tower(&ctx, &w, levels, SEED).expect("example tower builds")
}

fn criterion_4(alg: &Algebra) -> Outcome {
    let displays = [
        display(&[(-1, &["0"]), (0, &["0", "1"]), (1, &["2"])]),
        display(&[(-2, &["0"]), (-1, &["0", "1", "0"]), (0, &["2", "0", "1"]), (1, &["2"])]),
        display(&[
            (-3, &["0"]),
            (-2, &["0", "1", "0"]),
            (-1, &["2", "0", "1", "0"]),
            (0, &["2", "0", "1"]),
            (1, &["2"]),
        ]),
        display(&[
            (-4, &["0"]),
            (-3, &["0", "1", "0"]),
            (-2, &["2", "0", "1", "0"]),
            (-1, &["2", "0", "1", "0"]),
            (0, &["2", "0", "1"]),
            (1, &["2"]),
        ]),
    ];
    let tower = example_tower(alg, 6);
    let mut pass = true;
    let mut verbatim = 0;
    let mut parts = Vec::new();
    for (k, level) in tower.levels.iter().enumerate() {
        let got = terms(alg, level);
        let expected = if k < 4 { displays[k].clone() } else { closed_formula(k as i64) };
        let ok = sorted(&got) == sorted(&expected);
        verbatim += usize::from(got == expected);
        pass &= ok;
        parts.push(format!("P{k} {}", if ok { "ok" } else { "differs" }));
    }
    outcome(
        pass,
        format!("{}; summand order also identical on {verbatim}/7 levels", parts.join(", ")),
    )
}

/// Whether `c` is a shifted stalk tower `P_v -> P_v -> ... -> P_v`.
fn is_shifted_stalk_tower(alg: &Algebra, c: &ProjComplex) -> bool {
    if c.length() < 2 || c.terms.iter().any(|t| t.len() != 1 || t[0] != c.terms[0][0]) {
        return false;
    }
    let n = c.length() - 1;
    let s = stalk_tower(alg, c.terms[0][0], n).expect("stalk tower");
    homotopy_equivalent(alg, c, &s.shift(-(n as i64) - c.low, alg), SEED)
}

#[derive(Default)]
struct Suite {
    strings: usize,
    indecomposable_failures: Vec<String>,
    semisimple_failures: Vec<String>,
    cone_failures: Vec<String>,
    cone_failures_on_stalk_towers: usize,
    towers: Vec<RimTower>,
    shift_failures: Vec<String>,
    paper_shift_failures: usize,
    eta_ne_degree: Vec<String>,
    complexes: Vec<ProjComplex>,
}

fn run_suite(alg: &Algebra, suite: &mut Suite) {
    let ctx = StringContext::new(alg);
    for w in ctx.enumerate(MAX_LETTERS) {
        let label = format!("{}:{}", alg.pres.name, w.display(alg));
        suite.strings += 1;
        let c = string_complex(&ctx, &w).expect("enumerated strings give complexes");

        // criterion 5
        if !is_indecomposable(alg, &c).expect("characteristic is large enough") {
            suite.indecomposable_failures.push(label.clone());
        }
        let m = minimal_form(alg, &c).complex;
        if end_algebra(alg, &m).algebra.semisimple_dim() != Ok(1) {
            suite.semisimple_failures.push(label.clone());
        }

        // criterion 8
        let inv = string_complex(&ctx, &w.inverse()).expect("inverse is a string");
        let eta = w.eta();
        let eta_n = *eta.last().unwrap();
        if !homotopy_equivalent(alg, &c, &inv.shift(-eta_n, alg), SEED) {
            suite.shift_failures.push(label.clone());
        }
        if !homotopy_equivalent(alg, &c, &inv.shift(-w.degree(), alg), SEED) {
            suite.paper_shift_failures += 1;
        }
        if eta_n != w.degree() {
            suite.eta_ne_degree.push(label.clone());
        }

        // criteria 6 and 7
        match rim_tower(&ctx, &w, MAX_LEVEL, SEED) {
            Ok(t) => {
                suite.complexes.extend(t.levels.iter().cloned());
                suite.complexes.extend(t.steps.iter().map(|s| s.cone.clone()));
                suite.towers.push(t);
            }
            Err(e) => {
                suite.cone_failures_on_stalk_towers += usize::from(is_shifted_stalk_tower(alg, &c));
                suite.cone_failures.push(format!("{label} ({e})"));
            }
        }
        suite.complexes.push(c);
    }
}

fn list(xs: &[String]) -> String {
    const SHOWN: usize = 4;
    let mut s = xs.iter().take(SHOWN).cloned().collect::<Vec<_>>().join(", ");
    if xs.len() > SHOWN {
        s.push_str(&format!(", … ({} more)", xs.len() - SHOWN));
    }
    s
}

fn criterion_5(s: &Suite) -> Outcome {
    let pass = s.indecomposable_failures.is_empty() && s.semisimple_failures.is_empty();
    outcome(
        pass,
        format!(
            "{} strings; decomposable: {}; End/rad of dimension != 1: {} [{}]",
            s.strings,
            s.indecomposable_failures.len(),
            s.semisimple_failures.len(),
            list(&s.indecomposable_failures)
        ),
    )
}

fn criterion_6(s: &Suite) -> Outcome {
    let detail = format!(
        "{} towers to level {MAX_LEVEL} built, {} failed; {} of the failures start from a shifted stalk tower [{}]",
        s.towers.len(),
        s.cone_failures.len(),
        s.cone_failures_on_stalk_towers,
        list(&s.cone_failures)
    );
    outcome(s.cone_failures.is_empty(), detail)
}

fn criterion_7(s: &Suite) -> Outcome {
    let bad: Vec<String> = s
        .towers
        .iter()
        .filter(|t| {
            let l0 = t.levels[0].length();
            t.levels.iter().enumerate().any(|(k, p)| p.length() != l0 + k)
        })
        .map(|t| format!("{:?}", t.word))
        .collect();
    outcome(bad.is_empty() && !s.towers.is_empty(), format!("{} towers, {} violate the law", s.towers.len(), bad.len()))
}

fn criterion_8(s: &Suite) -> Outcome {
    outcome(
        s.shift_failures.is_empty(),
        format!(
            "{} strings, {} fail with shift eta(n); eta(n) != deg w for {} strings [{}]; with shift deg w {} fail",
            s.strings,
            s.shift_failures.len(),
            s.eta_ne_degree.len(),
            list(&s.eta_ne_degree),
            s.paper_shift_failures
        ),
    )
}

struct Cosyzygy {
    total: usize,
    agree: usize,
    /// Mismatches whose cohomology is the cosyzygy of some other walk.
    matched_elsewhere: usize,
    mismatches: Vec<String>,
}

fn criterion_9(alg: &Algebra) -> Cosyzygy {
    let ctx = StringContext::new(alg);
    let tilde = Algebra::build_unchecked(&ctx.tilde).expect("string algebra builds");
    let mut cases = Vec::new();
    for walk in enumerate_string_walks(&ctx.tilde, MAX_ARROWS) {
        let Some(w) = ctx.from_walk(&walk) else { continue };
        if w.is_empty() {
            continue;
        }
        let c = string_complex(&ctx, &w).expect("walks give strings");
        let h = cohomology(alg, &c)
            .into_iter()
            .find(|(d, _)| *d == w.degree())
            .map(|(_, h)| h)
            .unwrap_or_else(|| QuiverRep::zero(alg.field, &alg.pres));
        let m = string_module(&tilde, &walk).expect("walk gives a module");
        let om = m.omega_inverse(alg, SEED).expect("self-injective");
        cases.push((walk.display(&ctx.tilde), h, om));
    }
    // an explicit invertible intertwiner certifies each isomorphism
    let certified = |a: &QuiverRep, b: &QuiverRep| {
        a.isomorphism(b, &alg.pres, SEED)
            .is_some_and(|phi| phi.iter().all(|m| m.inverse(alg.field).is_some()))
    };
    let mut out = Cosyzygy {
        total: cases.len(),
        agree: 0,
        matched_elsewhere: 0,
        mismatches: Vec::new(),
    };
    for (label, h, om) in &cases {
        if certified(h, om) {
            out.agree += 1;
            continue;
        }
        if cases.iter().any(|(_, _, other)| certified(h, other)) {
            out.matched_elsewhere += 1;
        }
        out.mismatches.push(format!("{label} H={} coker={}", fmt_dims(&h.dims), fmt_dims(&om.dims)));
    }
    out
}

fn criterion_10(alg: &Algebra) -> Outcome {
    let tower = example_tower(alg, 4);
    let ctx = StringContext::new(alg);
    let tilde = Algebra::build_unchecked(&ctx.tilde).expect("string algebra builds");
    let diagram = cohomology_diagram(alg, &tilde, &tower.levels, SEED).expect("diagram");
    let row0 = &diagram.rows[0].entries;
    let h = cohomology(alg, &tower.levels[0]);
    let get = |d: i64| h.iter().find(|(e, _)| *e == d).map(|(_, r)| r.clone());
    let s0 = QuiverRep::simple(alg.field, &alg.pres, 0);
    let hm1 = get(-1).is_some_and(|r| r.is_isomorphic(&s0, &alg.pres, SEED));
    let h1 = get(1);
    let h1_dims = h1.as_ref().is_some_and(|r| r.dims == [0, 0, 2]);
    let h1_string = h1
        .as_ref()
        .and_then(|r| identify_string(&tilde, r, MAX_ARROWS, SEED))
        .map(|w| w.display(&ctx.tilde));
    let h0 = get(0);
    let h0_parts = h0
        .as_ref()
        .map(|r| r.decompose(&alg.pres, SEED).map(|p| p.len()).unwrap_or(0))
        .unwrap_or(0);
    let h0_dims = h0.as_ref().map(|r| fmt_dims(&r.dims)).unwrap_or_default();
    let term_dims: Vec<usize> = tower.levels[0].degrees().map(|d| tower.levels[0].term_dim(alg, d)).collect();
    // dim H^0 = chi(terms) + dim H^-1 + dim H^1 for a complex in degrees -1..=1
    let forced = euler_terms(alg, &tower.levels[0])
        + [-1, 1].iter().map(|&d| get(d).map_or(0, |r| r.dim() as i64)).sum::<i64>();
    let sigma = diagram
        .sigma
        .as_ref()
        .map(|(k, d, c)| format!("level {k} degree {d} {} {}", c.label(), fmt_dims(&c.dims)));
    let pass = hm1 && h1_dims && h1_string.as_deref() == Some("z2") && h0_parts == 1 && sigma.is_some();
    outcome(
        pass,
        format!(
            "H^-1 = S0: {hm1}; H^1 {} identified as {}; H^0 indecomposable ({h0_parts} summand) with dims {h0_dims} \
             and label {}, term dimensions {} force dimension {forced} where the figure's M[t0] has dimension 2; \
             Sigma: {}",
            h1.as_ref().map(|r| fmt_dims(&r.dims)).unwrap_or_default(),
            h1_string.unwrap_or_else(|| "nothing".into()),
            row0.get(&0).map(|c| c.label()).unwrap_or_default(),
            fmt_dims(&term_dims),
            sigma.unwrap_or_else(|| "not found".into())
        ),
    )
}

fn rep_sub(r: &QuiverRep, alg: &Algebra, onto: &QuiverRep) -> QuiverRep {
    let f = r.hom(onto, &alg.pres).into_iter().next().expect("map onto the top");
    r.restrict(&alg.pres, &r.kernel_of(&f))
}

fn criterion_11(alg: &Algebra) -> Outcome {
    let pres = &alg.pres;
    let p0 = QuiverRep::projective(alg, 0);
    let s0 = QuiverRep::simple(alg.field, pres, 0);
    let rad = rep_sub(&p0, alg, &s0);
    let top = p0.quotient(pres, &p0.socle(pres));
    let heart = rep_sub(&top, alg, &s0);
    let mut pass = true;
    let mut parts = Vec::new();
    for n in 1..=4usize {
        let c = stalk_tower(alg, 0, n).expect("stalk tower");
        let h: BTreeMap<i64, QuiverRep> = cohomology(alg, &c).into_iter().collect();
        let iso = |d: i64, target: &QuiverRep| h.get(&d).is_some_and(|r| r.is_isomorphic(target, pres, SEED));
        let low = iso(-(n as i64), &rad);
        let high = iso(0, &top);
        let middle = (-(n as i64) + 1..0).all(|d| iso(d, &heart));
        let support = h.keys().all(|d| (-(n as i64)..=0).contains(d));
        pass &= low && high && middle && support;
        parts.push(format!("n={n} {}", if low && high && middle && support { "ok" } else { "differs" }));
    }
    outcome(
        pass,
        format!(
            "{} (rad {}, P/soc {}, heart {})",
            parts.join(", "),
            fmt_dims(&rad.dims),
            fmt_dims(&top.dims),
            fmt_dims(&heart.dims)
        ),
    )
}

fn criterion_12(alg_complexes: &[(&Algebra, &[ProjComplex])]) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (alg, cs) in alg_complexes {
        for c in cs.iter() {
            checked += 1;
            if !c.check_d2(alg) {
                bad.push("d^2");
            }
            if !c.is_minimal(alg) {
                bad.push("minimal");
            }
            if euler_terms(alg, c) != euler_cohomology(alg, c) {
                bad.push("euler");
            }
        }
    }
    for pres in [fixtures::lambda1(), fixtures::lambda2(3), fixtures::lambda3(), fixtures::lambda4()] {
        let alg = build(&pres);
        if !alg.check_associative() {
            bad.push("associativity");
        }
        let sym = check_symmetric(&alg);
        let gram_ok = sym.form.as_ref().is_some_and(|f| {
            let g = f.gram(&alg);
            g.transpose(alg.field) == g && g.rank(alg.field) == alg.dim()
        });
        if !sym.symmetric || !gram_ok {
            bad.push("symmetric form");
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} complexes and 4 algebras checked, {} violations {:?}", bad.len(), bad),
    )
}

fn main() {
    let start = Instant::now();
    let l1 = build(&fixtures::lambda1());
    let l3 = build(&fixtures::lambda3());
    let mut results: Vec<(usize, Outcome)> = vec![(1, criterion_1()), (2, criterion_2()), (3, criterion_3())];
    results.push((4, criterion_4(&l3)));

    let mut s1 = Suite::default();
    let mut s3 = Suite::default();
    run_suite(&l1, &mut s1);
    run_suite(&l3, &mut s3);
    let merged = Suite {
        strings: s1.strings + s3.strings,
        indecomposable_failures: [s1.indecomposable_failures.clone(), s3.indecomposable_failures.clone()].concat(),
        semisimple_failures: [s1.semisimple_failures.clone(), s3.semisimple_failures.clone()].concat(),
        cone_failures: [s1.cone_failures.clone(), s3.cone_failures.clone()].concat(),
        cone_failures_on_stalk_towers: s1.cone_failures_on_stalk_towers + s3.cone_failures_on_stalk_towers,
        towers: [s1.towers.clone(), s3.towers.clone()].concat(),
        shift_failures: [s1.shift_failures.clone(), s3.shift_failures.clone()].concat(),
        paper_shift_failures: s1.paper_shift_failures + s3.paper_shift_failures,
        eta_ne_degree: [s1.eta_ne_degree.clone(), s3.eta_ne_degree.clone()].concat(),
        complexes: Vec::new(),
    };
    results.push((5, criterion_5(&merged)));
    results.push((6, criterion_6(&merged)));
    results.push((7, criterion_7(&merged)));
    results.push((8, criterion_8(&merged)));

    let c1 = criterion_9(&l1);
    let c3 = criterion_9(&l3);
    results.push((
        9,
        outcome(
            c1.mismatches.is_empty() && c3.mismatches.is_empty(),
            format!(
                "isomorphic on {}/{} walks over {} and {}/{} over {}; {} of the {} mismatches equal the cosyzygy of another walk [{}]",
                c1.agree,
                c1.total,
                l1.pres.name,
                c3.agree,
                c3.total,
                l3.pres.name,
                c1.matched_elsewhere + c3.matched_elsewhere,
                c1.mismatches.len() + c3.mismatches.len(),
                list(&[c1.mismatches, c3.mismatches].concat())
            ),
        ),
    ));
    results.push((10, criterion_10(&l3)));
    results.push((11, criterion_11(&l3)));
    results.push((12, criterion_12(&[(&l1, &s1.complexes), (&l3, &s3.complexes)])));

    let mut unexpected = Vec::new();
    for (n, o) in &results {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && KNOWN_GAPS.contains(n) { " (known gap)" } else { "" };
        println!("criterion {n:>2}: {status}{note}: {}", o.detail);
        if !o.pass && !KNOWN_GAPS.contains(n) {
            unexpected.push(*n);
        }
    }
    println!("tolerance {TOLERANCE} (exact arithmetic), {:.1?} total", start.elapsed());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
