use biserial::classify::string_quotient;
use biserial::fixtures;
use biserial::homalg::rep::QuiverRep;
use biserial::pathalg::Algebra;
use biserial::strings::{
    enumerate_string_walks, identify_string, is_string_walk, string_module, GenString, Step, StringContext, Violation,
    Walk,
};

fn walk(pres: &biserial::pathalg::Presentation, start: &str, steps: &[(&str, bool)]) -> Walk {
    Walk {
        start: pres.vertex_index(start).unwrap(),
        steps: steps
            .iter()
            .map(|&(a, inverse)| Step {
                arrow: pres.arrow_index(a).unwrap(),
                inverse,
            })
            .collect(),
    }
}

#[test]
fn string_walks_of_tilde_lambda3() {
    let tilde = string_quotient(&fixtures::lambda3()).unwrap();
    assert!(is_string_walk(&tilde, &walk(&tilde, "0", &[("z0", true), ("t0", false)])));
    assert!(!is_string_walk(&tilde, &walk(&tilde, "0", &[("t0", false), ("t1", false)])));
    assert!(!is_string_walk(&tilde, &walk(&tilde, "0", &[("t0", false), ("t0", true)])));
}

#[test]
fn generalized_string_conditions() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let ex = ctx.parse("z0^-1*t0*t1").unwrap();
    assert!(ctx.is_generalized_string(ex.letters()));
    let tt = ctx.parse("t0*t1").unwrap();
    assert!(ctx.is_generalized_string(tt.letters()));
    let zz = ctx.parse("z0*z0").unwrap();
    assert_eq!(ctx.check(zz.letters()), Err(Violation::DirectDirect(1)));
}

#[test]
fn single_letters_are_the_nonzero_classes() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let one = ctx.enumerate(1);
    // oracle: nonzero classes of positive length
    let classes = alg.basis.iter().filter(|c| c.len > 0).count();
    assert_eq!(classes, 9);
    assert_eq!(one.len(), classes);
    assert!(one.iter().all(|w| w.len() == 1 && w.is_canonical()));
}

#[test]
fn enumeration_contains_the_example() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let ex = ctx.parse("z0^-1*t0*t1").unwrap().canonical();
    assert!(ctx.enumerate(3).contains(&ex));
    let trivial = ctx.enumerate(0);
    assert_eq!(trivial.len(), 3);
    assert!(trivial.iter().all(|w| matches!(w, GenString::TrivialPower { n: 1, .. })));
}

#[test]
fn eta_profiles() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let ex = ctx.parse("z0^-1*t0*t1").unwrap();
    assert_eq!(ex.eta(), [0, -1, 0, 1]);
    assert_eq!(ex.degree(), 1);
    let direct = ctx.parse("g1*t0*t1").unwrap();
    assert_eq!(direct.eta(), [0, 1, 2, 3]);
    assert_eq!(direct.degree(), 3);
    let stalk = ctx.parse("1_2^3").unwrap();
    assert_eq!(stalk.degree(), 3);
}

#[test]
fn eta_of_the_inverse_is_reflected() {
    for p in [fixtures::lambda1(), fixtures::lambda3()] {
        let alg = Algebra::build(&p).unwrap();
        let ctx = StringContext::new(&alg);
        for w in ctx.enumerate(3) {
            let e = w.eta();
            let n = e.len() - 1;
            let inv = w.inverse().eta();
            for j in 0..=n {
                assert_eq!(inv[j], e[n - j] - e[n]);
            }
        }
    }
}

#[test]
fn string_modules() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let tilde = Algebra::build_unchecked(&ctx.tilde).unwrap();
    let t = &ctx.tilde;
    let m = string_module(&tilde, &walk(t, "0", &[("t0", false)])).unwrap();
    assert_eq!(m.dims, [1, 1, 0]);
    assert!(m.satisfies_relations(t));
    let z = string_module(&tilde, &walk(t, "2", &[("z2", false)])).unwrap();
    assert_eq!(z.dims, [0, 0, 2]);
    let s = string_module(&tilde, &walk(t, "1", &[])).unwrap();
    assert!(s.is_isomorphic(&QuiverRep::simple(alg.field, t, 1), t, 1));
}

#[test]
fn every_string_module_satisfies_the_relations() {
    for p in [fixtures::lambda1(), fixtures::lambda3()] {
        let alg = Algebra::build(&p).unwrap();
        let ctx = StringContext::new(&alg);
        let tilde = Algebra::build_unchecked(&ctx.tilde).unwrap();
        for w in enumerate_string_walks(&ctx.tilde, 4) {
            let m = string_module(&tilde, &w).unwrap();
            assert!(m.satisfies_relations(&ctx.tilde), "{}", w.display(&ctx.tilde));
            assert_eq!(m.dim(), w.steps.len() + 1);
        }
    }
}

#[test]
fn identify_strings() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let tilde = Algebra::build_unchecked(&ctx.tilde).unwrap();
    let t = &ctx.tilde;
    let z = string_module(&tilde, &walk(t, "2", &[("z2", false)])).unwrap();
    let found = identify_string(&tilde, &z, 4, 1).unwrap();
    assert_eq!(found.display(t), "z2");
    let s0 = QuiverRep::simple(alg.field, t, 0);
    assert!(identify_string(&tilde, &s0, 4, 1).unwrap().steps.is_empty());
    let p0 = QuiverRep::projective(&alg, 0);
    assert!(identify_string(&tilde, &p0, 4, 1).is_none());
}

#[test]
fn parse_errors_carry_columns() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    let e = ctx.parse("z0*q9").unwrap_err();
    assert_eq!(e.col, 4);
    assert!(ctx.parse("(z0*t0)").is_err());
}
