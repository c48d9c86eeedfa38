//! Replays the checked-in fuzz seeds through the same round trips the fuzz
//! targets assert.

use std::fs;
use std::path::PathBuf;

use biserial::fixtures;
use biserial::io::{parse_complex, write_complex};
use biserial::pathalg::{parse_presentation, Algebra};
use biserial::strings::StringContext;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn presentation_seeds() {
    for text in seeds("presentation") {
        if let Ok(p) = parse_presentation(&text) {
            assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
        }
    }
}

#[test]
fn string_literal_seeds() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    let ctx = StringContext::new(&alg);
    for text in seeds("string_literal") {
        let w = ctx.parse(&text).unwrap();
        assert_eq!(ctx.parse(&w.display(&alg).to_string()).unwrap(), w);
    }
}

#[test]
fn complex_json_seeds() {
    let alg = Algebra::build(&fixtures::lambda3()).unwrap();
    for text in seeds("complex_json") {
        let c = parse_complex(&alg, &text).unwrap();
        assert!(c.check_d2(&alg));
        assert_eq!(parse_complex(&alg, &write_complex(&alg, &c)).unwrap(), c);
    }
}
