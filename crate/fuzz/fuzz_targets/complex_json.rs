#![no_main]

use std::sync::LazyLock;

use biserial::fixtures;
use biserial::io::{parse_complex, write_complex};
use biserial::pathalg::Algebra;
use libfuzzer_sys::fuzz_target;

static ALG: LazyLock<Algebra> = LazyLock::new(|| Algebra::build(&fixtures::lambda3()).unwrap());

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_complex(&ALG, text) {
        let again = parse_complex(&ALG, &write_complex(&ALG, &c)).expect("written complexes parse");
        assert_eq!(again, c);
    }
});
