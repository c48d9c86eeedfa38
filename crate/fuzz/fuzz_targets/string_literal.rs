#![no_main]

use std::sync::LazyLock;

use biserial::fixtures;
use biserial::pathalg::Algebra;
use biserial::strings::StringContext;
use libfuzzer_sys::fuzz_target;

static ALG: LazyLock<Algebra> = LazyLock::new(|| Algebra::build(&fixtures::lambda3()).unwrap());

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let ctx = StringContext::new(&ALG);
    if let Ok(w) = ctx.parse(text) {
        let shown = w.display(&ALG).to_string();
        assert_eq!(ctx.parse(&shown).expect("displayed strings parse"), w);
    }
});
