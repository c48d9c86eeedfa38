#![no_main]

use biserial::pathalg::parse_presentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        let again = parse_presentation(&p.to_text()).expect("printed presentations parse");
        assert_eq!(again, p);
    }
});
