#![no_main]

use libfuzzer_sys::fuzz_target;
use nlgame::rational::{parse_rational, to_compact_string, to_fraction_string};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_rational(text) {
        assert_eq!(parse_rational(&to_fraction_string(&r)), Ok(r));
        assert_eq!(parse_rational(&to_compact_string(&r)), Ok(r));
    }
});
