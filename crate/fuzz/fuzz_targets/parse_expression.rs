#![no_main]

use libfuzzer_sys::fuzz_target;
use nlgame::bell::{parse_expression, write_expression};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(expr) = parse_expression(text) {
        let canonical = write_expression(&expr);
        let again = parse_expression(&canonical).expect("canonical expression parses");
        assert_eq!(again, expr);
        assert_eq!(write_expression(&again), canonical);
    }
});
