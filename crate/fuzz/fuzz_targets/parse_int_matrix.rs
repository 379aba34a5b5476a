#![no_main]

use libfuzzer_sys::fuzz_target;
use nlgame::polytope::{parse_int_matrix, rank_exact, write_int_matrix};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(m) = parse_int_matrix(text) {
        let canonical = write_int_matrix(&m);
        assert_eq!(parse_int_matrix(&canonical).expect("canonical matrix parses"), m);
        // keep elimination cheap on large inputs
        if m.rows() * m.cols() <= 400 {
            assert!(rank_exact(&m) <= m.rows().min(m.cols()));
        }
    }
});
