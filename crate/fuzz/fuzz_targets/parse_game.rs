#![no_main]

use libfuzzer_sys::fuzz_target;
use nlgame::game::{parse_game, write_game};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(game) = parse_game(text) {
        // the canonical form must parse back to the same relation
        let canonical = write_game(&game);
        let again = parse_game(&canonical).expect("canonical game parses");
        assert_eq!(again, game);
        assert_eq!(write_game(&again), canonical);
    }
});
