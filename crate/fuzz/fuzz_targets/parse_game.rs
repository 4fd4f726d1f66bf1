#![no_main]

use libfuzzer_sys::fuzz_target;
use powercmp::Game;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(game) = serde_json::from_str::<Game>(text) {
        // A successfully parsed game must survive a serialize/parse cycle.
        let reencoded = serde_json::to_string(&game).unwrap();
        let back: Game = serde_json::from_str(&reencoded).unwrap();
        assert_eq!(back, game);
    }
});
