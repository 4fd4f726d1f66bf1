#![no_main]

use libfuzzer_sys::fuzz_target;
use powercmp::X3cInstance;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(instance) = serde_json::from_str::<X3cInstance>(text) {
        let reencoded = serde_json::to_string(&instance).unwrap();
        let back: X3cInstance = serde_json::from_str(&reencoded).unwrap();
        assert_eq!(back, instance);
    }
});
