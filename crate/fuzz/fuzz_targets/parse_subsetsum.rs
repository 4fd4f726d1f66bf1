#![no_main]

use libfuzzer_sys::fuzz_target;
use powercmp::SubsetSumInstance;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(instance) = serde_json::from_str::<SubsetSumInstance>(text) {
        let reencoded = serde_json::to_string(&instance).unwrap();
        let back: SubsetSumInstance = serde_json::from_str(&reencoded).unwrap();
        assert_eq!(back, instance);
    }
});
