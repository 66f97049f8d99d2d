#![no_main]

use artin_core::LabelledGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = LabelledGraph::from_json(text) {
            let json = serde_json::to_string(&g).unwrap();
            assert_eq!(LabelledGraph::from_json(&json).unwrap(), g);
        }
    }
});
