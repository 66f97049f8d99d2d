#![no_main]

use artin_core::graph::parse_graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Anything that parses must survive a render and reparse unchanged.
    if let Ok(g) = parse_graph(data) {
        let text = g.to_artin_text();
        assert_eq!(parse_graph(text.as_bytes()).unwrap(), g);
    }
});
