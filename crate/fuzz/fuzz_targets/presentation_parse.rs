#![no_main]

use artin_core::presentation::{abelianize, Presentation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Presentation::parse(text) {
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
        if p.generators.len() <= 16 && p.relators.len() <= 16 {
            let _ = abelianize(&p);
        }
    }
});
