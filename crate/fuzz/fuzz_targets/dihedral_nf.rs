#![no_main]

use artin_core::dihedral::{normal_form, DihedralWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // First byte picks the label, the rest is a word over a and b.
    let Some((&n, rest)) = data.split_first() else { return };
    let n = u32::from(n % 14) + 2;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(w) = DihedralWord::parse(n, text) {
        if w.word().letters().iter().map(|l| l.exp.unsigned_abs()).sum::<u64>() > 4096 {
            return;
        }
        let nf = normal_form(&w);
        assert_eq!(normal_form(&nf.to_word()), nf);
        assert!(normal_form(&w.concat(&w.inverse()).unwrap()).is_identity());
    }
});
