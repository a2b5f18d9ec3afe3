#![no_main]

use libfuzzer_sys::fuzz_target;
use steiner_core::ideal::{format_ideal_file, parse_ideal_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ideal) = parse_ideal_file(text) {
        let printed = format_ideal_file(&ideal);
        let back = parse_ideal_file(&printed).expect("formatted ideal file must reparse");
        assert_eq!(ideal, back, "round trip failed for:\n{printed}");
    }
});
