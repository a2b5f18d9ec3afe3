#![no_main]

use libfuzzer_sys::fuzz_target;
use steiner_core::matrix::{format_matrix_file, parse_matrix_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(matrix) = parse_matrix_file(text, None) {
        let printed = format_matrix_file(&matrix);
        let back =
            parse_matrix_file(&printed, None).expect("formatted matrix file must reparse");
        assert_eq!(matrix, back, "round trip failed for:\n{printed}");
    }
});
