#![no_main]

use libfuzzer_sys::fuzz_target;
use steiner_core::{format_poly, parse_poly, Field, MonomialOrder, PolyRing};

fuzz_target!(|data: &[u8]| {
    let Some((&field_byte, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let field = match field_byte % 3 {
        0 => Field::Rationals,
        1 => Field::prime(32003).unwrap(),
        _ => Field::prime(5).unwrap(),
    };
    let ring = PolyRing::new(field, &["x0", "x1", "x2", "y", "_z"], MonomialOrder::GrevLex)
        .unwrap();
    if let Ok(poly) = parse_poly(&ring, text) {
        // A successful parse must round-trip through the canonical printer.
        let printed = format_poly(&poly);
        let back = parse_poly(&ring, &printed).expect("printer output must reparse");
        assert_eq!(poly, back, "round trip failed for `{printed}`");
    }
});
