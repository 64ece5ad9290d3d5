#![no_main]

use libfuzzer_sys::fuzz_target;
use qfa_core::ncpoly::{format_poly, parse_poly};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + n as usize % 4;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(p) = parse_poly(text, n) {
        assert_eq!(parse_poly(&format_poly(&p, n), n).ok(), Some(p));
    }
});
