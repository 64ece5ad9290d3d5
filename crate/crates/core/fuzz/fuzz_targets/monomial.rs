#![no_main]

use libfuzzer_sys::fuzz_target;
use qfa_core::ncpoly::{format_monomial, parse_monomial};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + n as usize % 15;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(w) = parse_monomial(text, n) {
        assert!(w.iter().all(|&l| l < n));
        assert_eq!(parse_monomial(&format_monomial(&w), n).ok(), Some(w));
    }
});
