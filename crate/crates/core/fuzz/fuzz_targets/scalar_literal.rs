#![no_main]

use libfuzzer_sys::fuzz_target;
use qfa_core::scalars::Scalar;

fuzz_target!(|data: &str| {
    if let Ok(x) = data.parse::<Scalar>() {
        let back: Scalar = x.to_string().parse().expect("display output parses");
        assert_eq!(back, x);
    }
});
