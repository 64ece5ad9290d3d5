#![no_main]

use libfuzzer_sys::fuzz_target;
use qfa_core::cli::spec::parse_spec;

fuzz_target!(|data: &str| {
    if let Ok(doc) = parse_spec(data) {
        let _ = doc.build();
        let again = parse_spec(&doc.to_toml()).expect("serialized spec parses");
        assert_eq!(again, doc);
    }
});
