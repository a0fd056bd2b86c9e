#![no_main]

use libfuzzer_sys::fuzz_target;
use sierpinski::MethodTag;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(tag) = s.parse::<MethodTag>() {
            assert_eq!(tag.as_str(), s);
        }
    }
});
