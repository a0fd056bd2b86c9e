#![no_main]

use libfuzzer_sys::fuzz_target;
use sierpinski::sweep::{parse_unsolved_csv, unsolved_csv};

fuzz_target!(|data: &[u8]| {
    if let Ok(qs) = parse_unsolved_csv(data) {
        let text = unsolved_csv(&qs);
        assert_eq!(parse_unsolved_csv(text.as_bytes()).unwrap(), qs);
    }
});
