#![no_main]

use libfuzzer_sys::fuzz_target;
use sierpinski::sweep::{parse_results_csv, results_csv};

fuzz_target!(|data: &[u8]| {
    if let Ok(rows) = parse_results_csv(data) {
        // Accepted rows are valid witnesses and survive a round trip.
        let text = results_csv(&rows);
        assert_eq!(parse_results_csv(text.as_bytes()).unwrap(), rows);
    }
});
