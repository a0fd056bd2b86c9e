#![no_main]

use libfuzzer_sys::fuzz_target;
use sierpinski::sweep::SweepMeta;

fuzz_target!(|data: &[u8]| {
    let _ = SweepMeta::parse(data);
});
