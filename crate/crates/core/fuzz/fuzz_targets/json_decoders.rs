#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| wq_fuzz::core_checks::json_decoders(data));
