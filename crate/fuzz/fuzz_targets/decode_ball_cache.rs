#![no_main]

use libfuzzer_sys::fuzz_target;
use permrecon::cache::decode;

fuzz_target!(|bytes: &[u8]| {
    let _ = decode(bytes);
});
