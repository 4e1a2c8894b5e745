#![no_main]

use libfuzzer_sys::fuzz_target;
use permrecon::CycleType;

fuzz_target!(|text: &str| {
    if let Ok(ct) = text.parse::<CycleType>() {
        let again: CycleType = ct.to_string().parse().expect("display output parses");
        assert_eq!(again, ct);
        assert_eq!(ct.representative().cycle_type(), ct);
        let _ = ct.denes_count();
    }
});
