#![no_main]

use libfuzzer_sys::fuzz_target;
use permrecon::reconstruct::{parse_patterns, reconstruct};
use permrecon::CayleyGraph;
use permrecon::GeneratorKind;

fuzz_target!(|text: &str| {
    if let Ok(patterns) = parse_patterns(text) {
        let n = patterns[0].degree();
        assert!(patterns.iter().all(|p| p.degree() == n));
        if (2..=6).contains(&n) {
            let g = CayleyGraph::named(GeneratorKind::AllTranspositions, n).unwrap();
            let _ = reconstruct(&g, &patterns, 1);
        }
    }
});
