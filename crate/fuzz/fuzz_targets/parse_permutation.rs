#![no_main]

use libfuzzer_sys::fuzz_target;
use permrecon::Permutation;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<Permutation>() {
        let again: Permutation = p.to_string().parse().expect("display output parses");
        assert_eq!(again, p);
        assert_eq!(Permutation::unrank(p.degree(), p.rank()).unwrap(), p);
    }
});
