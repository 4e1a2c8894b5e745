#![no_main]

use libfuzzer_sys::fuzz_target;
use permrecon::SmallGraph;

fuzz_target!(|text: &str| {
    if let Ok(g) = SmallGraph::parse_edge_list("fuzz", text) {
        if g.vertex_count() <= 64 {
            let _ = g.lambda();
            let _ = g.mu();
            let _ = g.n_value(1);
        }
    }
});
