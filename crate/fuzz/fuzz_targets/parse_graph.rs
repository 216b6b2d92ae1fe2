#![no_main]

use dstab_core::graph::{parse_graph, render_graph};
use dstab_core::stability::{dstab_formula, mt_bound, Verify};
use dstab_core::Caps;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_graph(text) else { return };
    assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    if g.vertex_count() <= 12 {
        let caps = Caps::default();
        let _ = mt_bound(&g, &caps);
        let _ = dstab_formula(&g, &caps, Verify::Off);
    }
});
