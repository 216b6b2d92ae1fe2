#![no_main]

use dstab_core::simplicial::{parse_facets, Field};
use dstab_core::Caps;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = parse_facets(text) else { return };
    if c.universe().len() <= 10 {
        let q = c.reduced_homology_dims(Field::Rationals, &Caps::default());
        let p = c.reduced_homology_dims(Field::Prime(3), &Caps::default());
        if let (Ok(q), Ok(p)) = (q, p) {
            let euler = |d: &[usize]| d.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>();
            assert_eq!(euler(q.as_slice()), euler(p.as_slice()));
        }
    }
});
