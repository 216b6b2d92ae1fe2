#![no_main]

use dstab_core::simplicial::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = text.parse::<Field>() {
        assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
    }
});
