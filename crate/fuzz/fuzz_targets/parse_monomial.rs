#![no_main]

use dstab_core::monomial::Monomial;
use libfuzzer_sys::fuzz_target;

// First byte picks the number of variables.
fuzz_target!(|data: &[u8]| {
    let Some((&r, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let r = usize::from(r % 24);
    if let Ok(m) = Monomial::parse(text, r) {
        assert_eq!(m.nvars(), r);
        assert_eq!(Monomial::parse(&m.to_string(), r).unwrap(), m);
    }
});
