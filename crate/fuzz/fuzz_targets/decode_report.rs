#![no_main]

use dstab_core::assoc::{AssSet, CmsState};
use dstab_core::depth::{DegreeVector, DepthCertificate};
use dstab_core::stability::DstabReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(rep) = serde_json::from_slice::<DstabReport>(data) {
        let again = serde_json::to_vec(&rep).unwrap();
        assert_eq!(serde_json::from_slice::<DstabReport>(&again).unwrap(), rep);
    }
    let _ = serde_json::from_slice::<DepthCertificate>(data);
    let _ = serde_json::from_slice::<AssSet>(data);
    let _ = serde_json::from_slice::<Vec<CmsState>>(data);
    if let Ok(a) = serde_json::from_slice::<DegreeVector>(data) {
        let _ = (a.negative_support(), a.positive_part());
    }
});
