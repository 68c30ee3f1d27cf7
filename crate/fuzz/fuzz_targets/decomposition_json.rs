#![no_main]

use delsarte_core::quasicode::{recompose, Decomposition, DualSolution};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(b) = serde_json::from_slice::<Decomposition>(data) {
        let text = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<Decomposition>(&text).unwrap(), b);
        if b.n <= 32 {
            assert_eq!(recompose(&b).len(), b.n + 1);
        }
    }
    if let Ok(c) = serde_json::from_slice::<DualSolution>(data) {
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<DualSolution>(&text).unwrap(), c);
        if c.n <= 32 {
            let _ = c.feasibility_violation();
        }
    }
});
