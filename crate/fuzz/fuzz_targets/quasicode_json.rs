#![no_main]

use delsarte_core::quasicode::{check_feasible, decompose, extend, puncture, recompose, Quasicode};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(q) = serde_json::from_slice::<Quasicode>(data) else {
        return;
    };
    let text = serde_json::to_string(&q).unwrap();
    assert_eq!(serde_json::from_str::<Quasicode>(&text).unwrap(), q);

    // Keep Krawtchouk tables small.
    if q.n() > 32 {
        return;
    }
    assert_eq!(recompose(&decompose(&q)), q.values());
    if check_feasible(&q).is_ok() {
        let e = extend(&q);
        assert!(check_feasible(&e).is_ok());
        assert_eq!(e.objective(), q.objective());
        if q.d() >= 2 {
            let p = puncture(&q).unwrap();
            assert!(check_feasible(&p).is_ok());
        }
    }
});
