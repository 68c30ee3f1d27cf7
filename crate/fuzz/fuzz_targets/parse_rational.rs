#![no_main]

use delsarte_core::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(r) = data.parse::<Rational>() {
        let text = r.to_string();
        let again: Rational = text.parse().expect("rendered form parses");
        assert_eq!(again, r);
        if !r.is_zero() {
            assert_eq!(r.recip().unwrap().recip().unwrap(), r);
        }
    }
});
