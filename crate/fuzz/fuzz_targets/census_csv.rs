#![no_main]

use delsarte_core::census::{read_csv, read_document};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(rows) = read_csv(data) {
        let mut out = csv::Writer::from_writer(Vec::new());
        for r in &rows {
            out.serialize(r).unwrap();
        }
        let bytes = out.into_inner().unwrap();
        assert_eq!(read_csv(&bytes[..]).unwrap(), rows);
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = read_document(text);
    }
});
