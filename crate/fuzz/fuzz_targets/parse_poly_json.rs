#![no_main]

use libfuzzer_sys::fuzz_target;
use mtutte::BivarPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = BivarPoly::from_json(text) {
        let rendered = p.to_json();
        assert_eq!(BivarPoly::from_json(&rendered).expect("canonical JSON parses"), p);
        assert_eq!(p.to_string().parse::<BivarPoly>().expect("text form parses"), p);
    }
});
