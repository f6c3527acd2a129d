#![no_main]

use libfuzzer_sys::fuzz_target;
use mtutte::BivarPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<BivarPoly>() {
        let rendered = p.to_string();
        assert_eq!(rendered.parse::<BivarPoly>().expect("rendering parses"), p);
        assert_eq!(BivarPoly::from_json(&p.to_json()).expect("JSON parses"), p);
    }
});
