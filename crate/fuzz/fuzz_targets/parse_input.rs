#![no_main]

use libfuzzer_sys::fuzz_target;
use mtutte::engines::{convolution_tutte, multiplicity_tutte_definition};
use mtutte::input::MatroidInput;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(input) = MatroidInput::parse(text) else {
        return;
    };
    let Ok(mm) = input.build(8) else {
        return;
    };
    let again = MatroidInput::parse(&MatroidInput::from_tables(&mm).to_json())
        .and_then(|s| s.build(8))
        .expect("table form re-parses");
    assert_eq!(again, mm);
    let def = multiplicity_tutte_definition(&mm).expect("within guard");
    assert_eq!(convolution_tutte(&mm).expect("within guard"), def);
});
