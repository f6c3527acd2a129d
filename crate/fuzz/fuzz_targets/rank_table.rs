#![no_main]

use libfuzzer_sys::fuzz_target;
use mtutte::engines::{tutte_by_activities, tutte_definition, tutte_deletion_contraction};
use mtutte::matroid::validate_rank_table;
use mtutte::Matroid;

fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else {
        return;
    };
    let n = usize::from(head % 6);
    let table: Vec<u32> = rest.iter().take(1 << n).map(|&b| u32::from(b % 4)).collect();
    let violations = validate_rank_table(n, &table);
    match Matroid::from_rank_table(n, &table) {
        Ok(m) => {
            assert!(violations.expect("length matches").is_empty());
            assert_eq!(m.dual().dual(), m);
            let t = tutte_definition(&m).expect("small");
            assert_eq!(tutte_deletion_contraction(&m).expect("small"), t);
            let order: Vec<usize> = (0..n).rev().collect();
            assert_eq!(tutte_by_activities(&m, &order).expect("small").0, t);
        }
        Err(_) => assert!(violations.map_or(true, |v| !v.is_empty())),
    }
});
