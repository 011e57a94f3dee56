#![no_main]

use libfuzzer_sys::fuzz_target;
use lexval::valgroup::{ExtValue, MonoidMode, ValuePair};

fuzz_target!(|data: &str| {
    if let Ok(v) = data.parse::<ValuePair>() {
        assert_eq!(v.to_string().parse::<ValuePair>().unwrap(), v);
    }
    if let Ok(v) = data.parse::<ExtValue>() {
        assert_eq!(v.to_string().parse::<ExtValue>().unwrap(), v);
    }
    if let Ok(m) = data.parse::<MonoidMode>() {
        assert_eq!(m.name().parse::<MonoidMode>().unwrap(), m);
    }
});
