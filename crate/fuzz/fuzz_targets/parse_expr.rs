//! Expression parser: never panics, errors point inside the input, and any
//! parsed element survives a print/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lexval_cli::expr::parse_ypoly;

fuzz_target!(|data: &str| {
    match parse_ypoly(data) {
        Ok(f) => {
            let printed = f.to_string();
            let again = parse_ypoly(&printed).expect("printed form parses");
            assert_eq!(again, f, "round trip changed {printed}");
        }
        Err(e) => assert!(e.offset <= data.len()),
    }
});
