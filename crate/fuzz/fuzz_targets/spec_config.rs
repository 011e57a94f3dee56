#![no_main]

use libfuzzer_sys::fuzz_target;
use lexval_cli::config::load_spec;

fuzz_target!(|data: &str| {
    // Accepted parameters must give a map that can value its own w.
    if let Ok((_, spec)) = load_spec(data) {
        let _ = spec.value(spec.w());
    }
});
