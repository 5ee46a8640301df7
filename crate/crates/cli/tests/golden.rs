//! Byte-for-byte golden transcripts. Set `PRELIE_BLESS=1` to rewrite them
//! after an intentional output change, then review the diff.

mod common;

use std::fs;

use common::{golden_dir, suites, transcript};

#[test]
fn transcripts_match_golden_files() {
    let bless = std::env::var_os("PRELIE_BLESS").is_some();
    let mut stale = Vec::new();
    for suite in suites() {
        let path = golden_dir().join(format!("{}.txt", suite.name));
        let text = transcript(&suite);
        if bless {
            fs::write(&path, &text).unwrap();
        }
        let golden = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if golden != text {
            stale.push(suite.name);
        }
    }
    assert!(stale.is_empty(), "transcripts differ from golden files: {stale:?}");
}
