//! Run the full pipeline over a directory tree: discovery, parallel
//! scanning, merge, and the aligned table report. Pass a path to scan your
//! own tree; with no argument a small mixed-dialect demo tree is scanned.
//!
//! ```bash
//! cargo run --example scan_tree [path/to/sources]
//! ```

use std::fs;
use std::io::Write as _;

use tfactor::{run, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (root, _keep_alive) = match std::env::args_os().nth(1) {
        Some(path) => (path.into(), None),
        None => {
            let dir = tempfile::tempdir()?;
            fs::write(
                dir.path().join("vec_like.hpp"),
                "template<class T>\nclass VecLike {\npublic:\n    T get(int i) { return items[i]; }\n    int size() { return count; }\nprivate:\n    T *items;\n    int count;\n};\n",
            )?;
            fs::write(
                dir.path().join("Registry.java"),
                "public class Registry<K> {\n    public <V> V lookup(K key, V fallback) {\n        return fallback;\n    }\n    public void clear() {\n    }\n}\n",
            )?;
            fs::write(
                dir.path().join("util.cpp"),
                "struct Flags {\n    int bits;\n};\nint add(int a, int b) {\n    return a + b;\n}\n",
            )?;
            (dir.path().to_path_buf(), Some(dir))
        }
    };

    let config = RunConfig { roots: vec![root], ..RunConfig::default() };
    let outcome = run(&config)?;
    for diagnostic in &outcome.diagnostics {
        eprintln!("{diagnostic}");
    }
    std::io::stdout().write_all(&outcome.rendered)?;
    Ok(())
}
