//! Kept in its own test binary because it sets a process-wide variable.

use tlh::cli::{run, CACHE_ENV};

#[test]
fn environment_overrides_cache_flag() {
    let dir = tempfile::tempdir().unwrap();
    let from_env = dir.path().join("env.json");
    let from_flag = dir.path().join("flag.json");
    std::env::set_var(CACHE_ENV, &from_env);
    let (code, _) = run([
        "tlh",
        "--cache",
        from_flag.to_str().unwrap(),
        "tilde",
        "--seq",
        "010",
    ]);
    std::env::remove_var(CACHE_ENV);
    assert_eq!(code, 0);
    assert!(from_env.exists());
    assert!(!from_flag.exists());
}
