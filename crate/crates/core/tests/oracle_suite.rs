//! The full randomized oracle run used as the correctness gate for the
//! fast paths.

use squareperc::oracle::{run_oracle_suite, OracleConfig};

#[test]
fn two_hundred_instances_up_to_n25_are_clean() {
    let stats = run_oracle_suite(&OracleConfig {
        n_max: 25,
        trials: 200,
        master_seed: 0xD1CE,
    })
    .unwrap_or_else(|f| panic!("{f}"));
    assert_eq!(stats.instances, 200);
    assert!(stats.squares_checked > 0);
}
