//! Seeded benchmark over N = 3 * 7^h: reduction + Games-Chan against the
//! linear budget, Berlekamp-Massey for comparison.

use lincomp::bench::{run_bench, BenchConfig};

pub fn main() -> lincomp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/bench_3x7h.toml");
    let mut cfg = BenchConfig::from_file(path)?;
    // keep the example quick; the full family is in the config file
    cfg.h_max = cfg.h_max.min(3);
    cfg.trials = 2;
    let report = run_bench(&cfg)?;
    print!("{}", report.to_table());
    assert_eq!(report.violations, 0);
    Ok(())
}
