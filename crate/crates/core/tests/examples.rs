//! Runs every example's main as a test.

#[path = "../examples/field_arithmetic.rs"]
mod field_arithmetic;

#[path = "../examples/generating_function_oracle.rs"]
mod generating_function_oracle;

#[path = "../examples/berlekamp_massey.rs"]
mod berlekamp_massey;

#[path = "../examples/games_chan.rs"]
mod games_chan;

#[path = "../examples/period_21_reduction.rs"]
mod period_21_reduction;

#[path = "../examples/antisymmetric.rs"]
mod antisymmetric;

#[path = "../examples/auto_dispatch.rs"]
mod auto_dispatch;

#[path = "../examples/cost_bounds.rs"]
mod cost_bounds;

#[path = "../examples/sequence_files.rs"]
mod sequence_files;

#[test]
fn example_field_arithmetic() {
    field_arithmetic::main().unwrap();
}

#[test]
fn example_generating_function_oracle() {
    generating_function_oracle::main().unwrap();
}

#[test]
fn example_berlekamp_massey() {
    berlekamp_massey::main().unwrap();
}

#[test]
fn example_games_chan() {
    games_chan::main().unwrap();
}

#[test]
fn example_period_21_reduction() {
    period_21_reduction::main().unwrap();
}

#[test]
fn example_antisymmetric() {
    antisymmetric::main().unwrap();
}

#[test]
fn example_auto_dispatch() {
    auto_dispatch::main().unwrap();
}

#[test]
fn example_cost_bounds() {
    cost_bounds::main().unwrap();
}

#[test]
fn example_sequence_files() {
    sequence_files::main().unwrap();
}
