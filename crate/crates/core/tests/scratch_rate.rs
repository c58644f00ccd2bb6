use std::time::Instant;
use surfcross_core::families;
use surfcross_core::graph::Surface;
use surfcross_core::solver::{self, CrossOutcome, SolveOptions};

#[test]
fn sphere_scan_rate() {
    // cap = 3 forces full refutation of levels 0..3 of H_{3,2}, then Unknown.
    let g = families::gen_hamburger_wide(3, 2).unwrap();
    let opts = SolveOptions { cap: Some(3), ..SolveOptions::default() };
    let t0 = Instant::now();
    let out = solver::crossing_number(&g, Surface::sphere(), &opts).unwrap();
    let dt = t0.elapsed();
    // Level sizes: 1 + C(136,1)=136 + level2 ~ 9.5k + level3 ~ 450k-ish.
    eprintln!("levels 0..3 of H32 sphere: {out:?} in {dt:?}");
}
