// Scratch calibration harness; run with --release.
use rayon::prelude::*;
use squareperc::analysis::{
    count_non_bonded, count_nonedges_without_common_neighbor, t1_components,
    t1_diameter_at_most_two_with_cap,
};
use squareperc::experiments::{expected_isolated_t1, expected_nonbonded_squares, threshold_p};
use squareperc::sampler::{derive_trial_seed, sample_gnp};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(String::as_str).unwrap_or("all");
    let seed: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(2024);

    if which == "all" || which == "c5" {
        let t0 = Instant::now();
        let (n, p, trials) = (500usize, 0.1115f64, 100u64);
        let counts: Vec<u64> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                count_nonedges_without_common_neighbor(&g)
            })
            .collect();
        let mean = counts.iter().sum::<u64>() as f64 / trials as f64;
        let expect = expected_isolated_t1(n, p);
        println!(
            "c5: mean={mean:.3} expect={expect:.3} ratio={:.4} [{:?}]",
            mean / expect,
            t0.elapsed()
        );
    }

    if which == "all" || which == "c6" {
        let t0 = Instant::now();
        let (n, p, trials) = (300usize, 0.15f64, 300u64);
        let counts: Vec<u64> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                count_non_bonded(&g)
            })
            .collect();
        let mean = counts.iter().sum::<u64>() as f64 / trials as f64;
        let expect = expected_nonbonded_squares(n, p);
        println!(
            "c6: mean={mean:.4} expect={expect:.4} ratio={:.4} [{:?}]",
            mean / expect,
            t0.elapsed()
        );
    }

    if which == "all" || which == "c7" {
        let t0 = Instant::now();
        let (n, trials) = (1024usize, 200u64);
        for c in [0.7f64, 1.4] {
            let p = threshold_p(c, n).unwrap();
            let conn: u64 = (0..trials)
                .into_par_iter()
                .map(|t| {
                    let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                    t1_components(&g).s_connected().connected as u64
                })
                .sum();
            println!(
                "c7: c={c} p={p:.5} s_connected_freq={:.3} [{:?}]",
                conn as f64 / trials as f64,
                t0.elapsed()
            );
        }
    }

    if which == "all" || which == "c8" {
        let t0 = Instant::now();
        let (n, trials) = (4096usize, 50u64);
        let p = 1.25 * ((n as f64).ln() / n as f64).sqrt();
        let hits: u64 = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                let d = t1_components(&g);
                (d.s_connected().connected && d.isolated_count() > 0) as u64
            })
            .sum();
        println!(
            "c8: p={p:.5} fraction={:.3} [{:?}]",
            hits as f64 / trials as f64,
            t0.elapsed()
        );
    }

    if which == "all" || which == "c9" {
        let t0 = Instant::now();
        let (n, p, trials) = (200usize, 0.7f64, 20u64);
        let hits: u64 = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                t1_diameter_at_most_two_with_cap(&g, 100_000).unwrap() as u64
            })
            .sum();
        println!("c9: diam<=2 in {hits}/{trials} [{:?}]", t0.elapsed());
    }

    if which == "all" || which == "c10" {
        let t0 = Instant::now();
        let (n, p, trials) = (2048usize, 0.07f64, 50u64);
        let results: Vec<(usize, usize, Vec<usize>)> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let g = sample_gnp(n, p, derive_trial_seed(seed, t)).unwrap();
                let d = t1_components(&g);
                let sizes = d.nontrivial_sizes();
                (d.largest(), d.second_largest(), sizes)
            })
            .collect();
        let giant_floor = 0.01 * n as f64 * n as f64;
        let mut ok = 0;
        let mut worst_second = 0usize;
        for (_, _, sizes) in &results {
            let giants = sizes.iter().filter(|&&s| s as f64 >= giant_floor).count();
            let second_nontrivial = sizes.get(1).copied().unwrap_or(0);
            worst_second = worst_second.max(second_nontrivial);
            if giants == 1 && second_nontrivial <= 200 {
                ok += 1;
            }
        }
        println!(
            "c10: ok={ok}/{trials} worst_second_nontrivial={worst_second} [{:?}]",
            t0.elapsed()
        );
    }
}
