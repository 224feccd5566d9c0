//! Exogenous bursts dominate a quiet arrival stream.

use folkdyn_core::analytics::{detect_peak, PeakBucket};
use folkdyn_core::tagsim::{simulate_url_stream, ArrivalSchedule, Burst, SimConfig};
use folkdyn_core::Seed;

#[test]
fn burst_at_day_200_is_the_peak() {
    let cfg = SimConfig {
        total_bookmarks: 100,
        arrival: ArrivalSchedule {
            segments: vec![(1.0, 0.2)],
            burst: Some(Burst { start_day: 200.0, multiplier: 20.0, duration_days: 5.0 }),
        },
        ..SimConfig::default()
    };
    let seeds = 200u64;
    let mut hits = 0;
    for s in 0..seeds {
        let h = simulate_url_stream(&cfg, "http://burst", Seed::new(s)).unwrap();
        let peak = detect_peak(&h).unwrap();
        if (200..=205).contains(&peak.peak_day) {
            assert_eq!(peak.bucket, PeakBucket::After6Months);
            hits += 1;
        }
    }
    println!("burst peak inside [200, 205]: {hits}/{seeds}");
    assert!(hits * 100 >= 95 * seeds, "{hits}/{seeds}");
}
