//! One-time generator for the frozen diameter fixtures. Walks the full
//! k = 2 length window with exact diameters and rewrites the two CSV files
//! under fixtures/; subsequent test runs replay slices and compare bytes.

use std::fs;
use std::time::Instant;

use subdiam::catalogue;
use subdiam::edit::{diameter, DiameterMode};
use subdiam::language::FactorClosure;
use subdiam::render;

fn main() {
    let started = Instant::now();
    let sub = catalogue::thue_morse();
    let alphabet = sub.alphabet();

    eprintln!("computing factor closure up to length 511");
    let closure = FactorClosure::compute(&sub, 511).expect("factor closure");
    eprintln!(
        "closure done: {} factors in {} rounds, {:.1}s",
        closure.size(),
        closure.rounds(),
        started.elapsed().as_secs_f64()
    );

    let mut range = String::from("n,doubled_diam\n");
    let mut pow2 = format!("{}\n", render::DIAM_HEADER);

    let mut lengths: Vec<usize> = (16..=511).collect();
    lengths.insert(0, 8);
    for n in lengths {
        let set = closure.set(n);
        let report = diameter(&set, DiameterMode::Exact).expect("exact diameter");
        if n >= 16 {
            range.push_str(&format!("{},{}\n", n, report.value.doubled()));
        }
        if n.is_power_of_two() {
            pow2.push_str(&render::csv_diam_row(&report, alphabet));
            pow2.push('\n');
        }
        if n % 25 == 0 || n.is_power_of_two() {
            eprintln!(
                "n={n}: words={} doubled={} evaluated={} pruned={} elapsed={:.1}s",
                set.words.len(),
                report.value.doubled(),
                report.pairs_evaluated,
                report.pairs_pruned,
                started.elapsed().as_secs_f64()
            );
        }
    }

    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    fs::write(format!("{dir}/tm_diam_16_511.csv"), range).expect("write range fixture");
    fs::write(format!("{dir}/tm_diam_pow2.csv"), pow2).expect("write pow2 fixture");
    eprintln!(
        "fixtures written to {dir} in {:.1}s total",
        started.elapsed().as_secs_f64()
    );
}
