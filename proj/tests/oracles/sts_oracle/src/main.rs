use nistrs::prelude::*;
use std::io::Read;

fn emit(name: &str, idx: usize, p: f64) {
    println!("{} {} {:.17e}", name, idx, p);
}

fn main() {
    let path = std::env::args().nth(1).expect("usage: sts_oracle <bits.txt>");
    let mut s = String::new();
    std::fs::File::open(&path).unwrap().read_to_string(&mut s).unwrap();
    let s: String = s.chars().filter(|c| *c == '0' || *c == '1').collect();
    let data = BitsData::from_text(s);
    emit("Freq", 0, frequency_test(&data).1);
    emit("BF", 0, block_frequency_test(&data, 128).unwrap().1);
    emit("Run", 0, runs_test(&data).1);
    emit("LR", 0, longest_run_of_ones_test(&data).unwrap().1);
    emit("Rank", 0, rank_test(&data).unwrap().1);
    emit("FFT", 0, fft_test(&data).1);
    for (i, r) in non_overlapping_template_test(&data, 9).unwrap().iter().enumerate() {
        emit("NOT", i, r.1);
    }
    emit("OT", 0, overlapping_template_test(&data, 9).1);
    emit("Uni", 0, universal_test(&data).1);
    emit("LC", 0, linear_complexity_test(&data, 500).1);
    for (i, r) in serial_test(&data, 16).iter().enumerate() {
        emit("Seri", i, r.1);
    }
    emit("AE", 0, approximate_entropy_test(&data, 10).1);
    for (i, r) in cumulative_sums_test(&data).iter().enumerate() {
        emit("CS", i, r.1);
    }
    match random_excursions_test(&data) {
        Ok(v) => for (i, r) in v.iter().enumerate() { emit("RE", i, r.1) },
        Err(e) => println!("RE NA {}", e),
    }
    match random_excursions_variant_test(&data) {
        Ok(v) => for (i, r) in v.iter().enumerate() { emit("REV", i, r.1) },
        Err(e) => println!("REV NA {}", e),
    }
}
