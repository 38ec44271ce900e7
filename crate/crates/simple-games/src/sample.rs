//! Seeded generators for strings and coalitions near the interesting parts
//! of a staged construction.

use rand::Rng;
use simple_games_core::omega::Stages;
use simple_games_core::{BitString, SetSpec};

/// A string of length `len` starting with `1`: a prefix of `B` or a member
/// of `F` continued along `B`, with random flips at a random rate.
pub fn string_near<R: Rng>(st: &Stages, len: usize, rng: &mut R) -> BitString {
    let b = st.b_sequence(len).expect("length within computed stages");
    let f: Vec<&BitString> = st.all_f().filter(|a| a.len() <= len).collect();
    let base = if f.is_empty() || rng.gen_bool(0.5) {
        b
    } else {
        let a = f[rng.gen_range(0..f.len())];
        a.concat(&BitString::from_bits(b.bits()[a.len()..].to_vec()))
    };
    let mut bits = base.into_bits();
    let noise = [0.0, 0.02, 0.1, 0.5][rng.gen_range(0..4)];
    for x in bits.iter_mut().skip(1) {
        if rng.gen_bool(noise) {
            *x = !*x;
        }
    }
    if let Some(first) = bits.first_mut() {
        *first = true;
    }
    BitString::from_bits(bits)
}

/// An eventually constant coalition: uniformly random, near `F`, or near
/// `B`, each possibly complemented.
pub fn coalition<R: Rng>(st: &Stages, rng: &mut R) -> SetSpec {
    let max = st.max_len().max(4);
    let len = rng.gen_range(0..=max);
    let f: Vec<&BitString> = st.all_f().collect();
    let mut bits: Vec<bool> = match rng.gen_range(0..3) {
        1 if !f.is_empty() => f[rng.gen_range(0..f.len())].bits().to_vec(),
        2 if len <= st.max_len() => st
            .b_sequence(len)
            .expect("within computed stages")
            .into_bits(),
        _ => (0..len).map(|_| rng.gen_bool(0.5)).collect(),
    };
    for x in bits.iter_mut() {
        if rng.gen_bool(0.05) {
            *x = !*x;
        }
    }
    if rng.gen_bool(0.5) {
        bits.iter_mut().for_each(|x| *x = !*x);
    }
    SetSpec::new(BitString::from_bits(bits), rng.gen_bool(0.5))
}

/// A uniformly random eventually constant coalition with a short prefix.
pub fn small_coalition<R: Rng>(max_prefix: usize, rng: &mut R) -> SetSpec {
    let len = rng.gen_range(0..=max_prefix);
    SetSpec::new(
        BitString::from_bits((0..len).map(|_| rng.gen_bool(0.5)).collect()),
        rng.gen_bool(0.5),
    )
}
