//! Cross-checks against independent, deliberately naive oracles: string
//! slicing for factors and rotations, popcount for Thue-Morse, and floor
//! differences at a high convergent for characteristic words.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use lie_complexity::complexity::{
    lie_complexity_bruteforce, lie_complexity_via_rauzy, sturmian_lie_formula, Morphism, WordSource,
};
use lie_complexity::sturmian::{characteristic_prefix, mechanical_word, SlopeSpec};
use lie_complexity::{Alphabet, Word};

fn corpus_text(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name);
    fs::read_to_string(path).unwrap().trim_end().to_string()
}

fn naive_factors(text: &str, n: usize) -> HashSet<&str> {
    (0..=text.len() - n).map(|i| &text[i..i + n]).collect()
}

fn naive_lie(text: &str, n: usize) -> usize {
    let factors = naive_factors(text, n);
    let mut classes = HashSet::new();
    for f in &factors {
        let rotations: Vec<String> = (0..n).map(|i| format!("{}{}", &f[i..], &f[..i])).collect();
        if rotations.iter().all(|r| factors.contains(r.as_str())) {
            classes.insert(rotations.into_iter().min().unwrap());
        }
    }
    classes.len()
}

#[test]
fn thue_morse_prefix_matches_popcount_parity() {
    let expected = corpus_text("thue_morse_4096.txt");
    let prefix = WordSource::thue_morse(4096).prefix(4096).unwrap();
    assert_eq!(prefix.to_string(), expected);
    for i in [0usize, 1, 2, 3, 100, 1023, 4095] {
        assert_eq!(prefix[i], (i.count_ones() % 2) as u8);
    }
}

#[test]
fn literal_words_match_the_naive_oracle() {
    let tm = corpus_text("thue_morse_4096.txt");
    let a2 = corpus_text("random_a2.txt");
    let a3 = corpus_text("random_a3.txt");
    let ternary = Alphabet::new("012").unwrap();
    for (text, alphabet) in [
        (&tm, Alphabet::binary()),
        (&a2, Alphabet::binary()),
        (&a3, ternary),
    ] {
        let source = WordSource::literal(alphabet.parse_word(text).unwrap());
        for n in 1..=24 {
            let expected = naive_lie(text, n);
            assert_eq!(
                lie_complexity_bruteforce(&source, n).unwrap(),
                expected,
                "n={n}"
            );
            assert_eq!(
                lie_complexity_via_rauzy(&source, n).unwrap(),
                expected,
                "n={n}"
            );
        }
    }
}

#[test]
fn sturmian_sources_match_the_naive_oracle() {
    for s in ["2;(1)", "3;(2)", "2,3,1;(4,1)", "1,3;(2,4)"] {
        let spec: SlopeSpec = s.parse().unwrap();
        let source = WordSource::sturmian(&spec).unwrap();
        let text = source.prefix(20_000).unwrap().to_string();
        for n in 1..=60 {
            // guard: the naive prefix must already show all n + 1 factors
            assert_eq!(naive_factors(&text, n).len(), n + 1, "[{s}] n={n}");
            let expected = naive_lie(&text, n);
            assert_eq!(lie_complexity_bruteforce(&source, n).unwrap(), expected);
            assert_eq!(
                sturmian_lie_formula(&spec.normalize().unwrap().0, n).unwrap() as usize,
                expected,
                "[{s}] n={n}"
            );
        }
    }
}

/// Convergent `p_k / q_k` of `[0; a_1, a_2, ...]` by the textbook recurrence,
/// taken at the first `k` with `q_k > bound`.
fn convergent_beyond(spec: &SlopeSpec, bound: i128) -> (i128, i128) {
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, 0i128, 1i128);
    let mut i = 1;
    while q1 <= bound {
        let a = spec.quotient(i).unwrap() as i128;
        (p0, q0, p1, q1) = (p1, q1, a * p1 + p0, a * q1 + q0);
        i += 1;
    }
    (p1, q1)
}

#[test]
fn characteristic_prefixes_match_floor_differences() {
    for s in [
        "2;(1)",
        "3;(2)",
        "4;(1)",
        "2,3,1;(4,1)",
        "2;(3,1)",
        "7,1;(2,5)",
    ] {
        let spec: SlopeSpec = s.parse().unwrap();
        let (p, q) = convergent_beyond(&spec, 10_000);
        let mech = mechanical_word(p, q, p, q, 2000).unwrap();
        assert_eq!(
            characteristic_prefix(&spec, 2000).unwrap(),
            mech,
            "[{s}] via {p}/{q}"
        );
    }
}

#[test]
fn fibonacci_morphism_and_slope_agree() {
    let from_morphism = WordSource::morphism(Morphism::fibonacci(), 0, 5000).unwrap();
    let from_slope = WordSource::fibonacci();
    assert_eq!(
        from_morphism.prefix(5000).unwrap(),
        from_slope.prefix(5000).unwrap()
    );
    assert_eq!(
        from_slope.prefix(13).unwrap(),
        "0100101001001".parse::<Word>().unwrap()
    );
}
