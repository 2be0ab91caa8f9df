//! Acceptance criteria, one line per criterion. All comparisons are exact;
//! the runtime limits below are the only tolerances.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polyrec::automata::{equivalent, intersection, union, Dfa, OrderedAlphabet};
use polyrec::constructors::{min_alphabet_size, Constructor};
use polyrec::enumeration::{count_words_up_to, decimate, decimate_with_budget, densities, min_words, NumerationSystem};
use polyrec::oracle::{enumerate_radix_with, oracle_decimate, oracle_rank, words_up_to, Budget, EnumerationCursor};
use polyrec::pipeline::{
    adjust_prefix, assemble, build_system, decompose, reorder_check, scale_to_integers, verify_recognizer, Polynomial,
    SystemBundle,
};

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn difference_coefficients(p: &Polynomial) -> Vec<num_bigint::BigInt> {
    let (scaled, _) = scale_to_integers(p);
    Polynomial::new(scaled.into_iter().map(BigRational::from_integer).collect())
        .difference()
        .integer_coefficients()
        .unwrap()
}

fn power_densities() -> Outcome {
    for k in 0..=5u32 {
        let l = Constructor::new().power(k);
        let dens = densities(&l, 25);
        for n in 0..=25u64 {
            ensure!(dens[n as usize] == big(n).pow(k), "L_{k} at n = {n}: {}", dens[n as usize]);
        }
    }
    Ok("k = 0..5, n = 0..25".into())
}

fn shuffle_step() -> Outcome {
    for k in 2..=4u32 {
        let l = densities(&Constructor::new().power(k), 20);
        let m = densities(&Constructor::new().shifted_power(k), 20);
        for n in 1..=20usize {
            ensure!(l[n] == &m[n - 1] * n, "k = {k}, n = {n}: {} vs {} * {}", l[n], n, m[n - 1]);
        }
    }
    Ok("k = 2..4, n = 1..20".into())
}

fn alphabet_sizes() -> Outcome {
    let expected = [1u32, 2, 3, 9, 26, 90];
    for (k, &u) in expected.iter().enumerate() {
        let k = k as u32;
        ensure!(min_alphabet_size(k) == BigUint::from(u), "u_{k} = {}", min_alphabet_size(k));
        let l = Constructor::new().power(k).trim();
        ensure!(l.alphabet().len() == u as usize, "L_{k} has {} letters", l.alphabet().len());
        let mut used = vec![false; l.alphabet().len()];
        for q in 0..l.state_count() {
            for &(s, _) in l.transitions(q) {
                used[s] = true;
            }
        }
        ensure!(used.iter().all(|&b| b), "L_{k} has an unused letter");
    }
    for m in 11..=15u64 {
        let fact: BigUint = (1..m).map(BigUint::from).product();
        ensure!(min_alphabet_size(m as u32) < fact * 3u32, "u_{m} bound fails");
    }
    Ok("1 2 3 9 26 90; u_m < 3(m-1)! for m = 11..15".into())
}

fn stirling_equivalence() -> Outcome {
    for k in 1..=4u32 {
        let dens = densities(&Constructor::new().stirling(k), 25);
        for n in 0..=25u64 {
            ensure!(dens[n as usize] == big(n).pow(k), "k = {k}, n = {n}: {}", dens[n as usize]);
        }
    }
    Ok("k = 1..4, n = 0..25".into())
}

fn poldif() -> Outcome {
    for k in 1..=3u32 {
        for alpha in 1..=5u64 {
            let dens = densities(&Constructor::new().poldif(k, alpha as usize), 25);
            for n in 0..=25u64 {
                let want = if n < alpha { BigUint::zero() } else { big(n).pow(k - 1) * (n - alpha) };
                ensure!(dens[n as usize] == want, "({k}, {alpha}) at n = {n}: {}", dens[n as usize]);
            }
        }
    }
    Ok("k = 1..3, alpha = 1..5, n = 0..25".into())
}

fn quartic_checkpoints() -> Outcome {
    let p = common::quartic();
    let dec = decompose(&difference_coefficients(&p)).map_err(|e| e.to_string())?;
    ensure!(dec.alpha == 4, "alpha = {}", dec.alpha);
    let l = assemble(&dec, &mut Constructor::new()).map_err(|e| e.to_string())?;
    let before = count_words_up_to(&l, 3);
    ensure!(before == big(214), "count at lengths <= 3 is {before}");
    let target = p.eval_natural(4).unwrap();
    ensure!(target == big(205), "P(4) = {target}");
    let dens = densities(&l, 10);
    for n in 0..=10u64 {
        let n3 = 4 * n.pow(3);
        let want = if n >= 4 { n3 + 6 * n * n - 2 * n - 4 } else { n3 + 5 * n * n };
        ensure!(dens[n as usize] == big(want), "density at {n}: {}", dens[n as usize]);
    }
    let b = build_system(&p).map_err(|e| e.to_string())?;
    ensure!(b.adjustment.removed == big(9), "removed {}", b.adjustment.removed);
    let values: Vec<u64> = b.exceptional.iter().map(|(v, _)| v.to_u64().unwrap()).collect();
    ensure!(values == [1, 5, 53], "exceptional values {values:?}");
    let first = enumerate_radix_with(b.system.dfa(), 54, Budget::default()).map_err(|e| e.to_string())?;
    for ((v, w), pos) in b.exceptional.iter().zip([2, 6, 54]) {
        ensure!(first[pos - 1] == *w, "value {v} is not word number {pos}");
    }
    Ok("214 -> 205, 9 removed; exceptional {1, 5, 53} at positions 2, 6, 54".into())
}

fn quintic_density() -> Outcome {
    let p = common::quintic();
    let q = difference_coefficients(&p);
    ensure!(q == [-5i64, -11, -2, 10, 5].map(Into::into), "Q = {q:?}");
    let dec = decompose(&q).map_err(|e| e.to_string())?;
    ensure!(dec.alpha == 12, "alpha = {}", dec.alpha);
    let l = assemble(&dec, &mut Constructor::new()).map_err(|e| e.to_string())?;
    let dens = densities(&l, 15);
    for n in 0..=15i64 {
        let want = match n {
            n if n >= 12 => 5 * n.pow(4) + 10 * n.pow(3) - 2 * n * n - 11 * n - 5,
            n if n >= 5 => 5 * n.pow(4) + 10 * n.pow(3) - 3 * n * n + n - 5,
            n if n >= 3 => 5 * n.pow(4) + 10 * n.pow(3) - 3 * n * n,
            n => 5 * n.pow(4) + 9 * n.pow(3),
        };
        ensure!(dens[n as usize] == big(want as u64), "density at {n}: {}", dens[n as usize]);
    }
    Ok("four-branch density for n = 0..15".into())
}

fn rational_checkpoints() -> Outcome {
    let p = common::rational_quartic();
    let (_, s) = scale_to_integers(&p);
    ensure!(s == big(6), "s = {s}");
    let q = difference_coefficients(&p);
    ensure!(q == [-24i64, 46, -24, 8].map(Into::into), "Q' = {q:?}");
    let dec = decompose(&q).map_err(|e| e.to_string())?;
    ensure!(dec.alpha == 24, "alpha = {}", dec.alpha);
    let l = assemble(&dec, &mut Constructor::new()).map_err(|e| e.to_string())?;
    let before = count_words_up_to(&l, 23);
    ensure!(before == big(545652), "count at lengths <= 23 is {before}");
    let target = p.eval_natural(24).unwrap() * 6u32;
    ensure!(target == big(517776), "6 P(24) = {target}");
    let (base, adj) = adjust_prefix(&l, 24, &target).map_err(|e| e.to_string())?;
    ensure!(adj.removed == big(27876), "removed {}", adj.removed);
    ensure!(count_words_up_to(&base, 23) == target, "adjusted count");
    let short = words_up_to(&l, 8, Budget { max_words: 1_000_000, max_len: 8 }).map_err(|e| e.to_string())?;
    ensure!(big(short.len() as u64) == count_words_up_to(&l, 8), "counting disagrees with enumeration to length 8");

    match decimate_with_budget(&base, 6, 0, polyrec::enumeration::DEFAULT_STATE_BUDGET) {
        Ok(dec_l) => {
            let sys = NumerationSystem::new(dec_l).map_err(|e| e.to_string())?;
            ensure!(sys.shorter_than(24) == p.eval_natural(24).unwrap(), "kept below 24: {}", sys.shorter_than(24));
            for n in 24..=34u64 {
                let want = p.eval_natural(n + 1).unwrap() - p.eval_natural(n).unwrap();
                ensure!(sys.density(n as usize) == want, "density at {n}");
                let w = sys.first_of_length(n as usize).ok_or("no word")?;
                ensure!(sys.rank(&w).unwrap() == p.eval_natural(n).unwrap(), "first word of length {n}");
            }
            Ok("s = 6; 545652 -> 517776, 27876 removed; decimation built, values checked for n = 24..34".into())
        }
        Err(e) => {
            let budget = Budget { max_words: 1_000_000, max_len: 8 };
            let words = words_up_to(&base, 8, budget).map_err(|e| e.to_string())?;
            let kept = oracle_decimate(&base, 6, 0, words.len().div_ceil(6), budget).map_err(|e| e.to_string())?;
            ensure!(
                kept.iter().enumerate().all(|(i, w)| words[6 * i] == *w),
                "kept words are not the ranks 0 mod 6"
            );
            Ok(format!("s = 6; 545652 -> 517776, 27876 removed; decimation over budget ({e}), oracle check to length 8"))
        }
    }
}

fn recognizers() -> Outcome {
    let mut notes = Vec::new();
    for (name, p) in [
        ("2x^2+3x", common::quadratic()),
        ("x^2", squares()),
        ("x^4-3x^2-2x+5", common::quartic()),
        ("(x-2)^2", shifted_square()),
    ] {
        let b = build_system(&p).map_err(|e| format!("{name}: {e}"))?;
        let mismatch = verify_recognizer(b.system.dfa(), &b.recognizer, &p, 10_000).map_err(|e| e.to_string())?;
        ensure!(mismatch.is_none(), "{name}: {mismatch:?}");
        notes.push(name);
    }
    Ok(format!("first 10^4 words of {}", notes.join(", ")))
}

fn squares_ranks() -> Outcome {
    let d = squares_system();
    let a_star = Dfa::new(d.alphabet().clone(), 1, 0, &[0], &[(0, 0, 0)]).unwrap();
    ensure!(
        equivalent(&min_words(&d), &a_star).unwrap().is_equivalent(),
        "min_words differs from a*"
    );
    for n in 0..=30u64 {
        let r = oracle_rank(&d, &vec![0; n as usize], Budget::default()).map_err(|e| e.to_string())?;
        ensure!(r == n * n, "rank of a^{n} is {r}");
    }
    Ok("I(L) = a*, rank(a^n) = n^2 for n <= 30".into())
}

fn decimation_vs_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let budget = Budget { max_words: 200_000, max_len: 10 };
    let mut checked = 0;
    for i in 0..25 {
        let d = random_infinite_dfa(&mut rng, 6, 3);
        let words = words_up_to(&d, 10, budget).map_err(|e| e.to_string())?;
        for s in 1..=5u32 {
            let mut classes = Vec::new();
            for r in 0..s {
                let dec = decimate(&d, s, r).map_err(|e| e.to_string())?;
                let su = s as usize;
                let ru = r as usize;
                let limit = if words.len() > ru { (words.len() - 1 - ru) / su + 1 } else { 0 };
                let want = oracle_decimate(&d, su, ru, limit, budget).map_err(|e| e.to_string())?;
                let got: Vec<_> = words.iter().filter(|w| dec.accepts_syms(w)).cloned().collect();
                ensure!(got == want, "dfa {i}, s = {s}, r = {r}: words differ");
                classes.push(dec);
                checked += 1;
            }
            for a in 0..classes.len() {
                for b in a + 1..classes.len() {
                    ensure!(
                        intersection(&classes[a], &classes[b]).unwrap().is_empty_language(),
                        "dfa {i}, s = {s}: classes {a} and {b} overlap"
                    );
                }
            }
            let all = classes.iter().skip(1).fold(classes[0].clone(), |acc, c| union(&acc, c).unwrap());
            ensure!(equivalent(&all, &d).unwrap().is_equivalent(), "dfa {i}, s = {s}: classes do not cover L");
        }
    }
    Ok(format!("25 automata, {checked} (s, r) pairs, words of length <= 10"))
}

fn bundles() -> Vec<(&'static str, Polynomial)> {
    vec![
        ("2x^2+3x", common::quadratic()),
        ("x^2", squares()),
        ("x^4-3x^2-2x+5", common::quartic()),
        ("(x-2)^2", shifted_square()),
        ("x^4/3-2x^3+37x^2/6-17x/2+4", common::rational_quartic()),
    ]
}

fn bijection() -> Outcome {
    for (name, p) in bundles() {
        let b = build_system(&p).map_err(|e| format!("{name}: {e}"))?;
        let sys = &b.system;
        for n in 0..10_000u64 {
            let w = sys.unrank_u64(n);
            ensure!(sys.rank(&w).unwrap() == big(n), "{name}: rank(unrank({n}))");
        }
        for (i, w) in EnumerationCursor::new(sys.dfa(), usize::MAX).take(10_000).enumerate() {
            ensure!(sys.unrank_u64(i as u64) == w, "{name}: unrank({i}) differs from enumeration");
        }
    }
    Ok("5 systems, n < 10^4 both ways".into())
}

fn reordering() -> Outcome {
    let b: SystemBundle = build_system(&common::quadratic()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..5 {
        let mut letters = b.base.alphabet().letters().to_vec();
        letters.shuffle(&mut rng);
        let order = OrderedAlphabet::new(letters).unwrap();
        ensure!(reorder_check(&b, &order, 10_000).map_err(|e| e.to_string())?, "permutation {i} fails");
    }
    Ok("5 permutations, 10^4 words each".into())
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "power densities", limit: Some(Duration::from_secs(10)), run: power_densities },
        Criterion { id: 2, title: "shuffle counting step", limit: None, run: shuffle_step },
        Criterion { id: 3, title: "alphabet sizes", limit: None, run: alphabet_sizes },
        Criterion { id: 4, title: "Stirling densities", limit: None, run: stirling_equivalence },
        Criterion { id: 5, title: "PolDif densities", limit: None, run: poldif },
        Criterion { id: 6, title: "x^4-3x^2-2x+5 checkpoints", limit: Some(Duration::from_secs(30)), run: quartic_checkpoints },
        Criterion { id: 7, title: "x^5-4x^3-2x^2+8 density", limit: None, run: quintic_density },
        Criterion { id: 8, title: "rational example checkpoints", limit: Some(Duration::from_secs(300)), run: rational_checkpoints },
        Criterion { id: 9, title: "recognizer correctness", limit: None, run: recognizers },
        Criterion { id: 10, title: "squares system", limit: None, run: squares_ranks },
        Criterion { id: 11, title: "decimation vs oracle", limit: None, run: decimation_vs_oracle },
        Criterion { id: 12, title: "rank/unrank bijection", limit: None, run: bijection },
        Criterion { id: 13, title: "alphabet reordering", limit: None, run: reordering },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let took = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, c.limit) {
            if took > limit {
                outcome = Err(format!("took {took:.1?}, limit {limit:?}"));
            }
        }
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {:>2} {:<30} {verdict} [{:.2}s] {detail}", c.id, c.title, took.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

