//! Verification suites behind `btdist verify`.

use btdist::rank::{factorial, unrank};
use btdist::{
    alpha_power, distance_table, enumerate_block_transpositions, exact_distance, find_2move_left, find_2move_right,
    shift_block_transposition, sort_permutation, three_bond_witness, toric_map, verify_word, witness_oracle,
    ExtendedPermutation, Permutation,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{CliError, CliResult, Suite};

fn fail(msg: String) -> CliError {
    CliError::Internal(msg)
}

fn limit(max_n: Option<usize>, default: usize, cap: usize) -> CliResult<usize> {
    let n = max_n.unwrap_or(default);
    if n > cap {
        return Err(CliError::Input(format!("--max-n {n} exceeds {cap} for this suite")));
    }
    Ok(n)
}

fn all_perms(n: usize) -> impl Iterator<Item = Permutation> {
    (0..factorial(n)).map(move |r| unrank(n, r))
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_one_line(&v).expect("shuffled identity")
}

pub fn run(suite: Suite, max_n: Option<usize>, seed: u64) -> CliResult<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Shifting => shifting(limit(max_n, 8, 40)?),
        Suite::Toric => toric(limit(max_n, 7, 9)?),
        Suite::Criteria => criteria(limit(max_n, 6, 8)?),
        Suite::Witness => witness(limit(max_n, 7, 9)?, &mut rng),
        Suite::Metric => metric(limit(max_n, 5, 6)?),
        Suite::Sort => sort(limit(max_n, 60, 200)?, &mut rng),
    }
}

fn shifting(max_n: usize) -> CliResult<String> {
    let mut checked = 0;
    for n in 2..=max_n {
        for cp in enumerate_block_transpositions(n)? {
            for r in 0..=n {
                let s = shift_block_transposition(&cp, r)?;
                let lhs = cp.extended().to_extended_permutation().compose(&alpha_power(n, r)?)?;
                let rhs = alpha_power(n, s.exponent)?.compose(&s.cut_points.extended().to_extended_permutation())?;
                if lhs != rhs {
                    return Err(fail(format!("shifting identity, case {}: {cp} with r = {r}", s.case_id)));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("shifting: {checked} checks passed for n <= {max_n}"))
}

fn toric(max_n: usize) -> CliResult<String> {
    let mut checked = 0;
    for n in 1..=max_n {
        let table = distance_table(n)?;
        for pi in all_perms(n) {
            let d = table.get(&pi)?;
            for r in 0..=n {
                let image = toric_map(&pi, r)?;
                if table.get(&image)? != d {
                    return Err(fail(format!("toric invariance: d({pi}) != d({image}) at r = {r}")));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("toric: {checked} checks passed for n <= {max_n}"))
}

fn criteria(max_n: usize) -> CliResult<String> {
    let mut matched = 0;
    for n in 1..=max_n {
        for r in 0..factorial(n + 1) {
            let p = ExtendedPermutation::new(unrank(n + 1, r).images().to_vec())?;
            let before = p.circular_bonds().count;
            for found in [find_2move_right(&p), find_2move_left(&p)].into_iter().flatten() {
                let after = found.apply(&p).circular_bonds().count;
                if after < before + 2 {
                    return Err(fail(format!(
                        "criterion {}: {} on {:?} gains {} bonds",
                        found.criterion_case,
                        found.cut_points,
                        p.values(),
                        after as i64 - before as i64
                    )));
                }
                matched += 1;
            }
        }
    }
    Ok(format!("criteria: {matched} matched moves gain >= 2 bonds for n <= {max_n}"))
}

fn witness(max_n: usize, rng: &mut ChaCha8Rng) -> CliResult<String> {
    let check = |pi: &Permutation| -> CliResult<()> {
        let w = three_bond_witness(pi)?;
        w.verify(pi)
            .map_err(|e| fail(format!("three-bond witness ({}): {e}", w.route)))
    };
    let mut exhaustive = 0;
    for n in 1..=max_n {
        for pi in all_perms(n).filter(|p| p.is_bondless() && !p.is_reverse()) {
            check(&pi)?;
            witness_oracle(&pi).map_err(|e| fail(format!("witness oracle on {pi}: {e}")))?;
            exhaustive += 1;
        }
    }
    let mut sampled = 0;
    while sampled < 10_000 {
        let pi = random_perm(50, rng);
        if pi.is_bondless() {
            check(&pi)?;
            sampled += 1;
        }
    }
    Ok(format!(
        "witness: {exhaustive} exhaustive cases for n <= {max_n} and {sampled} samples at n = 50 passed"
    ))
}

fn metric(max_n: usize) -> CliResult<String> {
    for n in 1..=max_n {
        let table = distance_table(n)?;
        let perms: Vec<Permutation> = all_perms(n).collect();
        let size = perms.len();
        let mut d = vec![0u8; size * size];
        for (a, pi) in perms.iter().enumerate() {
            for (b, nu) in perms.iter().enumerate() {
                d[a * size + b] = table.get(&nu.inverse().compose(pi)?)?;
            }
        }
        for a in 0..size {
            for b in 0..size {
                let dab = d[a * size + b];
                if (dab == 0) != (a == b) {
                    return Err(fail(format!("identity of indiscernibles: {} and {}", perms[a], perms[b])));
                }
                if dab != d[b * size + a] {
                    return Err(fail(format!("symmetry: {} and {}", perms[a], perms[b])));
                }
                for c in 0..size {
                    if dab + d[b * size + c] < d[a * size + c] {
                        return Err(fail(format!(
                            "triangle inequality: {}, {}, {}",
                            perms[a], perms[b], perms[c]
                        )));
                    }
                }
            }
        }
    }
    let inverse_n = max_n.max(7);
    for n in 1..=inverse_n {
        let table = distance_table(n)?;
        for pi in all_perms(n) {
            if table.get(&pi)? != table.get(&pi.inverse())? {
                return Err(fail(format!("inverse invariance: {pi}")));
            }
        }
    }
    Ok(format!(
        "metric: axioms hold for n <= {max_n}, inverse invariance for n <= {inverse_n}"
    ))
}

fn sort(max_n: usize, rng: &mut ChaCha8Rng) -> CliResult<String> {
    let sizes: Vec<usize> = [5, 9, 12, 20, 40, 60, 100, 200].into_iter().filter(|&n| n <= max_n).collect();
    let mut uncertified = 0;
    let mut total = 0;
    for &n in &sizes {
        for _ in 0..200 {
            let pi = random_perm(n, rng);
            let s = sort_permutation(&pi)?;
            if !verify_word(&pi, &s.word) {
                return Err(fail(format!("sorting word does not sort {pi}")));
            }
            match s.certified_bound {
                Some(b) if s.len() > b => {
                    return Err(fail(format!("certified bound {b} exceeded by {} for {pi}", s.len())))
                }
                Some(_) => {}
                None if n >= 9 => uncertified += 1,
                None => {}
            }
            if n <= 12 && s.len() < exact_distance(&pi)? {
                return Err(fail(format!("word shorter than the distance for {pi}")));
            }
            total += 1;
        }
    }
    Ok(format!(
        "sort: {total} words verified for n in {sizes:?}, {uncertified} uncertified"
    ))
}
