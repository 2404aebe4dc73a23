//! Acceptance suite. Each criterion prints one `PASS` or `FAIL` line; the
//! target exits nonzero if any criterion fails.
//!
//! Every check is written against an independent oracle (closed forms,
//! brute-force enumeration over boxes, determinant gcds) rather than the
//! library's own shortcuts.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use epsmult::corpus::{corpus, rng};
use epsmult_core::colength::colength;
use epsmult_core::multiplicity::{amao, check_sat_power_containment, epsilon_sequence, swanson_c_search, theorem_a_table};
use epsmult_core::okounkov::{
    check_cone_conditions, delta_volume, epsilon_via_volumes, k_fold_sum_count, semigroup_count, Semigroup, WeightVector,
};
use epsmult_core::{BigInt, BigRational, BigUint, ExponentVector, MonomialIdeal};
use rand::Rng;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn within(a: &BigRational, b: &BigRational, tol: &BigRational) -> bool {
    let diff = a - b;
    diff <= *tol && -diff <= *tol
}

fn ideal(dim: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_rows(dim, rows).unwrap()
}

/// Collects failed sub-checks of one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn c1_exact_family(c: &mut Check) {
    let i = ideal(2, &[&[2, 0], &[1, 1]]);
    let eps = epsilon_sequence(&i, 20).unwrap();
    for n in 1..=20u64 {
        let len = &eps.lengths[n as usize - 1];
        c.expect(*len == BigUint::from(n * (n + 1) / 2), || format!("length at n={n} is {len}"));
        let e = &eps.values[n as usize - 1];
        c.expect(*e == rat(n as i64 + 1, n as i64), || format!("e_{n} = {e}"));
    }
    let table = theorem_a_table(&i, 6, 12, 3).unwrap();
    for row in &table {
        let m = u64::from(row.m);
        match &row.amao {
            Ok(a) => c.expect(a.value == BigUint::from(m * m), || format!("a_{m} = {}", a.value)),
            Err(e) => c.expect(false, || format!("a_{m}: {e}")),
        }
        // lim e_n = lim (n+1)/n = 1
        c.expect(row.ratio == Some(rat(1, 1)), || format!("ratio at m={m} is {:?}", row.ratio));
    }
}

fn c2_hilbert_samuel(c: &mut Check) {
    let i = MonomialIdeal::maximal(2).power(2);
    let eps = epsilon_sequence(&i, 20).unwrap();
    let mut stated_ok = 0;
    for n in 1..=20i64 {
        let e = &eps.values[n as usize - 1];
        let stated = rat(4 * n + 1, n);
        if *e == stated {
            stated_ok += 1;
        } else {
            c.expect(false, || format!("e_{n} = {e}, stated 4 + 1/n = {stated}"));
        }
        // ℓ(R/(x,y)^{2n}) = 2n(2n+1)/2 independently of the library
        let len = BigUint::from((2 * n * (2 * n + 1) / 2) as u64);
        c.expect(eps.lengths[n as usize - 1] == len, || format!("length at n={n}"));
    }
    c.note(format!("e_n = 4 + 1/n held for {stated_ok}/20; observed e_n = 4 + 2/n"));
    let unit = MonomialIdeal::unit(2);
    for m in 1..=6u32 {
        let im = i.power(m);
        match amao(&im, &unit, 12, 3) {
            Ok(a) => {
                let r = BigRational::new(BigInt::from(a.value.clone()), BigInt::from(m * m));
                c.expect(r == rat(4, 1), || format!("a(I^{m}, R)/m^2 = {r}"));
            }
            Err(e) => c.expect(false, || format!("a(I^{m}, R): {e}")),
        }
    }
}

fn c3_saturated_prime(c: &mut Check) {
    let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
    let eps = epsilon_sequence(&i, 20).unwrap();
    c.expect(eps.values.iter().all(|v| *v == rat(0, 1)), || "epsilon sequence not identically zero".into());
    for row in theorem_a_table(&i, 4, 10, 3).unwrap() {
        c.expect(row.is_zero(), || format!("a_{} = {:?}", row.m, row.amao));
    }
}

fn simplex2() -> Semigroup {
    Semigroup::from_generators(2, vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]]).unwrap()
}

fn c4_simplex_volume(c: &mut Check) {
    let s = simplex2();
    let v = delta_volume(&s, 10).unwrap();
    c.expect(v.exact == Some(rat(1, 2)), || format!("exact volume {:?}", v.exact));
    for n in [10u32, 100, 1000] {
        let count = semigroup_count(&s, n).unwrap();
        let nn = u128::from(n);
        c.expect(count == (nn + 1) * (nn + 2) / 2, || format!("#S_{n} = {count}"));
        let ratio = BigRational::new(BigInt::from(count), BigInt::from(nn * nn));
        c.expect(within(&ratio, &rat(1, 2), &rat(2, i64::from(n))), || format!("#S_{n}/n^2 = {ratio}"));
    }
}

fn c5_k_fold(c: &mut Check) {
    let s = simplex2();
    let half = rat(1, 2);
    for p in 1..=3u32 {
        let mut prev: Option<BigRational> = None;
        for k in 1..=30u32 {
            let count = k_fold_sum_count(&s, p, k).unwrap();
            let kp = u128::from(k * p);
            c.expect(count == (kp + 1) * (kp + 2) / 2, || format!("#({k}*S_{p}) = {count}"));
            let r = BigRational::new(BigInt::from(count), BigInt::from(kp * kp));
            c.expect(r > half, || format!("ratio at p={p}, k={k} not above 1/2"));
            if let Some(prev) = &prev {
                c.expect(r <= *prev, || format!("ratio not monotone at p={p}, k={k}"));
            }
            prev = Some(r);
        }
    }
}

fn c6_volume_difference(c: &mut Check) {
    let i = ideal(2, &[&[2, 0], &[1, 1]]);
    let w = WeightVector::default_for(2);
    let n_probe = 200;
    let tol = rat(5, n_probe);
    let v4 = epsilon_via_volumes(&i, 4, n_probe as u32, &w).unwrap().value;
    let v8 = epsilon_via_volumes(&i, 8, n_probe as u32, &w).unwrap().value;
    let eps = rat(1, 1);
    c.expect(within(&v4, &eps, &tol), || format!("beta=4 gives {v4}"));
    c.expect(within(&v8, &eps, &tol), || format!("beta=8 gives {v8}"));
    c.expect(within(&v4, &v8, &tol), || format!("beta=4 and beta=8 differ: {v4} vs {v8}"));
    c.note(format!("beta=4: {v4}, beta=8: {v8}"));
}

fn c7_lemmas(c: &mut Check) {
    let ideals = corpus(1, 50);
    let mut lemma3 = 0;
    let mut within_c = 0;
    for (k, i) in ideals.iter().enumerate() {
        let check = check_sat_power_containment(i, 4);
        if check.passed() {
            lemma3 += 1;
        }
        c.expect(check.passed(), || format!("corpus[{k}] = ({i}): containment fails: {:?}", check.counterexample));
        let search = swanson_c_search(i, 8, 12).unwrap();
        if search.grid_c.is_some() {
            within_c += 1;
        } else {
            // the least c for this ideal, for the record
            let wide = swanson_c_search(i, 64, 12).unwrap();
            c.expect(false, || format!("corpus[{k}] = ({i}): least grid-c is {:?}", wide.grid_c));
        }
    }
    c.note(format!("lemma3: {lemma3}/50 pass; grid-c <= 8 for {within_c}/50"));
}

/// Membership by enumeration: some generator divides `e`.
fn member(gens: &[ExponentVector], e: &[u32]) -> bool {
    gens.iter().any(|g| g.coords().iter().zip(e).all(|(a, b)| a <= b))
}

fn box_points(sides: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &s in sides {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..s).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All monomials of degree `t` in `dim` variables.
fn degree_slice(dim: usize, t: u32) -> Vec<Vec<u32>> {
    box_points(&vec![t + 1; dim]).into_iter().filter(|p| p.iter().sum::<u32>() == t).collect()
}

/// `x^e ∈ I^sat` straight from the definition: `x^e·m^T ⊆ I` with
/// `T = d(A - 1) + 1`, `A` the largest exponent in a generator.
fn sat_member(i: &MonomialIdeal, slice: &[Vec<u32>], e: &[u32]) -> bool {
    slice.iter().all(|f| member(i.generators(), &add(e, f)))
}

fn sat_degree(i: &MonomialIdeal) -> u32 {
    let a = i.max_exponents().into_iter().max().unwrap_or(0).max(1);
    i.dim() as u32 * (a - 1) + 1
}

fn c8_oracle(c: &mut Check) {
    let mut r = rng(8);
    let mut checked = 0;
    for inst in 0..200 {
        let dim = r.gen_range(1..=3usize);
        let i = epsmult::corpus::random_ideal_in(&mut r, dim);
        let j = epsmult::corpus::random_ideal_in(&mut r, dim);
        let (ai, aj) = (i.max_exponents(), j.max_exponents());
        let sides: Vec<u32> = ai.iter().zip(&aj).map(|(a, b)| a + b + 2).collect();
        let pts = box_points(&sides);

        let product = i.product(&j).unwrap();
        let inter = i.intersect(&j).unwrap();
        let colon = i.colon(&j).unwrap();
        let sat = i.saturate();
        let slice = degree_slice(dim, sat_degree(&i));
        for p in &pts {
            let e = ExponentVector::new(p.clone());
            let in_i = member(i.generators(), p);
            let in_j = member(j.generators(), p);
            let prod = i.generators().iter().any(|g| j.generators().iter().any(|h| member(&[g + h], p)));
            c.expect(product.contains(&e).unwrap() == prod, || format!("#{inst} product at {p:?}: ({i}) ({j})"));
            c.expect(inter.contains(&e).unwrap() == (in_i && in_j), || format!("#{inst} intersect at {p:?}"));
            let col = j.generators().iter().all(|h| member(i.generators(), &add(p, h.coords())));
            c.expect(colon.contains(&e).unwrap() == col, || format!("#{inst} colon at {p:?}: ({i}) : ({j})"));
            c.expect(sat.contains(&e).unwrap() == sat_member(&i, &slice, p), || format!("#{inst} saturate at {p:?}: ({i})"));
        }

        // lengths: (I, I^sat) and (I·m, I), counted over a box twice the generator sizes
        let maximal = MonomialIdeal::maximal(dim);
        let im = i.product(&maximal).unwrap();
        let wide: Vec<u32> = ai.iter().map(|a| 2 * a + 3).collect();
        let wide_pts = box_points(&wide);
        let brute_sat = wide_pts.iter().filter(|p| sat_member(&i, &slice, p) && !member(i.generators(), p)).count();
        let got = colength(&i, &sat).unwrap();
        c.expect(got == BigUint::from(brute_sat), || format!("#{inst} ℓ(I^sat/I) = {got}, brute {brute_sat}: ({i})"));
        let brute_m = wide_pts.iter().filter(|p| member(i.generators(), p) && !member(im.generators(), p)).count();
        let got = colength(&im, &i).unwrap();
        c.expect(got == BigUint::from(brute_m), || format!("#{inst} ℓ(I/Im) = {got}, brute {brute_m}: ({i})"));
        checked += 1;
    }
    c.note(format!("{checked} instances"));
}

/// `|det|` of a square integer matrix by cofactor expansion.
fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        n => (0..n)
            .map(|col| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, &v)| v).collect()).collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                sign * m[0][col] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// The group generated by `rows` is `Z^w` iff the gcd of its maximal minors is 1.
fn full_lattice_by_minors(rows: &[Vec<i64>], w: usize) -> bool {
    let g = subsets(rows.len(), w)
        .into_iter()
        .map(|s| det(&s.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>()))
        .fold(0, gcd);
    g == 1
}

/// Breadth-first search for `target` as a ±-combination of `rows` inside the
/// box `[-radius, radius]^w`. A hit proves membership.
fn reachable(rows: &[Vec<i64>], target: &[i64], radius: i64) -> bool {
    use std::collections::{HashSet, VecDeque};
    let w = target.len();
    let start = vec![0i64; w];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        if p == target {
            return true;
        }
        for r in rows {
            for sign in [1, -1] {
                let q: Vec<i64> = p.iter().zip(r).map(|(a, b)| a + sign * b).collect();
                if q.iter().all(|v| v.abs() <= radius) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    false
}

fn c9_cone_conditions(c: &mut Check) {
    let mut r = rng(9);
    let (mut full, mut witnessed) = (0, 0);
    for inst in 0..50 {
        let d = r.gen_range(1..=3usize);
        let count = r.gen_range(1..=d + 3);
        let gens: Vec<Vec<u32>> = (0..count)
            .map(|_| {
                let mut g: Vec<u32> = (0..d).map(|_| r.gen_range(0..=3)).collect();
                g.push(r.gen_range(1..=3));
                g
            })
            .collect();
        let beta = r.gen_range(1..=3u32);
        let s = Semigroup::from_generators(d, gens.clone()).unwrap();
        let got = check_cone_conditions(&s, beta).unwrap();
        let rows: Vec<Vec<i64>> = gens.iter().map(|g| g.iter().map(|&v| i64::from(v)).collect()).collect();
        let w = d + 1;
        let by_minors = rows.len() >= w && full_lattice_by_minors(&rows, w);
        // (0,...,0,1) and each (e_i, 0)
        let targets: Vec<Vec<i64>> = (0..w).map(|i| (0..w).map(|j| i64::from(i == j)).collect()).collect();
        let by_search = targets.iter().all(|t| reachable(&rows, t, 6));
        c.expect(got.cone3 == by_minors, || format!("#{inst} {gens:?}: cone3 = {}, minors say {by_minors}", got.cone3));
        c.expect(!by_search || by_minors, || format!("#{inst} {gens:?}: search found all targets, minors disagree"));
        let cone2 = gens.iter().all(|g| g[..d].iter().sum::<u32>() <= beta * g[d]);
        c.expect(got.cone2 == cone2, || format!("#{inst} {gens:?}: cone2 = {}, expected {cone2}", got.cone2));
        full += usize::from(by_minors);
        witnessed += usize::from(by_search);
    }
    c.note(format!("{full}/50 generate Z^(d+1); {witnessed} confirmed by explicit search"));
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn(&mut Check),
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "exact epsilon family (x^2, xy)", limit: Some(Duration::from_secs(5)), run: c1_exact_family },
        Criterion { id: 2, name: "Hilbert-Samuel degeneration (x, y)^2", limit: Some(Duration::from_secs(5)), run: c2_hilbert_samuel },
        Criterion { id: 3, name: "saturated prime (x, y) in three variables", limit: Some(Duration::from_secs(5)), run: c3_saturated_prime },
        Criterion { id: 4, name: "simplex semigroup volume", limit: Some(Duration::from_secs(10)), run: c4_simplex_volume },
        Criterion { id: 5, name: "k-fold sums of the simplex semigroup", limit: Some(Duration::from_secs(10)), run: c5_k_fold },
        Criterion { id: 6, name: "volume-difference estimate of epsilon", limit: None, run: c6_volume_difference },
        Criterion { id: 7, name: "lemma suite over 50 seeded ideals", limit: Some(Duration::from_secs(60)), run: c7_lemmas },
        Criterion { id: 8, name: "brute-force oracle equivalence", limit: Some(Duration::from_secs(60)), run: c8_oracle },
        Criterion { id: 9, name: "cone-condition checker", limit: None, run: c9_cone_conditions },
    ];
    let mut passed = 0;
    for crit in &criteria {
        let mut check = Check::default();
        let start = Instant::now();
        (crit.run)(&mut check);
        let elapsed = start.elapsed();
        if let Some(limit) = crit.limit {
            check.expect(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let ok = check.failures.is_empty();
        passed += usize::from(ok);
        println!("criterion {} [{}] {} ({:.2?})", crit.id, if ok { "PASS" } else { "FAIL" }, crit.name, elapsed);
        for n in &check.notes {
            println!("    {n}");
        }
        for f in check.failures.iter().take(8) {
            println!("    failed: {f}");
        }
        if check.failures.len() > 8 {
            println!("    ... {} more", check.failures.len() - 8);
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
