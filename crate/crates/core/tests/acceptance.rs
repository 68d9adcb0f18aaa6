//! Acceptance checks. Prints one PASS/FAIL line per check and exits non-zero
//! if any fails. Time limits are wall-clock seconds.

mod common;

use std::time::{Duration, Instant};

use mcmrep_core::*;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

struct Check {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn defining_ideal_x2() -> Outcome {
    let alg = example_algebra_x2();
    let rep = e2s(build_defining_ideal::<Rational>(&alg, &ShiftType::new([0, 1]), RationalField))?;
    let u = rep.parameter_space().unknown_ring();
    let oracle: Vec<QPoly> = common::square_generic_x2_matrix()
        .iter()
        .map(|p| {
            Polynomial::from_terms(
                u,
                p.iter().map(|(e, c)| (u.monomial(e.to_vec()), BigRational::from_integer((*c).into()))),
            )
        })
        .collect();
    let oracle = e2s(QIdeal::new(u, oracle))?;
    ensure(e2s(ideal_equal(rep.ideal(), &oracle))?, "differs from the squared generic matrix")?;

    // the variant with ac + bc in place of ac + cd
    let v = |i| QPoly::var(u, i);
    let (a, b, c, d) = (v(0), v(1), v(2), v(3));
    let variant = e2s(QIdeal::new(
        u,
        vec![&(&a * &a) + &(&b * &c), &(&a * &b) + &(&b * &d), &(&a * &c) + &(&b * &c), &(&b * &c) + &(&d * &d)],
    ))?;
    let variant_equal = e2s(ideal_equal(rep.ideal(), &variant))?;
    let gens: Vec<String> = rep.generators().iter().map(|g| g.to_string()).collect();
    Ok(format!(
        "generators [{}]; equal to variant with ac+bc: {variant_equal}",
        gens.join(", ")
    ))
}

fn three_representatives() -> Outcome {
    let alg = example_algebra_x2();
    let reps = e2s(three_orbit_representatives::<Rational>(RationalField))?;
    for r in &reps {
        ensure(e2s(validate_point(&r.point, &alg, r.shifts()))?, format!("{} is not a point", r.label))?;
    }
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            let iso = e2s(are_isomorphic(&reps[i].point, &reps[j].point))?;
            ensure(iso == (i == j), format!("{} vs {}: isomorphic = {iso}", reps[i].label, reps[j].label))?;
        }
    }
    let indec: Vec<bool> = reps.iter().map(|r| is_indecomposable(&r.point)).collect::<Result<_>>().map_err(|e| e.to_string())?;
    ensure(indec == [true, true, false], format!("indecomposable flags {indec:?}"))?;
    Ok("R, I_2(1) indecomposable; zero point decomposable; pairwise non-isomorphic".into())
}

fn finite_field_census() -> Outcome {
    let alg = example_algebra_x2();
    let v = ShiftType::new([0, 1]);
    let mut report = Vec::new();
    for p in [3u64, 5, 7] {
        let f = e2s(PrimeField::new(p))?;
        let pts = e2s(enumerate_points::<Fp>(&alg, &v, f, 10_000_000))?;
        let named = e2s(three_orbit_representatives::<Fp>(f))?;
        let census = e2s(orbit_partition(&pts, &alg, &v, f, &named, 100_000))?;
        let g = (p - 1) * (p - 1) * p;
        ensure(census.orbits.len() == 3, format!("q={p}: {} orbits", census.orbits.len()))?;
        let sum: usize = census.orbits.iter().map(|o| o.size).sum();
        ensure(sum == pts.len(), format!("q={p}: sizes sum to {sum}, {} points", pts.len()))?;
        for o in &census.orbits {
            ensure(g % o.size as u64 == 0, format!("q={p}: orbit size {} does not divide {g}", o.size))?;
        }
        let brute = common::brute_force_x2_census(p);
        ensure(brute.points.len() == pts.len(), format!("q={p}: brute force finds {} points", brute.points.len()))?;
        let mut ours: Vec<usize> = census.orbits.iter().map(|o| o.size).collect();
        let mut theirs = brute.orbit_sizes.clone();
        ours.sort();
        theirs.sort();
        ensure(ours == theirs, format!("q={p}: orbit sizes {ours:?} vs brute force {theirs:?}"))?;
        report.push(format!("q={p}: {} points, sizes {ours:?}", pts.len()));
    }
    Ok(report.join("; "))
}

fn ideal_family() -> Outcome {
    let alg = example_algebra_x2();
    let full = e2s(alg.full_ring::<Rational>(RationalField))?;
    let r_ideal = e2s(alg.relation_ideal(&full))?;
    let mut types = Vec::new();
    for n in 1..=10i64 {
        let i = e2s(module_point_in::<Rational>(n, RationalField))?;
        ensure(e2s(validate_point(&i.point, &alg, i.shifts()))?, format!("I_{n} invalid"))?;
        ensure(e2s(is_indecomposable(&i.point))?, format!("I_{n} decomposable"))?;
        let hs = hilbert_series_of_type(&alg.normalization_degrees(), i.shifts());
        // dim (I_n)_d = dim R_d - dim (R / (x, y^n))_d
        let x = QPoly::var(&full, 0);
        let yn = QPoly::var(&full, 1).pow(n as u32);
        let quotient = e2s(r_ideal.sum(&e2s(QIdeal::new(&full, vec![x, yn]))?))?;
        for d in 0..=15u64 {
            let want = e2s(r_ideal.component_monomials(d))?.len() as i64
                - e2s(quotient.component_monomials(d))?.len() as i64;
            let closed = (d >= 1) as i64 + (d as i64 >= n) as i64;
            ensure(
                hs.coefficient(d as i64) == want && want == closed,
                format!("I_{n}: degree {d} has {} vs {want}", hs.coefficient(d as i64)),
            )?;
        }
        let hp = e2s(hs.hilbert_polynomial())?;
        ensure(hp.as_constant() == Some(q(2)), format!("I_{n}: Hilbert polynomial {hp}"))?;
        ensure(rank_over_s(&i.point) == 2, format!("I_{n}: rank"))?;
        let (norm, _) = e2s(normalize_shifts(i.shifts()))?;
        ensure(norm == ShiftType::new([0, n - 1]), format!("I_{n}: normalized {norm}"))?;
        types.push(norm);
    }
    let mut dedup = types.clone();
    dedup.sort();
    dedup.dedup();
    ensure(dedup.len() == types.len(), "normalized types repeat")?;
    Ok("I_1..I_10 valid, indecomposable, series (t+t^n)/(1-t), Hilbert polynomial 2".into())
}

fn series_vs_components() -> Outcome {
    let x2 = example_algebra_x2();
    let free = e2s(GradedAlgebra::from_strings(&[("x", 1), ("y", 2)], &[], &["x", "y"]))?;
    for (name, alg) in [("x^2", &x2), ("k[x,y] (1,2)", &free)] {
        let hs = e2s(alg.hilbert_series())?;
        for d in 0..=12u64 {
            let c = e2s(alg.component_dimension(d))?;
            ensure(hs.coefficient(d as i64) == c as i64, format!("{name}: degree {d}"))?;
        }
    }
    let fs = e2s(free.hilbert_series())?;
    for d in 0..=12usize {
        ensure(fs.coefficient(d as i64) as u64 == common::free_count(&[1, 2], d), format!("free: degree {d}"))?;
    }
    Ok("coefficients of both series agree with standard monomial counts up to degree 12".into())
}

fn seeded_properties() -> Outcome {
    let alg = example_algebra_x2();
    let v = ShiftType::new([0, 1]);
    let f5 = e2s(PrimeField::new(5))?;
    let mut rng = ChaCha8Rng::seed_from_u64(20261014);

    // conjugation invariance
    let ps5 = e2s(parameterize::<Fp>(&alg, &v, f5))?;
    let pts5 = e2s(enumerate_points::<Fp>(&alg, &v, f5, 10_000_000))?;
    let group = e2s(group_elements(ps5.s_ring(), &v, 100_000))?;
    for _ in 0..100 {
        let mu = e2s(ps5.evaluate(&pts5[rng.gen_range(0..pts5.len())]))?;
        let g = &group[rng.gen_range(0..group.len())];
        let c = e2s(conjugate(&mu, g))?;
        ensure(e2s(validate_point(&c, &alg, &v))?, "conjugate left the variety")?;
        ensure(e2s(are_isomorphic(&mu, &c))?, "conjugate not isomorphic")?;
    }

    // validity against generator vanishing
    let rep5 = e2s(build_defining_ideal::<Fp>(&alg, &v, f5))?;
    for _ in 0..100 {
        let x: Vec<Fp> = (0..4).map(|_| f5.element(rng.gen_range(0..5))).collect();
        let pt = e2s(rep5.parameter_space().evaluate(&x))?;
        ensure(e2s(validate_point(&pt, &alg, &v))? == rep5.vanishes_at(&x), "validity disagrees")?;
    }

    // isomorphism is an equivalence on the q = 3 census points
    let f3 = e2s(PrimeField::new(3))?;
    let ps3 = e2s(parameterize::<Fp>(&alg, &v, f3))?;
    let pts3: Vec<FpPoint> = e2s(enumerate_points::<Fp>(&alg, &v, f3, 10_000_000))?
        .iter()
        .map(|x| ps3.evaluate(x))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let n = pts3.len();
    let mut iso = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            iso[i][j] = e2s(are_isomorphic(&pts3[i], &pts3[j]))?;
        }
    }
    for i in 0..n {
        ensure(iso[i][i], "not reflexive")?;
        for j in 0..n {
            ensure(iso[i][j] == iso[j][i], "not symmetric")?;
        }
    }
    for _ in 0..50 {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        ensure(!(iso[a][b] && iso[b][c]) || iso[a][c], "not transitive")?;
    }

    // normal form idempotence
    let r = e2s(PolyRing::new([("x", 1), ("y", 1), ("z", 1)], RationalField))?;
    let (x, y, z) = (QPoly::var(&r, 0), QPoly::var(&r, 1), QPoly::var(&r, 2));
    let ideal = e2s(QIdeal::new(&r, vec![&(&x * &x) - &(&y * &z), &(&x * &y) - &(&z * &z), &(&y * &y) - &(&x * &z)]))?;
    for _ in 0..100 {
        let mut f = QPoly::zero(&r);
        for _ in 0..rng.gen_range(1..6) {
            let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..4)).collect();
            f.add_term(r.monomial(e), q(rng.gen_range(-9..=9)));
        }
        let nf = e2s(ideal.normal_form(&f))?;
        ensure(e2s(ideal.normal_form(&nf))? == nf, "normal form not idempotent")?;
    }
    Ok(format!("100 conjugations, 100 assignments, {n}x{n} iso table, 50 triples, 100 normal forms"))
}

fn degenerate_types() -> Outcome {
    let x2 = example_algebra_x2();
    let f5 = e2s(PrimeField::new(5))?;
    let empty = ShiftType::default();
    let pts = e2s(enumerate_points::<Fp>(&x2, &empty, f5, 1000))?;
    ensure(pts == vec![Vec::<Fp>::new()], "V={} does not give one empty point")?;
    let ps = e2s(parameterize::<Fp>(&x2, &empty, f5))?;
    let pt = e2s(ps.evaluate(&[]))?;
    ensure(pt.dim() == 0 && pt.matrices().iter().all(|m| m.rows() == 0), "V={}: not the zero module")?;

    let zero = ShiftType::new([0]);
    let pts = e2s(enumerate_points::<Fp>(&x2, &zero, f5, 1000))?;
    ensure(pts.len() == 1, format!("V={{0}}: {} points", pts.len()))?;
    let ps = e2s(parameterize::<Fp>(&x2, &zero, f5))?;
    let pt = e2s(ps.evaluate(&pts[0]))?;
    ensure(pt.matrices()[0].is_zero(), "V={0}: x does not act as zero")?;
    ensure(e2s(is_indecomposable(&pt))?, "R/(x) decomposable")?;

    let s = e2s(GradedAlgebra::from_strings(&[("y", 1)], &[], &["y"]))?;
    let pts = e2s(enumerate_points::<Fp>(&s, &ShiftType::new([0, 1]), f5, 1000))?;
    ensure(pts.len() == 1, format!("R=S: {} points", pts.len()))?;
    Ok("V={} empty module; V={0} gives R/(x); R=S gives one point".into())
}

fn main() {
    let checks = [
        Check { name: "defining-ideal-x2", limit: Duration::from_secs(1), run: defining_ideal_x2 },
        Check { name: "three-representatives", limit: Duration::from_secs(5), run: three_representatives },
        Check { name: "finite-field-census", limit: Duration::from_secs(60), run: finite_field_census },
        Check { name: "ideal-family-I_n", limit: Duration::from_secs(10), run: ideal_family },
        Check { name: "series-vs-components", limit: Duration::from_secs(5), run: series_vs_components },
        Check { name: "seeded-properties", limit: Duration::from_secs(60), run: seeded_properties },
        Check { name: "degenerate-types", limit: Duration::from_secs(1), run: degenerate_types },
    ];
    let mut failed = 0;
    for c in &checks {
        let start = Instant::now();
        let out = (c.run)();
        let t = start.elapsed();
        let (ok, detail) = match out {
            Ok(d) if t <= c.limit => (true, d),
            Ok(d) => (false, format!("too slow; {d}")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:<22} {:>8.3}s (limit {}s)  {}",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            t.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    println!("{} of {} acceptance checks passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
