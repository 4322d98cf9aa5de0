//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use eiii_atlas::albert::{
    chart_transition_oct, det_generic, diamond_f4, f4_orbit_project, f4_pairing, j_map, j_map_complex,
    jordan_det, jordan_star, projective_chart, psi_empty, psi_o, random_real, real_from_veronese,
    stratum_witness, veronese_from_chart, JordanMatrix, Split, Surd3, Veronese,
};
use eiii_atlas::clifford::{blade_matrix_failure, charge_transpose_failure, SUITE_DIMS};
use eiii_atlas::eiii::{chart_failures, frame_failure, gr24_failure, orbit_sample, reconstruction_failure};
use eiii_atlas::fierz::{derive_table, involution_holds, sectors, Sector};
use eiii_atlas::liealg::{
    centralizer_g2_failure, centralizer_su3_failure, f4_basis, g2_failure, jacobi_check, Algebra, JacobiMode,
};
use eiii_atlas::octonion::{associator, structure_table, Octonion};
use eiii_atlas::rep27::{act27, d_cubic, d_invariance_failure, diamond27, stabilizer_failure, Vector27};
use eiii_atlas::rng::Rng;
use eiii_atlas::scalar::{q, ExtScalar};
use eiii_atlas::suites::run_suite;
use eiii_atlas::Rational;

const SEED: u64 = 20240611;
const FIERZ_LIMIT: Duration = Duration::from_secs(60);
const E8_LIMIT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn none(failure: Option<String>) -> Result<(), String> {
    failure.map_or(Ok(()), Err)
}

fn rows(r: &[&[&str]]) -> Vec<Vec<Rational>> {
    r.iter().map(|row| row.iter().map(|s| s.parse().unwrap()).collect()).collect()
}

/// Reference Fierz coefficient tables, row k = grade of A_k.
fn reference_fierz(dim: usize, s: Sector) -> Vec<Vec<Rational>> {
    match (dim, s) {
        (8, Sector::Even) => rows(&[&["1/8", "-1/8", "1/16"], &["-7/2", "1/2", "1/4"], &["35/4", "5/4", "3/8"]]),
        (8, Sector::Odd) => rows(&[&["-3/4", "1/4"], &["7/4", "3/4"]]),
        (8, Sector::MixedEven) => rows(&[&["1/8", "-1/8"], &["-7/4", "-1/4"]]),
        (8, Sector::MixedOdd) => rows(&[&["1", "-1/2"], &["-7", "-1/2"]]),
        (10, Sector::Even) => rows(&[&["1/16", "-1/16", "1/16"], &["-45/16", "13/16", "3/16"], &["105/8", "7/8", "1/8"]]),
        (10, Sector::Odd) => rows(&[&["-1/2", "1/4"], &["3", "1/2"]]),
        (10, Sector::MixedEven) => {
            rows(&[&["1/16", "-1/16", "1/32"], &["-27/16", "3/16", "5/32"], &["21/8", "7/8", "5/16"]])
        }
        (10, Sector::MixedOdd) => rows(&[&["5/8", "-3/8", "1/8"], &["-15/2", "1/2", "1/2"], &["63/4", "7/4", "3/4"]]),
        (16, Sector::Even) => rows(&[
            &["1/128", "-1/128", "1/128", "-1/128", "1/256"],
            &["-15/16", "1/2", "-3/16", "0", "1/32"],
            &["455/32", "-91/32", "-9/32", "5/32", "7/64"],
            &["-1001/16", "0", "11/16", "1/2", "7/32"],
            &["6435/64", "429/64", "99/64", "45/64", "35/128"],
        ]),
        _ => panic!("no reference table for D={dim} {}", s.name()),
    }
}

fn fierz() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for dim in [8, 10, 16] {
        let secs = sectors(dim).map_err(|e| e.to_string())?;
        let tables: Vec<_> = secs.iter().map(|&s| derive_table(dim, s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for t in &tables {
            ensure(t.matrix == reference_fierz(dim, t.sector), || format!("D={dim} {} differs from reference", t.sector.name()))?;
            let p = tables.iter().find(|p| p.sector == t.sector.partner()).ok_or("missing partner sector")?;
            ensure(involution_holds(t, p), || format!("D={dim} {} does not invert", t.sector.name()))?;
            count += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < FIERZ_LIMIT, || format!("took {took:?}, limit {FIERZ_LIMIT:?}"))?;
    Ok(format!("{count} tables exact and involutive in {:.1}s", took.as_secs_f64()))
}

/// e^a ⋆ e^b as ±(k+1) for ±e^k.
const REFERENCE_OCTONION: [[i8; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, -1, 4, -3, 6, -5, 8, -7],
    [3, -4, -1, 2, -7, 8, 5, -6],
    [4, 3, -2, -1, 8, 7, -6, -5],
    [5, -6, 7, -8, -1, 2, -3, 4],
    [6, 5, -8, -7, -2, -1, 4, 3],
    [7, -8, -5, 6, 3, -4, -1, 2],
    [8, 7, 6, 5, -4, -3, -2, -1],
];

fn octonion_table() -> Outcome {
    for (a, row) in REFERENCE_OCTONION.iter().enumerate() {
        for (b, &want) in row.iter().enumerate() {
            let k = want.unsigned_abs() as usize - 1;
            let expect = Octonion::unit(k).scale(&ExtScalar::from_int(want.signum() as i64));
            let (s, tk) = structure_table()[a][b];
            ensure(Octonion::unit(a).star(&Octonion::unit(b)) == expect && s * (tk as i8 + 1) == want, || {
                format!("e{a} * e{b}")
            })?;
        }
    }
    let mut rng = Rng::new(SEED).fork("octonion");
    let two = ExtScalar::from_int(2);
    for t in 0..100 {
        let (u, v) = (Octonion::random(&mut rng), Octonion::random(&mut rng));
        let alt = associator(&u, &u, &v).is_zero() && associator(&u, &v, &v).is_zero() && associator(&v, &u, &u).is_zero();
        ensure(alt, || format!("pair {t}: not alternative"))?;
        // u⋆v + v⋆u = 2(u₀v + v₀u − u·v), with u·v the bilinear form
        let sym = u.star(&v).add(&v.star(&u));
        let want = v.scale(&u.0[0]).add(&u.scale(&v.0[0])).sub(&Octonion::real(u.dot(&v))).scale(&two);
        ensure(sym == want && u.star(&u.bar()) == Octonion::real(u.norm2()), || format!("pair {t}: symmetric part"))?;
    }
    Ok("64 entries match; alternativity and symmetric part on 100 pairs".into())
}

fn dimensions() -> Outcome {
    none(g2_failure())?;
    none(centralizer_g2_failure())?;
    none(centralizer_su3_failure())?;
    none(stabilizer_failure())?;
    Ok("g2 = 14, C(g2) = f4 (52), C(su3) = e6 (78), Stab(Psi0) = so10 (45)".into())
}

fn jacobi() -> Outcome {
    let mut rng = Rng::new(SEED).fork("jacobi");
    let mut parts = Vec::new();
    for (a, want) in [(Algebra::G2, 364), (Algebra::F4, 22_100), (Algebra::E6, 76_076), (Algebra::E8, 2_511_496)] {
        let start = Instant::now();
        let (n, fail) = jacobi_check(a, JacobiMode::Exhaustive, &mut rng);
        let took = start.elapsed();
        none(fail.map(|f| format!("{}: {f}", a.name())))?;
        ensure(n == want, || format!("{}: {n} triples, expected {want}", a.name()))?;
        if a == Algebra::E8 {
            ensure(took < E8_LIMIT, || format!("e8 took {took:?}, limit {E8_LIMIT:?}"))?;
        }
        parts.push(format!("{} {n} in {:.1}s", a.name(), took.as_secs_f64()));
    }
    Ok(format!("exhaustive: {}", parts.join(", ")))
}

fn d_invariance() -> Outcome {
    let mut rng = Rng::new(SEED).fork("d_invariance");
    none(d_invariance_failure(20, &mut rng))?;
    let p0 = Vector27::lowest();
    ensure(diamond27(&p0, &p0).is_zero(), || "Psi0 <> Psi0 != 0".into())?;
    Ok("78 generators x 20 triples; Psi0 <> Psi0 = 0".into())
}

fn charts() -> Outcome {
    let mut rng = Rng::new(SEED).fork("charts");
    for (kind, fail) in chart_failures(100, &mut rng) {
        none(fail.map(|f| format!("{} chart: {f}", kind.name())))?;
    }
    none(reconstruction_failure(100, &mut rng))?;
    Ok("s, tplus, tminus, xinfty: zero residual on 100 inputs each; 100 spinors reconstructed".into())
}

fn frame() -> Outcome {
    none(frame_failure())?;
    Ok("J^2 = -1, rank(J - i) = 5, Omega.Omegabar = 1, rank-4 identity".into())
}

fn jordan() -> Outcome {
    let mut rng = Rng::new(SEED).fork("jordan");
    let quarter = q(1, 4);
    for t in 0..100 {
        let (a, b) = (random_real(&mut rng), random_real(&mut rng));
        let lhs = jordan_star(&j_map(&a), &j_map(&b));
        let rhs = j_map(&diamond_f4(&a, &b))
            .scale(&q(-1, 2))
            .add(&JordanMatrix::identity().scale(&(&f4_pairing(&a, &b) * &quarter)));
        ensure(lhs == rhs, || format!("master identity fails on real pair {t}"))?;
    }
    let o = psi_o();
    let two = ExtScalar::from_int(2);
    let sq = Surd3::rational(diamond_f4(&o, &o).add(&o.scale(&two)));
    ensure(sq.add(&psi_empty().scale(&Surd3::root3(two.clone()))).is_zero(), || {
        "Psi_o <> Psi_o != -2 Psi_o - 2 sqrt3 Psi_0".into()
    })?;
    ensure(f4_pairing(&o, &o) == two, || "<Psi_o, Psi_o> != 2".into())?;
    let p = Vector27::random(&mut rng);
    for (k, x) in f4_basis().iter().enumerate() {
        let moved = act27(x, &p).map_err(|e| e.to_string())?;
        ensure(j_map(&moved).trace().is_zero(), || format!("Tr J(X Psi) != 0 for f4 generator {k}"))?;
    }
    for t in 0..100 {
        let p = Vector27::random(&mut rng);
        let d = &d_cubic(&p, &p, &p) * &q(-1, 6);
        ensure(det_generic(&j_map_complex(&p)) == d && jordan_det(&p) == d, || format!("det J != -d/6 on Psi {t}"))?;
    }
    Ok("master identity on 100 real pairs; Psi_o; Tr J(X Psi) = 0 for 52 generators; det J = -d/6 on 100".into())
}

fn real_veronese_point(rng: &mut Rng) -> Veronese {
    loop {
        let (a, b) = (Octonion::random_real(rng), Octonion::random_real(rng));
        if !a.is_zero() && !b.is_zero() {
            return veronese_from_chart(1, &a, &b).expect("positive normaliser");
        }
    }
}

fn projective() -> Outcome {
    let mut rng = Rng::new(SEED).fork("projective");
    for t in 0..100 {
        let ver = real_veronese_point(&mut rng);
        ensure(ver.check() && real_from_veronese(&ver).is_ok(), || format!("point {t} is not a real Veronese point"))?;
        let c: Vec<_> = (1..=3).map(|i| projective_chart(i, &ver)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for i in 0..3 {
            let next = chart_transition_oct(&c[i].0, &c[i].1).map_err(|e| e.to_string())?;
            ensure(next == c[(i + 1) % 3], || format!("point {t}: transition U{} -> U{}", i + 1, (i + 1) % 3 + 1))?;
        }
        let mut cur = c[0].clone();
        for _ in 0..3 {
            cur = chart_transition_oct(&cur.0, &cur.1).map_err(|e| e.to_string())?;
        }
        ensure(cur == c[0], || format!("point {t}: cocycle"))?;
    }
    let (mut regular, mut seed) = (0, 0u64);
    while regular < 100 {
        let p = orbit_sample(seed, 1 + (seed % 6) as usize).map_err(|e| e.to_string())?;
        let sp = Split::of(&p);
        let on_stratum = (&sp.s + &sp.t).is_zero();
        match f4_orbit_project(&p) {
            Ok(pr) => {
                ensure(!on_stratum, || format!("seed {seed}: projected a point with s + t = 0"))?;
                ensure(jordan_star(&pr, &pr) == pr && pr.trace().is_one(), || format!("seed {seed}: not a trace-1 idempotent"))?;
                regular += 1;
            }
            Err(_) => ensure(on_stratum, || format!("seed {seed}: error although s + t != 0"))?,
        }
        seed += 1;
    }
    let (ws, wl, w) = stratum_witness(400).ok_or("no orbit sample with s + t = 0")?;
    ensure(f4_orbit_project(&w).is_err(), || "stratum witness was projected".into())?;
    ensure(psi_empty().map(|x| f4_pairing(&w, x)).is_zero(), || "stratum witness pairs nonzero with Psi_0".into())?;
    Ok(format!(
        "transitions and cocycle on 100 real points; 100 idempotents from {seed} samples; error at s+t=0 (seed {ws}, length {wl})"
    ))
}

fn blades() -> Outcome {
    let mut rng = Rng::new(SEED).fork("blades");
    for dim in SUITE_DIMS {
        none(blade_matrix_failure(dim, 1000, &mut rng).map(|f| format!("D={dim}: {f}")))?;
        none(charge_transpose_failure(dim, 200, &mut rng).map(|f| format!("D={dim}: {f}")))?;
    }
    Ok("1000 blade pairs and 200 transposes in each of D = 8, 10, 16".into())
}

fn gr24() -> Outcome {
    none(gr24_failure(100, &mut Rng::new(SEED).fork("gr24")))?;
    Ok("quadric vanishes on 100 matrices".into())
}

fn determinism() -> Outcome {
    let run = || run_suite("all", SEED, 20, JacobiMode::Exhaustive).map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    ensure(a.to_json_string() == b.to_json_string(), || "reports differ between runs".into())?;
    let failed: Vec<_> = a.checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
    ensure(failed.is_empty(), || format!("identical but failing: {}", failed.join(", ")))?;
    Ok(format!("two runs of verify all, {} checks, {} bytes, identical", a.checks.len(), a.to_json_string().len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("fierz tables", fierz),
        ("octonion table", octonion_table),
        ("dimensions", dimensions),
        ("jacobi", jacobi),
        ("d invariance", d_invariance),
        ("charts and reconstruction", charts),
        ("complex structure", frame),
        ("jordan layer", jordan),
        ("projective charts and orbit projection", projective),
        ("blades vs matrices", blades),
        ("gr(2,4) quadric", gr24),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match std::panic::catch_unwind(f) {
            Ok(Ok(d)) => ("PASS", d),
            Ok(Err(e)) => ("FAIL", e),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {:>2} {name}: {detail} [{:.1}s]", k + 1, start.elapsed().as_secs_f64());
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
