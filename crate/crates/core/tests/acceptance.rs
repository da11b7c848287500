//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//! Criteria with several independent claims print one indented line per claim.

use std::path::PathBuf;
use std::time::Instant;

use algebroid::arith::{binomial, int, rat, Rational};
use algebroid::character::integrate_characters;
use algebroid::derivations::{monomialize, tangent_derivations, Derivation, DerivationModule};
use algebroid::groebner::{Colength, Ideal};
use algebroid::hilbert::{
    equivariant_series_monomial, gamma_restriction, graded_pieces_series, hilbert_series_quotient, GradedPiecesOptions, ModuleSpec,
    SemigroupSpec,
};
use algebroid::liealg::{fibre_in_basis, fibre_lie_algebra};
use algebroid::pipeline::{analyze_singularity, analyze_toral, covariants_report, parse_problem, AnalyzeOptions, Mode};
use algebroid::poly::{Monomial, Polynomial, Ring};
use algebroid::repmod::{cayley_sylvester, covariant_dimension, decompose_sl2, sl2_algebroid_filtration, symmetric_power};
use algebroid::series::{dimension_multiplicity, expand_series, quasi_polynomial_of, reconstruct_rational, DenomFactor, RationalSeries, SeriesPrefix};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Claims = Vec<(String, bool)>;

fn claim(out: &mut Claims, label: impl Into<String>, ok: bool) {
    out.push((label.into(), ok));
}

fn std_ideal(vars: &[&str], gens: &[&str]) -> Ideal {
    Ideal::parse(&Ring::new(vars).unwrap(), gens).unwrap()
}

fn colength(i: &Ideal) -> usize {
    match i.colength().unwrap() {
        Colength::Finite { count, .. } => count,
        Colength::Infinite => panic!("not m-primary"),
    }
}

fn c1() -> Claims {
    let mut out = Claims::new();
    let dims: Vec<i64> = (0..=20).map(|n| i64::try_from(covariant_dimension(n, 2)).unwrap()).collect();
    claim(&mut out, "dims = floor(n/2) + 1 for n <= 20", dims.iter().enumerate().all(|(n, &c)| c == n as i64 / 2 + 1));
    let rs = reconstruct_rational(&SeriesPrefix::from_ints(dims), &[DenomFactor::new(1, 1), DenomFactor::new(2, 1)]).unwrap();
    claim(&mut out, "series 1/((1 - t)(1 - t^2))", rs.numerator == vec![1.into()] && rs.display() == "1/((1 - t)*(1 - t^2))");
    out
}

fn c2() -> Claims {
    let mut out = Claims::new();
    let offset = [rat(1, 1), rat(3, 8), rat(1, 2), rat(3, 8)];
    let dims: Vec<i64> = (0..=20).map(|n| i64::try_from(covariant_dimension(n, 3)).unwrap()).collect();
    let qp_ok = dims.iter().enumerate().all(|(n, &c)| {
        let q = int(n as i64);
        &q * &q / int(8) + &q / int(2) + &offset[n % 4] == int(c)
    });
    claim(&mut out, "dims match n^2/8 + n/2 + {1, 3/8, 1/2, 3/8} through n = 20", qp_ok);
    let rs = reconstruct_rational(&SeriesPrefix::from_ints(dims), &[DenomFactor::new(1, 2), DenomFactor::new(4, 1)]).unwrap();
    claim(&mut out, "series (t^2 - t + 1)/((1 - t)^2 (1 - t^4))", rs.display() == "(1 - t + t^2)/((1 - t)^2*(1 - t^4))");
    let (d, e) = dimension_multiplicity(&rs).unwrap();
    claim(&mut out, format!("multiplicity 1/4 (computed e = {e})"), e == rat(1, 4));
    claim(&mut out, format!("dimension 2 (computed d = {d})"), d == 2);
    out
}

fn c3() -> Claims {
    let mut out = Claims::new();
    let mut ok = true;
    for n in 0..=5usize {
        for d in 0..=5usize {
            let dec = decompose_sl2(&symmetric_power(n, d)).unwrap();
            for e in 0..=(n * d) as u32 {
                let m = dec.get(&e).copied().unwrap_or(0);
                if cayley_sylvester(n as u32, d as u32, e) != m.into() {
                    ok = false;
                }
            }
        }
    }
    claim(&mut out, "partition formula = decomposition of S^n(S^d V), n, d <= 5", ok);
    out
}

fn c4() -> Claims {
    let mut out = Claims::new();
    let ring = Ring::new(&["x", "y", "z"]).unwrap().reweighted(vec![1, 2, 2]).unwrap();
    let i = Ideal::parse(&ring, &["z^2 - x^2*y"]).unwrap();
    let dm = tangent_derivations(&i).unwrap();
    let basis = vec![
        Derivation::parse(&ring, &["x", "-2*y", "0"]).unwrap(),
        Derivation::parse(&ring, &["x", "0", "z"]).unwrap(),
        Derivation::parse(&ring, &["0", "2*z", "x^2"]).unwrap(),
        Derivation::parse(&ring, &["z", "0", "x*y"]).unwrap(),
    ];
    let given = DerivationModule::new(i.clone(), basis.clone()).unwrap();
    claim(&mut out, "module equals the four listed generators", dm.contains_all(&given.generators) && given.contains_all(&dm.generators));
    let labels = (1..=4).map(|k| format!("d{k}")).collect();
    let f = fibre_in_basis(&dm, basis, labels).unwrap();
    let mut brackets: Vec<(usize, usize, Vec<Rational>)> = f.algebra.nonzero_brackets().map(|(a, b, v)| (a, b, v.clone())).collect();
    brackets.sort();
    let e = |k: usize, c: i64| -> Vec<Rational> { (0..4).map(|j| if j == k { int(c) } else { Rational::zero() }).collect() };
    let want = vec![(0, 2, e(2, 2)), (0, 3, e(3, -1)), (1, 2, e(2, 1))];
    claim(&mut out, "dim 4", f.algebra.dim() == 4);
    claim(&mut out, "nonzero brackets [d1,d3] = 2d3, [d2,d3] = d3, [d1,d4] = -d4", brackets == want);
    let fp = f.algebra.fingerprint();
    claim(&mut out, format!("derived chain [4, 2, 0] (got {:?}), solvable", fp.derived), fp.derived == vec![4, 2, 0] && fp.solvable);
    out
}

fn c5() -> Claims {
    let mut out = Claims::new();
    for n in 3..=5 {
        let ring = Ring::standard(n);
        let q: Vec<String> = (0..n).map(|k| format!("{}^2", ring.fmt_poly(&ring.var(k)))).collect();
        let i = Ideal::parse(&ring, &[q.join(" + ").as_str()]).unwrap();
        let fp = fibre_lie_algebra(&tangent_derivations(&i).unwrap()).unwrap().algebra.fingerprint();
        claim(
            &mut out,
            format!("n = {n}: dim {} radical {} solvable {}", fp.dim, fp.radical_dim, fp.solvable),
            fp.dim == 1 + n * (n - 1) / 2 && fp.radical_dim == 1 && !fp.solvable,
        );
    }
    out
}

fn c6() -> Claims {
    let mut out = Claims::new();
    let p = parse_problem("vars: x,y,z,w\nideal: y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2").unwrap();
    let r = analyze_singularity(&p, &AnalyzeOptions { series_depth: 16, ..Default::default() }).unwrap();
    let fp = &r.fingerprint;
    claim(
        &mut out,
        format!("fibre dim {} radical {} derived {:?}", fp.dim, fp.radical_dim, fp.derived),
        fp.dim == 4 && fp.radical_dim == 1 && fp.derived == vec![4, 3, 3],
    );
    let Some(g) = r.graded else {
        claim(&mut out, "covariant path available", false);
        return out;
    };
    let cov = covariants_report(3, 16, None).unwrap();
    claim(&mut out, "covariant path series equals covariants_report(3, 16)", g.report.series == cov.report.series && g.report.dims == cov.report.dims);
    claim(&mut out, format!("multiplicity 1/4 (computed e = {})", g.report.multiplicity), g.report.multiplicity == rat(1, 4));
    claim(&mut out, format!("dimension 2 (computed d = {})", g.report.dimension), g.report.dimension == 2);
    out
}

fn c7() -> Claims {
    let mut out = Claims::new();
    let p = parse_problem("vars: x1,x2,x3,x4\nideal: x1; x2").unwrap();
    let r = analyze_toral(&p, 6).unwrap();
    let jm = std_ideal(&["x1", "x2", "x3", "x4"], &["x1", "x2"]);
    let same = {
        let a = Ideal::new(p.ideal.ring.clone(), jm.generators.clone());
        a.groebner().contains_all(&p.ideal.groebner().element_components().iter().map(|c| algebroid::groebner::FreeModuleElement::new(c.clone())).collect::<Vec<_>>())
            && r.maximal_defining == vec![0, 1]
    };
    claim(&mut out, format!("J_m = I (J_m = {})", r.maximal_defining_ideal), same);
    claim(
        &mut out,
        format!("fibre dim {} radical {}", r.fingerprint.dim, r.fingerprint.radical_dim),
        r.fingerprint.dim == 6 && r.fingerprint.radical_dim == 3,
    );
    out
}

fn corpus() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "sing")).collect();
    v.sort();
    v
}

fn c8() -> Claims {
    let mut out = Claims::new();
    let p = parse_problem("vars: x,y,z\nideal: x^3 + y^3 + z^3").unwrap();
    for (mode, name) in [(Mode::Tangent, "complete-intersection"), (Mode::TjurinaAlgebroid, "jacobian-algebroid")] {
        let r = analyze_singularity(&p, &AnalyzeOptions { mode, ..Default::default() }).unwrap();
        let c = r.checks.iter().find(|c| c.name == name).unwrap();
        claim(&mut out, format!("{} mode: {name} applies and the fibre is solvable", mode.name()), c.applies && c.holds == Some(true));
    }
    let mut analysed = 0;
    let mut flagged = Vec::new();
    for path in corpus() {
        let p = parse_problem(&std::fs::read_to_string(&path).unwrap()).unwrap();
        for mode in [Mode::Tangent, Mode::TjurinaAlgebroid] {
            if let Ok(r) = analyze_singularity(&p, &AnalyzeOptions { mode, ..Default::default() }) {
                analysed += 1;
                if r.contradicts_known_result {
                    flagged.push(format!("{} ({})", path.display(), mode.name()));
                }
            }
        }
    }
    claim(&mut out, format!("no contradiction flag over {analysed} corpus analyses {flagged:?}"), flagged.is_empty() && analysed > 10);
    out
}

fn c9() -> Claims {
    let mut out = Claims::new();
    let mut ok = true;
    for l in 1..=5u32 {
        let qp = quasi_polynomial_of(&RationalSeries::from_i64(&[1], &[(1, l)])).coefficient;
        for n in 0..=30u64 {
            ok &= qp.eval(n) == Rational::from_integer(binomial(n + l as u64 - 1, l as u64 - 1));
        }
    }
    claim(&mut out, "1/(1 - t)^l gives binom(n + l - 1, l - 1), l <= 5, n <= 30", ok);
    out
}

fn random_monomial(rng: &mut StdRng, n: usize) -> Monomial {
    let e: Vec<u16> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    Monomial::from_exponents(&e)
}

fn c10() -> Claims {
    let mut out = Claims::new();
    let mut rng = StdRng::seed_from_u64(10);
    let mut same = true;
    let mut idempotent = true;
    for _ in 0..50 {
        let n = rng.gen_range(1..=3);
        let ring = Ring::standard(n);
        let k = rng.gen_range(1..=5);
        let ms: Vec<Monomial> = (0..k).map(|_| random_monomial(&mut rng, n)).collect();
        // unitriangular integer mixing hides the monomial generators
        let mut gens = Vec::new();
        for i in 0..k {
            let mut g = Polynomial::monomial(n, ms[i], Rational::one());
            for m in &ms[..i] {
                let c = rng.gen_range(-3..=3);
                g = &g + &Polynomial::monomial(n, *m, int(c));
            }
            gens.push(g);
        }
        let ideal = Ideal::new(ring.clone(), gens);
        let Some(found) = monomialize(&ideal) else {
            same = false;
            continue;
        };
        let back = Ideal::new(ring.clone(), found.iter().map(|m| Polynomial::monomial(n, *m, Rational::one())).collect());
        let a = ideal.groebner();
        let b = back.groebner();
        same &= back.generators.iter().all(|g| a.contains(g)) && ideal.generators.iter().all(|g| b.contains(g));
        idempotent &= monomialize(&back).as_ref() == Some(&found);
    }
    claim(&mut out, "50 random ideals: same ideal", same);
    claim(&mut out, "50 random ideals: idempotent", idempotent);
    let none1 = monomialize(&std_ideal(&["x", "y"], &["x^2 + y^2", "x*y"])).is_none();
    let none2 = monomialize(&std_ideal(&["x", "y"], &["(x + y)^2"])).is_none();
    claim(&mut out, "(x^2 + y^2, xy) and ((x + y)^2) are not monomial", none1 && none2);
    out
}

fn c11() -> Claims {
    let mut out = Claims::new();
    let j = std_ideal(&["x", "y"], &["x^2", "y"]);
    let rep = graded_pieces_series(&j, &ModuleSpec::Ring, 8, &GradedPiecesOptions::default()).unwrap();
    // brute force: products of generators span J^i, colengths by Groebner bases
    let mut powers = vec![Ideal::new(j.ring.clone(), vec![Polynomial::one(2)])];
    for i in 1..=9 {
        let prev = &powers[i - 1];
        let gens: Vec<Polynomial> = prev.generators.iter().flat_map(|p| j.generators.iter().map(move |g| p * g)).collect();
        powers.push(Ideal::new(j.ring.clone(), gens));
    }
    let brute: Vec<u64> = (0..=8).map(|i| (colength(&powers[i + 1]) - if i == 0 { 0 } else { colength(&powers[i]) }) as u64).collect();
    let want: Vec<u64> = (0..=8).map(|i| 2 * (i + 1)).collect();
    claim(&mut out, format!("dims {:?} = 2(i + 1) = brute force", rep.dims), rep.dims == want && brute == want);
    claim(&mut out, "series 2/(1 - t)^2", rep.series == RationalSeries::from_i64(&[2], &[(1, 2)]));
    claim(&mut out, format!("(d, e) = ({}, {})", rep.dimension, rep.multiplicity), rep.dimension == 2 && rep.multiplicity == int(2));
    out
}

fn c12() -> Claims {
    let mut out = Claims::new();
    for d in 0..=4 {
        let f = sl2_algebroid_filtration(d).unwrap();
        claim(&mut out, format!("d = {d}: {} rank-one quotients, certified {}", f.rank_one_quotients, f.certified), f.certified && f.rank_one_quotients == d + 1);
    }
    out
}

fn c13() -> Claims {
    let mut out = Claims::new();
    let mut rng = StdRng::seed_from_u64(13);
    let mut ok = true;
    for _ in 0..30 {
        let n = rng.gen_range(1..=3);
        let ring = Ring::standard(n);
        let k = rng.gen_range(1..=4);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| random_monomial(&mut rng, n))
            .filter(|m| !m.is_one())
            .map(|m| Polynomial::monomial(n, m, Rational::one()))
            .collect();
        let ideal = Ideal::new(ring, gens);
        let eq = equivariant_series_monomial(&ideal, 12).unwrap();
        let integrated = integrate_characters(&eq);
        let plain = expand_series(&hilbert_series_quotient(&ideal).unwrap(), 12);
        ok &= integrated.prefix == plain;
        ok &= integrated.closed.is_some_and(|c| expand_series(&c, 12) == plain);
    }
    claim(&mut out, "30 random monomial ideals: integrated equivariant series = Hilbert series through degree 12", ok);
    let plane = Ideal::new(Ring::standard(2), vec![]);
    let (r, _) = gamma_restriction(&equivariant_series_monomial(&plane, 12).unwrap(), &SemigroupSpec::diagonal(2));
    let want = expand_series(&RationalSeries::from_i64(&[1], &[(2, 1)]), 12);
    claim(&mut out, "diagonal restriction of Q[x, y] integrates to 1/(1 - t^2)", integrated_eq(&r, &want));
    out
}

fn integrated_eq(cs: &algebroid::character::CharacterSeries, want: &SeriesPrefix) -> bool {
    &integrate_characters(cs).prefix == want
}

fn main() {
    let criteria: [(&str, fn() -> Claims); 13] = [
        ("covariants of binary quadratics", c1),
        ("covariants of binary cubics", c2),
        ("Cayley-Sylvester against explicit decomposition", c3),
        ("Whitney umbrella", c4),
        ("quadrics n = 3, 4, 5", c5),
        ("cubic discriminant", c6),
        ("smooth case (x1, x2) in four variables", c7),
        ("solvability oracles", c8),
        ("quasi-polynomial of 1/(1 - t)^l", c9),
        ("monomialize suite", c10),
        ("cusp graded pieces", c11),
        ("sl2 local system filtration", c12),
        ("equivariant consistency", c13),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let claims = run();
        let ok = claims.iter().all(|(_, c)| *c);
        println!("criterion {:2}: {} {name} ({:.2?})", k + 1, if ok { "PASS" } else { "FAIL" }, start.elapsed());
        for (label, c) in &claims {
            println!("    {} {label}", if *c { "ok  " } else { "FAIL" });
        }
        if !ok {
            failed.push(k + 1);
        }
    }
    println!("acceptance: {}/{} PASS", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
