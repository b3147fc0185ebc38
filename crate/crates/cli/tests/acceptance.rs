//! Acceptance criteria, one line per criterion. Runs without the test harness
//! so the lines are always printed; exits nonzero if any criterion fails or
//! exceeds its time limit.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graph_hopf_core::bialgebra::{
    antipode_convolution, antipode_forest, antipode_recursive, apply_left, apply_right,
    cointeraction_lhs, cointeraction_rhs, contraction_coproduct, isoclass, restriction_coproduct,
    restriction_coproduct_graph, HgrElement, IndexedElement, Tensor2,
};
use graph_hopf_core::characters::{lambda_chr, Character, LambdaEngine, LAMBDA_ENGINES};
use graph_hopf_core::chromatic::{
    chromatic, count_valid_colorings, ChromaticEngine, phi_zero, stanley_families, stanley_pairs, CHROMATIC_ENGINES,
};
use graph_hopf_core::enumerate::{connected_isoclasses, isoclasses_up_to, labelled_graphs};
use graph_hopf_core::lattice::{interval_quotient, zeta, zeta_is_bijective, AdmissibleLattice};
use graph_hopf_core::linear::{int, sign};
use graph_hopf_core::wsym::{
    expand, hilbert_w, hilbert_words, pchr_nc, phi0_act_lambda_chr, phi0_nc, wsym_coproduct,
    wsym_coproduct_elem, wsym_multiply, wsym_product, WSymElement,
};
use graph_hopf_core::{acyclic_orientations, Graph, LinComb, Monomial, Partition, Rational};

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn criterion_1() -> Check {
    let table = [
        (Graph::complete(1), 1),
        (Graph::complete(2), -1),
        (Graph::complete(3), 2),
        (Graph::path(3), 1),
        (Graph::complete(4), -6),
    ];
    for (g, v) in table {
        for engine in LAMBDA_ENGINES {
            ensure(lambda_chr(&g, engine) == int(v), || format!("λ_chr({g}) via {engine:?}"))?;
        }
    }
    for n in 1..=6 {
        let expected = sign(n - 1) * int(factorial(n - 1));
        for engine in LAMBDA_ENGINES {
            let got = lambda_chr(&Graph::complete(n), engine);
            ensure(got == expected, || format!("λ_chr(K{n}) via {engine:?} = {got}"))?;
        }
    }
    Ok(())
}

fn engines_agree_with_colourings(g: &Graph) -> Check {
    let reference = chromatic(g, CHROMATIC_ENGINES[0]);
    for engine in CHROMATIC_ENGINES {
        ensure(chromatic(g, engine) == reference, || format!("{engine:?} on {g}"))?;
    }
    for k in 0..=4 {
        let count = int(count_valid_colorings(g, k) as i64);
        ensure(reference.eval(&int(k as i64)) == count, || format!("P({k}) on {g}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let graphs = isoclasses_up_to(5);
    let n5 = graphs.iter().filter(|g| g.n() == 5).count();
    ensure(n5 == 34, || format!("{n5} isoclasses on 5 vertices"))?;
    for g in &graphs {
        engines_agree_with_colourings(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..200 {
        let g = random_graph(&mut rng, 6 + i % 2);
        engines_agree_with_colourings(&g)?;
    }
    Ok(())
}

fn graded_sizes(t: &Tensor2<Monomial>, f: impl Fn(&Monomial) -> usize) -> Vec<usize> {
    t.keys().map(|(a, b)| f(a) + f(b)).collect()
}

fn criterion_3() -> Check {
    let graphs = isoclasses_up_to(5);
    let basis = |m: &Monomial| HgrElement::basis(m.clone());
    let degree = |m: &Monomial| m.to_graph().degree();
    for g in &graphs {
        let x = isoclass(g);
        for (name, coproduct) in [
            ("Δ", restriction_coproduct as fn(&HgrElement) -> Tensor2<Monomial>),
            ("δ", contraction_coproduct),
        ] {
            let d = coproduct(&x);
            let left = apply_left(&d, |a| coproduct(&basis(a)));
            let right = apply_right(&d, |b| coproduct(&basis(b)));
            ensure(left == right, || format!("{name} coassociativity on {g}"))?;
        }

        let d = restriction_coproduct(&x);
        let eps = |m: &Monomial| if m.is_unit() { Rational::one() } else { Rational::zero() };
        let lc = d.flat_map(|(a, b)| HgrElement::term(b.clone(), eps(a)));
        let rc = d.flat_map(|(a, b)| HgrElement::term(a.clone(), eps(b)));
        ensure(lc == x && rc == x, || format!("Δ counit on {g}"))?;
        ensure(graded_sizes(&d, Monomial::vertex_count).iter().all(|&s| s == g.n()), || {
            format!("Δ grading on {g}")
        })?;

        let d = contraction_coproduct(&x);
        let eps = |m: &Monomial| {
            if m.to_graph().is_totally_disconnected() { Rational::one() } else { Rational::zero() }
        };
        let lc = d.flat_map(|(a, b)| HgrElement::term(b.clone(), eps(a)));
        let rc = d.flat_map(|(a, b)| HgrElement::term(a.clone(), eps(b)));
        ensure(lc == x && rc == x, || format!("δ counit on {g}"))?;
        ensure(graded_sizes(&d, degree).iter().all(|&s| s == g.degree()), || {
            format!("δ grading on {g}")
        })?;
    }
    let mul = |p: &(Monomial, Monomial), q: &(Monomial, Monomial)| (p.0.mul(&q.0), p.1.mul(&q.1));
    for g in &graphs {
        for h in graphs.iter().filter(|h| g.n() + h.n() <= 5) {
            let gh = g.disjoint_union(h).expect("small");
            let (x, y, xy) = (isoclass(g), isoclass(h), isoclass(&gh));
            let prod = restriction_coproduct(&x).multiply(&restriction_coproduct(&y), mul);
            ensure(restriction_coproduct(&xy) == prod, || format!("Δ multiplicative on {g} · {h}"))?;
            let prod = contraction_coproduct(&x).multiply(&contraction_coproduct(&y), mul);
            ensure(contraction_coproduct(&xy) == prod, || format!("δ multiplicative on {g} · {h}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for g in isoclasses_up_to(5) {
        let x = isoclass(&g);
        ensure(cointeraction_lhs(&x) == cointeraction_rhs(&x), || format!("cointeraction on {g}"))?;
    }
    let p3: Graph = "3: 1-3, 3-2".parse().expect("literal");
    let x = IndexedElement::basis(p3);
    ensure(cointeraction_lhs(&x) != cointeraction_rhs(&x), || {
        "indexed P3 satisfies cointeraction".into()
    })
}

fn criterion_5() -> Check {
    for n in 2..=6 {
        for g in connected_isoclasses(n) {
            let forest = antipode_forest(&g).map_err(|e| e.to_string())?;
            let recursive = antipode_recursive(&g).map_err(|e| e.to_string())?;
            ensure(forest == recursive, || format!("antipodes differ on {g}"))?;
            if n <= 5 {
                ensure(antipode_convolution(&isoclass(&g)).is_zero(), || {
                    format!("antipode law on {g}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let chr = Character::lambda_chr();
    let zero = Character::lambda_zero();
    let eps = Character::counit();
    let inverse = zero.invert().map_err(|e| e.to_string())?;
    let (left, right) = (chr.convolve(&zero), zero.convolve(&chr));
    for n in 1..=6 {
        for g in connected_isoclasses(n) {
            let e = eps.eval_graph(&g);
            ensure(left.eval_graph(&g) == e, || format!("λ_chr * λ0 on {g}"))?;
            ensure(right.eval_graph(&g) == e, || format!("λ0 * λ_chr on {g}"))?;
            let expected = lambda_chr(&g, LambdaEngine::Forest);
            ensure(inverse.eval_graph(&g) == expected, || format!("λ0^-1 on {g}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for g in isoclasses_up_to(6) {
        let p = chromatic(&g, ChromaticEngine::DeletionContraction);
        let (n, cc) = (g.n(), g.component_count());
        for i in 0..=n + 1 {
            let a = p.coeff(i);
            let in_support = cc <= i && i <= n;
            ensure(a.is_zero() != in_support, || format!("support of a_{i} on {g}"))?;
            if in_support {
                ensure((a * sign(n - i)).is_positive(), || format!("sign of a_{i} on {g}"))?;
            }
        }
        if n >= 1 {
            ensure(-p.coeff(n - 1) == int(g.edge_count() as i64), || format!("a_(n-1) on {g}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let lam = |g: &Graph| lambda_chr(g, LambdaEngine::DeletionContraction);
    for g in isoclasses_up_to(6) {
        let acyclic = g.edge_count() + g.component_count() == g.n();
        let l = lam(&g);
        ensure(l.abs().is_one() == acyclic, || format!("|λ_chr| = 1 iff acyclic on {g}"))?;
        ensure(zeta_is_bijective(&g) == acyclic, || format!("ζ bijective iff acyclic on {g}"))?;
        let lattice = AdmissibleLattice::build(&g);
        let mut images: Vec<Vec<(usize, usize)>> = lattice
            .elements()
            .iter()
            .map(|p| zeta(&g, p).expect("admissible"))
            .collect();
        images.sort();
        images.dedup();
        ensure(images.len() == lattice.len(), || format!("ζ injective on {g}"))?;
        if acyclic {
            ensure(lattice.len() == 1 << g.edge_count(), || format!("|R| = 2^|E| on {g}"))?;
        }
        for (a, b) in g.edges() {
            if g.is_bridge(a, b).map_err(|e| e.to_string())? {
                let deleted = lam(&g.delete_edge(a, b).expect("edge"));
                let contracted = lam(&g.contract_edge(a, b).expect("edge"));
                ensure(l == -deleted, || format!("bridge deletion on {g}"))?;
                ensure(l == -contracted, || format!("bridge contraction on {g}"))?;
                let contracted_lattice = AdmissibleLattice::build(&g.contract_edge(a, b).expect("edge"));
                ensure(lattice.len() == 2 * contracted_lattice.len(), || format!("|R| bridge factor on {g}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    for n in 1..=5 {
        for g in connected_isoclasses(n) {
            let l = AdmissibleLattice::build(&g);
            for (i, p) in l.elements().iter().enumerate() {
                let row = l.mobius_row(i);
                for (j, q) in l.elements().iter().enumerate().filter(|&(j, _)| l.leq(i, j)) {
                    let quotient = interval_quotient(&g, p, q).map_err(|e| e.to_string())?;
                    let expected = lambda_chr(&quotient, LambdaEngine::Forest);
                    ensure(int(row[j]) == expected, || format!("μ({p}, {q}) on {g}"))?;
                }
            }
            let top = lambda_chr(&g, LambdaEngine::DeletionContraction);
            ensure(l.mobius_bottom_top() == top, || format!("μ(~0, ~1) on {g}"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    for g in isoclasses_up_to(5) {
        let p = chromatic(&g, ChromaticEngine::Partition);
        for k in 1..=3usize {
            let value = sign(g.n()) * p.eval(&int(-(k as i64)));
            let families = stanley_families(&g, k).map_err(|e| e.to_string())?;
            let pairs = stanley_pairs(&g, k).map_err(|e| e.to_string())?;
            ensure(value == int(families as i64), || format!("families k={k} on {g}"))?;
            ensure(value == int(pairs as i64), || format!("pairs k={k} on {g}"))?;
            if k == 1 {
                let orientations = acyclic_orientations(&g).count() as i64;
                ensure(value == int(orientations), || format!("acyclic orientations on {g}"))?;
            }
        }
    }
    Ok(())
}

fn part(n: usize, blocks: &[&[usize]]) -> Partition {
    let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|v| v - 1).collect()).collect();
    Partition::from_blocks(n, &blocks).expect("valid partition")
}

fn w_sum(ps: &[Partition]) -> WSymElement {
    ps.iter().map(|p| (p.clone(), Rational::one())).collect()
}

fn criterion_11() -> Check {
    let small = isoclasses_up_to(4);
    for g in &small {
        for h in &small {
            let gh = g.disjoint_union(h).expect("small");
            ensure(pchr_nc(&gh) == wsym_multiply(&pchr_nc(g), &pchr_nc(h)), || {
                format!("P_chr product on {g} · {h}")
            })?;
        }
    }
    let labelled: Vec<Graph> = (0..=4).flat_map(labelled_graphs).collect();
    for g in labelled.iter().filter(|g| g.n() <= 3) {
        for h in labelled.iter().filter(|h| h.n() <= 3) {
            let gh = g.disjoint_union(h).expect("small");
            ensure(pchr_nc(&gh) == wsym_multiply(&pchr_nc(g), &pchr_nc(h)), || {
                format!("P_chr product on {g} · {h}")
            })?;
        }
    }
    for g in &labelled {
        let image: LinComb<(Partition, Partition)> = restriction_coproduct_graph::<Graph>(g)
            .flat_map(|(a, b)| pchr_nc(a).tensor(&pchr_nc(b)));
        ensure(wsym_coproduct_elem(&pchr_nc(g)) == image, || format!("P_chr coproduct on {g}"))?;
    }
    for g in (0..=5).flat_map(labelled_graphs) {
        ensure(phi0_act_lambda_chr(&g) == expand(&pchr_nc(&g)), || format!("P = Φ0 ← λ_chr on {g}"))?;
    }
    for g in isoclasses_up_to(5) {
        let p = chromatic(&g, ChromaticEngine::DeletionContraction);
        ensure(hilbert_w(&pchr_nc(&g)) == p, || format!("H∘P_chr on {g}"))?;
        ensure(hilbert_words(&phi0_nc(&g)) == phi_zero(&g), || format!("H∘Φ0 on {g}"))?;
    }

    let p1 = part(1, &[&[1]]);
    ensure(
        wsym_product(&part(2, &[&[1, 2]]), &p1)
            == w_sum(&[part(3, &[&[1, 2], &[3]]), part(3, &[&[1, 2, 3]])]),
        || "first product example".into(),
    )?;
    ensure(
        wsym_product(&part(2, &[&[1], &[2]]), &p1)
            == w_sum(&[
                part(3, &[&[1], &[2], &[3]]),
                part(3, &[&[1, 3], &[2]]),
                part(3, &[&[1], &[2, 3]]),
            ]),
        || "second product example".into(),
    )?;
    let e = Partition::empty();
    let p12 = part(2, &[&[1, 2]]);
    let p1_2 = part(2, &[&[1], &[2]]);
    let p13_2 = part(3, &[&[1, 3], &[2]]);
    let p12_3 = part(3, &[&[1, 2], &[3]]);
    let whole = part(4, &[&[1, 3], &[2], &[4]]);
    let expected: LinComb<(Partition, Partition)> = [
        (whole.clone(), e.clone()),
        (p13_2.clone(), p1.clone()),
        (p12_3.clone(), p1.clone()),
        (p1_2.clone(), p12.clone()),
        (p12, p1_2),
        (p1.clone(), p12_3),
        (p1, p13_2),
        (e, whole.clone()),
    ]
    .into_iter()
    .map(|pair| (pair, Rational::one()))
    .collect();
    ensure(wsym_coproduct(&whole) == expected, || "coproduct example".into())
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_graph-hopf"))
        .args(args)
        .env_remove("GRAPH_HOPF_MAX_N")
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn criterion_12() -> Check {
    let (code, out) = run_cli(&["chromatic", "--graph", "3: 1-2, 2-3, 1-3", "--engine", "all"])?;
    ensure(code == 0 && out == "{\"poly\":[\"0\",\"2\",\"-3\",\"1\"]}\n", || format!("chromatic: {code} {out:?}"))?;
    let (code, out) = run_cli(&["character", "--graph", "2: 1-2", "--which", "chr"])?;
    ensure(code == 0 && out == "{\"value\":\"-1\"}\n", || format!("character: {code} {out:?}"))?;
    let (code, _) = run_cli(&["verify", "--suite", "cointeraction", "--max-n", "4"])?;
    ensure(code == 0, || format!("verify cointeraction exited {code}"))?;
    let start = Instant::now();
    let (code, out) = run_cli(&["verify", "--max-n", "4"])?;
    ensure(code == 0, || format!("verify exited {code}: {out}"))?;
    ensure(start.elapsed() < Duration::from_secs(300), || "verify over all suites too slow".into())
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, name: "λ_chr ground truth", limit: Duration::from_secs(1), run: criterion_1 },
    Criterion { id: 2, name: "chromatic engine agreement", limit: Duration::from_secs(120), run: criterion_2 },
    Criterion { id: 3, name: "bialgebra laws", limit: Duration::from_secs(60), run: criterion_3 },
    Criterion { id: 4, name: "cointeraction", limit: Duration::from_secs(60), run: criterion_4 },
    Criterion { id: 5, name: "antipode", limit: Duration::from_secs(60), run: criterion_5 },
    Criterion { id: 6, name: "character monoid", limit: Duration::from_secs(30), run: criterion_6 },
    Criterion { id: 7, name: "coefficient signs", limit: Duration::from_secs(30), run: criterion_7 },
    Criterion { id: 8, name: "forest characterizations", limit: Duration::from_secs(30), run: criterion_8 },
    Criterion { id: 9, name: "Möbius function", limit: Duration::from_secs(60), run: criterion_9 },
    Criterion { id: 10, name: "negative-integer values", limit: Duration::from_secs(120), run: criterion_10 },
    Criterion { id: 11, name: "noncommutative layer", limit: Duration::from_secs(120), run: criterion_11 },
    Criterion { id: 12, name: "command-line contract", limit: Duration::from_secs(300), run: criterion_12 },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= c.limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {:?} limit)", c.limit),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {:<28} {:>10.3?}  {verdict}", c.id, c.name, elapsed);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
