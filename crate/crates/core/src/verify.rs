//! Exhaustive identity suites over all small graphs. Each suite stops at the
//! first violated identity and reports the graph it failed on.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bialgebra::{
    antipode_convolution, antipode_forest, antipode_recursive, apply_left, apply_right,
    cointeraction_lhs, cointeraction_rhs, contraction_coproduct, contraction_coproduct_graph,
    contraction_counit, isoclass, projection, restriction_coproduct, restriction_coproduct_graph,
    HgrElement, IndexedElement, Tensor2,
};
use crate::canon::Monomial;
use crate::characters::{lambda_chr, Character, LambdaEngine, LAMBDA_ENGINES};
use crate::chromatic::{
    chromatic, count_valid_colorings, pchr_deletion_contraction, phi_zero, stanley_families,
    stanley_pairs, CHROMATIC_ENGINES,
};
use crate::enumerate::{connected_isoclasses, isoclasses_up_to, labelled_graphs};
use crate::graph::Graph;
use crate::lattice::{interval_quotient, AdmissibleLattice};
use crate::linear::{int, sign, LinComb, Rational};
use crate::partition::SetPartitions;
use crate::wsym::{
    expand, hilbert_w, hilbert_words, pchr_nc, phi0_act_lambda_chr, phi0_nc, wsym_coproduct_elem,
    wsym_multiply,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Coassoc,
    Counit,
    Cointeraction,
    Antipode,
    Engines,
    Signs,
    Stanley,
    Mobius,
    Wsym,
    Projection,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Coassoc,
        Suite::Counit,
        Suite::Cointeraction,
        Suite::Antipode,
        Suite::Engines,
        Suite::Signs,
        Suite::Stanley,
        Suite::Mobius,
        Suite::Wsym,
        Suite::Projection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Counit => "counit",
            Suite::Cointeraction => "cointeraction",
            Suite::Antipode => "antipode",
            Suite::Engines => "engines",
            Suite::Signs => "signs",
            Suite::Stanley => "stanley",
            Suite::Mobius => "mobius",
            Suite::Wsym => "wsym",
            Suite::Projection => "projection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Summary of a passing suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub max_n: usize,
    pub checks: usize,
}

/// A violated identity and the graph it failed on.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub suite: &'static str,
    pub identity: String,
    pub graph: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} fails on {}: {}", self.suite, self.identity, self.graph, self.detail)
    }
}

struct Checker {
    suite: Suite,
    checks: usize,
}

type Outcome = Result<(), Violation>;

impl Checker {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, identity: &str, g: &Graph, lhs: T, rhs: T) -> Outcome {
        self.holds(identity, g, lhs == rhs, || format!("{lhs:?} != {rhs:?}"))
    }

    fn holds(&mut self, identity: &str, g: &Graph, ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(Violation {
                suite: self.suite.name(),
                identity: identity.to_string(),
                graph: g.to_string(),
                detail: detail(),
            })
        }
    }
}

/// Runs one suite on graphs with at most `max_n` vertices.
pub fn run(suite: Suite, max_n: usize) -> Result<Report, Violation> {
    let mut c = Checker { suite, checks: 0 };
    match suite {
        Suite::Coassoc => coassoc(&mut c, max_n)?,
        Suite::Counit => counit(&mut c, max_n)?,
        Suite::Cointeraction => cointeraction(&mut c, max_n)?,
        Suite::Antipode => antipode(&mut c, max_n)?,
        Suite::Engines => engines(&mut c, max_n)?,
        Suite::Signs => signs(&mut c, max_n)?,
        Suite::Stanley => stanley(&mut c, max_n)?,
        Suite::Mobius => mobius(&mut c, max_n)?,
        Suite::Wsym => wsym(&mut c, max_n)?,
        Suite::Projection => projection_suite(&mut c, max_n)?,
    }
    Ok(Report { suite: suite.name(), max_n, checks: c.checks })
}

fn coassoc(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let x = isoclass(&g);
        let d = restriction_coproduct(&x);
        let left = apply_left(&d, |a| restriction_coproduct(&HgrElement::basis(a.clone())));
        let right = apply_right(&d, |b| restriction_coproduct(&HgrElement::basis(b.clone())));
        c.eq("(Δ⊗Id)Δ = (Id⊗Δ)Δ", &g, left, right)?;
        let flipped = d.map_basis(|(a, b)| (b.clone(), a.clone()));
        c.eq("Δ is cocommutative", &g, &d, &flipped)?;
        c.holds("Δ splits |G|", &g, d.keys().all(|(a, b)| a.vertex_count() + b.vertex_count() == g.n()), String::new)?;

        let d = contraction_coproduct(&x);
        let left = apply_left(&d, |a| contraction_coproduct(&HgrElement::basis(a.clone())));
        let right = apply_right(&d, |b| contraction_coproduct(&HgrElement::basis(b.clone())));
        c.eq("(δ⊗Id)δ = (Id⊗δ)δ", &g, left, right)?;
        let deg = |m: &Monomial| m.to_graph().degree();
        c.holds("δ splits deg(G)", &g, d.keys().all(|(a, b)| deg(a) + deg(b) == g.degree()), String::new)?;
    }
    Ok(())
}

fn left_counit(d: &Tensor2<Monomial>, counit: impl Fn(&Monomial) -> Rational) -> HgrElement {
    d.flat_map(|(a, b)| HgrElement::term(b.clone(), counit(a)))
}

fn right_counit(d: &Tensor2<Monomial>, counit: impl Fn(&Monomial) -> Rational) -> HgrElement {
    d.flat_map(|(a, b)| HgrElement::term(a.clone(), counit(b)))
}

fn counit(c: &mut Checker, max_n: usize) -> Outcome {
    let eps = |m: &Monomial| if m.is_unit() { Rational::one() } else { Rational::zero() };
    let eps_prime = |m: &Monomial| contraction_counit(&HgrElement::basis(m.clone()));
    let graphs = isoclasses_up_to(max_n);
    for g in &graphs {
        let x = isoclass(g);
        let d = restriction_coproduct(&x);
        c.eq("(ε⊗Id)Δ = Id", g, left_counit(&d, eps), x.clone())?;
        c.eq("(Id⊗ε)Δ = Id", g, right_counit(&d, eps), x.clone())?;
        let d = contraction_coproduct(&x);
        c.eq("(ε'⊗Id)δ = Id", g, left_counit(&d, eps_prime), x.clone())?;
        c.eq("(Id⊗ε')δ = Id", g, right_counit(&d, eps_prime), x.clone())?;
    }
    // multiplicativity on products whose total size stays within the bound
    for g in &graphs {
        for h in graphs.iter().filter(|h| g.n() + h.n() <= max_n) {
            let gh = g.disjoint_union(h).expect("small");
            let (x, y, xy) = (isoclass(g), isoclass(h), isoclass(&gh));
            let mul = |p: &(Monomial, Monomial), q: &(Monomial, Monomial)| (p.0.mul(&q.0), p.1.mul(&q.1));
            let prod = restriction_coproduct(&x).multiply(&restriction_coproduct(&y), mul);
            c.eq("Δ(xy) = Δ(x)Δ(y)", &gh, restriction_coproduct(&xy), prod)?;
            let prod = contraction_coproduct(&x).multiply(&contraction_coproduct(&y), mul);
            c.eq("δ(xy) = δ(x)δ(y)", &gh, contraction_coproduct(&xy), prod)?;
        }
    }
    Ok(())
}

fn cointeraction(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let x = isoclass(&g);
        c.eq("m(δ⊗δ)Δ = (Δ⊗Id)δ", &g, cointeraction_lhs(&x), cointeraction_rhs(&x))?;
    }
    if max_n >= 3 {
        let p3: Graph = "3: 1-3, 3-2".parse().expect("literal");
        let x = IndexedElement::basis(p3.clone());
        let (lhs, rhs) = (cointeraction_lhs(&x), cointeraction_rhs(&x));
        c.holds("indexed graphs break cointeraction", &p3, lhs != rhs, || "sides agree".into())?;
    }
    Ok(())
}

fn antipode(c: &mut Checker, max_n: usize) -> Outcome {
    for n in 2..=max_n {
        for g in connected_isoclasses(n) {
            let forest = antipode_forest(&g).expect("connected");
            let recursive = antipode_recursive(&g).expect("connected");
            c.eq("forest antipode = recursive antipode", &g, &forest, &recursive)?;
            c.eq("m(S'⊗Id)δ = ε'", &g, antipode_convolution(&isoclass(&g)), HgrElement::zero())?;
        }
    }
    Ok(())
}

fn engines(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let reference = chromatic(&g, CHROMATIC_ENGINES[0]);
        for engine in CHROMATIC_ENGINES {
            c.eq(&format!("P_chr via {engine:?}"), &g, chromatic(&g, engine), reference.clone())?;
        }
        for k in 0..=4 {
            let count = int(count_valid_colorings(&g, k) as i64);
            c.eq(&format!("P_chr({k}) = colourings"), &g, reference.eval(&int(k as i64)), count)?;
        }
    }
    let chr = Character::lambda_chr();
    let zero = Character::lambda_zero();
    let eps = Character::counit();
    let inv = zero.invert().expect("λ0(K1) = 1");
    let (left, right) = (chr.convolve(&zero), zero.convolve(&chr));
    for n in 1..=max_n {
        for g in connected_isoclasses(n) {
            let reference = lambda_chr(&g, LambdaEngine::DeletionContraction);
            for engine in LAMBDA_ENGINES {
                c.eq(&format!("λ_chr via {engine:?}"), &g, lambda_chr(&g, engine), reference.clone())?;
            }
            let e = eps.eval_graph(&g);
            c.eq("λ_chr * λ0 = ε'", &g, left.eval_graph(&g), e.clone())?;
            c.eq("λ0 * λ_chr = ε'", &g, right.eval_graph(&g), e)?;
            c.eq("λ0^-1 = λ_chr", &g, inv.eval_graph(&g), reference)?;
        }
    }
    Ok(())
}

fn signs(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let p = pchr_deletion_contraction(&g);
        let n = g.n();
        let cc = g.component_count();
        for i in 0..=n {
            let a = p.coeff(i);
            let support = cc <= i;
            c.holds("a_i != 0 iff cc <= i <= |G|", &g, a.is_zero() != support, || format!("a_{i} = {a}"))?;
            if support {
                c.holds("sign a_i = (-1)^(|G|-i)", &g, (a * sign(n - i)).is_positive(), || format!("i = {i}"))?;
            }
        }
        if n >= 1 {
            c.eq("-a_{|G|-1} = |E|", &g, -p.coeff(n - 1), int(g.edge_count() as i64))?;
        }
        let lam = lambda_chr(&g, LambdaEngine::DeletionContraction);
        c.holds("(-1)^deg λ_chr >= 1", &g, sign(g.degree()) * &lam >= Rational::one(), || lam.to_string())?;
        c.eq("|λ_chr| = 1 iff forest", &g, lam.abs().is_one(), g.is_forest())?;
        for (a, b) in g.edges() {
            if g.is_bridge(a, b).expect("edge") {
                let deleted = lambda_chr(&g.delete_edge(a, b).expect("edge"), LambdaEngine::DeletionContraction);
                let contracted = lambda_chr(&g.contract_edge(a, b).expect("edge"), LambdaEngine::DeletionContraction);
                c.eq("bridge: λ(G) = -λ(G\\e)", &g, lam.clone(), -deleted)?;
                c.eq("bridge: λ(G) = -λ(G/e)", &g, lam.clone(), -contracted)?;
            }
        }
    }
    Ok(())
}

fn stanley(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let p = pchr_deletion_contraction(&g);
        for k in 1..=3usize {
            let value = sign(g.n()) * p.eval(&int(-(k as i64)));
            let families = int(stanley_families(&g, k).expect("k >= 1") as i64);
            let pairs = int(stanley_pairs(&g, k).expect("k >= 1") as i64);
            c.eq(&format!("(-1)^|G| P(-{k}) = families"), &g, value.clone(), families)?;
            c.eq(&format!("(-1)^|G| P(-{k}) = pairs"), &g, value, pairs)?;
        }
    }
    Ok(())
}

fn mobius(c: &mut Checker, max_n: usize) -> Outcome {
    for g in isoclasses_up_to(max_n) {
        let l = AdmissibleLattice::build(&g);
        for (i, p) in l.elements().iter().enumerate() {
            let row = l.mobius_row(i);
            for (j, q) in l.elements().iter().enumerate() {
                if !l.leq(i, j) {
                    continue;
                }
                let quotient = interval_quotient(&g, p, q).expect("interval");
                let lam = lambda_chr(&quotient, LambdaEngine::DeletionContraction);
                c.eq("μ(p,q) = λ_chr((G|q)/p)", &g, int(row[j]), lam)?;
            }
        }
        let bijective = l.len() as u64 == 1u64 << g.edge_count();
        c.eq("ζ bijective iff forest", &g, bijective, g.is_forest())?;
    }
    Ok(())
}

fn wsym(c: &mut Checker, max_n: usize) -> Outcome {
    let graphs = isoclasses_up_to(max_n);
    for g in &graphs {
        for h in graphs.iter().filter(|h| g.n() + h.n() <= max_n) {
            let gh = g.disjoint_union(h).expect("small");
            c.eq("P(GH) = P(G)P(H)", &gh, pchr_nc(&gh), wsym_multiply(&pchr_nc(g), &pchr_nc(h)))?;
        }
        let delta = wsym_coproduct_elem(&pchr_nc(g));
        let image = restriction_coproduct_graph::<Graph>(g)
            .flat_map(|(a, b)| pchr_nc(a).tensor(&pchr_nc(b)));
        c.eq("ΔP(G) = (P⊗P)Δ(G)", g, delta, image)?;
        c.eq("P = Φ0 ← λ_chr", g, phi0_act_lambda_chr(g), expand(&pchr_nc(g)))?;
    }
    for n in 1..=max_n {
        for p in SetPartitions::new(n).filter(|p| p.block_count() <= 3) {
            let g = Graph::complete_multipartite(&p);
            let image = pchr_nc(&g);
            let k = p.block_count();
            let ok = image.coefficient(&p).is_one()
                && image.keys().all(|q| *q == p || q.block_count() > k);
            c.holds("P(multipartite(π)) = W_π + longer terms", &g, ok, || format!("{image:?}"))?;
        }
    }
    Ok(())
}

fn projection_suite(c: &mut Checker, max_n: usize) -> Outcome {
    let proj2 = |t: &Tensor2<Graph>| t.map_basis(|(a, b)| (Monomial::of_graph(a), Monomial::of_graph(b)));
    for n in 0..=max_n.min(5) {
        for g in labelled_graphs(n) {
            let x = IndexedElement::basis(g.clone());
            let p = projection(&x);
            c.eq("ϖ∘Δ = (ϖ⊗ϖ)∘Δ", &g, restriction_coproduct(&p), proj2(&restriction_coproduct(&x)))?;
            c.eq("ϖ∘δ = (ϖ⊗ϖ)∘δ", &g, contraction_coproduct(&p), proj2(&contraction_coproduct_graph(&g)))?;
        }
    }
    for g in isoclasses_up_to(max_n) {
        c.eq("H∘P = P_chr", &g, hilbert_w(&pchr_nc(&g)), pchr_deletion_contraction(&g))?;
        c.eq("H∘Φ0 = φ0", &g, hilbert_words(&phi0_nc(&g)), phi_zero(&g))?;
    }
    let graphs = isoclasses_up_to(max_n.min(4));
    for g in &graphs {
        for h in &graphs {
            let gh = g.disjoint_union(h).expect("small");
            let prod: LinComb<Monomial> = projection(&IndexedElement::basis(g.clone()))
                .multiply(&projection(&IndexedElement::basis(h.clone())), Monomial::mul);
            c.eq("ϖ(GH) = ϖ(G)ϖ(H)", &gh, projection(&IndexedElement::basis(gh.clone())), prod)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_small_graphs() {
        for suite in Suite::ALL {
            let report = run(suite, 3).unwrap_or_else(|v| panic!("{v}"));
            assert!(report.checks > 0, "{suite}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
