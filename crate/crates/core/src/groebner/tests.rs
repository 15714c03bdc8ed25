use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{KMatrix, PolyRing, PrimeField, Rationals};

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn ideal<F: Field>(ring: &PolyRing<F>, gens: &[&str]) -> Vec<FreeVector<F>> {
    gens.iter()
        .map(|g| FreeVector::new(vec![ring.parse(g).unwrap()]))
        .collect()
}

fn vector<F: Field>(ring: &PolyRing<F>, comps: &[&str]) -> FreeVector<F> {
    FreeVector::new(comps.iter().map(|c| ring.parse(c).unwrap()).collect())
}

fn formatted<F: Field>(ring: &PolyRing<F>, gb: &GroebnerBasis<F>) -> Vec<String> {
    gb.elements()
        .iter()
        .map(|v| ring.format(v.get(0)))
        .collect()
}

#[test]
fn monomial_and_principal_ideals() {
    let r = PolyRing::xyz(Rationals);
    let gb = basis_of(1, &ideal(&r, &["x", "y"]), false, cfg()).unwrap();
    assert_eq!(formatted(&r, &gb), vec!["y", "x"]);
    let gb = basis_of(1, &ideal(&r, &["2*z^2+4*x*y"]), false, cfg()).unwrap();
    assert_eq!(formatted(&r, &gb), vec!["x*y+1/2*z^2"]);
}

/// dim_K S_{≤d} / span{m·g : deg(m·g) ≤ d} by dense linear algebra.
fn truncated_quotient_dim<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>], d: u32) -> usize {
    let n = ring.nvars();
    let monos = monomials_up_to(n, d);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        for m in monomials_up_to(n, d.saturating_sub(gd)) {
            if gd + m.degree() > d {
                continue;
            }
            let p = g.mul_term(&m, &ring.field().one());
            rows.push(monos.iter().map(|mm| p.coefficient(mm)).collect());
        }
    }
    let rank = if rows.is_empty() {
        0
    } else {
        KMatrix::from_rows(ring.field(), rows).rank()
    };
    monos.len() - rank
}

fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(v: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[v] = e;
            rec(v + 1, left - e, exps, out);
        }
        exps[v] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

#[test]
fn bezout_count_for_two_conics() {
    let r = PolyRing::new(Rationals, &["x", "y"]);
    let gens = ideal(&r, &["x^2-y", "y^2-x"]);
    let gb = basis_of(1, &gens, false, cfg()).unwrap();
    assert!(gb.buchberger_criterion_holds());
    let std = std_monomials(&gb).unwrap();
    assert_eq!(std.len(), 4);
    let polys: Vec<_> = gens.iter().map(|g| g.get(0).clone()).collect();
    assert_eq!(truncated_quotient_dim(&r, &polys, 4), 4);
    assert_eq!(truncated_quotient_dim(&r, &polys, 6), 4);
}

#[test]
fn normal_form_examples() {
    let r = PolyRing::xyz(Rationals);
    let f = ideal(&r, &["z^2+x*y"]);
    let gb = basis_of(1, &f, false, cfg()).unwrap();
    assert!(gb.normal_form(&f[0]).is_zero());
    let v = vector(&r, &["x+z"]);
    assert_eq!(gb.normal_form(&v), v);
    let gb = basis_of(1, &ideal(&r, &["x^2-z"]), false, cfg()).unwrap();
    assert_eq!(
        gb.normal_form(&vector(&r, &["x^2*y"])),
        vector(&r, &["y*z"])
    );
}

#[test]
fn lift_examples() {
    let r = PolyRing::xyz(Rationals);
    let gens = ideal(&r, &["x", "y"]);
    let h = member_with_lift(&gens[0], &gens, cfg()).unwrap().unwrap();
    assert_eq!(h, vec![r.one(), r.zero()]);
    let max = ideal(&r, &["x", "y", "z"]);
    assert_eq!(
        member_with_lift(&vector(&r, &["1"]), &max, cfg()).unwrap(),
        None
    );
    let v = vector(&r, &["x*z+y^2"]);
    let h = member_with_lift(&v, &max, cfg()).unwrap().unwrap();
    assert_eq!(combine(&h, &max, 1), v);
}

#[test]
fn syzygy_examples() {
    let r = PolyRing::xyz(Rationals);
    let syz = syzygies(&ideal(&r, &["x", "y"]), cfg()).unwrap();
    assert_eq!(syz.generators().len(), 1);
    let s = &syz.generators()[0];
    let koszul = vector(&r, &["y", "-x"]);
    assert!(s == &koszul || s == &vector(&r, &["-y", "x"]));
    let single = syzygies(&[vector(&r, &["x", "z^2"])], cfg()).unwrap();
    assert!(single.generators().is_empty());
}

#[test]
fn colon_examples() {
    let r = PolyRing::xyz(Rationals);
    let colon = |w: &[&str], v: &str| {
        let sub = Submodule::new(1, ideal(&r, w));
        let c = colon_module(&sub, &vector(&r, &[v]), cfg()).unwrap();
        formatted(&r, c.gb().unwrap())
    };
    assert_eq!(colon(&["x^2"], "x"), vec!["x"]);
    assert_eq!(colon(&["x^2", "y"], "x^2*y"), vec!["1"]);
    assert_eq!(colon(&["x*y", "y^2"], "y"), vec!["y", "x"]);
}

#[test]
fn std_monomial_examples() {
    let r = PolyRing::xyz(Rationals);
    let std = |gens: &[&str]| std_monomials(&basis_of(1, &ideal(&r, gens), false, cfg()).unwrap());
    assert_eq!(std(&["x", "y", "z"]).unwrap().len(), 1);
    let s = std(&["x^2", "y", "z"]).unwrap();
    assert_eq!(
        s.monomials
            .iter()
            .map(|(m, _)| m.degree())
            .collect::<Vec<_>>(),
        vec![0, 1]
    );
    assert!(matches!(std(&["x"]), Err(MfError::NotZeroDimensional(_))));
}

#[test]
fn degree_guard_trips() {
    let r = PolyRing::xyz(Rationals);
    let gens = ideal(&r, &["x^5-y", "y^5-z"]);
    let err = basis_of(1, &gens, false, GbConfig { max_degree: 3 }).unwrap_err();
    assert!(matches!(err, MfError::DegreeGuardExceeded { cap: 3, .. }));
}

fn random_poly(
    ring: &PolyRing<PrimeField>,
    rng: &mut ChaCha8Rng,
    max_deg: u32,
    terms: usize,
) -> Poly<PrimeField> {
    let k = ring.field();
    let mut t = Vec::new();
    for _ in 0..terms {
        let exps: Vec<u32> = (0..ring.nvars())
            .map(|_| rng.gen_range(0..=max_deg))
            .collect();
        let m = Monomial::from_exponents(&exps);
        if m.degree() <= max_deg {
            t.push((m, k.random(rng)));
        }
    }
    Poly::from_terms(k, ring.nvars(), t)
}

fn random_vector(
    ring: &PolyRing<PrimeField>,
    rng: &mut ChaCha8Rng,
    rank: usize,
) -> FreeVector<PrimeField> {
    FreeVector::new((0..rank).map(|_| random_poly(ring, rng, 2, 3)).collect())
}

#[test]
fn random_modules_satisfy_the_engine_contract() {
    let r = PolyRing::xyz(PrimeField::new(7).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let rank = rng.gen_range(1..=3);
        let ngens = rng.gen_range(1..=4);
        let gens: Vec<_> = (0..ngens)
            .map(|_| random_vector(&r, &mut rng, rank))
            .collect();
        let gb = basis_of(rank, &gens, true, cfg()).unwrap();
        assert!(gb.buchberger_criterion_holds());
        for g in &gens {
            let h = gb.lift(g).expect("generators are members");
            assert_eq!(&combine(&h, &gens, rank), g);
        }
        for e in gb.elements() {
            assert!(gb.lift(&e).is_some());
        }
        let syz = syzygies(&gens, cfg()).unwrap();
        for s in syz.generators() {
            assert!(combine(s.comps(), &gens, rank).is_zero());
        }
    }
}

#[test]
fn normal_forms_are_idempotent_and_linear() {
    let r = PolyRing::xyz(PrimeField::new(5).unwrap());
    let k = *r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let gens: Vec<_> = (0..3).map(|_| random_vector(&r, &mut rng, 2)).collect();
    let gb = basis_of(2, &gens, false, cfg()).unwrap();
    for _ in 0..200 {
        let a = random_vector(&r, &mut rng, 2);
        let b = random_vector(&r, &mut rng, 2);
        let c = k.random(&mut rng);
        let na = gb.normal_form(&a);
        assert_eq!(gb.normal_form(&na), na);
        assert!(gb.contains(&a.sub(&na)));
        let cb = FreeVector::new(b.comps().iter().map(|p| p.scale(&c)).collect());
        let lhs = gb.normal_form(&a.add(&cb));
        let nb = gb.normal_form(&b);
        let rhs = na.add(&FreeVector::new(
            nb.comps().iter().map(|p| p.scale(&c)).collect(),
        ));
        assert_eq!(lhs, rhs);
    }
}

/// Homogeneous syzygies of degree d, counted by linear algebra, match the
/// span of the computed generators in that degree.
#[test]
fn syzygies_are_complete_in_low_degree() {
    let r = PolyRing::xyz(PrimeField::new(11).unwrap());
    let k = *r.field();
    let gens_txt = ["x^2+y*z", "x*y-z^2", "y^2+x*z", "x*z"];
    let gens = ideal(&r, &gens_txt);
    let syz = syzygies(&gens, cfg()).unwrap();
    for d in 2..=5u32 {
        // unknowns: coefficients of h_i in degree d - 2
        let hm = monomials_up_to(3, d - 2)
            .into_iter()
            .filter(|m| m.degree() == d - 2)
            .collect::<Vec<_>>();
        let target = monomials_up_to(3, d)
            .into_iter()
            .filter(|m| m.degree() == d)
            .collect::<Vec<_>>();
        let mut cols = Vec::new();
        for g in &gens {
            for m in &hm {
                let p = g.get(0).mul_term(m, &k.one());
                cols.push(target.iter().map(|t| p.coefficient(t)).collect::<Vec<_>>());
            }
        }
        let mat = KMatrix::from_columns(&k, target.len(), &cols);
        let expected = mat.kernel_basis().len();
        // span of m·s in the same degree, written in the same unknowns
        let mut span_rows = Vec::new();
        for s in syz.generators() {
            let sd = s.comps().iter().filter_map(|p| p.degree()).max().unwrap();
            if sd > d - 2 {
                continue;
            }
            for m in monomials_up_to(3, d - 2 - sd)
                .into_iter()
                .filter(|m| m.degree() == d - 2 - sd)
            {
                let mut row = Vec::new();
                for i in 0..gens.len() {
                    let p = s.get(i).mul_term(&m, &k.one());
                    row.extend(hm.iter().map(|t| p.coefficient(t)));
                }
                span_rows.push(row);
            }
        }
        let got = if span_rows.is_empty() {
            0
        } else {
            KMatrix::from_rows(&k, span_rows).rank()
        };
        assert_eq!(got, expected, "degree {d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn determinism_under_reruns(seed in 0u64..1000) {
        let r = PolyRing::xyz(PrimeField::new(3).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<_> = (0..3).map(|_| random_vector(&r, &mut rng, 2)).collect();
        let a = basis_of(2, &gens, false, cfg()).unwrap().elements();
        let b = basis_of(2, &gens, false, cfg()).unwrap().elements();
        prop_assert_eq!(a, b);
    }
}
