use std::sync::Arc;

use super::*;
use crate::algebra::{Field, KMatrix, PolyMatrix, PolyRing, PrimeField, Rationals};
use crate::groebner::GbConfig;

fn a_n<F: Field>(field: F, n: usize, i: usize) -> Arc<MatrixFactorization<F>> {
    let ring = PolyRing::xyz(field);
    let f = format!("z^{}+x*y", n + 1);
    let (p, q) = (n + 1 - i, i);
    let a = vec![
        vec![format!("z^{p}"), "-y".into()],
        vec!["x".into(), format!("z^{q}")],
    ];
    let b = vec![
        vec![format!("z^{q}"), "y".into()],
        vec!["-x".into(), format!("z^{p}")],
    ];
    Arc::new(MatrixFactorization::parse(ring, &f, &a, &b).unwrap())
}

fn ctx<F: Field>() -> MfContext<F> {
    MfContext::new(GbConfig::default(), 0)
}

#[test]
fn verify_examples() {
    let m = a_n(PrimeField::new(5).unwrap(), 1, 1);
    assert!(m.verify());
    let mut bad = m.b().clone();
    bad.set(0, 1, -bad.get(0, 1));
    assert!(!mf_verify(m.f(), m.a(), &bad));
    let t = MatrixFactorization::trivial(m.ring().clone(), m.f().clone());
    assert!(t.verify());
    assert_eq!(t.shift().a(), t.b());
}

#[test]
fn a1_endomorphisms() {
    for c in [0u64, 2, 3, 5] {
        if c == 0 {
            let m = a_n(Rationals, 1, 1);
            check_a1(&ctx(), &m);
        } else {
            let m = a_n(PrimeField::new(c).unwrap(), 1, 1);
            check_a1(&ctx(), &m);
        }
    }
}

fn check_a1<F: Field>(cx: &MfContext<F>, m: &Arc<MatrixFactorization<F>>) {
    let h = cx.hom(m, m).unwrap();
    assert_eq!(h.dim(), 1);
    let id = Morphism::identity(m);
    assert!(cx.is_null_homotopic(&id).unwrap().is_none());
    let fid = id.scale_poly(m.f());
    let w = cx
        .is_null_homotopic(&fid)
        .unwrap()
        .expect("f·id is null-homotopic");
    assert!(fid.is_witnessed_by(&w));
    assert!(h
        .coordinates(&fid)
        .unwrap()
        .iter()
        .all(|c| m.field().is_zero(c)));
    assert_eq!(cx.radical_space(m, m).unwrap().dim(), 0);
    assert!(cx.iso_test(m, m, true).unwrap());
    let tri = cx.ar_triangle(m).unwrap();
    assert!(tri.degenerate);
    let mid = Arc::new(tri.middle.reduce_constant_pivots());
    assert_eq!(cx.hom_dim(&mid, &mid).unwrap(), 0);
}

#[test]
fn a2_isomorphism_and_radical() {
    let k = PrimeField::new(5).unwrap();
    let cx = ctx();
    let m1 = a_n(k, 2, 1);
    let m2 = a_n(k, 2, 2);
    assert!(!cx.iso_test(&m1, &m2, false).unwrap());
    assert!(!cx.iso_test(&m1, &m2, true).unwrap());
    let s1 = Arc::new(m1.shift());
    assert!(cx.iso_test(&s1, &m2, false).unwrap());
    assert!(cx.iso_test(&s1, &m2, true).unwrap());

    let p = PolyMatrix::from_kmatrix(&KMatrix::from_i64_rows(&k, &[&[1, 0], &[0, -1]]), 3);
    let conj = Morphism::new(s1.clone(), m2.clone(), p.clone(), p).unwrap();
    assert!(is_isomorphism(&conj).unwrap());

    let dims = cx.rad_power_dims(&[m1.clone(), m2.clone()]).unwrap();
    let irr: Vec<Vec<usize>> = dims
        .iter()
        .map(|r| r.iter().map(|d| d.irreducible()).collect())
        .collect();
    assert_eq!(irr, vec![vec![0, 1], vec![1, 0]]);

    let sum = Arc::new(m1.direct_sum(&m1).unwrap());
    assert_eq!(cx.multiplicity(&m1, &sum).unwrap(), 2);
    assert_eq!(cx.multiplicity(&m1, &m2).unwrap(), 0);
    let both = Arc::new(m1.direct_sum(&m2).unwrap());
    assert_eq!(
        cx.decompose(&both, &[m1.clone(), m2.clone()]).unwrap(),
        vec![1, 1]
    );
    let rest = Arc::new(
        cx.split_summand(&m1, &both)
            .unwrap()
            .reduce_constant_pivots(),
    );
    assert_eq!(
        cx.decompose(&rest, &[m1.clone(), m2.clone()]).unwrap(),
        vec![0, 1]
    );

    let tri = cx.ar_triangle(&m1).unwrap();
    let mid = Arc::new(tri.middle);
    assert_eq!(
        cx.decompose(&mid, &[m1.clone(), m2.clone()]).unwrap(),
        vec![0, 1]
    );
    assert_eq!(cx.is_indecomposable(&m1).unwrap(), Some(true));
    assert_eq!(cx.is_indecomposable(&sum).unwrap(), Some(false));
}

#[test]
fn reduce_and_coker() {
    let k = PrimeField::new(5).unwrap();
    let m = a_n(k, 3, 1);
    let t = MatrixFactorization::trivial(m.ring().clone(), m.f().clone());
    let padded = m.direct_sum(&t).unwrap().direct_sum(&t.shift()).unwrap();
    assert_eq!(padded.reduce_constant_pivots(), *m);
    let cone_id = Morphism::identity(&m).cone();
    assert_eq!(cone_id.reduce_constant_pivots().size(), 0);
    let cp = m.coker_presentation(None).unwrap();
    assert_eq!(cp.variant, CokerVariant::LowerRight);
    let ring = m.ring();
    let gens: Vec<String> = cp.generators.iter().map(|g| ring.format(&g[0])).collect();
    assert_eq!(gens, vec!["z", "y"]);
    assert_eq!(m.mcm_rank(), 1);
    assert_eq!(m.direct_sum(&m).unwrap().mcm_rank(), 2);
}
