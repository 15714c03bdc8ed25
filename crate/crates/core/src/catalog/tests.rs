use super::*;
use crate::algebra::{PrimeField, Rationals};

fn all_types() -> Vec<SingularityType> {
    let mut out = Vec::new();
    for p in [0u64, 2, 3, 5, 7] {
        for n in 1..=8 {
            out.push(SingularityType::new(Series::A, n, 0, p).unwrap());
        }
        for n in 4..=12 {
            for r in 0..n / 2 {
                out.push(SingularityType::new(Series::D, n, r, p).unwrap());
            }
        }
        for n in 6..=8 {
            for r in 0..=4 {
                if let Ok(t) = SingularityType::new(Series::E, n, r, p) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn check_family<F: Field>(t: &SingularityType, k: &F) {
    let all = catalog_all(t, k).unwrap();
    assert_eq!(all.len(), t.n, "{t}");
    for e in &all {
        let m = &e.factorization;
        assert!(m.verify(), "{t} M_{}", e.index);
        assert!(m.reduced_entries(), "{t} M_{}", e.index);
    }
}

#[test]
fn every_family_is_a_factorization() {
    for t in all_types() {
        match t.characteristic {
            0 => check_family(&t, &Rationals),
            p => check_family(&t, &PrimeField::new(p).unwrap()),
        }
    }
}

#[test]
fn family_sizes() {
    let k = PrimeField::new(2).unwrap();
    let sizes = |s: &str| -> Vec<usize> {
        let t: SingularityType = s.parse().unwrap();
        catalog_all(&t, &k)
            .unwrap()
            .iter()
            .map(|e| e.factorization.size())
            .collect()
    };
    assert_eq!(sizes("A5@2"), vec![2; 5]);
    assert_eq!(sizes("D9^1@2").len(), 9);
    assert_eq!(sizes("D8@2"), vec![2, 4, 4, 4, 4, 4, 2, 2]);
    assert_eq!(sizes("E6@2"), vec![2, 4, 6, 4, 2, 4]);
    assert_eq!(sizes("E8^4@2").len(), 8);
    assert_eq!(*sizes("E8@2").iter().max().unwrap(), 12);
    assert_eq!(*sizes("E7@2").iter().max().unwrap(), 8);
}

#[test]
fn defining_polynomials() {
    let show = |s: &str| -> String {
        let t: SingularityType = s.parse().unwrap();
        match t.characteristic {
            0 => PolyRing::xyz(Rationals).format(&defining_poly(&t, &Rationals).unwrap()),
            p => {
                let k = PrimeField::new(p).unwrap();
                PolyRing::xyz(k).format(&defining_poly(&t, &k).unwrap())
            }
        }
    };
    assert_eq!(show("A3@0"), "z^4+x*y");
    assert_eq!(show("E7^2@2"), "x*y^3+y^3*z+x^3+z^2");
    assert_eq!(show("D8^1@2"), "x*y^4+x*y^3*z+x^2*y+z^2");
    assert_eq!(show("E6^1@3"), "x^3+x*y*z+y^2*z+z^2");
}

#[test]
fn literal_entries() {
    let k = Rationals;
    let t: SingularityType = "A2@0".parse().unwrap();
    let m = catalog_mf(&t, &k, 1).unwrap().factorization;
    let ring = m.ring().clone();
    assert_eq!(
        m.a().to_strings(&ring),
        vec![vec!["z^2", "-y"], vec!["x", "z"]]
    );
    assert_eq!(
        m.b().to_strings(&ring),
        vec![vec!["z", "y"], vec!["-x", "z^2"]]
    );

    let t: SingularityType = "E8@0".parse().unwrap();
    let m = catalog_mf(&t, &k, 7).unwrap().factorization;
    let a = m.a().to_strings(&ring);
    assert_eq!(m.size(), 4);
    let block: Vec<Vec<String>> = a[..2].iter().map(|r| r[2..].to_vec()).collect();
    assert_eq!(block, vec![vec!["-x^2", "-y^4"], vec!["-y", "x"]]);

    let t: SingularityType = "D8@0".parse().unwrap();
    let m = catalog_mf(&t, &k, 2).unwrap().factorization;
    assert_eq!(
        m.a().to_strings(&ring),
        vec![
            vec!["z", "0", "x*y", "y"],
            vec!["0", "z", "-x*y^3", "x"],
            vec!["-x", "y", "z", "0"],
            vec!["-x*y^3", "-x*y", "0", "z"],
        ]
    );
}

fn strings<F: Field>(s: &str, k: &F) -> Vec<Vec<Vec<String>>> {
    let t: SingularityType = s.parse().unwrap();
    catalog_all(&t, k)
        .unwrap()
        .iter()
        .map(|e| e.factorization.a().to_strings(e.factorization.ring()))
        .collect()
}

#[test]
fn epsilon_only_touches_the_diagonal_blocks() {
    let k = PrimeField::new(5).unwrap();
    assert_eq!(strings("D8@0", &Rationals), strings("D8@5", &k));
    assert_eq!(strings("E6@0", &Rationals), strings("E6@5", &k));
    let generic = strings("D8@5", &k);
    let twisted = strings("D8^1@5", &k);
    for (g, t) in generic.iter().zip(&twisted) {
        for (i, (gr, tr)) in g.iter().zip(t).enumerate() {
            for (j, (ge, te)) in gr.iter().zip(tr).enumerate() {
                if ge != te {
                    assert_eq!(i, j, "only diagonal entries change");
                    assert!(te.contains("x*y^3"), "{te}");
                }
            }
        }
    }
    assert_ne!(generic, twisted);
}

#[test]
fn rejected_combinations() {
    for s in [
        "E6^1@5", "E7^2@3", "E8^3@3", "E9@0", "D3@0", "A0@0", "A2^1@0", "D8^4@2",
    ] {
        let err = s.parse::<SingularityType>().unwrap_err();
        assert_eq!(err.name(), "InvalidTypeCombination", "{s}");
    }
    assert_eq!(
        "A2@4".parse::<SingularityType>().unwrap_err().name(),
        "InvalidField"
    );
    assert_eq!(
        "F2@0".parse::<SingularityType>().unwrap_err().name(),
        "ParseError"
    );
    let t: SingularityType = "A2@0".parse().unwrap();
    assert_eq!(
        catalog_mf(&t, &Rationals, 3).unwrap_err().name(),
        "IndexOutOfRange"
    );
    assert_eq!(
        catalog_mf(&t, &PrimeField::new(3).unwrap(), 1)
            .unwrap_err()
            .name(),
        "InvalidTypeCombination"
    );
}

#[test]
fn spec_strings_round_trip() {
    for s in ["A5@0", "D8^2@2", "E7^1@3", "E8^4@2"] {
        assert_eq!(s.parse::<SingularityType>().unwrap().to_string(), s);
    }
}
