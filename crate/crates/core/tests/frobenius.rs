use num_traits::{One, Zero};
use proptest::prelude::*;
use tqft::frobenius::{sew, validate, AlgebraSpec, FrobeniusAlgebra, Tensor, Vector};
use tqft::scalar::{frac, int, Scalar};
use tqft::zoo::{center_of_group_algebra, cyclic, group_algebra, matrix_algebra, preset_group, semisimple};

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

fn id(r: usize) -> Vec<Vec<Scalar>> {
    (0..r).map(|i| (0..r).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
}

#[test]
fn validate_reports_each_axiom() {
    let a = semisimple(2).unwrap();
    let rep = validate(a.structure_constants(), a.counit_vector(), true).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.unit, Some(v(&[1, 1])));

    let m = matrix_algebra(2).unwrap();
    let rep = validate(m.structure_constants(), m.counit_vector(), false).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.commutative, None);
    let rep = validate(m.structure_constants(), m.counit_vector(), true).unwrap();
    assert_eq!(rep.commutative, Some(false));
    assert!(!rep.passed());

    let rep = validate(a.structure_constants(), &v(&[1, 0]), true).unwrap();
    assert!(!rep.nondegenerate);
    assert_eq!(rep.eta, vec![v(&[1, 0]), v(&[0, 0])]);
    assert!(rep.eta_inverse.is_none());
}

#[test]
fn malformed_shapes_are_input_errors() {
    let a = semisimple(2).unwrap();
    assert!(validate(a.structure_constants(), &v(&[1, 1, 1]), true).is_err());
    let spec = AlgebraSpec {
        dim: 2,
        basis: vec!["a".into()],
        mult: vec![],
        counit: vec!["1".into(), "1".into()],
        commutative: true,
    };
    assert!(FrobeniusAlgebra::from_spec(&spec).is_err());
}

#[test]
fn spec_round_trips_through_json() {
    let a = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let json = serde_json::to_string(&a.to_spec()).unwrap();
    let back: AlgebraSpec = serde_json::from_str(&json).unwrap();
    let b = FrobeniusAlgebra::from_spec(&back).unwrap();
    assert_eq!(a.structure_constants(), b.structure_constants());
    assert_eq!(a.counit_vector(), b.counit_vector());
}

#[test]
fn multiplication_examples() {
    let a = semisimple(2).unwrap();
    assert_eq!(a.multiply(&v(&[1, 0]), &v(&[0, 1])).unwrap(), v(&[0, 0]));
    assert_eq!(a.multiply(&v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[1, 0]));
    assert!(a.multiply(&v(&[1, 0]), &v(&[1, 0, 0])).is_err());

    let z2 = group_algebra(&cyclic(2).unwrap()).unwrap();
    assert_eq!(z2.multiply(&v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
}

#[test]
fn pairing_examples() {
    assert_eq!(semisimple(2).unwrap().eta_matrices().0, &id(2));
    let z = center_of_group_algebra(&cyclic(2).unwrap()).unwrap();
    assert_eq!(z.eta_matrices().0, &id(2));
    for a in [semisimple(3).unwrap(), z, matrix_algebra(2).unwrap()] {
        let u: Vector = (0..a.dim()).map(|i| frac(i as i64 + 1, 3)).collect();
        assert_eq!(a.pairing_eta(a.unit(), &u).unwrap(), a.counit(&u));
        assert_eq!(a.lambda(a.unit()), a.counit_vector());
        assert_eq!(a.lambda_inverse(&a.lambda(&u)), u);
    }
}

#[test]
fn comultiplication_examples() {
    let a = semisimple(2).unwrap();
    let d = a.comultiply(&v(&[1, 0])).unwrap();
    assert_eq!(d, Tensor::from_data(2, 2, v(&[1, 0, 0, 0])));

    let z = center_of_group_algebra(&cyclic(2).unwrap()).unwrap();
    let d = z.comultiply(z.unit()).unwrap();
    assert_eq!(d, Tensor::from_data(2, 2, v(&[1, 0, 0, 1])));
    assert_eq!(d, z.copairing());

    // (lambda(u) ⊗ 1) delta(w) = u w
    let s3 = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let (u, w) = (v(&[1, 2, -1]), v(&[0, 3, 1]));
    let d = s3.comultiply(&w).unwrap();
    let lu = s3.lambda(&u);
    let got: Vector = (0..3).map(|b| (0..3).map(|a| &lu[a] * d.get(&[a, b])).sum()).collect();
    assert_eq!(got, s3.multiply(&u, &w).unwrap());
}

#[test]
fn euler_element_examples() {
    for n in 1..=4 {
        let a = semisimple(n).unwrap();
        assert_eq!(&a.euler_element(), a.unit());
        for g in 0..4 {
            assert_eq!(a.surface_invariant(g).unwrap(), int(n as i64));
        }
    }
    let z = center_of_group_algebra(&cyclic(2).unwrap()).unwrap();
    assert_eq!(z.euler_element(), v(&[2, 0]));
    for g in 0..5 {
        assert_eq!(z.surface_invariant(g).unwrap(), int(1 << g));
    }
    let m = matrix_algebra(2).unwrap();
    assert_eq!(m.euler_element(), v(&[2, 0, 0, 2]));
    let z3 = group_algebra(&cyclic(3).unwrap()).unwrap();
    assert_eq!(z3.euler_element(), v(&[3, 0, 0]));

    // e = lambda^{-1}(omega_{1,1})
    let s3 = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let w11: Vector = (0..3).map(|i| s3.omega(1, &[s3.basis_vector(i)]).unwrap()).collect();
    assert_eq!(s3.lambda_inverse(&w11), s3.euler_element());
    assert_eq!(s3.surface_invariant(1).unwrap(), int(3));
}

#[test]
fn omega_examples() {
    let a = semisimple(2).unwrap();
    assert_eq!(a.omega(0, &[v(&[1, 0]), v(&[0, 1]), v(&[1, 0])]).unwrap(), int(0));
    assert_eq!(a.omega(0, &[a.unit().clone()]).unwrap(), a.counit(a.unit()));
    let z = center_of_group_algebra(&cyclic(2).unwrap()).unwrap();
    assert_eq!(z.omega(1, &[z.unit().clone()]).unwrap(), int(2));
    assert!(matrix_algebra(2).unwrap().omega(0, &[v(&[1, 0, 0, 1])]).is_err());
}

#[test]
fn direct_sum_and_tensor_product() {
    let k = semisimple(1).unwrap();
    let s = k.direct_sum(&k).unwrap();
    assert_eq!(s.structure_constants(), semisimple(2).unwrap().structure_constants());
    assert_eq!(s.counit_vector(), semisimple(2).unwrap().counit_vector());

    let t = semisimple(2).unwrap().tensor_product(&semisimple(2).unwrap()).unwrap();
    assert_eq!(t.dim(), 4);
    assert!(validate(t.structure_constants(), t.counit_vector(), true).unwrap().passed());

    let a = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let b = group_algebra(&cyclic(3).unwrap()).unwrap();
    let ab = a.direct_sum(&b).unwrap();
    let mut e = a.euler_element();
    e.extend(b.euler_element());
    assert_eq!(ab.euler_element(), e);

    let m = matrix_algebra(2).unwrap().tensor_product(&semisimple(2).unwrap()).unwrap();
    assert!(!m.is_commutative());
    assert!(m.frobenius_associativity_holds());
}

fn zoo() -> Vec<FrobeniusAlgebra> {
    vec![
        semisimple(1).unwrap(),
        semisimple(3).unwrap(),
        matrix_algebra(2).unwrap(),
        group_algebra(&cyclic(3).unwrap()).unwrap(),
        group_algebra(&preset_group("S3").unwrap()).unwrap(),
        center_of_group_algebra(&preset_group("S3").unwrap()).unwrap(),
        center_of_group_algebra(&preset_group("dihedral(4)").unwrap()).unwrap(),
    ]
}

#[test]
fn frobenius_structure_identities() {
    for a in zoo() {
        assert!(a.frobenius_associativity_holds());
        assert!(a.coassociativity_holds());
        let [l, m, r] = a.compatibility_maps();
        assert_eq!(l, m);
        assert_eq!(m, r);
    }
}

#[test]
fn twisted_kernel_matches_comultiplication() {
    for a in zoo().into_iter().filter(|a| a.is_commutative()) {
        let k = a.twisted_kernel();
        for (i, ki) in k.iter().enumerate() {
            assert_eq!(ki, &a.comultiply(&a.basis_vector(i)).unwrap());
        }
    }
}

#[test]
fn omega_axioms() {
    let a = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let r = a.dim();
    let (eta, eta_inv) = a.eta_matrices();
    let vs = vec![v(&[1, -2, 3]), v(&[0, 1, 1]), v(&[2, 0, -1])];
    for g in 0..3 {
        // inserting the unit
        let mut with_one = vs.clone();
        with_one.push(a.unit().clone());
        assert_eq!(a.omega(g, &with_one).unwrap(), a.omega(g, &vs).unwrap());
        // symmetry
        let rev: Vec<Vector> = vs.iter().rev().cloned().collect();
        assert_eq!(a.omega(g, &rev).unwrap(), a.omega(g, &vs).unwrap());
    }
    // genus reduction
    for g in 1..3 {
        let mut sum = Scalar::zero();
        for p in 0..r {
            for q in 0..r {
                let mut w = vs.clone();
                w.push(a.basis_vector(p));
                w.push(a.basis_vector(q));
                sum += a.omega(g - 1, &w).unwrap() * &eta_inv[p][q];
            }
        }
        assert_eq!(sum, a.omega(g, &vs).unwrap());
    }
    // splitting over every bipartition
    for mask in 0u32..(1 << vs.len()) {
        for g1 in 0..=2usize {
            let g2 = 2 - g1;
            let i: Vec<Vector> = (0..vs.len()).filter(|k| mask & (1 << k) != 0).map(|k| vs[k].clone()).collect();
            let j: Vec<Vector> = (0..vs.len()).filter(|k| mask & (1 << k) == 0).map(|k| vs[k].clone()).collect();
            let mut sum = Scalar::zero();
            for p in 0..r {
                for q in 0..r {
                    let mut left = i.clone();
                    left.push(a.basis_vector(p));
                    let mut right = j.clone();
                    right.push(a.basis_vector(q));
                    sum += a.omega(g1, &left).unwrap() * a.omega(g2, &right).unwrap() * &eta_inv[p][q];
                }
            }
            assert_eq!(sum, a.omega(2, &vs).unwrap());
        }
    }
    assert_eq!(eta[0][0], int(1));
}

#[test]
fn cobordism_special_cases() {
    let a = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
    let (u, w) = (v(&[1, 2, -1]), v(&[0, 3, 1]));
    let m = a.cobordism_tensor(0, 2, 1).unwrap();
    assert_eq!(m.apply(&[u.clone(), w.clone()]).unwrap().into_data(), a.multiply(&u, &w).unwrap());
    let d = a.cobordism_tensor(0, 1, 2).unwrap();
    assert_eq!(d.apply(std::slice::from_ref(&w)).unwrap(), a.comultiply(&w).unwrap());
    let e = a.cobordism_tensor(0, 2, 0).unwrap();
    assert_eq!(e.apply(&[u.clone(), w.clone()]).unwrap().data()[0], a.pairing_eta(&u, &w).unwrap());
    let one = a.cobordism_tensor(0, 0, 1).unwrap();
    assert_eq!(one.apply(&[]).unwrap().data(), &a.unit()[..]);
    assert!(a.cobordism_tensor(1, 0, 0).is_err());
    for g in 0..2 {
        for (m, n) in [(1, 2), (2, 1), (3, 0), (0, 3), (2, 2)] {
            assert!(a.cobordism_tensor(g, m, n).unwrap().is_symmetric());
        }
    }
}

#[test]
fn sewing_examples() {
    let a = semisimple(2).unwrap();
    let counit = a.cobordism_tensor(0, 1, 0).unwrap();
    let mult = a.cobordism_tensor(0, 2, 1).unwrap();
    assert_eq!(sew(&counit, &mult, 1).unwrap(), a.cobordism_tensor(0, 2, 0).unwrap());

    // capping every input of omega_{1,2,1} with units
    let t = a.cobordism_tensor(1, 2, 1).unwrap();
    let caps = a.cobordism_tensor(0, 0, 2).unwrap();
    assert_eq!(sew(&t, &caps, 2).unwrap(), a.cobordism_tensor(2, 0, 1).unwrap());

    // two pairs of pants along two circles
    let pants = a.cobordism_tensor(0, 2, 2).unwrap();
    assert_eq!(sew(&pants, &pants, 2).unwrap(), a.cobordism_tensor(1, 2, 2).unwrap());

    assert!(sew(&counit, &mult, 0).is_err());
    assert!(sew(&counit, &mult, 2).is_err());
}

#[test]
fn sewing_is_associative() {
    let a = center_of_group_algebra(&cyclic(3).unwrap()).unwrap();
    let p = a.cobordism_tensor(0, 1, 2).unwrap();
    let q = a.cobordism_tensor(0, 2, 1).unwrap();
    let s = a.cobordism_tensor(0, 1, 1).unwrap();
    let left = sew(&sew(&q, &p, 1).unwrap(), &s, 1).unwrap();
    let right = sew(&q, &sew(&p, &s, 1).unwrap(), 1).unwrap();
    assert_eq!(left, right);
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #[test]
    fn omega_is_multilinear(xs in proptest::collection::vec(small_rational(), 9), c in small_rational(), g in 0usize..3) {
        let a = center_of_group_algebra(&preset_group("S3").unwrap()).unwrap();
        let (u, w, x) = (xs[0..3].to_vec(), xs[3..6].to_vec(), xs[6..9].to_vec());
        let uw: Vector = u.iter().zip(&w).map(|(p, q)| p + &c * q).collect();
        let lhs = a.omega(g, &[uw, x.clone()]).unwrap();
        let rhs = a.omega(g, &[u, x.clone()]).unwrap() + &c * a.omega(g, &[w, x]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
