use bianchi_deform::bianchi::*;
use bianchi_deform::exactfield::{ExactString, QuadImag, QuadReal, Scalar};
use bianchi_deform::linalg::{congruence_signature, Matrix};
use proptest::prelude::*;

fn qr(rows: &[&[&str]]) -> Matrix<QuadReal> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| QuadReal::parse_exact(s).unwrap()).collect())
            .collect(),
    )
}

fn t0() -> Matrix<QuadReal> {
    qr(&[
        &["3/2", "-1/2", "1", "0"],
        &["1/2", "1/2", "1", "0"],
        &["1", "-1", "1", "0"],
        &["0", "0", "0", "1"],
    ])
}

fn a0() -> Matrix<QuadReal> {
    qr(&[&["1", "0", "0", "0"], &["0", "-1", "0", "0"], &["0", "0", "-1", "0"], &["0", "0", "0", "1"]])
}

#[test]
fn every_relator_validates_in_sl2_and_after_lift() {
    for d in CATALOG {
        let p = swan_presentation(d).unwrap();
        let r = sl2_generators(d).unwrap();
        for v in validate_presentation(&p, &r).unwrap() {
            assert!(v.pass, "d={d} relator {} fails in PSL(2)", v.relator);
        }
        let h = holonomy(d).unwrap();
        for v in validate_lifted(&p, &h).unwrap() {
            assert!(v.pass, "d={d} relator {} fails after lift", v.relator);
        }
    }
}

#[test]
fn lift_reproduces_published_bi7_generators() {
    let h = holonomy(7).unwrap();
    let b0 = qr(&[
        &["2", "-1", "1/2", "1/2*sqrt7"],
        &["1", "0", "1/2", "1/2*sqrt7"],
        &["1/2", "-1/2", "1", "0"],
        &["1/2*sqrt7", "-1/2*sqrt7", "0", "1"],
    ]);
    assert_eq!(h.images[0], t0());
    assert_eq!(h.images[1], b0);
    assert_eq!(h.images[2], a0());
}

#[test]
fn lift_reproduces_published_bi3_generators() {
    let h = holonomy(3).unwrap();
    assert_eq!(h.image('T').unwrap(), &t0());
    assert_eq!(h.image('A').unwrap(), &a0());
    // The printed U0 and L0 are the lifts of TU and L⁻¹ under the catalog τ.
    let u0 = qr(&[
        &["3/2", "-1/2", "1/2", "1/2*sqrt3"],
        &["1/2", "1/2", "1/2", "1/2*sqrt3"],
        &["1/2", "-1/2", "1", "0"],
        &["1/2*sqrt3", "-1/2*sqrt3", "0", "1"],
    ]);
    let l0 = qr(&[
        &["1", "0", "0", "0"],
        &["0", "1", "0", "0"],
        &["0", "0", "-1/2", "1/2*sqrt3"],
        &["0", "0", "-1/2*sqrt3", "-1/2"],
    ]);
    let t = h.image('T').unwrap();
    let u = h.image('U').unwrap();
    let l = h.image('L').unwrap();
    assert_eq!(&(t * u), &u0);
    assert_eq!(l.inverse().unwrap(), l0);
}

#[test]
fn alignment_is_the_identity() {
    // Solve lift(g)·X = X·g₀ against the published d=7 matrices.
    let h = holonomy(7).unwrap();
    let published = vec![t0(), h.images[1].clone(), a0()];
    let xs = intertwiners(&h.images, &published);
    assert_eq!(xs.len(), 1);
    let x = &xs[0];
    assert_eq!(*x, Matrix::identity(4).scale(&x[(0, 0)]));
}

#[test]
fn psl_sign_and_corruption() {
    let p1 = swan_presentation(1).unwrap();
    let r1 = sl2_generators(1).unwrap();
    let v = validate_presentation(&p1, &r1).unwrap();
    let ll = v.iter().find(|v| v.relator == "LL=1").unwrap();
    assert_eq!((ll.pass, ll.sign), (true, Some(-1)));

    let names = ['T', 'U', 'A'];
    let bad = Presentation::from_compact(Some(7), &names, &[("TATA", "1")]).unwrap();
    let v = validate_presentation(&bad, &sl2_generators(7).unwrap()).unwrap();
    assert!(!v[0].pass);
    let good = Presentation::from_compact(Some(7), &names, &[("TATATA", "1")]).unwrap();
    assert!(validate_presentation(&good, &sl2_generators(7).unwrap()).unwrap()[0].pass);
}

#[test]
fn printed_bi5_variants_fail() {
    // The printed relator (ATUBU⁻¹)² does not hold with the catalog matrices.
    let names = ['T', 'U', 'A', 'B', 'C'];
    let printed = Presentation::from_compact(Some(5), &names, &[("ATUBuATUBu", "1")]).unwrap();
    let v = validate_presentation(&printed, &sl2_generators(5).unwrap()).unwrap();
    assert!(!v[0].pass);
    // The printed C = [[−τ−4, 2τ], [2τ, τ−4]] is not in SL(2).
    let tau = QuadImag::i_sqrt_d(5).unwrap();
    let four = QuadImag::from_int(4);
    let two = QuadImag::from_int(2);
    let c = Matrix::from_vec(
        2,
        2,
        vec![-tau.clone() - four.clone(), two.clone() * tau.clone(), two * tau.clone(), tau - four],
    );
    assert_eq!(c.det(), QuadImag::from_int(41));
    assert!(spin_lift(&c).is_err());
}

#[test]
fn invariant_quadratic_form_of_bi3_holonomy() {
    let h = holonomy(3).unwrap();
    let forms = invariant_form(&h, FormKind::Symmetric, FormSide::Column);
    assert_eq!(forms.len(), 1);
    let j = &forms[0];
    let k = j[(0, 0)].clone();
    let expect = Matrix::diagonal(&[
        QuadReal::one(),
        -QuadReal::one(),
        -QuadReal::one(),
        -QuadReal::one(),
    ])
    .scale(&k);
    assert_eq!(*j, expect);
    let s = congruence_signature(j).unwrap();
    assert_eq!(s.up_to_sign(), (3, 1));
}

#[test]
fn lifted_generators_preserve_the_form() {
    let j = Matrix::diagonal(&[
        QuadReal::one(),
        -QuadReal::one(),
        -QuadReal::one(),
        -QuadReal::one(),
    ]);
    for d in CATALOG {
        for g in holonomy(d).unwrap().images {
            assert_eq!(&(&g.transpose() * &j) * &g, j, "d={d}");
            assert!(g.det().is_one());
        }
    }
}

#[test]
fn catalog_export() {
    let e = catalog_entry(7).unwrap();
    assert_eq!(e.generators.len(), 3);
    assert_eq!(e.generators[1].so31[0][3], "1/2*sqrt7");
    assert_eq!(e.tau, "1/2+1/2*isqrt7");
    assert!(e.relators.iter().all(|r| r.lifted_identity));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn spin_lift_is_a_homomorphism(
        d_idx in 0usize..9,
        letters in proptest::collection::vec((0usize..5, prop::bool::ANY), 1..6),
    ) {
        let d = CATALOG[d_idx];
        let sl2 = sl2_generators(d).unwrap();
        let m = sl2.num_generators();
        let word = Word { letters: letters.into_iter().map(|(g, s)| (g % m, if s { 1 } else { -1 })).collect() };
        let inv2 = sl2.inverses().unwrap();
        let lifted = holonomy(d).unwrap();
        let inv4 = lifted.inverses().unwrap();
        let direct = spin_lift(&word.evaluate(&sl2.images, &inv2)).unwrap();
        let composed = word.evaluate(&lifted.images, &inv4);
        prop_assert_eq!(direct, composed);
    }
}
