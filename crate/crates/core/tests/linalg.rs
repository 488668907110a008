use bianchi_deform::continuation::Real;
use bianchi_deform::exactfield::{rat, QuadImag, Rational, Scalar};
use bianchi_deform::linalg::*;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Determinant by Laplace expansion along the first row.
fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return rat(1, 1);
    }
    let mut acc = rat(0, 1);
    for j in 0..m.len() {
        if m[0][j] == rat(0, 1) {
            continue;
        }
        let minor: Vec<Vec<Rational>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * laplace_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest k with a nonzero k×k minor.
fn minor_rank(m: &Matrix<Rational>) -> usize {
    let rows = m.to_rows();
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<Rational>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                if laplace_det(&sub) != rat(0, 1) {
                    return k;
                }
            }
        }
    }
    0
}

fn rat_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

/// Products `A·B` with inner dimension `k`, so every rank up to `k` occurs.
fn low_rank_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=6, 1usize..=6, 1usize..=4).prop_flat_map(|(r, c, k)| {
        (rat_matrix(r, k), rat_matrix(k, c)).prop_map(|(a, b)| &a * &b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_minor_oracle_and_kernel_is_exact(m in low_rank_matrix()) {
        let (r, kernel) = rank_and_kernel(&m);
        prop_assert_eq!(r, minor_rank(&m));
        prop_assert_eq!(r + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        let kmat = Matrix::from_columns(&kernel);
        if !kernel.is_empty() {
            prop_assert_eq!(rank(&kmat), kernel.len());
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        diag in proptest::collection::vec(-2i64..=2, 4),
        g in rat_matrix(4, 4),
    ) {
        prop_assume!(!g.det().is_zero());
        let h = Matrix::diagonal(&diag.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>());
        let congruent = &(&g.transpose() * &h) * &g;
        let expect = Inertia {
            positives: diag.iter().filter(|&&x| x > 0).count(),
            negatives: diag.iter().filter(|&&x| x < 0).count(),
            zeros: diag.iter().filter(|&&x| x == 0).count(),
        };
        prop_assert_eq!(congruence_signature(&congruent).unwrap(), expect);
    }

    #[test]
    fn hermitian_signature_is_a_congruence_invariant(
        entries in proptest::collection::vec((-2i64..=2, -2i64..=2), 9),
    ) {
        let g = Matrix::from_vec(3, 3, entries.iter().map(|&(a, b)| QuadImag::new(1, rat(a, 1), rat(b, 1)).unwrap()).collect());
        prop_assume!(!g.det().is_zero());
        let h = Matrix::diagonal(&[QuadImag::from_int(1), QuadImag::from_int(1), QuadImag::from_int(-1)]);
        let congruent = &(&g.conj_transpose() * &h) * &g;
        prop_assert_eq!(congruence_signature(&congruent).unwrap(), Inertia { positives: 2, negatives: 1, zeros: 0 });
    }

    #[test]
    fn lll_is_a_unimodular_change_of_basis(
        rows in proptest::collection::vec(proptest::collection::vec(-50i64..=50, 4), 3),
    ) {
        let b = LatticeBasis { vectors: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect() };
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect());
        prop_assume!(rank(&m) == 3);
        let red = lll_reduce(&b, &rat(3, 4)).unwrap();
        prop_assert!(is_lll_reduced(&red, &rat(3, 4)));
        let out = Matrix::from_rows(red.vectors.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect());
        // each basis is an integer combination of the other
        for (from, to) in [(&m, &out), (&out, &m)] {
            let sys = from.transpose();
            for v in to.to_rows() {
                let coeffs = solve(&sys, &v).expect("in the span");
                prop_assert!(coeffs.iter().all(|c| c.is_integer()));
            }
        }
    }

    #[test]
    fn planted_quadratic_irrationals_are_recovered(a in 1i64..=9, b in -9i64..=9, c in -9i64..=-1) {
        // a·x² + b·x + c has a positive real root; skip rational roots
        let disc = b * b - 4 * a * c;
        let s = (disc as f64).sqrt().round() as i64;
        prop_assume!(s * s != disc);
        let g = num_integer::Integer::gcd(&num_integer::Integer::gcd(&a, &b), &c);
        let bits = 256;
        let root = (Real::from_rational_prec(&rat(disc, 1), bits).sqrt() - Real::from_rational_prec(&rat(b, 1), bits))
            * Real::from_rational_prec(&rat(1, 2 * a), bits);
        let text = root.to_decimal(45);
        match algebraic_reconstruct(&text, 2, &BigInt::from(1000)).unwrap() {
            ReconstructResult::Found(guess) => {
                let expect: Vec<BigInt> = [c / g, b / g, a / g].iter().map(|&x| BigInt::from(x)).collect();
                prop_assert_eq!(guess.minimal_polynomial, expect);
                prop_assert!(guess.irreducible);
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

/// Solve `a·x = v` exactly via the kernel of `[a | −v]`.
fn solve(a: &Matrix<Rational>, v: &[Rational]) -> Option<Vec<Rational>> {
    let col: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
    let aug = a.hstack(&Matrix::from_columns(&[col]));
    let (_, kernel) = rank_and_kernel(&aug);
    let n = a.cols();
    let k = kernel.iter().find(|k| !k[n].is_zero())?;
    let scale = k[n].inv()?;
    Some(k[..n].iter().map(|x| x * &scale).collect())
}

#[test]
fn rank_examples() {
    assert_eq!(rank_and_kernel(&Matrix::<Rational>::identity(4)), (4, vec![]));
    assert_eq!(rank(&Matrix::<Rational>::zeros(0, 0)), 0);
    let a = Matrix::from_rows(vec![
        vec![rat(1, 1), rat(0, 1), rat(2, 1)],
        vec![rat(0, 1), rat(1, 1), rat(-1, 1)],
        vec![rat(3, 1), rat(1, 2), rat(0, 1)],
        vec![rat(1, 1), rat(1, 1), rat(1, 1)],
        vec![rat(-2, 1), rat(0, 1), rat(5, 1)],
    ]);
    let b = Matrix::from_rows(vec![
        vec![rat(1, 1), rat(0, 1), rat(2, 1), rat(1, 1), rat(0, 1), rat(3, 1), rat(-1, 1)],
        vec![rat(0, 1), rat(1, 1), rat(1, 3), rat(0, 1), rat(2, 1), rat(1, 1), rat(1, 1)],
        vec![rat(1, 1), rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(0, 1), rat(2, 1)],
    ]);
    let m = &a * &b;
    assert_eq!(rank(&m), 3);
    assert_eq!(minor_rank(&m), 3);
}

#[test]
fn signature_examples() {
    let d = Matrix::diagonal(&[rat(1, 1), rat(-1, 1), rat(-1, 1), rat(1, 1)]);
    assert_eq!(congruence_signature(&d).unwrap(), Inertia { positives: 2, negatives: 2, zeros: 0 });
    let not_hermitian = Matrix::from_rows(vec![
        vec![QuadImag::i(), QuadImag::zero()],
        vec![QuadImag::zero(), QuadImag::one()],
    ]);
    assert_eq!(congruence_signature(&not_hermitian), Err(SignatureError::NotHermitian(0, 0)));
}

#[test]
fn lll_examples() {
    let b = LatticeBasis { vectors: vec![vec![1.into(), 0.into(), 12345.into()], vec![0.into(), 1.into(), 20000.into()]] };
    let red = lll_reduce(&b, &rat(3, 4)).unwrap();
    let norm = |v: &[BigInt]| v.iter().map(|x| x * x).sum::<BigInt>();
    let before: BigInt = b.vectors.iter().map(|v| norm(v)).max().unwrap();
    let after: BigInt = red.vectors.iter().map(|v| norm(v)).max().unwrap();
    assert!(after < before);
    // change of basis: the first two coordinates carry the coefficients
    let det = &red.vectors[0][0] * &red.vectors[1][1] - &red.vectors[0][1] * &red.vectors[1][0];
    assert!(det == BigInt::from(1) || det == BigInt::from(-1));

    // 4x² − 3 at x = √3/2
    let n = BigInt::from(10).pow(15);
    let x = BigInt::from(866_025_403_784_439i64);
    let b = LatticeBasis {
        vectors: vec![
            vec![1.into(), 0.into(), 0.into(), n.clone()],
            vec![0.into(), 1.into(), 0.into(), x.clone()],
            vec![0.into(), 0.into(), 1.into(), &x * &x / &n],
        ],
    };
    let red = lll_reduce(&b, &rat(3, 4)).unwrap();
    let v = &red.vectors[0];
    let pattern: Vec<BigInt> = v[..3].to_vec();
    assert!(pattern == vec![BigInt::from(-3), 0.into(), 4.into()] || pattern == vec![BigInt::from(3), 0.into(), BigInt::from(-4)]);
}

#[test]
fn reconstruction_examples() {
    let h = BigInt::from(1000);
    let found = |s: &str, deg| match algebraic_reconstruct(s, deg, &h).unwrap() {
        ReconstructResult::Found(g) => g.minimal_polynomial.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        other => panic!("{other:?}"),
    };
    assert_eq!(found("0.5", 1), ["-1", "2"]);
    assert_eq!(found("0.86602540378443864676", 2), ["-3", "0", "4"]);
    assert!(matches!(
        algebraic_reconstruct("0.70710678", 4, &h).unwrap(),
        ReconstructResult::InsufficientPrecision { .. }
    ));
}
