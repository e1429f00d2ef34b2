use fsclass::matrix::{inv_sqrt_pd, matrix_function, polar_unitary, sqrt_psd, SeededRng};
use fsclass::{CMatrix, Tolerance};
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

/// Hermitian positive definite with spectrum in [0.5, 3.5].
fn positive(rng: &mut SeededRng, n: usize) -> CMatrix {
    let u = rng.unitary(n);
    let d = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            fsclass::matrix::r(0.5 + 3.0 * (i as f64 + 0.5) / n as f64)
        } else {
            fsclass::matrix::ZERO
        }
    });
    &u * d * u.adjoint()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polar_part_is_unitary_and_matches_inverse_modulus(seed in any::<u64>(), n in 1usize..7) {
        let t = tol();
        let mut rng = SeededRng::new(seed);
        let f = rng.complex_matrix(n, n) + CMatrix::identity(n, n) * fsclass::matrix::r(2.0 * n as f64);
        let u = polar_unitary(&f, &t).unwrap();
        prop_assert!((u.adjoint() * &u - CMatrix::identity(n, n)).norm() < 10.0 * t.eps_rank);
        let modulus = sqrt_psd(&(&f * f.adjoint()), &t).unwrap();
        let alt = fsclass::matrix::inverse(&modulus, &t).unwrap() * &f;
        prop_assert!((u - alt).norm() < 10.0 * t.eps_rank);
    }

    #[test]
    fn identity_function_is_identity_on_psd(seed in any::<u64>(), n in 1usize..8) {
        let h = SeededRng::new(seed).complex_matrix(n, n);
        let a = &h * h.adjoint();
        let b = matrix_function(&a, |x| x, &tol()).unwrap();
        prop_assert!((b - &a).norm() < 1e-12 * (1.0 + a.norm()));
    }

    /// `s a = b s` with `s = [u 0]` forces `s fn(a) = fn(b) s`.
    #[test]
    fn functional_calculus_is_natural(seed in any::<u64>(), n in 1usize..5, m in 0usize..3) {
        let t = tol();
        let mut rng = SeededRng::new(seed);
        let a1 = positive(&mut rng, n);
        let a2 = positive(&mut rng, m.max(1));
        let size = n + m;
        let mut a = CMatrix::zeros(size, size);
        a.view_mut((0, 0), (n, n)).copy_from(&a1);
        if m > 0 {
            a.view_mut((n, n), (m, m)).copy_from(&a2.view((0, 0), (m, m)));
        }
        let u = rng.unitary(n);
        let b = &u * &a1 * u.adjoint();
        let mut s = CMatrix::zeros(n, size);
        s.view_mut((0, 0), (n, n)).copy_from(&u);
        prop_assert!((&s * &a - &b * &s).norm() < 1e-10);
        let pairs = [
            (sqrt_psd(&a, &t).unwrap(), sqrt_psd(&b, &t).unwrap()),
            (matrix_function(&a, |x| x * x, &t).unwrap(), matrix_function(&b, |x| x * x, &t).unwrap()),
            (inv_sqrt_pd(&a, &t).unwrap(), inv_sqrt_pd(&b, &t).unwrap()),
        ];
        for (fa, fb) in pairs {
            prop_assert!((&s * fa - fb * &s).norm() < 1e-8);
        }
    }
}
