mod common;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use common::*;
use fsclass::indicator::{bilinear_form, canonical_g, Analysis, IndicatorReport};
use fsclass::matrix::SeededRng;
use fsclass::rep::{dual_representation, intertwiners};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Cached = (Case, Analysis, IndicatorReport);

fn analyzed(name: &'static str) -> &'static Cached {
    static CACHE: OnceLock<Mutex<HashMap<&'static str, &'static Cached>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(name) {
        return hit;
    }
    let c = case(name);
    let an = Analysis::new(&c.algebra, &c.antipode, 0, &tol()).unwrap();
    let rep = an.report(&tol()).unwrap();
    let leaked: &'static Cached = Box::leak(Box::new((c, an, rep)));
    cache.lock().unwrap().insert(name, leaked);
    leaked
}

#[test]
fn nonzero_indicator_iff_self_dual() {
    let t = tol();
    for name in MASTER {
        let (_, an, rep) = analyzed(name);
        for (comp, irr) in an.components.iter().zip(&rep.irreps) {
            let rounded = irr.nu_formula.round();
            assert!([-1.0, 0.0, 1.0].contains(&rounded), "{name}");
            assert!((irr.nu_formula - irr.nu_trace).abs() < 1e-6, "{name}: methods disagree");
            let dv = dual_representation(&comp.irrep, &an.dual, &t).unwrap();
            let self_dual = !intertwiners(&comp.irrep, &dv, &t).is_empty();
            assert_eq!(rounded != 0.0, self_dual, "{name} #{}", irr.index);
            if comp.irrep.dim() % 2 == 1 {
                assert!(irr.sigma >= 0, "{name}: odd-dimensional quaternionic irreducible");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonical_g_ignores_irreducible_order(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let (c, an, _) = analyzed(name);
        let mut irreps = an.irreps();
        irreps.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let again = canonical_g(&c.algebra, &c.antipode, &irreps, &tol()).unwrap();
        prop_assert!((&again.g - &an.canonical.g).norm() < 1e-8);
    }

    /// `beta(v, w) = <j(v)|w>` with `j` induced by `V ~ D(V)` obeys
    /// `beta(w, g v) = nu beta(v, w)`.
    #[test]
    fn bilinear_form_law(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let t = tol();
        let (_, an, rep) = analyzed(name);
        let mut rng = SeededRng::new(seed);
        for (comp, irr) in an.components.iter().zip(&rep.irreps) {
            if irr.sigma == 0 {
                continue;
            }
            let v = &comp.irrep;
            let dv = dual_representation(v, &an.dual, &t).unwrap();
            let f = intertwiners(v, &dv, &t).remove(0);
            let j = f.conjugate();
            let g = v.rho_of(&an.dual.g);
            let (x, y) = (rng.complex_vector(v.dim()), rng.complex_vector(v.dim()));
            let lhs = bilinear_form(&j, &y, &(&g * &x));
            let rhs = bilinear_form(&j, &x, &y) * irr.sigma as f64;
            prop_assert!((lhs - rhs).norm() < 1e-7 * (1.0 + rhs.norm()), "{}: {} vs {}", name, lhs, rhs);
        }
    }
}
