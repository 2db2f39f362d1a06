use proptest::prelude::*;
use quadriline_core::census::verify_against_paths;
use quadriline_core::{FiniteField, NormalizedConfig, F11, F13, F5, F7};

fn check<F: FiniteField>(v: [i64; 5]) -> Result<(), TestCaseError> {
    let Ok(cfg) = NormalizedConfig::<F>::from_ints(v[0], v[1], v[2], v[3], v[4]) else {
        return Ok(());
    };
    let report = verify_against_paths(&cfg);
    prop_assert!(report.all_ok(), "{:?}: {:?}", cfg, report);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn f5(v in prop::array::uniform5(0i64..5)) { check::<F5>(v)?; }

    #[test]
    fn f7(v in prop::array::uniform5(0i64..7)) { check::<F7>(v)?; }

    #[test]
    fn f11(v in prop::array::uniform5(0i64..11)) { check::<F11>(v)?; }

    #[test]
    fn f13(v in prop::array::uniform5(0i64..13)) { check::<F13>(v)?; }
}

#[test]
fn exhaustive_f5() {
    // Every normalized configuration over F_5.
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    for k in 0..5 {
                        if let Ok(cfg) = NormalizedConfig::<F5>::from_ints(a, b, c, d, k) {
                            let r = verify_against_paths(&cfg);
                            assert!(r.all_ok(), "{cfg:?}: {r:?}");
                        }
                    }
                }
            }
        }
    }
}
