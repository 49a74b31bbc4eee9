//! Character-level invariants that need full tables or a wide key grid.

use reflekt_core::chars::{
    chi_theta_class_function, chi_theta_table, gamma_class_function, shift_theta,
    symmetric_count_check,
};
use reflekt_core::group::{Budget, GroupData, GroupKey};

/// Tensoring with the distinguished linear character permutes the ambient
/// irreducibles by the component shift, checked as full value tables.
#[test]
fn gamma_tensor_shifts_every_irreducible() {
    let key = GroupKey::new(6, 2, 3).unwrap();
    let ambient = GroupData::enumerate(key.ambient(), &Budget::default()).unwrap();
    let gamma = gamma_class_function(&ambient, key).unwrap();
    for (theta, chi) in chi_theta_table(&ambient).unwrap() {
        let shifted = shift_theta(&theta, key);
        let expected = chi_theta_class_function(&ambient, &shifted).unwrap();
        assert_eq!(
            gamma.tensor(&chi).unwrap(),
            expected,
            "shift of {theta:?} mismatched"
        );
    }
}

/// Symmetric-element counts never exceed the degree sum, with equality
/// exactly when gcd(p, n) <= 2; strict inequality spot-checked where the
/// gcd first reaches 3 and 4.
#[test]
fn symmetric_count_against_degree_sum_grid() {
    for r in 1..=6u32 {
        for p in 1..=r {
            if r % p != 0 {
                continue;
            }
            for n in 1..=4usize {
                let key = GroupKey::new(r, p, n).unwrap();
                if key.order() > 20_000 {
                    continue;
                }
                let g = GroupData::enumerate(key, &Budget::default()).unwrap();
                let outcome = symmetric_count_check(&g).unwrap();
                assert!(
                    (outcome.symmetric_count as u128) <= outcome.degree_sum,
                    "{key:?}"
                );
                let d = num::integer::gcd(p, n as u32);
                assert_eq!(outcome.equal, d <= 2, "{key:?}");
            }
        }
    }
    for (r, p, n) in [(3u32, 3u32, 3usize), (4, 4, 4)] {
        let g = GroupData::enumerate(GroupKey::new(r, p, n).unwrap(), &Budget::default())
            .unwrap();
        let outcome = symmetric_count_check(&g).unwrap();
        assert!((outcome.symmetric_count as u128) < outcome.degree_sum, "G({r},{p},{n})");
    }
}
