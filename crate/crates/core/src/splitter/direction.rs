//! Common ascent directions for two affine functions of two coordinates.
//!
//! Given gradients `a` and `b` on a pair of coordinates, we want `v ≠ 0` with
//! `a·v ≥ 0` and `b·v ≥ 0`. Two closed half-planes through the origin always
//! share a ray, so such a `v` exists.

use num_traits::{Signed, Zero};

use crate::fractional::{int, Rational};

pub type Pair = (Rational, Rational);

/// Probe order for the signed axis and diagonal directions.
const PROBES: [(i64, i64); 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

fn dot(a: &Pair, v: &Pair) -> Rational {
    &a.0 * &v.0 + &a.1 * &v.1
}

fn admissible(a: &Pair, b: &Pair, v: &Pair) -> bool {
    !(v.0.is_zero() && v.1.is_zero()) && !dot(a, v).is_negative() && !dot(b, v).is_negative()
}

/// Every admissible direction we know how to produce, in preference order:
/// the eight probes, then the two orientations of the line `a·v = 0`, then
/// the two orientations of `b·v = 0`.
pub fn pair_direction_candidates(a: &Pair, b: &Pair) -> Vec<Pair> {
    let mut out: Vec<Pair> = PROBES
        .iter()
        .map(|&(x, y)| (int(x), int(y)))
        .filter(|v| admissible(a, b, v))
        .collect();
    for grad in [a, b] {
        let w = (grad.1.clone(), -grad.0.clone());
        let neg = (-w.0.clone(), -w.1.clone());
        for v in [w, neg] {
            if admissible(a, b, &v) && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// The first admissible direction in the documented order.
pub fn find_pair_direction(a: &Pair, b: &Pair) -> Pair {
    pair_direction_candidates(a, b)
        .into_iter()
        .next()
        .expect("two half-planes through the origin always share a ray")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::rat;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Pair {
        (int(x), int(y))
    }

    #[test]
    fn common_ascent_axis() {
        assert_eq!(find_pair_direction(&p(1, 0), &p(1, 0)), p(1, 0));
    }

    #[test]
    fn opposed_gradients_use_the_diagonal() {
        let v = find_pair_direction(&p(1, -1), &p(-1, 1));
        assert_eq!(v, p(1, 1));
        assert_eq!(dot(&p(1, -1), &v), int(0));
        assert_eq!(dot(&p(-1, 1), &v), int(0));
    }

    #[test]
    fn flat_first_gradient() {
        let a = p(0, 0);
        let b = p(2, -3);
        let v = find_pair_direction(&a, &b);
        assert_eq!(dot(&a, &v), int(0));
        assert!(dot(&b, &v) >= int(0));
        // the b-line orientation (3, 2) is also offered
        assert!(pair_direction_candidates(&a, &b).contains(&p(3, 2)));
    }

    #[test]
    fn falls_back_to_the_level_line() {
        // none of the probes work here
        let a = (int(1), int(10));
        let b = (int(-1), rat(-6, 5));
        let v = find_pair_direction(&a, &b);
        assert_eq!(v, p(-10, 1));
        assert_eq!(dot(&a, &v), int(0));
        assert!(dot(&b, &v) > int(0));
    }

    proptest! {
        #[test]
        fn always_finds_an_admissible_direction(
            a0 in -20i64..20, a1 in -20i64..20, b0 in -20i64..20, b1 in -20i64..20,
            da in 1i64..7, db in 1i64..7,
        ) {
            let a = (rat(a0, da), rat(a1, da + 1));
            let b = (rat(b0, db), rat(b1, db + 2));
            let v = find_pair_direction(&a, &b);
            prop_assert!(admissible(&a, &b, &v));
            for c in pair_direction_candidates(&a, &b) {
                prop_assert!(admissible(&a, &b, &c));
            }
        }
    }
}
