use jacobspin_core::{
    quat_to_spinor, HypSpinor, Hyperbolic, Rational, SpinMatrixC, Spinor, SplitQuat,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

type H = Hyperbolic<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn quat() -> impl Strategy<Value = SplitQuat> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(a, b, c, d)| SplitQuat::new(a, b, c, d))
}

fn hyp() -> impl Strategy<Value = H> {
    (rational(), rational()).prop_map(|(re, hy)| H::new(re, hy))
}

fn spinor() -> impl Strategy<Value = HypSpinor> {
    (hyp(), hyp()).prop_map(|(c1, c2)| Spinor::new(c1, c2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quat_mul_is_associative(p in quat(), q in quat(), r in quat()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn quat_mul_distributes(p in quat(), q in quat(), r in quat()) {
        prop_assert_eq!(&p * &(q.clone() + r.clone()), &p * &q + &p * &r);
    }

    #[test]
    fn conj_reverses_products(p in quat(), q in quat()) {
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
    }

    #[test]
    fn conj_is_an_involution(p in quat()) {
        prop_assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn norm_is_multiplicative(p in quat(), q in quat()) {
        prop_assert_eq!((&p * &q).norm(), p.norm() * q.norm());
    }

    #[test]
    fn quat_times_conj_is_norm(p in quat()) {
        let n = p.norm();
        prop_assert_eq!(&p * &p.conj(), SplitQuat::new(n, Rational::zero(), Rational::zero(), Rational::zero()));
    }

    #[test]
    fn idempotent_split_respects_products(x in hyp(), y in hyp()) {
        let (xp, xm) = x.split();
        let (yp, ym) = y.split();
        prop_assert_eq!((x * y).split(), (xp * yp, xm * ym));
    }

    #[test]
    fn idempotent_split_respects_sums(x in hyp(), y in hyp()) {
        let (xp, xm) = x.split();
        let (yp, ym) = y.split();
        prop_assert_eq!((x + y).split(), (xp + yp, xm + ym));
    }

    #[test]
    fn join_inverts_split(x in hyp()) {
        let (p, m) = x.split();
        prop_assert_eq!(H::join(p, m), x);
    }

    #[test]
    fn hyperbolic_mul_commutes(x in hyp(), y in hyp()) {
        prop_assert_eq!(x.clone() * y.clone(), y * x);
    }

    #[test]
    fn c_applied_twice_negates(s in spinor()) {
        let c = SpinMatrixC;
        prop_assert_eq!(c.apply(&c.apply(&s)), -s);
    }

    #[test]
    fn spinor_map_is_additive(p in quat(), q in quat()) {
        prop_assert_eq!(quat_to_spinor(&(p.clone() + q.clone())), quat_to_spinor(&p) + quat_to_spinor(&q));
    }

    #[test]
    fn spinor_map_is_injective(p in quat(), q in quat()) {
        prop_assert_eq!(quat_to_spinor(&p) == quat_to_spinor(&q), p == q);
    }

    #[test]
    fn spinor_map_commutes_with_scaling(p in quat(), r in rational()) {
        prop_assert_eq!(quat_to_spinor(&p.scale(&r)), quat_to_spinor(&p).scale_rational(&r));
    }

    #[test]
    fn tilde_is_an_involution(s in spinor()) {
        prop_assert_eq!(s.tilde().tilde(), s);
    }

    #[test]
    fn mate_twice_negates(s in spinor()) {
        prop_assert_eq!(s.mate().mate(), -s);
    }
}

#[test]
fn c_squared_is_minus_identity() {
    assert_eq!(SpinMatrixC::squared(), [[-1, 0], [0, -1]]);
}

#[test]
fn spinor_map_on_basis() {
    let basis = [
        SplitQuat::one(),
        SplitQuat::i(),
        SplitQuat::j(),
        SplitQuat::k(),
    ];
    let images: Vec<String> = basis
        .iter()
        .map(|q| quat_to_spinor(q).to_string())
        .collect();
    assert_eq!(images, ["[1; 0]", "[0; -1]", "[0; u]", "[u; 0]"]);
    for (x, p) in basis.iter().enumerate() {
        for (y, q) in basis.iter().enumerate() {
            assert_eq!(x == y, quat_to_spinor(p) == quat_to_spinor(q));
        }
    }
    assert_ne!(quat_to_spinor(&SplitQuat::i()), HypSpinor::zero());
}

#[test]
fn split_quaternions_have_zero_divisors() {
    let p = SplitQuat::from_ints(1, 0, 1, 0);
    let q = SplitQuat::from_ints(1, 0, -1, 0);
    assert!((&p * &q).is_zero());
    assert_eq!(p.norm(), Rational::zero());
}
