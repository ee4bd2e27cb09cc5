use jacobspin_core::sequences::{spinor_term, split_quat_seq};
use jacobspin_core::{
    isotropic_vector, spinor_star, spinor_to_quat, Hyperbolic, Rational, SeqKind, SplitQuat,
};

fn h(re: i64, hy: i64) -> Hyperbolic<Rational> {
    Hyperbolic::new(re.into(), hy.into())
}

#[test]
fn hyperbolic_examples() {
    assert_eq!((h(1, 8) * h(1, -1)).to_string(), "-7+7u");
    assert_eq!((h(1, 1) * h(1, -1)).to_string(), "0");
    assert_eq!((h(0, 1) * h(0, 1)).to_string(), "1");
    assert_eq!(h(1, 8).split(), (Rational::from(9), Rational::from(-7)));
    assert_eq!(h(-1, 1).conj(), h(-1, -1));
}

#[test]
fn spinor_operators_on_seed() {
    let s0 = spinor_term(SeqKind::Hsj, 0);
    assert_eq!(s0.bar().to_string(), "[-3u; -1-u]");
    assert_eq!(s0.tilde().to_string(), "[-1-u; 3]");
    assert_eq!(s0.mate().to_string(), "[1+u; -3u]");
    assert_eq!(
        spinor_star(&split_quat_seq(SeqKind::Hsj, 0)).to_string(),
        "[-3u; 1-u]"
    );
    assert_eq!(
        spinor_star(&split_quat_seq(SeqKind::Hsj, 1)).to_string(),
        "[1-5u; 1-3u]"
    );
    assert_eq!(
        spinor_star(&SplitQuat::from_ints(5, 0, 0, 0)).to_string(),
        "[5; 0]"
    );
}

#[test]
fn spinor_map_inverts() {
    for kind in SeqKind::ALL {
        for n in 0..20 {
            let q = split_quat_seq(kind, n);
            assert_eq!(spinor_to_quat(&spinor_term(kind, n)), q);
        }
    }
    assert_eq!(
        split_quat_seq(SeqKind::Hsjl, 0),
        SplitQuat::from_ints(2, 1, 5, 7)
    );
    assert_eq!(
        split_quat_seq(SeqKind::Hsj, 2),
        SplitQuat::from_ints(1, 3, 5, 11)
    );
}

#[test]
fn isotropic_vectors() {
    let v = isotropic_vector(&h(1, 0), &h(0, 0));
    assert_eq!(
        (v.a1, v.a2, v.a3, v.form),
        (h(1, 0), h(0, 1), h(0, 0), h(2, 0))
    );
    let v = isotropic_vector(&h(1, 0), &h(1, 0));
    assert_eq!(
        (v.a1, v.a2, v.a3, v.form),
        (h(0, 0), h(0, 2), h(-2, 0), h(0, 0))
    );
    assert_eq!(isotropic_vector(&h(0, 0), &h(0, 0)).form, h(0, 0));
    let (p, q) = (h(2, 3), h(-1, 1));
    let d = p.clone() * p.clone() - q.clone() * q.clone();
    assert_eq!(
        isotropic_vector(&p, &q).form,
        (d.clone() * d).scale_rational(&Rational::from(2))
    );
}
