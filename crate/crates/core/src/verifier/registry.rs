use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Context, Form, IdentityDescriptor, ParamSpace, Value};
use crate::rational::Rational;
use crate::sequences::{
    base_number, spinor_poly_term, spinor_term, BinetConstants, PolyBinet, SeqKind,
};
use crate::series::{gen_function_numerator, poly_gen_numerator};
use crate::spinor::{HypSpinor, Spinor};

use SeqKind::{Hsj, Hsjl};

fn hs(a1: i64, b1: i64, a2: i64, b2: i64) -> HypSpinor {
    Spinor::from_parts(a1.into(), b1.into(), a2.into(), b2.into())
}

fn int(v: i64) -> Rational {
    Rational::from(v)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn pow2(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

fn sign(k: i64) -> Rational {
    int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn term(kind: SeqKind, n: usize) -> HypSpinor {
    spinor_term(kind, n)
}

fn spin(lhs: HypSpinor, rhs: HypSpinor) -> (Value, Value) {
    (Value::Spinor(lhs), Value::Spinor(rhs))
}

fn derived(kind: SeqKind) -> BinetConstants {
    BinetConstants::derive(kind)
}

/// The registry in its stable order.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "hsj-recurrence",
            group: "spinor recurrences",
            citation: "hyperbolic Jacobsthal spinor sequence: linear recurrence",
            statement: "HSJ_{n+2} = HSJ_{n+1} + 2 HSJ_n",
            params: ParamSpace::N { min: 0 },
            eval: |_, p, _| recurrence(Hsj, p.n),
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-recurrence",
            group: "spinor recurrences",
            citation: "hyperbolic Jacobsthal-Lucas spinor sequence: linear recurrence",
            statement: "HSJL_{n+2} = HSJL_{n+1} + 2 HSJL_n",
            params: ParamSpace::N { min: 0 },
            eval: |_, p, _| recurrence(Hsjl, p.n),
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-binet",
            group: "HSJ Binet formula",
            citation: "Binet formula for the hyperbolic Jacobsthal spinor sequence",
            statement: "HSJ_n = (1/3)(2^n [1+8u; 4u] - (-1)^n [1-u; 1+u])",
            params: ParamSpace::N { min: 0 },
            eval: |ctx, p, form| binet(ctx, Hsj, p.n, form),
            corrected: Some(|| {
                let c = derived(Hsj);
                format!("HSJ_n = (1/3)(2^n {} - (-1)^n {})", c.a, c.b)
            }),
        },
        IdentityDescriptor {
            id: "hsj-genfunc",
            group: "HSJ generating function",
            citation: "generating function for the hyperbolic Jacobsthal spinors",
            statement: "G(x) = (x [3u; -1+2u] - [1+8u; -2+4u]) / (1 - x - 2x^2)",
            params: ParamSpace::Coefficient,
            eval: |ctx, p, form| spin(ctx.by_recurrence(Hsj, p.n), ctx.gen_coeff(Hsj, form, p.n)),
            corrected: Some(|| genfunc_statement(Hsj)),
        },
        IdentityDescriptor {
            id: "hsj-sum",
            group: "HSJ partial sums",
            citation: "sum of consecutive hyperbolic Jacobsthal spinors from index n",
            statement: "sum_{s=0}^{t} HSJ_{n+s} = (1/2)(HSJ_{n+t+2} - HSJ_{n+1})",
            params: ParamSpace::NT,
            eval: |_, p, _| window_sum(Hsj, p.n, p.t()),
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-sum-from-one",
            group: "HSJ partial sums",
            citation: "sum of the first n hyperbolic Jacobsthal spinors from index 1",
            statement: "sum_{s=1}^{n} HSJ_s = (1/2)(HSJ_{n+2} - HSJ_2)",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let lhs = (1..=p.n).fold(HypSpinor::zero(), |acc, s| acc + term(Hsj, s));
                let rhs = (term(Hsj, p.n + 2) - term(Hsj, 2)).scale_rational(&frac(1, 2));
                spin(lhs, rhs)
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-shift-sum",
            group: "HSJ symmetric shifts",
            citation: "sum of hyperbolic Jacobsthal spinors at n+r and n-r",
            statement: "HSJ_{n+r} + HSJ_{n-r} = (1/3)((2^{n-r} + 2^{n+r}) [8+u; 2+4u] - 2(-1)^{n-1} [1-u; 1+u])",
            params: ParamSpace::NR,
            eval: |_, p, form| {
                let (n, r) = (p.n, p.r());
                let lhs = term(Hsj, n + r) + term(Hsj, n - r);
                let (a, b, exp) = match form {
                    Form::Printed => (hs(8, 1, 2, 4), hs(1, -1, 1, 1), n as i64 - 1),
                    Form::Corrected => {
                        let c = derived(Hsj);
                        (c.a, c.b, (n - r) as i64)
                    }
                };
                let weight = pow2(n - r) + pow2(n + r);
                let rhs = (a.scale_rational(&weight) - b.scale_rational(&(int(2) * sign(exp))))
                    .scale_rational(&frac(1, 3));
                spin(lhs, rhs)
            },
            corrected: Some(|| {
                let c = derived(Hsj);
                format!(
                    "HSJ_{{n+r}} + HSJ_{{n-r}} = (1/3)((2^{{n-r}} + 2^{{n+r}}) {} - 2(-1)^{{n-r}} {})",
                    c.a, c.b
                )
            }),
        },
        IdentityDescriptor {
            id: "hsj-shift-diff",
            group: "HSJ symmetric shifts",
            citation: "difference of hyperbolic Jacobsthal spinors at n+r and n-r",
            statement: "HSJ_{n+r} - HSJ_{n-r} = (1/3) 2^{n-r} (2^{2r} - 1) [1+8u; -2+4u]",
            params: ParamSpace::NR,
            eval: |_, p, _| {
                let (n, r) = (p.n, p.r());
                let lhs = term(Hsj, n + r) - term(Hsj, n - r);
                let weight = pow2(n - r) * (pow2(2 * r) - int(1)) * frac(1, 3);
                spin(lhs, hs(1, 8, -2, 4).scale_rational(&weight))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-consecutive",
            group: "HSJ consecutive sum",
            citation: "sum of two consecutive hyperbolic Jacobsthal spinors",
            statement: "HSJ_{n+1} + HSJ_n = 2^n [1+8u; 4u]",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, form| {
                let lhs = term(Hsj, p.n + 1) + term(Hsj, p.n);
                let a = match form {
                    Form::Printed => hs(1, 8, 0, 4),
                    Form::Corrected => derived(Hsj).a,
                };
                spin(lhs, a.scale_rational(&pow2(p.n)))
            },
            corrected: Some(|| format!("HSJ_{{n+1}} + HSJ_n = 2^n {}", derived(Hsj).a)),
        },
        IdentityDescriptor {
            id: "hsj-even-sum",
            group: "HSJ even and odd index sums",
            citation: "sum of hyperbolic Jacobsthal spinors with even indices",
            statement: "sum_{i=1}^{n} HSJ_{2i} = (2/3) HSJ_{2n+1} + (1/3)(HSJ_2 - (2n+1) HSJ_3 + n HSJ_4)",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let n = p.n;
                let lhs = (1..=n).fold(HypSpinor::zero(), |acc, i| acc + term(Hsj, 2 * i));
                let n_q = int(n as i64);
                let inner = term(Hsj, 2) - term(Hsj, 3).scale_rational(&int(2 * n as i64 + 1))
                    + term(Hsj, 4).scale_rational(&n_q);
                let rhs = term(Hsj, 2 * n + 1).scale_rational(&frac(2, 3))
                    + inner.scale_rational(&frac(1, 3));
                spin(lhs, rhs)
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-odd-sum",
            group: "HSJ even and odd index sums",
            citation: "sum of hyperbolic Jacobsthal spinors with odd indices",
            statement: "sum_{i=1}^{n} HSJ_{2i-1} = (2/3) HSJ_{2n} - (1/3)(n HSJ_4 - 2n HSJ_3 + 2 HSJ_0)",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let n = p.n;
                let lhs = (1..=n).fold(HypSpinor::zero(), |acc, i| acc + term(Hsj, 2 * i - 1));
                let inner = term(Hsj, 4).scale_rational(&int(n as i64))
                    - term(Hsj, 3).scale_rational(&int(2 * n as i64))
                    + term(Hsj, 0).scale_rational(&int(2));
                let rhs = term(Hsj, 2 * n).scale_rational(&frac(2, 3))
                    - inner.scale_rational(&frac(1, 3));
                spin(lhs, rhs)
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-binet",
            group: "HSJL Binet formula",
            citation: "Binet formula for the hyperbolic Jacobsthal-Lucas spinor sequence",
            statement: "HSJL_n = 2^n [1+8u; -2+4u] + (-1)^n [1-u; 1+u]",
            params: ParamSpace::N { min: 0 },
            eval: |ctx, p, form| binet(ctx, Hsjl, p.n, form),
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-genfunc",
            group: "HSJL generating function",
            citation: "generating function for the hyperbolic Jacobsthal-Lucas spinors",
            statement: "G(x) = (x [2+7u; -1+5u] - 3 [1+8u; -2+4u]) / (1 - x - 2x^2)",
            params: ParamSpace::Coefficient,
            eval: |ctx, p, form| spin(ctx.by_recurrence(Hsjl, p.n), ctx.gen_coeff(Hsjl, form, p.n)),
            corrected: Some(|| genfunc_statement(Hsjl)),
        },
        IdentityDescriptor {
            id: "hsjl-sum",
            group: "HSJL partial sums",
            citation: "sum of consecutive hyperbolic Jacobsthal-Lucas spinors from index n",
            statement: "sum_{s=0}^{t} HSJL_{n+s} = (1/2)(HSJL_{n+t+2} - HSJL_{n+1})",
            params: ParamSpace::NT,
            eval: |_, p, _| window_sum(Hsjl, p.n, p.t()),
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-consecutive",
            group: "HSJL consecutive sum and shifted difference",
            citation: "sum of two consecutive hyperbolic Jacobsthal-Lucas spinors",
            statement: "HSJL_{n+1} + HSJL_n = 3 * 2^n [1+8u; -2+4u]",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let lhs = term(Hsjl, p.n + 1) + term(Hsjl, p.n);
                spin(lhs, hs(1, 8, -2, 4).scale_rational(&(int(3) * pow2(p.n))))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-shift-diff",
            group: "HSJL consecutive sum and shifted difference",
            citation: "difference of hyperbolic Jacobsthal-Lucas spinors at n+r and n-r",
            statement: "HSJL_{n+r} - HSJL_{n-r} = 3 * 2^{n-1} [1+8u; -2+4u]",
            params: ParamSpace::NR,
            eval: |_, p, form| {
                let (n, r) = (p.n, p.r());
                let lhs = term(Hsjl, n + r) - term(Hsjl, n - r);
                let rhs = match form {
                    Form::Printed => hs(1, 8, -2, 4).scale_rational(&(int(3) * pow2(n - 1))),
                    Form::Corrected => derived(Hsjl)
                        .a
                        .scale_rational(&(pow2(n - r) * (pow2(2 * r) - int(1)))),
                };
                spin(lhs, rhs)
            },
            corrected: Some(|| {
                format!(
                    "HSJL_{{n+r}} - HSJL_{{n-r}} = 2^{{n-r}} (2^{{2r}} - 1) {}",
                    derived(Hsjl).a
                )
            }),
        },
        IdentityDescriptor {
            id: "hsj-hsjl-sum",
            group: "mixed HSJ/HSJL identities",
            citation: "hyperbolic Jacobsthal-Lucas plus Jacobsthal spinor at the same index",
            statement: "HSJL_n + HSJ_n = 2 HSJ_{n+1}",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let lhs = term(Hsjl, p.n) + term(Hsj, p.n);
                spin(lhs, term(Hsj, p.n + 1).scale_rational(&int(2)))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsj-hsjl-weighted",
            group: "mixed HSJ/HSJL identities",
            citation: "hyperbolic Jacobsthal-Lucas plus three Jacobsthal spinors at the same index",
            statement: "HSJL_n + 3 HSJ_n = 2^{n+1} [1+8u; -2+4u]",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let lhs = term(Hsjl, p.n) + term(Hsj, p.n).scale_rational(&int(3));
                spin(lhs, hs(1, 8, -2, 4).scale_rational(&pow2(p.n + 1)))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "hsjl-product",
            group: "product identity",
            citation: "Jacobsthal-Lucas weighted spinors give an odd-index Jacobsthal-Lucas spinor",
            statement: "HSJ_n jL_n + 2 HSJ_{n-1} jL_{n-1} = HSJL_{2n-1}",
            params: ParamSpace::N { min: 1 },
            eval: |_, p, _| {
                let n = p.n;
                let jl = |k: usize| Rational::from_integer(base_number(Hsjl, k));
                let lhs = term(Hsj, n).scale_rational(&jl(n))
                    + term(Hsj, n - 1).scale_rational(&(int(2) * jl(n - 1)));
                spin(lhs, term(Hsjl, 2 * n - 1))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "poly-recurrence",
            group: "Jacobsthal polynomial spinors",
            citation: "recurrence of the hyperbolic Jacobsthal polynomial spinor sequence",
            statement: "HSJ_n(x) = HSJ_{n-1}(x) + 2x HSJ_{n-2}(x)",
            params: ParamSpace::N { min: 2 },
            eval: |_, p, _| {
                let two_x = crate::poly::UniPoly::from_ints(&[0, 2]);
                let rhs = spinor_poly_term(p.n - 1) + spinor_poly_term(p.n - 2).scale(&two_x);
                (Value::PolySpinor(spinor_poly_term(p.n)), Value::PolySpinor(rhs))
            },
            corrected: None,
        },
        IdentityDescriptor {
            id: "poly-binet",
            group: "Jacobsthal polynomial spinors",
            citation: "Binet formula for the hyperbolic Jacobsthal polynomial spinor sequence",
            statement: "HSJ_n(x) = (1/(2c))(A(x) alpha(x) + B(x) beta(x)), c = sqrt(8x+1), \
                        A(x) = [-1+c+(4x+1+c)u; -1-c+(4x+1+c)u], \
                        B(x) = [-2+(c(2x+1)-6x-1)u; -1-c+(c-4x-1)u]",
            params: ParamSpace::N { min: 0 },
            eval: |ctx, p, form| {
                let lhs = spinor_poly_term(p.n).to_ext();
                let rhs = match form {
                    Form::Printed => ctx.printed_poly_binet().clone(),
                    Form::Corrected => ctx.poly_binet().eval(p.n).expect("2c is invertible"),
                };
                (Value::ExtSpinor(lhs), Value::ExtSpinor(rhs))
            },
            corrected: Some(|| {
                let pb = PolyBinet::derive();
                format!(
                    "HSJ_n(x) = (1/(2c))(A(x) alpha(x)^n + B(x) beta(x)^n), c = sqrt(8x+1), \
                     alpha(x) = (1+c)/2, beta(x) = (1-c)/2, A(x) = {}, B(x) = {}",
                    pb.scaled_x, pb.scaled_y
                )
            }),
        },
        IdentityDescriptor {
            id: "poly-genfunc",
            group: "Jacobsthal polynomial spinors",
            citation: "bivariate generating function for the hyperbolic Jacobsthal polynomial spinors",
            statement: "G(t,x) = ((1-t) [(2x+1)u; -1+u] + [1+(4x+1)u; -1+(2x+1)u]) / (1 - t - 2x t^2)",
            params: ParamSpace::Coefficient,
            eval: |ctx, p, form| {
                (
                    Value::PolySpinor(spinor_poly_term(p.n)),
                    Value::PolySpinor(ctx.poly_gen_coeff(form, p.n)),
                )
            },
            corrected: Some(|| {
                let [n0, n1] = poly_gen_numerator(false);
                let s1 = n0.clone() + n1;
                format!("G(t,x) = ((1-t) {n0} + t {s1}) / (1 - t - 2x t^2)")
            }),
        },
    ]
}

fn recurrence(kind: SeqKind, n: usize) -> (Value, Value) {
    use crate::sequences::split_quat_seq;
    use crate::spinor::quat_to_spinor;
    let image = |k| quat_to_spinor(&split_quat_seq(kind, k));
    spin(
        image(n + 2),
        image(n + 1) + image(n).scale_rational(&int(2)),
    )
}

fn binet(ctx: &Context<'_>, kind: SeqKind, n: usize, form: Form) -> (Value, Value) {
    let consts = match form {
        Form::Printed => BinetConstants::printed(kind),
        Form::Corrected => derived(kind),
    };
    spin(ctx.by_recurrence(kind, n), consts.eval(n))
}

fn window_sum(kind: SeqKind, n: usize, t: usize) -> (Value, Value) {
    let lhs = (n..=n + t).fold(HypSpinor::zero(), |acc, k| acc + term(kind, k));
    let rhs = (term(kind, n + t + 2) - term(kind, n + 1)).scale_rational(&frac(1, 2));
    spin(lhs, rhs)
}

fn genfunc_statement(kind: SeqKind) -> String {
    let [n0, n1] = gen_function_numerator(kind, false);
    format!("G(x) = ({n0} + x {n1}) / (1 - x - 2x^2)")
}
