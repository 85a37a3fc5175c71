#![allow(dead_code)]

use proptest::prelude::*;

use whframe::functions::{BinOp, Expr, Func};
use whframe::intervals::{BasicSupportSet, Interval, RationalPi};
use whframe::laurent::LaurentPolynomial;

/// `p/q·π` with `|p| ≤ max_num`, `1 ≤ q ≤ 8`.
pub fn endpoint(max_num: i64) -> impl Strategy<Value = RationalPi> {
    (-max_num..=max_num, 1i64..=8).prop_map(|(p, q)| RationalPi::new(p, q))
}

pub fn interval(max_num: i64) -> impl Strategy<Value = Interval> {
    (
        endpoint(max_num),
        endpoint(max_num),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_filter_map("degenerate", |(a, b, lc, hc)| {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            Interval::new(lo, hi, lc, hc).ok()
        })
}

/// Basic support sets of up to `max_parts` raw intervals.
pub fn support_set(max_num: i64, max_parts: usize) -> impl Strategy<Value = BasicSupportSet> {
    prop::collection::vec(interval(max_num), 1..=max_parts)
        .prop_map(|raw| BasicSupportSet::normalize(&raw).expect("nonempty"))
}

/// Real polynomials `Σ a_k z^k`, degree ≤ `max_degree`, `a_k ∈ [-5, 5]`,
/// with a nonzero constant term so the degree is exact in the dense form.
pub fn real_polynomial(max_degree: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(-5.0f64..5.0, 2..=max_degree + 1).prop_map(|mut c| {
        if c[0] == 0.0 {
            c[0] = 1.0;
        }
        let pairs: Vec<(f64, i64)> = c.iter().enumerate().map(|(k, &a)| (a, k as i64)).collect();
        LaurentPolynomial::from_real(&pairs)
    })
}

fn number() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (1u32..1000).prop_map(|n| Expr::Num(n as f64)),
        (1u32..4000).prop_map(|n| Expr::Num(n as f64 / 64.0)),
    ]
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![number(), Just(Expr::Pi), Just(Expr::I), Just(Expr::Var),]
}

fn func() -> impl Strategy<Value = Func> {
    prop_oneof![
        Just(Func::Sin),
        Just(Func::Cos),
        Just(Func::Exp),
        Just(Func::Abs),
        Just(Func::Sqrt),
    ]
}

/// Expression trees in the shape the parser produces. Divisors are kept
/// away from constant zero, which the parser rejects.
pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 3, |inner| {
        let divisor = prop_oneof![
            number(),
            Just(Expr::Var),
            // t-dependent, so never a constant zero (exp of a constant can underflow)
            inner
                .clone()
                .prop_map(|e| Expr::Binary(BinOp::Add, Box::new(e), Box::new(Expr::Var))),
        ];
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (
                prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul)],
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, a, b)| Expr::Binary(op, Box::new(a), Box::new(b))),
            (inner.clone(), divisor).prop_map(|(a, b)| Expr::Binary(
                BinOp::Div,
                Box::new(a),
                Box::new(b)
            )),
            (inner.clone(), 0i32..6).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
            (func(), inner).prop_map(|(f, a)| Expr::Call(f, Box::new(a))),
        ]
    })
}
