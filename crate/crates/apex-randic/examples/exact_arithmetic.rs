//! Tour of the radical number type: canonical forms, exact signs, rigorous
//! decimals.
//!
//! Run with: cargo run --release --example exact_arithmetic

use apex_randic::radical::{big_ratio, RadicalValue};

fn main() {
    // 1/sqrt(m) reduces through the squarefree part of m
    for m in [1u64, 4, 6, 12, 48] {
        let v = RadicalValue::inv_sqrt(m).unwrap();
        println!("1/sqrt({m:2}) = {v}  ≈ {}", v.decimal(12));
    }
    println!();

    // cancellation is structural, not numeric
    let r2 = RadicalValue::sqrt_integer(2).unwrap();
    println!("sqrt(2) - sqrt(2) = {} (is_zero: {})", r2.sub(&r2), r2.sub(&r2).is_zero());

    // the constant (5 - 2*sqrt(6))/6 drives the extremal family
    let c = RadicalValue::from_rational(big_ratio(5, 6))
        .sub(&RadicalValue::sqrt_integer(6).unwrap().scale(&big_ratio(1, 3)));
    println!("(5 - 2*sqrt(6))/6 = {c}  ≈ {}", c.decimal(12));

    // signs of tiny differences are decided exactly, never by float
    let close = RadicalValue::sqrt_integer(2)
        .unwrap()
        .sub(&RadicalValue::from_rational(big_ratio(239, 169)));
    println!(
        "sqrt(2) - 239/169 = {close}  sign: {:?}  ≈ {}",
        close.sign(),
        close.decimal(6)
    );

    // rigorous enclosures at any requested width
    let (lo, hi) = c.enclosure(20);
    println!("enclosure of the constant at 20 digits: width = {}", (&hi - &lo));

    // products reduce back to squarefree canonical form
    let v = RadicalValue::inv_sqrt(6).unwrap();
    println!("(1/sqrt(6))² = {}", v.mul(&v));
}
