//! The README walkthrough: build a three-generator decomposition, verify
//! it, and confirm the value against the exhaustive oracle.

use sdepth_core::construct::three_gen_ideal;
use sdepth_core::decomp::verify;
use sdepth_core::oracle::{self, Budgets};
use sdepth_core::text::parse_ideal;
use sdepth_core::Target;

fn main() -> Result<(), sdepth_core::Error> {
    let ideal = parse_ideal("n=3; x1^3, x2^2*x3^2, x1*x2^3*x3")?;
    let trace = three_gen_ideal(&ideal)?;
    assert!(verify(&trace.result).valid);
    assert_eq!(trace.result.sdepth()?, 2);

    let (value, _witness) = oracle::sdepth_exact(&Target::Ideal(ideal), None, &Budgets::default())?;
    assert_eq!(value, 2);

    for step in &trace.steps {
        println!("{}: {}", step.rule, step.detail);
    }
    println!("sdepth: {value}");
    Ok(())
}
