//! Group expressions evaluated by spectrum arithmetic and by enumeration.
//!
//! cargo run --release --example expressions

use group_spectra::expr::{parse_expr, Evaluator, Mode};
use group_spectra::spectrum::format_ratio;
use group_spectra::Result;

fn main() -> Result<()> {
    let ev = Evaluator::default();
    for text in ["A(5) * C(6)^3", "wr2(S(5))", "PSL(2,7) * C(2)", "load(\"m10\")", "wr2(wr2(wr2(wr2(C(2)))))"] {
        let e = parse_expr(text)?;
        let s = ev.evaluate(&e, Mode::Spectrum)?;
        println!("{e}: order {}, exponent {}, rho_2 = {}", s.group_order(), s.exponent(), format_ratio(&s.rho(2)));
    }

    let e = parse_expr("wr2(S(3)) * C(4)")?;
    let a = ev.evaluate(&e, Mode::Spectrum)?;
    let b = ev.evaluate(&e, Mode::Concrete)?;
    println!("{e}: both modes agree: {}", a == b);

    if let Err(err) = parse_expr("PSL(3,4)") {
        println!("{err}");
    }
    Ok(())
}
