//! Finite fields and the geometric actions used to build PSL(2,q) and Sz(q).
//!
//! cargo run --release --example finite_fields

use group_spectra::field::{Field, FieldElement, ProjectiveLine, SuzukiOvoid};
use group_spectra::group::generate;
use group_spectra::Result;

fn main() -> Result<()> {
    let f = Field::of_order(27)?;
    println!("GF(27) modulus coefficients {:?}", f.modulus());
    let w = f.primitive();
    println!("primitive element has order {:?}", f.multiplicative_order(w));
    println!("frobenius(w) = w^3: {}", f.frobenius(w, 1) == f.pow(w, 3));

    let line = ProjectiveLine::new(f.clone());
    let one = FieldElement::ONE;
    let zero = FieldElement::ZERO;
    let t = line.matrix([[one, one], [zero, one]])?;
    let d = line.matrix([[w, zero], [zero, one]])?;
    let s = line.matrix([[zero, f.neg(one)], [one, zero]])?;
    let pgl = generate(&[t, d, s], 1 << 20)?;
    println!("PGL(2,27) on {} points: order {}", line.len(), pgl.order());

    let ovoid = SuzukiOvoid::new(Field::of_order(8)?)?;
    println!("Suzuki ovoid over GF(8) has {} points", ovoid.len());
    Ok(())
}
