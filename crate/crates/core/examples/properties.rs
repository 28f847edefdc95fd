//! Checks ratio inequalities over every expression up to a given order.
//!
//! cargo run --release --example properties -- [max-order]

use group_spectra::census::properties::{expression_corpus, expression_properties, wreath_properties};
use group_spectra::expr::Evaluator;
use group_spectra::Result;

fn main() -> Result<()> {
    let max_order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(60);
    let ev = Evaluator::default();
    let corpus = expression_corpus(&ev, max_order);
    let (mut held, mut violated) = (0, 0);
    for e in &corpus {
        let mut out = expression_properties(&ev, e)?;
        out.extend(wreath_properties(&e.to_string(), &ev.spectrum(e)?));
        for o in out {
            if o.holds {
                held += 1;
            } else {
                violated += 1;
                println!("{o}");
            }
        }
    }
    println!("{} groups of order <= {max_order}: {held} instances hold, {violated} violated", corpus.len());
    Ok(())
}
