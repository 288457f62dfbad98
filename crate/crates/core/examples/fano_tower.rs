//! Graded dimensions of the Fano and non-Fano holonomy Lie algebras, checked
//! against the tower of free Lie algebras of ranks 4, 2, 1.

use holokit::catalog;
use holokit::holonomy::{holonomy_presentation, verify_tower};
use holokit::lie::EngineConfig;

fn main() -> holokit::Result<()> {
    let config = EngineConfig::default();
    for (name, a) in [("fano", catalog::fano()), ("nonfano", catalog::nonfano())] {
        let h = holonomy_presentation(&a);
        let dims = h.graded_dims(5, &config)?;
        let check = verify_tower(&h, &[4, 2, 1], 5, &config)?;
        println!("{name}: dims {:?}", dims.dims);
        match check.comparison.first_mismatch {
            None => println!("  matches the [4,2,1] tower through degree 5"),
            Some(d) => println!(
                "  differs from the [4,2,1] tower at degree {d}: {} vs {}",
                check.comparison.computed.coeffs[d], check.comparison.predicted.coeffs[d]
            ),
        }
    }
    Ok(())
}
