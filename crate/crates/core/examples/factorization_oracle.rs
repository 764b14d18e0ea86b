//! Checks the factorized cross section against direct integration of the
//! dipole-dipole t-matrix, and shows that a wrong coupling is caught.

use num_complex::Complex64;

use icec::oracle::{sigma_micro, verify_factorization, DipoleModel, FactorizationCheck, QuadratureSpec};
use icec::units::{Energy, Length};

fn main() -> icec::Result<()> {
    let c = Complex64::new;
    let model = DipoleModel::new(
        [c(-0.3, 0.5), c(0.9, -0.2), c(0.4, 0.1)],
        [c(0.2, 0.2), c(-0.1, 0.7), c(0.6, 0.0)],
        Energy::ev(3.9),
        Energy::ev(3.313),
        Energy::ev(3.601),
        Length::bohr(10.0),
    )?;
    let distances: Vec<_> = [10.0, 20.0, 40.0].into_iter().map(Length::bohr).collect();

    for order in [2, 4, 16] {
        let s = sigma_micro(&model, &QuadratureSpec::new(order, 1e-3)?)?;
        println!("order {order:>2}: sigma_micro(10 bohr) = {:.9e} bohr^2", s.atomic());
    }

    let report = verify_factorization(&model, &distances, &QuadratureSpec::default(), &FactorizationCheck::default())?;
    print!("{}", report.to_text());

    let broken = model.with_coupling([1.0, 2.0, 1.0]);
    let report = verify_factorization(&broken, &distances, &QuadratureSpec::default(), &FactorizationCheck::default())?;
    match report.into_result() {
        Err(e) => println!("B_0 = +2: {e}"),
        Ok(_) => println!("B_0 = +2 unexpectedly passed"),
    }
    Ok(())
}
