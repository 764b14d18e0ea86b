//! Laboratory units versus Hartree atomic units.

use icec::units::{electron_wavenumber, photon_wavenumber, Area, Energy, Length, CODATA_2018};

fn main() -> icec::Result<()> {
    println!("constants: {:?}", CODATA_2018);

    let sigma = Area::megabarn(30.0);
    let e_vph = Energy::ev(3.6);
    let r = Length::nm(1.0);
    println!("30 Mb   = {:.6e} bohr^2", sigma.atomic());
    println!("3.6 eV  = {:.9} hartree", e_vph.atomic());
    println!("1 nm    = {:.7} bohr", r.atomic());
    println!("5 A     = {:.4} nm", Length::angstrom(5.0).as_nm());

    let eps = Energy::ev(0.5);
    println!("k(0.5 eV)      = {:.6} a.u.", electron_wavenumber(eps)?);
    println!("k_ph(3.813 eV) = {:.6e} a.u.", photon_wavenumber(Energy::ev(3.813))?);

    // unit tags are parsed, unknown ones are rejected
    let parsed: icec::units::EnergyUnit = "eV".parse()?;
    println!("parsed unit: {parsed:?}");
    match "kcal".parse::<icec::units::EnergyUnit>() {
        Err(e) => println!("rejected: {e}"),
        Ok(u) => println!("unexpected: {u:?}"),
    }
    Ok(())
}
