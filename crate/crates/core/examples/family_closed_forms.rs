//! Closed forms for the d = k^2 + 4, k^2 - 4, k^2 + 1, k^2 - 1, k^2 - k families.

use pellcf::families::{family_answer, family_cf, Family, FamilyAnswer, FamilyCase};
use pellcf::pell::Rhs;

fn main() -> pellcf::Result<()> {
    let k = 7;
    for family in Family::ALL {
        println!("{family}, k={k}: sqrt({}) = {}", family.d(k), family_cf(family, k)?);
        for rhs in Rhs::ALL.into_iter().filter(|&r| family.supports(r)) {
            let case = FamilyCase::new(family, k, rhs)?;
            match family_answer(&case) {
                FamilyAnswer::Generator(form) => {
                    let first = form.terms(2);
                    println!("  N={rhs:>2}: {form}  -> {}, {}", first[0], first[1]);
                }
                FamilyAnswer::NoSolution(tag) => println!("  N={rhs:>2}: none ({tag})"),
                FamilyAnswer::Generic(note) => println!("  N={rhs:>2}: {note}"),
            }
        }
    }
    Ok(())
}
