//! Lucas sequences U_n(k, s), V_n(k, s) and the identity V^2 - D U^2 = 4(-s)^n.

use pellcf::lucas::{lucas_pair_fast, parity_u, parity_v, LucasParams};

fn main() -> pellcf::Result<()> {
    let params = LucasParams::new(3, 1)?;
    println!("k=3 s=1, D={}", params.discriminant());
    for pair in params.iter().take(10) {
        println!(
            "  n={:<2} U={:<6} V={:<6} norm ok: {}  (U even: {}, V even: {})",
            pair.n,
            pair.u,
            pair.v,
            pair.satisfies_norm_identity(&params),
            parity_u(&params, pair.n)?,
            parity_v(&params, pair.n)?,
        );
    }
    // fast doubling reaches large indices directly
    let far = lucas_pair_fast(&LucasParams::fibonacci(), 1000);
    println!("F_1000 has {} digits", far.u.to_string().len());
    Ok(())
}
