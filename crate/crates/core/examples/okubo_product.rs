//! The Okubo product on coordinate vectors and on the matrix model.

use cayley_plane::algebra::{decompose, mul, norm, okubo_matrix_mul, to_matrix};
use cayley_plane::{AlgebraKind, Vec8};

fn main() -> cayley_plane::Result<()> {
    let e = Vec8::e();
    let i1 = Vec8::basis(1);
    let x = Vec8::parse_coords(&["1", "0", "1/2", "0", "0", "sqrt3", "0", "-1"])?;

    println!("e*e   = {}", mul(AlgebraKind::Okubo, &e, &e));
    println!("e*i1  = {}", mul(AlgebraKind::Okubo, &e, &i1));
    println!("i1*e  = {}", mul(AlgebraKind::Okubo, &i1, &e));

    let y = mul(AlgebraKind::Okubo, &x, &i1);
    println!("x     = {x}");
    println!("x*i1  = {y}");
    println!(
        "n(x*i1) = {}, n(x)n(i1) = {}",
        norm(&y),
        norm(&x) * norm(&i1)
    );

    // The same product through 3x3 Hermitian matrices.
    let m = okubo_matrix_mul(&to_matrix(&x), &to_matrix(&i1))?;
    println!("via matrices: {}", decompose(&m)?);

    // (x*y)*x = n(x) y
    let back = mul(AlgebraKind::Okubo, &y, &x);
    println!("(x*i1)*x = {back}");
    Ok(())
}
