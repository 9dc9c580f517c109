//! Rebuilds the boundary from a support function and measures it as a plane
//! curve.

use wirtinger_lab::convexgeom::{self, change_of_variable_check, round_trip};

fn main() -> wirtinger_lab::Result<()> {
    let h = convexgeom::random_convex(5, 17, 0.3)?;
    let curve = convexgeom::reconstruct_curve(&h)?;
    println!("x(t) = {:?}", curve.x());
    println!("y(t) = {:?}", curve.y());

    let rt = round_trip(&h, 256)?;
    println!("L: support {:.14}, curve {:.14}", rt.length_support, rt.length_curve);
    println!("A: support {:.14}, curve {:.14}", rt.area_support, rt.area_curve);
    println!("max |kappa rho - 1| = {:.2e}, Minkowski error {:.2e}", rt.curvature_error, rt.minkowski_error);

    for (l, (arc, theta)) in change_of_variable_check(&h, 3, 256)?.into_iter().enumerate() {
        println!("l = {l}: arclength {arc:.12}, normal angle {theta:.12}");
    }
    Ok(())
}
