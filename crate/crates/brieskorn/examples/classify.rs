//! Symbolic classification of a few mixed families: canonical ordering,
//! topological normal form, submersion flag, multiplicity, and (for n = 2)
//! the surface class with its tangent cone.
//!
//! Run with: cargo run --example classify

use brieskorn::{
    is_topological_submersion, surface_profile, surface_type, topological_normal_form,
    ExponentData, SurfaceType,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let germs: [(&[u32], &[u32]); 6] = [
        (&[2, 3], &[0, 0]),  // the classical holomorphic cusp family
        (&[1, 2], &[1, 1]),  // mixed, topological submersion
        (&[2, 2], &[1, 1]),  // homogeneous: the surface is its own cone
        (&[0, 1], &[1, 1]),  // ray class with a genuine horn
        (&[3, 2], &[0, 1]),  // entered out of order; canonicalized with a swap
        (&[1, 4], &[0, 0]),  // regular: a smooth germ in disguise
    ];

    for (a, b) in germs {
        let e = ExponentData::new(a.to_vec(), b.to_vec())?;
        println!("f_{{a,b}} with a = {:?}, b = {:?}", a, b);
        println!("  canonical order: a = {:?}, b = {:?}", e.a(), e.b());
        println!("  multiplicities m_i = a_i + 2 b_i: {:?}", e.multiplicity_multiset());
        println!("  topological normal form: {}", topological_normal_form(&e));
        println!(
            "  topological submersion: {}",
            is_topological_submersion(&e)
        );

        match surface_type(&e)? {
            SurfaceType::Regular => {
                println!("  surface: regular (smooth manifold germ at the origin)")
            }
            ty => {
                let p = surface_profile(&e)?;
                println!("  surface class: {ty}");
                println!("  tangent cone: {}", p.cone.kind);
                println!("  inner horn index beta = {}", p.beta);
                println!("  link components: {}", p.components);
                println!("  normally embedded (symbolic rule): {}", p.normally_embedded);
            }
        }
        println!();
    }
    Ok(())
}
