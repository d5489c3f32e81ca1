// Two-colour components: paths and cycles in claw-free graphs.

use clawbound::exact::{
    chromatic_number, kempe_components, kempe_swap, verify_coloring, Coloring, Shape,
};
use clawbound::graph::generators::{cycle, star};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = cycle(9)?;
    let coloring = chromatic_number(&g).coloring;
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        for comp in kempe_components(&g, &coloring, a, b)? {
            assert_ne!(comp.shape, Shape::Other);
            println!("C9 ({a},{b}): {:?} {:?}", comp.shape, comp.vertices);
        }
    }
    let comp = &kempe_components(&g, &coloring, 1, 2)?[0];
    let swapped = kempe_swap(&coloring, comp)?;
    assert!(verify_coloring(&g, &swapped));
    println!("after swap: {:?}", swapped.colors());

    // the claw itself is the obstruction: its two-colour component is a star
    let claw = star(3)?;
    let c = Coloring::new(vec![1, 2, 2, 2], 2);
    let comps = kempe_components(&claw, &c, 1, 2)?;
    println!("claw: {:?}", comps[0].shape);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
