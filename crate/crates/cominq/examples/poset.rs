//! Builds the box poset of several spaces and prints the display grid.
//! Bracketed boxes form the degree one region: the classes that appear
//! when a product first picks up a power of q.

use cominq::space::SpaceSpec;

fn main() {
    let specs = [
        SpaceSpec::Grassmannian(3, 7),
        SpaceSpec::Lagrangian(4),
        SpaceSpec::Orthogonal(6),
        SpaceSpec::Quadric(11),
        SpaceSpec::Cayley,
        SpaceSpec::Freudenthal,
    ];
    for spec in specs {
        let c = spec.build().expect("all specs are valid");
        println!(
            "{spec}: {} boxes, diameter {}, deg q = {}",
            c.num_boxes(),
            c.diameter(),
            c.deg_q()
        );
        print!("{}", cominq::render::render_poset(&c));
        println!();
    }

    // The same data as JSON, for downstream tooling.
    let c = SpaceSpec::Lagrangian(3).build().unwrap();
    println!("{}", serde_json::to_string_pretty(&cominq::render::poset_json(&c)).unwrap());
}
