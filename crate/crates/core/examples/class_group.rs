use higher_composition::bqf::enumerate_class_group;
use num_bigint::BigInt;

fn main() {
    for d in [-47i64, -23, -4, 8, 229] {
        let g = enumerate_class_group(&BigInt::from(d)).unwrap();
        let reps: Vec<String> = g.representatives.iter().map(ToString::to_string).collect();
        println!("D = {d}: order {} ({})", g.order(), reps.join(" "));
        if let Err(e) = g.check_axioms() {
            println!("  group axioms fail: {e}");
        }
    }

    let g = enumerate_class_group(&BigInt::from(-23)).unwrap();
    println!("\ncomposition table at D = -23:");
    for row in &g.table {
        let names: Vec<String> = row.iter().map(|&k| g.representatives[k].to_string()).collect();
        println!("  {}", names.join("  "));
    }
}
