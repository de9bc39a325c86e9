// The 2/n table for odd n from 3 to 99, under each decomposition strategy.

use rhind::arith::{table_2_over_n, DecompositionPolicy, Strategy};

fn main() {
    let shortest = table_2_over_n(&DecompositionPolicy::default()).expect("table");
    let greedy = table_2_over_n(&DecompositionPolicy::greedy()).expect("table");

    println!("{:>5}  {:<28} greedy", "2/n", "shortest");
    for (s, g) in shortest.iter().zip(&greedy) {
        println!("{:>5}  {:<28} {}", format!("2/{}", s.n), s.decomposition.to_string(), g.decomposition);
    }

    let most = shortest.iter().map(|e| e.term_count).max().unwrap_or(0);
    let longer = shortest
        .iter()
        .zip(&greedy)
        .filter(|(s, g)| g.decomposition.largest_denominator() > s.decomposition.largest_denominator())
        .count();
    println!();
    println!("rows: {}, all recompose: {}", shortest.len(), shortest.iter().all(|e| e.value_matches()));
    println!("most terms ({}): {most}", Strategy::ShortestSearch);
    println!("rows where greedy reaches a larger denominator: {longer}");
}
