// Replays the bundled problem corpus, or a JSON corpus given as the first argument.

use rhind::arith::DecompositionPolicy;
use rhind::corpus::{error_summary, load_corpus, replay_all, starter_corpus};

fn main() {
    let problems = match std::env::args().nth(1).filter(|a| a.ends_with(".json")) {
        Some(path) => load_corpus(&std::fs::read_to_string(path).expect("readable corpus")),
        None => starter_corpus(),
    }
    .expect("valid corpus");
    let verdicts = replay_all(&problems, &DecompositionPolicy::default());
    print!("{}", error_summary(&verdicts).render_text());
}
