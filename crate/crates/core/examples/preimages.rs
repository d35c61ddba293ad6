//! Lists every one-step preimage of a word under both grammars.
//!
//! cargo run -p fibrecon --example preimages -- 1011010

use fibrecon::grammar::LSystem;
use fibrecon::oracle::enumerate_preimages;
use fibrecon::Word;

fn main() {
    let word: Word = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "10110101".into())
        .parse()
        .expect("binary word");
    for (name, grammar) in [("fib", LSystem::fib()), ("bif", LSystem::bif())] {
        let set = enumerate_preimages(&grammar, &word);
        let list: Vec<String> = set.preimages.iter().map(|p| p.to_string()).collect();
        println!("{name}: {word} <- {{{}}}", list.join(", "));
    }
}
