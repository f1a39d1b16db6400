//! Command-line front end. All output is byte-stable for identical inputs.
//!
//! Exit codes: 0 ok, 1 failed check (palindromicity false, corpus FAIL,
//! trace not found, move not applicable), 2 usage or parse error.

use std::env;
use std::path::Path;
use std::process::ExitCode;

use eqbraid::{
    alexander, apply_move, corpus_verify, find_trace, is_palindromic, jones_of_word, load_corpus,
    BraidWord, CorpusReport, EquivariantPair, MoveDescriptor, MoveError, SearchBudget, SearchError,
};

const USAGE: &str = "\
usage: eqbraid <command> [args]

commands:
  palcheck <strands> <word>                     decide palindromicity; prints true or false
  closure <strands> <alpha> '|' <beta>          print the PD code of the equivariant closure
  jones <strands> <alpha> '|' <beta>            print the Jones polynomial of the closure
  alexander <strands> <alpha> '|' <beta>        print the Alexander polynomial of the closure
  apply <strands> <alpha> '|' <beta> <move...>  apply a move; prints strands;alpha;beta
  search <strands> <alpha> '|' <beta> <strands> <alpha> '|' <beta>
         [--max-nodes=N] [--max-strands=N] [--max-conj-len=N]
                                                find a move trace; prints it or NOT-FOUND
  corpus verify <path> [--format=tsv]           run every check on a corpus file

words are whitespace-separated signed generator indices; blank means identity.
moves: conj <word> / stabS first|second +|- / stabE first|second +|- / dstab +|- +|- / swap";

fn main() -> ExitCode {
    let args: Vec<String> = env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &[String]) -> Result<u8, String> {
    let Some(command) = args.first() else {
        return Err(format!("missing command\n{USAGE}"));
    };
    let rest = &args[1..];
    match command.as_str() {
        "palcheck" => cmd_palcheck(rest),
        "closure" => cmd_closure(rest),
        "jones" => cmd_jones(rest),
        "alexander" => cmd_alexander(rest),
        "apply" => cmd_apply(rest),
        "search" => cmd_search(rest),
        "corpus" => cmd_corpus(rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => Err(format!("unknown command {other:?}\n{USAGE}")),
    }
}

fn parse_strands(token: &str) -> Result<usize, String> {
    match token.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!(
            "strand count must be a positive integer, got {token:?}"
        )),
    }
}

fn parse_word(text: &str, strands: usize) -> Result<BraidWord, String> {
    BraidWord::parse(text, strands).map_err(|e| e.to_string())
}

/// A pair on the command line is four tokens: strands, alpha, a literal
/// `|`, and beta.
fn parse_pair(args: &[String]) -> Result<EquivariantPair, String> {
    let [strands, alpha, pipe, beta] = args else {
        return Err("expected <strands> <alpha> '|' <beta>".to_string());
    };
    if pipe != "|" {
        return Err(format!("expected '|' between the words, got {pipe:?}"));
    }
    let strands = parse_strands(strands)?;
    let alpha = parse_word(alpha, strands)?;
    let beta = parse_word(beta, strands)?;
    EquivariantPair::new(alpha, beta).map_err(|e| e.to_string())
}

fn pair_line(pair: &EquivariantPair) -> String {
    format!(
        "{};{};{}",
        pair.strands(),
        pair.alpha().text(),
        pair.beta().text()
    )
}

fn cmd_palcheck(args: &[String]) -> Result<u8, String> {
    let [strands, word] = args else {
        return Err("palcheck expects <strands> <word>".to_string());
    };
    let strands = parse_strands(strands)?;
    let word = parse_word(word, strands)?;
    if is_palindromic(&word) {
        println!("true");
        Ok(0)
    } else {
        println!("false");
        Ok(1)
    }
}

fn cmd_closure(args: &[String]) -> Result<u8, String> {
    let pair = parse_pair(args)?;
    print!("{}", pair.closure_diagram());
    Ok(0)
}

fn cmd_jones(args: &[String]) -> Result<u8, String> {
    let pair = parse_pair(args)?;
    let jones = jones_of_word(&pair.closure_word()).map_err(|e| e.to_string())?;
    println!("{jones}");
    Ok(0)
}

fn cmd_alexander(args: &[String]) -> Result<u8, String> {
    let pair = parse_pair(args)?;
    let alexander = alexander(&pair).map_err(|e| e.to_string())?;
    println!("{alexander}");
    Ok(0)
}

fn cmd_apply(args: &[String]) -> Result<u8, String> {
    if args.len() < 5 {
        return Err("apply expects <strands> <alpha> '|' <beta> <move...>".to_string());
    }
    let pair = parse_pair(&args[..4])?;
    let text = args[4..].join(" ");
    let descriptor = MoveDescriptor::parse(&text, pair.strands()).map_err(|e| e.to_string())?;
    match apply_move(&pair, &descriptor) {
        Ok(moved) => {
            println!("{}", pair_line(&moved));
            Ok(0)
        }
        Err(
            e @ (MoveError::PreconditionFailed { .. } | MoveError::FactorizationNotFound { .. }),
        ) => {
            eprintln!("move not applicable: {e}");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_search(args: &[String]) -> Result<u8, String> {
    if args.len() < 8 {
        return Err(
            "search expects <strands> <alpha> '|' <beta> <strands> <alpha> '|' <beta>".to_string(),
        );
    }
    let start = parse_pair(&args[..4])?;
    let end = parse_pair(&args[4..8])?;
    let mut budget = SearchBudget::default_for(&start, &end);
    for flag in &args[8..] {
        let (name, value) = flag
            .split_once('=')
            .ok_or_else(|| format!("expected --flag=N, got {flag:?}"))?;
        let value: usize = value
            .parse()
            .map_err(|_| format!("expected an integer in {flag:?}"))?;
        match name {
            "--max-nodes" => budget.max_nodes = value,
            "--max-strands" => budget.max_strands = value,
            "--max-conj-len" => budget.max_conj_len = value,
            _ => return Err(format!("unknown flag {name:?}")),
        }
    }
    match find_trace(&start, &end, &budget) {
        Ok(trace) => {
            print!("{}", trace.to_text());
            Ok(0)
        }
        Err(SearchError::NotFoundWithinBudget { .. }) => {
            println!("NOT-FOUND");
            Ok(1)
        }
    }
}

fn cmd_corpus(args: &[String]) -> Result<u8, String> {
    let Some(("verify", rest)) = args.split_first().map(|(c, r)| (c.as_str(), r)) else {
        return Err("corpus expects: verify <path> [--format=tsv]".to_string());
    };
    let (path, format) = match rest {
        [path] => (path, None),
        [path, flag] if flag == "--format=tsv" => (path, Some("tsv")),
        _ => return Err("corpus verify expects <path> [--format=tsv]".to_string()),
    };
    let entries = load_corpus(Path::new(path)).map_err(|e| e.to_string())?;
    let report = corpus_verify(&entries);
    match format {
        Some(_) => print!("{}", report.to_tsv()),
        None => print!("{}", summarize(&report)),
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

/// One line per corpus row naming the failed checks, then a total.
fn summarize(report: &CorpusReport) -> String {
    let mut out = String::new();
    let mut rows = 0usize;
    let mut passed = 0usize;
    let results = report.results();
    let mut i = 0;
    while i < results.len() {
        let name = &results[i].name;
        let mut failed: Vec<String> = Vec::new();
        while i < results.len() && results[i].name == *name {
            if !results[i].pass {
                failed.push(results[i].check.to_string());
            }
            i += 1;
        }
        rows += 1;
        if failed.is_empty() {
            passed += 1;
            out.push_str(&format!("{name}: PASS\n"));
        } else {
            out.push_str(&format!("{name}: FAIL {}\n", failed.join(",")));
        }
    }
    out.push_str(&format!("passed {passed} of {rows} rows\n"));
    out
}
