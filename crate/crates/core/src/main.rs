use immq::cli::run_cli;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = run_cli(&args);
    print!("{}", result.stdout);
    std::process::exit(result.code);
}
