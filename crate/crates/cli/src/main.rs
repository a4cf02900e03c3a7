fn main() {
    let code = stabilitylab_cli::run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::BufWriter::new(std::io::stdout().lock()),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
