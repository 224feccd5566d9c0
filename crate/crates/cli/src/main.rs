fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = folkdyn::cli::run(std::env::args_os(), &mut stdout, &mut stderr);
    std::process::exit(code);
}
