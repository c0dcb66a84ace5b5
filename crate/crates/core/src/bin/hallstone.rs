fn main() -> std::process::ExitCode {
    hallstone::cli::run(std::env::args_os())
}
