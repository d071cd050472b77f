fn main() -> std::process::ExitCode {
    densesplit::cli::main()
}
