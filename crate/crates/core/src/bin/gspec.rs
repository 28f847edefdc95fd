fn main() -> std::process::ExitCode {
    group_spectra::cli::main()
}
