fn main() {
    std::process::exit(kstab::report::cli::main());
}
