fn main() {
    std::process::exit(complementary_choice::cli::main());
}
