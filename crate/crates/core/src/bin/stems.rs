fn main() {
    stems::cli::main();
}
