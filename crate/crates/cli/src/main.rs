fn main() {
    // placeholder until the library surface settles
}
