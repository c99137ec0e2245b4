fn main() {
    println!("hsos");
}
