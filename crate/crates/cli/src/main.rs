use std::io::Read;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let outcome = gacalc::run(&argv, || {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("gacalc: cannot read stdin: {e}");
            std::process::exit(2);
        }
        buf
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
