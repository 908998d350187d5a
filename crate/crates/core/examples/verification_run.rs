//! Running the verification batteries from code instead of the binary.
//!
//! ```bash
//! cargo run --example verification_run
//! ```

use steinberg_lab::cli::{run_verify_all, SuiteConfig};

fn main() -> steinberg_lab::Result<()> {
    let config = SuiteConfig::parse(
        "systems = A1, A2, B2\n\
         primes = 2, 3\n\
         exponents = 1\n\
         radius = 3\n",
    )?;
    let report = run_verify_all(&config, 4, true)?;
    print!("{}", report.to_table());
    println!("all passed: {}", report.all_passed());
    Ok(())
}
