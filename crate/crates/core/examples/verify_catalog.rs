//! Certifies the built-in catalog and prints the report.

use superlie::catalog::verify::{verify_automorphisms, verify_catalog, verify_loci};
use superlie::catalog::Catalog;

fn main() -> superlie::Result<()> {
    let cat = Catalog::builtin()?;
    println!("{}", verify_catalog(&cat, None)?);
    for c in verify_automorphisms(&cat)? {
        println!("{c}");
    }
    for l in verify_loci(&cat)? {
        println!("locus {:<16} {} [{}]", l.id, if l.passed() { "pass" } else { "FAIL" }, l.status);
        for c in l.checks.iter().filter(|c| !c.ok) {
            println!("    {c}");
        }
    }
    Ok(())
}
