//! Shared fixtures for the benchmarks.

use pathdga::text::{parse_path, BiNotation};
use pathdga::{composition, morse, BiPath, Bigraph, BigraphDga};

pub fn morse_dga() -> BigraphDga {
    BigraphDga::new(Bigraph::blowup(morse()))
}

pub fn composition_dga(n: usize) -> BigraphDga {
    BigraphDga::new(Bigraph::blowup(composition(n).expect("small n")))
}

/// The weight-4 chain with eight 3-step gluing sequences.
pub fn eight_path(g: &Bigraph) -> BiPath {
    parse_path(&BiNotation { graph: g }, "Bus·Bsu·Bus").expect("morse alias")
}
