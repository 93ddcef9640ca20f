//! Logical operation counter used for machine-independent scaling checks.

use std::cell::Cell;

/// Counts table touches and neighbor visits.
#[derive(Debug, Default)]
pub struct Ops(Cell<u64>);

impl Ops {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&self) {
        self.0.set(self.0.get() + 1);
    }

    #[inline]
    pub fn add(&self, n: usize) {
        self.0.set(self.0.get() + n as u64);
    }

    pub fn get(&self) -> u64 {
        self.0.get()
    }
}
