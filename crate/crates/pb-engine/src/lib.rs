//! Generic two-phase Propagation Blocking.
//!
//! The binning phase routes `(index, value)` update tuples through
//! cacheline-sized coalescing buffers into per-thread, range-partitioned
//! bins. The bin-read phase then consumes each bin sequentially, so the
//! irregular accesses a kernel performs per tuple stay inside one bin's
//! index range. Both phases are kernel-agnostic; kernels decide what a
//! tuple means and what to do with it on the read side.

mod bins;
mod buffer;
mod config;
mod phases;

pub use bins::{Bin, BinSet, BIN_CHUNK_TUPLES};
pub use buffer::CoalescingBuffer;
pub use config::{PbConfig, PbConfigError, TUPLE_BYTES};
pub use phases::{bin_read_phase, binning_phase, BinningStats};

/// One binnable update: a 32-bit routing key and a 32-bit payload, packed
/// into 8 bytes so a 64-byte cacheline holds exactly eight tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(C)]
pub struct UpdateTuple {
    pub index: u32,
    pub value: u32,
}

impl UpdateTuple {
    pub fn new(index: u32, value: u32) -> Self {
        UpdateTuple { index, value }
    }
}

/// Abstract instruction cost per update of software binning: index compute,
/// buffer bookkeeping, the store itself, and amortized flush work.
pub const SW_BINNING_OPS_PER_UPDATE: u64 = 9;
