use thiserror::Error;

/// Bytes per packed update tuple (two 32-bit words).
pub const TUPLE_BYTES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbConfigError {
    #[error("bin range must be at least 1")]
    ZeroBinRange,
    #[error("at least one worker thread is required")]
    ZeroThreads,
    #[error("line size {0} cannot hold a single {TUPLE_BYTES}-byte tuple")]
    LineTooSmall(usize),
}

/// Parameters of one propagation-blocking run.
///
/// `bin_range` is the number of contiguous indices mapped to one bin and must
/// be a power of two so routing is a shift; other values are rounded up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbConfig {
    index_range: u32,
    bin_range: u64,
    num_threads: usize,
    line_size: usize,
}

impl PbConfig {
    pub const DEFAULT_LINE_SIZE: usize = 64;

    pub fn new(index_range: u32, bin_range: u64, num_threads: usize) -> Result<Self, PbConfigError> {
        Self::with_line_size(index_range, bin_range, num_threads, Self::DEFAULT_LINE_SIZE)
    }

    pub fn with_line_size(
        index_range: u32,
        bin_range: u64,
        num_threads: usize,
        line_size: usize,
    ) -> Result<Self, PbConfigError> {
        if bin_range == 0 {
            return Err(PbConfigError::ZeroBinRange);
        }
        if num_threads == 0 {
            return Err(PbConfigError::ZeroThreads);
        }
        if line_size < TUPLE_BYTES {
            return Err(PbConfigError::LineTooSmall(line_size));
        }
        let rounded = bin_range.next_power_of_two();
        if rounded != bin_range {
            log::warn!("bin range {bin_range} is not a power of two; rounding up to {rounded}");
        }
        Ok(PbConfig {
            index_range,
            bin_range: rounded,
            num_threads,
            line_size,
        })
    }

    pub fn index_range(&self) -> u32 {
        self.index_range
    }

    pub fn bin_range(&self) -> u64 {
        self.bin_range
    }

    pub fn num_threads(&self) -> usize {
        self.num_threads
    }

    pub fn line_size(&self) -> usize {
        self.line_size
    }

    /// Tuples per coalescing buffer (one cacheline's worth).
    pub fn buffer_capacity(&self) -> usize {
        self.line_size / TUPLE_BYTES
    }

    /// `ceil(index_range / bin_range)`; zero when the index range is empty.
    pub fn num_bins(&self) -> u32 {
        ((self.index_range as u64).div_ceil(self.bin_range)) as u32
    }

    /// Bin owning `index`: `index / bin_range`, computed as a shift.
    pub fn bin_id_of(&self, index: u32) -> u32 {
        debug_assert!(index < self.index_range || self.index_range == 0);
        (index as u64 >> self.bin_range.trailing_zeros()) as u32
    }

    /// First index routed to `bin_id`.
    pub fn bin_start(&self, bin_id: u32) -> u64 {
        bin_id as u64 * self.bin_range
    }

    /// One past the last index routed to `bin_id`, clamped to the range.
    pub fn bin_end(&self, bin_id: u32) -> u64 {
        ((bin_id as u64 + 1) * self.bin_range).min(self.index_range as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bin_id_examples() {
        let cfg = PbConfig::new(32, 8, 1).unwrap();
        assert_eq!(cfg.bin_id_of(17), 2);
        assert_eq!(cfg.bin_id_of(0), 0);
        assert_eq!(cfg.bin_id_of(7), 0);
    }

    #[test]
    fn non_power_of_two_rounds_up() {
        let cfg = PbConfig::new(100, 6, 1).unwrap();
        assert_eq!(cfg.bin_range(), 8);
        assert_eq!(cfg.num_bins(), 13);
    }

    #[test]
    fn bin_count_covers_index_range() {
        let cfg = PbConfig::new(17, 8, 1).unwrap();
        assert_eq!(cfg.num_bins(), 3);
        assert_eq!(cfg.bin_end(2), 17);
    }

    #[test]
    fn default_buffer_holds_eight_tuples() {
        let cfg = PbConfig::new(10, 4, 1).unwrap();
        assert_eq!(cfg.buffer_capacity(), 8);
    }

    #[test]
    fn rejects_degenerate_configs() {
        assert_eq!(PbConfig::new(8, 0, 1), Err(PbConfigError::ZeroBinRange));
        assert_eq!(PbConfig::new(8, 1, 0), Err(PbConfigError::ZeroThreads));
        assert_eq!(
            PbConfig::with_line_size(8, 1, 1, 4),
            Err(PbConfigError::LineTooSmall(4))
        );
    }
}
