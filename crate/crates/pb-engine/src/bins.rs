use crate::UpdateTuple;

/// Tuples per bin-storage chunk: 64 KiB of 8-byte tuples. Bins grow as
/// chained chunks so binning stays single-pass with no pre-counting.
pub const BIN_CHUNK_TUPLES: usize = 64 * 1024 / crate::TUPLE_BYTES;

/// Append-only tuple storage for one (thread, bin) pair.
#[derive(Debug, Clone, Default)]
pub struct Bin {
    chunks: Vec<Vec<UpdateTuple>>,
}

impl Bin {
    pub fn len(&self) -> usize {
        self.chunks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.chunks.iter().all(Vec::is_empty)
    }

    pub fn iter(&self) -> impl Iterator<Item = &UpdateTuple> {
        self.chunks.iter().flatten()
    }

    fn push(&mut self, t: UpdateTuple) {
        match self.chunks.last_mut() {
            Some(chunk) if chunk.len() < BIN_CHUNK_TUPLES => chunk.push(t),
            _ => {
                let mut chunk = Vec::with_capacity(BIN_CHUNK_TUPLES);
                chunk.push(t);
                self.chunks.push(chunk);
            }
        }
    }
}

impl Extend<UpdateTuple> for Bin {
    fn extend<I: IntoIterator<Item = UpdateTuple>>(&mut self, iter: I) {
        for t in iter {
            self.push(t);
        }
    }
}

/// All bins of one binning run: `bins[tid][bin_id]`, each FIFO with respect
/// to its thread's submission order.
#[derive(Debug, Clone)]
pub struct BinSet {
    rows: Vec<Vec<Bin>>,
    num_bins: u32,
}

impl BinSet {
    pub(crate) fn new(num_threads: usize, num_bins: u32) -> Self {
        BinSet {
            rows: (0..num_threads)
                .map(|_| (0..num_bins).map(|_| Bin::default()).collect())
                .collect(),
            num_bins,
        }
    }

    pub fn num_threads(&self) -> usize {
        self.rows.len()
    }

    pub fn num_bins(&self) -> u32 {
        self.num_bins
    }

    pub fn bin(&self, tid: usize, bin_id: u32) -> &Bin {
        &self.rows[tid][bin_id as usize]
    }

    pub(crate) fn bin_mut(&mut self, tid: usize, bin_id: u32) -> &mut Bin {
        &mut self.rows[tid][bin_id as usize]
    }

    pub(crate) fn set_row(&mut self, tid: usize, row: Vec<Bin>) {
        debug_assert_eq!(row.len(), self.num_bins as usize);
        self.rows[tid] = row;
    }

    /// Tuples of one bin id across all threads, in bin-read order
    /// (thread-major, intra-bin FIFO).
    pub fn tuples_of_bin(&self, bin_id: u32) -> impl Iterator<Item = &UpdateTuple> {
        self.rows.iter().flat_map(move |row| row[bin_id as usize].iter())
    }

    pub fn tuples_in_bin(&self, bin_id: u32) -> usize {
        self.rows.iter().map(|row| row[bin_id as usize].len()).sum()
    }

    pub fn total_tuples(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|row| row.iter())
            .map(|b| b.len() as u64)
            .sum()
    }
}
