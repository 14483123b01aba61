//! The two PB phases. Binning gives each worker a private row of bins and
//! coalescing buffers, so the phase runs without cross-thread
//! synchronization; a join separates it from bin-read.

use crate::bins::{Bin, BinSet};
use crate::buffer::CoalescingBuffer;
use crate::config::PbConfig;
use crate::{UpdateTuple, SW_BINNING_OPS_PER_UPDATE};

/// Counters from one binning phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BinningStats {
    /// Tuples submitted (and therefore binned).
    pub tuples: u64,
    /// Coalescing-buffer flushes, counting the partial flushes at phase end.
    pub buffer_flushes: u64,
    /// Abstract instruction estimate for the software binning loop.
    pub instr_ops: u64,
}

/// Routes every update into `bins[tid][index / bin_range]` through
/// cacheline-sized coalescing buffers. The update stream is split into
/// contiguous per-thread blocks; within one (thread, bin) pair tuples keep
/// submission order. All buffers, full or partial, are flushed before return.
pub fn binning_phase(updates: &[UpdateTuple], cfg: &PbConfig) -> (BinSet, BinningStats) {
    let num_bins = cfg.num_bins();
    let mut bins = BinSet::new(cfg.num_threads(), num_bins);

    let flushes = if cfg.num_threads() == 1 {
        let row = bins_row_of(updates, cfg);
        bins.set_row(0, row.0);
        row.1
    } else {
        let chunk = updates.len().div_ceil(cfg.num_threads()).max(1);
        let rows: Vec<(Vec<Bin>, u64)> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..cfg.num_threads())
                .map(|tid| {
                    let block = updates
                        .get(tid * chunk..)
                        .map(|rest| &rest[..rest.len().min(chunk)])
                        .unwrap_or(&[]);
                    s.spawn(move || bins_row_of(block, cfg))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut total_flushes = 0;
        for (tid, (row, f)) in rows.into_iter().enumerate() {
            bins.set_row(tid, row);
            total_flushes += f;
        }
        total_flushes
    };

    let stats = BinningStats {
        tuples: updates.len() as u64,
        buffer_flushes: flushes,
        instr_ops: updates.len() as u64 * SW_BINNING_OPS_PER_UPDATE,
    };
    debug_assert_eq!(bins.total_tuples(), stats.tuples);
    (bins, stats)
}

/// One worker's binning loop over its private row.
fn bins_row_of(block: &[UpdateTuple], cfg: &PbConfig) -> (Vec<Bin>, u64) {
    let num_bins = cfg.num_bins() as usize;
    let mut row: Vec<Bin> = (0..num_bins).map(|_| Bin::default()).collect();
    let mut buffers: Vec<CoalescingBuffer> = (0..num_bins)
        .map(|_| CoalescingBuffer::new(cfg.buffer_capacity()))
        .collect();
    let mut flushes = 0u64;

    for &t in block {
        let bin_id = cfg.bin_id_of(t.index) as usize;
        if buffers[bin_id].push(t) {
            buffers[bin_id].flush_into(&mut row[bin_id]);
            flushes += 1;
        }
    }
    // Partial buffers still hold tuples at phase end.
    for (bin_id, buf) in buffers.iter_mut().enumerate() {
        if !buf.is_empty() {
            buf.flush_into(&mut row[bin_id]);
            flushes += 1;
        }
    }
    (row, flushes)
}

/// Consumes every binned tuple exactly once, bin-id-major, then thread id,
/// then intra-bin FIFO order — the deterministic single-worker schedule.
/// Workloads that process bins in parallel iterate [`BinSet::tuples_of_bin`]
/// per bin themselves; tuples of one bin must stay with one worker.
pub fn bin_read_phase<F: FnMut(UpdateTuple)>(bins: &BinSet, cfg: &PbConfig, mut apply: F) {
    debug_assert_eq!(bins.num_bins(), cfg.num_bins());
    for bin_id in 0..bins.num_bins() {
        for t in bins.tuples_of_bin(bin_id) {
            apply(*t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn tuples(pairs: &[(u32, u32)]) -> Vec<UpdateTuple> {
        pairs.iter().map(|&(i, v)| UpdateTuple::new(i, v)).collect()
    }

    #[test]
    fn single_bin_degenerate_keeps_order() {
        let ups = tuples(&[(2, 10), (0, 11), (1, 12)]);
        let cfg = PbConfig::new(3, 4, 1).unwrap();
        let (bins, stats) = binning_phase(&ups, &cfg);
        assert_eq!(bins.num_bins(), 1);
        let got: Vec<UpdateTuple> = bins.tuples_of_bin(0).copied().collect();
        assert_eq!(got, ups);
        assert_eq!(stats.tuples, 3);
        assert_eq!(stats.buffer_flushes, 1);
    }

    #[test]
    fn splits_by_bin_range() {
        let ups = tuples(&[(0, 1), (8, 2), (1, 3)]);
        let cfg = PbConfig::new(16, 8, 1).unwrap();
        let (bins, _) = binning_phase(&ups, &cfg);
        let b0: Vec<u32> = bins.tuples_of_bin(0).map(|t| t.index).collect();
        let b1: Vec<u32> = bins.tuples_of_bin(1).map(|t| t.index).collect();
        assert_eq!(b0, vec![0, 1]);
        assert_eq!(b1, vec![8]);
    }

    #[test]
    fn full_buffers_flush_once() {
        let ups: Vec<UpdateTuple> = (0..8).map(|v| UpdateTuple::new(0, v)).collect();
        let cfg = PbConfig::new(4, 4, 1).unwrap();
        let (bins, stats) = binning_phase(&ups, &cfg);
        assert_eq!(bins.tuples_in_bin(0), 8);
        assert_eq!(stats.buffer_flushes, 1);
    }

    #[test]
    fn random_binning_matches_partition_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for &threads in &[1usize, 3] {
            let n = 100_000;
            let index_range = 1 << 12;
            let ups: Vec<UpdateTuple> = (0..n)
                .map(|v| UpdateTuple::new(rng.random_range(0..index_range), v))
                .collect();
            let cfg = PbConfig::new(index_range, 64, threads).unwrap();
            let (bins, stats) = binning_phase(&ups, &cfg);
            assert_eq!(stats.tuples, n as u64);
            assert_eq!(stats.instr_ops, n as u64 * SW_BINNING_OPS_PER_UPDATE);

            // Brute-force partition: multiset per bin.
            let mut oracle: Vec<HashMap<(u32, u32), usize>> =
                vec![HashMap::new(); cfg.num_bins() as usize];
            for t in &ups {
                *oracle[(t.index / 64) as usize]
                    .entry((t.index, t.value))
                    .or_insert(0) += 1;
            }
            for bin_id in 0..cfg.num_bins() {
                let mut got = HashMap::new();
                for t in bins.tuples_of_bin(bin_id) {
                    *got.entry((t.index, t.value)).or_insert(0usize) += 1;
                }
                assert_eq!(got, oracle[bin_id as usize]);
            }
        }
    }

    #[test]
    fn bin_read_visits_bins_in_order() {
        let ups = tuples(&[(9, 1), (0, 2)]);
        let cfg = PbConfig::new(16, 8, 1).unwrap();
        let (bins, _) = binning_phase(&ups, &cfg);
        let mut seen = Vec::new();
        bin_read_phase(&bins, &cfg, |t| seen.push(t));
        assert_eq!(seen, tuples(&[(0, 2), (9, 1)]));
    }

    #[test]
    fn bin_read_on_empty_set_never_calls_back() {
        let cfg = PbConfig::new(16, 8, 2).unwrap();
        let (bins, _) = binning_phase(&[], &cfg);
        let mut calls = 0;
        bin_read_phase(&bins, &cfg, |_| calls += 1);
        assert_eq!(calls, 0);
    }

    #[test]
    fn callback_multiset_matches_submissions() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let ups: Vec<UpdateTuple> = (0..5000)
            .map(|_| UpdateTuple::new(rng.random_range(0..512), rng.random_range(0..100)))
            .collect();
        let cfg = PbConfig::new(512, 16, 4).unwrap();
        let (bins, _) = binning_phase(&ups, &cfg);

        let mut submitted: HashMap<(u32, u32), usize> = HashMap::new();
        for t in &ups {
            *submitted.entry((t.index, t.value)).or_insert(0) += 1;
        }
        let mut seen: HashMap<(u32, u32), usize> = HashMap::new();
        let mut count = 0u64;
        bin_read_phase(&bins, &cfg, |t| {
            *seen.entry((t.index, t.value)).or_insert(0) += 1;
            count += 1;
        });
        assert_eq!(count, ups.len() as u64);
        assert_eq!(seen, submitted);
    }

    #[test]
    fn pass_through_with_one_thread_and_one_bin() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let ups: Vec<UpdateTuple> = (0..1000)
            .map(|_| UpdateTuple::new(rng.random_range(0..256), rng.random_range(0..1000)))
            .collect();
        let cfg = PbConfig::new(256, 256, 1).unwrap();
        let (bins, _) = binning_phase(&ups, &cfg);
        let mut replay = Vec::new();
        bin_read_phase(&bins, &cfg, |t| replay.push(t));
        assert_eq!(replay, ups);
    }
}
