use crate::UpdateTuple;

/// Cacheline-sized staging buffer in front of one bin. Tuples accumulate
/// here and are written out a full line at a time.
#[derive(Debug, Clone)]
pub struct CoalescingBuffer {
    slots: Vec<UpdateTuple>,
    capacity: usize,
}

impl CoalescingBuffer {
    pub fn new(capacity: usize) -> Self {
        CoalescingBuffer {
            slots: Vec::with_capacity(capacity),
            capacity,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn occupancy(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Appends a tuple; returns true when the buffer just became full and
    /// must be flushed.
    pub fn push(&mut self, t: UpdateTuple) -> bool {
        debug_assert!(self.slots.len() < self.capacity);
        self.slots.push(t);
        self.slots.len() == self.capacity
    }

    /// Empties the buffer, handing its contents to `out`.
    pub fn flush_into(&mut self, out: &mut impl Extend<UpdateTuple>) {
        out.extend(self.slots.drain(..));
    }

    pub fn slots(&self) -> &[UpdateTuple] {
        &self.slots
    }
}
