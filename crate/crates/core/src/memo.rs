use alloc::vec::Vec;

use spin::RwLock;

/// Append-only cache of a sequence defined by seeds and a step rule.
///
/// Readers always observe a consistent prefix; growth takes the write lock.
pub(crate) struct Memo<T> {
    cells: RwLock<Vec<T>>,
    seeds: fn() -> Vec<T>,
    step: fn(&[T]) -> T,
}

impl<T: Clone> Memo<T> {
    pub(crate) const fn new(seeds: fn() -> Vec<T>, step: fn(&[T]) -> T) -> Self {
        Memo {
            cells: RwLock::new(Vec::new()),
            seeds,
            step,
        }
    }

    pub(crate) fn get(&self, n: usize) -> T {
        if let Some(v) = self.cells.read().get(n) {
            return v.clone();
        }
        let mut cells = self.cells.write();
        if cells.is_empty() {
            *cells = (self.seeds)();
        }
        while cells.len() <= n {
            let next = (self.step)(&cells);
            cells.push(next);
        }
        cells[n].clone()
    }
}
