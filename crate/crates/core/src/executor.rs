//! Fixed-capacity task runner for independent point products.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Runs independent tasks on at most `capacity` threads.
///
/// Results come back in task order, never completion order, so callers see
/// the same output for every capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Executor {
    capacity: usize,
}

impl Executor {
    pub fn new(capacity: usize) -> Self {
        Executor {
            capacity: capacity.max(1),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Applies `f` to every task and joins all of them before returning.
    pub fn run<T, R, F>(&self, tasks: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync,
    {
        let workers = self.capacity.min(tasks.len());
        if workers <= 1 {
            return tasks.iter().map(&f).collect();
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<R>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
        let work = || loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            if i >= tasks.len() {
                break;
            }
            let r = f(&tasks[i]);
            *slots[i].lock().expect("result slot poisoned") = Some(r);
        };
        std::thread::scope(|s| {
            for _ in 1..workers {
                s.spawn(work);
            }
            work();
        });
        slots
            .into_iter()
            .map(|m| {
                m.into_inner()
                    .expect("result slot poisoned")
                    .expect("every task ran")
            })
            .collect()
    }
}
