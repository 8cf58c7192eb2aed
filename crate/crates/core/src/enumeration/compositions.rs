use crate::error::{Error, Result};
use crate::tree::Composition;

/// Every ordered tuple of `k` parts summing to `total`, lexicographically
/// ascending. With `allow_zero` unset every part is at least 1.
pub fn enumerate_compositions(total: usize, k: usize, allow_zero: bool) -> Result<Compositions> {
    if k == 0 {
        return Err(Error::OutOfRange("compositions need k >= 1".into()));
    }
    // Positive compositions of `total` are nonnegative compositions of
    // `total - k` shifted up by one.
    let (free, shift) = if allow_zero {
        (Some(total), 0)
    } else {
        (total.checked_sub(k), 1)
    };
    let next = free.map(|free| {
        let mut parts = vec![0; k];
        parts[k - 1] = free;
        parts
    });
    Ok(Compositions {
        next,
        shift,
        allow_zero,
    })
}

#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<usize>>,
    shift: usize,
    allow_zero: bool,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.as_mut()?;
        let out: Vec<usize> = current.iter().map(|&p| p + self.shift).collect();

        // Successor: bump the rightmost non-final position that still has
        // mass to its right, then push all remaining mass to the last slot.
        let k = current.len();
        let mut advanced = false;
        let mut tail = current[k - 1];
        for i in (0..k.saturating_sub(1)).rev() {
            if tail > 0 {
                current[i] += 1;
                for p in &mut current[i + 1..] {
                    *p = 0;
                }
                current[k - 1] = tail - 1;
                advanced = true;
                break;
            }
            tail += current[i];
        }
        if !advanced {
            self.next = None;
        }
        Some(Composition::from_parts_unchecked(out, self.allow_zero))
    }
}
