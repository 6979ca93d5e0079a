//! Hierarchical (month, day, hour) time indexing with a flat-index bijection
//! and window arithmetic for receding-horizon optimization.
//!
//! Months may have different day counts; the calendar is configuration, not
//! hardcoded. Indices are 1-based at the API (matching how schedules are
//! written down), flat hour indices are 0-based.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("month index {value} out of range 1..={max}")]
    MonthOutOfRange { value: u32, max: u32 },
    #[error("day index {value} out of range 1..={max} in month {month}")]
    DayOutOfRange { value: u32, max: u32, month: u32 },
    #[error("hour index {value} out of range 1..={max}")]
    HourOutOfRange { value: u32, max: u32 },
    #[error("flat index {value} out of range 0..{total}")]
    FlatOutOfRange { value: usize, total: usize },
    #[error("grid must have at least one month, one day per month, one hour per day")]
    EmptyAxis,
    #[error("dt_hours must be positive, got {0}")]
    NonPositiveDt(f64),
    #[error("window [{start}, {start}+{len}) exceeds grid of {total} hours")]
    WindowOutOfRange { start: usize, len: usize, total: usize },
}

/// Planning calendar: a sequence of months, each a number of days, each day a
/// fixed number of hours of duration `dt_hours`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    days_per_month: Vec<u32>,
    hours_per_day: u32,
    dt_hours: f64,
    /// Cumulative hour offset of each month start, plus the total at the end.
    #[serde(skip)]
    month_offsets: Vec<usize>,
}

impl TimeGrid {
    pub fn new(days_per_month: Vec<u32>, hours_per_day: u32, dt_hours: f64) -> Result<Self, GridError> {
        if days_per_month.is_empty() || hours_per_day == 0 || days_per_month.iter().any(|&d| d == 0) {
            return Err(GridError::EmptyAxis);
        }
        if !(dt_hours > 0.0) {
            return Err(GridError::NonPositiveDt(dt_hours));
        }
        let mut grid = TimeGrid {
            days_per_month,
            hours_per_day,
            dt_hours,
            month_offsets: Vec::new(),
        };
        grid.rebuild_offsets();
        Ok(grid)
    }

    /// Uniform calendar: `months` months of `days` days of 24 one-hour slots.
    pub fn uniform(months: u32, days: u32) -> Result<Self, GridError> {
        Self::new(vec![days; months as usize], 24, 1.0)
    }

    fn rebuild_offsets(&mut self) {
        let mut offsets = Vec::with_capacity(self.days_per_month.len() + 1);
        let mut acc = 0usize;
        for &d in &self.days_per_month {
            offsets.push(acc);
            acc += d as usize * self.hours_per_day as usize;
        }
        offsets.push(acc);
        self.month_offsets = offsets;
    }

    /// Called after deserialization (serde skips the offset cache).
    pub fn ensure_offsets(&mut self) {
        if self.month_offsets.len() != self.days_per_month.len() + 1 {
            self.rebuild_offsets();
        }
    }

    pub fn months(&self) -> u32 {
        self.days_per_month.len() as u32
    }

    /// Days in 1-based month `m`.
    pub fn days_in(&self, m: u32) -> Result<u32, GridError> {
        self.days_per_month
            .get((m as usize).wrapping_sub(1))
            .copied()
            .ok_or(GridError::MonthOutOfRange { value: m, max: self.months() })
    }

    pub fn hours_per_day(&self) -> u32 {
        self.hours_per_day
    }

    pub fn dt_hours(&self) -> f64 {
        self.dt_hours
    }

    pub fn total_hours(&self) -> usize {
        *self.month_offsets.last().expect("offsets built at construction")
    }

    /// Flat hour offset of the start of 1-based month `m`.
    pub fn month_start(&self, m: u32) -> Result<usize, GridError> {
        if m == 0 || m > self.months() {
            return Err(GridError::MonthOutOfRange { value: m, max: self.months() });
        }
        Ok(self.month_offsets[m as usize - 1])
    }

    /// Flat hour offset of the start of 1-based day `d` of month `m`.
    pub fn day_start(&self, m: u32, d: u32) -> Result<usize, GridError> {
        let days = self.days_in(m)?;
        if d == 0 || d > days {
            return Err(GridError::DayOutOfRange { value: d, max: days, month: m });
        }
        Ok(self.month_offsets[m as usize - 1] + (d as usize - 1) * self.hours_per_day as usize)
    }

    /// Bijection from 1-based (month, day, hour) onto `0..total_hours`.
    pub fn flat(&self, m: u32, d: u32, t: u32) -> Result<usize, GridError> {
        let base = self.day_start(m, d)?;
        if t == 0 || t > self.hours_per_day {
            return Err(GridError::HourOutOfRange { value: t, max: self.hours_per_day });
        }
        Ok(base + t as usize - 1)
    }

    /// Inverse of [`flat`](Self::flat).
    pub fn unflat(&self, i: usize) -> Result<(u32, u32, u32), GridError> {
        let total = self.total_hours();
        if i >= total {
            return Err(GridError::FlatOutOfRange { value: i, total });
        }
        // month_offsets is sorted; find the month containing i.
        let m = match self.month_offsets.binary_search(&i) {
            Ok(pos) if pos < self.days_per_month.len() => pos,
            Ok(pos) => pos - 1,
            Err(pos) => pos - 1,
        };
        let within = i - self.month_offsets[m];
        let d = within / self.hours_per_day as usize;
        let t = within % self.hours_per_day as usize;
        Ok((m as u32 + 1, d as u32 + 1, t as u32 + 1))
    }

    /// Day index (0-based over the whole horizon) containing flat hour `i`.
    pub fn day_of(&self, i: usize) -> Result<usize, GridError> {
        let total = self.total_hours();
        if i >= total {
            return Err(GridError::FlatOutOfRange { value: i, total });
        }
        Ok(i / self.hours_per_day as usize)
    }

    pub fn total_days(&self) -> usize {
        self.days_per_month.iter().map(|&d| d as usize).sum()
    }

    /// Window covering `[from, total_hours)`: the shrinking horizon of the
    /// receding optimization (full horizon at day 1, one day less per day).
    pub fn remaining_window(&self, from: usize) -> Result<Window, GridError> {
        let total = self.total_hours();
        if from >= total {
            return Err(GridError::FlatOutOfRange { value: from, total });
        }
        Ok(Window { start: from, len: total - from })
    }

    pub fn window(&self, start: usize, len: usize) -> Result<Window, GridError> {
        if start + len > self.total_hours() || len == 0 {
            return Err(GridError::WindowOutOfRange { start, len, total: self.total_hours() });
        }
        Ok(Window { start, len })
    }

    pub fn full_window(&self) -> Window {
        Window { start: 0, len: self.total_hours() }
    }

    /// Months (1-based) that intersect the window, with the intersected flat
    /// hour range of each.
    pub fn months_in_window(&self, w: Window) -> Vec<(u32, std::ops::Range<usize>)> {
        let mut out = Vec::new();
        for m in 1..=self.months() {
            let lo = self.month_offsets[m as usize - 1];
            let hi = self.month_offsets[m as usize];
            let a = lo.max(w.start);
            let b = hi.min(w.end());
            if a < b {
                out.push((m, a..b));
            }
        }
        out
    }
}

/// Contiguous range of flat hours within one grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub start: usize,
    pub len: usize,
}

impl Window {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    /// Flat hour indices covered by the window.
    pub fn hours(&self) -> std::ops::Range<usize> {
        self.start..self.end()
    }

    /// Position of flat hour `i` within the window.
    pub fn offset_of(&self, i: usize) -> Option<usize> {
        if i >= self.start && i < self.end() {
            Some(i - self.start)
        } else {
            None
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.offset_of(i).is_some()
    }
}
