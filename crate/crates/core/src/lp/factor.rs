//! Product-form basis factorization for the revised simplex.
//!
//! The basis inverse is held as a sequence of elementary eta transforms.
//! Reinversion rebuilds the eta file from the basis columns, processing them
//! in a fill-reducing order (singleton-row peel first) and choosing each
//! pivot row by partial pivoting among still-unassigned rows. Scheduling
//! bases are near-staircase, so this keeps the file short.

/// One elementary transform: the result `w = B_prev^-1 a` of bringing column
/// `a` into the basis at `pivot_row`.
#[derive(Debug, Clone)]
pub(crate) struct Eta {
    pub pivot_row: usize,
    pub pivot_val: f64,
    /// Off-pivot nonzeros of `w`.
    pub entries: Vec<(usize, f64)>,
}

impl Eta {
    /// FTRAN step: overwrites `v` with `E v` where `E = I - (w - e_r) e_r^T / w_r`.
    #[inline]
    pub fn apply(&self, v: &mut [f64]) {
        let vr = v[self.pivot_row];
        if vr == 0.0 {
            return;
        }
        let t = vr / self.pivot_val;
        for &(i, wi) in &self.entries {
            v[i] -= wi * t;
        }
        v[self.pivot_row] = t;
    }

    /// BTRAN step: overwrites `v` with `E^T v`; only the pivot row changes.
    #[inline]
    pub fn apply_transposed(&self, v: &mut [f64]) {
        let mut s = self.pivot_val * v[self.pivot_row];
        for &(i, wi) in &self.entries {
            s += wi * v[i];
        }
        let vr = v[self.pivot_row];
        v[self.pivot_row] = vr - (s - vr) / self.pivot_val;
    }
}

#[derive(Debug)]
pub(crate) struct SingularBasis {
    /// Basis positions (rows) that could not be assigned a pivot.
    pub unassigned_rows: Vec<usize>,
}

/// Eta-file representation of the basis inverse.
#[derive(Debug, Default)]
pub(crate) struct EtaFile {
    etas: Vec<Eta>,
    /// Number of etas produced by the last reinversion (the rest come from
    /// simplex pivots).
    base_len: usize,
}

impl EtaFile {
    pub fn ftran(&self, v: &mut [f64]) {
        for eta in &self.etas {
            eta.apply(v);
        }
    }

    pub fn btran(&self, v: &mut [f64]) {
        for eta in self.etas.iter().rev() {
            eta.apply_transposed(v);
        }
    }

    pub fn push_pivot(&mut self, eta: Eta) {
        self.etas.push(eta);
    }

    /// Number of pivots applied since the last reinversion.
    pub fn pivots_since_refactor(&self) -> usize {
        self.etas.len() - self.base_len
    }

    pub fn nnz(&self) -> usize {
        self.etas.iter().map(|e| e.entries.len() + 1).sum()
    }

    /// Rebuilds the eta file from scratch for the given basis columns.
    ///
    /// `columns(c)` yields the sparse constraint-matrix column of basis
    /// member `c`. On success the basis is re-ordered: `row_owner[r]` names
    /// the basis member pivoting at row `r`.
    pub fn refactor(
        &mut self,
        m: usize,
        basis: &[usize],
        columns: impl Fn(usize, &mut Vec<(usize, f64)>),
        row_owner: &mut Vec<usize>,
    ) -> Result<(), SingularBasis> {
        debug_assert_eq!(basis.len(), m);
        self.etas.clear();
        self.base_len = 0;
        row_owner.clear();
        row_owner.resize(m, usize::MAX);
        if m == 0 {
            return Ok(());
        }

        let mut col_pattern: Vec<Vec<(usize, f64)>> = Vec::with_capacity(m);
        let mut scratch = Vec::new();
        for &c in basis {
            scratch.clear();
            columns(c, &mut scratch);
            col_pattern.push(scratch.clone());
        }
        let order = reinversion_order(&col_pattern, m);

        let mut assigned = vec![false; m];
        let mut w = vec![0.0f64; m];
        let mut touched: Vec<usize> = Vec::new();
        let mut unassigned_rows = Vec::new();

        for &ci in &order {
            // Load the raw column and run it through the etas built so far.
            touched.clear();
            for &(r, val) in &col_pattern[ci] {
                if w[r] == 0.0 {
                    touched.push(r);
                }
                w[r] += val;
            }
            for eta in &self.etas {
                let vr = w[eta.pivot_row];
                if vr == 0.0 {
                    continue;
                }
                let t = vr / eta.pivot_val;
                for &(i, wi) in &eta.entries {
                    if w[i] == 0.0 && wi * t != 0.0 {
                        touched.push(i);
                    }
                    w[i] -= wi * t;
                }
                w[eta.pivot_row] = t;
            }
            // Partial pivoting among unassigned rows.
            let mut best: Option<(usize, f64)> = None;
            for &r in &touched {
                if !assigned[r] {
                    let a = w[r].abs();
                    if best.map_or(true, |(_, b)| a > b) && a > 0.0 {
                        best = Some((r, a));
                    }
                }
            }
            match best {
                Some((r, mag)) if mag >= 1e-11 => {
                    let entries: Vec<(usize, f64)> = touched
                        .iter()
                        .copied()
                        .filter(|&i| i != r && w[i] != 0.0)
                        .map(|i| (i, w[i]))
                        .collect();
                    let is_trivial = entries.is_empty() && (w[r] - 1.0).abs() < 1e-14;
                    if !is_trivial {
                        self.etas.push(Eta { pivot_row: r, pivot_val: w[r], entries });
                    }
                    assigned[r] = true;
                    row_owner[r] = basis[ci];
                }
                _ => unassigned_rows.push(ci),
            }
            for &i in &touched {
                w[i] = 0.0;
            }
        }

        if !unassigned_rows.is_empty() {
            let rows = assigned
                .iter()
                .enumerate()
                .filter(|(_, &a)| !a)
                .map(|(r, _)| r)
                .collect();
            return Err(SingularBasis { unassigned_rows: rows });
        }
        self.base_len = self.etas.len();
        Ok(())
    }
}

/// Processing order for reinversion: repeatedly peel columns that own a
/// singleton row (those pivot with no fill), falling back to the sparsest
/// remaining column.
fn reinversion_order(cols: &[Vec<(usize, f64)>], m: usize) -> Vec<usize> {
    let k = cols.len();
    let mut row_cnt = vec![0usize; m];
    let mut row_cols: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, col) in cols.iter().enumerate() {
        for &(r, _) in col {
            row_cnt[r] += 1;
            row_cols[r].push(ci);
        }
    }
    let mut alive = vec![true; k];
    let mut row_free = vec![true; m];
    let mut live_cnt: Vec<usize> = cols.iter().map(|c| c.len()).collect();
    let mut queue: Vec<usize> = (0..m).filter(|&r| row_cnt[r] == 1).collect();
    let mut order = Vec::with_capacity(k);

    let mut remove_col = |ci: usize,
                          pivot: usize,
                          alive: &mut Vec<bool>,
                          row_free: &mut Vec<bool>,
                          row_cnt: &mut Vec<usize>,
                          queue: &mut Vec<usize>,
                          live_cnt: &mut Vec<usize>| {
        alive[ci] = false;
        row_free[pivot] = false;
        for &(r, _) in &cols[ci] {
            if row_free[r] {
                row_cnt[r] -= 1;
                if row_cnt[r] == 1 {
                    queue.push(r);
                }
            }
        }
        // live_cnt of other columns touching the pivot row drops.
        for &cj in &row_cols[pivot] {
            if alive[cj] {
                live_cnt[cj] = live_cnt[cj].saturating_sub(1);
            }
        }
    };

    while order.len() < k {
        let mut picked = None;
        while let Some(r) = queue.pop() {
            if row_free[r] && row_cnt[r] == 1 {
                if let Some(&ci) = row_cols[r].iter().find(|&&ci| alive[ci]) {
                    picked = Some((ci, r));
                    break;
                }
            }
        }
        let (ci, pivot) = match picked {
            Some(p) => p,
            None => {
                // Sparsest remaining column; its structurally best pivot is
                // the free row with the fewest competing columns.
                let ci = (0..k)
                    .filter(|&c| alive[c])
                    .min_by_key(|&c| (live_cnt[c], c))
                    .expect("a live column remains");
                let pivot = cols[ci]
                    .iter()
                    .map(|&(r, _)| r)
                    .filter(|&r| row_free[r])
                    .min_by_key(|&r| row_cnt[r]);
                match pivot {
                    Some(p) => (ci, p),
                    None => {
                        // Structurally singular; emit anyway and let the
                        // numeric phase report it.
                        order.push(ci);
                        alive[ci] = false;
                        continue;
                    }
                }
            }
        };
        order.push(ci);
        remove_col(ci, pivot, &mut alive, &mut row_free, &mut row_cnt, &mut queue, &mut live_cnt);
    }
    order
}
