//! Exhaustive enumeration and classification of small loops.
//!
//! Loops are enumerated in normalized form: identity 1, so the first row and
//! column read `1, 2, ..., n`. The remaining cells are filled row by row with
//! bitmask bookkeeping, smallest label first, which yields the loops in
//! lexicographic order of their cells. No isomorph rejection happens during
//! the search; the proper D-loops found are grouped into isotopy classes
//! afterwards.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isotopy::isotopy_classes;
use crate::perm::Perm;
use crate::table::{Loop, Side, Table};
use crate::Label;

/// Largest order accepted for exhaustive runs.
pub const MAX_ORDER: usize = 6;

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NotSquare("order must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(())
}

/// Calls `visit` on every normalized loop of order `n` and returns how many
/// there were.
pub fn enumerate_loops(n: usize, mut visit: impl FnMut(&Table)) -> Result<u64> {
    check_order(n)?;
    let mut cells = vec![0 as Label; n * n];
    let mut row_used = vec![0u32; n];
    let mut col_used = vec![0u32; n];
    for k in 0..n {
        cells[k] = k + 1;
        cells[k * n] = k + 1;
        row_used[k] |= 1 << k;
        col_used[k] |= 1 << k;
    }
    let free: Vec<usize> = (1..n).flat_map(|r| (1..n).map(move |c| r * n + c)).collect();
    let mut count = 0;
    fill(n, &free, 0, &mut cells, &mut row_used, &mut col_used, &mut |cells| {
        count += 1;
        visit(&Table::from_cells_unchecked(n, cells.to_vec()));
    });
    Ok(count)
}

fn fill(
    n: usize,
    free: &[usize],
    k: usize,
    cells: &mut [Label],
    row_used: &mut [u32],
    col_used: &mut [u32],
    emit: &mut impl FnMut(&[Label]),
) {
    let Some(&pos) = free.get(k) else {
        emit(cells);
        return;
    };
    let (r, c) = (pos / n, pos % n);
    let mut avail = !(row_used[r] | col_used[c]) & ((1u32 << n) - 1);
    while avail != 0 {
        let bit = avail.trailing_zeros();
        avail &= avail - 1;
        cells[pos] = bit as Label + 1;
        row_used[r] |= 1 << bit;
        col_used[c] |= 1 << bit;
        fill(n, free, k + 1, cells, row_used, col_used, emit);
        row_used[r] &= !(1 << bit);
        col_used[c] &= !(1 << bit);
    }
}

/// Relabels a loop so that its identity becomes 1 by swapping the two
/// labels.
pub fn normalize(l: &Loop) -> Loop {
    let e = l.identity();
    if e == 1 {
        return l.clone();
    }
    let swap = Perm::parse_cycles(&format!("(1 {e})"), l.order()).expect("valid transposition");
    Loop::new(l.table().relabel(&swap).expect("same degree")).expect("relabeling keeps the identity")
}

/// Decided properties of one table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: usize,
    pub is_quasigroup: bool,
    pub identity: Option<Label>,
    pub is_loop: bool,
    pub is_group: bool,
    pub is_ip: bool,
    pub is_d: bool,
    pub is_proper_d: bool,
}

pub fn classify(t: &Table) -> Classification {
    let base = Classification {
        order: t.order(),
        is_quasigroup: true,
        identity: None,
        is_loop: false,
        is_group: false,
        is_ip: false,
        is_d: false,
        is_proper_d: false,
    };
    let Some(l) = t.to_loop() else {
        return base;
    };
    let is_ip = l.is_ip();
    let is_d = l.is_d(Side::Right);
    Classification {
        identity: Some(l.identity()),
        is_loop: true,
        is_group: l.is_group(),
        is_ip,
        is_d,
        is_proper_d: is_d && !is_ip,
        ..base
    }
}

/// Counts of one exhaustive run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusCounts {
    pub order: usize,
    pub loops: u64,
    pub groups: u64,
    pub ip: u64,
    pub d: u64,
    pub proper_d: u64,
}

/// Classifies every normalized loop of order `n`, handing each proper D-loop
/// to `on_proper_d`.
pub fn survey(n: usize, mut on_proper_d: impl FnMut(&Table)) -> Result<CensusCounts> {
    let mut counts = CensusCounts { order: n, ..CensusCounts::default() };
    counts.loops = enumerate_loops(n, |t| {
        let c = classify(t);
        counts.groups += c.is_group as u64;
        counts.ip += c.is_ip as u64;
        counts.d += c.is_d as u64;
        if c.is_proper_d {
            counts.proper_d += 1;
            on_proper_d(t);
        }
    })?;
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub order: usize,
    pub loop_count: u64,
    pub group_count: u64,
    pub ip_count: u64,
    pub d_count: u64,
    pub proper_d_count: u64,
    /// One proper D-loop per isotopy class, each the least of its class.
    pub class_representatives: Vec<Table>,
    /// Size of each class, aligned with `class_representatives`.
    pub class_sizes: Vec<usize>,
}

pub fn proper_d_census(n: usize) -> Result<CensusReport> {
    let mut found = Vec::new();
    let counts = survey(n, |t| found.push(t.clone()))?;
    let classes = isotopy_classes(&found)?;
    let mut reps: Vec<(Table, usize)> = classes.iter().map(|c| (found[c[0]].clone(), c.len())).collect();
    reps.sort();
    let (class_representatives, class_sizes) = reps.into_iter().unzip();
    Ok(CensusReport {
        order: n,
        loop_count: counts.loops,
        group_count: counts.groups,
        ip_count: counts.ip,
        d_count: counts.d,
        proper_d_count: counts.proper_d,
        class_representatives,
        class_sizes,
    })
}

impl CensusCounts {
    pub fn to_text(&self) -> String {
        format!(
            "order: {}\nloops: {}\ngroups: {}\nip_loops: {}\nd_loops: {}\nproper_d_loops: {}\n",
            self.order, self.loops, self.groups, self.ip, self.d, self.proper_d
        )
    }
}

impl CensusReport {
    pub fn counts(&self) -> CensusCounts {
        CensusCounts {
            order: self.order,
            loops: self.loop_count,
            groups: self.group_count,
            ip: self.ip_count,
            d: self.d_count,
            proper_d: self.proper_d_count,
        }
    }

    /// Counts followed by the class summary; also the contents of
    /// `report.txt`.
    pub fn to_text(&self) -> String {
        let mut s = self.counts().to_text();
        s.push_str(&format!("classes: {}\n", self.class_representatives.len()));
        for (k, size) in self.class_sizes.iter().enumerate() {
            s.push_str(&format!("class {}: {} loops, representative d{}_{}.tbl\n", k + 1, size, self.order, k + 1));
        }
        s
    }

    /// Writes `report.txt` and one `d<n>_<k>.tbl` per representative.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.txt"), self.to_text())?;
        for (k, t) in self.class_representatives.iter().enumerate() {
            fs::write(dir.join(format!("d{}_{}.tbl", self.order, k + 1)), t.to_text())?;
        }
        Ok(())
    }
}
