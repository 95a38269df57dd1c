use apcore::SzTable;

/// Upper bounds `u[0..=n]` from `u(n) = min(table(n), min u(n1) + u(n2))`.
///
/// Only splits with one part inside the table are tried. That loses
/// nothing: a part outside the table is itself best split with a piece
/// inside it, and subadditivity lets that piece move to the other side.
pub fn splitting_table(table: &SzTable, n: u64) -> Vec<u64> {
    let t = table.max_n().min(n);
    let mut u = vec![0u64; n as usize + 1];
    for i in 1..=n {
        let mut best = if i <= t { table.upper(i).unwrap() } else { u64::MAX };
        for k in 1..=t.min(i - 1) {
            let cand = u[(i - k) as usize] + table.upper(k).unwrap();
            best = best.min(cand);
        }
        if best == u64::MAX {
            best = i;
        }
        u[i as usize] = best;
    }
    u
}

/// The splitting bound at `n`.
pub fn splitting_upper(table: &SzTable, n: u64) -> u64 {
    splitting_table(table, n)[n as usize]
}

/// `round(n * sz(m) / m)`: the density of the best set in `[m]` carried
/// over to `[n]`. This is the figure tabulated beside the Roth bounds; it
/// is a heuristic estimate, not a proven bound, unless `m` divides `n`.
pub fn density_upper(table: &SzTable, n: u64, m: u64) -> Option<u64> {
    let s = table.upper(m)?;
    Some((2 * n * s + m) / (2 * m))
}
