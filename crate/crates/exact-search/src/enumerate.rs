use crate::SearchError;
use apcore::{ApSet, SearchState, MAX_N};

/// Large 3-free subsets of `[m]` that contain both 1 and `m`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub sets: Vec<ApSet>,
    /// False when `limit` cut the enumeration short.
    pub complete: bool,
    pub nodes: u64,
}

struct Walk<'a> {
    m: usize,
    min_size: u64,
    sz: &'a [u64],
    limit: usize,
    out: Vec<ApSet>,
    nodes: u64,
    full: bool,
}

impl Walk<'_> {
    fn go(&mut self, st: SearchState) {
        self.nodes += 1;
        if self.out.len() >= self.limit {
            self.full = true;
            return;
        }
        let len = st.len();
        if st.is_forbidden(self.m) {
            return;
        }
        if len + 1 == self.m {
            // the last position is always taken
            if st.ones() as u64 + 1 >= self.min_size {
                let done = st.extend_unchecked(true);
                self.out.push(ApSet::new(self.m as u64, done.chosen()).expect("engine keeps sets 3-free"));
            }
            return;
        }
        // positions len+1 .. m-1 may add at most sz(m-1-len); m adds one
        let room = self.sz[self.m - 1 - len].min(st.free_count() as u64 - 1);
        if st.ones() as u64 + room + 1 < self.min_size {
            return;
        }
        if st.can_take() {
            self.go(st.extend_unchecked(true));
        }
        self.go(st.extend_unchecked(false));
    }
}

/// Every 3-free subset of `[m]` with `1` and `m` and at least `min_size`
/// elements, in lexicographic order of characteristic vectors (ones first),
/// stopping after `limit` sets.
///
/// `sz[i]` must bound `sz(i)` from above for `i < m`.
pub fn enumerate_tight(m: usize, min_size: u64, sz: &[u64], limit: usize) -> Result<Enumeration, SearchError> {
    if m == 0 || m > MAX_N {
        return Err(SearchError::OutOfRange(m));
    }
    if sz.len() < m {
        return Err(SearchError::MissingTable { n: m, have: sz.len() });
    }
    if m == 1 {
        let sets = if min_size <= 1 { vec![ApSet::new(1, vec![1]).unwrap()] } else { vec![] };
        return Ok(Enumeration { sets, complete: true, nodes: 1 });
    }
    let st = SearchState::new(m)?.extend_unchecked(true);
    let mut w = Walk { m, min_size, sz, limit, out: Vec::new(), nodes: 0, full: false };
    w.go(st);
    Ok(Enumeration { sets: w.out, complete: !w.full, nodes: w.nodes })
}
