//! Set partitions of {0, .., r-1}, canonically ordered by least block element.

/// All partitions, each a list of blocks, blocks and block lists sorted by
/// least element. Bell-number growth; callers cap r.
pub fn set_partitions(r: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn recurse(next: usize, r: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next == r {
            out.push(current.clone());
            return;
        }
        for b in 0..current.len() {
            current[b].push(next);
            recurse(next + 1, r, current, out);
            current[b].pop();
        }
        current.push(vec![next]);
        recurse(next + 1, r, current, out);
        current.pop();
    }
    recurse(0, r, &mut current, &mut out);
    out
}
