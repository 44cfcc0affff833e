//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).

/// `adjacency[left]` lists the right vertices adjacent to `left`.
/// Returns, for each left vertex, its matched right vertex if any.
///
/// Left vertices are processed in order and adjacency lists are tried in
/// the given order, so the result is deterministic.
pub fn maximum_matching(adjacency: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut right_owner: Vec<Option<usize>> = vec![None; right_count];
    for left in 0..adjacency.len() {
        let mut visited = vec![false; right_count];
        augment(left, adjacency, &mut right_owner, &mut visited);
    }
    let mut matched = vec![None; adjacency.len()];
    for (right, owner) in right_owner.iter().enumerate() {
        if let Some(left) = owner {
            matched[*left] = Some(right);
        }
    }
    matched
}

fn augment(left: usize, adjacency: &[Vec<usize>], right_owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &right in &adjacency[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let free = match right_owner[right] {
            None => true,
            Some(other) => augment(other, adjacency, right_owner, visited),
        };
        if free {
            right_owner[right] = Some(left);
            return true;
        }
    }
    false
}

/// Whether a matching saturating every left vertex exists, by trying all
/// injective choices. Exponential; only for re-verifying a reported
/// failure of [`maximum_matching`].
pub fn perfect_matching_exists_exhaustive(adjacency: &[Vec<usize>], right_count: usize) -> bool {
    fn go(i: usize, adjacency: &[Vec<usize>], used: &mut [bool]) -> bool {
        if i == adjacency.len() {
            return true;
        }
        for &r in &adjacency[i] {
            if !used[r] {
                used[r] = true;
                if go(i + 1, adjacency, used) {
                    return true;
                }
                used[r] = false;
            }
        }
        false
    }
    go(0, adjacency, &mut vec![false; right_count])
}
