//! One-line permutations, 0-based: `w[p]` is the image of p.

pub fn is_identity(w: &[usize]) -> bool {
    w.iter().enumerate().all(|(p, &v)| p == v)
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// u first, then v.
pub fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    assert_eq!(u.len(), v.len());
    u.iter().map(|&p| v[p]).collect()
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (p, &v) in w.iter().enumerate() {
        out[v] = p;
    }
    out
}

pub fn inversions(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// All permutations of 0..n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next_permutation
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Reduced word for w as a sequence of adjacent swaps, 1-based: entry i
/// swaps positions i-1 and i. Applying the swaps in the returned order
/// to the strand arrangement sorts w to the identity; the word is the
/// smallest reduced word under the greedy first-descent rule.
pub fn first_descent_reduced_word(w: &[usize]) -> Vec<usize> {
    let mut cur = w.to_vec();
    let mut word = Vec::with_capacity(inversions(w));
    while !is_identity(&cur) {
        let i = (1..cur.len()).find(|&i| cur[i - 1] > cur[i]).expect("non-identity has descent");
        word.push(i);
        cur.swap(i - 1, i);
    }
    word
}
