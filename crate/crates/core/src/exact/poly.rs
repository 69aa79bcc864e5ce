use num_bigint::BigInt;

/// `d + 1` pairwise non-proportional points of Z². A binary form of degree
/// `d` that vanishes on all of them is identically zero.
pub fn homogeneous_grid(d: usize) -> Vec<[BigInt; 2]> {
    let mut pts = vec![[BigInt::from(1), BigInt::from(0)], [BigInt::from(0), BigInt::from(1)]];
    for t in 1..d {
        pts.push([BigInt::from(1), BigInt::from(t)]);
    }
    pts.truncate(d + 1);
    pts
}

/// Checks a polynomial identity that is bihomogeneous of degree
/// `degrees[g]` in the g-th Z² variable group by testing it on the tensor
/// grid of [`homogeneous_grid`] points. Returns the first failing point.
pub fn find_grid_counterexample(
    degrees: &[usize],
    mut holds: impl FnMut(&[[BigInt; 2]]) -> bool,
) -> Option<Vec<[BigInt; 2]>> {
    let grids: Vec<Vec<[BigInt; 2]>> = degrees.iter().map(|&d| homogeneous_grid(d)).collect();
    let mut idx = vec![0usize; degrees.len()];
    loop {
        let point: Vec<[BigInt; 2]> = idx.iter().zip(&grids).map(|(&i, g)| g[i].clone()).collect();
        if !holds(&point) {
            return Some(point);
        }
        let mut k = degrees.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < grids[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
