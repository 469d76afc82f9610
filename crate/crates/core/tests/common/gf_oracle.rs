//! Classical linear algebra over GF(p) by Gaussian elimination and brute
//! force, on coordinate vectors.

pub fn coords(p: usize, n: usize, index: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    let mut x = index;
    for _ in 0..n {
        out.push(x % p);
        x /= p;
    }
    out
}

pub fn index(p: usize, c: &[usize]) -> usize {
    c.iter().enumerate().map(|(i, &x)| x * p.pow(i as u32)).sum()
}

fn inverse(p: usize, a: usize) -> usize {
    (1..p).find(|&b| a * b % p == 1).expect("non-zero element of a prime field")
}

/// Rank of the rows by row reduction mod p.
pub fn rank(p: usize, rows: &[Vec<usize>]) -> usize {
    let mut m: Vec<Vec<usize>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pivot);
        let inv = inverse(p, m[r][c]);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn dependent(p: usize, rows: &[Vec<usize>]) -> bool {
    rank(p, rows) < rows.len()
}

/// All linear combinations of the rows, as vector indices.
pub fn span(p: usize, n: usize, rows: &[Vec<usize>]) -> Vec<usize> {
    let mut out = vec![false; p.pow(n as u32)];
    let k = rows.len();
    for t in 0..p.pow(k as u32) {
        let coeffs = coords(p, k, t);
        let v: Vec<usize> = (0..n).map(|j| (0..k).map(|i| coeffs[i] * rows[i][j]).sum::<usize>() % p).collect();
        out[index(p, &v)] = true;
    }
    (0..out.len()).filter(|&i| out[i]).collect()
}
