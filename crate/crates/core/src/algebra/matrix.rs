//! Small dense square matrices over F_p (n <= 4), packed by value so the
//! group enumerators can store hundreds of thousands of them.

use super::arith::inv_mod_prime;

pub const MAX_DIM: usize = 4;

/// Row-major n×n matrix with entries in [0, p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallMat {
    n: u8,
    e: [u32; MAX_DIM * MAX_DIM],
}

impl SmallMat {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "dimension {n} unsupported");
        SmallMat {
            n: n as u8,
            e: [0; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, a: u32) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, a);
        }
        m
    }

    pub fn from_rows(rows: &[&[u32]], p: u32) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    /// Matrix whose entries are the base-p digits of `code`, row-major.
    pub fn decode(n: usize, p: u32, mut code: u64) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n * n {
            m.e[k] = (code % p as u64) as u32;
            code /= p as u64;
        }
        m
    }

    pub fn encode(&self, p: u32) -> u64 {
        let nn = self.dim() * self.dim();
        self.e[..nn]
            .iter()
            .rev()
            .fold(0u64, |acc, &v| acc * p as u64 + v as u64)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.dim() + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let n = self.dim();
        self.e[i * n + j] = v;
    }

    pub fn mul(&self, o: &Self, p: u32) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n);
        let p = p as u64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.get(i, k) as u64 * o.get(k, j) as u64;
                }
                out.set(i, j, (acc % p) as u32);
            }
        }
        out
    }

    pub fn scale(&self, a: u32, p: u32) -> Self {
        let mut out = *self;
        let nn = self.dim() * self.dim();
        for v in out.e[..nn].iter_mut() {
            *v = ((*v as u64 * a as u64) % p as u64) as u32;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.dim();
        let d = self.get(0, 0);
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == if i == j { d } else { 0 }))
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    fn rows_u64(&self) -> Vec<Vec<u64>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) as u64).collect())
            .collect()
    }

    pub fn det(&self, p: u32) -> u32 {
        det_mod(self.rows_u64(), p as u64) as u32
    }

    pub fn inverse(&self, p: u32) -> Option<Self> {
        let n = self.dim();
        let p64 = p as u64;
        let mut a = self.rows_u64();
        let mut inv: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = inv_mod_prime(a[col][col], p64).unwrap();
            for j in 0..n {
                a[col][j] = a[col][j] * s % p64;
                inv[col][j] = inv[col][j] * s % p64;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..n {
                        a[r][j] = (a[r][j] + p64 - f * a[col][j] % p64) % p64;
                        inv[r][j] = (inv[r][j] + p64 - f * inv[col][j] % p64) % p64;
                    }
                }
            }
        }
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, inv[i][j] as u32);
            }
        }
        Some(out)
    }

    /// Characteristic polynomial det(xI - A), monic, lowest coefficient first.
    pub fn charpoly(&self, p: u32) -> Vec<u64> {
        charpoly_mod(self.rows_u64(), p as u64)
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.dim()).map(|i| self.get(i, j)).collect()
    }
}

/// Determinant by Gaussian elimination over F_p.
pub fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] % p != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(col, piv);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = inv_mod_prime(a[col][col], p).unwrap();
        for r in col + 1..n {
            let f = a[r][col] * inv % p;
            if f == 0 {
                continue;
            }
            for j in col..n {
                a[r][j] = (a[r][j] + p - f * a[col][j] % p) % p;
            }
        }
    }
    det
}

/// Characteristic polynomial over F_p by reduction to Hessenberg form.
pub fn charpoly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let tinv = inv_mod_prime(h[m][m - 1], p).unwrap();
        for i in m + 1..n {
            let u = h[i][m - 1] * tinv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + p - u * h[m][j] % p) % p;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[i]) % p;
            }
        }
    }
    // polys[m] is the charpoly of the leading m×m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let d = h[m - 1][m - 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = (cur[k] + p - d * c % p) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[m - i][m - i - 1] % p;
            let coef = t * h[m - i - 1][m - 1] % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - coef * c % p) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}
