//! Exact matrices, Smith normal form and p-adic elementary divisors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{padic_val, rat_to_str, PadicVal, Rat};
use crate::{Error, Result};

/// Rectangular matrix with exact rational entries.
#[derive(Clone, PartialEq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::argument("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::argument(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&x| Rat::from_integer(BigInt::from(x)))
            })
            .collect();
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.denom().is_one())
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| rat_to_str(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Elementary divisors `e_1 | e_2 | ... | e_r` of an integer matrix,
/// returned nonnegative with the sign absorbed; `r` is the rank.
///
/// Classical Smith reduction: pick the smallest nonzero pivot, clear its row
/// and column with euclidean steps, then repair the divisibility chain.
pub fn smith_normal_form(m: &IntMatrix) -> Result<Vec<BigUint>> {
    if !m.is_integral() {
        return Err(Error::argument("smith_normal_form expects integer entries"));
    }
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).numer().clone()).collect())
        .collect();

    let mut divisors: Vec<BigInt> = Vec::new();
    let n = rows.min(cols);
    for k in 0..n {
        // Pivot: smallest nonzero |entry| in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !a[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }

        loop {
            let mut clean = true;
            // Clear column k by row reduction.
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][k], &a[k][k]);
                for j in k..cols {
                    let v = &a[i][j] - &q * &a[k][j];
                    a[i][j] = v;
                }
                if !a[i][k].is_zero() {
                    // Remainder smaller than the pivot: swap up and retry.
                    a.swap(k, i);
                    clean = false;
                }
            }
            // Clear row k by column reduction.
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[k][j], &a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let v = &row[j] - &q * &row[k];
                    row[j] = v;
                }
                if !a[k][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // Divisibility repair: fold any entry the pivot misses into column k.
        loop {
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                None => break,
                Some(i) => {
                    for j in k..cols {
                        let v = &a[k][j] + &a[i][j];
                        a[k][j] = v;
                    }
                    // Re-clear the polluted row/column.
                    loop {
                        let mut clean = true;
                        for j in k + 1..cols {
                            if a[k][j].is_zero() {
                                continue;
                            }
                            let q = div_nearest(&a[k][j], &a[k][k]);
                            for row in a.iter_mut().skip(k) {
                                let v = &row[j] - &q * &row[k];
                                row[j] = v;
                            }
                            if !a[k][j].is_zero() {
                                for row in a.iter_mut() {
                                    row.swap(k, j);
                                }
                                clean = false;
                            }
                        }
                        for r in k + 1..rows {
                            if a[r][k].is_zero() {
                                continue;
                            }
                            let q = div_nearest(&a[r][k], &a[k][k]);
                            for j in k..cols {
                                let v = &a[r][j] - &q * &a[k][j];
                                a[r][j] = v;
                            }
                            if !a[r][k].is_zero() {
                                a.swap(k, r);
                                clean = false;
                            }
                        }
                        if clean {
                            break;
                        }
                    }
                }
            }
        }
        divisors.push(a[k][k].abs());
    }
    Ok(divisors.into_iter().map(|d| d.magnitude().clone()).collect())
}

/// Division rounded to nearest, which keeps euclidean remainders at most
/// half the pivot.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Exponents `a_1 <= a_2 <= ... <= a_r` of the p-adic elementary divisors
/// `p^(a_i)` of a rational matrix over the localisation at `p`, by the minor
/// formula: the partial sum `a_1 + ... + a_k` equals the minimum p-valuation
/// over all k x k minors.
pub fn padic_elementary_divisors(m: &IntMatrix, p: u64) -> Result<Vec<i64>> {
    let n = m.rows.min(m.cols);
    let mut partial = vec![0i64; n + 1];
    let mut rank = 0usize;
    for k in 1..=n {
        match min_minor_valuation(m, k, p)? {
            Some(v) => {
                partial[k] = v;
                rank = k;
            }
            None => break,
        }
    }
    Ok((1..=rank).map(|k| partial[k] - partial[k - 1]).collect())
}

fn min_minor_valuation(m: &IntMatrix, k: usize, p: u64) -> Result<Option<i64>> {
    let row_sets = combinations(m.rows, k);
    let col_sets = combinations(m.cols, k);
    let mut best: Option<i64> = None;
    for rs in &row_sets {
        for cs in &col_sets {
            let det = minor_det(m, rs, cs);
            if let PadicVal::Finite(v) = padic_val(&det, p)? {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    Ok(best)
}

fn minor_det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> Rat {
    let k = rows.len();
    let mut a: Vec<Vec<Rat>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
        .collect();
    // Fraction-free-ish gaussian elimination over Q is fine at this size.
    let mut det = Rat::one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pivot_row != col {
            a.swap(col, pivot_row);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..k {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..k {
                let v = &a[r][c] - &(&factor * &a[col][c]);
                a[r][c] = v;
            }
        }
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    /// Independent oracle: gcd of all k x k minors, for integral matrices.
    fn minor_gcd_oracle(m: &IntMatrix, k: usize) -> BigUint {
        let mut g = BigUint::zero();
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let d = minor_det(m, &rs, &cs);
                g = g.gcd(d.numer().magnitude());
            }
        }
        g
    }

    #[test]
    fn snf_examples() {
        let id = IntMatrix::from_i64(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(smith_normal_form(&id).unwrap(), vec![1u8.into(), 1u8.into()]);

        let m = IntMatrix::from_i64(&[vec![2, 4], vec![6, 8]]);
        // gcd of entries 2, |det| = 8 => divisors (2, 4).
        assert_eq!(smith_normal_form(&m).unwrap(), vec![2u8.into(), 4u8.into()]);

        let z = IntMatrix::from_i64(&[vec![0, 0], vec![0, 0]]);
        assert!(smith_normal_form(&z).unwrap().is_empty());

        let frac = IntMatrix::new(1, 1, vec![rat(1, 2)]).unwrap();
        assert!(smith_normal_form(&frac).is_err());
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMatrix::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        let d = smith_normal_form(&m).unwrap();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{:?} not a chain", d);
        }
    }

    #[test]
    fn padic_divisor_examples() {
        let m = IntMatrix::new(2, 2, vec![rat(1, 3), rat(0, 1), rat(0, 1), rat(1, 9)]).unwrap();
        assert_eq!(padic_elementary_divisors(&m, 3).unwrap(), vec![-2, -1]);

        let m = IntMatrix::from_i64(&[vec![3, 0], vec![0, 9]]);
        assert_eq!(padic_elementary_divisors(&m, 3).unwrap(), vec![1, 2]);

        let m = IntMatrix::from_i64(&[vec![0, 0], vec![0, 0]]);
        assert!(padic_elementary_divisors(&m, 3).unwrap().is_empty());
    }

    proptest! {
        /// Product of the first k elementary divisors equals the gcd of all
        /// k x k minors.
        #[test]
        fn snf_matches_minor_gcd(
            entries in proptest::collection::vec(-30i64..30, 9),
            rows in 2usize..=3,
        ) {
            let cols = if rows == 2 { 3 } else { 3 };
            let take = rows * cols;
            let data: Vec<Vec<i64>> = entries[..take]
                .chunks(cols)
                .map(|c| c.to_vec())
                .collect();
            let m = IntMatrix::from_i64(&data);
            let divisors = smith_normal_form(&m).unwrap();
            let mut product = BigUint::one();
            for (k, d) in divisors.iter().enumerate() {
                product *= d;
                prop_assert_eq!(&product, &minor_gcd_oracle(&m, k + 1));
            }
            // Ranks agree too: the next minor gcd is zero.
            if divisors.len() < rows.min(cols) {
                prop_assert_eq!(minor_gcd_oracle(&m, divisors.len() + 1), BigUint::zero());
            }
        }

        /// p-adic divisor exponents of an integral matrix agree with the
        /// nonarchimedean content of the integer SNF.
        #[test]
        fn padic_divisors_match_snf(
            entries in proptest::collection::vec(-20i64..20, 4),
            p in prop_oneof![Just(2u64), Just(3), Just(5)],
        ) {
            let data = vec![entries[..2].to_vec(), entries[2..].to_vec()];
            let m = IntMatrix::from_i64(&data);
            let snf = smith_normal_form(&m).unwrap();
            let padic = padic_elementary_divisors(&m, p).unwrap();
            prop_assert_eq!(snf.len(), padic.len());
            for (d, a) in snf.iter().zip(padic.iter()) {
                let mut v = 0i64;
                let mut d = d.clone();
                let pb = BigUint::from(p);
                while !d.is_zero() && (&d % &pb).is_zero() {
                    v += 1;
                    d /= &pb;
                }
                prop_assert_eq!(v, *a);
            }
        }
    }
}
