use crate::error::QuandleError;
use crate::table::QuandleTable;

/// Largest Alexander quandle the constructor will tabulate.
const MAX_ALEXANDER_ORDER: usize = 4096;

/// Finite Alexander quandle `Z_n[t^±]/(h(t))` with `a*b = t·a + (1-t)·b`.
///
/// `h` is given as little-endian coefficients `[c0, c1, ..., 1]` (the
/// leading 1 makes it monic; coefficients may be negative and are reduced
/// mod n). Elements are residue polynomials of degree < deg(h), indexed by
/// the base-n little-endian encoding of their coefficient vector.
pub fn alexander_quandle(n: usize, h: &[i64]) -> Result<QuandleTable, QuandleError> {
    if n == 0 {
        return Err(QuandleError::SizeLimitExceeded("modulus must be >= 1".into()));
    }
    if h.len() < 2 {
        return Err(QuandleError::NotMonic);
    }
    let ni = n as i64;
    let reduce = |c: i64| (((c % ni) + ni) % ni) as usize;
    if reduce(*h.last().unwrap()) != 1 {
        return Err(QuandleError::NotMonic);
    }
    let deg = h.len() - 1;
    let hc: Vec<usize> = h[..deg].iter().map(|&c| reduce(c)).collect();
    let c0 = hc[0];
    if gcd(c0, n) != 1 {
        return Err(QuandleError::NonUnitConstantTerm { c0, n });
    }
    let order = n
        .checked_pow(deg as u32)
        .filter(|&o| o <= MAX_ALEXANDER_ORDER)
        .ok_or_else(|| {
            QuandleError::SizeLimitExceeded(format!("n^deg(h) exceeds {MAX_ALEXANDER_ORDER}"))
        })?;

    // t·v: shift coefficients up one degree, then reduce by h (monic).
    let tmul = |v: &[usize]| -> Vec<usize> {
        let top = v[deg - 1];
        let mut out = vec![0usize; deg];
        for i in 0..deg {
            let shifted = if i == 0 { 0 } else { v[i - 1] };
            out[i] = (shifted + (n - (top * hc[i]) % n)) % n;
        }
        out
    };
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0usize; deg];
        for slot in v.iter_mut() {
            *slot = idx % n;
            idx /= n;
        }
        v
    };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * n + c) };

    let mut table = vec![vec![0usize; order]; order];
    for a in 0..order {
        let va = decode(a);
        let ta = tmul(&va);
        for b in 0..order {
            let vb = decode(b);
            let tb = tmul(&vb);
            // t·a + b - t·b, componentwise mod n.
            let out: Vec<usize> = (0..deg)
                .map(|i| (ta[i] + vb[i] + (n - tb[i])) % n)
                .collect();
            table[a][b] = encode(&out);
        }
    }
    QuandleTable::build(order, table)
}

/// Dihedral quandle: `x*y = 2y - x mod n`. Equals the Alexander quandle
/// with t = -1.
pub fn dihedral_quandle(n: usize) -> Result<QuandleTable, QuandleError> {
    if n == 0 {
        return Err(QuandleError::SizeLimitExceeded("order must be >= 1".into()));
    }
    let table = (0..n)
        .map(|x| (0..n).map(|y| (2 * y + (n - x % n)) % n).collect())
        .collect();
    QuandleTable::build(n, table)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
