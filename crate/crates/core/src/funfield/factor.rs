//! Irreducible factorization in `Q[t]`.
//!
//! The pipeline is the classical one: rational content extraction, Yun
//! square-free decomposition, then Zassenhaus on each primitive square-free
//! integer polynomial (Berlekamp factorization modulo a good small prime,
//! multifactor Hensel lifting past the Mignotte bound, subset
//! recombination certified by exact integer division).  Everything is
//! deterministic: primes are tried in a fixed order and subsets are walked
//! lexicographically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;

/// Monic irreducible factors of `f` with multiplicities, sorted canonically.
/// The unit (leading coefficient and content) is dropped.
///
/// Panics on the zero polynomial; returns an empty list for constants.
pub fn factor(f: &Poly) -> Vec<(Poly, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    if f.is_constant() {
        return Vec::new();
    }
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out.sort();
    out
}

/// Whether `f` (degree >= 1) is irreducible over the rationals.
pub fn is_irreducible(f: &Poly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => {
            let fs = factor(f);
            fs.len() == 1 && fs[0].1 == 1 && fs[0].0.degree() == f.degree()
        }
    }
}

/// Yun's algorithm: returns monic square-free parts with multiplicities,
/// `f = unit * prod part_i ^ mult_i`, the parts pairwise coprime.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let f = f.monic();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.is_constant() {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut c = f.div_exact(&g).monic();
    let mut d = &df.div_exact(&g) - &c.derivative();
    let mut i = 1u32;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).monic();
        d = &d.div_exact(&a) - &c.derivative();
        i += 1;
    }
    out
}

/// Factor a monic square-free polynomial over Q into monic irreducibles.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    let deg = f.degree().expect("nonzero");
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![f.monic()];
    }
    let zf = f.primitive_int_coeffs();
    zassenhaus(&zf)
        .into_iter()
        .map(|zg| {
            Poly::new(
                zg.into_iter()
                    .map(BigRational::from_integer)
                    .collect::<Vec<_>>(),
            )
            .monic()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficients ascending, trimmed).
// ---------------------------------------------------------------------------

fn ztrim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zdeg(f: &[BigInt]) -> usize {
    f.len().saturating_sub(1)
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero));
    }
    ztrim(out)
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero));
    }
    ztrim(out)
}

fn zscale(a: &[BigInt], s: &BigInt) -> Vec<BigInt> {
    ztrim(a.iter().map(|c| c * s).collect())
}

/// Symmetric residue of every coefficient modulo `m` (in `(-m/2, m/2]`).
fn ztrunc(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

/// Division `a = q*b + r` where all arithmetic is done modulo `m` and `b`
/// must be invertible-leading (monic in our uses).
fn zdiv_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = zdeg(b);
    assert!(!b.is_empty());
    let lc_inv = mod_inverse(&b[db], m).expect("divisor leading coeff invertible");
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), ztrunc(&rem, m));
    }
    let dq = rem.len() - b.len();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = (&rem[k + db] * &lc_inv).mod_floor(m);
        if !c.is_zero() {
            for j in 0..=db {
                let v = (&rem[k + j] - &c * &b[j]).mod_floor(m);
                rem[k + j] = v;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (ztrunc(&quot, m), ztrunc(&rem, m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Integer content (gcd of coefficients), positive.
fn zcontent(f: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in f {
        g = g.gcd(c);
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn zprimitive(f: &[BigInt]) -> Vec<BigInt> {
    let mut c = zcontent(f);
    if f.last().map_or(false, |lc| lc.is_negative()) {
        c = -c;
    }
    f.iter().map(|x| x / &c).collect()
}

/// Exact division test over Z: does `g` divide `f`?
fn zdivides(g: &[BigInt], f: &[BigInt]) -> bool {
    if g.is_empty() {
        return false;
    }
    let mut rem: Vec<BigInt> = f.to_vec();
    let dg = zdeg(g);
    let lc = &g[dg];
    while rem.len() >= g.len() {
        let k = rem.len() - g.len();
        let (q, r) = rem.last().unwrap().div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        for j in 0..=dg {
            let v = &rem[k + j] - &q * &g[j];
            rem[k + j] = v;
        }
        rem = ztrim(rem);
        if rem.len() <= k && !rem.is_empty() && rem.len() > dg {
            // degree failed to drop; cannot happen with exact arithmetic
            unreachable!();
        }
        if rem.len() < g.len() {
            break;
        }
    }
    rem.is_empty()
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a small prime.
// ---------------------------------------------------------------------------

type GfPoly = Vec<u64>;

fn gf_trim(mut f: GfPoly) -> GfPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn gf_from_z(f: &[BigInt], p: u64) -> GfPoly {
    let pb = BigInt::from(p);
    gf_trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

fn gf_to_z(f: &[u64]) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn gf_mul(a: &[u64], b: &[u64], p: u64) -> GfPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (x as u128 * y as u128 % p as u128) as u64) % p;
        }
    }
    gf_trim(out)
}

fn gf_sub(a: &[u64], b: &[u64], p: u64) -> GfPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out[k] = (x + p - y) % p;
    }
    gf_trim(out)
}

fn mod_pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn gf_scale(a: &[u64], s: u64, p: u64) -> GfPoly {
    gf_trim(a.iter().map(|&c| (c as u128 * s as u128 % p as u128) as u64).collect())
}

fn gf_monic(a: &[u64], p: u64) -> GfPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => gf_scale(a, mod_pow_u64(lc, p - 2, p), p),
    }
}

fn gf_divrem(a: &[u64], b: &[u64], p: u64) -> (GfPoly, GfPoly) {
    let db = b.len() - 1;
    let lc_inv = mod_pow_u64(b[db], p - 2, p);
    let mut rem: Vec<u64> = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), gf_trim(rem));
    }
    let dq = rem.len() - b.len();
    let mut quot = vec![0u64; dq + 1];
    for k in (0..=dq).rev() {
        let c = (rem[k + db] as u128 * lc_inv as u128 % p as u128) as u64;
        if c != 0 {
            for j in 0..=db {
                let sub = (c as u128 * b[j] as u128 % p as u128) as u64;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (gf_trim(quot), gf_trim(rem))
}

fn gf_gcd(a: &[u64], b: &[u64], p: u64) -> GfPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = gf_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    gf_monic(&a, p)
}

/// Extended gcd for monic-normalizable inputs: returns `(s, t)` with
/// `s*a + t*b = 1`; requires `gcd(a, b) = 1`.
fn gf_gcdex(a: &[u64], b: &[u64], p: u64) -> (GfPoly, GfPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (GfPoly, GfPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (GfPoly, GfPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = gf_divrem(&r0, &r1, p);
        let s = gf_sub(&s0, &gf_mul(&q, &s1, p), p);
        let t = gf_sub(&t0, &gf_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "gcdex of non-coprime polynomials");
    let inv = mod_pow_u64(r0[0], p - 2, p);
    (gf_scale(&s0, inv, p), gf_scale(&t0, inv, p))
}

fn gf_derivative(a: &[u64], p: u64) -> GfPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    gf_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (c as u128 * (k as u128 % p as u128) % p as u128) as u64)
            .collect(),
    )
}

/// `x^e mod f` by repeated squaring.
fn gf_pow_x_mod(e: u64, f: &[u64], p: u64) -> GfPoly {
    let mut acc: GfPoly = vec![1];
    let mut base: GfPoly = {
        let x = vec![0, 1];
        gf_divrem(&x, f, p).1
    };
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = gf_divrem(&gf_mul(&acc, &base, p), f, p).1;
        }
        base = gf_divrem(&gf_mul(&base, &base, p), f, p).1;
        e >>= 1;
    }
    acc
}

/// Berlekamp factorization of a monic square-free polynomial mod p.
fn berlekamp(f: &[u64], p: u64) -> Vec<GfPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Frobenius matrix rows: x^(i*p) mod f.
    let xp = gf_pow_x_mod(p, f, p);
    let mut rows: Vec<GfPoly> = Vec::with_capacity(n);
    let mut cur: GfPoly = vec![1];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = gf_divrem(&gf_mul(&cur, &xp, p), f, p).1;
    }
    // M = Q - I (row i holds coeffs of x^(ip) mod f).
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            m[i][j] = c;
        }
        m[i][i] = (m[i][i] + p - 1) % p;
    }
    let kernel = gf_kernel(&mut m, p);
    let r = kernel.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let mut factors: Vec<GfPoly> = vec![f.to_vec()];
    'outer: for v in kernel.iter() {
        let vp = gf_trim(v.clone());
        if vp.len() <= 1 {
            continue; // constant kernel vector splits nothing
        }
        let mut next: Vec<GfPoly> = Vec::new();
        for u in factors.iter() {
            if u.len() - 1 <= 1 {
                next.push(u.clone());
                continue;
            }
            let mut pieces: Vec<GfPoly> = Vec::new();
            let mut rest = u.clone();
            for s in 0..p {
                if rest.len() - 1 == 0 {
                    break;
                }
                let mut shifted = vp.clone();
                shifted[0] = (shifted[0] + p - s) % p;
                let g = gf_gcd(&rest, &gf_trim(shifted), p);
                if g.len() > 1 && g.len() < rest.len() {
                    let (q, rr) = gf_divrem(&rest, &g, p);
                    debug_assert!(rr.is_empty());
                    pieces.push(g);
                    rest = gf_monic(&q, p);
                }
            }
            if rest.len() > 1 {
                pieces.push(rest);
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors.sort();
    factors
}

/// Kernel basis of the matrix (row-major) over `F_p`; transforms in place.
fn gf_kernel(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    // The kernel of the ROW-vector action v -> v*M: we need vectors v with
    // v*M = 0, i.e. kernel of M^T acting on column vectors. Transpose first.
    let n = m.len();
    let mut a = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[j][i] = m[i][j];
        }
    }
    // Column-style Gaussian elimination on a (solving a * v = 0).
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let mut piv = None;
        for r in row..n {
            if a[r][col] != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        a.swap(row, piv);
        let inv = mod_pow_u64(a[row][col], p - 2, p);
        for j in 0..n {
            a[row][j] = (a[row][j] as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for j in 0..n {
                    let sub = (factor as u128 * a[row][j] as u128 % p as u128) as u64;
                    a[r][j] = (a[r][j] + p - sub) % p;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                // a[r][col] is the coefficient of the free variable
                v[c] = (p - a[r][col]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting and Zassenhaus recombination.
// ---------------------------------------------------------------------------

/// One quadratic Hensel step: lifts `f = g*h (mod m)` with Bezout data
/// `s*g + t*h = 1 (mod m)` to the same data modulo `m^2`.
#[allow(clippy::type_complexity)]
fn hensel_step(
    m: &BigInt,
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = ztrunc(&zsub(f, &zmul(g, h)), &m2);
    let (q, r) = zdiv_mod(&zmul(s, &e), h, &m2);
    let g1 = ztrunc(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &m2);
    let h1 = ztrunc(&zadd(h, &r), &m2);
    // Refresh Bezout coefficients.
    let b = ztrunc(
        &zsub(&zadd(&zmul(s, &g1), &zmul(t, &h1)), &[BigInt::one()]),
        &m2,
    );
    let (c, d) = zdiv_mod(&zmul(s, &b), &h1, &m2);
    let s1 = ztrunc(&zsub(s, &d), &m2);
    let t1 = ztrunc(&zsub(t, &zadd(&zmul(t, &b), &zmul(&c, &g1))), &m2);
    (g1, h1, s1, t1)
}

/// Lift the modular factorization `f = lc * prod(factors) (mod p)` to
/// modulo `p^l`; returned factors are monic modulo `p^l` up to the leading
/// coefficient convention of Zassenhaus (first factor carries `lc`).
fn hensel_lift(p: u64, f: &[BigInt], factors: &[GfPoly], l: u32) -> Vec<Vec<BigInt>> {
    let r = factors.len();
    let pl = BigInt::from(p).pow(l);
    if r == 1 {
        let lc = f.last().unwrap();
        let inv = mod_inverse(lc, &pl).expect("lc invertible mod p^l");
        return vec![ztrunc(&zscale(f, &inv), &pl)];
    }
    let k = r / 2;
    let lc = f.last().unwrap();
    let mut gm: GfPoly = gf_from_z(&[lc.clone()], p);
    for fi in &factors[..k] {
        gm = gf_mul(&gm, fi, p);
    }
    let mut hm: GfPoly = vec![1];
    for fi in &factors[k..] {
        hm = gf_mul(&hm, fi, p);
    }
    let (sm, tm) = gf_gcdex(&gm, &hm, p);
    let mut g = gf_to_z(&gm);
    let mut h = gf_to_z(&hm);
    let mut s = gf_to_z(&sm);
    let mut t = gf_to_z(&tm);
    let mut m = BigInt::from(p);
    // Number of quadratic doublings needed to reach p^l.
    let mut reached = 1u32;
    while reached < l {
        let (g1, h1, s1, t1) = hensel_step(&m, f, &g, &h, &s, &t);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
        reached *= 2;
    }
    let mut left = hensel_lift(p, &ztrunc(&g, &pl), &factors[..k], l);
    let right = hensel_lift(p, &ztrunc(&h, &pl), &factors[k..], l);
    left.extend(right);
    left
}

const PRIMES: [u64; 20] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
];

/// Zassenhaus factorization of a primitive square-free integer polynomial
/// of degree >= 2 into primitive irreducible integer factors.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = zdeg(f);
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Pick a prime keeping f square-free with invertible leading coeff.
    let lc = f.last().unwrap().clone();
    let p = PRIMES
        .iter()
        .copied()
        .find(|&p| {
            let pb = BigInt::from(p);
            if (&lc % &pb).is_zero() {
                return false;
            }
            let fp = gf_from_z(f, p);
            let dfp = gf_derivative(&fp, p);
            if dfp.is_empty() {
                return false;
            }
            gf_gcd(&fp, &dfp, p).len() == 1
        })
        .expect("no good prime found (degree too large for the fixed list)");

    let fp = gf_monic(&gf_from_z(f, p), p);
    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // Mignotte-style bound: any factor of f has coefficients bounded by
    // 2^n * (n+1) * max|coeff| * |lc| (a safe overestimate).
    let a_max = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n as u64 + 1) * &a_max * lc.abs();
    let two_b_plus_1 = &bound * 2 + 1;
    let mut l = 1u32;
    let mut plc = BigInt::from(p);
    while plc <= two_b_plus_1 {
        plc *= BigInt::from(p);
        l += 1;
    }
    let pl = BigInt::from(p).pow(l);

    let lifted = hensel_lift(p, f, &modular, l);

    // Subset recombination certified by exact division over Z.
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut cur_f: Vec<BigInt> = f.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= remaining.len() {
        let indices: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&indices, size) {
            let mut g = vec![cur_f.last().unwrap().clone()];
            for &i in &combo {
                g = ztrunc(&zmul(&g, &remaining[i]), &pl);
            }
            let g = zprimitive(&g);
            if zdeg(&g) == 0 {
                continue;
            }
            if zdivides(&g, &cur_f) {
                out.push(g.clone());
                // Divide out and restart at the same subset size.
                cur_f = zdivide_exact(&cur_f, &g);
                let keep: Vec<Vec<BigInt>> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                continue 'sizes;
            }
        }
        size += 1;
    }
    if zdeg(&cur_f) >= 1 {
        out.push(zprimitive(&cur_f));
    }
    out
}

fn zdivide_exact(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    // Exact division in Z[t] (g primitive, divides f).
    let dg = zdeg(g);
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    let lc = &g[dg];
    while rem.len() >= g.len() {
        let k = rem.len() - g.len();
        let (q, r) = rem.last().unwrap().div_rem(lc);
        assert!(r.is_zero(), "inexact integer polynomial division");
        for j in 0..=dg {
            let v = &rem[k + j] - &q * &g[j];
            rem[k + j] = v;
        }
        quot[k] = q;
        rem = ztrim(rem);
    }
    assert!(rem.is_empty());
    ztrim(quot)
}

/// Lexicographic combinations of `size` elements from `items`.
fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    fn refactor_product(factors: &[(Poly, u32)]) -> Poly {
        let mut acc = Poly::one();
        for (f, m) in factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    #[test]
    fn factors_linear_split() {
        // (t-2)^3 (t+1)
        let f = &p(&[-2, 1]).pow(3) * &p(&[1, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(refactor_product(&fs), f.monic());
        assert!(fs.iter().any(|(g, m)| *g == p(&[-2, 1]) && *m == 3));
        assert!(fs.iter().any(|(g, m)| *g == p(&[1, 1]) && *m == 1));
    }

    #[test]
    fn irreducible_quadratic() {
        let f = p(&[2, 0, 1]); // t^2 + 2
        let fs = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0], (f.clone(), 1));
        assert!(is_irreducible(&f));
    }

    #[test]
    fn reducible_quadratic() {
        let f = p(&[-1, 0, 1]); // t^2 - 1
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert!(!is_irreducible(&f));
    }

    #[test]
    fn cyclotomic_like_product() {
        // (t^2+t+1)(t^2+2)(t-1)^2: mixed degrees and multiplicities
        let f = &(&p(&[1, 1, 1]) * &p(&[2, 0, 1])) * &p(&[-1, 1]).pow(2);
        let fs = factor(&f);
        assert_eq!(refactor_product(&fs), f.monic());
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().any(|(g, m)| *g == p(&[1, 1, 1]) && *m == 1));
        assert!(fs.iter().any(|(g, m)| *g == p(&[2, 0, 1]) && *m == 1));
        assert!(fs.iter().any(|(g, m)| *g == p(&[-1, 1]) && *m == 2));
    }

    #[test]
    fn high_degree_irreducible() {
        // t^8 + t + 1 = (t^2+t+1)(t^6 - t^5 + t^3 - t^2 + 1)
        let f = p(&[1, 1, 0, 0, 0, 0, 0, 0, 1]);
        let fs = factor(&f);
        assert_eq!(refactor_product(&fs), f.monic());
        assert_eq!(fs.len(), 2);
        // Swinnerton-Dyer-ish check: t^4 + 1 is irreducible over Q but
        // reducible mod every prime; recombination must handle it.
        let g = p(&[1, 0, 0, 0, 1]);
        assert!(is_irreducible(&g));
    }

    #[test]
    fn rational_coefficients_normalized() {
        // (1/2)(t-1)(t+3) given with rational content
        let f = Poly::new(vec![
            BigRational::new((-3).into(), 2.into()),
            BigRational::from_integer(1.into()),
            BigRational::new(1.into(), 2.into()),
        ]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(refactor_product(&fs), f.monic());
    }

    #[test]
    fn squarefree_parts() {
        let f = &p(&[0, 1]).pow(2) * &p(&[1, 1]).pow(3);
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts, vec![(p(&[0, 1]), 2), (p(&[1, 1]), 3)]);
    }
}
