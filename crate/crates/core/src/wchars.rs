//! Exact character tables of finite groups by the Burnside-Dixon-Schneider
//! class-matrix method: simultaneous eigenvectors of the class matrices
//! over a prime field, degrees and eigenvalue multiplicities lifted back to
//! characteristic zero, values materialized in the 12th cyclotomic field.

use crate::coxeter::{TypeFamily, WeylGroup};
use crate::cyclo::Cyclo12;
use crate::error::{Error, Result};
use crate::exactalg::BigRat;
use std::collections::HashMap;

/// Group handed to the engine. Element 0 must be the identity and classes
/// must partition `0..order`.
pub struct GroupSpec<'a> {
    pub order: usize,
    pub mul: Box<dyn Fn(usize, usize) -> usize + 'a>,
    pub inv: Box<dyn Fn(usize) -> usize + 'a>,
    pub classes: Vec<Vec<usize>>,
}

/// Unsorted engine output: one row per irreducible, columns following the
/// class order of the input.
pub struct RawCharTable {
    pub degrees: Vec<usize>,
    pub values: Vec<Vec<Cyclo12>>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("primitive root exists")
}

/// Reduced row echelon form in place; returns pivot columns.
fn echelon(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(row, pr);
        let ip = inv_mod(rows[row][col], p);
        for x in rows[row].iter_mut() {
            *x = *x * ip % p;
        }
        for r in 0..rows.len() {
            if r != row && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..cols {
                    rows[r][c] = (rows[r][c] + (p - f) * rows[row][c]) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

/// Basis of the null space of a square matrix.
fn kernel_basis(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut rows: Vec<Vec<u64>> = mat.to_vec();
    let pivots = echelon(&mut rows, p);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut vec = vec![0u64; n];
        vec[free] = 1;
        for c in 0..n {
            if let Some(r) = pivot_set[c] {
                vec[c] = (p - rows[r][free] % p) % p;
            }
        }
        basis.push(vec);
    }
    basis
}

/// Runs the class-matrix algorithm; errors only on internal inconsistency.
pub fn dixon_character_table(g: &GroupSpec) -> Result<RawCharTable> {
    let n = g.order;
    let k = g.classes.len();
    let mut class_of = vec![usize::MAX; n];
    for (c, members) in g.classes.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }
    if class_of.iter().any(|&c| c == usize::MAX) {
        return Err(Error::Invariant("classes do not cover the group".into()));
    }
    let reps: Vec<usize> = g.classes.iter().map(|c| c[0]).collect();
    let id_class = class_of[0];
    if g.classes[id_class].len() != 1 {
        return Err(Error::Invariant("identity class is not a singleton".into()));
    }

    // Exponent of the group; all our groups have exponent dividing 12.
    let order_of = |x: usize| -> usize {
        let mut acc = x;
        let mut o = 1;
        while acc != 0 {
            acc = (g.mul)(acc, x);
            o += 1;
        }
        o
    };
    let mut exponent: usize = 1;
    for &r in &reps {
        let o = order_of(r);
        exponent = exponent * o / gcd(exponent, o);
    }
    if 12 % exponent != 0 {
        return Err(Error::Invariant(format!(
            "group exponent {} does not divide 12",
            exponent
        )));
    }
    let m = exponent as u64;

    // Smallest prime p = 1 mod exponent with p^2 > 4|G|.
    let mut p = m + 1;
    while !(is_prime(p) && p * p > 4 * n as u64) {
        p += m;
    }

    // Class matrices: mat_i[j][l] counts x in C_i with x^{-1} z_l in C_j.
    let mut class_mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0; k]; k]; k];
    for i in 0..k {
        for (l, &z) in reps.iter().enumerate() {
            for &x in &g.classes[i] {
                let j = class_of[(g.mul)((g.inv)(x), z)];
                class_mats[i][j][l] += 1;
            }
        }
    }

    // Split the coordinate space into common eigenspaces.
    let mut spaces: Vec<Vec<Vec<u64>>> = {
        let mut idm = vec![vec![0u64; k]; k];
        for t in 0..k {
            idm[t][t] = 1;
        }
        vec![idm]
    };
    for mat in class_mats.iter() {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            let d = space.len();
            if d == 1 {
                next.push(space);
                continue;
            }
            // Matrix of the restricted action in the echelon basis.
            let mut sp = space.clone();
            let pivots = echelon(&mut sp, p);
            let mut restricted = vec![vec![0u64; d]; d];
            for (t, b) in sp.iter().enumerate() {
                let mut v = vec![0u64; k];
                for (j, row) in mat.iter().enumerate() {
                    let mut acc = 0u64;
                    for l in 0..k {
                        acc = (acc + row[l] % p * b[l]) % p;
                    }
                    v[j] = acc;
                }
                for (s, &pc) in pivots.iter().enumerate() {
                    let c = v[pc];
                    restricted[s][t] = c;
                    if c != 0 {
                        for l in 0..k {
                            v[l] = (v[l] + (p - c) * sp[s][l]) % p;
                        }
                    }
                }
                if v.iter().any(|&x| x != 0) {
                    return Err(Error::Invariant(
                        "class matrix does not preserve a split subspace".into(),
                    ));
                }
            }
            let mut found = 0;
            for lambda in 0..p {
                let mut shifted = restricted.clone();
                for t in 0..d {
                    shifted[t][t] = (shifted[t][t] + p - lambda) % p;
                }
                let ker = kernel_basis(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let mut lifted: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|u| {
                        let mut v = vec![0u64; k];
                        for (s, &c) in u.iter().enumerate() {
                            for l in 0..k {
                                v[l] = (v[l] + c * sp[s][l]) % p;
                            }
                        }
                        v
                    })
                    .collect();
                echelon(&mut lifted, p);
                next.push(lifted);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::Invariant(
                    "class matrix not diagonalizable over the chosen prime".into(),
                ));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Invariant(
            "class matrices failed to split into one-dimensional eigenspaces".into(),
        ));
    }

    // Central characters, degrees, and values mod p.
    let root = primitive_root(p);
    let zeta = pow_mod(root, (p - 1) / m, p);
    let isqrt = {
        let mut s = 0usize;
        while (s + 1) * (s + 1) <= n {
            s += 1;
        }
        s
    };
    let inv_class_class: Vec<usize> = reps.iter().map(|&z| class_of[(g.inv)(z)]).collect();
    let mut degrees = Vec::with_capacity(k);
    let mut values: Vec<Vec<Cyclo12>> = Vec::with_capacity(k);

    // Power maps: class of z_l^t for t < exponent.
    let power_class: Vec<Vec<usize>> = reps
        .iter()
        .map(|&z| {
            let mut acc = 0usize;
            let mut row = Vec::with_capacity(exponent);
            for _ in 0..exponent {
                row.push(class_of[acc]);
                acc = (g.mul)(acc, z);
            }
            row
        })
        .collect();

    for space in &spaces {
        let v = &space[0];
        if v[id_class] == 0 {
            return Err(Error::Invariant("central character vanishes at 1".into()));
        }
        let norm = inv_mod(v[id_class], p);
        let omega: Vec<u64> = v.iter().map(|&x| x * norm % p).collect();

        // 1/deg^2 = (sum_l w_l w_{l*} / |C_l|) / |G| mod p.
        let mut s = 0u64;
        for l in 0..k {
            let t = omega[l] * omega[inv_class_class[l]] % p;
            s = (s + t * inv_mod(g.classes[l].len() as u64 % p, p)) % p;
        }
        let d2 = (n as u64 % p) * inv_mod(s, p) % p;
        let mut deg = None;
        for t in 1..=isqrt as u64 {
            if t * t % p == d2 {
                if deg.is_some() {
                    return Err(Error::Invariant("ambiguous degree lift".into()));
                }
                deg = Some(t);
            }
        }
        let deg = deg.ok_or_else(|| Error::Invariant("no degree lift found".into()))?;

        let chi_p: Vec<u64> = (0..k)
            .map(|l| omega[l] * deg % p * inv_mod(g.classes[l].len() as u64 % p, p) % p)
            .collect();

        // Eigenvalue multiplicities of each representative, then the value.
        let inv_m = inv_mod(m, p);
        let mut row = Vec::with_capacity(k);
        for l in 0..k {
            let mut val = Cyclo12::zero();
            let mut total = 0u64;
            for j in 0..exponent as u64 {
                let mut acc = 0u64;
                for t in 0..exponent as u64 {
                    let z_pow = pow_mod(zeta, (m - j % m) % m * t % m, p);
                    acc = (acc + chi_p[power_class[l][t as usize]] * z_pow) % p;
                }
                let mult = acc * inv_m % p;
                if mult > deg {
                    return Err(Error::Invariant(
                        "eigenvalue multiplicity exceeds the degree".into(),
                    ));
                }
                total += mult;
                if mult > 0 {
                    let r = Cyclo12::root_of_unity(exponent as u32, j as i64)
                        .scale(&crate::exactalg::rat(mult as i64));
                    val = &val + &r;
                }
            }
            if total != deg {
                return Err(Error::Invariant(
                    "eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            row.push(val);
        }
        degrees.push(deg as usize);
        values.push(row);
    }

    // Sanity: degree identity and exact row orthogonality.
    let sum_sq: usize = degrees.iter().map(|d| d * d).sum();
    if sum_sq != n {
        return Err(Error::Invariant("degrees do not satisfy sum of squares".into()));
    }
    for r in 0..k {
        for r2 in 0..k {
            let mut acc = Cyclo12::zero();
            for l in 0..k {
                let t = &values[r][l] * &values[r2][l].conj();
                acc = &acc + &t.scale(&crate::exactalg::rat(g.classes[l].len() as i64));
            }
            let expect = if r == r2 { n as i64 } else { 0 };
            if acc != Cyclo12::from_int(expect) {
                return Err(Error::Invariant("row orthogonality failed".into()));
            }
        }
    }
    Ok(RawCharTable { degrees, values })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Character table of a Weyl group: integer values, deterministic row
/// order, display names, and the distinguished rows.
pub struct CharTable {
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
    /// values[irrep][class], classes in the group's class order.
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<usize>,
    pub trivial: usize,
    pub sign: usize,
    pub reflection: usize,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn irrep_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Pointwise product of two rows: the character of the tensor product.
    pub fn tensor_values(&self, e: usize, e2: usize) -> Vec<i64> {
        self.values[e]
            .iter()
            .zip(&self.values[e2])
            .map(|(a, b)| a * b)
            .collect()
    }

    /// Weighted inner product of two explicit rows.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let total: i64 = self
            .class_sizes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&s, (x, y))| s as i64 * x * y)
            .sum();
        total
    }
}

/// Computes, orders, and names the character table of `w`.
pub fn char_table(w: &WeylGroup) -> Result<CharTable> {
    let spec = GroupSpec {
        order: w.order(),
        mul: Box::new(|a, b| w.mult(a, b)),
        inv: Box::new(|a| w.inverse(a)),
        classes: w.classes.iter().map(|c| c.members.clone()).collect(),
    };
    let raw = dixon_character_table(&spec)?;
    let k = raw.degrees.len();

    let mut values: Vec<Vec<i64>> = Vec::with_capacity(k);
    for row in &raw.values {
        let ints: Result<Vec<i64>> = row
            .iter()
            .map(|v| {
                let r: BigRat = v.as_rational().ok_or_else(|| {
                    Error::Invariant("irrational Weyl character value".into())
                })?;
                if !r.is_integer() {
                    return Err(Error::Invariant("non-integer Weyl character value".into()));
                }
                i64::try_from(r.to_integer())
                    .map_err(|_| Error::Invariant("character value overflow".into()))
            })
            .collect();
        values.push(ints?);
    }

    // Deterministic row order: degree ascending, then the value vector in
    // descending lexicographic order (extends the tie rule on the first
    // simple-reflection class through all classes).
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        raw.degrees[a]
            .cmp(&raw.degrees[b])
            .then_with(|| values[b].cmp(&values[a]))
    });
    let degrees: Vec<usize> = order.iter().map(|&i| raw.degrees[i]).collect();
    let values: Vec<Vec<i64>> = order.iter().map(|&i| values[i].clone()).collect();
    let class_sizes: Vec<usize> = w.classes.iter().map(|c| c.size).collect();

    // Distinguished rows.
    let trivial = values
        .iter()
        .position(|row| row.iter().all(|&v| v == 1))
        .ok_or_else(|| Error::Invariant("trivial character row missing".into()))?;
    if trivial != 0 {
        return Err(Error::Invariant("trivial character is not the first row".into()));
    }
    let simple_classes: Vec<usize> = (0..w.rank)
        .map(|i| w.class_of(w.simple_reflection(i)))
        .collect();
    let sign = values
        .iter()
        .enumerate()
        .position(|(r, row)| {
            degrees[r] == 1 && simple_classes.iter().all(|&c| row[c] == -1)
        })
        .ok_or_else(|| Error::Invariant("sign character row missing".into()))?;
    let refl_traces: Vec<i64> = (0..w.classes.len())
        .map(|c| w.reflection_trace(c))
        .collect();
    let reflection = values
        .iter()
        .position(|row| *row == refl_traces)
        .ok_or_else(|| Error::Invariant("reflection character row missing".into()))?;

    let names = assign_names(w, &degrees, &values, trivial, sign, reflection)?;

    let table = CharTable {
        names,
        degrees,
        values,
        class_sizes,
        trivial,
        sign,
        reflection,
    };

    // Exact orthogonality on the integer table.
    for a in 0..k {
        for b in 0..k {
            let expect = if a == b { w.order() as i64 } else { 0 };
            if table.inner(&table.values[a], &table.values[b]) != expect {
                return Err(Error::Invariant("integer table orthogonality failed".into()));
            }
        }
    }
    Ok(table)
}

fn assign_names(
    w: &WeylGroup,
    degrees: &[usize],
    values: &[Vec<i64>],
    trivial: usize,
    sign: usize,
    reflection: usize,
) -> Result<Vec<String>> {
    let k = degrees.len();
    let symbol_scheme = matches!(
        (w.ctype.family, w.rank),
        (TypeFamily::A, 1) | (TypeFamily::A, 2) | (TypeFamily::B, 2) | (TypeFamily::G, 2)
    );
    let mut names: Vec<Option<String>> = vec![None; k];
    if symbol_scheme {
        names[trivial] = Some("1".into());
        names[sign] = Some("sgn".into());
        if names[reflection].is_none() {
            names[reflection] = Some("rho".into());
        }
        let s1_class = w.class_of(w.simple_reflection(0));
        for (r, row) in values.iter().enumerate() {
            if names[r].is_some() {
                continue;
            }
            if degrees[r] == 1 {
                names[r] = Some(if row[s1_class] == 1 { "eps1" } else { "eps2" }.into());
            } else if degrees[r] == 2 {
                names[r] = Some("rho'".into());
            }
        }
    } else if matches!(w.ctype.family, TypeFamily::A | TypeFamily::B) {
        // Rank 3: identify rows by the explicit seminormal models at q=1.
        let reference = crate::hecke::seminormal_q1_character_values(w)?;
        let lookup: HashMap<Vec<i64>, String> = reference.into_iter().map(|(n, v)| (v, n)).collect();
        if lookup.len() != k {
            return Err(Error::Invariant("seminormal reference rows collide".into()));
        }
        for (r, row) in values.iter().enumerate() {
            names[r] = Some(
                lookup
                    .get(row)
                    .ok_or_else(|| {
                        Error::Invariant("table row matches no seminormal model".into())
                    })?
                    .clone(),
            );
        }
    } else {
        // No naming scheme for this type: synthesize stable names.
        let mut counter: HashMap<usize, usize> = HashMap::new();
        for r in 0..k {
            let c = counter.entry(degrees[r]).or_insert(0);
            names[r] = Some(format!("chi{}_{}", degrees[r], *c));
            *c += 1;
        }
    }
    let names: Vec<String> = names
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invariant("character naming incomplete".into()))?;
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != k {
        return Err(Error::Invariant("duplicate character names".into()));
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CartanType;

    fn table(name: &str) -> (WeylGroup, CharTable) {
        let w = WeylGroup::build(CartanType::parse(name).unwrap()).unwrap();
        let t = char_table(&w).unwrap();
        (w, t)
    }

    #[test]
    fn a1_table() {
        let (_, t) = table("A1");
        assert_eq!(t.names, ["1", "sgn"]);
        assert_eq!(t.values, [[1, 1], [1, -1]]);
        assert_eq!(t.reflection, t.sign);
    }

    #[test]
    fn a2_table() {
        let (_, t) = table("A2");
        assert_eq!(t.names, ["1", "sgn", "rho"]);
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 2]);
        assert_eq!(t.values[t.reflection], [2, 0, -1]);
        assert_eq!(
            t.tensor_values(t.reflection, t.reflection),
            [4, 0, 1]
        );
    }

    #[test]
    fn b2_table() {
        let (w, t) = table("B2");
        assert_eq!(t.names, ["1", "eps1", "eps2", "sgn", "rho"]);
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 1, 1, 2]);
        // eps1 is +1 on the class of the first simple reflection.
        let s1 = w.class_of(w.simple_reflection(0));
        let s2 = w.class_of(w.simple_reflection(1));
        let e1 = t.irrep_index("eps1").unwrap();
        let e2 = t.irrep_index("eps2").unwrap();
        assert_eq!((t.values[e1][s1], t.values[e1][s2]), (1, -1));
        assert_eq!((t.values[e2][s1], t.values[e2][s2]), (-1, 1));
        assert_eq!(t.values[t.reflection], [2, 0, 0, 0, -2]);
    }

    #[test]
    fn g2_table() {
        let (w, t) = table("G2");
        assert_eq!(t.names, ["1", "eps1", "eps2", "sgn", "rho", "rho'"]);
        // Classes are ordered 1, s1, s2, c, c^2, c^3.
        assert_eq!(t.values[t.reflection], [2, 0, 0, 1, -1, -2]);
        let rp = t.irrep_index("rho'").unwrap();
        assert_eq!(t.values[rp], [2, 0, 0, -1, -1, 2]);
        let e1 = t.irrep_index("eps1").unwrap();
        let s1 = w.class_of(w.simple_reflection(0));
        assert_eq!(t.values[e1][s1], 1);
        assert_eq!(t.values[e1], [1, 1, -1, -1, 1, -1]);
    }

    #[test]
    fn a3_table_names_are_partitions() {
        let (_, t) = table("A3");
        let mut names = t.names.clone();
        names.sort();
        assert_eq!(names, ["[1111]", "[211]", "[22]", "[31]", "[4]"]);
        assert_eq!(t.names[t.trivial], "[4]");
        assert_eq!(t.names[t.sign], "[1111]");
        assert_eq!(t.names[t.reflection], "[31]");
        assert_eq!(t.degrees.iter().map(|d| d * d).sum::<usize>(), 24);
    }

    #[test]
    fn b3_table_names_are_bipartitions() {
        let (_, t) = table("B3");
        let mut names = t.names.clone();
        names.sort();
        assert_eq!(
            names,
            ["[111|]", "[11|1]", "[1|11]", "[1|2]", "[21|]", "[2|1]", "[3|]", "[|111]", "[|21]", "[|3]"]
        );
        assert_eq!(t.names[t.trivial], "[3|]");
        assert_eq!(t.names[t.sign], "[|111]");
        assert_eq!(t.names[t.reflection], "[2|1]");
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 1, 1, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn first_row_is_trivial_everywhere() {
        for name in ["A1", "A2", "A3", "B2", "B3", "G2"] {
            let (_, t) = table(name);
            assert_eq!(t.trivial, 0, "{}", name);
            assert!(t.values[0].iter().all(|&v| v == 1));
        }
    }
}
